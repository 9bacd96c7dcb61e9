use std::fmt;

use serde_json::{json, Value};

use crate::Format;

pub const SCHEMA: &str = "gentle/1";

/// Exit status classes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    /// A well-posed question answered in the negative.
    Negative,
    /// Malformed input or arguments.
    Usage,
    /// A search bound ran out or a decision was left open.
    Undecided,
}

impl Status {
    pub fn code(self) -> u8 {
        match self {
            Status::Ok => 0,
            Status::Negative => 1,
            Status::Usage => 2,
            Status::Undecided => 3,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::Negative => "negative",
            Status::Usage => "usage",
            Status::Undecided => "undecided",
        }
    }
}

/// An error that carries its exit status.
#[derive(Debug)]
pub struct Fail {
    pub status: Status,
    pub msg: String,
}

impl fmt::Display for Fail {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.msg)
    }
}

impl std::error::Error for Fail {}

pub fn fail(status: Status, msg: impl Into<String>) -> anyhow::Error {
    Fail { status, msg: msg.into() }.into()
}

pub struct Report {
    pub verb: &'static str,
    pub status: Status,
    pub text: String,
    pub json: Value,
}

impl Report {
    pub fn new(verb: &'static str, status: Status, text: String, json: Value) -> Report {
        Report { verb, status, text, json }
    }

    pub fn print(&self, format: Format) {
        match format {
            Format::Text => {
                print!("{}", self.text);
                if !self.text.ends_with('\n') {
                    println!();
                }
            }
            Format::Json => {
                let v = json!({
                    "schema": SCHEMA,
                    "verb": self.verb,
                    "status": self.status.name(),
                    "result": self.json,
                });
                println!("{}", serde_json::to_string_pretty(&v).expect("json values serialize"));
            }
        }
    }
}

pub fn error_json(status: Status, msg: &str) -> String {
    let v = json!({ "schema": SCHEMA, "status": status.name(), "error": msg });
    serde_json::to_string_pretty(&v).expect("json values serialize")
}
