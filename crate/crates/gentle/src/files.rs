//! Line formats for string lists (`.str`) and collections (`.coll`).
//!
//! One literal per line, `#` starts a comment, blank lines are ignored. A
//! collection may name its basepoint with a `basepoint: P` line, where `P`
//! is a marked point (thread) name.

use crate::quiver::GentleAlgebra;
use crate::strings::{parse_word, GradedString, Word, WordError};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {msg}")]
pub struct FileError {
    pub line: usize,
    pub msg: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WordList {
    pub words: Vec<Word>,
    pub basepoint: Option<usize>,
}

impl WordList {
    pub fn strings(&self) -> Option<Vec<GradedString>> {
        self.words.iter().map(|w| w.as_string().cloned()).collect()
    }

    pub fn to_text(&self, alg: &GentleAlgebra) -> String {
        let mut out = String::new();
        if let Some(p) = self.basepoint {
            out.push_str(&format!("basepoint: {}\n", alg.threads()[p].name));
        }
        for w in &self.words {
            out.push_str(&w.literal(alg));
            out.push('\n');
        }
        out
    }
}

pub fn marked_point(alg: &GentleAlgebra, name: &str) -> Option<usize> {
    alg.threads().iter().position(|t| t.name == name)
}

pub fn parse_word_list(alg: &GentleAlgebra, text: &str) -> Result<WordList, FileError> {
    let mut words = Vec::new();
    let mut basepoint = None;
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("basepoint:") {
            let name = rest.trim();
            let p = marked_point(alg, name)
                .ok_or_else(|| FileError { line: i + 1, msg: format!("unknown marked point `{name}`") })?;
            basepoint = Some(p);
            continue;
        }
        let w = parse_word(alg, line).map_err(|e: WordError| FileError { line: i + 1, msg: e.to_string() })?;
        words.push(w);
    }
    Ok(WordList { words, basepoint })
}

pub fn collection_text(alg: &GentleAlgebra, arcs: &[GradedString], basepoint: Option<usize>) -> String {
    WordList { words: arcs.iter().cloned().map(Word::String).collect(), basepoint }.to_text(alg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::parse_algebra;

    fn exm1() -> GentleAlgebra {
        parse_algebra(include_str!("../data/exm1.alg")).unwrap()
    }

    #[test]
    fn comments_blanks_and_basepoint() {
        let alg = exm1();
        let list = parse_word_list(&alg, "# two arcs\n\ne@2   # A\nbasepoint: a\nd c^-\n").unwrap();
        assert_eq!(list.words.len(), 2);
        assert_eq!(list.basepoint, marked_point(&alg, "a"));
        assert_eq!(list.to_text(&alg), "basepoint: a\ne@2\nd c^-\n");
    }

    #[test]
    fn bands_are_words_but_not_strings() {
        let alg = exm1();
        let list = parse_word_list(&alg, "e@2\n[a b^- c d^-]\n").unwrap();
        assert_eq!(list.words.len(), 2);
        assert!(list.strings().is_none());
    }

    #[test]
    fn errors_carry_line_numbers() {
        let alg = exm1();
        assert_eq!(parse_word_list(&alg, "e@2\n\nzz\n").unwrap_err().line, 3);
        assert_eq!(parse_word_list(&alg, "basepoint: nowhere\n").unwrap_err().line, 1);
    }

    #[test]
    fn collection_text_round_trips() {
        let alg = exm1();
        let list = parse_word_list(&alg, include_str!("../data/exm1-CD.coll")).unwrap();
        let arcs = list.strings().unwrap();
        let text = collection_text(&alg, &arcs, marked_point(&alg, "c"));
        let back = parse_word_list(&alg, &text).unwrap();
        assert_eq!(back.strings().unwrap(), arcs);
        assert_eq!(back.basepoint, marked_point(&alg, "c"));
    }
}
