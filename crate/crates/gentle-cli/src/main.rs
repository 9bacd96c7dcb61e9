//! `gentle`: command-line access to strings, arcs and thick subcategories
//! of derived categories of gentle algebras.

mod commands;
mod render;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use report::{Fail, Status};

#[derive(Parser)]
#[command(name = "gentle", version, about = "Strings, arcs and thick subcategories over gentle algebras")]
pub struct Cli {
    /// Output encoding.
    #[arg(long, global = true, value_enum, default_value = "text")]
    pub format: Format,
    /// Order of the prime field.
    #[arg(long, global = true, env = "GENTLE_FIELD_ORDER", default_value_t = 2)]
    pub field: u32,
    /// Letter bound for enumeration and for intermediate strings of searches.
    #[arg(long, global = true)]
    pub max_letters: Option<usize>,
    /// Depth bound for searches, rounds of reductions and cone closures.
    #[arg(long, global = true)]
    pub max_depth: Option<usize>,
    #[command(subcommand)]
    pub verb: Verb,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Args, Clone)]
pub struct AlgArg {
    /// Algebra file (`.alg` text or its JSON form).
    pub alg: PathBuf,
}

#[derive(Args, Clone)]
pub struct CollArg {
    /// Collection file (`.coll`), one string literal per line.
    #[arg(long, short = 'c')]
    pub collection: PathBuf,
    /// Basepoint marked point; overrides a `basepoint:` line in the file.
    #[arg(long)]
    pub basepoint: Option<String>,
}

#[derive(Subcommand)]
pub enum Verb {
    /// Check the gentle conditions and homological smoothness.
    Validate(AlgArg),
    /// List permitted paths, optionally from one vertex to another.
    Paths {
        #[command(flatten)]
        alg: AlgArg,
        #[arg(long)]
        from: Option<String>,
        #[arg(long)]
        to: Option<String>,
    },
    /// Enumerate string classes (a `.str` list).
    Strings {
        #[command(flatten)]
        alg: AlgArg,
        /// Annotate each string with its arc type.
        #[arg(long)]
        classify: bool,
    },
    /// Enumerate band classes with scalar 1 and dimension 1.
    Bands(AlgArg),
    /// Hom table `dim Hom(A, B[k])` of two strings or bands.
    Hom {
        #[command(flatten)]
        alg: AlgArg,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
    },
    /// Mapping cone of a basis morphism `A -> B[k]` and its decomposition.
    Cone {
        #[command(flatten)]
        alg: AlgArg,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        #[arg(long, allow_hyphen_values = true)]
        shift: i32,
        /// Basis element to take the cone of.
        #[arg(long, default_value_t = 0)]
        index: usize,
    },
    /// Arc type, self-hom and self-crossings of a string.
    Classify {
        #[command(flatten)]
        alg: AlgArg,
        word: String,
    },
    /// Certified concatenations of two strings at every pair of ends.
    Glue {
        #[command(flatten)]
        alg: AlgArg,
        first: String,
        second: String,
    },
    /// Replace generators by an arc-collection generating the same thick subcategory.
    Reduce {
        #[command(flatten)]
        alg: AlgArg,
        /// Generators file (`.str` or `.coll`).
        #[arg(long, short = 'c')]
        collection: PathBuf,
    },
    /// Rewrite a connected arc-collection into one pointed at a marked point.
    Pointed {
        #[command(flatten)]
        alg: AlgArg,
        #[command(flatten)]
        coll: CollArg,
    },
    /// Half-edge order, regions, τ-orbits and ψ-paths of a pointed collection.
    Regions {
        #[command(flatten)]
        alg: AlgArg,
        #[command(flatten)]
        coll: CollArg,
    },
    /// Decide whether a string lies in the thick subcategory of a collection.
    Member {
        #[command(flatten)]
        alg: AlgArg,
        #[arg(long)]
        target: String,
        #[arg(long, short = 'c')]
        collection: PathBuf,
        /// Write the certificate (`.cert`) to this file.
        #[arg(long)]
        cert: Option<PathBuf>,
    },
    /// Decide `lower <=gen upper` for two collections.
    Leq {
        #[command(flatten)]
        alg: AlgArg,
        lower: PathBuf,
        upper: PathBuf,
    },
    /// Decide whether two collections generate the same thick subcategory.
    Equiv {
        #[command(flatten)]
        alg: AlgArg,
        first: PathBuf,
        second: PathBuf,
    },
    /// Replace band generators by strings.
    EliminateBands {
        #[command(flatten)]
        alg: AlgArg,
        /// Generators file; bands are written `[letters]`.
        #[arg(long, short = 'g')]
        generators: PathBuf,
    },
    /// Poset of thick subcategories of connected arc-collections (`.poset`).
    Poset {
        #[command(flatten)]
        alg: AlgArg,
        /// Largest collection size considered.
        #[arg(long, default_value_t = 4)]
        max_size: usize,
    },
    /// Schematic SVG diagrams.
    Render {
        #[command(subcommand)]
        what: RenderWhat,
        /// Output file; standard output when absent.
        #[arg(long, short = 'o', global = true)]
        output: Option<PathBuf>,
        /// Leave out the generation timestamp.
        #[arg(long, global = true)]
        reproducible: bool,
    },
}

#[derive(Subcommand, Clone)]
pub enum RenderWhat {
    /// Star diagram of a pointed collection around its basepoint.
    Star {
        #[command(flatten)]
        alg: AlgArg,
        #[command(flatten)]
        coll: CollArg,
    },
    /// The unfolded complex of a string or band.
    Complex {
        #[command(flatten)]
        alg: AlgArg,
        word: String,
    },
    /// Hasse diagram of the poset of thick subcategories.
    Hasse {
        #[command(flatten)]
        alg: AlgArg,
        #[arg(long, default_value_t = 4)]
        max_size: usize,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(err) => {
            let code = if err.use_stderr() { Status::Usage.code() } else { 0 };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    match commands::run(&cli) {
        Ok(rep) => {
            rep.print(cli.format);
            ExitCode::from(rep.status.code())
        }
        Err(err) => {
            let fail = err.downcast_ref::<Fail>().map(|f| f.status).unwrap_or(Status::Usage);
            if cli.format == Format::Json {
                println!("{}", report::error_json(fail, &format!("{err:#}")));
            } else {
                eprintln!("error: {err:#}");
            }
            ExitCode::from(fail.code())
        }
    }
}
