//! Command-line front end for the `liebex` library: check structure files
//! against their laws, assemble extensions, recover extending data from
//! complemented sub-bialgebras, and classify codimension-one extensions.
//!
//! Exit codes: `0` on success, `1` when well-formed input fails a
//! mathematical property (an invalid structure, a rejected sub-bialgebra,
//! inequivalent flag data, an inadmissible sample), `2` on malformed input.

pub mod commands;
pub mod corpus;
pub mod files;

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::de::DeserializeOwned;

use liebex::liecore::LieBialgebra;

use files::{bialgebra_from_file, BaseRef};

/// A command failure, split by how the caller should exit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    /// Well-formed input that fails the requested mathematical property.
    /// The message is the command's rendered verdict; exit code 1.
    Domain(String),
    /// Malformed input: unreadable files, bad JSON, bad indices or scalars.
    /// Exit code 2.
    Shape(String),
}

/// Exact computations with Lie bialgebra extensions.
#[derive(Parser)]
#[command(name = "liebex", version, about)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Check a structure or datum file against its defining laws.
    Check {
        /// Path to a JSON file, or the name of a bundled example.
        input: String,
        /// What the file claims to describe.
        #[arg(value_enum)]
        kind: CheckKind,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Assemble a structure from an extending-datum file.
    #[command(subcommand)]
    Build(BuildCmd),
    /// Recover the extending datum of a complemented sub-bialgebra.
    Extract {
        /// Path to a bialgebra JSON file, or the name of a bundled example.
        input: String,
        /// 1-based basis indices spanning the candidate sub-bialgebra.
        #[arg(long, required = true, value_delimiter = ',')]
        sub: Vec<usize>,
        /// Write the datum to this path instead of printing it.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Codimension-one extension tools.
    #[command(subcommand)]
    Flag(FlagCmd),
    /// Bundled example files.
    #[command(subcommand)]
    Corpus(CorpusCmd),
}

/// What a checked file claims to describe.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CheckKind {
    /// A Lie algebra (the bracket table of a bialgebra file).
    Algebra,
    /// A Lie coalgebra (the cobracket table of a bialgebra file).
    Coalgebra,
    /// A full Lie bialgebra.
    Bialgebra,
    /// The bracket side of an extending-datum file.
    AlgDatum,
    /// The cobracket side of an extending-datum file.
    CoalgDatum,
    /// A full bi-extending datum file.
    BiDatum,
    /// A codimension-one (flag) datum file.
    Flag,
}

/// Output format of report-producing commands.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// Human-readable text.
    #[default]
    Text,
    /// A single JSON document.
    Machine,
}

/// Shared arguments of the `build` subcommands.
#[derive(Args)]
pub struct BuildArgs {
    /// Path to an extending-datum JSON file.
    pub datum: PathBuf,
    /// Write the result to this path instead of printing it.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Subcommand)]
pub enum BuildCmd {
    /// The unified product: the bracket on `g ⊕ V` (cobracket left zero).
    Product(BuildArgs),
    /// The unified co-product: the cobracket on `g ⊕ V` (bracket left zero).
    Coproduct(BuildArgs),
    /// The full unified bi-product bialgebra on `g ⊕ V`.
    Biproduct(BuildArgs),
    /// The crossed bi-product; the datum must have no `lact` table.
    Crossed(BuildArgs),
    /// The bicrossed sum; only `ract` and `delta_e` tables are allowed.
    Bicrossed(BuildArgs),
    /// The double cross sum; only `lact` and `ract` tables are allowed.
    Doublecross(BuildArgs),
}

#[derive(Subcommand)]
pub enum FlagCmd {
    /// Solve for all completions `(D, B)` of a fixed pair `(alpha, A)`.
    Solve {
        /// Base bialgebra: a JSON file path or a bundled example name.
        base: String,
        /// The vector `A`: comma-separated coordinates, or `0` for zero.
        #[arg(long = "A", default_value = "0")]
        a: String,
        /// The functional `alpha`: comma-separated coordinates, or `0`.
        /// Omitted: the canonical functional compatible with `A` is used.
        #[arg(long)]
        alpha: Option<String>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Decide whether two flag data are equivalent; print a witness.
    Equiv {
        /// First flag file (path or bundled example name).
        first: String,
        /// Second flag file (path or bundled example name).
        second: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Classify codimension-one extensions at sample values of `A`.
    Classify {
        /// Base bialgebra: a JSON file path or a bundled example name.
        base: String,
        /// Comma-separated samples. A sample is either a scalar `c`,
        /// meaning `c` times the coclosed basis direction (this requires a
        /// one-dimensional coclosed space), or `:`-joined coordinates of a
        /// full vector. Default: the zero vector.
        #[arg(long)]
        samples: Option<String>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

#[derive(Subcommand)]
pub enum CorpusCmd {
    /// List the bundled examples.
    List,
    /// Print a bundled example file verbatim.
    Show {
        /// Name of the example, as shown by `corpus list`.
        name: String,
    },
}

/// Run a parsed command line; the `Ok` string is the full stdout output.
pub fn run(cli: Cli) -> Result<String, CliError> {
    match cli.command {
        Command::Check {
            input,
            kind,
            format,
        } => commands::check(&input, kind, format),
        Command::Build(cmd) => commands::build(&cmd),
        Command::Extract { input, sub, out } => commands::extract(&input, &sub, out.as_deref()),
        Command::Flag(cmd) => match cmd {
            FlagCmd::Solve {
                base,
                a,
                alpha,
                format,
            } => commands::flag_solve(&base, &a, alpha.as_deref(), format),
            FlagCmd::Equiv {
                first,
                second,
                format,
            } => commands::flag_equiv(&first, &second, format),
            FlagCmd::Classify {
                base,
                samples,
                format,
            } => commands::flag_classify(&base, samples.as_deref(), format),
        },
        Command::Corpus(cmd) => match cmd {
            CorpusCmd::List => Ok(commands::corpus_list()),
            CorpusCmd::Show { name } => commands::corpus_show(&name),
        },
    }
}

/// Read a file into a string, mapping IO failures to shape errors.
pub fn read_text(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path)
        .map_err(|e| CliError::Shape(format!("cannot read {}: {e}", path.display())))
}

/// Parse a JSON document, mapping failures to shape errors.
pub fn parse_json<T: DeserializeOwned>(text: &str, what: &str) -> Result<T, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::Shape(format!("cannot parse {what}: {e}")))
}

/// Fetch the text behind an input argument: an existing file path wins,
/// otherwise the argument is treated as a bundled example name.
pub fn load_text_arg(arg: &str) -> Result<String, CliError> {
    let path = Path::new(arg);
    if path.is_file() {
        return read_text(path);
    }
    match corpus::find(arg) {
        Some(entry) => Ok(entry.text.to_string()),
        None => Err(CliError::Shape(format!(
            "`{arg}` is neither a readable file nor a bundled example name"
        ))),
    }
}

/// Resolve the `base` field of a datum or flag file.
pub fn resolve_base(base: &BaseRef) -> Result<LieBialgebra, CliError> {
    match base {
        BaseRef::Name(name) => corpus::bialgebra(name),
        BaseRef::Inline(file) => bialgebra_from_file(file),
    }
}
