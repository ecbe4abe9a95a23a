//! Command-line front end: the `sjf` subcommands, the expansion file
//! format, the group self-check suites and a brute-force coset oracle.

pub mod commands;
pub mod error;
pub mod format;
pub mod numfmt;
pub mod oracle;
pub mod parse;
pub mod selfcheck;

pub use commands::{main_with_args, run, Cli, Outcome};
pub use error::{CliError, EXIT_ASSERT, EXIT_OK, EXIT_USAGE};
pub use format::{read_expansion, write_expansion, ExpansionFileV1};
