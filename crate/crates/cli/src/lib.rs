//! The `frobring` command-line workbench.

pub mod commands;
pub mod error;
pub mod parse;
pub mod report;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::commands::{Caps, Format};
use crate::error::CliResult;

#[derive(Debug, Parser)]
#[command(
    name = "frobring",
    version,
    about = "Finite ring classification and MacWilliams checks"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct CapArgs {
    /// Largest ring order that will be built.
    #[arg(long, env = "FROBRING_ORDER_CAP", default_value_t = 4096)]
    pub order_cap: usize,
    /// Largest code (number of elements) examined by MacWilliams checks.
    #[arg(long = "max-code-size", alias = "code-size-cap", default_value_t = 256)]
    pub code_size_cap: usize,
    /// Total candidate homomorphism images per run.
    #[arg(long, default_value_t = 1_000_000)]
    pub hom_cap: u64,
}

impl CapArgs {
    fn caps(&self) -> Caps {
        Caps {
            order_cap: self.order_cap,
            code_size_cap: self.code_size_cap,
            hom_cap: self.hom_cap,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify a ring and print its certificate.
    Classify {
        /// Ring file, or `-` for standard input.
        ring: PathBuf,
        /// Code lengths at which MacWilliams is checked.
        #[arg(long = "length", value_delimiter = ',', default_value = "1")]
        lengths: Vec<usize>,
        #[command(flatten)]
        caps: CapArgs,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Check every weight-preserving map out of every small code of one length.
    Verify {
        /// Ring file, or `-` for standard input.
        ring: PathBuf,
        /// Code length n.
        #[arg(long, default_value_t = 1)]
        length: usize,
        /// Run the exhaustive (σ, u) oracle on every map.
        #[arg(long)]
        cross_check: bool,
        #[command(flatten)]
        caps: CapArgs,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Find the least non-extendable weight-preserving map up to a length.
    Search {
        /// Ring file, or `-` for standard input.
        ring: PathBuf,
        /// Lengths 1..=n are tried in order.
        #[arg(long, default_value_t = 2)]
        max_length: usize,
        #[command(flatten)]
        caps: CapArgs,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Classify every `*.ring` file in a directory and write an index.
    Catalog {
        /// Directory holding `*.ring` files.
        dir: PathBuf,
        /// Output directory; defaults to `<dir>/certificates`.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Code lengths at which MacWilliams is checked.
        #[arg(long = "length", value_delimiter = ',', default_value = "1")]
        lengths: Vec<usize>,
        #[command(flatten)]
        caps: CapArgs,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Describe the character group and its module structure.
    Dual {
        /// Ring file, or `-` for standard input.
        ring: PathBuf,
        #[command(flatten)]
        caps: CapArgs,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Construct a left torsion-free character, if one exists.
    Character {
        /// Ring file, or `-` for standard input.
        ring: PathBuf,
        /// Print the value at every element.
        #[arg(long)]
        table: bool,
        #[command(flatten)]
        caps: CapArgs,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
}

/// Runs the command and returns the output with the exit code it implies.
pub fn execute(cli: &Cli) -> CliResult<(String, i32)> {
    let plain = |s: String| (s, 0);
    match &cli.command {
        Command::Classify {
            ring,
            lengths,
            caps,
            format,
        } => commands::cmd_classify(ring, &caps.caps(), lengths, *format).map(plain),
        Command::Verify {
            ring,
            length,
            cross_check,
            caps,
            format,
        } => commands::cmd_verify(ring, &caps.caps(), *length, *cross_check, *format).map(plain),
        Command::Search {
            ring,
            max_length,
            caps,
            format,
        } => commands::cmd_search(ring, &caps.caps(), *max_length, *format).map(plain),
        Command::Catalog {
            dir,
            out,
            lengths,
            caps,
            format,
        } => {
            let (text, code) =
                commands::cmd_catalog(dir, out.as_deref(), &caps.caps(), lengths, *format)?;
            Ok((text, code.unwrap_or(0)))
        }
        Command::Dual { ring, caps, format } => {
            commands::cmd_dual(ring, &caps.caps(), *format).map(plain)
        }
        Command::Character {
            ring,
            table,
            caps,
            format,
        } => commands::cmd_character(ring, &caps.caps(), *table, *format).map(plain),
    }
}

/// Entry point used by the binary; returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 1 } else { 0 };
        }
    };
    match execute(&cli) {
        Ok((out, code)) => {
            print!("{out}");
            code
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
