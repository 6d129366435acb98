mod commands;
mod output;
mod suites;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use output::Format;

#[derive(Parser)]
#[command(name = "heegner", version, about = "Degrees of special cubic fourfold divisors via vector-valued modular forms")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Method {
    Modular,
    Schubert,
    Segre,
    All,
}

#[derive(Subcommand)]
enum Command {
    /// The generating series Theta and the table d -> deg(C_d).
    Theta {
        /// Number of integer q-steps.
        #[arg(long, default_value_t = 3)]
        terms: i64,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Vector-valued Eisenstein series of odd weight k.
    Eisenstein {
        #[arg(long)]
        k: u32,
        #[arg(long, default_value_t = 4)]
        terms: i64,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Dimension of the space of forms of weight k.
    Dim {
        #[arg(long)]
        k: u32,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// deg(C_d) by one or all methods.
    Degree {
        #[arg(long)]
        d: u64,
        #[arg(long, value_enum, default_value_t = Method::All)]
        method: Method,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Run a named invariant suite.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
}

/// Exit status contract.
pub enum Failure {
    Usage(String),
    Verification(String),
}

impl From<heegner_core::Error> for Failure {
    fn from(e: heegner_core::Error) -> Self {
        match e {
            heegner_core::Error::InvalidArgument(_) => Failure::Usage(e.to_string()),
            _ => Failure::Verification(e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Theta { terms, format } => commands::theta(terms, format),
        Command::Eisenstein { k, terms, format } => commands::eisenstein(k, terms, format),
        Command::Dim { k, format } => commands::dim(k, format),
        Command::Degree { d, method, format } => commands::degree(d, method, format),
        Command::Verify { suite, format } => suites::verify(&suite, format),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(2)
        }
    }
}
