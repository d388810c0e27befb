use clap::{Parser, Subcommand, ValueEnum};
use fsig_cli::commands::{
    cmd_osequence, cmd_segre, cmd_veronese, parse_u64_list, OSequenceCommand, SegreMethod,
    VeroneseMethod,
};
use fsig_cli::output::{render, Format, OutputRecord};
use fsig_cli::table::{render_table, run_table};
use fsig_cli::{CliError, EXIT_OK};

/// Exact F-signatures and dual F-signatures of Veronese subrings and Segre
/// products of polynomial rings. All values are exact fractions.
#[derive(Parser)]
#[command(name = "fsig", version, about)]
struct Cli {
    /// Emit one JSON record per line.
    #[arg(long, global = true, conflicts_with = "csv")]
    json: bool,

    /// Emit CSV with a header row.
    #[arg(long, global = true)]
    csv: bool,

    /// Add a decimal approximation column (plain output only).
    #[arg(long, global = true)]
    approx: bool,

    /// Generator cap for exhaustive subset search (env: FSIG_CAP).
    #[arg(long, global = true)]
    cap: Option<u32>,

    /// Bound the number of worker threads for table rows.
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VeroneseMethodArg {
    Closed,
    Brute,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SegreMethodArg {
    Bound,
    Brute,
    Auto,
}

#[derive(Subcommand)]
enum Command {
    /// Dual F-signature of the n-th Veronese subring in d variables.
    Veronese {
        n: u32,
        d: u32,
        #[arg(long, value_enum, default_value_t = VeroneseMethodArg::Closed)]
        method: VeroneseMethodArg,
    },
    /// Signatures of the Segre product with ascending factors r_1 .. r_t.
    Segre {
        /// Factor parameters, e.g. `fsig segre 1 2 2`.
        #[arg(num_args = 2.., required = true)]
        r: Vec<u32>,
        #[arg(long, value_enum, default_value_t = SegreMethodArg::Auto)]
        method: SegreMethodArg,
        /// Also compare the upper bound with the exhaustive minimum.
        #[arg(long)]
        probe_conjecture: bool,
        /// List the generalized F-signature of every conic class.
        #[arg(long)]
        classes: bool,
    },
    /// Recompute the reference table of 14 small Segre products.
    Table,
    /// O-sequence utilities.
    Osequence {
        #[command(subcommand)]
        command: OSequenceArg,
    },
}

#[derive(Subcommand)]
enum OSequenceArg {
    /// Validate a candidate O-sequence, e.g. `check 1,2,3,4`.
    Check { values: String },
    /// The Macaulay shifts `f^<i>` and `f^(i)`.
    Shift { f: u64, i: u32 },
    /// Check the ratio inequality for a valid O-sequence with h_1 <= n+1.
    Keylemma { values: String, n: u32 },
}

fn effective_cap(flag: Option<u32>) -> Result<u32, CliError> {
    if let Some(cap) = flag {
        return Ok(cap);
    }
    match std::env::var("FSIG_CAP") {
        Ok(value) => value
            .parse()
            .map_err(|_| CliError::Usage(format!("FSIG_CAP is not a number: {value:?}"))),
        Err(_) => Ok(fsig::signature::DEFAULT_SUBSET_CAP),
    }
}

fn run(cli: Cli) -> Result<(Vec<OutputRecord>, Option<String>, i32), CliError> {
    let cap = effective_cap(cli.cap)?;
    match cli.command {
        Command::Veronese { n, d, method } => {
            let method = match method {
                VeroneseMethodArg::Closed => VeroneseMethod::Closed,
                VeroneseMethodArg::Brute => VeroneseMethod::Brute,
                VeroneseMethodArg::Both => VeroneseMethod::Both,
            };
            let (records, exit) = cmd_veronese(n, d, method, cap)?;
            Ok((records, None, exit))
        }
        Command::Segre {
            r,
            method,
            probe_conjecture,
            classes,
        } => {
            let method = match method {
                SegreMethodArg::Bound => SegreMethod::Bound,
                SegreMethodArg::Brute => SegreMethod::Brute,
                SegreMethodArg::Auto => SegreMethod::Auto,
            };
            let (records, exit) = cmd_segre(r, method, probe_conjecture, classes, cap)?;
            Ok((records, None, exit))
        }
        Command::Table => {
            let outcome = run_table(cli.threads)?;
            let human = render_table(&outcome);
            let exit = outcome.exit_code();
            Ok((outcome.records, Some(human), exit))
        }
        Command::Osequence { command } => {
            let command = match command {
                OSequenceArg::Check { values } => OSequenceCommand::Check {
                    values: parse_u64_list(&values)?,
                },
                OSequenceArg::Shift { f, i } => OSequenceCommand::Shift { f, i },
                OSequenceArg::Keylemma { values, n } => OSequenceCommand::KeyLemma {
                    values: parse_u64_list(&values)?,
                    n,
                },
            };
            let (records, exit) = cmd_osequence(command)?;
            Ok((records, None, exit))
        }
    }
}

fn main() {
    let cli = Cli::parse();
    let format = if cli.json {
        Format::Json
    } else if cli.csv {
        Format::Csv
    } else {
        Format::Plain
    };
    let approx = cli.approx;
    match run(cli) {
        Ok((records, human, exit)) => {
            match (format, human) {
                (Format::Plain, Some(table)) => print!("{table}"),
                (format, _) => print!("{}", render(&records, format, approx)),
            }
            if exit != EXIT_OK {
                eprintln!("method disagreement detected (exit {exit})");
            }
            std::process::exit(exit);
        }
        Err(err) => {
            eprintln!("error: {}", err.message());
            std::process::exit(err.exit_code());
        }
    }
}
