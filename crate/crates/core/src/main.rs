use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use joq::commands::{gf_report, quantity_text, seq_output, table_output, Format, Quantity};
use joq::sequences::SeqName;
use joq::unrestricted::OffsetTriple;
use joq::verify::{run_suite, CheckName, SuiteConfig, DEFAULT_SEED};

#[derive(Parser)]
#[command(name = "joq", version, about = "Exact modified third-order Jacobsthal numbers and quaternions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print K, M, X or J3 over an index range.
    Seq {
        name: SeqName,
        #[arg(long, allow_hyphen_values = true)]
        from: i64,
        #[arg(long, allow_hyphen_values = true)]
        to: i64,
        #[arg(long, default_value = "csv")]
        format: Format,
    },
    /// Evaluate one quaternion quantity at a single index.
    Quat {
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
        #[command(flatten)]
        offsets: OffsetArgs,
        #[arg(long, default_value = "qk")]
        what: Quantity,
    },
    /// Run the verification suite and print its JSON report.
    Verify {
        #[arg(long, allow_hyphen_values = true)]
        n_min: Option<i64>,
        #[arg(long, allow_hyphen_values = true)]
        n_max: Option<i64>,
        /// Offset triple to test; repeat to test several. Defaults to the seeded grid.
        #[arg(long, allow_hyphen_values = true)]
        abc: Vec<OffsetTriple>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long)]
        depth: Option<usize>,
        /// Comma-separated check names. Defaults to every check.
        #[arg(long, value_delimiter = ',')]
        checks: Vec<CheckName>,
        /// Perturb the brute-force oracles (negative control).
        #[arg(long)]
        mutate_oracle: bool,
        #[arg(long)]
        max_counterexamples: Option<usize>,
    },
    /// Generating-function numerator and truncated series check.
    Gf {
        #[command(flatten)]
        offsets: OffsetArgs,
        #[arg(long, default_value_t = 16)]
        depth: usize,
    },
    /// Print a quaternion quantity over an index range.
    Table {
        #[command(flatten)]
        offsets: OffsetArgs,
        #[arg(long, allow_hyphen_values = true)]
        from: i64,
        #[arg(long, allow_hyphen_values = true)]
        to: i64,
        #[arg(long, default_value = "qk")]
        what: Quantity,
        #[arg(long, default_value = "csv")]
        format: Format,
    },
}

#[derive(Args)]
struct OffsetArgs {
    /// Offsets as "a,b,c".
    #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["a", "b", "c"])]
    abc: Option<OffsetTriple>,
    #[arg(long, allow_hyphen_values = true, default_value_t = 1)]
    a: i64,
    #[arg(long, allow_hyphen_values = true, default_value_t = 2)]
    b: i64,
    #[arg(long, allow_hyphen_values = true, default_value_t = 3)]
    c: i64,
}

impl OffsetArgs {
    fn triple(&self) -> OffsetTriple {
        self.abc.unwrap_or(OffsetTriple::new(self.a, self.b, self.c))
    }
}

fn run(command: Command) -> joq::Result<(String, bool)> {
    match command {
        Command::Seq { name, from, to, format } => Ok((seq_output(name, from, to, format)?, true)),
        Command::Quat { n, offsets, what } => {
            Ok((quantity_text(n, &offsets.triple(), what)? + "\n", true))
        }
        Command::Verify {
            n_min,
            n_max,
            abc,
            seed,
            depth,
            checks,
            mutate_oracle,
            max_counterexamples,
        } => {
            let mut cfg = SuiteConfig::with_seed(seed);
            if let Some(v) = n_min {
                cfg.n_min = v;
            }
            if let Some(v) = n_max {
                cfg.n_max = v;
            }
            if !abc.is_empty() {
                cfg.triples = abc;
            }
            if let Some(v) = depth {
                cfg.series_depth = v;
            }
            if !checks.is_empty() {
                cfg.checks = checks.into_iter().collect();
            }
            if let Some(v) = max_counterexamples {
                cfg.max_counterexamples = v;
            }
            cfg.mutate_oracle = mutate_oracle;
            let report = run_suite(&cfg)?;
            Ok((report.to_json() + "\n", report.passed()))
        }
        Command::Gf { offsets, depth } => {
            let report = gf_report(&offsets.triple(), depth)?;
            Ok((serde_json::to_string_pretty(&report).expect("serializable") + "\n", true))
        }
        Command::Table { offsets, from, to, what, format } => {
            Ok((table_output(&offsets.triple(), from, to, what, format)?, true))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok((out, ok)) => {
            print!("{out}");
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
