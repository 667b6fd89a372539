use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use mbti_szondi::cli::{self, exit, Format, ToSppOptions};
use mbti_szondi::polarity::{DEFAULT_SEED, DEFAULT_TRIALS};
use mbti_szondi::{Connection, Error, Interpretation, Suite};

#[derive(Parser)]
#[command(
    name = "mbti-szondi",
    version,
    about = "Translate between MBTI sets and Szondi profile sets"
)]
struct Args {
    /// Interpretation document (TOML); defaults to the built-in table.
    #[arg(long, global = true)]
    interp: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value = "human")]
    format: OutputFormat,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Human,
    Machine,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Facts,
    Lemma,
    Theorem,
    All,
}

#[derive(Subcommand)]
enum Command {
    /// Right polarity: indicator set to profile set.
    ToSpp {
        indicators: String,
        #[arg(long)]
        sample: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long)]
        boxes: bool,
        /// Write every member profile to this file, one per line.
        #[arg(long)]
        enumerate: Option<PathBuf>,
    },
    /// Left polarity: one profile to an indicator set.
    ToMbti { profile: String },
    /// Run the verification suite.
    Verify {
        #[arg(value_enum, default_value = "all")]
        suite: SuiteArg,
        #[arg(long, default_value_t = DEFAULT_TRIALS)]
        trials: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Precompute the right polarity of all 2^16 indicator sets.
    Precompute { output: PathBuf },
    /// Answer a right-polarity query from a precomputed cache.
    Lookup {
        indicators: String,
        #[arg(long)]
        cache: PathBuf,
        #[arg(long)]
        sample: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long)]
        boxes: bool,
    },
    /// Inspect or validate the active interpretation.
    Interp {
        #[arg(value_enum)]
        action: InterpAction,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum InterpAction {
    Show,
    Check,
}

fn fail(err: Error) -> ExitCode {
    eprintln!("error: {err}");
    ExitCode::from(cli::exit_code(&err) as u8)
}

fn run(args: Args) -> Result<ExitCode, Error> {
    let format = match args.format {
        OutputFormat::Human => Format::Human,
        OutputFormat::Machine => Format::Machine,
    };
    if let Command::Interp { action } = args.command {
        let interp = match &args.interp {
            Some(p) => Interpretation::parse_document(&std::fs::read_to_string(p)?)?,
            None => Interpretation::builtin(),
        };
        return Ok(match action {
            InterpAction::Show => {
                print!("{}", cli::interp_show(&interp));
                ExitCode::SUCCESS
            }
            InterpAction::Check => {
                let (ok, text) = cli::interp_check(&interp);
                print!("{text}");
                ExitCode::from(if ok {
                    exit::SUCCESS
                } else {
                    exit::INTERPRETATION
                } as u8)
            }
        });
    }
    let interp = cli::load_interpretation(args.interp.as_deref())?;
    match args.command {
        Command::ToSpp {
            indicators,
            sample,
            seed,
            boxes,
            enumerate,
        } => {
            let conn = Connection::new(interp);
            let opts = ToSppOptions {
                sample,
                seed,
                boxes,
                enumerate,
            };
            print!("{}", cli::to_spp(&conn, &indicators, &opts)?.render(format));
        }
        Command::ToMbti { profile } => {
            let conn = Connection::new(interp);
            print!("{}", cli::to_mbti(&conn, &profile)?.render(format));
        }
        Command::Verify {
            suite,
            trials,
            seed,
        } => {
            let suite = match suite {
                SuiteArg::Facts => Suite::Facts,
                SuiteArg::Lemma => Suite::Lemma,
                SuiteArg::Theorem => Suite::Theorem,
                SuiteArg::All => Suite::All,
            };
            let conn = Connection::new(interp);
            let report = cli::verify(&conn, suite, trials, seed);
            match format {
                Format::Human => print!("{}", report.render()),
                Format::Machine => println!(
                    "{}",
                    serde_json::to_string(&report).expect("report serializes")
                ),
            }
            if !report.passed() {
                return Ok(ExitCode::from(exit::VERIFICATION as u8));
            }
        }
        Command::Precompute { output } => {
            let conn = Connection::new(interp);
            let elapsed = cli::precompute(&conn, &output)?;
            println!(
                "wrote {} entries to {} in {:.1} s",
                mbti_szondi::cache::ENTRY_COUNT,
                output.display(),
                elapsed.as_secs_f64()
            );
        }
        Command::Lookup {
            indicators,
            cache,
            sample,
            seed,
            boxes,
        } => {
            let opts = ToSppOptions {
                sample,
                seed,
                boxes,
                enumerate: None,
            };
            print!(
                "{}",
                cli::lookup(&interp, &indicators, &cache, &opts)?.render(format)
            );
        }
        Command::Interp { .. } => unreachable!("handled above"),
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let args = Args::parse();
    run(args).unwrap_or_else(fail)
}
