use clap::{Args, Parser, Subcommand};
use serde_json::json;
use skein_cli::acceptance::{run_suite, suite};
use skein_cli::commands::*;
use skein_cli::config::{Mode, OutputFormat, RunConfig};
use skein_cli::fixture::FixtureFile;
use skein_cli::serial::{parse_rational, SCHEMA};
use skein_cli::{CliError, CliResult};
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "skein", version, about = "Exact 6j-symbols and skein representations at odd roots of unity")]
struct Cli {
    #[command(flatten)]
    global: GlobalArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GlobalArgs {
    /// Odd order of the root of unity.
    #[arg(long = "N", short = 'N', global = true, default_value_t = 3)]
    n: u32,
    /// Exponent k' with A = exp(2 pi i k' / N).
    #[arg(long, global = true, default_value_t = 1)]
    kprime: u32,
    #[arg(long, global = true, value_enum, default_value_t = Mode::Exact)]
    mode: Mode,
    /// Zero test tolerance in approx mode.
    #[arg(long, global = true, default_value_t = 1e-10)]
    tolerance: f64,
    /// 6j cache directory (defaults to $SKEIN_CACHE_DIR).
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    #[arg(long, global = true)]
    no_cache: bool,
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Json)]
    format: OutputFormat,
}

#[derive(Args)]
struct SurfaceArgs {
    #[arg(long, conflicts_with = "fixture")]
    genus: Option<usize>,
    /// Graph fixture JSON.
    #[arg(long)]
    fixture: Option<PathBuf>,
    /// Boundary data JSON.
    #[arg(long)]
    omega: PathBuf,
}

impl SurfaceArgs {
    fn source(&self) -> SurfaceSource {
        SurfaceSource { genus: self.genus, fixture: self.fixture.clone() }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one 6j-symbol; colors are given in units of alpha.
    Sixj {
        #[arg(allow_hyphen_values = true)]
        alpha: String,
        #[arg(allow_hyphen_values = true)]
        beta: String,
        #[arg(allow_hyphen_values = true)]
        gamma: String,
        #[arg(allow_hyphen_values = true)]
        e1: String,
        #[arg(allow_hyphen_values = true)]
        e2: String,
        #[arg(long, value_enum, default_value_t = SixjRoute::Closed)]
        method: SixjRoute,
        #[arg(long)]
        cross_validate: bool,
    },
    /// Dump the matrix of one curve operator.
    Rep {
        #[command(flatten)]
        surface: SurfaceArgs,
        /// gamma_1.., gamma_e1.. or a transverse curve name.
        #[arg(long)]
        curve: String,
    },
    /// Run the irreducibility certificates.
    Irreducible {
        #[command(flatten)]
        surface: SurfaceArgs,
        /// Also close words modulo a prime.
        #[arg(long)]
        words: bool,
        /// Treat the identically vanishing 6j classes as Y-set failures.
        #[arg(long)]
        strict: bool,
        #[arg(long)]
        skip_yset: bool,
    },
    /// Classify the genus-one representation at x = e^(2 pi i s), y = e^(2 pi i t).
    Genus1 {
        #[arg(allow_hyphen_values = true)]
        s: String,
        #[arg(allow_hyphen_values = true)]
        t: String,
    },
    /// Run acceptance criteria: all, modules, appendixA, sixj, valuations, skein, genus1 or a list like 1,6.
    Verify {
        #[arg(default_value = "all")]
        suite: String,
    },
    /// Write a built-in surface as a graph fixture.
    Fixture {
        #[arg(long)]
        genus: usize,
    },
}

fn sign(s: &str) -> CliResult<i64> {
    match s {
        "+" | "+1" | "1" => Ok(1),
        "-" | "-1" => Ok(-1),
        other => Err(CliError::Usage(format!("sign must be +1 or -1, got {other:?}"))),
    }
}

fn run(cli: Cli) -> CliResult<CommandOutput> {
    let g = &cli.global;
    let cfg = RunConfig::new(g.n, g.kprime, g.mode, g.tolerance)?
        .with_cache(g.cache_dir.clone(), g.no_cache)
        .with_format(g.format);
    match cli.command {
        Command::Sixj { alpha, beta, gamma, e1, e2, method, cross_validate } => {
            let req = SixjRequest {
                alpha: parse_rational(&alpha)?,
                beta: parse_rational(&beta)?,
                gamma: parse_rational(&gamma)?,
                e1: sign(&e1)?,
                e2: sign(&e2)?,
                route: method,
                cross_validate,
            };
            cmd_sixj(&cfg, &req)
        }
        Command::Rep { surface, curve } => cmd_rep(&cfg, &surface.source(), &surface.omega, &curve),
        Command::Irreducible { surface, words, strict, skip_yset } => {
            let opts = IrreducibleOptions { words, strict_yset: strict, skip_yset };
            cmd_irreducible(&cfg, &surface.source(), &surface.omega, opts)
        }
        Command::Genus1 { s, t } => cmd_genus1(&cfg, &s, &t),
        Command::Verify { suite: name } => {
            let ids = suite(&name).ok_or_else(|| CliError::Usage(format!("unknown suite {name}")))?;
            let reports = run_suite(&ids);
            for r in &reports {
                eprintln!("{}", r.line());
            }
            let passed = reports.iter().all(|r| r.passed);
            let record = json!({ "schema": SCHEMA, "kind": "verify", "suite": name, "criteria": reports, "passed": passed });
            Ok(CommandOutput { record, passed, text: None })
        }
        Command::Fixture { genus } => {
            let p = skein_core::skein::preset(genus)?;
            let record = serde_json::to_value(FixtureFile::from_preset(&p)).expect("json");
            Ok(CommandOutput { record, passed: true, text: None })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(out) => {
            let text = match out.text {
                Some(text) => text,
                None => format!("{}\n", serde_json::to_string_pretty(&out.record).expect("json")),
            };
            // a closed pipe is not an error worth reporting
            let _ = std::io::stdout().lock().write_all(text.as_bytes());
            if out.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
