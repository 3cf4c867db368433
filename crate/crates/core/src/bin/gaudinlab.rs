use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use gaudinlab::gaudin::{gaudin_multischur, GaudinParams, SizeBound};
use gaudinlab::report::{poly_to_json, poly_to_latex};
use gaudinlab::suites::{configure_threads, listing, render, run_suite, Format, Suite, SuiteConfig, DEFAULT_SAMPLES};

#[derive(Parser)]
#[command(name = "gaudinlab", version, about = "Gaudin functions and symmetrization identities, exactly")]
struct Cli {
    /// List the verification suites and exit.
    #[arg(long)]
    list: bool,
    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Subcommand)]
enum Command {
    /// Print F_n^r.
    Gaudin {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long, value_enum, default_value_t = OutFormat::Text)]
        format: OutFormat,
        #[command(flatten)]
        common: Common,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long)]
        suite: Option<String>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        r: Option<usize>,
        /// Truncation degree (y-degree for kernels, weight for Schubert tables).
        #[arg(long)]
        trunc: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        samples: usize,
        /// Seconds before the suite is reported as failed.
        #[arg(long)]
        timeout: Option<u64>,
        #[arg(long, value_enum, default_value_t = OutFormat::Text)]
        format: OutFormat,
        #[arg(long)]
        list: bool,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Args)]
struct Common {
    /// Raise the size bound on n and r to this value (at most 7).
    #[arg(long, value_name = "MAX")]
    bound_override: Option<usize>,
}

impl Common {
    fn bound(&self) -> SizeBound {
        match self.bound_override {
            Some(m) => SizeBound { max_n: m.min(SizeBound::unbounded().max_n), max_r: m },
            None => SizeBound::default(),
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Text,
    Json,
    Latex,
}

impl From<OutFormat> for Format {
    fn from(f: OutFormat) -> Self {
        match f {
            OutFormat::Text => Format::Text,
            OutFormat::Json => Format::Json,
            OutFormat::Latex => Format::Latex,
        }
    }
}

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    configure_threads();
    if cli.list {
        print!("{}", listing());
        return ExitCode::SUCCESS;
    }
    match cli.command {
        None => usage("expected a subcommand (gaudin, verify) or --list"),
        Some(Command::Gaudin { n, r, format, common }) => {
            let bound = common.bound();
            let f = match GaudinParams::new(n, r).and_then(|p| gaudin_multischur(&p, &bound)) {
                Ok(f) => f,
                Err(e) => return usage(e),
            };
            match format {
                OutFormat::Text => println!("{f}"),
                OutFormat::Latex => println!("{}", poly_to_latex(&f)),
                OutFormat::Json => {
                    let mut v = json!({ "n": n, "r": r, "poly": f.to_string() });
                    let body = poly_to_json(&f);
                    for (k, val) in body.as_object().expect("object") {
                        v[k] = val.clone();
                    }
                    println!("{v}");
                }
            }
            ExitCode::SUCCESS
        }
        Some(Command::Verify { suite, n, r, trunc, seed, samples, timeout, format, list, common }) => {
            if list {
                print!("{}", listing());
                return ExitCode::SUCCESS;
            }
            let Some(name) = suite else {
                return usage("--suite is required (see --list)");
            };
            let suite: Suite = match name.parse() {
                Ok(s) => s,
                Err(e) => return usage(e),
            };
            let config = SuiteConfig {
                suite,
                n,
                r,
                trunc,
                seed,
                samples,
                timeout_secs: timeout,
                bound: common.bound(),
                format: format.into(),
            };
            match run_suite(&config) {
                Ok(report) => {
                    print!("{}", render(&report, config.format));
                    if report.passed() {
                        ExitCode::SUCCESS
                    } else {
                        ExitCode::from(1)
                    }
                }
                Err(e) => usage(e),
            }
        }
    }
}
