use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;

use wcoprime::cli::config::{parse_config_with, Command, Format, Overrides};
use wcoprime::cli::report::emit_report;
use wcoprime::cli::run::{run, ErrorRecord, EXIT_CONFIG, EXIT_INVALID_CURVE};

/// Exact counts of w-coprime tuples over function fields.
#[derive(Debug, Parser)]
#[command(name = "wcoprime", version)]
struct Args {
    /// curve-validate, zeta-series, zeta-value, count-elements, count-ideals,
    /// verify-thm1, verify-thm2, verify-lemma4, verify-mobius or density
    command: Command,
    /// TOML run configuration; `-` reads standard input.
    config: PathBuf,
    #[arg(long)]
    m: Option<u32>,
    #[arg(long)]
    w: Option<u32>,
    #[arg(long)]
    n: Option<i64>,
    #[arg(long = "N")]
    big_n: Option<i64>,
    #[arg(long)]
    format: Option<Format>,
    /// Write the report here instead of standard output.
    #[arg(long)]
    output: Option<String>,
}

fn fail(record: ErrorRecord) -> ExitCode {
    eprintln!("{}", record.to_json());
    ExitCode::from(record.status as u8)
}

fn read_config(path: &PathBuf) -> std::io::Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path)
    }
}

fn main() -> ExitCode {
    let args = Args::parse();
    let text = match read_config(&args.config) {
        Ok(t) => t,
        Err(e) => return fail(ErrorRecord::new(EXIT_CONFIG, format!("{}: {e}", args.config.display()))),
    };
    let overrides = Overrides {
        command: Some(args.command),
        m: args.m,
        w: args.w,
        n: args.n,
        big_n: args.big_n,
        format: args.format,
        path: args.output,
    };
    let cfg = match parse_config_with(&text, &overrides) {
        Ok(c) => c,
        Err(errs) => {
            let status = if errs.has_invalid_curve() { EXIT_INVALID_CURVE } else { EXIT_CONFIG };
            return fail(ErrorRecord::new(status, errs.to_string()));
        }
    };
    let outcome = match run(&cfg) {
        Ok(o) => o,
        Err(e) => return fail(ErrorRecord::from_error(&e)),
    };
    let bytes = emit_report(&outcome.report, cfg.output.format);
    let written = match &cfg.output.path {
        Some(p) => std::fs::write(p, &bytes),
        None => std::io::stdout().lock().write_all(&bytes),
    };
    if let Err(e) = written {
        return fail(ErrorRecord::new(EXIT_CONFIG, format!("writing report: {e}")));
    }
    if outcome.status != 0 {
        eprintln!("{}", ErrorRecord::new(outcome.status, "curve data failed validation").to_json());
    }
    ExitCode::from(outcome.status as u8)
}
