mod args;
mod commands;
mod report;

use std::io::Write;
use std::process;

use clap::Parser;

use args::{Cli, Command};
use commands::{ExitCode, Failure, CHECK_THRESHOLD};
use report::MeasureReport;

fn emit(report: &MeasureReport) -> Result<(), Failure> {
    if !report.all_finite() {
        return Err(Failure { code: ExitCode::InvalidState, message: "non-finite value in report".into() });
    }
    let mut out = std::io::stdout().lock();
    out.write_all(report.to_json().as_bytes())
        .and_then(|_| out.flush())
        .map_err(|e| Failure { code: ExitCode::Io, message: format!("stdout: {e}") })
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    match cli.command {
        Command::Gen(args) => {
            let text = commands::gen(&args)?;
            if !text.is_empty() {
                let mut out = std::io::stdout().lock();
                out.write_all(text.as_bytes())
                    .map_err(|e| Failure { code: ExitCode::Io, message: format!("stdout: {e}") })?;
            }
            Ok(ExitCode::Success)
        }
        Command::Measure(args) => {
            emit(&commands::measure(&args)?)?;
            Ok(ExitCode::Success)
        }
        Command::Check(args) => {
            let (report, worst) = commands::check(&args)?;
            emit(&report)?;
            if worst < CHECK_THRESHOLD {
                Ok(ExitCode::Success)
            } else {
                eprintln!("check failed: max residual {worst:e} >= {CHECK_THRESHOLD:e}");
                Ok(ExitCode::CheckFailed)
            }
        }
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { ExitCode::Usage as i32 } else { 0 };
            let _ = e.print();
            process::exit(code);
        }
    };
    let code = match run(cli) {
        Ok(code) => code,
        Err(failure) => {
            eprintln!("error: {failure}");
            failure.code
        }
    };
    process::exit(code as i32);
}
