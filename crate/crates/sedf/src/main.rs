use std::process::ExitCode;

use clap::Parser;

fn main() -> ExitCode {
    let args = sedf::cli::Cli::parse();
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    let code = sedf::cli::run(args, &mut stdout.lock(), &mut stderr.lock());
    ExitCode::from(code)
}
