use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let outcome = branchcover::cli::run(std::env::args());
    print!("{}", outcome.stdout_payload);
    let _ = std::io::stdout().flush();
    if !outcome.diagnostics.is_empty() {
        eprint!("{}", outcome.diagnostics);
    }
    ExitCode::from(outcome.exit_code)
}
