use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    if let Err(e) = santalo_cli::configure_threads() {
        eprintln!("error: {e}");
        return ExitCode::from(e.code() as u8);
    }
    let ex = santalo_cli::execute(std::env::args_os());
    let _ = std::io::stdout().write_all(ex.stdout.as_bytes());
    let _ = std::io::stderr().write_all(ex.stderr.as_bytes());
    ExitCode::from(ex.code as u8)
}
