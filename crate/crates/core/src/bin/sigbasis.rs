use std::process::ExitCode;

fn main() -> ExitCode {
    sigbasis::cli::main_with(std::env::args_os())
}
