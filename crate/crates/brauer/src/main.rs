use std::process::ExitCode;

fn main() -> ExitCode {
    brauer::cli::main_with(std::env::args())
}
