use std::process::ExitCode;

fn main() -> ExitCode {
    tetra::cli::run_main(std::env::args_os())
}
