use std::io::{stderr, stdout};
use std::process::ExitCode;

fn main() -> ExitCode {
    let code = torus_decomp::cli::run(std::env::args_os(), &mut stdout(), &mut stderr());
    ExitCode::from(code)
}
