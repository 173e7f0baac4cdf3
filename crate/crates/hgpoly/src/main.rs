use std::process::ExitCode;

use hgpoly::cli::{run, LIMITS_ENV};

fn main() -> ExitCode {
    let env = std::env::var(LIMITS_ENV).ok();
    let code = run(std::env::args_os(), env.as_deref(), &mut std::io::stdout().lock(), &mut std::io::stderr().lock());
    ExitCode::from(code)
}
