use std::io;
use std::process::ExitCode;

use qspectra::theorems::Registry;

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let registry = Registry::standard();
    let code = qspectra_cli::run(std::env::args_os(), &registry, &mut io::stdout().lock(), &mut io::stderr().lock());
    ExitCode::from(code as u8)
}
