//! Runs in its own process because it sets an environment variable.

use qspectra::theorems::Registry;
use qspectra_cli::{run, EXIT_OK, EXIT_USAGE};

fn verify_code(extra: &[&str]) -> i32 {
    let args = ["qspectra", "verify", "T-dn-eq-1", "--max-n", "4"].into_iter().chain(extra.iter().copied());
    run(args, &Registry::standard(), &mut Vec::new(), &mut Vec::new())
}

#[test]
fn jobs_default_comes_from_environment() {
    std::env::set_var("QSPECTRA_JOBS", "0");
    assert_eq!(verify_code(&[]), EXIT_USAGE);
    assert_eq!(verify_code(&["--jobs", "1"]), EXIT_OK);
    std::env::set_var("QSPECTRA_JOBS", "2");
    assert_eq!(verify_code(&[]), EXIT_OK);
}
