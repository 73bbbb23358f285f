//! Runs every verification suite and prints the failures.

use superplane::suites::{run_suites, Options, Suite};

fn main() {
    let opts = Options {
        random_words: 2_000,
        ..Options::default()
    };
    let report = run_suites(&Suite::ALL, &opts);
    for c in report.failures() {
        println!("{c}");
    }
    println!("{}", report.summary());
    std::process::exit(report.exit_code());
}
