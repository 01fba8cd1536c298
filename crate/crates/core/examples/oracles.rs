//! Runs the regression oracles one scope at a time and reports timings.

use std::time::Instant;

use clap::ValueEnum;
use iwahori::suite::{run_oracle_suite, Scope};

fn main() {
    let mut failed = false;
    for scope in Scope::value_variants().iter().skip(1) {
        let start = Instant::now();
        for r in run_oracle_suite(*scope) {
            failed |= !r.passed;
            println!("{r}");
        }
        println!("  [{scope:?}: {:.2}s]", start.elapsed().as_secs_f64());
    }
    std::process::exit(i32::from(failed));
}
