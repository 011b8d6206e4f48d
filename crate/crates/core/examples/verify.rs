//! Runs the acceptance suite from library code.
//!
//!     cargo run --example verify

use fracwave::acceptance::run_all;

fn main() {
    let results = run_all(1.0);
    for r in &results {
        println!("{r}");
    }
    let failed = results.iter().filter(|r| !r.passed()).count();
    std::process::exit(i32::from(failed > 0));
}
