//! Runs one verification suite and prints the report as text.
//!
//! `cargo run --example verify_suite -- triangularity 3 2`

use ggg::charlab::{run_suite, Suite, SuiteConfig};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let suite: Suite = args.first().map(String::as_str).unwrap_or("unipotent-multiplicity").parse().unwrap();
    let n = args.get(1).map_or(3, |s| s.parse().unwrap());
    let p = args.get(2).map_or(2, |s| s.parse().unwrap());
    let report = run_suite(suite, &SuiteConfig::new(n, p)).unwrap();
    print!("{}", report.to_text());
}
