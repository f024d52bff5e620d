//! Run the whole classification check and print the canonical report.
//! Every catalog entry must come out lattice-regular and elementary with
//! its expected volume and flag count, all same-dimension pairs must be
//! non-congruent, and the negative controls must fail.
//!
//! An optional argument picks the top dimension (default 4):
//!
//!     cargo run --release --example verify_theorem 5

use latreg::verify::run_verify_theorem;

fn main() {
    let max_dim = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("dimension must be a small integer"))
        .unwrap_or(4);
    let report = run_verify_theorem(max_dim, 0).expect("dimension out of range");
    print!("{}", report.render());
    for (stage, ms) in &report.stage_ms {
        eprintln!("[timing] {stage}: {ms} ms");
    }
    std::process::exit(if report.pass() { 0 } else { 1 });
}
