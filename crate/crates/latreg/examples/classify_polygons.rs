//! Sweep every convex lattice polygon fitting in a small box and sort the
//! elementary lattice-regular ones into congruence classes. Whatever the
//! radius, the classes come out as the six catalog polygons — and no
//! pentagon ever survives the filter.
//!
//! An optional argument picks the radius (default 2):
//!
//!     cargo run --release --example classify_polygons 3

use latreg::classify::run_classify_2d;

fn main() {
    let radius = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("radius must be a small integer"))
        .unwrap_or(2);
    let report = run_classify_2d(radius).expect("radius out of range");
    print!("{}", report.render());
    for (stage, ms) in &report.stage_ms {
        eprintln!("[timing] {stage}: {ms} ms");
    }
    std::process::exit(if report.pass() { 0 } else { 1 });
}
