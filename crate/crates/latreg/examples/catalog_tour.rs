//! Walk the catalog and recompute every advertised invariant straight from
//! the vertex coordinates: normalized volume, f-vector, and flag count.
//! The printed table is the classification at a glance — one segment, six
//! polygons, then nine, ten, and ten entries in dimensions 3, 4, and 5.
//!
//! An optional argument picks the top dimension (default 4):
//!
//!     cargo run --release --example catalog_tour 5

use latreg::catalog::all_entries;

fn main() {
    let max_dim = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("dimension must be a small integer"))
        .unwrap_or(4);

    println!(
        "{:<14} {:<14} {:>3} {:>8} {:>6}  f-vector",
        "label", "schläfli", "dim", "volume", "flags"
    );
    for e in all_entries(max_dim) {
        let volume = e.polytope.lattice_volume();
        let f = e.polytope.f_vector();
        let flags = e.polytope.flags().len();
        assert_eq!(volume, e.expected_volume, "{} volume", e.label());
        assert_eq!(f, e.expected_f_vector, "{} f-vector", e.label());
        assert_eq!(flags, e.expected_flag_count, "{} flag count", e.label());
        let fv: Vec<String> = f.iter().map(|x| x.to_string()).collect();
        println!(
            "{:<14} {:<14} {:>3} {:>8} {:>6}  ({})",
            e.label(),
            e.schlafli,
            e.dim,
            volume,
            flags,
            fv.join(", "),
        );
    }
    println!("\nevery recomputed invariant matches its catalog value");
}
