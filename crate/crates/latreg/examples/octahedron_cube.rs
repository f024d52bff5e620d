//! The octahedron-cube correspondence, exactly. Circumscribe the box whose
//! facet midpoints are an octahedron's vertices, and derive the 24-cell
//! inscribed in a 4-cube whose generator sum is even — the two derived
//! constructions behind the higher-dimensional catalog entries.
//!
//!     cargo run --release --example octahedron_cube

use latreg::catalog::{build, derive_cell24, octa_cube, Family};

fn main() {
    // around the standard octahedron sits the [-1, 1] box
    let cross = build(Family::Cross, 3, 1).expect("catalog entry").polytope;
    let boxed = octa_cube(&cross).expect("crosses have circumscribed boxes");
    println!("cross-3-v1 vertices:");
    for v in cross.vertices() {
        println!("  {v:?}");
    }
    println!("circumscribed box vertices (volume {}):", boxed.lattice_volume());
    for v in boxed.vertices() {
        println!("  {v:?}");
    }

    // the skew 4-cubes have even generator sum, so the half-diagonal points
    // are lattice points and a 24-cell appears
    for variant in [1u64, 2, 3] {
        let cube = build(Family::Cube, 4, variant).expect("catalog entry");
        match derive_cell24(&cube).expect("well-formed cube entry") {
            Some(cell) => println!(
                "\n{}: inscribed 24-cell with {} vertices, volume {}, f-vector {:?}",
                cube.label(),
                cell.vertices().len(),
                cell.lattice_volume(),
                cell.f_vector(),
            ),
            None => println!(
                "\n{}: no inscribed 24-cell — the generator sum is odd, so the \
                 candidate vertices are not lattice points",
                cube.label(),
            ),
        }
    }
}
