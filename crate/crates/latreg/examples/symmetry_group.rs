//! Compute the full lattice symmetry group of a catalog polytope and watch
//! it act. For a lattice-regular polytope the group order equals the flag
//! count, the orbit of the base flag is everything, and each element is an
//! integer affine map with unimodular linear part.
//!
//!     cargo run --release --example symmetry_group

use num_bigint::BigInt;

use latreg::catalog::{build, Family};
use latreg::exactalg::AffineMap;
use latreg::symmetry::symmetry_group;
use latreg::Polytope;

/// The permutation of the (sorted) vertex list induced by a symmetry.
fn permutation(p: &Polytope, g: &AffineMap) -> Vec<usize> {
    let (lin, tr) = g.to_lattice_parts().expect("lattice symmetries have integer parts");
    p.vertices()
        .iter()
        .map(|v| {
            let image = AffineMap::apply_lattice(&lin, &tr, v);
            p.vertices().binary_search(&image).expect("a symmetry permutes the vertices")
        })
        .collect()
}

fn main() {
    // the skew hexagon: six vertices, twelve flags, dihedral action
    let hexagon = build(Family::Hexagon, 2, 2).expect("catalog entry").polytope;
    let group = symmetry_group(&hexagon);
    println!("hexagon-2-v2: group order {}", group.order());
    println!("  flags: {}", hexagon.flags().len());
    println!("  base flag orbit size: {}", group.flag_orbit().len());
    println!("  vertex permutations:");
    for g in group.elements() {
        println!("    {:?}", permutation(&hexagon, g));
    }

    // the skew 3-cube: order 48, same as the euclidean cube's full group
    let cube = build(Family::Cube, 3, 3).expect("catalog entry").polytope;
    let group = symmetry_group(&cube);
    println!("\ncube-3-v3: group order {}", group.order());
    let g = &group.elements()[1];
    let (lin, tr) = g.to_lattice_parts().expect("integer parts");
    println!("  a sample non-identity element:");
    for r in 0..3 {
        let row: Vec<String> = (0..3).map(|c| lin.at(r, c).to_string()).collect();
        println!("    [ {} ]  +  {}", row.join(" "), tr[r]);
    }
    let moved: Vec<BigInt> =
        AffineMap::apply_lattice(&lin, &tr, &cube.vertices()[0]);
    println!("  it sends vertex {:?} to {:?}", cube.vertices()[0], moved);

    // the 24-cell keeps the largest group in the catalog
    let cell = build(Family::Cell24, 4, 1).expect("catalog entry").polytope;
    let group = symmetry_group(&cell);
    println!("\ncell24-4-v1: group order {} (= flag count)", group.order());
    assert_eq!(group.order(), cell.flags().len());
}
