//! Decide lattice-congruence and print the witnessing map. Two lattice
//! polytopes are congruent when some affine map with unimodular integer
//! linear part and integer translation carries one vertex set onto the
//! other; the decision returns such a map, never a bare yes.
//!
//!     cargo run --release --example congruence_witness

use num_bigint::BigInt;

use latreg::exactalg::{AffineMap, IntMatrix};
use latreg::polytope::lattice_map_json;
use latreg::symmetry::are_congruent;
use latreg::Polytope;

fn poly(ambient: usize, raw: &[&[i64]]) -> Polytope {
    let verts = raw.iter().map(|v| v.iter().map(|&x| BigInt::from(x)).collect()).collect();
    Polytope::from_vertices(ambient, verts).expect("well-formed vertex list")
}

fn main() {
    // the unit cube, and a sheared translate of it: same lattice object in
    // a different basis of the same lattice
    let cube = poly(
        3,
        &[
            &[0, 0, 0],
            &[1, 0, 0],
            &[0, 1, 0],
            &[0, 0, 1],
            &[1, 1, 0],
            &[1, 0, 1],
            &[0, 1, 1],
            &[1, 1, 1],
        ],
    );
    let shear = IntMatrix::from_i64_rows(&[&[1, 2, 0], &[0, 1, 0], &[0, -1, 1]]);
    assert!(shear.is_unimodular());
    let shift: Vec<BigInt> = vec![4, 7, 1].into_iter().map(BigInt::from).collect();
    let sheared = Polytope::from_vertices(
        3,
        cube.vertices().iter().map(|v| AffineMap::apply_lattice(&shear, &shift, v)).collect(),
    )
    .expect("sheared copy is a fine polytope");

    let map = are_congruent(&cube, &sheared).expect("these two are congruent");
    println!("congruent; a witnessing lattice-affine map:");
    println!("{}", serde_json::to_string_pretty(&lattice_map_json(&map)).expect("serializable"));

    // replay the witness over the vertices to see it really acts
    let (lin, tr) = map.to_lattice_parts().expect("witnesses are lattice-affine");
    let mut image: Vec<Vec<BigInt>> =
        cube.vertices().iter().map(|v| AffineMap::apply_lattice(&lin, &tr, v)).collect();
    image.sort();
    assert_eq!(image, sheared.vertices());
    println!("witness verified on all {} vertices", image.len());

    // same euclidean shape is not enough: the diagonal square is twice as
    // large in the lattice sense, so no witness exists
    let unit = poly(2, &[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
    let diagonal = poly(2, &[&[1, 0], &[0, 1], &[2, 1], &[1, 2]]);
    match are_congruent(&unit, &diagonal) {
        Some(_) => unreachable!("lattice areas 2 and 4 cannot match"),
        None => println!("unit square vs diagonal square: not congruent, as the areas demand"),
    }
}
