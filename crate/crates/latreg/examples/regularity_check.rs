//! Decide lattice-regularity for a few hand-picked polytopes. A polytope is
//! lattice-regular when its lattice symmetries act transitively on flags;
//! the decision procedure either finds a symmetry for every flag pair or
//! names a pair that no lattice-affine map can join.
//!
//!     cargo run --release --example regularity_check

use num_bigint::BigInt;

use latreg::symmetry::is_lattice_regular;
use latreg::Polytope;

fn poly(ambient: usize, raw: &[&[i64]]) -> Polytope {
    let verts = raw.iter().map(|v| v.iter().map(|&x| BigInt::from(x)).collect()).collect();
    Polytope::from_vertices(ambient, verts).expect("well-formed vertex list")
}

fn report(name: &str, p: &Polytope) {
    let (regular, witness) = is_lattice_regular(p);
    if regular {
        println!("{name}: lattice-regular ({} flags)", p.flags().len());
    } else {
        let (from, to) = witness.expect("irregular polytopes name a separating pair");
        println!("{name}: NOT lattice-regular");
        println!("  no lattice symmetry carries flag {:?}", from.faces);
        println!("            onto            flag {:?}", to.faces);
    }
}

fn main() {
    // the unit square: every flag reachable, the classical dihedral action
    report("unit square", &poly(2, &[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]));

    // a right triangle with legs 1 and 2: euclidean-wise still a triangle,
    // but the lattice tells its edges apart
    report("stretched triangle", &poly(2, &[&[0, 0], &[1, 0], &[0, 2]]));

    // the hexagon spanned by three unit directions: regular even though no
    // euclidean-regular hexagon has lattice vertices
    report(
        "lattice hexagon",
        &poly(2, &[&[1, 0], &[0, 1], &[-1, 1], &[-1, 0], &[0, -1], &[1, -1]]),
    );

    // a tetrahedron over the stretched triangle: the defect propagates up
    report(
        "twisted simplex",
        &poly(3, &[&[0, 0, 0], &[1, 0, 0], &[1, 2, 0], &[0, 0, 2]]),
    );
}
