//! The integer linear algebra underneath everything else: Hermite and
//! Smith normal forms, sublattice indices, and exactly solved affine maps.
//! Nothing here rounds; every identity printed is checked by multiplying
//! back.
//!
//!     cargo run --release --example exact_linear_algebra

use num_bigint::BigInt;
use num_rational::BigRational;

use latreg::exactalg::{hnf, invariant_factors, snf, solve_affine_map, sublattice_index, IntMatrix};

fn show(name: &str, m: &IntMatrix) {
    println!("{name}:");
    for r in 0..m.rows() {
        let row: Vec<String> = (0..m.cols()).map(|c| m.at(r, c).to_string()).collect();
        println!("  [ {} ]", row.join(" "));
    }
}

fn main() {
    let m = IntMatrix::from_i64_rows(&[&[4, 7, 2], &[2, 4, 6], &[0, 2, 10]]);
    show("m", &m);

    // column-style Hermite form: h = m * u with u unimodular
    let (h, u) = hnf(&m);
    show("hermite form h", &h);
    assert_eq!(m.mul(&u), h);
    assert!(u.is_unimodular());
    println!("h = m * u with det(u) = {}", u.det().expect("u is square"));

    // Smith form: s = u * m * v, the invariant factors on the diagonal
    let (s, p, q) = snf(&m);
    show("smith form s", &s);
    assert_eq!(p.mul(&m).mul(&q), s);
    let factors = invariant_factors(&m);
    println!("invariant factors: {factors:?}");
    println!("so Z^3 / m Z^3 has {} elements", &factors[0] * &factors[1] * &factors[2]);

    // the index of the sublattice those rows span
    let rows: Vec<Vec<BigInt>> = m.to_rows();
    let index = sublattice_index(&rows, 3).expect("full-rank rows");
    println!("sublattice index: {index}");

    // the unique affine map sending one triangle onto another, solved over
    // the rationals and exactly integral here
    let rat = |x: i64| BigRational::from_integer(BigInt::from(x));
    let src: Vec<Vec<BigRational>> =
        vec![vec![rat(0), rat(0)], vec![rat(1), rat(0)], vec![rat(0), rat(1)]];
    let dst: Vec<Vec<BigRational>> =
        vec![vec![rat(3), rat(5)], vec![rat(4), rat(5)], vec![rat(3), rat(6)]];
    let map = solve_affine_map(&src, &dst).expect("affinely independent source");
    for (a, b) in src.iter().zip(&dst) {
        assert_eq!(&map.apply(a), b);
    }
    println!("\nsolved map is lattice-affine: {}", map.is_lattice_affine());
    let inv = map.inverse();
    for (a, b) in src.iter().zip(&dst) {
        assert_eq!(&inv.apply(b), a);
    }
    println!("and its inverse undoes it on every sample point");
}
