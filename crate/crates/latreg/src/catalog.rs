//! Constructors for the complete list of elementary lattice-regular convex
//! lattice polytopes: the segment, the simplex series, three cube and three
//! cross-polytope variants, two hexagons, and two 24-cells. Each entry
//! carries independently derived expected invariants (volume, f-vector,
//! flag count) so verification never compares a computation against
//! itself. Also here: the circumscribed-cube construction for generalized
//! octahedra and the cube-to-24-cell derivation, which is how the 24-cell
//! entries are built in the first place.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::polytope::{int_value, polytope_to_json, Polytope};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Segment,
    Simplex,
    Cube,
    Cross,
    Hexagon,
    Cell24,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Segment => "segment",
            Family::Simplex => "simplex",
            Family::Cube => "cube",
            Family::Cross => "cross",
            Family::Hexagon => "hexagon",
            Family::Cell24 => "cell24",
        }
    }
}

/// One polytope of the classification, with the invariants it is expected
/// to have. `variant` is the family parameter: the lattice volume p for
/// simplices, 1..3 for cubes and crosses, 1..2 for hexagons and 24-cells.
/// Simplices allow any p ≥ 1 so that non-divisors can serve as negative
/// controls; `expected_regular` records whether p divides n + 1.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub family: Family,
    pub dim: usize,
    pub variant: u64,
    pub schlafli: String,
    pub polytope: Polytope,
    pub expected_volume: BigInt,
    pub expected_flag_count: usize,
    pub expected_f_vector: Vec<usize>,
    pub expected_regular: bool,
    /// Generating vectors, for cube entries only (base point the origin).
    pub generators: Option<Vec<Vec<BigInt>>>,
}

impl CatalogEntry {
    /// Short unique name, e.g. `simplex-3-p2` or `cube-4-v3`.
    pub fn label(&self) -> String {
        match self.family {
            Family::Segment => "segment-1".into(),
            Family::Simplex => format!("simplex-{}-p{}", self.dim, self.variant),
            _ => format!("{}-{}-v{}", self.family.name(), self.dim, self.variant),
        }
    }
}

fn factorial(n: usize) -> BigInt {
    let mut f = BigInt::from(1);
    for k in 2..=n {
        f *= k;
    }
    f
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let mut b = 1usize;
    for i in 0..k {
        b = b * (n - i) / (i + 1);
    }
    b
}

fn schlafli_string(parts: &[u32]) -> String {
    let inner: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
    format!("{{{}}}", inner.join(","))
}

fn basis_vector(n: usize, i: usize) -> Vec<BigInt> {
    let mut v = vec![BigInt::zero(); n];
    v[i] = BigInt::from(1);
    v
}

fn vec_add(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn vec_sub(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn vec_neg(a: &[BigInt]) -> Vec<BigInt> {
    a.iter().map(|x| -x).collect()
}

/// All 2^k subset sums of `generators` added to `base`, i.e. the vertex set
/// of the parallelepiped they span.
fn subset_sums(base: &[BigInt], generators: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let mut out = vec![base.to_vec()];
    for g in generators {
        let mut shifted: Vec<Vec<BigInt>> = out.iter().map(|v| vec_add(v, g)).collect();
        out.append(&mut shifted);
    }
    out
}

fn cube_generators(n: usize, variant: u64) -> Vec<Vec<BigInt>> {
    match variant {
        1 => (0..n).map(|i| basis_vector(n, i)).collect(),
        2 => {
            let mut gens: Vec<Vec<BigInt>> = (0..n - 1).map(|i| basis_vector(n, i)).collect();
            let mut diag = vec![BigInt::from(1); n];
            diag[n - 1] = BigInt::from(2);
            gens.push(diag);
            gens
        }
        3 => {
            let e1 = basis_vector(n, 0);
            let mut gens = vec![e1.clone()];
            for i in 1..n {
                let mut g = e1.clone();
                g[i] = BigInt::from(2);
                gens.push(g);
            }
            gens
        }
        _ => unreachable!("cube variants are 1..3"),
    }
}

fn cross_vertices(n: usize, variant: u64) -> Vec<Vec<BigInt>> {
    match variant {
        1 => (0..n)
            .flat_map(|i| {
                let e = basis_vector(n, i);
                [vec_neg(&e), e]
            })
            .collect(),
        2 => {
            let mut verts: Vec<Vec<BigInt>> = (0..n - 1)
                .flat_map(|i| {
                    let e = basis_vector(n, i);
                    [vec_neg(&e), e]
                })
                .collect();
            let mut diag = vec![BigInt::from(1); n];
            diag[n - 1] = BigInt::from(2);
            verts.push(vec_neg(&diag));
            verts.push(diag);
            verts
        }
        3 => {
            let origin = vec![BigInt::zero(); n];
            let e1 = basis_vector(n, 0);
            let mut verts = vec![origin.clone(), vec_neg(&e1)];
            for i in 1..n {
                let e = basis_vector(n, i);
                verts.push(vec_sub(&vec_neg(&e1), &e));
                verts.push(e);
            }
            verts
        }
        _ => unreachable!("cross variants are 1..3"),
    }
}

/// Construct one catalog entry. Parameter ranges: segment n = 1; simplex
/// n ≥ 2 with any p ≥ 1; cube n ≥ 2 for variants 1, 2 and n ≥ 3 for
/// variant 3; cross n ≥ 3, variants 1..3; hexagon n = 2, variants 1..2;
/// 24-cell n = 4, variants 1..2. Everything else is an argument error.
pub fn build(family: Family, n: usize, variant: u64) -> Result<CatalogEntry> {
    let arg = |msg: String| Err(Error::Argument(msg));
    match family {
        Family::Segment => {
            if n != 1 || variant != 1 {
                return arg(format!("the segment exists only as dimension 1 variant 1, got {n}/{variant}"));
            }
            let polytope =
                Polytope::from_vertices(1, vec![vec![BigInt::zero()], vec![BigInt::from(1)]])?;
            Ok(CatalogEntry {
                family,
                dim: 1,
                variant: 1,
                schlafli: "{}".into(),
                polytope,
                expected_volume: BigInt::from(1),
                expected_flag_count: 2,
                expected_f_vector: vec![2],
                expected_regular: true,
                generators: None,
            })
        }
        Family::Simplex => {
            if n < 2 {
                return arg(format!("simplices start at dimension 2, got {n}"));
            }
            if variant < 1 {
                return arg("simplex parameter p must be at least 1".into());
            }
            let p = variant;
            let mut verts = vec![vec![BigInt::zero(); n]];
            for i in 0..n - 1 {
                verts.push(basis_vector(n, i));
            }
            let mut apex = vec![BigInt::from(p - 1); n];
            apex[n - 1] = BigInt::from(p);
            verts.push(apex);
            let polytope = Polytope::from_vertices(n, verts)?;
            Ok(CatalogEntry {
                family,
                dim: n,
                variant,
                schlafli: schlafli_string(&vec![3; n - 1]),
                polytope,
                expected_volume: BigInt::from(p),
                expected_flag_count: (1..=n + 1).product(),
                expected_f_vector: (0..n).map(|d| binomial(n + 1, d + 1)).collect(),
                expected_regular: (n as u64 + 1) % p == 0,
                generators: None,
            })
        }
        Family::Cube => {
            if n < 2 || (variant == 3 && n < 3) {
                return arg(format!("cube variant {variant} is not defined in dimension {n}"));
            }
            if !(1..=3).contains(&variant) {
                return arg(format!("cube variants are 1..3, got {variant}"));
            }
            let gens = cube_generators(n, variant);
            let origin = vec![BigInt::zero(); n];
            let polytope = Polytope::from_vertices(n, subset_sums(&origin, &gens))?;
            let expected_volume = match variant {
                1 => factorial(n),
                2 => 2 * factorial(n),
                _ => BigInt::from(2).pow(n as u32 - 1) * factorial(n),
            };
            let mut parts = vec![4];
            parts.extend(vec![3; n - 2]);
            Ok(CatalogEntry {
                family,
                dim: n,
                variant,
                schlafli: schlafli_string(&parts),
                polytope,
                expected_volume,
                expected_flag_count: (1 << n) * (1..=n).product::<usize>(),
                expected_f_vector: (0..n).map(|d| (1 << (n - d)) * binomial(n, d)).collect(),
                expected_regular: true,
                generators: Some(gens),
            })
        }
        Family::Cross => {
            if n < 3 {
                return arg(format!("catalog cross-polytopes start at dimension 3, got {n}"));
            }
            if !(1..=3).contains(&variant) {
                return arg(format!("cross variants are 1..3, got {variant}"));
            }
            let polytope = Polytope::from_vertices(n, cross_vertices(n, variant))?;
            let expected_volume = match variant {
                1 => BigInt::from(2).pow(n as u32),
                2 => BigInt::from(2).pow(n as u32 + 1),
                _ => BigInt::from(2).pow(n as u32 - 1),
            };
            let mut parts = vec![3; n - 2];
            parts.push(4);
            Ok(CatalogEntry {
                family,
                dim: n,
                variant,
                schlafli: schlafli_string(&parts),
                polytope,
                expected_volume,
                expected_flag_count: (1 << n) * (1..=n).product::<usize>(),
                expected_f_vector: (0..n).map(|d| (1 << (d + 1)) * binomial(n, d + 1)).collect(),
                expected_regular: true,
                generators: None,
            })
        }
        Family::Hexagon => {
            if n != 2 || !(1..=2).contains(&variant) {
                return arg(format!("hexagons exist as dimension 2 variants 1..2, got {n}/{variant}"));
            }
            let dirs: [[i64; 2]; 3] = if variant == 1 {
                [[1, 0], [0, 1], [1, -1]]
            } else {
                [[2, 1], [1, 2], [1, -1]]
            };
            let mut verts = Vec::new();
            for d in dirs {
                let v: Vec<BigInt> = d.iter().map(|&x| BigInt::from(x)).collect();
                verts.push(vec_neg(&v));
                verts.push(v);
            }
            let polytope = Polytope::from_vertices(2, verts)?;
            Ok(CatalogEntry {
                family,
                dim: 2,
                variant,
                schlafli: "{6}".into(),
                polytope,
                expected_volume: BigInt::from(if variant == 1 { 6 } else { 18 }),
                expected_flag_count: 12,
                expected_f_vector: vec![6, 6],
                expected_regular: true,
                generators: None,
            })
        }
        Family::Cell24 => {
            if n != 4 || !(1..=2).contains(&variant) {
                return arg(format!("24-cells exist as dimension 4 variants 1..2, got {n}/{variant}"));
            }
            // the 24-cell of variant k is derived from the cube of variant
            // k + 1, the two cube families whose generator sum is even
            let cube = build(Family::Cube, 4, variant + 1)?;
            let polytope = derive_cell24(&cube)?
                .expect("cube variants 2 and 3 have even generator sums");
            Ok(CatalogEntry {
                family,
                dim: 4,
                variant,
                schlafli: "{3,4,3}".into(),
                polytope,
                // twice the source cube: the added pyramid over each of the
                // 8 facets has 1/8 of the cube's volume
                expected_volume: 2 * cube.expected_volume,
                expected_flag_count: 1152,
                expected_f_vector: vec![24, 96, 96, 24],
                expected_regular: true,
                generators: None,
            })
        }
    }
}

fn divisors(m: u64) -> Vec<u64> {
    (1..=m).filter(|d| m % d == 0).collect()
}

/// The classification list up to `max_dim`, in canonical order: the segment
/// in dimension 1; then per dimension the simplices (p over the divisors of
/// n + 1, ascending), cubes, crosses, hexagons, and 24-cells that exist
/// there. Dimensions 1..4 contribute 1, 6, 9, and 10 entries; every higher
/// dimension contributes its simplex divisors plus three cubes and three
/// crosses.
pub fn all_entries(max_dim: usize) -> Vec<CatalogEntry> {
    let mut out = Vec::new();
    let entry = |f, n, v| build(f, n, v).expect("catalog ranges are valid");
    if max_dim >= 1 {
        out.push(entry(Family::Segment, 1, 1));
    }
    for n in 2..=max_dim {
        for p in divisors(n as u64 + 1) {
            out.push(entry(Family::Simplex, n, p));
        }
        out.push(entry(Family::Cube, n, 1));
        out.push(entry(Family::Cube, n, 2));
        if n >= 3 {
            out.push(entry(Family::Cube, n, 3));
            for v in 1..=3 {
                out.push(entry(Family::Cross, n, v));
            }
        }
        if n == 2 {
            out.push(entry(Family::Hexagon, 2, 1));
            out.push(entry(Family::Hexagon, 2, 2));
        }
        if n == 4 {
            out.push(entry(Family::Cell24, 4, 1));
            out.push(entry(Family::Cell24, 4, 2));
        }
    }
    out
}

/// The cube circumscribed about a generalized octahedron: if the vertices
/// of `p` split into dim-many antipodal pairs with a common midpoint A, the
/// result is the cube with corners A ± AV₁ ± … ± AVₙ over one vertex Vᵢ per
/// pair. Fails with a not-an-octahedron error when no such pairing exists,
/// and with a degeneracy error when A sits off the lattice in a way that
/// makes some corner non-integral — pass the 2-multiple in that case.
pub fn octa_cube(p: &Polytope) -> Result<Polytope> {
    if !p.is_full_dimensional() {
        return Err(Error::Dimension(
            "the circumscribed cube needs a full-dimensional polytope; reduce through hull coordinates first".into(),
        ));
    }
    let n = p.dim();
    let verts = p.vertices();
    if n == 0 || verts.len() != 2 * n {
        return Err(Error::NotAnOctahedron(format!(
            "a generalized octahedron of dimension {} has {} vertices, got {}",
            n,
            2 * n,
            verts.len()
        )));
    }
    // antipodal pairing forces the first and last vertex together, which
    // fixes the doubled midpoint; every other vertex must then have its
    // mirror image in the vertex set
    let mid2 = vec_add(&verts[0], &verts[verts.len() - 1]);
    let mut paired = vec![false; verts.len()];
    let mut dirs2: Vec<Vec<BigInt>> = Vec::with_capacity(n);
    for i in 0..verts.len() {
        if paired[i] {
            continue;
        }
        let partner = vec_sub(&mid2, &verts[i]);
        let j = verts
            .binary_search(&partner)
            .map_err(|_| Error::NotAnOctahedron(format!(
                "vertex {:?} has no antipodal partner about the common midpoint",
                verts[i]
            )))?;
        if j == i || paired[j] {
            return Err(Error::NotAnOctahedron(
                "vertex pairing about the midpoint is inconsistent".into(),
            ));
        }
        paired[i] = true;
        paired[j] = true;
        dirs2.push(vec_sub(&verts[i], &partner));
    }
    debug_assert_eq!(dirs2.len(), n);
    let mut corners = Vec::with_capacity(1 << n);
    for mask in 0u32..(1 << n) {
        let mut c2 = mid2.clone();
        for (i, d) in dirs2.iter().enumerate() {
            if mask & (1 << i) != 0 {
                c2 = vec_add(&c2, d);
            } else {
                c2 = vec_sub(&c2, d);
            }
        }
        if c2.iter().any(|x| x.is_odd()) {
            return Err(Error::Degenerate(
                "a circumscribed-cube corner is not a lattice point; take the 2-multiple first".into(),
            ));
        }
        corners.push(c2.into_iter().map(|x| x / 2).collect());
    }
    Polytope::from_vertices(n, corners)
}

/// The 24-cell inscribed over a 4-cube entry: the 16 cube vertices plus the
/// 8 points O + ½(v₁+v₂+v₃+v₄) ± vⱼ, provided those are lattice points —
/// which happens exactly when the generator sum is even. Returns `None`
/// otherwise; errors when the entry is not a 4-dimensional cube.
pub fn derive_cell24(entry: &CatalogEntry) -> Result<Option<Polytope>> {
    if entry.family != Family::Cube || entry.dim != 4 {
        return Err(Error::Argument(format!(
            "the 24-cell derivation needs a 4-dimensional cube entry, got {}",
            entry.label()
        )));
    }
    let gens = entry.generators.as_ref().expect("cube entries carry generators");
    let mut total = vec![BigInt::zero(); 4];
    for g in gens {
        total = vec_add(&total, g);
    }
    if total.iter().any(|x| x.is_odd()) {
        return Ok(None);
    }
    let center: Vec<BigInt> = total.iter().map(|x| x / 2).collect();
    let mut verts = entry.polytope.vertices().to_vec();
    for g in gens {
        verts.push(vec_add(&center, g));
        verts.push(vec_sub(&center, g));
    }
    Ok(Some(Polytope::from_vertices(4, verts)?))
}

/// One catalog entry as JSON, with the polytope in the standard exchange
/// format and the expected invariants alongside.
pub fn entry_json(e: &CatalogEntry) -> Value {
    let mut expected = serde_json::Map::new();
    expected.insert("lattice_volume".into(), int_value(&e.expected_volume));
    expected.insert("flag_count".into(), Value::from(e.expected_flag_count));
    let mut obj = serde_json::Map::new();
    obj.insert("family".into(), Value::from(e.family.name()));
    obj.insert("dim".into(), Value::from(e.dim));
    obj.insert("variant".into(), Value::from(e.variant));
    obj.insert("schlafli".into(), Value::from(e.schlafli.clone()));
    obj.insert("polytope".into(), polytope_to_json(&e.polytope));
    obj.insert("expected".into(), Value::Object(expected));
    Value::Object(obj)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symmetry::are_congruent;

    fn bi(x: i64) -> BigInt {
        BigInt::from(x)
    }

    fn pts(raw: &[&[i64]]) -> Vec<Vec<BigInt>> {
        raw.iter().map(|p| p.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    fn poly(ambient: usize, raw: &[&[i64]]) -> Polytope {
        Polytope::from_vertices(ambient, pts(raw)).unwrap()
    }

    #[test]
    fn entry_counts_per_dimension() {
        assert_eq!(all_entries(1).len(), 1);
        assert_eq!(all_entries(2).len(), 7);
        assert_eq!(all_entries(3).len(), 16);
        assert_eq!(all_entries(4).len(), 26);
        assert_eq!(all_entries(5).len(), 36);
        let counts: Vec<usize> =
            (1..=5).map(|d| all_entries(5).iter().filter(|e| e.dim == d).count()).collect();
        assert_eq!(counts, vec![1, 6, 9, 10, 10]);
    }

    #[test]
    fn labels_are_unique() {
        let entries = all_entries(6);
        let mut labels: Vec<String> = entries.iter().map(|e| e.label()).collect();
        labels.sort();
        labels.dedup();
        assert_eq!(labels.len(), entries.len());
    }

    #[test]
    fn simplex_vertices_and_volume() {
        let e = build(Family::Simplex, 3, 2).unwrap();
        assert_eq!(
            e.polytope.vertices(),
            pts(&[&[0, 0, 0], &[0, 1, 0], &[1, 0, 0], &[1, 1, 2]])
        );
        assert_eq!(e.polytope.lattice_volume(), bi(2));
        assert!(e.expected_regular);
        let controls = build(Family::Simplex, 3, 3).unwrap();
        assert!(!controls.expected_regular);
        assert_eq!(controls.polytope.lattice_volume(), bi(3));
    }

    #[test]
    fn skew_cube_generators_and_volume() {
        let e = build(Family::Cube, 3, 3).unwrap();
        assert_eq!(
            e.generators.as_deref().unwrap(),
            pts(&[&[1, 0, 0], &[1, 2, 0], &[1, 0, 2]])
        );
        assert_eq!(e.polytope.lattice_volume(), bi(24));
        assert_eq!(e.polytope.vertices().len(), 8);
    }

    #[test]
    fn computed_invariants_match_expected_up_to_dim_four() {
        for e in all_entries(4) {
            assert_eq!(e.polytope.dim(), e.dim, "{}", e.label());
            assert_eq!(e.polytope.lattice_volume(), e.expected_volume, "{}", e.label());
            assert_eq!(e.polytope.f_vector(), e.expected_f_vector, "{}", e.label());
            assert_eq!(e.polytope.flags().len(), e.expected_flag_count, "{}", e.label());
        }
    }

    #[test]
    fn dimension_five_volumes_match_expected() {
        for e in all_entries(5).into_iter().filter(|e| e.dim == 5) {
            assert_eq!(e.polytope.lattice_volume(), e.expected_volume, "{}", e.label());
        }
    }

    #[test]
    fn schlafli_symbols_render() {
        let entries = all_entries(5);
        let find = |label: &str| {
            entries.iter().find(|e| e.label() == label).unwrap().schlafli.clone()
        };
        assert_eq!(find("segment-1"), "{}");
        assert_eq!(find("simplex-2-p1"), "{3}");
        assert_eq!(find("simplex-5-p6"), "{3,3,3,3}");
        assert_eq!(find("cube-2-v1"), "{4}");
        assert_eq!(find("cube-4-v3"), "{4,3,3}");
        assert_eq!(find("cross-5-v2"), "{3,3,3,4}");
        assert_eq!(find("hexagon-2-v2"), "{6}");
        assert_eq!(find("cell24-4-v1"), "{3,4,3}");
    }

    #[test]
    fn out_of_range_parameters_are_rejected() {
        assert!(matches!(build(Family::Segment, 2, 1), Err(Error::Argument(_))));
        assert!(matches!(build(Family::Simplex, 1, 1), Err(Error::Argument(_))));
        assert!(matches!(build(Family::Simplex, 3, 0), Err(Error::Argument(_))));
        assert!(matches!(build(Family::Cube, 2, 3), Err(Error::Argument(_))));
        assert!(matches!(build(Family::Cube, 3, 4), Err(Error::Argument(_))));
        assert!(matches!(build(Family::Cross, 2, 1), Err(Error::Argument(_))));
        assert!(matches!(build(Family::Hexagon, 3, 1), Err(Error::Argument(_))));
        assert!(matches!(build(Family::Cell24, 4, 3), Err(Error::Argument(_))));
        assert!(matches!(build(Family::Cell24, 3, 1), Err(Error::Argument(_))));
    }

    #[test]
    fn cell24_derivation_examples() {
        let c1 = build(Family::Cube, 4, 1).unwrap();
        assert_eq!(derive_cell24(&c1).unwrap(), None);

        let c2 = build(Family::Cube, 4, 2).unwrap();
        let d2 = derive_cell24(&c2).unwrap().unwrap();
        assert_eq!(d2, build(Family::Cell24, 4, 1).unwrap().polytope);
        assert_eq!(d2.vertices().len(), 24);
        assert_eq!(d2.lattice_volume(), bi(96));

        let c3 = build(Family::Cube, 4, 3).unwrap();
        let d3 = derive_cell24(&c3).unwrap().unwrap();
        assert_eq!(d3, build(Family::Cell24, 4, 2).unwrap().polytope);
        assert_eq!(d3.lattice_volume(), bi(384));

        let seg = build(Family::Segment, 1, 1).unwrap();
        assert!(matches!(derive_cell24(&seg), Err(Error::Argument(_))));
    }

    #[test]
    fn octa_cube_of_the_unit_cross() {
        let cross = build(Family::Cross, 3, 1).unwrap();
        let cube = octa_cube(&cross.polytope).unwrap();
        let mut want: Vec<Vec<BigInt>> = Vec::new();
        for x in [-1i64, 1] {
            for y in [-1i64, 1] {
                for z in [-1i64, 1] {
                    want.push(vec![bi(x), bi(y), bi(z)]);
                }
            }
        }
        want.sort();
        assert_eq!(cube.vertices(), want);
        // and that box is the 2-multiple of the axis cube, translated
        let doubled = build(Family::Cube, 3, 1).unwrap().polytope.multiple(2).unwrap();
        assert!(are_congruent(&cube, &doubled).is_some());
    }

    #[test]
    fn octa_cube_of_the_two_dimensional_diamond() {
        let diamond = poly(2, &[&[1, 0], &[0, 1], &[-1, 0], &[0, -1]]);
        let cube = octa_cube(&diamond).unwrap();
        assert_eq!(cube.vertices(), pts(&[&[-1, -1], &[-1, 1], &[1, -1], &[1, 1]]));
    }

    #[test]
    fn octa_cube_rejects_non_octahedra() {
        let triangle = poly(2, &[&[0, 0], &[1, 0], &[0, 1]]);
        assert!(matches!(octa_cube(&triangle), Err(Error::NotAnOctahedron(_))));
        let skew = poly(2, &[&[0, 0], &[1, 0], &[0, 1], &[3, 3]]);
        assert!(matches!(octa_cube(&skew), Err(Error::NotAnOctahedron(_))));
        let flat = poly(2, &[&[0, 0], &[2, 2]]);
        assert!(matches!(octa_cube(&flat), Err(Error::Dimension(_))));
    }

    #[test]
    fn octa_cube_with_half_lattice_center_needs_the_double() {
        // the unit square is a 2-dimensional octahedron about (1/2, 1/2);
        // its circumscribed square has half-integer corners
        let square = poly(2, &[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        assert!(matches!(octa_cube(&square), Err(Error::Degenerate(_))));
        // the doubled square has center (1,1) and semi-diagonals (1,1) and
        // (1,-1), so its circumscribed square stands on those diagonals
        let doubled = square.multiple(2).unwrap();
        let cube = octa_cube(&doubled).unwrap();
        assert_eq!(cube.vertices(), pts(&[&[-1, 1], &[1, -1], &[1, 3], &[3, 1]]));
    }

    #[test]
    fn octa_cube_of_skew_crosses_lands_on_skew_cubes() {
        // the cross of variant 2 is centered at the origin, so its
        // circumscribed cube is lattice as is; variant 3 is centered at
        // (-1/2, 0, 0) and needs the 2-multiple
        let cross2 = build(Family::Cross, 3, 2).unwrap().polytope;
        let c2 = octa_cube(&cross2).unwrap();
        assert_eq!(c2.lattice_volume(), bi(96));
        let cube2 = build(Family::Cube, 3, 2).unwrap().polytope.multiple(2).unwrap();
        assert!(are_congruent(&c2, &cube2).is_some());

        let cross3 = build(Family::Cross, 3, 3).unwrap().polytope.multiple(2).unwrap();
        let c3 = octa_cube(&cross3).unwrap();
        let cube3 = build(Family::Cube, 3, 3).unwrap().polytope.multiple(2).unwrap();
        assert!(are_congruent(&c3, &cube3).is_some());
    }

    #[test]
    fn cell24_in_symmetric_coordinates_is_the_same_pair() {
        // the same two 24-cells built on another tetrad of generators: the
        // vertex set is +-w_i together with (+-w_1 +-w_2 +-w_3 +-w_4)/2,
        // which is integral because each tetrad has even sum
        fn build_on(ws: [[i64; 4]; 4]) -> Polytope {
            let mut verts: Vec<Vec<BigInt>> = Vec::new();
            for w in ws {
                let v: Vec<BigInt> = w.iter().map(|&x| BigInt::from(x)).collect();
                verts.push(v.iter().map(|x| -x).collect());
                verts.push(v);
            }
            for mask in 0..16u32 {
                let mut v = [0i64; 4];
                for (i, w) in ws.iter().enumerate() {
                    let s = if mask & (1 << i) != 0 { 1 } else { -1 };
                    for j in 0..4 {
                        v[j] += s * w[j];
                    }
                }
                assert!(v.iter().all(|x| x % 2 == 0), "tetrad sum must be even");
                verts.push(v.iter().map(|&x| BigInt::from(x / 2)).collect());
            }
            Polytope::from_vertices(4, verts).unwrap()
        }

        let a = build_on([[0, 1, 1, 1], [1, 1, 0, 1], [1, 0, 1, 1], [0, 0, 0, 1]]);
        assert!(a.is_elementary());
        assert_eq!(a.lattice_volume(), bi(96));
        assert!(are_congruent(&a, &build(Family::Cell24, 4, 1).unwrap().polytope).is_some());
        assert!(are_congruent(&a, &build(Family::Cell24, 4, 2).unwrap().polytope).is_none());

        let b = build_on([[1, 1, 1, 1], [1, -1, 1, 1], [1, 1, -1, 1], [1, 1, 1, -1]]);
        assert!(b.is_elementary());
        assert_eq!(b.lattice_volume(), bi(384));
        assert!(are_congruent(&b, &build(Family::Cell24, 4, 2).unwrap().polytope).is_some());
    }

    #[test]
    fn entry_json_shape() {
        let e = build(Family::Hexagon, 2, 2).unwrap();
        let v = entry_json(&e);
        assert_eq!(v["family"], "hexagon");
        assert_eq!(v["dim"], 2);
        assert_eq!(v["variant"], 2);
        assert_eq!(v["schlafli"], "{6}");
        assert_eq!(v["expected"]["lattice_volume"], 18);
        assert_eq!(v["expected"]["flag_count"], 12);
        assert_eq!(v["polytope"]["ambient_dim"], 2);
    }
}
