use std::collections::HashSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::chart::Chart;

/// A facet found by gift wrapping: the inward primitive normal, its offset
/// (`<normal, x> >= offset` over all points, equality on the facet), and the
/// sorted indices of every input point lying on the facet hyperplane.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Facet {
    pub vertices: Vec<usize>,
    pub normal: Vec<BigInt>,
    pub offset: BigInt,
}

pub(crate) fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn negate(v: &mut [BigInt]) {
    for x in v.iter_mut() {
        *x = -std::mem::take(x);
    }
}

/// Divide an integer vector by the gcd of its entries (no sign change).
fn make_primitive(v: &mut [BigInt]) {
    let mut g = BigInt::zero();
    for x in v.iter() {
        g = g.gcd(x);
    }
    assert!(!g.is_zero(), "cannot normalize the zero vector");
    for x in v.iter_mut() {
        *x = &*x / &g;
    }
}

fn parallel(u: &[BigInt], v: &[BigInt]) -> bool {
    debug_assert_eq!(u.len(), v.len());
    for i in 0..u.len() {
        for j in (i + 1)..u.len() {
            if &u[i] * &v[j] != &u[j] * &v[i] {
                return false;
            }
        }
    }
    true
}

/// Gauss-Jordan elimination over the integers by cross-multiplication,
/// each altered row divided by its content to keep entries small. Leaves
/// every pivot column zero outside its pivot row and returns the pivot
/// columns. Fraction-free: rationals would pay a gcd on every multiply,
/// and this runs in the innermost loop of the wrapping.
fn int_jordan(rows: &mut [Vec<BigInt>], width: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..width {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let a = rows[r][col].clone();
        for i in 0..rows.len() {
            if i == r || rows[i][col].is_zero() {
                continue;
            }
            let b = rows[i][col].clone();
            for c in 0..width {
                rows[i][c] = &a * &rows[i][c] - &b * &rows[r][c];
            }
            reduce_content(&mut rows[i]);
        }
        pivots.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    pivots
}

/// Divide a row by the gcd of its entries, if that gains anything.
pub(crate) fn reduce_content(row: &mut [BigInt]) {
    let mut g = BigInt::zero();
    for x in row.iter() {
        g = g.gcd(x);
    }
    if g > BigInt::from(1) {
        for x in row.iter_mut() {
            *x = &*x / &g;
        }
    }
}

/// Rank of a set of integer row vectors.
pub(crate) fn int_rank(rows: &[Vec<BigInt>], width: usize) -> usize {
    let mut m = rows.to_vec();
    int_jordan(&mut m, width).len()
}

/// Primitive integer basis of `{x : rows * x = 0}`.
pub(crate) fn nullspace(rows: &[Vec<BigInt>], width: usize) -> Vec<Vec<BigInt>> {
    let mut m = rows.to_vec();
    let pivots = int_jordan(&mut m, width);
    let free: Vec<usize> = (0..width).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            // After Jordan elimination row j reads d_j * x[pc_j] + e_j * x[fc]
            // (+ other free terms, zero here), so x[fc] = lcm |d_j| clears
            // every denominator at once.
            let mut l = BigInt::from(1);
            for (j, &pc) in pivots.iter().enumerate() {
                l = l.lcm(&m[j][pc]);
            }
            let mut v = vec![BigInt::zero(); width];
            for (j, &pc) in pivots.iter().enumerate() {
                v[pc] = -(&m[j][fc] * (&l / &m[j][pc]));
            }
            v[fc] = l;
            make_primitive(&mut v);
            v
        })
        .collect()
}

/// Offset and equality set of the supporting hyperplane with normal `psi`.
fn support(points: &[Vec<BigInt>], psi: &[BigInt]) -> (BigInt, Vec<usize>) {
    let values: Vec<BigInt> = points.iter().map(|p| dot(psi, p)).collect();
    let c = values.iter().min().expect("nonempty point set").clone();
    let on = (0..points.len()).filter(|&i| values[i] == c).collect();
    (c, on)
}

/// Enumerate the facets of the convex hull of a full-dimensional point set
/// in dimension `k >= 1` by exact gift wrapping: find one facet by rotating
/// a supporting hyperplane until its touching set is (k-1)-dimensional, then
/// breadth-first pivot across ridges until the facet graph is exhausted.
/// Points may include non-extreme members; each facet's vertex list contains
/// every input point on its hyperplane.
pub(crate) fn wrap(points: &[Vec<BigInt>], k: usize) -> Vec<Facet> {
    assert!(k >= 1);
    debug_assert!(points.iter().all(|p| p.len() == k));
    if k == 1 {
        let min = points.iter().map(|p| p[0].clone()).min().expect("nonempty point set");
        let max = points.iter().map(|p| p[0].clone()).max().expect("nonempty point set");
        assert!(min != max, "point set must span dimension 1");
        let lo = (0..points.len()).filter(|&i| points[i][0] == min).collect();
        let hi = (0..points.len()).filter(|&i| points[i][0] == max).collect();
        let mut facets = vec![
            Facet { vertices: lo, normal: vec![BigInt::from(1)], offset: min.clone() },
            Facet { vertices: hi, normal: vec![BigInt::from(-1)], offset: -max.clone() },
        ];
        facets.sort_by(|a, b| (&a.vertices, &a.normal).cmp(&(&b.vertices, &b.normal)));
        return facets;
    }

    let first = initial_facet(points, k);
    let mut seen: HashSet<(Vec<BigInt>, BigInt)> = HashSet::new();
    seen.insert((first.normal.clone(), first.offset.clone()));
    let mut facets = vec![first];
    let mut head = 0;
    while head < facets.len() {
        let facet = facets[head].clone();
        head += 1;
        // every ridge pivot reads the same facet heights, so take the dot
        // products once
        let heights: Vec<BigInt> =
            points.iter().map(|p| dot(&facet.normal, p) - &facet.offset).collect();
        for ridge in facet_ridges(points, k, &facet) {
            let (normal, offset) = pivot(points, &facet, &heights, &ridge);
            if seen.insert((normal.clone(), offset.clone())) {
                let (c, on) = support(points, &normal);
                debug_assert_eq!(c, offset);
                facets.push(Facet { vertices: on, normal, offset });
            }
        }
    }
    facets.sort_by(|a, b| (&a.vertices, &a.normal).cmp(&(&b.vertices, &b.normal)));
    facets
}

/// One facet of the hull: start from a coordinate supporting hyperplane and
/// rotate until the touching set has affine dimension k-1.
fn initial_facet(points: &[Vec<BigInt>], k: usize) -> Facet {
    let mut phi = vec![BigInt::zero(); k];
    phi[0] = BigInt::from(1);
    let (mut offset, mut on) = support(points, &phi);
    loop {
        let t0 = &points[on[0]];
        let diffs: Vec<Vec<BigInt>> = on[1..]
            .iter()
            .map(|&i| points[i].iter().zip(t0).map(|(a, b)| a - b).collect())
            .collect();
        if int_rank(&diffs, k) == k - 1 {
            return Facet { vertices: on, normal: phi, offset };
        }
        let basis = nullspace(&diffs, k);
        let mut psi = basis
            .into_iter()
            .find(|v| !parallel(v, &phi))
            .expect("touching set of dimension < k-1 leaves room to rotate");
        let base = dot(&psi, t0);
        if !points.iter().any(|p| dot(&psi, p) < base) {
            negate(&mut psi);
        }
        let heights: Vec<BigInt> = points.iter().map(|p| dot(&phi, p) - &offset).collect();
        let (normal, c) = rotate_to_next(points, &phi, &heights, &psi, t0);
        phi = normal;
        offset = c;
        on = support(points, &phi).1;
    }
}

/// Given a supporting hyperplane `phi` (touching t0, nonnegative point
/// heights precomputed by the caller) and a rotation direction `psi`
/// vanishing on the touching set with some point strictly on its negative
/// side, return the next supporting hyperplane `phi + theta*psi` (made
/// primitive) together with its offset.
fn rotate_to_next(
    points: &[Vec<BigInt>],
    phi: &[BigInt],
    heights: &[BigInt],
    psi: &[BigInt],
    t0: &[BigInt],
) -> (Vec<BigInt>, BigInt) {
    let psi_base = dot(psi, t0);
    // theta = min of a / (-b) over the exposed points, kept as an unreduced
    // fraction with positive denominator: cross-multiplied comparisons skip
    // the gcd a rational type would pay per candidate, and this is the
    // innermost loop of the wrapping.
    let mut theta: Option<(BigInt, BigInt)> = None;
    for (p, a) in points.iter().zip(heights) {
        let b = dot(psi, p) - &psi_base;
        if b.is_negative() {
            let nb = -b;
            if theta.as_ref().map_or(true, |(tn, td)| a * td < tn * &nb) {
                theta = Some((a.clone(), nb));
            }
        }
    }
    let (tn, td) = theta.expect("rotation direction must expose a point");
    // phi + theta*psi, cleared of the denominator (td > 0 keeps the side)
    let mut normal: Vec<BigInt> = phi.iter().zip(psi).map(|(f, s)| &td * f + &tn * s).collect();
    make_primitive(&mut normal);
    let c = dot(&normal, t0);
    (normal, c)
}

/// Ridges of a facet, as sorted global point-index sets: wrap the facet's
/// points in their own hull coordinates one dimension down.
fn facet_ridges(points: &[Vec<BigInt>], k: usize, facet: &Facet) -> Vec<Vec<usize>> {
    let sub_ambient: Vec<Vec<BigInt>> =
        facet.vertices.iter().map(|&i| points[i].clone()).collect();
    let chart = Chart::new(&sub_ambient);
    debug_assert_eq!(chart.dim(), k - 1);
    let sub: Vec<Vec<BigInt>> = sub_ambient
        .iter()
        .map(|p| chart.to_hull(p).expect("facet points lie on their own hull"))
        .collect();
    wrap(&sub, k - 1)
        .into_iter()
        .map(|sf| sf.vertices.into_iter().map(|j| facet.vertices[j]).collect())
        .collect()
}

/// The other facet through a ridge: rotate the facet normal around the
/// ridge's affine hull, away from the facet, until it supports again.
/// `heights` are the facet heights `<normal, p> - offset` of every point.
fn pivot(
    points: &[Vec<BigInt>],
    facet: &Facet,
    heights: &[BigInt],
    ridge: &[usize],
) -> (Vec<BigInt>, BigInt) {
    let k = facet.normal.len();
    let r0 = &points[ridge[0]];
    let diffs: Vec<Vec<BigInt>> = ridge[1..]
        .iter()
        .map(|&i| points[i].iter().zip(r0).map(|(a, b)| a - b).collect())
        .collect();
    let basis = nullspace(&diffs, k);
    debug_assert_eq!(basis.len(), 2, "a ridge has a 2-dimensional normal space");
    let mut eta = basis
        .into_iter()
        .find(|v| !parallel(v, &facet.normal))
        .expect("ridge normal space exceeds the facet normal");
    // Fix the sign so eta is positive on the facet's points off the ridge;
    // the rotation then peels the hyperplane off the current facet.
    let eta_base = dot(&eta, r0);
    let side = facet
        .vertices
        .iter()
        .map(|&i| dot(&eta, &points[i]) - &eta_base)
        .find(|d| !d.is_zero())
        .expect("a facet strictly contains its ridge");
    if side.is_negative() {
        negate(&mut eta);
    }
    // If no point lies on eta's negative side, eta sits inside the ridge's
    // normal cone; sliding it past the facet normal lands it outside while
    // keeping its values on the facet unchanged.
    let eta_base = dot(&eta, r0);
    if !points.iter().any(|p| dot(&eta, p) < eta_base) {
        let lambda = points
            .iter()
            .zip(heights)
            .filter_map(|(p, a)| {
                if a.is_positive() {
                    Some((dot(&eta, p) - &eta_base).div_floor(a))
                } else {
                    None
                }
            })
            .max()
            .expect("a full-dimensional hull has points off any facet")
            + 1;
        for (e, f) in eta.iter_mut().zip(&facet.normal) {
            *e -= &lambda * f;
        }
        debug_assert!(points.iter().any(|p| dot(&eta, p) < dot(&eta, r0)));
    }
    rotate_to_next(points, &facet.normal, heights, &eta, r0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(raw: &[&[i64]]) -> Vec<Vec<BigInt>> {
        raw.iter().map(|p| p.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    fn normals(facets: &[Facet]) -> Vec<(Vec<BigInt>, BigInt)> {
        let mut v: Vec<_> =
            facets.iter().map(|f| (f.normal.clone(), f.offset.clone())).collect();
        v.sort();
        v
    }

    #[test]
    fn segment_facets() {
        let facets = wrap(&pts(&[&[2], &[5], &[3]]), 1);
        assert_eq!(facets.len(), 2);
        assert_eq!(
            normals(&facets),
            vec![
                (vec![BigInt::from(-1)], BigInt::from(-5)),
                (vec![BigInt::from(1)], BigInt::from(2)),
            ]
        );
    }

    #[test]
    fn unit_square_facets() {
        let facets = wrap(&pts(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]), 2);
        assert_eq!(facets.len(), 4);
        assert_eq!(
            normals(&facets),
            vec![
                (pts(&[&[-1, 0]])[0].clone(), BigInt::from(-1)),
                (pts(&[&[0, -1]])[0].clone(), BigInt::from(-1)),
                (pts(&[&[0, 1]])[0].clone(), BigInt::from(0)),
                (pts(&[&[1, 0]])[0].clone(), BigInt::from(0)),
            ]
        );
        for f in &facets {
            assert_eq!(f.vertices.len(), 2);
        }
    }

    #[test]
    fn triangle_with_edge_midpoint() {
        let p = pts(&[&[0, 0], &[1, 0], &[2, 0], &[0, 2]]);
        let facets = wrap(&p, 2);
        assert_eq!(facets.len(), 3);
        // the bottom edge carries the midpoint (1,0) as well
        let bottom = facets
            .iter()
            .find(|f| f.normal == pts(&[&[0, 1]])[0])
            .expect("bottom edge present");
        assert_eq!(bottom.vertices, vec![0, 1, 2]);
    }

    #[test]
    fn cube_facets() {
        let mut cube = Vec::new();
        for i in 0..8i64 {
            cube.push(vec![
                BigInt::from(i & 1),
                BigInt::from((i >> 1) & 1),
                BigInt::from((i >> 2) & 1),
            ]);
        }
        let facets = wrap(&cube, 3);
        assert_eq!(facets.len(), 6);
        for f in &facets {
            assert_eq!(f.vertices.len(), 4);
        }
    }

    #[test]
    fn octahedron_facets() {
        let p = pts(&[
            &[1, 0, 0],
            &[-1, 0, 0],
            &[0, 1, 0],
            &[0, -1, 0],
            &[0, 0, 1],
            &[0, 0, -1],
        ]);
        let facets = wrap(&p, 3);
        assert_eq!(facets.len(), 8);
        for f in &facets {
            assert_eq!(f.vertices.len(), 3);
            assert!(f.normal.iter().all(|x| x.abs() == BigInt::from(1)));
            assert_eq!(f.offset, BigInt::from(-1));
        }
    }

    #[test]
    fn interior_points_lie_on_no_facet() {
        let p = pts(&[&[0, 0], &[4, 0], &[0, 4], &[4, 4], &[1, 1], &[2, 3]]);
        let facets = wrap(&p, 2);
        assert_eq!(facets.len(), 4);
        for f in &facets {
            assert!(!f.vertices.contains(&4));
            assert!(!f.vertices.contains(&5));
        }
    }

    #[test]
    fn nullspace_of_empty_rows_is_standard_basis() {
        let b = nullspace(&[], 3);
        assert_eq!(b.len(), 3);
        assert_eq!(int_rank(&b, 3), 3);
    }

    #[test]
    fn simplex_facet_normals_are_primitive() {
        // big-coordinate simplex: normals come out primitive even when the
        // naive cross products would not be
        let p = pts(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[3, 3, 4]]);
        let facets = wrap(&p, 3);
        assert_eq!(facets.len(), 4);
        for f in &facets {
            let mut g = BigInt::zero();
            for x in &f.normal {
                g = g.gcd(x);
            }
            assert_eq!(g, BigInt::from(1));
            // supporting: every point on the non-negative side
            for q in &p {
                assert!(dot(&f.normal, q) >= f.offset);
            }
        }
    }
}
