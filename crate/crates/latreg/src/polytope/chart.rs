use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::wrap::reduce_content;
use crate::exactalg::{hnf, snf, AffineMap, IntMatrix};

/// Coordinates for the saturated lattice of a point set's affine hull.
///
/// `embed` is a unimodular affine map of the ambient space that carries the
/// coordinate subspace `Z^dim x {0}` onto the affine hull, so hull
/// coordinates of an ambient point are the first `dim` entries of
/// `embed^-1(p)` (the rest are zero exactly when `p` lies on the hull).
/// The basis of the hull lattice is column-HNF reduced, which makes the
/// chart canonical for a given vertex set. Full-dimensional point sets get
/// the identity chart.
#[derive(Clone, Debug)]
pub(crate) struct Chart {
    dim: usize,
    embed: AffineMap,
    fwd_linear: IntMatrix,
    fwd_translation: Vec<BigInt>,
}

impl Chart {
    pub fn new(points: &[Vec<BigInt>]) -> Chart {
        assert!(!points.is_empty(), "chart requires at least one point");
        let n = points[0].len();
        let v0 = points.iter().min().expect("nonempty").clone();
        // The saturation depends only on the affine span, so an independent
        // spanning subset of the differences carries everything the Smith
        // reduction needs; one column per vertex would cost far more here,
        // and charts are built once per facet of the recursive wrapping.
        let diffs = spanning_diffs(points, &v0);
        if n == 0 || diffs.is_empty() {
            // A single point; its hull is zero-dimensional.
            return Chart::from_basis(IntMatrix::identity(n), v0, 0);
        }
        let r = diffs.len();
        if r == n {
            return Chart::from_basis(IntMatrix::identity(n), vec![BigInt::zero(); n], n);
        }
        // Columns of d span the difference lattice; the first r columns of
        // u^-1 from its Smith decomposition form a basis of the saturation.
        let mut d = IntMatrix::zero(n, r);
        for (j, c) in diffs.iter().enumerate() {
            for i in 0..n {
                *d.at_mut(i, j) = c[i].clone();
            }
        }
        let (s, u, _) = snf(&d);
        debug_assert!((0..r).all(|i| !s.at(i, i).is_zero()));
        let u_inv = unimodular_inverse(&u);
        let mut b = IntMatrix::zero(n, r);
        for i in 0..n {
            for j in 0..r {
                *b.at_mut(i, j) = u_inv.at(i, j).clone();
            }
        }
        // HNF-reduce the saturation basis so the chart is canonical, then
        // complete it with the remaining columns of u^-1 to a unimodular map.
        let (bh, _) = hnf(&b);
        let mut m = IntMatrix::zero(n, n);
        for i in 0..n {
            for j in 0..r {
                *m.at_mut(i, j) = bh.at(i, j).clone();
            }
            for j in r..n {
                *m.at_mut(i, j) = u_inv.at(i, j).clone();
            }
        }
        // from_basis re-derives unimodularity when it inverts m
        Chart::from_basis(m, v0, r)
    }

    fn from_basis(back: IntMatrix, back_t: Vec<BigInt>, dim: usize) -> Chart {
        let fwd = unimodular_inverse(&back);
        let mut fwd_t = fwd.mul_vec(&back_t);
        for x in fwd_t.iter_mut() {
            *x = -std::mem::take(x);
        }
        let embed = AffineMap::new_unimodular(
            back.to_rational(),
            back_t.iter().map(|x| BigRational::from_integer(x.clone())).collect(),
        );
        Chart { dim, embed, fwd_linear: fwd, fwd_translation: fwd_t }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn embed(&self) -> &AffineMap {
        &self.embed
    }

    /// Hull coordinates of an ambient lattice point, or `None` when the
    /// point is off the hull's affine span.
    pub fn to_hull(&self, p: &[BigInt]) -> Option<Vec<BigInt>> {
        let mut y = self.fwd_linear.mul_vec(p);
        for (a, b) in y.iter_mut().zip(&self.fwd_translation) {
            *a += b;
        }
        if y[self.dim..].iter().all(|x| x.is_zero()) {
            y.truncate(self.dim);
            Some(y)
        } else {
            None
        }
    }
}

/// Inverse of a unimodular matrix, over the integers: its column HNF is the
/// identity (positive pivots dividing a +-1 determinant), so the recorded
/// column transform is exactly the inverse.
fn unimodular_inverse(m: &IntMatrix) -> IntMatrix {
    let (h, inv) = hnf(m);
    assert_eq!(h, IntMatrix::identity(m.rows()), "matrix must be unimodular");
    inv
}

/// A maximal linearly independent subset of the differences `p - v0`,
/// found by keeping a fully reduced integer echelon of the rows accepted so
/// far and testing each difference against it.
fn spanning_diffs(points: &[Vec<BigInt>], v0: &[BigInt]) -> Vec<Vec<BigInt>> {
    let n = v0.len();
    let mut chosen: Vec<Vec<BigInt>> = Vec::new();
    let mut reduced: Vec<Vec<BigInt>> = Vec::new();
    let mut leads: Vec<usize> = Vec::new();
    for p in points {
        if chosen.len() == n {
            break;
        }
        let diff: Vec<BigInt> = p.iter().zip(v0).map(|(a, b)| a - b).collect();
        let mut d = diff.clone();
        for (row, &lead) in reduced.iter().zip(&leads) {
            if d[lead].is_zero() {
                continue;
            }
            let (a, b) = (row[lead].clone(), std::mem::take(&mut d[lead]));
            for c in 0..n {
                if c != lead {
                    d[c] = &a * &d[c] - &b * &row[c];
                }
            }
            reduce_content(&mut d);
        }
        let Some(lead) = d.iter().position(|x| !x.is_zero()) else {
            continue;
        };
        // Clear the new lead column from the stash: with every row zero on
        // every other row's lead, the elimination order above cannot
        // reintroduce an already-cleared entry.
        for row in reduced.iter_mut() {
            if row[lead].is_zero() {
                continue;
            }
            let (a, b) = (d[lead].clone(), std::mem::take(&mut row[lead]));
            for c in 0..n {
                if c != lead {
                    row[c] = &a * &row[c] - &b * &d[c];
                }
            }
            reduce_content(row);
        }
        reduced.push(d);
        leads.push(lead);
        chosen.push(diff);
    }
    chosen
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(raw: &[&[i64]]) -> Vec<Vec<BigInt>> {
        raw.iter().map(|p| p.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    /// Ambient point of a hull point, through the embedding.
    fn from_hull(c: &Chart, q: &[BigInt]) -> Vec<BigInt> {
        let (lin, tr) = c.embed().to_lattice_parts().expect("charts are lattice-affine");
        let mut padded = q.to_vec();
        padded.resize(lin.rows(), BigInt::zero());
        AffineMap::apply_lattice(&lin, &tr, &padded)
    }

    #[test]
    fn full_dimensional_chart_is_identity() {
        let c = Chart::new(&pts(&[&[0, 0], &[1, 0], &[0, 1]]));
        assert_eq!(c.dim(), 2);
        assert_eq!(c.embed(), &AffineMap::identity(2));
        assert_eq!(c.to_hull(&pts(&[&[7, -3]])[0]).unwrap(), pts(&[&[7, -3]])[0]);
    }

    #[test]
    fn diagonal_segment_chart() {
        let p = pts(&[&[0, 0], &[2, 2]]);
        let c = Chart::new(&p);
        assert_eq!(c.dim(), 1);
        // saturated basis of the span of (2,2) is generated by (1,1)
        assert_eq!(c.to_hull(&p[0]).unwrap(), pts(&[&[0]])[0]);
        assert_eq!(c.to_hull(&p[1]).unwrap(), pts(&[&[2]])[0]);
        assert_eq!(from_hull(&c, &[BigInt::from(1)]), pts(&[&[1, 1]])[0]);
        // off-span points are rejected
        assert!(c.to_hull(&pts(&[&[1, 0]])[0]).is_none());
        assert!(c.embed().is_lattice_affine());
    }

    #[test]
    fn single_point_chart() {
        let p = pts(&[&[3, 4, 5]]);
        let c = Chart::new(&p);
        assert_eq!(c.dim(), 0);
        assert_eq!(c.to_hull(&p[0]).unwrap(), Vec::<BigInt>::new());
        assert!(c.to_hull(&pts(&[&[3, 4, 6]])[0]).is_none());
        assert_eq!(from_hull(&c, &[]), p[0]);
    }

    #[test]
    fn plane_chart_round_trip() {
        // points on the plane 4x + 4y - 5z = 4
        let p = pts(&[&[1, 0, 0], &[0, 1, 0], &[3, 3, 4], &[6, 0, 4]]);
        let c = Chart::new(&p);
        assert_eq!(c.dim(), 2);
        for q in &p {
            let h = c.to_hull(q).unwrap();
            assert_eq!(from_hull(&c, &h), *q);
        }
        assert!(c.to_hull(&pts(&[&[0, 0, 1]])[0]).is_none());
    }
}
