use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

use super::matrix::{IntMatrix, RatMatrix};

/// An invertible affine map `x -> linear * x + translation` over the
/// rationals. Entries stay reduced, so structural equality is mathematical
/// equality and the type can be hashed into sets of group elements.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct AffineMap {
    linear: RatMatrix,
    translation: Vec<BigRational>,
}

impl AffineMap {
    pub fn new(linear: RatMatrix, translation: Vec<BigRational>) -> Result<Self> {
        if linear.rows() != linear.cols() {
            return Err(Error::Dimension(format!(
                "affine map requires a square linear part, got {}x{}",
                linear.rows(),
                linear.cols()
            )));
        }
        if translation.len() != linear.rows() {
            return Err(Error::Dimension(format!(
                "translation length {} does not match linear part of size {}",
                translation.len(),
                linear.rows()
            )));
        }
        if linear.det()?.is_zero() {
            return Err(Error::Degenerate("affine map requires an invertible linear part".into()));
        }
        Ok(AffineMap { linear, translation })
    }

    /// Constructor for a linear part the caller has already certified
    /// invertible (say, by checking unimodularity over the integers); skips
    /// the determinant test, which is not free on hot paths.
    pub(crate) fn new_unimodular(linear: RatMatrix, translation: Vec<BigRational>) -> Self {
        debug_assert_eq!(linear.rows(), linear.cols());
        debug_assert_eq!(translation.len(), linear.rows());
        AffineMap { linear, translation }
    }

    pub fn identity(n: usize) -> Self {
        AffineMap {
            linear: RatMatrix::identity(n),
            translation: vec![BigRational::zero(); n],
        }
    }

    /// Pure translation by an integer vector.
    pub fn translation_by(shift: &[BigInt]) -> Self {
        AffineMap {
            linear: RatMatrix::identity(shift.len()),
            translation: shift.iter().map(|x| BigRational::from_integer(x.clone())).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.linear.rows()
    }

    pub fn linear(&self) -> &RatMatrix {
        &self.linear
    }

    pub fn translation(&self) -> &[BigRational] {
        &self.translation
    }

    pub fn apply(&self, point: &[BigRational]) -> Vec<BigRational> {
        let mut out = self.linear.mul_vec(point);
        for (o, t) in out.iter_mut().zip(&self.translation) {
            *o += t;
        }
        out
    }

    pub fn apply_int(&self, point: &[BigInt]) -> Vec<BigRational> {
        let rat: Vec<BigRational> =
            point.iter().map(|x| BigRational::from_integer(x.clone())).collect();
        self.apply(&rat)
    }

    /// `self . other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &AffineMap) -> Result<AffineMap> {
        if self.dim() != other.dim() {
            return Err(Error::Dimension(format!(
                "cannot compose affine maps of dimensions {} and {}",
                self.dim(),
                other.dim()
            )));
        }
        let linear = self.linear.mul(&other.linear);
        let translation = self.apply(&other.translation);
        Ok(AffineMap { linear, translation })
    }

    /// Exact inverse; total because invertibility is a type invariant.
    pub fn inverse(&self) -> AffineMap {
        let inv = self.linear.inverse().expect("affine map invariant: invertible linear part");
        let mut translation = inv.mul_vec(&self.translation);
        for t in translation.iter_mut() {
            *t = -std::mem::take(t);
        }
        AffineMap { linear: inv, translation }
    }

    /// True iff the map preserves the integer lattice: integral linear part
    /// with determinant +-1 and integral translation.
    pub fn is_lattice_affine(&self) -> bool {
        let integral = match self.linear.to_integer() {
            Some(m) => m,
            None => return false,
        };
        if !self.translation.iter().all(|t| t.is_integer()) {
            return false;
        }
        integral.det().map(|d| d.abs().is_one()).unwrap_or(false)
    }

    /// Integer form `(linear, translation)`; `None` unless lattice-affine.
    pub fn to_lattice_parts(&self) -> Option<(IntMatrix, Vec<BigInt>)> {
        if !self.is_lattice_affine() {
            return None;
        }
        let linear = self.linear.to_integer()?;
        let translation = self.translation.iter().map(|t| t.to_integer()).collect();
        Some((linear, translation))
    }

    /// Fast path for lattice-affine maps acting on integer points.
    pub fn apply_lattice(linear: &IntMatrix, translation: &[BigInt], point: &[BigInt]) -> Vec<BigInt> {
        let mut out = linear.mul_vec(point);
        for (o, t) in out.iter_mut().zip(translation) {
            *o += t;
        }
        out
    }
}

/// Solve for the unique affine map sending `src[i]` to `dst[i]`.
///
/// `src` must consist of `n + 1` affinely independent points of length `n`;
/// the solved map then satisfies `map(src[i]) = dst[i]` exactly.
pub fn solve_affine_map(src: &[Vec<BigRational>], dst: &[Vec<BigRational>]) -> Result<AffineMap> {
    if src.is_empty() || src[0].is_empty() {
        return Err(Error::Argument("affine solve requires at least one point of positive dimension".into()));
    }
    let n = src[0].len();
    if src.len() != n + 1 || dst.len() != n + 1 {
        return Err(Error::Dimension(format!(
            "affine solve in dimension {} requires {} source and target points, got {} and {}",
            n,
            n + 1,
            src.len(),
            dst.len()
        )));
    }
    if src.iter().any(|p| p.len() != n) || dst.iter().any(|p| p.len() != n) {
        return Err(Error::Dimension("affine solve requires points of equal length".into()));
    }
    // columns of S and D are the displacements from the base point
    let mut s = RatMatrix::zero(n, n);
    let mut d = RatMatrix::zero(n, n);
    for i in 0..n {
        for j in 0..n {
            *s.at_mut(i, j) = &src[j + 1][i] - &src[0][i];
            *d.at_mut(i, j) = &dst[j + 1][i] - &dst[0][i];
        }
    }
    let s_inv = s
        .inverse()
        .ok_or_else(|| Error::Degenerate("source points are affinely dependent".into()))?;
    let linear = d.mul(&s_inv);
    let image = linear.mul_vec(&src[0]);
    let translation = dst[0]
        .iter()
        .zip(image)
        .map(|(t, im)| t - im)
        .collect();
    AffineMap::new(linear, translation)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(x: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(x))
    }

    fn qp(pts: &[&[i64]]) -> Vec<Vec<BigRational>> {
        pts.iter().map(|p| p.iter().map(|&x| q(x)).collect()).collect()
    }

    fn rm(rows: &[&[i64]]) -> RatMatrix {
        RatMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect())
    }

    #[test]
    fn solve_identity() {
        let pts = qp(&[&[0, 0], &[1, 0], &[0, 1]]);
        let map = solve_affine_map(&pts, &pts).unwrap();
        assert_eq!(map, AffineMap::identity(2));
    }

    #[test]
    fn solve_shear_with_translation() {
        // src (0,0),(1,0),(0,1) -> dst (1,1),(2,1),(1,2) under x+ (1,1)? no:
        // expected linear [[1,0],[1,1]] translation (1,1) maps
        // (0,0)->(1,1), (1,0)->(2,2), (0,1)->(1,2)
        let src = qp(&[&[0, 0], &[1, 0], &[0, 1]]);
        let dst = qp(&[&[1, 1], &[2, 2], &[1, 2]]);
        let map = solve_affine_map(&src, &dst).unwrap();
        assert_eq!(map.linear(), &rm(&[&[1, 0], &[1, 1]]));
        assert_eq!(map.translation(), &[q(1), q(1)][..]);
        for (s, d) in src.iter().zip(&dst) {
            assert_eq!(map.apply(s), *d);
        }
    }

    #[test]
    fn solve_rejects_collinear_sources() {
        let src = qp(&[&[0, 0], &[1, 1], &[2, 2]]);
        let dst = qp(&[&[0, 0], &[1, 0], &[0, 1]]);
        assert!(matches!(solve_affine_map(&src, &dst), Err(Error::Degenerate(_))));
    }

    #[test]
    fn lattice_affine_classification() {
        let shear = AffineMap::new(rm(&[&[1, 0], &[1, 1]]), vec![q(0), q(3)]).unwrap();
        assert!(shear.is_lattice_affine());

        let stretch = AffineMap::new(rm(&[&[1, 0], &[0, 2]]), vec![q(0), q(0)]).unwrap();
        assert!(!stretch.is_lattice_affine());

        let half = AffineMap::new(
            RatMatrix::identity(2),
            vec![BigRational::new(BigInt::from(1), BigInt::from(2)), q(0)],
        )
        .unwrap();
        assert!(!half.is_lattice_affine());
    }

    #[test]
    fn compose_and_inverse_stay_lattice_affine() {
        let a = AffineMap::new(rm(&[&[1, 2], &[0, 1]]), vec![q(5), q(-1)]).unwrap();
        let b = AffineMap::new(rm(&[&[0, -1], &[1, 0]]), vec![q(2), q(2)]).unwrap();
        assert!(a.is_lattice_affine() && b.is_lattice_affine());
        let c = a.compose(&b).unwrap();
        assert!(c.is_lattice_affine());
        assert!(c.inverse().is_lattice_affine());
        assert_eq!(c.compose(&c.inverse()).unwrap(), AffineMap::identity(2));
        // composition applies the right-hand map first
        let p = vec![q(1), q(0)];
        assert_eq!(c.apply(&p), a.apply(&b.apply(&p)));
    }

    #[test]
    fn singular_linear_part_is_rejected() {
        assert!(matches!(
            AffineMap::new(rm(&[&[1, 2], &[2, 4]]), vec![q(0), q(0)]),
            Err(Error::Degenerate(_))
        ));
    }
}
