use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Dense integer matrix with arbitrary-precision entries, row-major.
///
/// Catalog determinants reach `2^{n-1} * n!` and normal-form intermediates
/// can grow past that, so entries are `BigInt` throughout; no fixed-width
/// arithmetic is used anywhere in this module.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl std::fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "IntMatrix{:?}", self.to_rows())
    }
}

impl IntMatrix {
    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Self {
        assert!(!rows.is_empty(), "exact matrix requires at least one row");
        let cols = rows[0].len();
        assert!(cols > 0, "exact matrix requires at least one column");
        assert!(
            rows.iter().all(|r| r.len() == cols),
            "exact matrix requires rectangular data"
        );
        let rows_n = rows.len();
        let data = rows.into_iter().flatten().collect();
        IntMatrix { rows: rows_n, cols, data }
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    /// Zero-size shapes are allowed: the chart of a single point lives in
    /// the zero lattice, whose maps are 0x0.
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = BigInt::one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> Vec<BigInt> {
        (0..self.cols).map(|j| self.at(i, j).clone()).collect()
    }

    pub fn col(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self.at(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *t.at_mut(j, i) = self.at(i, j).clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "exact matrix product requires matching shapes");
        let mut out = IntMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = BigInt::zero();
                for k in 0..self.cols {
                    acc += self.at(i, k) * other.at(k, j);
                }
                *out.at_mut(i, j) = acc;
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, v.len(), "exact matrix-vector product requires matching shapes");
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.at(i, j) * &v[j]).sum())
            .collect()
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> Result<BigInt> {
        if self.rows != self.cols {
            return Err(Error::Dimension(format!(
                "determinant requires a square matrix, got {}x{}",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        if n == 0 {
            // empty product
            return Ok(BigInt::one());
        }
        let mut a = self.clone();
        let mut sign = 1i32;
        let mut prev = BigInt::one();
        for k in 0..n {
            if a.at(k, k).is_zero() {
                match (k + 1..n).find(|&i| !a.at(i, k).is_zero()) {
                    Some(i) => {
                        a.swap_rows(k, i);
                        sign = -sign;
                    }
                    None => return Ok(BigInt::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = a.at(k, k) * a.at(i, j) - a.at(i, k) * a.at(k, j);
                    debug_assert!((&num % &prev).is_zero(), "Bareiss division must be exact");
                    *a.at_mut(i, j) = num / &prev;
                }
                *a.at_mut(i, k) = BigInt::zero();
            }
            prev = a.at(k, k).clone();
        }
        let d = a.at(n - 1, n - 1).clone();
        Ok(if sign < 0 { -d } else { d })
    }

    pub fn is_unimodular(&self) -> bool {
        self.rows == self.cols
            && matches!(self.det(), Ok(d) if d.abs().is_one())
    }

    pub fn swap_rows(&mut self, i: usize, k: usize) {
        if i == k {
            return;
        }
        for j in 0..self.cols {
            let a = i * self.cols + j;
            let b = k * self.cols + j;
            self.data.swap(a, b);
        }
    }

    pub fn swap_cols(&mut self, j: usize, l: usize) {
        if j == l {
            return;
        }
        for i in 0..self.rows {
            let a = i * self.cols + j;
            let b = i * self.cols + l;
            self.data.swap(a, b);
        }
    }

    pub fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let e = self.at_mut(i, j);
            *e = -std::mem::take(e);
        }
    }

    pub fn negate_col(&mut self, j: usize) {
        for i in 0..self.rows {
            let e = self.at_mut(i, j);
            *e = -std::mem::take(e);
        }
    }

    /// row_i -= q * row_k
    pub fn sub_row_multiple(&mut self, i: usize, k: usize, q: &BigInt) {
        for j in 0..self.cols {
            let delta = q * self.at(k, j);
            *self.at_mut(i, j) -= delta;
        }
    }

    /// col_j -= q * col_l
    pub fn sub_col_multiple(&mut self, j: usize, l: usize, q: &BigInt) {
        for i in 0..self.rows {
            let delta = q * self.at(i, l);
            *self.at_mut(i, j) -= delta;
        }
    }

    /// (row_i, row_k) <- (a*row_i + b*row_k, c*row_i + d*row_k).
    /// The caller guarantees ad - bc = +-1 so the operation is unimodular.
    pub fn combine_rows(&mut self, i: usize, k: usize, a: &BigInt, b: &BigInt, c: &BigInt, d: &BigInt) {
        debug_assert!((a * d - b * c).abs().is_one(), "row combination must be unimodular");
        for j in 0..self.cols {
            let x = self.at(i, j).clone();
            let y = self.at(k, j).clone();
            *self.at_mut(i, j) = a * &x + b * &y;
            *self.at_mut(k, j) = c * &x + d * &y;
        }
    }

    /// (col_j, col_l) <- (a*col_j + b*col_l, c*col_j + d*col_l).
    pub fn combine_cols(&mut self, j: usize, l: usize, a: &BigInt, b: &BigInt, c: &BigInt, d: &BigInt) {
        debug_assert!((a * d - b * c).abs().is_one(), "column combination must be unimodular");
        for i in 0..self.rows {
            let x = self.at(i, j).clone();
            let y = self.at(i, l).clone();
            *self.at_mut(i, j) = a * &x + b * &y;
            *self.at_mut(i, l) = c * &x + d * &y;
        }
    }

    pub fn to_rational(&self) -> RatMatrix {
        let mut m = RatMatrix::zero(self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *m.at_mut(i, j) = BigRational::from_integer(self.at(i, j).clone());
            }
        }
        m
    }
}

/// Dense rational matrix; entries are kept reduced with positive denominator
/// by `BigRational` itself, so structural equality is mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

impl std::fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "RatMatrix{:?}", self.to_rows())
    }
}

impl RatMatrix {
    pub fn from_rows(rows: Vec<Vec<BigRational>>) -> Self {
        assert!(!rows.is_empty(), "exact matrix requires at least one row");
        let cols = rows[0].len();
        assert!(cols > 0, "exact matrix requires at least one column");
        assert!(
            rows.iter().all(|r| r.len() == cols),
            "exact matrix requires rectangular data"
        );
        let rows_n = rows.len();
        let data = rows.into_iter().flatten().collect();
        RatMatrix { rows: rows_n, cols, data }
    }

    /// Zero-size shapes are allowed, as for [`IntMatrix::zero`].
    pub fn zero(rows: usize, cols: usize) -> Self {
        RatMatrix { rows, cols, data: vec![BigRational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = BigRational::one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &BigRational {
        &self.data[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut BigRational {
        &mut self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> Vec<BigRational> {
        (0..self.cols).map(|j| self.at(i, j).clone()).collect()
    }

    pub fn col(&self, j: usize) -> Vec<BigRational> {
        (0..self.rows).map(|i| self.at(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<BigRational>> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn mul(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, other.rows, "exact matrix product requires matching shapes");
        let mut out = RatMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = BigRational::zero();
                for k in 0..self.cols {
                    acc += self.at(i, k) * other.at(k, j);
                }
                *out.at_mut(i, j) = acc;
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[BigRational]) -> Vec<BigRational> {
        assert_eq!(self.cols, v.len(), "exact matrix-vector product requires matching shapes");
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.at(i, j) * &v[j]).sum())
            .collect()
    }

    /// Exact determinant by Gaussian elimination over the rationals.
    pub fn det(&self) -> Result<BigRational> {
        if self.rows != self.cols {
            return Err(Error::Dimension(format!(
                "determinant requires a square matrix, got {}x{}",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut det = BigRational::one();
        for k in 0..n {
            let pivot_row = match (k..n).find(|&i| !a.at(i, k).is_zero()) {
                Some(i) => i,
                None => return Ok(BigRational::zero()),
            };
            if pivot_row != k {
                a.swap_rows(k, pivot_row);
                det = -det;
            }
            let pivot = a.at(k, k).clone();
            det *= &pivot;
            for i in k + 1..n {
                if a.at(i, k).is_zero() {
                    continue;
                }
                let factor = a.at(i, k) / &pivot;
                for j in k..n {
                    let delta = &factor * a.at(k, j);
                    *a.at_mut(i, j) -= delta;
                }
            }
        }
        Ok(det)
    }

    /// Exact inverse by Gauss-Jordan elimination; `None` when singular.
    pub fn inverse(&self) -> Option<RatMatrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = RatMatrix::identity(n);
        for k in 0..n {
            let pivot_row = (k..n).find(|&i| !a.at(i, k).is_zero())?;
            a.swap_rows(k, pivot_row);
            inv.swap_rows(k, pivot_row);
            let pivot = a.at(k, k).clone();
            for j in 0..n {
                *a.at_mut(k, j) /= &pivot;
                *inv.at_mut(k, j) /= &pivot;
            }
            for i in 0..n {
                if i == k || a.at(i, k).is_zero() {
                    continue;
                }
                let factor = a.at(i, k).clone();
                for j in 0..n {
                    let da = &factor * a.at(k, j);
                    *a.at_mut(i, j) -= da;
                    let di = &factor * inv.at(k, j);
                    *inv.at_mut(i, j) -= di;
                }
            }
        }
        Some(inv)
    }

    pub fn swap_rows(&mut self, i: usize, k: usize) {
        if i == k {
            return;
        }
        for j in 0..self.cols {
            let a = i * self.cols + j;
            let b = k * self.cols + j;
            self.data.swap(a, b);
        }
    }

    pub fn is_integral(&self) -> bool {
        self.data.iter().all(|x| x.is_integer())
    }

    pub fn to_integer(&self) -> Option<IntMatrix> {
        if !self.is_integral() {
            return None;
        }
        let mut m = IntMatrix::zero(self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *m.at_mut(i, j) = self.at(i, j).to_integer();
            }
        }
        Some(m)
    }
}
