use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

use super::matrix::IntMatrix;

/// Column-style Hermite normal form.
///
/// Returns `(h, u)` with:
/// - `h = m * u`,
/// - `u` unimodular (|det u| = 1),
/// - `h` in column echelon form: pivots walk down and to the right, every
///   entry to the right of a pivot in its row is zero, pivots are positive,
/// - in each pivot row the entries left of the pivot are reduced into
///   `[0, pivot)`.
pub fn hnf(m: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let (rows, cols) = (m.rows(), m.cols());
    let mut h = m.clone();
    let mut u = IntMatrix::identity(cols);
    let mut cur = 0usize;
    for r in 0..rows {
        if cur == cols {
            break;
        }
        if (cur..cols).all(|j| h.at(r, j).is_zero()) {
            continue;
        }
        // fold the gcd of row r (columns cur..) into column cur
        for j in cur + 1..cols {
            if h.at(r, j).is_zero() {
                continue;
            }
            if h.at(r, cur).is_zero() {
                h.swap_cols(cur, j);
                u.swap_cols(cur, j);
                continue;
            }
            let a = h.at(r, cur).clone();
            let b = h.at(r, j).clone();
            let eg = a.extended_gcd(&b);
            let (qa, qb) = (&a / &eg.gcd, &b / &eg.gcd);
            // [[x, -qb], [y, qa]] has determinant (x*a + y*b)/g = 1
            h.combine_cols(cur, j, &eg.x, &eg.y, &(-&qb), &qa);
            u.combine_cols(cur, j, &eg.x, &eg.y, &(-&qb), &qa);
        }
        if h.at(r, cur).is_negative() {
            h.negate_col(cur);
            u.negate_col(cur);
        }
        let pivot = h.at(r, cur).clone();
        for j in 0..cur {
            let q = h.at(r, j).div_floor(&pivot);
            if !q.is_zero() {
                h.sub_col_multiple(j, cur, &q);
                u.sub_col_multiple(j, cur, &q);
            }
        }
        cur += 1;
    }
    (h, u)
}

/// Smith normal form.
///
/// Returns `(s, u, v)` with:
/// - `s = u * m * v`,
/// - `u`, `v` unimodular,
/// - `s` diagonal with nonnegative entries `d_1, d_2, ...` where each
///   `d_i` divides `d_{i+1}`.
pub fn snf(m: &IntMatrix) -> (IntMatrix, IntMatrix, IntMatrix) {
    let (rows, cols) = (m.rows(), m.cols());
    let mut s = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);
    for t in 0..rows.min(cols) {
        // move some nonzero entry of the trailing submatrix to (t, t)
        let pivot_pos = (t..rows)
            .flat_map(|i| (t..cols).map(move |j| (i, j)))
            .find(|&(i, j)| !s.at(i, j).is_zero());
        let (pi, pj) = match pivot_pos {
            Some(p) => p,
            None => break,
        };
        s.swap_rows(t, pi);
        u.swap_rows(t, pi);
        s.swap_cols(t, pj);
        v.swap_cols(t, pj);
        'reduce: loop {
            // When the pivot divides an entry, clear it by plain
            // subtraction, which leaves the pivot row and column alone.
            // The Bezout combination is reserved for entries the pivot
            // does not divide: it strictly shrinks |pivot|, so each
            // restart of this loop consumes part of a finite budget.
            for i in t + 1..rows {
                if s.at(i, t).is_zero() {
                    continue;
                }
                let a = s.at(t, t).clone();
                let b = s.at(i, t).clone();
                if (&b % &a).is_zero() {
                    let q = &b / &a;
                    s.sub_row_multiple(i, t, &q);
                    u.sub_row_multiple(i, t, &q);
                    continue;
                }
                let eg = a.extended_gcd(&b);
                let (qa, qb) = (&a / &eg.gcd, &b / &eg.gcd);
                s.combine_rows(t, i, &eg.x, &eg.y, &(-&qb), &qa);
                u.combine_rows(t, i, &eg.x, &eg.y, &(-&qb), &qa);
            }
            for j in t + 1..cols {
                if s.at(t, j).is_zero() {
                    continue;
                }
                let a = s.at(t, t).clone();
                let b = s.at(t, j).clone();
                if (&b % &a).is_zero() {
                    let q = &b / &a;
                    s.sub_col_multiple(j, t, &q);
                    v.sub_col_multiple(j, t, &q);
                    continue;
                }
                let eg = a.extended_gcd(&b);
                let (qa, qb) = (&a / &eg.gcd, &b / &eg.gcd);
                s.combine_cols(t, j, &eg.x, &eg.y, &(-&qb), &qa);
                v.combine_cols(t, j, &eg.x, &eg.y, &(-&qb), &qa);
            }
            // the column sweep can dirty the pivot column; run again if so
            if (t + 1..rows).any(|i| !s.at(i, t).is_zero()) {
                continue 'reduce;
            }
            // divisibility: the pivot must divide the trailing submatrix
            for i in t + 1..rows {
                for j in t + 1..cols {
                    if !(s.at(i, j) % s.at(t, t)).is_zero() {
                        // pull the offending row up and restart; the pivot
                        // strictly shrinks to a gcd, so this terminates
                        let one = BigInt::one();
                        let zero = BigInt::zero();
                        s.combine_rows(t, i, &one, &one, &zero, &one);
                        u.combine_rows(t, i, &one, &one, &zero, &one);
                        continue 'reduce;
                    }
                }
            }
            break;
        }
        if s.at(t, t).is_negative() {
            s.negate_row(t);
            u.negate_row(t);
        }
    }
    (s, u, v)
}

/// The invariant factors of `m`: the nonzero diagonal of its Smith form.
pub fn invariant_factors(m: &IntMatrix) -> Vec<BigInt> {
    let (s, _, _) = snf(m);
    (0..m.rows().min(m.cols()))
        .map(|t| s.at(t, t).clone())
        .filter(|d| !d.is_zero())
        .collect()
}

/// Index of the sublattice of Z^ambient generated by `vectors`.
///
/// The index is taken inside the intersection of the vectors' rational span
/// with Z^ambient, and equals the product of the nonzero Smith invariant
/// factors. When the vectors span less than the full `ambient` rank the
/// function returns 0 instead of erroring, so callers can use a zero test
/// as a rank probe.
pub fn sublattice_index(vectors: &[Vec<BigInt>], ambient: usize) -> Result<BigInt> {
    if vectors.is_empty() {
        return Err(Error::Argument("sublattice index requires at least one generator".into()));
    }
    if ambient == 0 {
        return Err(Error::Argument("sublattice index requires a positive ambient dimension".into()));
    }
    if let Some(bad) = vectors.iter().find(|v| v.len() != ambient) {
        return Err(Error::Dimension(format!(
            "generator has length {}, expected {}",
            bad.len(),
            ambient
        )));
    }
    let m = IntMatrix::from_rows(vectors.to_vec());
    let factors = invariant_factors(&m);
    if factors.len() < ambient {
        return Ok(BigInt::zero());
    }
    Ok(factors.iter().product())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bi(x: i64) -> BigInt {
        BigInt::from(x)
    }

    fn im(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_i64_rows(rows)
    }

    fn assert_hnf_contract(m: &IntMatrix) {
        let (h, u) = hnf(m);
        assert!(u.is_unimodular());
        assert_eq!(m.mul(&u), h);
    }

    #[test]
    fn hnf_identity_is_fixed() {
        let (h, u) = hnf(&IntMatrix::identity(3));
        assert_eq!(h, IntMatrix::identity(3));
        assert_eq!(u, IntMatrix::identity(3));
    }

    #[test]
    fn hnf_worked_example() {
        let m = im(&[&[2, 1], &[0, 1]]);
        let (h, u) = hnf(&m);
        assert_eq!(h, im(&[&[1, 0], &[1, 2]]));
        assert!(u.is_unimodular());
        assert_eq!(m.mul(&u), h);
    }

    #[test]
    fn hnf_zero_matrix() {
        let m = IntMatrix::zero(2, 2);
        let (h, u) = hnf(&m);
        assert_eq!(h, m);
        assert_eq!(u, IntMatrix::identity(2));
    }

    #[test]
    fn hnf_contract_on_assorted_shapes() {
        assert_hnf_contract(&im(&[&[4, 6, 10], &[2, 2, 2]]));
        assert_hnf_contract(&im(&[&[0, 0], &[1, 1]]));
        assert_hnf_contract(&im(&[&[3], &[6], &[9]]));
        assert_hnf_contract(&im(&[&[2, 4], &[-3, 5], &[0, 7]]));
    }

    fn diag_of(s: &IntMatrix) -> Vec<BigInt> {
        (0..s.rows().min(s.cols())).map(|t| s.at(t, t).clone()).collect()
    }

    fn assert_snf_contract(m: &IntMatrix) -> Vec<BigInt> {
        let (s, u, v) = snf(m);
        assert!(u.is_unimodular());
        assert!(v.is_unimodular());
        assert_eq!(u.mul(m).mul(&v), s);
        for i in 0..s.rows() {
            for j in 0..s.cols() {
                if i != j {
                    assert!(s.at(i, j).is_zero(), "off-diagonal entry in Smith form");
                }
            }
        }
        let d = diag_of(&s);
        for w in d.windows(2) {
            assert!(!w[0].is_negative() && !w[1].is_negative());
            if !w[1].is_zero() {
                assert!(!w[0].is_zero() && (&w[1] % &w[0]).is_zero(), "divisibility chain broken");
            }
        }
        d
    }

    #[test]
    fn snf_already_smith() {
        let d = assert_snf_contract(&im(&[&[2, 0], &[0, 2]]));
        assert_eq!(d, vec![bi(2), bi(2)]);
    }

    #[test]
    fn snf_worked_examples() {
        let d = assert_snf_contract(&im(&[&[1, 1], &[0, 2]]));
        assert_eq!(d, vec![bi(1), bi(2)]);
        let d = assert_snf_contract(&im(&[&[2, 0], &[0, 3]]));
        assert_eq!(d, vec![bi(1), bi(6)]);
    }

    #[test]
    fn snf_contract_on_assorted_shapes() {
        assert_snf_contract(&im(&[&[6, 4], &[8, 10], &[2, 0]]));
        assert_snf_contract(&im(&[&[0, 0, 0], &[0, 5, 0]]));
        assert_snf_contract(&im(&[&[12, 8, 6], &[4, 2, 0], &[-2, 2, 2]]));
    }

    #[test]
    fn snf_terminates_when_pivot_divides_everything() {
        // matrices of repeated unit entries once sent the reduction sweeps
        // into a cycle: clearing a divisible entry with a general Bezout
        // combination can swap content back into the pivot line forever
        let d = assert_snf_contract(&im(&[&[0, 0, 0], &[1, 0, 1], &[0, 1, 1]]));
        assert_eq!(d, vec![bi(1), bi(1), bi(0)]);
        let d = assert_snf_contract(&im(&[&[1, 1, 1], &[1, 1, 1], &[1, 1, 1]]));
        assert_eq!(d, vec![bi(1), bi(0), bi(0)]);
        let d = assert_snf_contract(&im(&[&[2, 2], &[2, 2]]));
        assert_eq!(d, vec![bi(2), bi(0)]);
    }

    #[test]
    fn sublattice_index_examples() {
        let e = |x, y| vec![bi(x), bi(y)];
        assert_eq!(sublattice_index(&[e(1, 0), e(0, 1)], 2).unwrap(), bi(1));
        assert_eq!(sublattice_index(&[e(1, 1), e(1, -1)], 2).unwrap(), bi(2));
        assert_eq!(sublattice_index(&[e(1, -1), e(-1, -2)], 2).unwrap(), bi(3));
    }

    #[test]
    fn sublattice_index_rank_deficient_is_zero() {
        let e = |x, y| vec![bi(x), bi(y)];
        assert_eq!(sublattice_index(&[e(2, 4)], 2).unwrap(), bi(0));
        assert_eq!(sublattice_index(&[e(1, 2), e(2, 4)], 2).unwrap(), bi(0));
    }

    #[test]
    fn sublattice_index_rejects_bad_input() {
        assert!(matches!(sublattice_index(&[], 2), Err(Error::Argument(_))));
        assert!(matches!(
            sublattice_index(&[vec![bi(1)]], 2),
            Err(Error::Dimension(_))
        ));
    }

    #[test]
    fn sublattice_index_invariant_under_unimodular_action() {
        // left-multiplying every generator by a unimodular matrix fixes the index
        let g = im(&[&[1, 1], &[2, 3]]);
        assert!(g.is_unimodular());
        let vecs = vec![vec![bi(1), bi(-1)], vec![bi(-1), bi(-2)]];
        let mapped: Vec<Vec<BigInt>> = vecs.iter().map(|v| g.mul_vec(v)).collect();
        assert_eq!(
            sublattice_index(&vecs, 2).unwrap(),
            sublattice_index(&mapped, 2).unwrap()
        );
    }
}
