//! Exact rational linear algebra on small dense matrices.
//!
//! Everything here runs over arbitrary-precision rationals
//! ([`num::BigRational`]), so ranks, determinants, and inverses are exact.
//! The matrices in this crate are tiny (at most `n(n+1)/2 ≤ 21` rows for the
//! ranks we verify), so simple Gauss–Jordan elimination is entirely adequate.

use num::rational::BigRational;
use num::{BigInt, One, Signed, Zero};

/// Convert an integer matrix to rationals.
#[must_use]
pub fn to_rational(m: &[Vec<i64>]) -> Vec<Vec<BigRational>> {
    m.iter()
        .map(|row| {
            row.iter()
                .map(|&x| BigRational::from(BigInt::from(x)))
                .collect()
        })
        .collect()
}

/// Rank of a rational matrix (rows of equal length), by forward elimination.
#[must_use]
pub fn rank(mut m: Vec<Vec<BigRational>>) -> usize {
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for col in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(pivot) = (r..nrows).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(r, pivot);
        let inv = m[r][col].clone();
        for i in r + 1..nrows {
            if m[i][col].is_zero() {
                continue;
            }
            let factor = &m[i][col] / &inv;
            for c in col..ncols {
                let sub = &factor * &m[r][c];
                m[i][c] -= sub;
            }
        }
        r += 1;
    }
    r
}

/// Dimension of the solution space of the homogeneous system `rows · x = 0`
/// in `nvars` variables.
#[must_use]
pub fn solution_space_dim(rows: &[Vec<BigRational>], nvars: usize) -> usize {
    debug_assert!(rows.iter().all(|r| r.len() == nvars));
    nvars - rank(rows.to_vec())
}

/// Exact determinant of a square integer matrix.
#[must_use]
pub fn det(m: &[Vec<i64>]) -> BigInt {
    let n = m.len();
    assert!(m.iter().all(|row| row.len() == n), "matrix must be square");
    let mut a = to_rational(m);
    let mut sign = BigInt::one();
    let mut prod = BigRational::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&i| !a[i][col].is_zero()) else {
            return BigInt::zero();
        };
        if pivot != col {
            a.swap(col, pivot);
            sign = -sign;
        }
        let inv = a[col][col].clone();
        prod *= &inv;
        for i in col + 1..n {
            if a[i][col].is_zero() {
                continue;
            }
            let factor = &a[i][col] / &inv;
            for c in col..n {
                let sub = &factor * &a[col][c];
                a[i][c] -= sub;
            }
        }
    }
    let d = prod * BigRational::from(sign);
    assert!(d.is_integer(), "determinant of integer matrix is integral");
    d.to_integer()
}

/// Exact inverse of a square integer matrix, provided the inverse is again
/// an integer matrix (i.e. the matrix is unimodular). Returns `None` when
/// the matrix is singular or the inverse has non-integer entries.
#[must_use]
pub fn invert_unimodular(m: &[Vec<i64>]) -> Option<Vec<Vec<i64>>> {
    let n = m.len();
    assert!(m.iter().all(|row| row.len() == n), "matrix must be square");
    // Gauss–Jordan on [m | I].
    let mut a = to_rational(m);
    for (i, row) in a.iter_mut().enumerate() {
        for j in 0..n {
            row.push(if i == j {
                BigRational::one()
            } else {
                BigRational::zero()
            });
        }
    }
    for col in 0..n {
        let pivot = (col..n).find(|&i| !a[i][col].is_zero())?;
        a.swap(col, pivot);
        let inv = a[col][col].clone();
        for c in col..2 * n {
            let v = &a[col][c] / &inv;
            a[col][c] = v;
        }
        for i in 0..n {
            if i == col || a[i][col].is_zero() {
                continue;
            }
            let factor = a[i][col].clone();
            for c in col..2 * n {
                let sub = &factor * &a[col][c];
                a[i][c] -= sub;
            }
        }
    }
    let mut out = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in 0..n {
            let v = &a[i][n + j];
            if !v.is_integer() {
                return None;
            }
            let int = v.to_integer();
            if int.abs() > BigInt::from(i64::MAX) {
                return None;
            }
            out[i][j] = i64::try_from(int).ok()?;
        }
    }
    Some(out)
}
