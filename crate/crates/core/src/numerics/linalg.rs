//! Exact linear algebra over the rationals and integers, sized for the
//! small dense systems that arise from the edge-bound polynomial.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

use crate::{Error, Result};

/// Pivot sweep direction for Gaussian elimination. Solving the same
/// system under both orders and comparing results is used as a
/// self-check that the arithmetic is exact.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PivotOrder {
    Forward,
    Reverse,
}

/// Solve `a * x = rhs` exactly by Gaussian elimination with column
/// pivoting in the given sweep order. `a` is row-major and square.
pub fn solve_rational(
    a: &[Vec<BigRational>],
    rhs: &[BigRational],
    order: PivotOrder,
) -> Result<Vec<BigRational>> {
    let n = a.len();
    if a.iter().any(|row| row.len() != n) || rhs.len() != n {
        return Err(Error::InvalidArgument("system is not square".into()));
    }
    let mut m: Vec<Vec<BigRational>> = a
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let mut r = row.clone();
            r.push(b.clone());
            r
        })
        .collect();

    let cols: Vec<usize> = match order {
        PivotOrder::Forward => (0..n).collect(),
        PivotOrder::Reverse => (0..n).rev().collect(),
    };
    let mut pivot_row_of_col = vec![usize::MAX; n];
    let mut used = vec![false; n];
    for &col in &cols {
        let Some(p) = (0..n).find(|&r| !used[r] && !m[r][col].is_zero()) else {
            return Err(Error::InvalidArgument("singular system".into()));
        };
        used[p] = true;
        pivot_row_of_col[col] = p;
        let inv = m[p][col].clone();
        for r in 0..n {
            if r == p || m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] / &inv;
            for c in 0..=n {
                let sub = &factor * &m[p][c];
                m[r][c] = &m[r][c] - sub;
            }
        }
    }
    let mut x = vec![BigRational::zero(); n];
    for col in 0..n {
        let r = pivot_row_of_col[col];
        x[col] = &m[r][n] / &m[r][col];
    }
    Ok(x)
}

/// Fraction-free determinant of an integer matrix (Bareiss elimination).
pub fn det_bareiss(a: &[Vec<BigInt>]) -> BigInt {
    let n = a.len();
    assert!(a.iter().all(|row| row.len() == n), "matrix must be square");
    if n == 0 {
        return BigInt::one();
    }
    let mut m: Vec<Vec<BigInt>> = a.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = num / &prev; // exact by the Bareiss identity
            }
        }
        prev = m[k][k].clone();
    }
    sign * m[n - 1][n - 1].clone()
}

/// Determinant via rational Gaussian elimination; independent of the
/// Bareiss route and used to cross-check it.
pub fn det_rational(a: &[Vec<BigInt>]) -> BigRational {
    let n = a.len();
    if n == 0 {
        return BigRational::one();
    }
    let mut m: Vec<Vec<BigRational>> = a
        .iter()
        .map(|row| row.iter().map(|v| BigRational::from(v.clone())).collect())
        .collect();
    let mut det = BigRational::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !m[r][k].is_zero()) else {
            return BigRational::zero();
        };
        if p != k {
            m.swap(p, k);
            det = -det;
        }
        det *= m[k][k].clone();
        for r in k + 1..n {
            if m[r][k].is_zero() {
                continue;
            }
            let factor = &m[r][k] / &m[k][k];
            for c in k..n {
                let sub = &factor * &m[k][c];
                m[r][c] = &m[r][c] - sub;
            }
        }
    }
    det
}

/// Row `[1, x, x^2, ..., x^(width-1)]`.
pub fn power_row(x: i64, width: usize) -> Vec<BigRational> {
    let x = BigRational::from(BigInt::from(x));
    let mut row = Vec::with_capacity(width);
    let mut acc = BigRational::one();
    for _ in 0..width {
        row.push(acc.clone());
        acc *= &x;
    }
    row
}

/// `2^e` as a BigInt (e >= 0).
pub fn pow2(e: u32) -> BigInt {
    BigInt::one() << e
}

pub fn rational_is_integer(r: &BigRational) -> bool {
    r.denom().abs() == BigInt::one()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int_matrix(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
            .collect()
    }

    #[test]
    fn bareiss_matches_rational_det() {
        let m = int_matrix(&[&[2, -1, 3], &[0, 5, 1], &[7, 2, -4]]);
        let b = det_bareiss(&m);
        let r = det_rational(&m);
        assert!(rational_is_integer(&r));
        assert_eq!(BigRational::from(b), r);
    }

    #[test]
    fn singular_matrix_gives_zero() {
        let m = int_matrix(&[&[1, 2], &[2, 4]]);
        assert_eq!(det_bareiss(&m), BigInt::zero());
        assert!(det_rational(&m).is_zero());
    }

    #[test]
    fn solve_agrees_under_both_pivot_orders() {
        // Vandermonde nodes 2,3,4 against an arbitrary right side.
        let a: Vec<Vec<BigRational>> = (2..=4).map(|k| power_row(k, 3)).collect();
        let rhs: Vec<BigRational> = [3i64, -7, 12]
            .iter()
            .map(|&v| BigRational::from(BigInt::from(v)))
            .collect();
        let x1 = solve_rational(&a, &rhs, PivotOrder::Forward).unwrap();
        let x2 = solve_rational(&a, &rhs, PivotOrder::Reverse).unwrap();
        assert_eq!(x1, x2);
        // Residual check.
        for (row, b) in a.iter().zip(&rhs) {
            let dot = row
                .iter()
                .zip(&x1)
                .fold(BigRational::zero(), |acc, (c, x)| acc + c * x);
            assert_eq!(&dot, b);
        }
    }
}
