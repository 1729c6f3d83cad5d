//! Exact inversion of square integer matrices.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Matrix = Vec<Vec<BigInt>>;

pub fn identity(n: usize) -> Matrix {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect()
}

pub fn multiply(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    let m = b.first().map_or(0, Vec::len);
    let mut out = vec![vec![BigInt::zero(); m]; n];
    for (i, row) in a.iter().enumerate() {
        for (k, x) in row.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b[k].iter().enumerate() {
                if !y.is_zero() {
                    out[i][j] += x * y;
                }
            }
        }
    }
    out
}

pub fn transpose(a: &Matrix) -> Matrix {
    let m = a.first().map_or(0, Vec::len);
    (0..m).map(|j| a.iter().map(|row| row[j].clone()).collect()).collect()
}

/// Inverse of `a`. Permuted unitriangular matrices (every transition matrix
/// between these bases) are inverted by exact elimination on `±1` pivots;
/// anything else falls back to rational Gauss-Jordan and must come out integral.
pub fn invert(a: &Matrix, name: &str) -> Result<Matrix> {
    match invert_unit_pivots(a) {
        Some(inv) => Ok(inv),
        None => invert_rational(a, name),
    }
}

/// Gauss-Jordan elimination that always pivots on a row with a single
/// remaining nonzero entry, which must be `±1`. For a permuted unitriangular
/// matrix such a row exists at every step and elimination causes no fill-in.
fn invert_unit_pivots(a: &Matrix) -> Option<Matrix> {
    let n = a.len();
    let mut m = a.clone();
    let mut inv = identity(n);
    let mut nnz: Vec<usize> = m.iter().map(|row| row.iter().filter(|x| !x.is_zero()).count()).collect();
    let mut col_rows: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (r, row) in m.iter().enumerate() {
        for (c, x) in row.iter().enumerate() {
            if !x.is_zero() {
                col_rows[c].push(r);
            }
        }
    }
    let mut ready: Vec<usize> = (0..n).filter(|&r| nnz[r] == 1).collect();
    let mut used = vec![false; n];
    let mut pivot_row = vec![usize::MAX; n];
    for _ in 0..n {
        let r = loop {
            let r = ready.pop()?;
            if !used[r] && nnz[r] == 1 {
                break r;
            }
        };
        let col = m[r].iter().position(|x| !x.is_zero())?;
        if !m[r][col].abs().is_one() {
            return None;
        }
        used[r] = true;
        pivot_row[col] = r;
        if m[r][col].is_negative() {
            m[r][col] = -&m[r][col];
            inv[r].iter_mut().for_each(|x| *x = -&*x);
        }
        let pinv = inv[r].clone();
        for &s in &col_rows[col] {
            if s == r || m[s][col].is_zero() {
                continue;
            }
            let f = std::mem::take(&mut m[s][col]);
            for (j, p) in pinv.iter().enumerate() {
                if !p.is_zero() {
                    inv[s][j] -= &f * p;
                }
            }
            nnz[s] -= 1;
            if nnz[s] == 1 {
                ready.push(s);
            }
        }
    }
    Some(pivot_row.into_iter().map(|r| inv[r].clone()).collect())
}

fn invert_rational(a: &Matrix, name: &str) -> Result<Matrix> {
    let n = a.len();
    let mut m: Vec<Vec<BigRational>> = a
        .iter()
        .map(|row| row.iter().map(|x| BigRational::from_integer(x.clone())).collect())
        .collect();
    let mut inv: Vec<Vec<BigRational>> = identity(n)
        .into_iter()
        .map(|row| row.into_iter().map(BigRational::from_integer).collect())
        .collect();
    for col in 0..n {
        let r = (col..n)
            .find(|&r| !m[r][col].is_zero())
            .ok_or_else(|| Error::Singular(name.to_string()))?;
        m.swap(col, r);
        inv.swap(col, r);
        let p = m[col][col].clone();
        m[col].iter_mut().for_each(|x| *x = &*x / &p);
        inv[col].iter_mut().for_each(|x| *x = &*x / &p);
        let (prow, pinv) = (m[col].clone(), inv[col].clone());
        for s in 0..n {
            if s == col || m[s][col].is_zero() {
                continue;
            }
            let f = m[s][col].clone();
            for j in 0..n {
                m[s][j] -= &f * &prow[j];
                inv[s][j] -= &f * &pinv[j];
            }
        }
    }
    inv.into_iter()
        .map(|row| {
            row.into_iter()
                .map(|x| {
                    if x.is_integer() {
                        Ok(x.to_integer())
                    } else {
                        Err(Error::NonIntegral(name.to_string()))
                    }
                })
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(rows: &[&[i64]]) -> Matrix {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    #[test]
    fn unitriangular_inverse() {
        let a = mat(&[&[1, 0, 0], &[2, 1, 0], &[3, 4, 1]]);
        let inv = invert(&a, "a").unwrap();
        assert_eq!(multiply(&a, &inv), identity(3));
    }

    #[test]
    fn permuted_and_rational_paths() {
        let a = mat(&[&[0, 1], &[1, 3]]);
        let inv = invert(&a, "a").unwrap();
        assert_eq!(multiply(&a, &inv), identity(2));
        let b = mat(&[&[2, 1], &[1, 1]]);
        let inv = invert(&b, "b").unwrap();
        assert_eq!(multiply(&b, &inv), identity(2));
        assert_eq!(invert(&mat(&[&[2, 0], &[0, 1]]), "c"), Err(Error::NonIntegral("c".into())));
        assert_eq!(invert(&mat(&[&[1, 2], &[2, 4]]), "d"), Err(Error::Singular("d".into())));
    }
}
