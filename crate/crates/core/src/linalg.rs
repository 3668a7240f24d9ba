//! Exact linear algebra over the integers and the rationals.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::rational::Rational;

/// Solves `a · x = b` for a square integer matrix by fraction-free
/// (Bareiss) elimination. Returns `None` when `a` is singular.
///
/// Every intermediate entry is a minor of the augmented matrix, so the
/// divisions below are exact and coefficient growth stays polynomial.
pub fn bareiss_solve(a: &[Vec<BigInt>], b: &[BigInt]) -> Option<Vec<Rational>> {
    let n = a.len();
    assert_eq!(b.len(), n, "right-hand side length");
    let mut m: Vec<Vec<BigInt>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            assert_eq!(row.len(), n, "matrix must be square");
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();

    let mut prev = BigInt::one();
    for k in 0..n {
        let pivot = (k..n).find(|&r| !m[r][k].is_zero())?;
        m.swap(k, pivot);
        for i in k + 1..n {
            for j in k + 1..=n {
                let v = (&m[k][k] * &m[i][j] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }

    let mut x = vec![Rational::zero(); n];
    for i in (0..n).rev() {
        let mut acc = Rational::from_integer(m[i][n].clone());
        for j in i + 1..n {
            acc -= Rational::from_integer(m[i][j].clone()) * &x[j];
        }
        x[i] = acc / Rational::from_integer(m[i][i].clone());
    }
    Some(x)
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(rows: &mut [Vec<Rational>]) -> Vec<usize> {
    let nrows = rows.len();
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for v in rows[r].iter_mut() {
            *v *= &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            for (v, p) in row.iter_mut().zip(&pivot_row) {
                *v -= &factor * p;
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(rows: &[Vec<Rational>]) -> usize {
    let mut work = rows.to_vec();
    rref(&mut work).len()
}

/// A basis of the right kernel `{x : rows · x = 0}`.
pub fn nullspace(rows: &[Vec<Rational>], ncols: usize) -> Vec<Vec<Rational>> {
    let mut work = rows.to_vec();
    let pivots = rref(&mut work);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); ncols];
            v[f] = Rational::one();
            for (row, &pc) in work.iter().zip(&pivots) {
                v[pc] = -row[f].clone();
            }
            v
        })
        .collect()
}

pub fn to_bigint_matrix(m: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
    m.iter()
        .map(|row| row.iter().map(|&v| BigInt::from(v)).collect())
        .collect()
}
