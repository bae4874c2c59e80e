//! Exact solution of square linear systems with fraction-free (Bareiss)
//! elimination.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Solves `a · x = b` exactly. Rows are first scaled to clear the
/// denominators of `b`, then eliminated over the integers; every division in
/// the elimination is exact.
pub fn solve(a: &[Vec<BigInt>], b: &[BigRational]) -> Result<Vec<BigRational>> {
    let n = a.len();
    if b.len() != n || a.iter().any(|row| row.len() != n) {
        return Err(Error::Internal(format!("system is not {n}x{n}")));
    }
    // augmented integer matrix [a | b] with row j scaled by den(b_j)
    let mut m: Vec<Vec<BigInt>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let scale = rhs.denom();
            let mut r: Vec<BigInt> = row.iter().map(|x| x * scale).collect();
            r.push(rhs.numer().clone());
            r
        })
        .collect();

    let mut prev = BigInt::one();
    for k in 0..n {
        let pivot = (k..n)
            .find(|&i| !m[i][k].is_zero())
            .ok_or_else(|| Error::Internal("singular system".into()))?;
        m.swap(k, pivot);
        for i in k + 1..n {
            for j in k + 1..=n {
                let v = &m[k][k] * &m[i][j] - &m[i][k] * &m[k][j];
                debug_assert!(v.is_multiple_of(&prev));
                m[i][j] = v / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }

    let mut x = vec![BigRational::zero(); n];
    for i in (0..n).rev() {
        let mut acc = BigRational::from_integer(m[i][n].clone());
        for j in i + 1..n {
            acc -= BigRational::from_integer(m[i][j].clone()) * &x[j];
        }
        x[i] = acc / BigRational::from_integer(m[i][i].clone());
    }
    Ok(x)
}
