//! Exact Gaussian elimination over the rationals.

use num::Zero;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Solves `a · x = b` for a square, nonsingular `a`.
pub fn solve(a: &[Vec<Scalar>], b: &[Scalar]) -> Result<Vec<Scalar>> {
    let n = a.len();
    if b.len() != n || a.iter().any(|row| row.len() != n) {
        return Err(Error::SingularSystem);
    }
    let mut m: Vec<Vec<Scalar>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !m[r][col].is_zero())
            .ok_or(Error::SingularSystem)?;
        m.swap(col, pivot);
        let p = m[col][col].clone();
        for entry in m[col].iter_mut() {
            *entry /= &p;
        }
        let pivot_row = m[col].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r != col && !row[col].is_zero() {
                let factor = row[col].clone();
                for (e, p) in row.iter_mut().zip(&pivot_row).skip(col) {
                    *e -= &factor * p;
                }
            }
        }
    }
    Ok(m.into_iter().map(|mut row| row.pop().unwrap()).collect())
}
