use num::{One, Zero};

use super::rat::Rat;
use crate::error::{FclError, Result};

/// Determinant by fraction-free (Bareiss) elimination with row pivoting.
pub(crate) fn det_bareiss(mut m: Vec<Vec<Rat>>) -> Rat {
    let n = m.len();
    if n == 0 {
        return Rat::one();
    }
    let mut sign = Rat::one();
    let mut prev = Rat::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(i, k);
                    sign = -sign;
                }
                None => return Rat::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
            m[i][k] = Rat::zero();
        }
        prev = m[k][k].clone();
    }
    sign * m[n - 1][n - 1].clone()
}

fn hankel_matrix(s: &[Rat], k: usize) -> Vec<Vec<Rat>> {
    (0..=k).map(|i| (0..=k).map(|j| s[i + j].clone()).collect()).collect()
}

/// `det(s_{i+j})_{i,j=0..k}`.
pub fn hankel_det(s: &[Rat], k: usize) -> Result<Rat> {
    if s.len() < 2 * k + 1 {
        return Err(FclError::InsufficientTerms { needed: 2 * k + 1, have: s.len() });
    }
    Ok(det_bareiss(hankel_matrix(s, k)))
}

/// Minors of orders `0..=k`.
pub fn hankel_minors(s: &[Rat], k: usize) -> Result<Vec<Rat>> {
    (0..=k).map(|j| hankel_det(s, j)).collect()
}

/// Cofactor expansion; exponential, kept as an independent oracle.
pub fn hankel_det_cofactor(s: &[Rat], k: usize) -> Result<Rat> {
    if s.len() < 2 * k + 1 {
        return Err(FclError::InsufficientTerms { needed: 2 * k + 1, have: s.len() });
    }
    Ok(cofactor(&hankel_matrix(s, k)))
}

fn cofactor(m: &[Vec<Rat>]) -> Rat {
    let n = m.len();
    if n == 0 {
        return Rat::one();
    }
    let mut acc = Rat::zero();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<Rat>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, v)| v.clone()).collect())
            .collect();
        let term = &m[0][j] * cofactor(&minor);
        if j % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}
