use num::{One, Zero};

use super::bipoly::BiPoly;
use super::hankel::det_bareiss;
use super::poly::Poly;
use super::rat::Rat;
use crate::error::{FclError, Result};

/// Sylvester determinant for formal degrees `p.len() - 1` and `q.len() - 1`
/// (leading entries may vanish).
pub fn sylvester_det(p: &[Rat], q: &[Rat]) -> Rat {
    let m = p.len().saturating_sub(1);
    let n = q.len().saturating_sub(1);
    let size = m + n;
    if size == 0 {
        return Rat::one();
    }
    let mut mat = vec![vec![Rat::zero(); size]; size];
    for i in 0..n {
        for (k, a) in p.iter().rev().enumerate() {
            mat[i][i + k] = a.clone();
        }
    }
    for j in 0..m {
        for (k, b) in q.iter().rev().enumerate() {
            mat[n + j][j + k] = b.clone();
        }
    }
    det_bareiss(mat)
}

/// Resultant of two univariate polynomials by the Euclidean recurrence.
pub fn resultant_univariate(a: &Poly, b: &Poly) -> Rat {
    if a.is_zero() || b.is_zero() {
        return Rat::zero();
    }
    let m = a.deg();
    let n = b.deg();
    if n == 0 {
        return pow(&b.coeff(0), m);
    }
    if m == 0 {
        return pow(&a.coeff(0), n);
    }
    let sgn = if (m * n) % 2 == 1 { -Rat::one() } else { Rat::one() };
    if m < n {
        return sgn * resultant_univariate(b, a);
    }
    let r = a.rem(b);
    if r.is_zero() {
        return Rat::zero();
    }
    sgn * pow(&b.lc(), m - r.deg()) * resultant_univariate(b, &r)
}

fn pow(r: &Rat, k: usize) -> Rat {
    let mut acc = Rat::one();
    for _ in 0..k {
        acc *= r;
    }
    acc
}

/// Newton interpolation through `(xs[i], ys[i])`, returned in monomial form.
pub fn interpolate(xs: &[Rat], ys: &[Rat]) -> Poly {
    let n = xs.len();
    let mut dd = ys.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (&xs[i] - &xs[i - j]);
        }
    }
    let mut acc = Poly::zero();
    for i in (0..n).rev() {
        acc = &(&acc * &Poly::new(vec![-xs[i].clone(), Rat::one()])) + &Poly::constant(dd[i].clone());
    }
    acc
}

/// `Res_w(p, q)` as a polynomial in the parameter, using the formal
/// `w`-degrees of both inputs. Computed by evaluation at rational parameter
/// points followed by interpolation.
pub fn resultant(p: &BiPoly, q: &BiPoly) -> Result<Poly> {
    if p.is_zero() || q.is_zero() {
        return Err(FclError::ZeroPolynomial);
    }
    let m = p.deg_w();
    let n = q.deg_w();
    let bound = n * p.max_deg_t() + m * q.max_deg_t();
    let xs: Vec<Rat> = (0..=bound as i64).map(|i| Rat::from_integer(i.into())).collect();
    let ys: Vec<Rat> = xs
        .iter()
        .map(|t| sylvester_det(&p.eval_t_formal(t), &q.eval_t_formal(t)))
        .collect();
    Ok(interpolate(&xs, &ys))
}
