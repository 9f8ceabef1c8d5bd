//! Truncated power series over the rationals, lowest order first.

use num::{One, Zero};

use crate::exactalg::{Poly, Rat};

pub fn pad(p: &Poly, n: usize) -> Vec<Rat> {
    (0..n).map(|i| p.coeff(i)).collect()
}

pub fn mul_trunc(a: &[Rat], b: &[Rat], n: usize) -> Vec<Rat> {
    let mut out = vec![Rat::zero(); n];
    for (i, x) in a.iter().enumerate().take(n) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(n - i) {
            out[i + j] += x * y;
        }
    }
    out
}

/// Reciprocal of a series with nonzero constant term.
pub fn inv_trunc(a: &[Rat], n: usize) -> Vec<Rat> {
    assert!(!a[0].is_zero(), "series not invertible");
    let mut out = vec![Rat::zero(); n];
    let c0 = a[0].recip();
    if n == 0 {
        return out;
    }
    out[0] = c0.clone();
    for k in 1..n {
        let mut acc = Rat::zero();
        for j in 1..=k.min(a.len() - 1) {
            acc += &a[j] * &out[k - j];
        }
        out[k] = -acc * &c0;
    }
    out
}

/// `p(s(z))` truncated.
pub fn poly_of_series(p: &Poly, s: &[Rat], n: usize) -> Vec<Rat> {
    let mut acc = vec![Rat::zero(); n];
    for a in p.coeffs().iter().rev() {
        acc = mul_trunc(&acc, s, n);
        if n > 0 {
            acc[0] += a;
        }
    }
    acc
}

/// `f(g(z))` for series `g` with zero constant term.
pub fn compose_series(f: &[Rat], g: &[Rat], n: usize) -> Vec<Rat> {
    debug_assert!(g.first().is_none_or(|x| x.is_zero()));
    let mut acc = vec![Rat::zero(); n];
    for a in f.iter().take(n).rev() {
        acc = mul_trunc(&acc, g, n);
        if n > 0 {
            acc[0] += a;
        }
    }
    acc
}

/// Series of the rational function `num / den`, `den(0) != 0`.
pub fn ratfun_series(num: &Poly, den: &Poly, n: usize) -> Vec<Rat> {
    mul_trunc(&pad(num, n), &inv_trunc(&pad(den, n), n), n)
}

/// `z` as a series of length `n`.
pub fn z_series(n: usize) -> Vec<Rat> {
    let mut v = vec![Rat::zero(); n];
    if n > 1 {
        v[1] = Rat::one();
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rat;

    #[test]
    fn inverse_of_one_minus_z() {
        let a = vec![rat(1), rat(-1)];
        assert_eq!(inv_trunc(&a, 5), vec![rat(1); 5]);
    }

    #[test]
    fn composition() {
        // (1 + z)^2 at z -> z + z^2
        let f = vec![rat(1), rat(2), rat(1)];
        let g = vec![rat(0), rat(1), rat(1)];
        assert_eq!(compose_series(&f, &g, 5), vec![rat(1), rat(2), rat(3), rat(2), rat(1)]);
        assert_eq!(poly_of_series(&Poly::from_ints(&[1, 2, 1]), &g, 5), compose_series(&f, &g, 5));
    }
}
