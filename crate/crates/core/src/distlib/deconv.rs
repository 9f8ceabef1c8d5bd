//! Two-parameter deconvolution families with factored characteristic polynomials.

use num::{One, Zero};

use crate::classf::{ClassF, RatFun};
use crate::error::{FclError, Result};
use crate::exactalg::{rat, Poly, Rat};
use crate::spectra::char_poly_raw;

#[derive(Clone, Debug)]
pub struct DeconvRecord {
    pub f: ClassF,
    pub r: RatFun,
    /// `chi` of the unreduced pair built from the stated `R`.
    pub chi: Poly,
    pub chi_expected: Poly,
    pub chi_factored_check: bool,
}

fn lin(a: Rat) -> Poly {
    Poly::new(vec![Rat::one(), a])
}

fn build(num: Poly, den: Poly, chi_expected: Poly) -> Result<DeconvRecord> {
    let (p, q) = ClassF::from_r_parts(&num, &den)?;
    let chi = char_poly_raw(&p, &q);
    let f = ClassF::new(p, q)?;
    let r = RatFun::new(num, den)?;
    Ok(DeconvRecord { f, r, chi_factored_check: chi == chi_expected, chi, chi_expected })
}

/// `R = u^2 x^3 w^2 + (1 - x)^3 u w / (1 - u w)`, `u != 0`.
pub fn deconv_wmp(u: &Rat, x: &Rat) -> Result<DeconvRecord> {
    if u.is_zero() {
        return Err(FclError::Domain("u must be nonzero".into()));
    }
    let one = Rat::one();
    let a = u * u * x * x * x;
    let omx = &one - x;
    let b = &omx * &omx * &omx;
    let den = lin(-u.clone());
    let num = &Poly::monomial(a, 2) * &den + Poly::monomial(&b * u, 1);
    let ux = u * x;
    let expected = &lin(-ux.clone()).pow(2)
        * &Poly::new(vec![one, rat(-2) * u + rat(2) * &ux, -(u * u * x)]);
    build(num, den, expected)
}

/// `R = a u w / (1 - u w) + b v w / (1 - v w)` with
/// `a = (u - x)^3 / (u^2 (u - v))`, `b = (v - x)^3 / (v^2 (v - u))`.
pub fn deconv_mpmp(u: &Rat, v: &Rat, x: &Rat) -> Result<DeconvRecord> {
    if u.is_zero() || v.is_zero() || u == v {
        return Err(FclError::Domain("need u, v nonzero and distinct".into()));
    }
    let cube = |r: Rat| &r * &r * &r;
    let a = cube(u - x) / (u * u * (u - v));
    let b = cube(v - x) / (v * v * (v - u));
    let (du, dv) = (lin(-u.clone()), lin(-v.clone()));
    let num = &Poly::monomial(&a * u, 1) * &dv + &Poly::monomial(&b * v, 1) * &du;
    let den = &du * &dv;
    let expected = &lin(-x.clone()).pow(2)
        * &Poly::new(vec![
            Rat::one(),
            rat(2) * (x - u - v),
            rat(3) * u * v - x * u - x * v,
        ]);
    build(num, den, expected)
}
