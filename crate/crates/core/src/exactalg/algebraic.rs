use std::cmp::Ordering;
use std::fmt;

use num::bigint::BigInt;
use num::{One, Signed, Zero};

use super::poly::Poly;
use super::rat::{rat_to_f64, render_rat, simplest_between, Rat};
use super::sturm::{sturm_count, Ext};
use crate::error::{FclError, Result};

/// Real algebraic number: a squarefree defining polynomial with exactly one
/// root in the open interval `(lo, hi)` and no root at either endpoint, or a
/// rational point `lo = hi` with `defining(lo) = 0`.
#[derive(Clone)]
pub struct AlgebraicReal {
    poly: Poly,
    lo: Rat,
    hi: Rat,
}

fn half() -> Rat {
    Rat::new(BigInt::one(), BigInt::from(2))
}

impl AlgebraicReal {
    pub fn from_rat(r: Rat) -> AlgebraicReal {
        AlgebraicReal { poly: Poly::new(vec![-r.clone(), Rat::one()]), lo: r.clone(), hi: r }
    }

    /// Validated constructor.
    pub fn new(poly: Poly, lo: Rat, hi: Rat) -> Result<AlgebraicReal> {
        if poly.is_zero() {
            return Err(FclError::ZeroPolynomial);
        }
        if !poly.is_squarefree() {
            return Err(FclError::NotSquarefree);
        }
        if lo > hi {
            return Err(FclError::Domain("lo > hi".into()));
        }
        if lo == hi {
            if !poly.eval(&lo).is_zero() {
                return Err(FclError::Domain("point is not a root".into()));
            }
            return Ok(AlgebraicReal::from_rat(lo));
        }
        let n = sturm_count(&poly, &Ext::Fin(lo.clone()), &Ext::Fin(hi.clone()))?;
        let at_lo = poly.eval(&lo).is_zero();
        let at_hi = poly.eval(&hi).is_zero();
        let total = n + usize::from(at_lo);
        if total != 1 {
            return Err(FclError::Domain(format!("interval holds {total} roots, expected 1")));
        }
        if at_lo {
            return Ok(AlgebraicReal::from_rat(lo));
        }
        if at_hi {
            return Ok(AlgebraicReal::from_rat(hi));
        }
        Ok(AlgebraicReal::from_isolating(poly, lo, hi))
    }

    /// Trusted constructor used after isolation; detects rational roots.
    pub(crate) fn from_isolating(poly: Poly, lo: Rat, hi: Rat) -> AlgebraicReal {
        let mut a = AlgebraicReal { poly: poly.primitive(), lo, hi };
        a.detect_rational();
        a
    }

    fn detect_rational(&mut self) {
        if self.is_point() {
            return;
        }
        let lc = self.poly.lc().abs().to_integer();
        if lc.bits() > 2048 {
            return;
        }
        // Two fractions with denominators <= L differ by at least 1/L^2.
        let l2 = Rat::from_integer(&lc * &lc);
        let target = l2.recip();
        while self.width() >= target && !self.is_point() {
            self.bisect();
        }
        if self.is_point() {
            return;
        }
        let r = simplest_between(&self.lo, &self.hi);
        if r.denom() <= &lc && self.poly.eval(&r).is_zero() {
            *self = AlgebraicReal::from_rat(r);
        }
    }

    pub fn poly(&self) -> &Poly {
        &self.poly
    }

    pub fn lo(&self) -> &Rat {
        &self.lo
    }

    pub fn hi(&self) -> &Rat {
        &self.hi
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn as_rational(&self) -> Option<&Rat> {
        self.is_point().then_some(&self.lo)
    }

    pub fn width(&self) -> Rat {
        &self.hi - &self.lo
    }

    /// Halve the isolating interval.
    pub fn bisect(&mut self) {
        if self.is_point() {
            return;
        }
        let m = (&self.lo + &self.hi) * half();
        let vm = self.poly.eval(&m);
        if vm.is_zero() {
            *self = AlgebraicReal::from_rat(m);
            return;
        }
        let vl = self.poly.eval(&self.lo);
        if vl.is_positive() == vm.is_positive() {
            self.lo = m;
        } else {
            self.hi = m;
        }
    }

    pub fn refine_to(&self, width: &Rat) -> AlgebraicReal {
        let mut a = self.clone();
        while !a.is_point() && &a.width() > width {
            a.bisect();
        }
        a
    }

    /// Replace the defining polynomial by a squarefree factor that still vanishes here.
    pub(crate) fn with_poly(&self, poly: Poly) -> AlgebraicReal {
        AlgebraicReal { poly: poly.primitive(), lo: self.lo.clone(), hi: self.hi.clone() }
    }

    pub fn to_f64(&self) -> f64 {
        if self.is_point() {
            return rat_to_f64(&self.lo);
        }
        let scale = rat_to_f64(&self.lo).abs().max(rat_to_f64(&self.hi).abs()).max(1e-300);
        let w = Rat::from_float(scale * 1e-18).unwrap_or_else(|| Rat::new(1.into(), BigInt::from(10).pow(18)));
        let a = self.refine_to(&w);
        rat_to_f64(&((&a.lo + &a.hi) * half()))
    }

    /// True iff this number is a root of `g`.
    pub fn is_root_of(&self, g: &Poly) -> bool {
        if g.is_zero() {
            return true;
        }
        if self.is_point() {
            return g.eval(&self.lo).is_zero();
        }
        let h = match Poly::gcd(&self.poly, g) {
            Ok(h) => h,
            Err(_) => return false,
        };
        if h.is_constant() {
            return false;
        }
        sturm_count(&h, &Ext::Fin(self.lo.clone()), &Ext::Fin(self.hi.clone())).unwrap_or(0) > 0
    }

    pub fn cmp_rat(&self, r: &Rat) -> Ordering {
        if self.is_point() {
            return self.lo.cmp(r);
        }
        let mut a = self.clone();
        loop {
            if a.is_point() {
                return a.lo.cmp(r);
            }
            if r <= &a.lo {
                return Ordering::Greater;
            }
            if r >= &a.hi {
                return Ordering::Less;
            }
            if a.poly.eval(r).is_zero() {
                return Ordering::Equal;
            }
            a.bisect();
        }
    }

    /// Exact comparison.
    pub fn cmp_exact(&self, other: &AlgebraicReal) -> Ordering {
        if let Some(r) = other.as_rational() {
            return self.cmp_rat(r);
        }
        if let Some(r) = self.as_rational() {
            return other.cmp_rat(r).reverse();
        }
        let g = Poly::gcd(&self.poly, &other.poly).expect("nonzero");
        let mut a = self.clone();
        let mut b = other.clone();
        loop {
            if a.is_point() || b.is_point() {
                return a.cmp_exact(&b);
            }
            if a.hi <= b.lo {
                return Ordering::Less;
            }
            if b.hi <= a.lo {
                return Ordering::Greater;
            }
            if !g.is_constant() {
                let lo = if a.lo > b.lo { a.lo.clone() } else { b.lo.clone() };
                let hi = if a.hi < b.hi { a.hi.clone() } else { b.hi.clone() };
                let lo_root = g.eval(&lo).is_zero();
                let n = sturm_count(&g, &Ext::Fin(lo), &Ext::Fin(hi)).unwrap_or(0);
                if n > 0 || lo_root {
                    return Ordering::Equal;
                }
            }
            a.bisect();
            b.bisect();
        }
    }

    /// A rational strictly between `a < b`.
    pub fn rational_between(a: &AlgebraicReal, b: &AlgebraicReal) -> Rat {
        let mut a = a.clone();
        let mut b = b.clone();
        while a.hi >= b.lo {
            a.bisect();
            b.bisect();
        }
        (&a.hi + &b.lo) * half()
    }

    /// Decimal approximation with `digits` fractional digits.
    pub fn approx(&self, digits: usize) -> String {
        let w = Rat::new(BigInt::one(), BigInt::from(10).pow(digits as u32 + 2));
        let a = self.refine_to(&w);
        let m = (&a.lo + &a.hi) * half();
        decimal(&m, digits)
    }
}

/// `r` rounded to `digits` fractional digits.
pub fn decimal(r: &Rat, digits: usize) -> String {
    let scale = BigInt::from(10).pow(digits as u32);
    let scaled = (r * Rat::from_integer(scale.clone())).round().to_integer();
    let neg = scaled.is_negative();
    let mag = scaled.abs();
    let int = &mag / &scale;
    let frac = &mag % &scale;
    let mut s = String::new();
    if neg && !mag.is_zero() {
        s.push('-');
    }
    s.push_str(&int.to_string());
    if digits > 0 {
        s.push('.');
        let f = frac.to_string();
        s.push_str(&"0".repeat(digits - f.len()));
        s.push_str(&f);
    }
    s
}

impl PartialEq for AlgebraicReal {
    fn eq(&self, o: &Self) -> bool {
        self.cmp_exact(o) == Ordering::Equal
    }
}

impl Eq for AlgebraicReal {}

impl PartialOrd for AlgebraicReal {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl Ord for AlgebraicReal {
    fn cmp(&self, o: &Self) -> Ordering {
        self.cmp_exact(o)
    }
}

impl fmt::Debug for AlgebraicReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_rational() {
            Some(r) => write!(f, "{}", render_rat(r)),
            None => write!(
                f,
                "root of {} in ({}, {})",
                self.poly,
                render_rat(&self.lo),
                render_rat(&self.hi)
            ),
        }
    }
}

impl fmt::Display for AlgebraicReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_rational() {
            Some(r) => write!(f, "{}", render_rat(r)),
            None => write!(f, "~{}", self.approx(12)),
        }
    }
}
