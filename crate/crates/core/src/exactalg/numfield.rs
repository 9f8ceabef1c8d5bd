use num::{One, Zero};

use super::algebraic::AlgebraicReal;
use super::interval::Interval;
use super::poly::Poly;
use super::rat::Rat;

/// Arithmetic in `Q(theta)` for a real algebraic `theta`.
///
/// Elements are polynomials in `t` reduced modulo a squarefree modulus that
/// vanishes at `theta`. Zero tests are exact: a gcd with the modulus either
/// exposes `theta` as a root (the element vanishes, and the modulus shrinks to
/// the gcd) or splits it off (the element is invertible). Signs of nonzero
/// elements come from interval evaluation on a refined isolating interval,
/// bounded by `max_bits` of refinement.
#[derive(Clone, Debug)]
pub struct NumberField {
    root: AlgebraicReal,
    max_bits: u64,
}

pub(crate) type FPoly = Vec<Poly>;

impl NumberField {
    pub fn new(root: &AlgebraicReal, max_bits: u64) -> NumberField {
        NumberField { root: root.clone(), max_bits }
    }

    pub fn root(&self) -> &AlgebraicReal {
        &self.root
    }

    pub fn modulus(&self) -> &Poly {
        self.root.poly()
    }

    pub fn reduce(&self, a: &Poly) -> Poly {
        if self.modulus().deg() == 0 {
            return Poly::zero();
        }
        a.rem(self.modulus())
    }

    pub fn mul(&self, a: &Poly, b: &Poly) -> Poly {
        self.reduce(&(a * b))
    }

    pub fn is_zero(&mut self, a: &Poly) -> bool {
        let a = self.reduce(a);
        if a.is_zero() {
            return true;
        }
        let g = Poly::gcd(self.modulus(), &a).expect("nonzero");
        if g.is_constant() {
            return false;
        }
        if self.root.is_root_of(&g) {
            self.root = self.root.with_poly(g);
            true
        } else {
            let m = self.modulus().exact_div(&g).expect("gcd divides");
            self.root = self.root.with_poly(m);
            false
        }
    }

    /// Inverse of a nonzero element.
    pub fn inv(&mut self, a: &Poly) -> Option<Poly> {
        if self.is_zero(a) {
            return None;
        }
        // extended Euclid on (a, m); gcd is a constant now
        let m = self.modulus().clone();
        let (mut r0, mut r1) = (self.reduce(a), m);
        let (mut s0, mut s1) = (Poly::one(), Poly::zero());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s = &s0 - &(&q * &s1);
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
        }
        let c = r0.coeff(0);
        debug_assert!(r0.is_constant() && !c.is_zero());
        Some(self.reduce(&s0.scale(&c.recip())))
    }

    /// Sign of the element at `theta`; `None` when refinement is exhausted.
    pub fn sign(&mut self, a: &Poly) -> Option<i32> {
        if self.is_zero(a) {
            return Some(0);
        }
        let a = self.reduce(a);
        let limit = Rat::new(One::one(), num::BigInt::one() << self.max_bits as usize);
        let mut r = self.root.clone();
        loop {
            let iv = Interval::new(r.lo().clone(), r.hi().clone());
            if let Some(s) = iv.eval_poly(&a).sign() {
                if s != 0 {
                    self.root = r;
                    return Some(s);
                }
            }
            if r.is_point() {
                return Some(0);
            }
            if r.width() < limit {
                return None;
            }
            r.bisect();
        }
    }

    pub(crate) fn trim(&mut self, p: &mut FPoly) {
        while let Some(top) = p.last() {
            let top = top.clone();
            if self.is_zero(&top) {
                p.pop();
            } else {
                break;
            }
        }
        for c in p.iter_mut() {
            *c = self.reduce(c);
        }
    }

    fn deriv(&self, p: &FPoly) -> FPoly {
        p.iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c.scale(&Rat::from_integer((i as i64).into())))
            .collect()
    }

    /// Remainder of `a` by `b` (`b` trimmed and nonzero).
    fn rem(&mut self, a: &FPoly, b: &FPoly) -> Option<FPoly> {
        let mut r = a.clone();
        self.trim(&mut r);
        let db = b.len() - 1;
        let inv = self.inv(b.last()?)?;
        while r.len() > db {
            let k = r.len() - 1 - db;
            let coef = self.mul(r.last().unwrap(), &inv);
            for (j, bj) in b.iter().enumerate() {
                let t = self.mul(&coef, bj);
                r[k + j] = self.reduce(&(&r[k + j] - &t));
            }
            r.pop();
            self.trim(&mut r);
        }
        Some(r)
    }

    fn gcd(&mut self, a: &FPoly, b: &FPoly) -> Option<FPoly> {
        let mut x = a.clone();
        let mut y = b.clone();
        self.trim(&mut x);
        self.trim(&mut y);
        while !y.is_empty() {
            let r = self.rem(&x, &y)?;
            x = y;
            y = r;
        }
        Some(x)
    }

    fn exact_div(&mut self, a: &FPoly, b: &FPoly) -> Option<FPoly> {
        let mut r = a.clone();
        self.trim(&mut r);
        if r.len() < b.len() {
            return Some(Vec::new());
        }
        let db = b.len() - 1;
        let inv = self.inv(b.last()?)?;
        let mut q = vec![Poly::zero(); r.len() - db];
        for k in (0..q.len()).rev() {
            let coef = self.mul(&r[k + db], &inv);
            for (j, bj) in b.iter().enumerate() {
                let t = self.mul(&coef, bj);
                r[k + j] = self.reduce(&(&r[k + j] - &t));
            }
            q[k] = coef;
        }
        Some(q)
    }

    fn sign_at_infinity(&mut self, p: &FPoly, negative: bool) -> Option<i32> {
        let s = self.sign(p.last()?)?;
        Some(if negative && (p.len() - 1) % 2 == 1 { -s } else { s })
    }

    /// Distinct real roots of a polynomial with coefficients in this field,
    /// and its degree after removing repeated factors. `None` on exhaustion.
    pub(crate) fn real_root_profile(&mut self, p: &FPoly) -> Option<(usize, usize)> {
        let mut p = p.clone();
        self.trim(&mut p);
        if p.len() <= 1 {
            return Some((0, 0));
        }
        let d = self.deriv(&p);
        let g = self.gcd(&p, &d)?;
        let s = if g.len() > 1 { self.exact_div(&p, &g)? } else { p };
        let deg = s.len() - 1;
        if deg == 0 {
            return Some((0, 0));
        }
        let mut seq = vec![s.clone(), self.deriv(&s)];
        loop {
            let n = seq.len();
            let r = self.rem(&seq[n - 2], &seq[n - 1])?;
            if r.is_empty() {
                break;
            }
            seq.push(r.iter().map(|c| -c).collect());
        }
        let mut v = [0usize; 2];
        for (slot, neg) in [(0, true), (1, false)] {
            let mut last = 0;
            for q in &seq {
                let s = self.sign_at_infinity(q, neg)?;
                if s != 0 {
                    if last != 0 && s != last {
                        v[slot] += 1;
                    }
                    last = s;
                }
            }
        }
        Some((v[0].saturating_sub(v[1]), deg))
    }

    /// Does the polynomial have a repeated root (over C)?
    pub(crate) fn has_repeated_root(&mut self, p: &FPoly) -> Option<bool> {
        let mut p = p.clone();
        self.trim(&mut p);
        if p.len() <= 2 {
            return Some(false);
        }
        let d = self.deriv(&p);
        let g = self.gcd(&p, &d)?;
        Some(g.len() > 1)
    }
}
