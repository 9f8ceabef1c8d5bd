//! The class of `F(w) = w P(w) / Q(w)` and its operation algebra.

pub mod series;

use std::fmt;

use num::{One, Zero};

use crate::error::{FclError, Result};
use crate::exactalg::{render_rat, Poly, Rat};
use series::{inv_trunc, mul_trunc, poly_of_series, ratfun_series, z_series};

/// `F(w) = w P(w) / Q(w)` with `P(0) = Q(0) = 1` and `gcd(P, Q) = 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ClassF {
    p: Poly,
    q: Poly,
}

/// Reduced rational function `num / den`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFun {
    num: Poly,
    den: Poly,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesKind {
    Moments,
    Cumulants,
    Generic,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesPrefix {
    pub terms: Vec<Rat>,
    pub kind: SeriesKind,
}

impl RatFun {
    /// Reduce and scale so that `den(0) = 1` (or `den` monic when `den(0) = 0`).
    pub fn new(num: Poly, den: Poly) -> Result<RatFun> {
        if den.is_zero() {
            return Err(FclError::ZeroPolynomial);
        }
        if num.is_zero() {
            return Ok(RatFun { num, den: Poly::one() });
        }
        let g = Poly::gcd(&num, &den)?;
        let num = num.exact_div(&g).expect("gcd divides");
        let den = den.exact_div(&g).expect("gcd divides");
        let c = den.coeff(0);
        let s = if c.is_zero() { den.lc().recip() } else { c.recip() };
        Ok(RatFun { num: num.scale(&s), den: den.scale(&s) })
    }

    pub fn from_poly(p: Poly) -> RatFun {
        RatFun { num: p, den: Poly::one() }
    }

    pub fn zero() -> RatFun {
        RatFun::from_poly(Poly::zero())
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, o: &RatFun) -> RatFun {
        RatFun::new(&(&self.num * &o.den) + &(&o.num * &self.den), &self.den * &o.den).expect("nonzero den")
    }

    pub fn sub(&self, o: &RatFun) -> RatFun {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> RatFun {
        RatFun { num: -&self.num, den: self.den.clone() }
    }

    pub fn mul(&self, o: &RatFun) -> RatFun {
        RatFun::new(&self.num * &o.num, &self.den * &o.den).expect("nonzero den")
    }

    pub fn div(&self, o: &RatFun) -> Result<RatFun> {
        if o.is_zero() {
            return Err(FclError::Domain("division by the zero rational function".into()));
        }
        RatFun::new(&self.num * &o.den, &self.den * &o.num)
    }

    pub fn scale(&self, c: &Rat) -> RatFun {
        RatFun::new(self.num.scale(c), self.den.clone()).expect("nonzero den")
    }

    /// `R(c w)`.
    pub fn scale_var(&self, c: &Rat) -> RatFun {
        RatFun::new(self.num.scale_var(c), self.den.scale_var(c)).expect("nonzero den")
    }

    pub fn pow(&self, k: u32) -> RatFun {
        RatFun { num: self.num.pow(k), den: self.den.pow(k) }
    }

    pub fn eval(&self, x: &Rat) -> Option<Rat> {
        let d = self.den.eval(x);
        (!d.is_zero()).then(|| self.num.eval(x) / d)
    }

    /// Taylor coefficients `0..n`; requires `den(0) != 0`.
    pub fn series(&self, n: usize) -> Vec<Rat> {
        ratfun_series(&self.num, &self.den, n)
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFun({self})")
    }
}

trait IsOne {
    fn is_one(&self) -> bool;
}

impl IsOne for Poly {
    fn is_one(&self) -> bool {
        *self == Poly::one()
    }
}

impl ClassF {
    /// Normalizing constructor: removes the common factor and rescales both
    /// polynomials to constant term 1.
    pub fn new(p: Poly, q: Poly) -> Result<ClassF> {
        if p.coeff(0).is_zero() {
            return Err(FclError::NotInClass("P(0) = 0".into()));
        }
        if q.coeff(0).is_zero() {
            return Err(FclError::NotInClass("Q(0) = 0".into()));
        }
        let g = Poly::gcd(&p, &q)?;
        let p = p.exact_div(&g).expect("gcd divides");
        let q = q.exact_div(&g).expect("gcd divides");
        let p = p.scale(&p.coeff(0).recip());
        let q = q.scale(&q.coeff(0).recip());
        Ok(ClassF { p, q })
    }

    /// `F(w) = w`.
    pub fn identity() -> ClassF {
        ClassF { p: Poly::one(), q: Poly::one() }
    }

    pub fn p(&self) -> &Poly {
        &self.p
    }

    pub fn q(&self) -> &Poly {
        &self.q
    }

    pub fn eval(&self, w: &Rat) -> Option<Rat> {
        let d = self.q.eval(w);
        (!d.is_zero()).then(|| w * self.p.eval(w) / d)
    }

    /// `R(w) = w / F(w) - 1 = (Q - P) / P`.
    pub fn r_transform(&self) -> RatFun {
        RatFun::new(&self.q - &self.p, self.p.clone()).expect("P nonzero")
    }

    /// Unreduced `(P, Q) = (den, den + num)` for `F = w / (1 + R)`.
    pub fn from_r_raw(r: &RatFun) -> Result<(Poly, Poly)> {
        Self::from_r_parts(r.num(), r.den())
    }

    /// As [`ClassF::from_r_raw`] for an explicit, possibly unreduced, pair.
    pub fn from_r_parts(num: &Poly, den: &Poly) -> Result<(Poly, Poly)> {
        if den.coeff(0).is_zero() {
            return Err(FclError::InvalidRTransform("denominator vanishes at 0".into()));
        }
        if !num.coeff(0).is_zero() {
            return Err(FclError::InvalidRTransform("R(0) != 0".into()));
        }
        let q = den + num;
        if q.coeff(0).is_zero() {
            return Err(FclError::NotInClass("1 + R vanishes at 0".into()));
        }
        Ok((den.clone(), q))
    }

    pub fn from_r(r: &RatFun) -> Result<ClassF> {
        let (p, q) = Self::from_r_raw(r)?;
        ClassF::new(p, q)
    }

    /// `F / (1 + u F)`.
    pub fn translate(&self, u: &Rat) -> ClassF {
        let q = &self.q + &self.p.shift_up(1).scale(u);
        ClassF::new(self.p.clone(), q).expect("constant terms stay 1")
    }

    /// `F(c w) / c`.
    pub fn dilate(&self, c: &Rat) -> Result<ClassF> {
        if c.is_zero() {
            return Err(FclError::Domain("dilation by 0".into()));
        }
        ClassF::new(self.p.scale_var(c), self.q.scale_var(c))
    }

    /// Free convolution: R-transforms add.
    pub fn boxplus(&self, o: &ClassF) -> ClassF {
        let pp = &self.p * &o.p;
        let q = &(&(&self.p * &o.q) + &(&o.p * &self.q)) - &pp;
        ClassF::new(pp, q).expect("constant terms stay 1")
    }

    /// Free power: R-transform scales by `t`.
    pub fn free_power(&self, t: &Rat) -> ClassF {
        let q = &self.p + &(&self.q - &self.p).scale(t);
        ClassF::new(self.p.clone(), q).expect("constant terms stay 1")
    }

    /// Unreduced `(P, Q)` of `f2(f1(w))`.
    pub fn compose_raw(f2: &ClassF, f1: &ClassF) -> (Poly, Poly) {
        let m = f2.p.deg().max(f2.q.deg());
        let wp1 = f1.p.shift_up(1);
        let lift = |poly: &Poly| -> Poly {
            let mut acc = Poly::zero();
            for (i, a) in poly.coeffs().iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                let term = &wp1.pow(i as u32) * &f1.q.pow((m - i) as u32);
                acc = &acc + &term.scale(a);
            }
            acc
        };
        (&f1.p * &lift(&f2.p), &f1.q * &lift(&f2.q))
    }

    /// `f2(f1(w))`; the monotone convolution `mu1 |> mu2` is `compose(F_mu2, F_mu1)`.
    pub fn compose(f2: &ClassF, f1: &ClassF) -> ClassF {
        let (p, q) = Self::compose_raw(f2, f1);
        ClassF::new(p, q).expect("constant terms stay 1")
    }

    /// Moments by Newton inversion of `D P(D) - z Q(D) = 0`.
    pub fn moments_newton(&self, n: usize) -> Vec<Rat> {
        let len = n + 2;
        let mut d = z_series(len.max(2));
        let dp = self.p.derivative();
        let dq = self.q.derivative();
        let z = z_series(len.max(2));
        let mut prec = 2;
        while prec < len {
            prec = (2 * prec).min(len);
            let dt: Vec<Rat> = d.iter().take(prec).cloned().collect();
            let zt: Vec<Rat> = z.iter().take(prec).cloned().collect();
            let pd = poly_of_series(&self.p, &dt, prec);
            let qd = poly_of_series(&self.q, &dt, prec);
            let phi: Vec<Rat> = mul_trunc(&dt, &pd, prec)
                .into_iter()
                .zip(mul_trunc(&zt, &qd, prec))
                .map(|(a, b)| a - b)
                .collect();
            let dpd = poly_of_series(&dp, &dt, prec);
            let dqd = poly_of_series(&dq, &dt, prec);
            let dphi: Vec<Rat> = pd
                .iter()
                .zip(mul_trunc(&dt, &dpd, prec))
                .zip(mul_trunc(&zt, &dqd, prec))
                .map(|((a, b), c)| a + b - c)
                .collect();
            let corr = mul_trunc(&phi, &inv_trunc(&dphi, prec), prec);
            for (i, c) in corr.into_iter().enumerate() {
                d[i] -= c;
            }
        }
        d.into_iter().skip(1).take(n + 1).collect()
    }

    /// Moments from free cumulants: `s_n = sum_k r_k [z^{n-k}] M(z)^k`.
    pub fn moments_from_cumulants(&self, n: usize) -> Vec<Rat> {
        let r = self.r_transform().series(n + 1);
        moments_from_cumulant_seq(&r, n)
    }

    /// `s_0..s_n` by both methods; disagreement is an error.
    pub fn moments(&self, n: usize) -> Result<SeriesPrefix> {
        let a = self.moments_newton(n);
        let b = self.moments_from_cumulants(n);
        if a != b {
            let k = a.iter().zip(&b).position(|(x, y)| x != y).unwrap_or(0);
            return Err(FclError::Computation(format!(
                "moment methods disagree at n = {k}: {} vs {}",
                render_rat(&a[k]),
                render_rat(&b[k])
            )));
        }
        Ok(SeriesPrefix { terms: a, kind: SeriesKind::Moments })
    }

    /// `r_0 = 0, r_1..r_n`.
    pub fn cumulants(&self, n: usize) -> SeriesPrefix {
        SeriesPrefix { terms: self.r_transform().series(n + 1), kind: SeriesKind::Cumulants }
    }

    /// Expression form accepted by the CLI parser.
    pub fn to_expr(&self) -> String {
        let p = if self.p.is_one() { "w".to_string() } else { format!("w*({})", self.p) };
        if self.q.is_one() {
            p
        } else {
            format!("{p}/({})", self.q)
        }
    }
}

/// Moment recursion from a cumulant sequence `r[0] = 0, r[1], ...`.
pub fn moments_from_cumulant_seq(r: &[Rat], n: usize) -> Vec<Rat> {
    // pow[k][m] = [z^m] M(z)^k
    let mut s: Vec<Rat> = vec![Rat::one()];
    let mut pow: Vec<Vec<Rat>> = vec![vec![Rat::zero(); n + 1]; n + 1];
    pow[0][0] = Rat::one();
    for m in 1..=n {
        for k in 1..=m {
            let j = m - k;
            let mut acc = Rat::zero();
            for i in 0..=j {
                if !pow[k - 1][j - i].is_zero() {
                    acc += &s[i] * &pow[k - 1][j - i];
                }
            }
            pow[k][j] = acc;
        }
        let mut sm = Rat::zero();
        for k in 1..=m {
            if let Some(rk) = r.get(k) {
                if !rk.is_zero() {
                    sm += rk * &pow[k][m - k];
                }
            }
        }
        s.push(sm);
    }
    s
}

impl fmt::Display for ClassF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_expr())
    }
}

impl fmt::Debug for ClassF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ClassF({})", self.to_expr())
    }
}

/// `D(z) = z sum s_n z^n` as a series of length `n + 2`.
pub fn d_series(moments: &[Rat]) -> Vec<Rat> {
    let mut v = vec![Rat::zero()];
    v.extend(moments.iter().cloned());
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{rat, ratio};

    fn p(c: &[i64]) -> Poly {
        Poly::from_ints(c)
    }

    fn f(pc: &[i64], qc: &[i64]) -> ClassF {
        ClassF::new(p(pc), p(qc)).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<Rat> {
        v.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn construction_normalizes() {
        let a = f(&[1, -1], &[1]);
        assert_eq!(ClassF::new(p(&[2, -2]), p(&[2])).unwrap(), a);
        assert_eq!(ClassF::new(&p(&[1, -1]) * &p(&[1, 1]), p(&[1, 1])).unwrap(), a);
        assert!(matches!(ClassF::new(p(&[0, 1]), p(&[1])), Err(FclError::NotInClass(_))));
        assert!(matches!(ClassF::new(p(&[1]), p(&[0, 1])), Err(FclError::NotInClass(_))));
    }

    #[test]
    fn r_transform_examples() {
        let (v, t) = (rat(3), ratio(1, 2));
        // MP(v, t): w(1 - v w) / (1 - v w + t v w)
        let mp = ClassF::new(Poly::new(vec![rat(1), -v.clone()]), Poly::new(vec![rat(1), -&v + &t * &v])).unwrap();
        let r = mp.r_transform();
        let expect = RatFun::new(Poly::new(vec![rat(0), &t * &v]), Poly::new(vec![rat(1), -v])).unwrap();
        assert_eq!(r, expect);
        assert!(ClassF::identity().r_transform().is_zero());
        let w = ClassF::new(p(&[1]), Poly::new(vec![rat(1), rat(0), t.clone()])).unwrap();
        assert_eq!(w.r_transform(), RatFun::from_poly(Poly::monomial(t, 2)));
    }

    #[test]
    fn from_r_examples() {
        let r = RatFun::new(p(&[0, 1]), p(&[1, -1]).pow(2)).unwrap();
        assert_eq!(ClassF::from_r(&r).unwrap(), f(&[1, -2, 1], &[1, -1, 1]));
        assert_eq!(ClassF::from_r(&RatFun::zero()).unwrap(), ClassF::identity());
        let r = RatFun::new(p(&[0, 1, 1]), p(&[1, -1]).pow(3)).unwrap();
        assert_eq!(ClassF::from_r(&r).unwrap(), f(&[1, -3, 3, -1], &[1, -2, 4, -1]));
        let bad = RatFun::from_poly(p(&[1, 1]));
        assert!(matches!(ClassF::from_r(&bad), Err(FclError::InvalidRTransform(_))));
    }

    #[test]
    fn translation_dilation() {
        let u = ratio(2, 3);
        assert_eq!(ClassF::identity().translate(&u), ClassF::new(p(&[1]), Poly::new(vec![rat(1), u.clone()])).unwrap());
        let a = f(&[1, -2, 1], &[1, -1, 1]);
        assert_eq!(a.translate(&rat(0)), a);
        assert_eq!(f(&[1, -1], &[1]).dilate(&rat(-1)).unwrap(), f(&[1, 1], &[1]));
        assert_eq!(a.dilate(&rat(1)).unwrap(), a);
        assert!(a.dilate(&rat(0)).is_err());
        let s = a.moments(6).unwrap().terms;
        let c = ratio(-3, 2);
        let sd = a.dilate(&c).unwrap().moments(6).unwrap().terms;
        let mut cn = rat(1);
        for k in 0..=6 {
            assert_eq!(sd[k], &s[k] * &cn);
            cn *= &c;
        }
    }

    #[test]
    fn boxplus_and_powers() {
        let a = f(&[1, -2, 1], &[1, -1, 1]);
        assert_eq!(a.boxplus(&ClassF::identity()), a);
        // MP(1, 1/2) and MP(-1, 1/2)
        let m1 = ClassF::new(p(&[1, -1]), Poly::new(vec![rat(1), ratio(-1, 2)])).unwrap();
        let m2 = ClassF::new(p(&[1, 1]), Poly::new(vec![rat(1), ratio(1, 2)])).unwrap();
        let dm = m1.boxplus(&m2);
        assert_eq!(dm, f(&[1, 0, -1], &[1]));
        let t = ratio(7, 3);
        assert_eq!(dm.free_power(&t), ClassF::new(p(&[1, 0, -1]), Poly::new(vec![rat(1), rat(0), t - rat(1)])).unwrap());
        assert_eq!(dm.free_power(&rat(1)), dm);
        assert_eq!(dm.free_power(&rat(0)), ClassF::identity());
    }

    #[test]
    fn compositions() {
        let (u, v) = (rat(2), rat(-3));
        let f1 = ClassF::new(Poly::new(vec![rat(1), u.clone()]), p(&[1])).unwrap();
        let f2 = ClassF::new(Poly::new(vec![rat(1), v.clone()]), p(&[1])).unwrap();
        let expect = &Poly::new(vec![rat(1), u.clone()]) * &Poly::new(vec![rat(1), v.clone(), &u * &v]);
        assert_eq!(ClassF::compose(&f2, &f1), ClassF::new(expect, p(&[1])).unwrap());
        let a = f(&[1, -2, 1], &[1, -1, 1]);
        assert_eq!(ClassF::compose(&ClassF::identity(), &a), a);
        assert_eq!(ClassF::compose(&a, &ClassF::identity()), a);
        // W(t) |> MP(v, s) is F_MP(F_W(w))
        let (t, s, v) = (ratio(1, 3), rat(2), rat(5));
        let w = ClassF::new(p(&[1]), Poly::new(vec![rat(1), rat(0), t.clone()])).unwrap();
        let mp = ClassF::new(Poly::new(vec![rat(1), -v.clone()]), Poly::new(vec![rat(1), -&v + &s * &v])).unwrap();
        let got = ClassF::compose(&mp, &w);
        let num = Poly::new(vec![rat(1), -v.clone(), t.clone()]);
        let den = &Poly::new(vec![rat(1), rat(0), t.clone()]) * &Poly::new(vec![rat(1), -&v + &s * &v, t]);
        assert_eq!(got, ClassF::new(num, den).unwrap());
    }

    #[test]
    fn moment_examples() {
        let cat = f(&[1, -1], &[1]);
        assert_eq!(cat.moments(5).unwrap().terms, ints(&[1, 1, 2, 5, 14, 42]));
        let a = f(&[1, -2, 1], &[1, -1, 1]);
        assert_eq!(
            a.moments(10).unwrap().terms,
            ints(&[1, 1, 3, 10, 37, 146, 602, 2563, 11181, 49720, 224540])
        );
        let r = a.cumulants(8).terms;
        assert_eq!(r, ints(&[0, 1, 2, 3, 4, 5, 6, 7, 8]));
        assert!(ClassF::identity().cumulants(5).terms.iter().all(|x| x.is_zero()));
    }

    #[test]
    fn first_moment_formulas() {
        // P = 1 + a1 w + a2 w^2, Q = 1 + b1 w + b2 w^2
        let (a1, a2, b1, b2) = (ratio(2, 3), ratio(-1, 5), ratio(7, 2), rat(3));
        let fx = ClassF::new(
            Poly::new(vec![rat(1), a1.clone(), a2.clone()]),
            Poly::new(vec![rat(1), b1.clone(), b2.clone()]),
        )
        .unwrap();
        let s = fx.moments(2).unwrap().terms;
        assert_eq!(s[1], &b1 - &a1);
        let two = rat(2);
        let three = rat(3);
        assert_eq!(s[2], &two * &a1 * &a1 + &b1 * &b1 - &three * &a1 * &b1 - &a2 + &b2);
        assert_eq!(&s[2] - &s[1] * &s[1], &a1 * &a1 - &a1 * &b1 - &a2 + &b2);
    }

    #[test]
    fn expression_form() {
        assert_eq!(f(&[1, -1], &[1]).to_expr(), "w*(1 - w)");
        assert_eq!(f(&[1], &[1, 0, 1]).to_expr(), "w/(1 + w^2)");
        assert_eq!(ClassF::identity().to_expr(), "w");
    }
}
