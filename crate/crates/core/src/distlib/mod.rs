//! Named distribution families, Levy-Khintchine data and closed-form moments.

mod catalog;
mod deconv;
mod monotone;

pub use catalog::{catalog, CatalogEntry, CatalogFamily};
pub use deconv::{deconv_mpmp, deconv_wmp, DeconvRecord};
pub use monotone::{
    dirac_monotone, monotone_family, right_dirac_is_translation, Component, Decomposition, DiracMonotoneRecord,
    DiracTarget, MonotoneKind, MonotoneRecord,
};

use num::{BigInt, One, Signed, Zero};

use crate::classf::{ClassF, RatFun};
use crate::error::{FclError, Result};
use crate::exactalg::{binomial, rat, Poly, Rat};

fn lin(a: Rat) -> Poly {
    Poly::new(vec![Rat::one(), a])
}

/// `w / (1 + u w)`.
pub fn dirac(u: &Rat) -> ClassF {
    ClassF::new(Poly::one(), lin(u.clone())).expect("valid")
}

/// `w / (1 + t w^2)`, `t > 0`.
pub fn wigner(t: &Rat) -> Result<ClassF> {
    if !t.is_positive() {
        return Err(FclError::Domain("Wigner parameter must be positive".into()));
    }
    Ok(wigner_unchecked(t))
}

pub(crate) fn wigner_unchecked(t: &Rat) -> ClassF {
    ClassF::new(Poly::one(), Poly::new(vec![Rat::one(), Rat::zero(), t.clone()])).expect("valid")
}

/// `w (1 - v w) / (1 - v w + t v w)`, `v != 0`, `t > 0`.
pub fn mp(v: &Rat, t: &Rat) -> Result<ClassF> {
    if v.is_zero() {
        return Err(FclError::Domain("MP scale must be nonzero".into()));
    }
    if !t.is_positive() {
        return Err(FclError::Domain("MP rate must be positive".into()));
    }
    Ok(mp_unchecked(v, t))
}

pub(crate) fn mp_unchecked(v: &Rat, t: &Rat) -> ClassF {
    ClassF::new(lin(-v.clone()), lin(-v + t * v)).expect("valid")
}

fn pow(x: &Rat, k: usize) -> Rat {
    let mut r = Rat::one();
    for _ in 0..k {
        r *= x;
    }
    r
}

fn bin(n: u64, k: u64) -> Rat {
    Rat::from_integer(binomial(n, k))
}

pub fn dirac_moment(u: &Rat, n: usize) -> Rat {
    pow(u, n)
}

/// `v^n sum_{k=1}^n C(n, k-1) C(n-1, k-1) t^k / k`.
pub fn mp_moment(v: &Rat, t: &Rat, n: usize) -> Rat {
    if n == 0 {
        return Rat::one();
    }
    let n64 = n as u64;
    let mut s = Rat::zero();
    for k in 1..=n64 {
        s += bin(n64, k - 1) * bin(n64 - 1, k - 1) * pow(t, k as usize) / Rat::from_integer(BigInt::from(k));
    }
    pow(v, n) * s
}

/// `s_{2m} = C(2m+1, m) t^m / (2m+1)`, odd moments zero.
pub fn wigner_moment(t: &Rat, n: usize) -> Rat {
    if n % 2 == 1 {
        return Rat::zero();
    }
    let m = (n / 2) as u64;
    bin(2 * m + 1, m) * pow(t, m as usize) / Rat::from_integer(BigInt::from(2 * m + 1))
}

/// Levy-Khintchine data of a freely infinitely divisible law with finitely
/// many atoms in its Levy measure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevyData {
    u: Rat,
    c0: Rat,
    atoms: Vec<(Rat, Rat)>,
}

impl LevyData {
    pub fn new(u: Rat, c0: Rat, atoms: Vec<(Rat, Rat)>) -> Result<LevyData> {
        if c0.is_negative() {
            return Err(FclError::Domain("c0 must be nonnegative".into()));
        }
        for (i, (uk, ck)) in atoms.iter().enumerate() {
            if uk.is_zero() {
                return Err(FclError::Domain("atom location must be nonzero".into()));
            }
            if !ck.is_positive() {
                return Err(FclError::Domain("atom weight must be positive".into()));
            }
            if atoms[..i].iter().any(|(uj, _)| uj == uk) {
                return Err(FclError::Domain("atom locations must be distinct".into()));
            }
        }
        Ok(LevyData { u, c0, atoms })
    }

    pub fn u(&self) -> &Rat {
        &self.u
    }

    pub fn c0(&self) -> &Rat {
        &self.c0
    }

    pub fn atoms(&self) -> &[(Rat, Rat)] {
        &self.atoms
    }

    /// `u w + c0 w^2 + sum c_k u_k w / (1 - u_k w)`.
    pub fn r_transform(&self) -> RatFun {
        let mut r = RatFun::from_poly(Poly::new(vec![Rat::zero(), self.u.clone(), self.c0.clone()]));
        for (uk, ck) in &self.atoms {
            let term = RatFun::new(Poly::new(vec![Rat::zero(), ck * uk]), lin(-uk.clone())).expect("valid");
            r = r.add(&term);
        }
        r
    }
}

pub fn from_levy(l: &LevyData) -> ClassF {
    ClassF::from_r(&l.r_transform()).expect("R(0) = 0")
}

/// `R = (1 + w^2)^r - 1`.
pub fn fuss_f(r: u32) -> Result<ClassF> {
    if r < 1 {
        return Err(FclError::Domain("r must be at least 1".into()));
    }
    let rr = &Poly::from_ints(&[1, 0, 1]).pow(r) - &Poly::one();
    ClassF::from_r(&RatFun::from_poly(rr))
}

/// `C(2mr + r, m) r / (2mr + r)` at `n = 2m`, zero at odd `n`.
pub fn fuss_moment(r: u32, n: usize) -> Result<Rat> {
    if r < 1 {
        return Err(FclError::Domain("r must be at least 1".into()));
    }
    if n % 2 == 1 {
        return Ok(Rat::zero());
    }
    let (m, r) = ((n / 2) as u64, r as u64);
    let top = 2 * m * r + r;
    Ok(bin(top, m) * rat(r as i64) / Rat::from_integer(BigInt::from(top)))
}

/// `(1 + w^2 - 2 r w^2)(1 + w^2)^{r-1}`.
pub fn fuss_chi(r: u32) -> Poly {
    let r1 = r.max(1);
    &Poly::new(vec![Rat::one(), Rat::zero(), rat(1) - rat(2 * r1 as i64)]) * &Poly::from_ints(&[1, 0, 1]).pow(r1 - 1)
}

pub fn fuss_chi_check(r: u32) -> Result<bool> {
    Ok(crate::spectra::char_poly(&fuss_f(r)?) == fuss_chi(r))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::ratio;
    use crate::spectra::is_rr0;
    use proptest::prelude::*;

    fn ints(v: &[i64]) -> Vec<Rat> {
        v.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn family_moments() {
        let u = ratio(-2, 3);
        let m = dirac(&u).moments(6).unwrap().terms;
        for (n, x) in m.iter().enumerate() {
            assert_eq!(x, &dirac_moment(&u, n));
        }
        assert_eq!(mp(&rat(1), &rat(1)).unwrap().moments(6).unwrap().terms, ints(&[1, 1, 2, 5, 14, 42, 132]));
        assert_eq!(wigner(&rat(1)).unwrap().moments(8).unwrap().terms, ints(&[1, 0, 1, 0, 2, 0, 5, 0, 14]));
        assert!(wigner(&rat(0)).is_err());
        assert!(mp(&rat(0), &rat(1)).is_err());
        assert!(mp(&rat(1), &rat(-1)).is_err());
    }

    #[test]
    fn moment_formulas() {
        assert_eq!(mp_moment(&rat(1), &rat(1), 4), rat(14));
        assert_eq!(wigner_moment(&ratio(5, 2), 3), rat(0));
        let (v, t) = (ratio(3, 4), ratio(7, 5));
        assert_eq!(mp_moment(&v, &t, 1), &v * &t);
        for (v, t) in [(rat(2), ratio(1, 3)), (ratio(-1, 2), rat(3)), (rat(1), rat(1))] {
            let m = mp(&v, &t).unwrap().moments(15).unwrap().terms;
            let w = wigner(&t).unwrap().moments(15).unwrap().terms;
            for n in 0..=15 {
                assert_eq!(m[n], mp_moment(&v, &t, n));
                assert_eq!(w[n], wigner_moment(&t, n));
            }
        }
    }

    #[test]
    fn levy_examples() {
        let l = LevyData::new(rat(0), rat(0), vec![(rat(1), rat(1))]).unwrap();
        assert_eq!(from_levy(&l), mp(&rat(1), &rat(1)).unwrap());
        let l = LevyData::new(rat(-1), rat(1), vec![(rat(1), rat(1))]).unwrap();
        let expect = ClassF::new(Poly::from_ints(&[1, -1]), Poly::from_ints(&[1, -1, 2, -1])).unwrap();
        assert_eq!(from_levy(&l), expect);
        let l = LevyData::new(rat(0), rat(0), vec![(rat(1), ratio(1, 2)), (rat(-1), ratio(1, 2))]).unwrap();
        assert_eq!(from_levy(&l), ClassF::new(Poly::from_ints(&[1, 0, -1]), Poly::one()).unwrap());
        assert!(LevyData::new(rat(0), rat(-1), vec![]).is_err());
        assert!(LevyData::new(rat(0), rat(0), vec![(rat(0), rat(1))]).is_err());
        assert!(LevyData::new(rat(0), rat(0), vec![(rat(1), rat(0))]).is_err());
        assert!(LevyData::new(rat(0), rat(0), vec![(rat(1), rat(1)), (rat(1), rat(2))]).is_err());
    }

    #[test]
    fn fuss_examples() {
        let cat = [1, 1, 2, 5, 14, 42, 132];
        let m = fuss_f(1).unwrap().moments(13).unwrap().terms;
        for (k, c) in cat.iter().enumerate() {
            assert_eq!(m[2 * k], rat(*c));
            assert_eq!(m[2 * k + 1], rat(0));
        }
        let m = fuss_f(2).unwrap().moments(10).unwrap().terms;
        let a069271 = [1, 2, 9, 52, 340, 2394];
        for (k, c) in a069271.iter().enumerate() {
            assert_eq!(m[2 * k], rat(*c));
        }
        for r in 1..=5 {
            let m = fuss_f(r).unwrap().moments(14).unwrap().terms;
            for (n, x) in m.iter().enumerate() {
                assert_eq!(x, &fuss_moment(r, n).unwrap());
            }
            assert!(fuss_chi_check(r).unwrap());
        }
        assert!(fuss_f(0).is_err());
        assert_eq!(fuss_moment(3, 7).unwrap(), rat(0));
    }

    #[test]
    fn fid_corpus_at_one_hundredth() {
        let corpus = [
            LevyData::new(rat(0), rat(1), vec![]).unwrap(),
            LevyData::new(rat(0), rat(0), vec![(rat(1), rat(1))]).unwrap(),
            LevyData::new(rat(-1), rat(1), vec![(rat(1), rat(1))]).unwrap(),
            LevyData::new(rat(0), rat(0), vec![(rat(1), ratio(1, 2)), (rat(-1), ratio(1, 2))]).unwrap(),
            LevyData::new(rat(2), rat(3), vec![(rat(-2), rat(1)), (rat(3), ratio(1, 4))]).unwrap(),
            LevyData::new(rat(0), ratio(1, 2), vec![(rat(1), rat(2)), (rat(2), rat(1)), (rat(-3), rat(1))]).unwrap(),
        ];
        for l in &corpus {
            let f = from_levy(l);
            assert!(is_rr0(&f.free_power(&ratio(1, 100))), "{f}");
        }
    }

    fn arb_pos() -> impl Strategy<Value = Rat> {
        (1i64..10, 1i64..5).prop_map(|(n, d)| ratio(n, d))
    }

    fn arb_nonzero() -> impl Strategy<Value = Rat> {
        (1i64..8, 1i64..4, any::<bool>()).prop_map(|(n, d, neg)| if neg { -ratio(n, d) } else { ratio(n, d) })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(30))]

        #[test]
        fn small_fid_powers_are_rr0(
            u in -4i64..5, c0 in 0i64..4,
            atoms in prop::collection::btree_map(arb_nonzero(), arb_pos(), 0..3),
        ) {
            let l = LevyData::new(rat(u), rat(c0), atoms.into_iter().collect()).unwrap();
            let f = from_levy(&l);
            // small free powers are rr0: the interval next to t = 0 is Yes
            let rep = crate::spectra::critical_ts(&f, &rat(0), &rat(1)).unwrap();
            prop_assert_eq!(rep.rr0_verdicts[0], crate::spectra::Rr0Verdict::Yes);
            // P is real-rooted with simple roots
            let p = f.p();
            prop_assert!(p.is_squarefree());
            prop_assert!(crate::exactalg::is_real_rooted(p).unwrap());
        }
    }
}
