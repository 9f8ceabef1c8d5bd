//! Positive-definiteness of moment sequences through exact Hankel minors.

use std::fmt;

use num::Signed;

use crate::classf::{ClassF, SeriesPrefix};
use crate::error::{FclError, Result};
use crate::exactalg::{hankel_det, render_rat, Rat};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HankelStatus {
    /// Every minor up to this order is nonnegative. Inconclusive.
    PositiveSoFar(usize),
    /// A permanent certificate: the minor of this order is negative.
    NegativeAt(usize, Rat),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HankelVerdict {
    pub status: HankelStatus,
    pub minors: Vec<Rat>,
}

impl HankelVerdict {
    pub fn is_negative(&self) -> bool {
        matches!(self.status, HankelStatus::NegativeAt(..))
    }
}

impl fmt::Display for HankelStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HankelStatus::PositiveSoFar(k) => write!(f, "positive up to order {k} (inconclusive)"),
            HankelStatus::NegativeAt(k, d) => write!(f, "negative at order {k}: det = {}", render_rat(d)),
        }
    }
}

/// Minors of orders `0..=k`, stopping at the first negative one. Zero minors
/// do not stop the scan.
pub fn hankel_verdict_terms(s: &[Rat], k: usize) -> Result<HankelVerdict> {
    if s.len() < 2 * k + 1 {
        return Err(FclError::InsufficientTerms { needed: 2 * k + 1, have: s.len() });
    }
    let mut minors = Vec::with_capacity(k + 1);
    for j in 0..=k {
        let d = hankel_det(s, j)?;
        let neg = d.is_negative();
        minors.push(d.clone());
        if neg {
            return Ok(HankelVerdict { status: HankelStatus::NegativeAt(j, d), minors });
        }
    }
    Ok(HankelVerdict { status: HankelStatus::PositiveSoFar(k), minors })
}

pub fn hankel_verdict(s: &SeriesPrefix, k: usize) -> Result<HankelVerdict> {
    hankel_verdict_terms(&s.terms, k)
}

pub fn is_moment_positive_up_to(f: &ClassF, k: usize) -> Result<HankelVerdict> {
    hankel_verdict(&f.moments(2 * k)?, k)
}

/// Hankel test on `r_2, r_3, r_4, ...`.
pub fn fid_check(f: &ClassF, k: usize) -> Result<HankelVerdict> {
    let r = f.cumulants(2 * k + 2).terms;
    hankel_verdict_terms(&r[2..], k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classf::RatFun;
    use crate::exactalg::{rat, ratio, Poly};
    use proptest::prelude::*;

    fn p(c: &[i64]) -> Poly {
        Poly::from_ints(c)
    }

    fn ints(v: &[i64]) -> Vec<Rat> {
        v.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn a109081_prefix() {
        let r = RatFun::new(p(&[0, 1]), p(&[1, -1]).pow(2)).unwrap();
        let f = ClassF::from_r(&r).unwrap();
        let v = is_moment_positive_up_to(&f, 5).unwrap();
        assert_eq!(v.status, HankelStatus::NegativeAt(5, rat(-3374)));
        assert_eq!(v.minors.len(), 6);
        assert!(v.minors[..5].iter().all(|m| !m.is_negative()));
    }

    #[test]
    fn second_euler_prefix() {
        let r = RatFun::new(p(&[0, 1, 1]), p(&[1, -1]).pow(3)).unwrap();
        let f = ClassF::from_r(&r).unwrap();
        let v = is_moment_positive_up_to(&f, 4).unwrap();
        assert_eq!(v.status, HankelStatus::NegativeAt(4, rat(-685964)));
    }

    #[test]
    fn catalan_minors_are_one() {
        let cat = ints(&[1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796]);
        let v = hankel_verdict_terms(&cat, 5).unwrap();
        assert_eq!(v.status, HankelStatus::PositiveSoFar(5));
        assert!(v.minors.iter().all(|m| *m == rat(1)));
        assert!(hankel_verdict_terms(&cat, 6).is_err());
    }

    #[test]
    fn class_examples() {
        let rr = ClassF::new(p(&[1, -2, 2, -1]), p(&[1])).unwrap();
        assert_eq!(is_moment_positive_up_to(&rr, 6).unwrap().status, HankelStatus::PositiveSoFar(6));
        let f = ClassF::from_r(&RatFun::from_poly(p(&[0, 2, 2, 1]))).unwrap();
        assert_eq!(is_moment_positive_up_to(&f, 5).unwrap().status, HankelStatus::NegativeAt(5, rat(-3374)));
        let d0 = is_moment_positive_up_to(&ClassF::identity(), 4).unwrap();
        assert_eq!(d0.status, HankelStatus::PositiveSoFar(4));
        assert_eq!(d0.minors, ints(&[1, 0, 0, 0, 0]));
    }

    #[test]
    fn fid_examples() {
        let (v, t) = (ratio(3, 2), ratio(2, 5));
        let mp = ClassF::new(Poly::new(vec![rat(1), -v.clone()]), Poly::new(vec![rat(1), -&v + &t * &v])).unwrap();
        assert_eq!(fid_check(&mp, 6).unwrap().status, HankelStatus::PositiveSoFar(6));
        let w = ClassF::new(p(&[1]), Poly::new(vec![rat(1), rat(0), t])).unwrap();
        assert_eq!(fid_check(&w, 6).unwrap().status, HankelStatus::PositiveSoFar(6));
        let a048779 = ClassF::new(p(&[1, -3, 4, -2]), p(&[1])).unwrap();
        assert!(fid_check(&a048779, 12).unwrap().is_negative());
    }

    #[test]
    fn zero_minor_does_not_stop() {
        // order 1 minor is 0, order 2 minor is -1
        let s = ints(&[1, 0, 0, 1, 0]);
        let v = hankel_verdict_terms(&s, 2).unwrap();
        assert_eq!(v.minors[1], rat(0));
        assert!(v.is_negative());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]

        #[test]
        fn dilation_scales_minors(
            a in prop::collection::vec(-3i64..4, 1..3),
            b in prop::collection::vec(-3i64..4, 1..3),
            cn in -3i64..4, cd in 1i64..3,
        ) {
            prop_assume!(cn != 0);
            let mut pa = vec![1]; pa.extend(&a);
            let mut qb = vec![1]; qb.extend(&b);
            let f = ClassF::new(p(&pa), p(&qb)).unwrap();
            let c = ratio(cn, cd);
            let m = hankel_verdict_terms(&f.moments(8).unwrap().terms, 4).map(|v| v.minors);
            let md = hankel_verdict_terms(&f.dilate(&c).unwrap().moments(8).unwrap().terms, 4).map(|v| v.minors);
            let (m, md) = (m.unwrap(), md.unwrap());
            for k in 0..m.len().min(md.len()) {
                let e = (k * (k + 1)) as i32;
                let mut ck = rat(1);
                for _ in 0..e { ck *= &c; }
                prop_assert_eq!(&md[k], &(&m[k] * &ck));
            }
        }
    }
}
