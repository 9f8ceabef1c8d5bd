use num::{One, Signed, Zero};

use super::algebraic::AlgebraicReal;
use super::poly::Poly;
use super::rat::{rat_abs, Rat};
use crate::error::{FclError, Result};

/// Extended rational used for Sturm endpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Ext {
    NegInf,
    Fin(Rat),
    PosInf,
}

pub fn sturm_sequence(p: &Poly) -> Vec<Poly> {
    let mut seq = vec![p.primitive()];
    if p.is_constant() {
        return seq;
    }
    seq.push(p.derivative().primitive());
    loop {
        let n = seq.len();
        let r = seq[n - 2].rem(&seq[n - 1]);
        if r.is_zero() {
            break;
        }
        seq.push((-r).primitive());
    }
    seq
}

fn sign_of(r: &Rat) -> i32 {
    if r.is_positive() {
        1
    } else if r.is_negative() {
        -1
    } else {
        0
    }
}

pub(crate) fn sign_at(p: &Poly, x: &Ext) -> i32 {
    match x {
        Ext::Fin(r) => sign_of(&p.eval(r)),
        Ext::PosInf => sign_of(&p.lc()),
        Ext::NegInf => {
            let s = sign_of(&p.lc());
            if p.deg() % 2 == 1 {
                -s
            } else {
                s
            }
        }
    }
}

pub(crate) fn variations(seq: &[Poly], x: &Ext) -> usize {
    let mut last = 0;
    let mut v = 0;
    for p in seq {
        let s = sign_at(p, x);
        if s != 0 {
            if last != 0 && s != last {
                v += 1;
            }
            last = s;
        }
    }
    v
}

fn ext_lt(a: &Ext, b: &Ext) -> bool {
    match (a, b) {
        (Ext::NegInf, Ext::NegInf) | (Ext::PosInf, _) => false,
        (Ext::NegInf, _) => true,
        (Ext::Fin(_), Ext::NegInf) => false,
        (Ext::Fin(x), Ext::Fin(y)) => x < y,
        (Ext::Fin(_), Ext::PosInf) => true,
    }
}

/// Number of distinct real roots of a squarefree `p` in `(lo, hi]`.
pub fn sturm_count(p: &Poly, lo: &Ext, hi: &Ext) -> Result<usize> {
    if p.is_zero() {
        return Err(FclError::ZeroPolynomial);
    }
    if !ext_lt(lo, hi) {
        return Err(FclError::Domain("sturm_count needs lo < hi".into()));
    }
    if !p.is_squarefree() {
        return Err(FclError::NotSquarefree);
    }
    let seq = sturm_sequence(p);
    Ok(variations(&seq, lo).saturating_sub(variations(&seq, hi)))
}

/// `1 + max |a_i / a_n|`; every complex root has modulus below it.
pub fn cauchy_bound(p: &Poly) -> Rat {
    let lc = p.lc();
    let mut m = Rat::zero();
    for a in &p.coeffs()[..p.deg()] {
        let r = rat_abs(&(a / &lc));
        if r > m {
            m = r;
        }
    }
    m + Rat::one()
}

/// Distinct real roots of any nonzero polynomial.
pub fn real_root_count(p: &Poly) -> Result<usize> {
    let s = p.squarefree_part()?;
    if s.is_constant() {
        return Ok(0);
    }
    sturm_count(&s, &Ext::NegInf, &Ext::PosInf)
}

/// True iff every complex root is real; constants count as real-rooted.
pub fn is_real_rooted(p: &Poly) -> Result<bool> {
    let s = p.squarefree_part()?;
    if s.is_constant() {
        return Ok(true);
    }
    Ok(sturm_count(&s, &Ext::NegInf, &Ext::PosInf)? == s.deg())
}

/// One isolating interval per distinct real root, ascending.
pub fn isolate_real_roots(p: &Poly) -> Result<Vec<AlgebraicReal>> {
    let s = p.squarefree_part()?.primitive();
    if s.is_constant() {
        return Ok(Vec::new());
    }
    let seq = sturm_sequence(&s);
    let b = cauchy_bound(&s) + Rat::one();
    let lo = -b.clone();
    let hi = b;
    let count = |a: &Rat, c: &Rat| {
        variations(&seq, &Ext::Fin(a.clone())) - variations(&seq, &Ext::Fin(c.clone()))
    };
    let mut out = Vec::new();
    // explicit stack, right half pushed first so output is ascending
    let mut stack = vec![(lo.clone(), hi.clone(), count(&lo, &hi))];
    let two = Rat::from_integer(2.into());
    while let Some((a, c, n)) = stack.pop() {
        if n == 0 {
            continue;
        }
        if n == 1 {
            if s.eval(&c).is_zero() {
                out.push(AlgebraicReal::from_rat(c));
                continue;
            }
            if !s.eval(&a).is_zero() {
                out.push(AlgebraicReal::from_isolating(s.clone(), a, c));
                continue;
            }
        }
        let m = (&a + &c) / &two;
        let left = count(&a, &m);
        stack.push((m.clone(), c, n - left));
        stack.push((a, m, left));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rat::{rat, ratio};
    use proptest::prelude::*;

    fn p(c: &[i64]) -> Poly {
        Poly::from_ints(c)
    }

    fn all() -> (Ext, Ext) {
        (Ext::NegInf, Ext::PosInf)
    }

    #[test]
    fn counts() {
        let (a, b) = all();
        assert_eq!(sturm_count(&p(&[1, -4, 1]), &a, &b).unwrap(), 2);
        assert_eq!(sturm_count(&p(&[1, -2, 2]), &a, &b).unwrap(), 0);
        assert_eq!(sturm_count(&p(&[0, 1]), &Ext::Fin(rat(-1)), &Ext::Fin(rat(1))).unwrap(), 1);
        // half-open: root at the right end counts, at the left end does not
        assert_eq!(sturm_count(&p(&[0, 1]), &Ext::Fin(rat(-1)), &Ext::Fin(rat(0))).unwrap(), 1);
        assert_eq!(sturm_count(&p(&[0, 1]), &Ext::Fin(rat(0)), &Ext::Fin(rat(1))).unwrap(), 0);
        assert_eq!(
            sturm_count(&p(&[1, -2]).pow(2), &a, &b),
            Err(FclError::NotSquarefree)
        );
    }

    #[test]
    fn real_rootedness() {
        let not_rr = &p(&[1, -2]) * &p(&[1, -2, 2]);
        assert!(!is_real_rooted(&not_rr).unwrap());
        assert!(is_real_rooted(&p(&[1, -2]).pow(3)).unwrap());
        assert!(is_real_rooted(&Poly::one()).unwrap());
        assert!(is_real_rooted(&Poly::zero()).is_err());
    }

    #[test]
    fn isolation() {
        let r = isolate_real_roots(&p(&[1, -4, 1])).unwrap();
        assert_eq!(r.len(), 2);
        assert!((r[0].to_f64() - (2.0 - 3f64.sqrt())).abs() < 1e-12);
        assert!((r[1].to_f64() - (2.0 + 3f64.sqrt())).abs() < 1e-12);
        assert!(r[0].hi() <= r[1].lo());

        let r = isolate_real_roots(&p(&[1, -2]).pow(2)).unwrap();
        assert_eq!(r.len(), 1);
        assert_eq!(r[0].as_rational(), Some(&ratio(1, 2)));

        let r = isolate_real_roots(&p(&[0, -1, 0, 1])).unwrap();
        let vals: Vec<_> = r.iter().map(|x| x.as_rational().cloned().unwrap()).collect();
        assert_eq!(vals, vec![rat(-1), rat(0), rat(1)]);

        let r = isolate_real_roots(&p(&[-27, 8])).unwrap();
        assert_eq!(r[0].as_rational(), Some(&ratio(27, 8)));
    }

    fn real_linear() -> impl Strategy<Value = Poly> {
        (-30i64..30, 1i64..7).prop_map(|(n, d)| Poly::new(vec![-ratio(n, d), rat(1)]))
    }

    fn irreducible_quadratic() -> impl Strategy<Value = Poly> {
        // (w - a)^2 + b with b > 0
        (-10i64..10, 1i64..10).prop_map(|(a, b)| Poly::new(vec![rat(a * a + b), rat(-2 * a), rat(1)]))
    }

    proptest! {
        #[test]
        fn count_is_degree_minus_pairs(
            lin in prop::collection::vec(real_linear(), 0..5),
            quad in prop::collection::vec(irreducible_quadratic(), 0..3),
        ) {
            let mut f = Poly::one();
            for l in &lin { f = &f * l; }
            for q in &quad { f = &f * q; }
            let s = f.squarefree_part().unwrap();
            prop_assume!(!s.is_constant());
            let n = sturm_count(&s, &Ext::NegInf, &Ext::PosInf).unwrap();
            let mut distinct_q: Vec<Poly> = quad.clone();
            distinct_q.sort_by_key(|q| q.to_string());
            distinct_q.dedup();
            prop_assert_eq!(n + 2 * distinct_q.len(), s.deg());
            let iso = isolate_real_roots(&f).unwrap();
            prop_assert_eq!(iso.len(), n);
            for w in iso.windows(2) {
                prop_assert!(w[0].hi() <= w[1].lo());
            }
        }
    }
}
