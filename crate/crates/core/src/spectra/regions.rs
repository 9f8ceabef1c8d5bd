//! Closed-form membership regions for low-degree families.

use num::{BigInt, Integer, One, Signed};

use crate::error::{FclError, Result};
use crate::exactalg::{isolate_real_roots, rat, ratio, Poly, Rat};

/// For `F = w(1 + a w + b w^2 + c w^3)`.
pub fn deg3_rr0(a: &Rat, b: &Rat, c: &Rat) -> bool {
    let v = rat(9) * a * a * b * b - rat(27) * b * b * b - rat(32) * a * a * a * c + rat(108) * a * b * c
        - rat(108) * c * c;
    !v.is_negative()
}

/// For `R = u w + b w^2 + c w^3` with `b > 0`.
pub fn r3_poly_rr0(b: &Rat, c: &Rat) -> Result<bool> {
    if !b.is_positive() {
        return Err(FclError::Domain("b must be positive".into()));
    }
    Ok(rat(27) * c * c <= b * b * b)
}

/// The singular curve of `F = w / (1 + b w^2 + c w^3 + d w^4)`.
pub fn r4_singular_params(b: &Rat, v: &Rat) -> (Rat, Rat) {
    let v2 = v * v;
    let c = v * (b - rat(2) * &v2);
    let d = &v2 * (b - rat(3) * &v2) / rat(3);
    (c, d)
}

/// Largest rational `<= sqrt(x)` on a `2^-k` grid, exact when `x` is a
/// rational square.
fn sqrt_under(x: &Rat, k: u32) -> Rat {
    let (n, d) = (x.numer(), x.denom());
    let (sn, sd) = (n.sqrt(), d.sqrt());
    if &(&sn * &sn) == n && &(&sd * &sd) == d {
        return Rat::new(sn, sd);
    }
    let scale = BigInt::one() << (2 * k);
    let m = (n * &scale).div_floor(d);
    Rat::new(m.sqrt(), BigInt::one() << k)
}

/// Samples of the curve `L(b)` for `v` uniform on `[-sqrt(b/2), sqrt(b/2)]`.
pub fn lb_curve(b: &Rat, n_samples: usize) -> Result<Vec<(Rat, Rat)>> {
    if !b.is_positive() {
        return Err(FclError::Domain("b must be positive".into()));
    }
    if n_samples < 2 {
        return Err(FclError::Domain("need at least 2 samples".into()));
    }
    let vmax = sqrt_under(&(b / rat(2)), 40);
    let step = rat(2) * &vmax / rat(n_samples as i64 - 1);
    Ok((0..n_samples)
        .map(|i| {
            let v = -&vmax + &step * rat(i as i64);
            r4_singular_params(b, &v)
        })
        .collect())
}

/// Membership of `(k3, k4)` in `D1 u D2`, decided exactly.
pub fn cg_region(k3: &Rat, k4: &Rat) -> bool {
    let x2 = k3 * k3;
    let y = k4;
    if y < &ratio(-1, 12) || y > &ratio(1, 4) {
        return false;
    }
    if y <= &ratio(1, 36) {
        // 54 x^2 <= 4 - 3m + m sqrt(m), m = 1 - 36 y
        let m = rat(1) - rat(36) * y;
        let a = rat(54) * &x2 - rat(4) + rat(3) * &m;
        if !a.is_positive() {
            return true;
        }
        &a * &a <= &m * &m * &m
    } else {
        // x^2 + 48 y^2 <= 24 y^(3/2)
        let a = &x2 + rat(48) * y * y;
        &a * &a <= rat(576) * y * y * y
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct R4C0Class {
    pub in_dist: bool,
    pub in_rr0: bool,
    pub on_rr_balloon_top: bool,
}

/// For `F = w / (1 + b w^2 + d w^4)`, `b > 0`.
pub fn r4_c0_classify(b: &Rat, d: &Rat) -> Result<R4C0Class> {
    if !b.is_positive() {
        return Err(FclError::Domain("b must be positive".into()));
    }
    let b2 = b * b;
    let d12 = rat(12) * d;
    Ok(R4C0Class {
        in_dist: -&b2 <= d12 && d12 <= rat(3) * &b2,
        in_rr0: -&b2 <= d12 && !d12.is_positive(),
        on_rr_balloon_top: rat(4) * d == b2,
    })
}

/// Boundary polylines of `D1` (left and right) and `D2` (left and right).
pub fn cg_boundary(n: usize) -> Vec<Vec<(f64, f64)>> {
    let n = n.max(2);
    let mut right1 = Vec::with_capacity(n);
    let (u_lo, u_hi) = ((1.0f64 / 6.0).sqrt(), (0.5f64).sqrt());
    for i in 0..n {
        let u = u_lo + (u_hi - u_lo) * i as f64 / (n - 1) as f64;
        right1.push((u * (1.0 - 2.0 * u * u), u * u * (1.0 - 3.0 * u * u) / 3.0));
    }
    let mut right2 = Vec::with_capacity(n);
    for i in 0..n {
        let y = 1.0 / 36.0 + (0.25 - 1.0 / 36.0) * i as f64 / (n - 1) as f64;
        let x = 2.0 * (6.0 * y * (y.sqrt() - 2.0 * y)).max(0.0).sqrt();
        right2.push((x, y));
    }
    let mirror = |v: &Vec<(f64, f64)>| v.iter().map(|&(x, y)| (-x, y)).collect::<Vec<_>>();
    vec![mirror(&right1), right1.clone(), mirror(&right2), right2]
}

/// For fixed `c`, the real curve
/// `9a^2b^2 - 27b^3 - 32a^3c + 108abc - 108c^2 = 0` in the `(a, b)` plane,
/// sampled at `n` rational values of `a` in `[a_lo, a_hi]`.
pub fn deg3_boundary(c: &Rat, a_lo: &Rat, a_hi: &Rat, n: usize) -> Vec<(f64, f64)> {
    let n = n.max(2);
    let mut out = Vec::new();
    for i in 0..n {
        let a = a_lo + (a_hi - a_lo) * rat(i as i64) / rat(n as i64 - 1);
        // cubic in b
        let cubic = Poly::new(vec![
            -rat(32) * &a * &a * &a * c - rat(108) * c * c,
            rat(108) * &a * c,
            rat(9) * &a * &a,
            rat(-27),
        ]);
        if cubic.is_zero() {
            continue;
        }
        if let Ok(roots) = isolate_real_roots(&cubic) {
            let af = crate::exactalg::rat_to_f64(&a);
            for r in roots {
                out.push((af, r.to_f64()));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classf::{ClassF, RatFun};
    use crate::spectra::{char_poly, is_rr0, is_singular};
    use proptest::prelude::*;
    use num::Zero;

    fn deg3_f(a: &Rat, b: &Rat, c: &Rat) -> ClassF {
        ClassF::new(Poly::new(vec![rat(1), a.clone(), b.clone(), c.clone()]), Poly::one()).unwrap()
    }

    fn r4_f(b: &Rat, c: &Rat, d: &Rat) -> ClassF {
        ClassF::new(Poly::one(), Poly::new(vec![rat(1), rat(0), b.clone(), c.clone(), d.clone()])).unwrap()
    }

    #[test]
    fn deg3_examples() {
        assert!(deg3_rr0(&rat(0), &rat(0), &rat(0)));
        assert!(deg3_rr0(&rat(4), &rat(5), &rat(2)));
        assert!(is_rr0(&deg3_f(&rat(4), &rat(5), &rat(2))));
    }

    #[test]
    fn r3_examples() {
        assert!(r3_poly_rr0(&rat(3), &rat(1)).unwrap());
        assert!(!r3_poly_rr0(&rat(1), &rat(1)).unwrap());
        assert!(r3_poly_rr0(&rat(2), &rat(0)).unwrap());
        assert!(r3_poly_rr0(&rat(0), &rat(1)).is_err());
        for (b, c, u) in [(3, 1, 0), (1, 1, 2), (2, 0, -1), (5, -2, 3)] {
            let r = RatFun::from_poly(Poly::from_ints(&[0, u, b, c]));
            let f = ClassF::from_r(&r).unwrap();
            assert_eq!(is_rr0(&f), r3_poly_rr0(&rat(b), &rat(c)).unwrap());
        }
    }

    #[test]
    fn r4_singular_examples() {
        assert_eq!(r4_singular_params(&rat(1), &rat(0)), (rat(0), rat(0)));
        let (c, d) = r4_singular_params(&rat(1), &ratio(1, 2));
        assert_eq!((c.clone(), d.clone()), (ratio(1, 4), ratio(1, 48)));
        let f = r4_f(&rat(1), &c, &d);
        let v = ratio(1, 2);
        let expect = &Poly::new(vec![rat(1), v.clone()]).pow(2)
            * &Poly::new(vec![rat(1), rat(-1), ratio(3, 4) - rat(1)]);
        assert_eq!(char_poly(&f), expect);
        assert!(is_singular(&f));
        assert!(is_rr0(&f));
        let (c, d) = r4_singular_params(&rat(1), &rat(1));
        assert_eq!((c.clone(), d.clone()), (rat(-1), ratio(-2, 3)));
        let f = r4_f(&rat(1), &c, &d);
        assert!(is_singular(&f));
        assert!(!is_rr0(&f));
    }

    #[test]
    fn lb_curve_examples() {
        let pts = lb_curve(&rat(1), 5).unwrap();
        assert_eq!(pts.len(), 5);
        assert_eq!(pts[2], (rat(0), rat(0)));
        assert_eq!(pts[0].0, -pts[4].0.clone());
        assert_eq!(pts[0].1, pts[4].1);
        let pts = lb_curve(&rat(2), 3).unwrap();
        assert_eq!(pts[2], r4_singular_params(&rat(2), &rat(1)));
        assert!(lb_curve(&rat(0), 3).is_err());
        assert!(lb_curve(&rat(1), 1).is_err());
        // v = 1/2 is sampled for b = 1/2
        let pts = lb_curve(&ratio(1, 2), 3).unwrap();
        assert_eq!(pts[2], r4_singular_params(&ratio(1, 2), &ratio(1, 2)));
    }

    #[test]
    fn cg_examples() {
        assert!(cg_region(&rat(0), &ratio(1, 4)));
        assert!(cg_region(&rat(0), &ratio(-1, 12)));
        assert!(!cg_region(&rat(0), &ratio(1, 3)));
        assert!(cg_region(&rat(0), &rat(0)));
        // border point of D1 at u^2 = 1/4: x = -1/4, y = 1/48
        assert!(cg_region(&ratio(-1, 4), &ratio(1, 48)));
        assert!(!cg_region(&(ratio(-1, 4) - ratio(1, 1000)), &ratio(1, 48)));
    }

    #[test]
    fn r4_c0_examples() {
        let c = r4_c0_classify(&rat(1), &ratio(1, 4)).unwrap();
        assert_eq!((c.in_dist, c.in_rr0, c.on_rr_balloon_top), (true, false, true));
        let c = r4_c0_classify(&rat(1), &ratio(-1, 12)).unwrap();
        assert_eq!((c.in_dist, c.in_rr0, c.on_rr_balloon_top), (true, true, false));
        let c = r4_c0_classify(&rat(1), &rat(1)).unwrap();
        assert_eq!((c.in_dist, c.in_rr0, c.on_rr_balloon_top), (false, false, false));
        assert!(r4_c0_classify(&rat(-1), &rat(0)).is_err());
        for (dn, dd) in [(-1, 12), (-1, 24), (0, 1), (1, 24), (-1, 6)] {
            let d = ratio(dn, dd);
            assert_eq!(is_rr0(&r4_f(&rat(1), &rat(0), &d)), r4_c0_classify(&rat(1), &d).unwrap().in_rr0);
        }
    }

    #[test]
    fn figure_curves() {
        let b = cg_boundary(10);
        assert_eq!(b.len(), 4);
        let (x, y) = b[1][0];
        assert!((y - 1.0 / 36.0).abs() < 1e-12 && x.abs() > 0.0);
        let d3 = deg3_boundary(&rat(1), &rat(-3), &rat(3), 7);
        assert!(!d3.is_empty());
    }

    fn arb_rat() -> impl Strategy<Value = Rat> {
        (-9i64..10, 1i64..4).prop_map(|(n, d)| ratio(n, d))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn deg3_matches_sturm(a in arb_rat(), b in arb_rat(), c in arb_rat()) {
            prop_assume!(!c.is_zero());
            prop_assert_eq!(deg3_rr0(&a, &b, &c), is_rr0(&deg3_f(&a, &b, &c)));
        }

        #[test]
        fn cg_symmetric(x in arb_rat(), yn in -30i64..80, yd in 1i64..300) {
            let y = ratio(yn, yd);
            prop_assert_eq!(cg_region(&x, &y), cg_region(&-x.clone(), &y));
        }

        #[test]
        fn singular_curve(bn in 1i64..10, bd in 1i64..4, vn in -8i64..9, vd in 1i64..5) {
            let (b, v) = (ratio(bn, bd), ratio(vn, vd));
            prop_assume!(!v.is_zero());
            let (c, d) = r4_singular_params(&b, &v);
            let f = r4_f(&b, &c, &d);
            prop_assert!(is_singular(&f));
            prop_assert_eq!(is_rr0(&f), rat(2) * &v * &v <= b);
        }
    }
}
