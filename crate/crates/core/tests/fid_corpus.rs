//! Elements whose P has a non-real or repeated root must fail the cumulant
//! Hankel test at some order K <= 12.

use fcl_core::exactalg::{is_real_rooted, Poly};
use fcl_core::posdef::fid_check;
use fcl_core::ClassF;

fn f(p: &[i64], q: &[i64]) -> ClassF {
    ClassF::new(Poly::from_ints(p), Poly::from_ints(q)).unwrap()
}

fn corpus() -> Vec<ClassF> {
    vec![
        f(&[1, -3, 4, -2], &[1]),
        f(&[1, -2, 2, -1], &[1]),
        f(&[1, 0, 1], &[1]),
        f(&[1, 0, 1], &[1, 0, 9]),
        f(&[1, -2, 1], &[1, -1, 1]),
        f(&[1, -1, 1], &[1]),
        f(&[1, 1, 1], &[1, 2]),
        f(&[1, -2, 1], &[1]),
        f(&[1, 0, 2], &[1, 0, 3, 1]),
    ]
}

#[test]
fn non_fid_elements_are_certified() {
    let mut failures = Vec::new();
    for g in corpus() {
        let p = g.p();
        assert!(!(p.is_squarefree() && is_real_rooted(p).unwrap()), "{g} has real simple P");
        let v = fid_check(&g, 12).unwrap();
        if !v.is_negative() {
            failures.push(format!("{g}: {}", v.status));
        }
    }
    assert!(failures.is_empty(), "no negative cumulant minor up to K = 12: {failures:?}");
}

#[test]
fn fid_elements_stay_positive() {
    use fcl_core::distlib::{from_levy, LevyData};
    use fcl_core::exactalg::{rat, ratio};
    let l = LevyData::new(rat(1), rat(2), vec![(rat(1), rat(1)), (ratio(-1, 2), rat(3))]).unwrap();
    let g = from_levy(&l);
    assert!(!fid_check(&g, 12).unwrap().is_negative());
}
