//! Eulerian polynomials and the free cumulant sequences `r_n = t n^k`.

use num::{BigInt, One, Zero};

use crate::classf::ClassF;
use crate::error::{FclError, Result};
use crate::exactalg::{rat, AlgebraicReal, BiPoly, Poly, Rat};
use crate::spectra::{char_poly_t, critical_ts, rr0_at_algebraic_t, CriticalReport, Rr0Verdict};

fn one_minus_w() -> Poly {
    Poly::from_ints(&[1, -1])
}

fn w_one_minus_w() -> Poly {
    Poly::from_ints(&[0, 1, -1])
}

/// `E_k = (k w - w + 1) E_{k-1} + w (1 - w) E'_{k-1}`, `E_0 = 1`.
pub fn eulerian(k: usize) -> Poly {
    let mut e = Poly::one();
    for j in 1..=k {
        let lin = Poly::new(vec![Rat::one(), rat(j as i64 - 1)]);
        e = &(&lin * &e) + &(&w_one_minus_w() * &e.derivative());
    }
    e
}

/// `E~_k` by its own recurrence `(k w - w + 2) E~_{k-1} + w (1 - w) E~'_{k-1}`.
pub fn eulerian_tilde_recurrence(k: usize) -> Poly {
    let mut e = Poly::one();
    for j in 1..=k {
        let lin = Poly::new(vec![rat(2), rat(j as i64 - 1)]);
        e = &(&lin * &e) + &(&w_one_minus_w() * &e.derivative());
    }
    e
}

/// `E~_k`, computed by the recurrence and by `(k + 1) E_k + (1 - w) E_k'`.
pub fn eulerian_tilde(k: usize) -> Result<Poly> {
    let a = eulerian_tilde_recurrence(k);
    let e = eulerian(k);
    let b = &e.scale(&rat(k as i64 + 1)) + &(&one_minus_w() * &e.derivative());
    if a != b {
        return Err(FclError::Computation(format!("E~_{k}: recurrence {a} differs from definition {b}")));
    }
    Ok(a)
}

/// `e(k, i) = (i + 1) e(k-1, i) + (k - i) e(k-1, i-1)` from the polynomial recurrence.
pub fn eulerian_number(k: usize, i: usize) -> BigInt {
    let mut row: Vec<BigInt> = vec![BigInt::one()];
    for j in 1..=k {
        let mut next = vec![BigInt::zero(); j.max(1)];
        for (i, slot) in next.iter_mut().enumerate() {
            let a = row.get(i).cloned().unwrap_or_default() * BigInt::from(i + 1);
            let b = if i > 0 { row.get(i - 1).cloned().unwrap_or_default() * BigInt::from(j - i) } else { BigInt::zero() };
            *slot = a + b;
        }
        row = next;
    }
    row.get(i).cloned().unwrap_or_default()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EulerTable {
    pub k: usize,
    pub e_row: Vec<Rat>,
    pub e_tilde_row: Vec<Rat>,
}

pub fn euler_table(k: usize) -> Result<EulerTable> {
    Ok(EulerTable { k, e_row: eulerian(k).coeffs().to_vec(), e_tilde_row: eulerian_tilde(k)?.coeffs().to_vec() })
}

/// `F = w (1 - w)^{k+1} / ((1 - w)^{k+1} + w E_k)`, free cumulants `r_n = n^k`.
pub fn nk_classf(k: usize) -> Result<ClassF> {
    if k < 1 {
        return Err(FclError::Domain("k must be at least 1".into()));
    }
    let p = one_minus_w().pow(k as u32 + 1);
    let q = &p + &eulerian(k).shift_up(1);
    ClassF::new(p, q)
}

#[derive(Clone, Debug)]
pub struct ChiFactored {
    pub lhs: BiPoly,
    pub rhs: BiPoly,
    pub rhs_factor_check: bool,
}

/// `chi_t = (1 - w)^k ((1 - w)^{k+2} - t w^2 E~_k)`.
pub fn chi_t_factored(k: usize) -> Result<ChiFactored> {
    let lhs = char_poly_t(&nk_classf(k)?);
    let a = one_minus_w().pow(k as u32 + 2);
    let b = -&eulerian_tilde(k)?.shift_up(2);
    let rhs = BiPoly::pencil(&a, &b).mul_w(&one_minus_w().pow(k as u32));
    Ok(ChiFactored { rhs_factor_check: lhs == rhs, lhs, rhs })
}

#[derive(Clone, Debug)]
pub struct CkReport {
    pub report: CriticalReport,
    /// Smallest critical with an rr0 interval to its right.
    pub candidate: Option<AlgebraicReal>,
    /// rr0 status exactly at the candidate.
    pub boundary_verdict: Option<Rr0Verdict>,
}

pub fn ck_candidates(k: usize, t_hi: &Rat) -> Result<CkReport> {
    ck_candidates_digits(k, t_hi, 256)
}

/// As `ck_candidates`, certifying the boundary with up to `digits` digits.
pub fn ck_candidates_digits(k: usize, t_hi: &Rat, digits: usize) -> Result<CkReport> {
    let f = nk_classf(k)?;
    let report = critical_ts(&f, &Rat::zero(), t_hi)?;
    let mut candidate = None;
    for (i, c) in report.criticals.iter().enumerate() {
        if report.rr0_verdicts[i + 1] == Rr0Verdict::Yes {
            candidate = Some(c.clone());
            break;
        }
    }
    let boundary_verdict = candidate.as_ref().map(|c| rr0_at_algebraic_t(&f, c, digits));
    Ok(CkReport { report, candidate, boundary_verdict })
}
