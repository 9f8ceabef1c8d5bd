//! Critical parameters of `t -> F^{+t}` and rr0 verdicts between them.

use std::cmp::Ordering;

use rayon::prelude::*;

use crate::classf::ClassF;
use crate::error::{FclError, Result};
use crate::exactalg::{isolate_real_roots, resultant, AlgebraicReal, BiPoly, NumberField, Poly, Rat};

use super::{char_pencil, is_rr0};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CriticalKind {
    MultipleRoot,
    DegreeDrop,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rr0Verdict {
    Yes,
    No,
    Unknown,
}

#[derive(Clone, Debug)]
pub struct CriticalReport {
    pub t_lo: Rat,
    pub t_hi: Rat,
    pub criticals: Vec<AlgebraicReal>,
    pub kinds: Vec<CriticalKind>,
    /// One per open interval, left to right; `criticals.len() + 1` entries.
    pub rr0_verdicts: Vec<Rr0Verdict>,
    /// The rational sample used for each interval.
    pub samples: Vec<Rat>,
}

impl CriticalReport {
    /// Verdict on the interval containing the rational `t`, if `t` is not critical.
    pub fn verdict_at(&self, t: &Rat) -> Option<Rr0Verdict> {
        let mut idx = 0;
        for c in &self.criticals {
            match c.cmp_rat(t) {
                Ordering::Less => idx += 1,
                Ordering::Equal => return None,
                Ordering::Greater => break,
            }
        }
        self.rr0_verdicts.get(idx).copied()
    }
}

fn bits_for_digits(digits: usize) -> u64 {
    ((digits as f64) * std::f64::consts::LOG2_10).ceil() as u64
}

/// `chi_{t0}` with coefficients in `Q(t0)`.
fn chi_over_field(a: &Poly, b: &Poly) -> Vec<Poly> {
    let n = a.deg().max(b.deg()) + 1;
    (0..n).map(|i| Poly::new(vec![a.coeff(i), b.coeff(i)])).collect()
}

fn has_multiple_root(a: &Poly, b: &Poly, t0: &AlgebraicReal) -> bool {
    if let Some(t) = t0.as_rational() {
        let chi = a + &b.scale(t);
        if chi.is_zero() {
            return true;
        }
        return !Poly::gcd(&chi, &chi.derivative()).expect("nonzero").is_constant();
    }
    let mut k = NumberField::new(t0, bits_for_digits(256));
    k.has_repeated_root(&chi_over_field(a, b)).unwrap_or(true)
}

/// Real critical values of `t` in the open range `(t_lo, t_hi)`, with the rr0
/// verdict of `F^{+t}` on each open interval between them.
pub fn critical_ts(f: &ClassF, t_lo: &Rat, t_hi: &Rat) -> Result<CriticalReport> {
    if t_lo >= t_hi {
        return Err(FclError::Domain("t_lo must be below t_hi".into()));
    }
    let (a, b) = char_pencil(f);
    let g = if b.is_zero() { a.monic() } else { Poly::gcd(&a, &b)? };
    let a1 = a.exact_div(&g).expect("gcd divides");
    let b1 = b.exact_div(&g).expect("gcd divides");
    let h = BiPoly::pencil(&a1, &b1);
    let d = h.deg_w();

    let mut candidates: Vec<AlgebraicReal> = Vec::new();
    let top = h.coeff(d);
    let mut drop_poly = Poly::one();
    if d >= 1 {
        let r = resultant(&h, &h.d_dw())?;
        if r.is_zero() {
            return Err(FclError::DegenerateEliminant);
        }
        let disc = r.exact_div(&top).ok_or(FclError::Computation("resultant not divisible by leading coefficient".into()))?;
        if disc.is_zero() {
            return Err(FclError::DegenerateEliminant);
        }
        candidates.extend(isolate_real_roots(&disc.primitive())?);
        let next = h.coeff(d - 1);
        drop_poly = if next.is_zero() { top.clone() } else { Poly::gcd(&top, &next)? };
    }
    if !g.is_constant() {
        let gs = g.squarefree_part()?;
        let r = resultant(&BiPoly::from_w(&gs), &h)?;
        if !r.is_zero() {
            candidates.extend(isolate_real_roots(&r)?);
        }
    }

    let lo = AlgebraicReal::from_rat(t_lo.clone());
    let hi = AlgebraicReal::from_rat(t_hi.clone());
    candidates.retain(|c| c.cmp_exact(&lo) == Ordering::Greater && c.cmp_exact(&hi) == Ordering::Less);
    candidates.sort_by(|x, y| x.cmp_exact(y));
    candidates.dedup_by(|x, y| x.cmp_exact(y) == Ordering::Equal);

    let kinds: Vec<CriticalKind> = candidates
        .par_iter()
        .map(|c| {
            let dd = !drop_poly.is_constant() && c.is_root_of(&drop_poly);
            match (dd, dd && has_multiple_root(&a, &b, c)) {
                (true, true) => CriticalKind::Both,
                (true, false) => CriticalKind::DegreeDrop,
                _ => CriticalKind::MultipleRoot,
            }
        })
        .collect();

    let mut cuts = vec![lo];
    cuts.extend(candidates.iter().cloned());
    cuts.push(hi);
    let samples: Vec<Rat> = cuts.windows(2).map(|w| AlgebraicReal::rational_between(&w[0], &w[1])).collect();
    let rr0_verdicts = samples
        .par_iter()
        .map(|t| if is_rr0(&f.free_power(t)) { Rr0Verdict::Yes } else { Rr0Verdict::No })
        .collect();

    Ok(CriticalReport {
        t_lo: t_lo.clone(),
        t_hi: t_hi.clone(),
        criticals: candidates,
        kinds,
        rr0_verdicts,
        samples,
    })
}

/// Is `chi_{t0}` real-rooted? Decided exactly in `Q(t0)`; `Unknown` only when
/// sign determination needs more than `max_digits` of refinement.
pub fn rr0_at_algebraic_t(f: &ClassF, t0: &AlgebraicReal, max_digits: usize) -> Rr0Verdict {
    if let Some(t) = t0.as_rational() {
        return if is_rr0(&f.free_power(t)) { Rr0Verdict::Yes } else { Rr0Verdict::No };
    }
    let (a, b) = char_pencil(f);
    let mut k = NumberField::new(t0, bits_for_digits(max_digits));
    match k.real_root_profile(&chi_over_field(&a, &b)) {
        Some((real, deg)) if real == deg => Rr0Verdict::Yes,
        Some(_) => Rr0Verdict::No,
        None => Rr0Verdict::Unknown,
    }
}
