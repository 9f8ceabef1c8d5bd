//! Characteristic polynomials, the set N(F), real-rootedness and critical
//! parameters of free powers.

mod critical;
mod regions;

pub use critical::{critical_ts, rr0_at_algebraic_t, CriticalKind, CriticalReport, Rr0Verdict};
pub use regions::{
    cg_boundary, cg_region, deg3_boundary, deg3_rr0, lb_curve, r3_poly_rr0, r4_c0_classify, r4_singular_params,
    R4C0Class,
};

use num::Zero;

use crate::classf::ClassF;
use crate::error::{FclError, Result};
use crate::exactalg::{is_real_rooted, isolate_real_roots, real_root_count, resultant, AlgebraicReal, BiPoly, Poly, Rat};

/// `(p + w p') q - w p q'` for an arbitrary pair.
pub fn char_poly_raw(p: &Poly, q: &Poly) -> Poly {
    let wdp = p.derivative().shift_up(1);
    let wp = p.shift_up(1);
    &(&(p + &wdp) * q) - &(&wp * &q.derivative())
}

/// `chi_F = (P + w P') Q - w P Q'`.
pub fn char_poly(f: &ClassF) -> Poly {
    char_poly_raw(f.p(), f.q())
}

/// The two halves of `chi_t = A + t B`.
pub fn char_pencil(f: &ClassF) -> (Poly, Poly) {
    let p = f.p();
    let q = f.q();
    let a = p * p;
    let qp = q - p;
    let b = &(&(p + &p.derivative().shift_up(1)) * &qp) - &(&p.shift_up(1) * &qp.derivative());
    (a, b)
}

/// `chi_t(w)`, the characteristic polynomial of the free power `F^{+t}`.
pub fn char_poly_t(f: &ClassF) -> BiPoly {
    let (a, b) = char_pencil(f);
    BiPoly::pencil(&a, &b)
}

pub fn is_rr0(f: &ClassF) -> bool {
    is_real_rooted(&char_poly(f)).expect("chi(0) = 1")
}

/// True iff `chi_F` has a repeated real root.
pub fn is_singular(f: &ClassF) -> bool {
    let chi = char_poly(f);
    let g = Poly::gcd(&chi, &chi.derivative()).expect("chi nonzero");
    !g.is_constant() && real_root_count(&g).expect("g nonzero") > 0
}

/// Degree of `chi_F` against the generic bound `deg P + deg Q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryFlags {
    pub degree: usize,
    pub generic_degree: usize,
    pub degree_drop: bool,
    pub singular: bool,
}

pub fn boundary_flags(f: &ClassF) -> BoundaryFlags {
    let degree = char_poly(f).deg();
    let generic_degree = f.p().deg() + f.q().deg();
    BoundaryFlags {
        degree,
        generic_degree,
        degree_drop: degree + 2 <= generic_degree,
        singular: is_singular(f),
    }
}

#[derive(Clone, Debug)]
pub struct NSetResult {
    pub z_poly: Poly,
    pub real_members: Vec<AlgebraicReal>,
    pub nonreal_pair_count: usize,
}

impl NSetResult {
    pub fn all_real(&self) -> bool {
        self.nonreal_pair_count == 0
    }
}

/// True iff `w P(w) - z0 Q(w)` has a repeated root.
fn has_multiple_root_at(f: &ClassF, z0: &Rat) -> bool {
    let h = &f.p().shift_up(1) - &f.q().scale(z0);
    if h.is_zero() {
        return true;
    }
    !Poly::gcd(&h, &h.derivative()).expect("nonzero").is_constant()
}

/// The eliminant in `z` of `w P - z Q` and its `w`-derivative.
pub fn n_set(f: &ClassF) -> Result<NSetResult> {
    let p = f.p();
    let q = f.q();
    let n = (p.deg() + 1).max(q.deg());
    let phi = BiPoly::new(
        (0..=n)
            .map(|i| {
                let a = if i == 0 { Rat::zero() } else { p.coeff(i - 1) };
                Poly::new(vec![a, -q.coeff(i)])
            })
            .collect(),
    );
    let dphi = phi.d_dw();
    if dphi.is_zero() {
        return Err(FclError::DegenerateEliminant);
    }
    let r = resultant(&phi, &dphi)?;
    if r.is_zero() {
        return Err(FclError::DegenerateEliminant);
    }
    let lc = Poly::gcd(&phi.coeff(phi.deg_w()), &dphi.coeff(dphi.deg_w()))?;
    let mut z_poly = r.strip_factors_of(&lc).primitive();
    if !lc.is_constant() {
        for z0 in isolate_real_roots(&lc)? {
            if let Some(z0) = z0.as_rational() {
                if has_multiple_root_at(f, z0) {
                    z_poly = &z_poly * &Poly::new(vec![-z0.clone(), Rat::from_integer(1.into())]);
                }
            }
        }
        z_poly = z_poly.primitive();
    }
    let real_members = isolate_real_roots(&z_poly)?;
    let sqf = z_poly.squarefree_part()?;
    let nonreal_pair_count = (sqf.deg() - real_members.len()) / 2;
    Ok(NSetResult { z_poly, real_members, nonreal_pair_count })
}

pub fn is_rr(f: &ClassF) -> Result<bool> {
    Ok(n_set(f)?.all_real())
}
