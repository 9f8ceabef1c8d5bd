//! Monotone convolutions of the basic families and their free decompositions.

use std::fmt;

use num::{One, Signed, Zero};

use crate::classf::{ClassF, RatFun};
use crate::error::{FclError, Result};
use crate::exactalg::{rat, Poly, QuadSurd, Rat};
use crate::spectra::char_poly;

use super::{dirac, mp_unchecked, wigner_unchecked};

/// One free summand; weights may be negative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Component {
    /// `R = u w`.
    Dirac(QuadSurd),
    /// `R = t w^2`.
    Wigner(QuadSurd),
    /// `R = t v w / (1 - v w)`.
    Mp { v: QuadSurd, t: QuadSurd },
    /// Explicit rational `R`.
    Free(RatFun),
}

impl Component {
    fn eval(&self, w: &Rat) -> Option<QuadSurd> {
        let ws = QuadSurd::rational(w.clone());
        match self {
            Component::Dirac(u) => Some(u * &ws),
            Component::Wigner(t) => Some(&(t * &ws) * &ws),
            Component::Mp { v, t } => {
                let vw = v * &ws;
                let den = &QuadSurd::rational(Rat::one()) - &vw;
                if den.is_zero() {
                    return None;
                }
                Some(&(t * &vw) / &den)
            }
            Component::Free(r) => r.eval(w).map(QuadSurd::rational),
        }
    }

    /// Bound on numerator plus denominator degree.
    fn degree(&self) -> usize {
        match self {
            Component::Dirac(_) => 1,
            Component::Wigner(_) => 2,
            Component::Mp { .. } => 2,
            Component::Free(r) => r.num().deg() + r.den().deg(),
        }
    }
}

impl fmt::Display for Component {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Component::Dirac(u) => write!(f, "delta({u})"),
            Component::Wigner(t) => write!(f, "W({t})"),
            Component::Mp { v, t } => write!(f, "MP({v}, {t})"),
            Component::Free(r) => write!(f, "R = {r}"),
        }
    }
}

/// A free sum of components whose R-transforms add up to that of `F`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub components: Vec<Component>,
}

impl Decomposition {
    /// Exact check that the component R-transforms sum to `r`, by evaluation
    /// in `Q(sqrt d)` at more rational points than the degree of the difference.
    pub fn matches(&self, r: &RatFun) -> bool {
        let bound: usize = self.components.iter().map(Component::degree).sum::<usize>() + r.num().deg() + r.den().deg() + 2;
        let mut good = 0;
        let mut k: i64 = 2;
        while good <= bound {
            let w = Rat::new(1.into(), k.into());
            k += 1;
            let Some(target) = r.eval(&w) else { continue };
            let mut acc = QuadSurd::rational(Rat::zero());
            let mut ok = true;
            for c in &self.components {
                match c.eval(&w) {
                    Some(v) => acc = &acc + &v,
                    None => {
                        ok = false;
                        break;
                    }
                }
            }
            if !ok {
                continue;
            }
            if acc != QuadSurd::rational(target) {
                return false;
            }
            good += 1;
        }
        true
    }
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.components.iter().map(|c| c.to_string()).collect();
        f.write_str(&parts.join(" [+] "))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MonotoneKind {
    /// `W(t) |> MP(v, s)`, params `(t, v, s)`.
    WMp,
    /// `MP(v, s) |> W(t)`, params `(v, s, t)`.
    MpW,
    /// `MP(u, s) |> MP(v, t)`, params `(u, s, v, t)`.
    MpMp,
    /// `W(s) |> W(t)`, params `(s, t)`.
    WW,
}

impl MonotoneKind {
    pub fn arity(self) -> usize {
        match self {
            MonotoneKind::WMp | MonotoneKind::MpW => 3,
            MonotoneKind::MpMp => 4,
            MonotoneKind::WW => 2,
        }
    }

    pub fn parse(s: &str) -> Option<MonotoneKind> {
        match s.to_ascii_lowercase().as_str() {
            "w-mp" | "wmp" => Some(MonotoneKind::WMp),
            "mp-w" | "mpw" => Some(MonotoneKind::MpW),
            "mp-mp" | "mpmp" => Some(MonotoneKind::MpMp),
            "w-w" | "ww" => Some(MonotoneKind::WW),
            _ => None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct MonotoneRecord {
    pub kind: MonotoneKind,
    pub f: ClassF,
    pub chi: Poly,
    pub chi_expected: Poly,
    pub chi_check: bool,
    pub decomposition: std::result::Result<Decomposition, FclError>,
    pub identity_check: bool,
}

fn p(c: Vec<Rat>) -> Poly {
    Poly::new(c)
}

fn q(r: &Rat) -> QuadSurd {
    QuadSurd::rational(r.clone())
}

fn need_pos(x: &Rat, name: &str) -> Result<()> {
    if x.is_positive() {
        Ok(())
    } else {
        Err(FclError::Domain(format!("{name} must be positive")))
    }
}

fn need_nonzero(x: &Rat, name: &str) -> Result<()> {
    if x.is_zero() {
        Err(FclError::Domain(format!("{name} must be nonzero")))
    } else {
        Ok(())
    }
}

/// `mu1 |> mu2` in the stated family.
pub fn monotone_family(kind: MonotoneKind, params: &[Rat]) -> Result<MonotoneRecord> {
    if params.len() != kind.arity() {
        return Err(FclError::Domain(format!("expected {} parameters", kind.arity())));
    }
    let one = Rat::one();
    let zero = Rat::zero();
    let (f1, f2, expected, decomposition) = match kind {
        MonotoneKind::WMp => {
            let (t, v, s) = (&params[0], &params[1], &params[2]);
            need_pos(t, "t")?;
            need_nonzero(v, "v")?;
            need_pos(s, "s")?;
            let tw2 = p(vec![one.clone(), zero.clone(), -t.clone()]);
            let inner = p(vec![one.clone(), -v.clone(), t.clone()]).pow(2);
            let expected = &tw2 * &(&inner - &Poly::monomial(s * v * v, 2));
            let disc = v * v - rat(4) * t;
            let dec = if disc.is_positive() {
                let sq = QuadSurd::sqrt(disc);
                let half = q(&Rat::new(1.into(), 2.into()));
                let v1 = &(&q(v) - &sq) * &half;
                let v2 = &(&q(v) + &sq) * &half;
                let sv2 = q(&(s * v * v));
                let c1 = &sv2 / &(&v1 * &(&v1 - &v2));
                let c2 = &sv2 / &(&v2 * &(&v2 - &v1));
                Ok(Decomposition {
                    components: vec![
                        Component::Dirac(q(&(s * v))),
                        Component::Wigner(q(t)),
                        Component::Mp { v: v1, t: c1 },
                        Component::Mp { v: v2, t: c2 },
                    ],
                })
            } else {
                Err(FclError::DecompositionNotReal("needs v^2 > 4t".into()))
            };
            (wigner_unchecked(t), mp_unchecked(v, s), expected, dec)
        }
        MonotoneKind::MpW => {
            let (v, s, t) = (&params[0], &params[1], &params[2]);
            need_nonzero(v, "v")?;
            need_pos(s, "s")?;
            need_pos(t, "t")?;
            let oms = &one - s;
            let a = p(vec![one.clone(), rat(-2) * v, v * v * &oms]);
            let b = &p(vec![one.clone(), -(v * &oms)]).pow(2)
                - &(&Poly::monomial(t.clone(), 2) * &p(vec![one.clone(), -v.clone()]).pow(2));
            let expected = &a * &b;
            let components = if oms.is_zero() {
                vec![
                    Component::Free(RatFun::from_poly(p(vec![zero.clone(), zero.clone(), t.clone(), -(t * v)]))),
                    Component::Mp { v: q(v), t: q(&one) },
                ]
            } else {
                let c0 = s * t / (&oms * &oms * v);
                let c1 = t / &oms;
                let sm1 = s - &one;
                let c2 = s * t / (&sm1 * &sm1 * &sm1 * v * v);
                vec![
                    Component::Dirac(q(&c0)),
                    Component::Wigner(q(&c1)),
                    Component::Mp { v: q(v), t: q(s) },
                    Component::Mp { v: q(&(v * &oms)), t: q(&c2) },
                ]
            };
            (mp_unchecked(v, s), wigner_unchecked(t), expected, Ok(Decomposition { components }))
        }
        MonotoneKind::MpMp => {
            let (u, s, v, t) = (&params[0], &params[1], &params[2], &params[3]);
            need_nonzero(u, "u")?;
            need_pos(s, "s")?;
            need_nonzero(v, "v")?;
            need_pos(t, "t")?;
            let oms = &one - s;
            let c = p(vec![one.clone(), -(u * &oms) - v, u * v]);
            let first = &p(vec![one.clone(), -u.clone()]).pow(2) - &Poly::monomial(s * u * u, 2);
            let second = &c.pow(2)
                - &(&Poly::monomial(t * v * v, 2) * &p(vec![one.clone(), -u.clone()]).pow(2));
            let expected = &first * &second;
            let sum = u * &oms + v;
            let disc = &sum * &sum - rat(4) * u * v;
            let dec = if disc.is_positive() {
                let sq = QuadSurd::sqrt(disc);
                let half = q(&Rat::new(1.into(), 2.into()));
                let um = &(&q(&sum) - &sq) * &half;
                let up = &(&q(&sum) + &sq) * &half;
                let tv = q(&(t * v));
                let k = q(&(&oms * u));
                let am = &(&tv * &(&k - &um)) / &(&sq * &um);
                let ap = &(&tv * &(&up - &k)) / &(&sq * &up);
                Ok(Decomposition {
                    components: vec![
                        Component::Mp { v: q(u), t: q(s) },
                        Component::Mp { v: um, t: am },
                        Component::Mp { v: up, t: ap },
                    ],
                })
            } else {
                Err(FclError::DecompositionNotReal("needs (u - s u + v)^2 > 4 u v".into()))
            };
            (mp_unchecked(u, s), mp_unchecked(v, t), expected, dec)
        }
        MonotoneKind::WW => {
            let (s, t) = (&params[0], &params[1]);
            need_pos(s, "s")?;
            need_pos(t, "t")?;
            let expected = &p(vec![one.clone(), zero.clone(), -s.clone()])
                * &(&p(vec![one.clone(), zero.clone(), s.clone()]).pow(2) - &Poly::monomial(t.clone(), 2));
            let free = RatFun::new(Poly::monomial(t.clone(), 2), p(vec![one.clone(), zero.clone(), s.clone()]))?;
            let dec = Decomposition { components: vec![Component::Wigner(q(s)), Component::Free(free)] };
            (wigner_unchecked(s), wigner_unchecked(t), expected, Ok(dec))
        }
    };
    let f = ClassF::compose(&f2, &f1);
    let chi = char_poly(&f);
    let identity_check = match &decomposition {
        Ok(d) => d.matches(&f.r_transform()),
        Err(_) => false,
    };
    Ok(MonotoneRecord { kind, f, chi_check: chi == expected, chi, chi_expected: expected, decomposition, identity_check })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DiracTarget {
    Wigner,
    Mp,
}

#[derive(Clone, Debug)]
pub struct DiracMonotoneRecord {
    pub f: ClassF,
    pub decomposition: Decomposition,
    pub identity_check: bool,
}

/// `delta_u |> W(t)` (params `[t]`) or `delta_u |> MP(v, t)` (params `[v, t]`).
pub fn dirac_monotone(u: &Rat, target: DiracTarget, params: &[Rat]) -> Result<DiracMonotoneRecord> {
    need_nonzero(u, "u")?;
    let (f2, components) = match target {
        DiracTarget::Wigner => {
            let [t] = params else { return Err(FclError::Domain("expected 1 parameter".into())) };
            need_pos(t, "t")?;
            let comps = vec![Component::Dirac(q(&((t + u * u) / u))), Component::Mp { v: q(&-u.clone()), t: q(&(t / (u * u))) }];
            (wigner_unchecked(t), comps)
        }
        DiracTarget::Mp => {
            let [v, t] = params else { return Err(FclError::Domain("expected 2 parameters".into())) };
            need_nonzero(v, "v")?;
            need_pos(t, "t")?;
            let comps = if v == u {
                vec![Component::Dirac(q(&((Rat::one() + t) * u))), Component::Wigner(q(&(t * u * u)))]
            } else {
                let vmu = v - u;
                vec![
                    Component::Dirac(q(&(u * (v - u - t * v) / &vmu))),
                    Component::Mp { v: q(&vmu), t: q(&(t * v * v / (&vmu * &vmu))) },
                ]
            };
            (mp_unchecked(v, t), comps)
        }
    };
    let f = ClassF::compose(&f2, &dirac(u));
    let decomposition = Decomposition { components };
    let identity_check = decomposition.matches(&f.r_transform());
    Ok(DiracMonotoneRecord { f, decomposition, identity_check })
}

/// `mu |> delta_u` equals the translation of `mu` by `u`.
pub fn right_dirac_is_translation(f: &ClassF, u: &Rat) -> bool {
    ClassF::compose(&dirac(u), f) == f.translate(u)
}
