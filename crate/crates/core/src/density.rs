//! Densities by Stieltjes inversion of `G(zeta) = D(1/zeta)`.

use std::f64::consts::PI;

use num::complex::Complex64;
use rayon::prelude::*;

use crate::classf::ClassF;
use crate::error::{FclError, Result};
use crate::exactalg::rat_to_f64;

pub const DEFAULT_EPS: [f64; 3] = [1e-3, 1e-4, 1e-5];
const MIN_STEPS: usize = 64;
const MAX_STEPS: usize = 1024;

/// `F`, `P`, `Q` and derivatives in floating point.
#[derive(Clone, Debug)]
struct Numeric {
    p: Vec<f64>,
    dp: Vec<f64>,
    q: Vec<f64>,
    dq: Vec<f64>,
}

fn horner(c: &[f64], x: Complex64) -> Complex64 {
    c.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &a| acc * x + a)
}

impl Numeric {
    fn new(f: &ClassF) -> Numeric {
        Numeric {
            p: f.p().to_f64_coeffs(),
            dp: f.p().derivative().to_f64_coeffs(),
            q: f.q().to_f64_coeffs(),
            dq: f.q().derivative().to_f64_coeffs(),
        }
    }

    fn f(&self, w: Complex64) -> Complex64 {
        w * horner(&self.p, w) / horner(&self.q, w)
    }

    /// Newton on `a w P(w) - b Q(w) = 0` from `w`.
    fn newton(&self, a: Complex64, b: Complex64, mut w: Complex64) -> Option<Complex64> {
        let mut prev = f64::INFINITY;
        for _ in 0..60 {
            let pw = horner(&self.p, w);
            let val = a * w * pw - b * horner(&self.q, w);
            let der = a * (pw + w * horner(&self.dp, w)) - b * horner(&self.dq, w);
            if der.norm() < 1e-300 || !der.norm().is_finite() {
                return None;
            }
            let step = val / der;
            w -= step;
            if !w.norm().is_finite() {
                return None;
            }
            let (sn, scale) = (step.norm(), 1.0 + w.norm());
            // near a branch point rounding stalls the step above 1e-15
            if sn <= 1e-15 * scale || (sn <= 1e-10 * scale && sn >= 0.5 * prev) {
                return Some(w);
            }
            prev = sn;
        }
        None
    }

    fn critical_near(&self, w: Complex64) -> bool {
        // F'(w) = (P + w P') / Q - w P Q' / Q^2
        let (pw, qw) = (horner(&self.p, w), horner(&self.q, w));
        let fp = (pw + w * horner(&self.dp, w)) / qw - w * pw * horner(&self.dq, w) / (qw * qw);
        fp.norm() < 1e-10
    }
}

fn d_eval_steps(num: &Numeric, z: Complex64, steps: usize) -> Result<Complex64> {
    let one = Complex64::new(1.0, 0.0);
    let mut w = Complex64::new(0.0, 0.0);
    for k in 1..=steps {
        let zk = z * (k as f64 / steps as f64);
        w = num
            .newton(one, zk, w)
            .ok_or_else(|| FclError::ContinuationFailure(format!("Newton failed at step {k} of {steps}")))?;
        if num.critical_near(w) {
            return Err(FclError::ContinuationFailure(format!("path passes a critical point of F near w = {w}")));
        }
    }
    if (num.f(w) - z).norm() >= 1e-12 * (1.0 + z.norm()) {
        return Err(FclError::ContinuationFailure("residual too large".into()));
    }
    Ok(w)
}

/// `D(z)`, continued from `D(0) = 0` along the segment `0 -> z`.
pub fn d_eval(f: &ClassF, z: Complex64, path_steps: usize) -> Result<Complex64> {
    let num = Numeric::new(f);
    let mut steps = path_steps.max(1);
    loop {
        match d_eval_steps(&num, z, steps) {
            Ok(w) => return Ok(w),
            Err(e) if steps >= MAX_STEPS => return Err(e),
            Err(_) => steps *= 2,
        }
    }
}

/// Crude bound on the support radius from the moment growth.
fn support_radius(f: &ClassF) -> f64 {
    let m = f.moments(24).map(|s| s.terms).unwrap_or_default();
    let mut r: f64 = 1.0;
    for (n, s) in m.iter().enumerate().skip(1) {
        let v = rat_to_f64(s).abs();
        if v > 0.0 {
            r = r.max(v.powf(1.0 / n as f64));
        }
    }
    r
}

/// `G(x - i eps)` for each eps (decreasing), following the vertical path from
/// `x - i Y`.
fn g_track(num: &Numeric, x: f64, y_top: f64, eps: &[f64], steps: usize) -> Option<Vec<Complex64>> {
    let zeta0 = Complex64::new(x, -y_top);
    let one = Complex64::new(1.0, 0.0);
    let mut d = d_eval_steps(num, one / zeta0, MIN_STEPS).ok()?;
    let mut y = y_top;
    let mut out = Vec::with_capacity(eps.len());
    for &e in eps {
        let ratio = (e / y).powf(1.0 / steps as f64);
        for _ in 0..steps {
            let yn = y * ratio;
            let zeta = Complex64::new(x, -yn);
            let dn = num.newton(zeta, one, d)?;
            // Im G > 0 on the lower half plane; a sign flip is a branch jump
            if dn.im < -1e-12 || (dn - d).norm() > 0.5 * (1.0 + d.norm()) {
                return None;
            }
            d = dn;
            y = yn;
        }
        out.push(d);
    }
    Some(out)
}

#[derive(Clone, Debug)]
pub struct DensityTable {
    pub xs: Vec<f64>,
    /// `None` marks a gap: continuation failure or an atom.
    pub fs: Vec<Option<f64>>,
    pub eps_used: f64,
    pub mass_estimate: f64,
    /// Small negative values raised to zero.
    pub clamped: usize,
}

impl DensityTable {
    pub fn to_csv(&self) -> String {
        let mut s = String::from("x,f\n");
        for (x, f) in self.xs.iter().zip(&self.fs) {
            match f {
                Some(v) => s.push_str(&format!("{x},{v}\n")),
                None => s.push_str(&format!("{x},\n")),
            }
        }
        s
    }

    /// Trapezoid integral of `x^n f(x)`, skipping intervals touching a gap.
    pub fn integrate_power(&self, n: i32) -> f64 {
        let mut acc = 0.0;
        for i in 1..self.xs.len() {
            if let (Some(a), Some(b)) = (self.fs[i - 1], self.fs[i]) {
                let (x0, x1) = (self.xs[i - 1], self.xs[i]);
                acc += 0.5 * (x1 - x0) * (a * x0.powi(n) + b * x1.powi(n));
            }
        }
        acc
    }
}

fn density_point(num: &Numeric, x: f64, y_top: f64, eps: &[f64]) -> Option<f64> {
    let mut steps = MIN_STEPS;
    let g = loop {
        if let Some(g) = g_track(num, x, y_top, eps, steps) {
            break g;
        }
        if steps >= MAX_STEPS {
            return None;
        }
        steps *= 2;
    };
    let f: Vec<f64> = g.iter().map(|d| d.im / PI).collect();
    let n = f.len();
    if n == 1 {
        return Some(f[0]);
    }
    let (e1, e2) = (eps[n - 2], eps[n - 1]);
    let (f1, f2) = (f[n - 2], f[n - 1]);
    // a point mass grows like 1/eps
    if f2 > 3.0 * f1 && f2 * e2 * PI > 1e-6 {
        return None;
    }
    let r = (e1 * f2 - e2 * f1) / (e1 - e2);
    r.is_finite().then_some(r)
}

/// Tabulate the density on `n` points of `[x_lo, x_hi]`.
pub fn density_grid(f: &ClassF, x_lo: f64, x_hi: f64, n: usize, eps_schedule: &[f64]) -> Result<DensityTable> {
    if n < 2 {
        return Err(FclError::Domain("need at least 2 grid points".into()));
    }
    if !(x_lo < x_hi) {
        return Err(FclError::Domain("x_lo must be below x_hi".into()));
    }
    if eps_schedule.is_empty() || eps_schedule.iter().any(|e| !(*e > 0.0)) || eps_schedule.windows(2).any(|w| w[1] >= w[0]) {
        return Err(FclError::Domain("eps schedule must be positive and decreasing".into()));
    }
    let num = Numeric::new(f);
    let s = support_radius(f);
    let xs: Vec<f64> = (0..n).map(|i| x_lo + (x_hi - x_lo) * i as f64 / (n - 1) as f64).collect();
    let raw: Vec<Option<f64>> = xs
        .par_iter()
        .map(|&x| {
            let y_top = 4.0 * (x.abs() + 2.0 * s + 1.0);
            density_point(&num, x, y_top, eps_schedule)
        })
        .collect();
    let mut clamped = 0;
    let fs: Vec<Option<f64>> = raw
        .into_iter()
        .map(|v| {
            v.map(|v| {
                if v < 0.0 {
                    clamped += 1;
                    0.0
                } else {
                    v
                }
            })
        })
        .collect();
    let mut table = DensityTable { xs, fs, eps_used: *eps_schedule.last().unwrap(), mass_estimate: 0.0, clamped };
    table.mass_estimate = table.integrate_power(0);
    Ok(table)
}

#[derive(Clone, Debug, PartialEq)]
pub enum ReferenceKind {
    Wigner(f64),
    Mp(f64, f64),
    /// `F = w (1 + w^2) / (1 + 9 w^2)`.
    Expoly,
}

pub fn reference_density(kind: &ReferenceKind, x: f64) -> f64 {
    match *kind {
        ReferenceKind::Wigner(t) => {
            let r = 4.0 * t - x * x;
            if r <= 0.0 {
                0.0
            } else {
                r.sqrt() / (2.0 * PI * t)
            }
        }
        ReferenceKind::Mp(v, t) => {
            if v < 0.0 {
                return reference_density(&ReferenceKind::Mp(-v, t), -x);
            }
            let (a, b) = (v * (1.0 - t.sqrt()).powi(2), v * (1.0 + t.sqrt()).powi(2));
            if x <= a || x >= b || x <= 0.0 {
                0.0
            } else {
                ((b - x) * (x - a)).sqrt() / (2.0 * PI * v * x)
            }
        }
        ReferenceKind::Expoly => {
            let r = 27f64.sqrt();
            if x.abs() >= r {
                return 0.0;
            }
            let u = ((r + x) / (r - x)).cbrt();
            1.0 / (PI * (u + 1.0 + 1.0 / u))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distlib::{mp, wigner};
    use crate::exactalg::{rat, Poly};

    fn expoly() -> ClassF {
        ClassF::new(Poly::from_ints(&[1, 0, 1]), Poly::from_ints(&[1, 0, 9])).unwrap()
    }

    #[test]
    fn d_eval_examples() {
        let z = Complex64::new(0.3, 0.7);
        assert!((d_eval(&ClassF::identity(), z, 16).unwrap() - z).norm() < 1e-14);
        let cat = ClassF::new(Poly::from_ints(&[1, -1]), Poly::one()).unwrap();
        let d = d_eval(&cat, Complex64::new(0.125, 0.0), 64).unwrap();
        assert!((d.re - (1.0 - 0.5f64.sqrt()) / 2.0).abs() < 1e-12);
        for f in [wigner(&rat(1)).unwrap(), mp(&rat(1), &rat(1)).unwrap(), expoly()] {
            for (a, b) in [(0.1, 0.2), (-0.3, 0.05), (0.02, 1.5)] {
                let d = d_eval(&f, Complex64::new(a, b), 64).unwrap();
                assert!(d.im > 0.0, "{f} {a} {b}");
            }
        }
    }

    #[test]
    fn reference_values() {
        assert!((reference_density(&ReferenceKind::Wigner(1.0), 0.0) - 1.0 / PI).abs() < 1e-15);
        assert!((reference_density(&ReferenceKind::Expoly, 0.0) - 1.0 / (3.0 * PI)).abs() < 1e-15);
        assert_eq!(reference_density(&ReferenceKind::Mp(1.0, 1.0), 4.5), 0.0);
        assert_eq!(reference_density(&ReferenceKind::Wigner(1.0), 3.0), 0.0);
    }

    #[test]
    fn expoly_density() {
        let t = density_grid(&expoly(), 0.0, 5.0, 6, &DEFAULT_EPS).unwrap();
        for x in [0usize, 1, 2, 5] {
            let got = t.fs[x].unwrap();
            let want = reference_density(&ReferenceKind::Expoly, t.xs[x]);
            assert!((got - want).abs() < 1e-6, "x={} got {got} want {want}", t.xs[x]);
        }
    }

    #[test]
    fn wigner_density() {
        let t = density_grid(&wigner(&rat(1)).unwrap(), -1.9, 1.9, 39, &DEFAULT_EPS).unwrap();
        for (x, f) in t.xs.iter().zip(&t.fs) {
            let want = reference_density(&ReferenceKind::Wigner(1.0), *x);
            assert!((f.unwrap() - want).abs() < 1e-6, "x={x}");
        }
    }

    #[test]
    fn mp_density() {
        let t = density_grid(&mp(&rat(1), &rat(1)).unwrap(), 0.1, 3.9, 39, &DEFAULT_EPS).unwrap();
        for (x, f) in t.xs.iter().zip(&t.fs) {
            let want = reference_density(&ReferenceKind::Mp(1.0, 1.0), *x);
            assert!((f.unwrap() - want).abs() < 1e-5, "x={x}");
        }
    }

    #[test]
    fn atoms_become_gaps() {
        // MP(1, 1/2) has an atom of mass 1/2 at 0
        let t = density_grid(&mp(&rat(1), &crate::exactalg::ratio(1, 2)).unwrap(), -0.5, 0.5, 3, &DEFAULT_EPS).unwrap();
        assert_eq!(t.fs[1], None);
        assert!(t.to_csv().starts_with("x,f\n"));
        assert!(t.to_csv().contains("0,\n"));
    }

    #[test]
    fn bad_arguments() {
        let f = wigner(&rat(1)).unwrap();
        assert!(density_grid(&f, 0.0, 1.0, 1, &DEFAULT_EPS).is_err());
        assert!(density_grid(&f, 1.0, 0.0, 3, &DEFAULT_EPS).is_err());
        assert!(density_grid(&f, 0.0, 1.0, 3, &[1e-4, 1e-3]).is_err());
    }

    #[test]
    fn symmetry_of_even_elements() {
        for f in [wigner(&rat(2)).unwrap(), expoly()] {
            let t = density_grid(&f, -3.0, 3.0, 61, &DEFAULT_EPS).unwrap();
            for i in 0..t.xs.len() {
                let (a, b) = (t.fs[i].unwrap(), t.fs[t.xs.len() - 1 - i].unwrap());
                assert!((a - b).abs() < 1e-8, "x={}", t.xs[i]);
            }
        }
    }

    #[test]
    fn moments_and_mass() {
        let corpus = [
            (wigner(&rat(1)).unwrap(), -2.1, 2.1),
            (mp(&rat(1), &rat(2)).unwrap(), -0.1, 5.9),
            (expoly(), -5.3, 5.3),
        ];
        for (f, lo, hi) in corpus {
            let t = density_grid(&f, lo, hi, 4001, &DEFAULT_EPS).unwrap();
            assert!((t.mass_estimate - 1.0).abs() <= 1e-3, "{f}: mass {}", t.mass_estimate);
            let s = f.moments(4).unwrap().terms;
            for n in 1..=4 {
                let exact = rat_to_f64(&s[n]);
                let num = t.integrate_power(n as i32);
                assert!((num - exact).abs() <= 1e-3 * exact.abs().max(1.0), "{f}: s_{n} {num} vs {exact}");
            }
        }
    }
}
