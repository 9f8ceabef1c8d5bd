use std::fmt;
use std::ops::{Add, Mul, Sub};

use super::poly::Poly;
use super::rat::Rat;

/// Polynomial in `w` whose coefficients are polynomials in a parameter `t`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct BiPoly {
    c: Vec<Poly>,
}

impl BiPoly {
    pub fn new(mut c: Vec<Poly>) -> BiPoly {
        while c.last().is_some_and(|p| p.is_zero()) {
            c.pop();
        }
        BiPoly { c }
    }

    pub fn zero() -> BiPoly {
        BiPoly { c: Vec::new() }
    }

    /// Constant in `t`.
    pub fn from_w(p: &Poly) -> BiPoly {
        BiPoly::new(p.coeffs().iter().map(|a| Poly::constant(a.clone())).collect())
    }

    /// `t * p(w)`.
    pub fn t_times(p: &Poly) -> BiPoly {
        BiPoly::new(p.coeffs().iter().map(|a| Poly::monomial(a.clone(), 1)).collect())
    }

    /// `a(w) + t b(w)`.
    pub fn pencil(a: &Poly, b: &Poly) -> BiPoly {
        &BiPoly::from_w(a) + &BiPoly::t_times(b)
    }

    pub fn coeffs(&self) -> &[Poly] {
        &self.c
    }

    pub fn coeff(&self, i: usize) -> Poly {
        self.c.get(i).cloned().unwrap_or_else(Poly::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn deg_w(&self) -> usize {
        self.c.len().saturating_sub(1)
    }

    pub fn max_deg_t(&self) -> usize {
        self.c.iter().map(|p| p.deg()).max().unwrap_or(0)
    }

    pub fn eval_t(&self, t: &Rat) -> Poly {
        Poly::new(self.c.iter().map(|p| p.eval(t)).collect())
    }

    /// Coefficient vector at `t` of formal length `deg_w + 1` (top may vanish).
    pub fn eval_t_formal(&self, t: &Rat) -> Vec<Rat> {
        self.c.iter().map(|p| p.eval(t)).collect()
    }

    /// Polynomial in `t` obtained at a fixed `w`.
    pub fn eval_w(&self, w: &Rat) -> Poly {
        let mut acc = Poly::zero();
        for p in self.c.iter().rev() {
            acc = &acc.scale(w) + p;
        }
        acc
    }

    pub fn d_dw(&self) -> BiPoly {
        BiPoly::new(
            self.c
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, p)| p.scale(&Rat::from_integer((i as i64).into())))
                .collect(),
        )
    }

    /// Multiply by a polynomial in `w` only.
    pub fn mul_w(&self, p: &Poly) -> BiPoly {
        self * &BiPoly::from_w(p)
    }

    /// Exact division by a polynomial in `w` only, if it divides.
    pub fn div_w(&self, d: &Poly) -> Option<BiPoly> {
        // divide each t-power slice separately
        let dt = self.max_deg_t();
        let mut slices: Vec<Poly> = Vec::new();
        for k in 0..=dt {
            let s = Poly::new(self.c.iter().map(|p| p.coeff(k)).collect());
            slices.push(s.exact_div(d)?);
        }
        let n = slices.iter().map(|s| s.coeffs().len()).max().unwrap_or(0);
        Some(BiPoly::new(
            (0..n)
                .map(|i| Poly::new(slices.iter().map(|s| s.coeff(i)).collect()))
                .collect(),
        ))
    }

    pub fn display(&self, var_w: &str, var_t: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (i, p) in self.c.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => format!("*{var_w}"),
                _ => format!("*{var_w}^{i}"),
            };
            parts.push(format!("({}){}", p.display_var(var_t), mono));
        }
        parts.join(" + ")
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiPoly({})", self.display("w", "t"))
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display("w", "t"))
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, o: &BiPoly) -> BiPoly {
        let n = self.c.len().max(o.c.len());
        BiPoly::new((0..n).map(|i| &self.coeff(i) + &o.coeff(i)).collect())
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, o: &BiPoly) -> BiPoly {
        let n = self.c.len().max(o.c.len());
        BiPoly::new((0..n).map(|i| &self.coeff(i) - &o.coeff(i)).collect())
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, o: &BiPoly) -> BiPoly {
        if self.is_zero() || o.is_zero() {
            return BiPoly::zero();
        }
        let mut c = vec![Poly::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                c[i + j] = &c[i + j] + &(a * b);
            }
        }
        BiPoly::new(c)
    }
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rat::rat;

    #[test]
    fn evaluation_is_coefficientwise() {
        // 1 - (2 + t) w^2 + (1 - t) w^4
        let b = BiPoly::new(vec![
            Poly::from_ints(&[1]),
            Poly::zero(),
            Poly::from_ints(&[-2, -1]),
            Poly::zero(),
            Poly::from_ints(&[1, -1]),
        ]);
        assert_eq!(b.eval_t(&rat(1)), Poly::from_ints(&[1, 0, -3]));
        assert_eq!(b.deg_w(), 4);
        assert_eq!(b.max_deg_t(), 1);
        assert_eq!(b.eval_w(&rat(1)), Poly::from_ints(&[0, -2]));
        assert_eq!(b.d_dw().eval_t(&rat(2)), b.eval_t(&rat(2)).derivative());
        let x = Poly::from_ints(&[1, -1]);
        assert_eq!(b.mul_w(&x).div_w(&x).unwrap(), b);
        assert!(b.div_w(&Poly::from_ints(&[0, 1])).is_none());
    }
}
