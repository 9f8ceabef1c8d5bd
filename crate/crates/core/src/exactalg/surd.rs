use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num::{One, Signed, Zero};

use super::rat::{rat_to_f64, render_rat, Rat};

/// `a + b sqrt(d)` with rational `a, b, d`; `d` is reduced so that a rational
/// square root is absorbed into `a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadSurd {
    pub a: Rat,
    pub b: Rat,
    pub d: Rat,
}

fn rational_sqrt(d: &Rat) -> Option<Rat> {
    if d.is_negative() {
        return None;
    }
    let n = d.numer().sqrt();
    let m = d.denom().sqrt();
    (&n * &n == *d.numer() && &m * &m == *d.denom()).then(|| Rat::new(n, m))
}

impl QuadSurd {
    pub fn rational(a: Rat) -> QuadSurd {
        QuadSurd { a, b: Rat::zero(), d: Rat::zero() }
    }

    /// `a + b sqrt(d)`.
    pub fn new(a: Rat, b: Rat, d: Rat) -> QuadSurd {
        if b.is_zero() || d.is_zero() {
            return QuadSurd::rational(a);
        }
        if let Some(r) = rational_sqrt(&d) {
            return QuadSurd::rational(a + b * r);
        }
        QuadSurd { a, b, d }
    }

    /// `sqrt(d)` itself.
    pub fn sqrt(d: Rat) -> QuadSurd {
        QuadSurd::new(Rat::zero(), Rat::one(), d)
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    fn common_d(&self, o: &QuadSurd) -> Rat {
        match (self.is_rational(), o.is_rational()) {
            (true, true) => Rat::zero(),
            (false, true) => self.d.clone(),
            (true, false) => o.d.clone(),
            (false, false) => {
                assert_eq!(self.d, o.d, "mixed radicands");
                self.d.clone()
            }
        }
    }

    pub fn conj(&self) -> QuadSurd {
        QuadSurd { a: self.a.clone(), b: -&self.b, d: self.d.clone() }
    }

    /// Field norm `a^2 - d b^2`.
    pub fn norm(&self) -> Rat {
        &self.a * &self.a - &self.d * &self.b * &self.b
    }

    pub fn recip(&self) -> QuadSurd {
        assert!(!self.is_zero(), "inverse of zero");
        let n = self.norm();
        let c = self.conj();
        QuadSurd::new(c.a / &n, c.b / &n, c.d)
    }

    pub fn signum(&self) -> i32 {
        let sa = sign(&self.a);
        let sb = sign(&self.b);
        if self.is_rational() || sb == 0 {
            return sa;
        }
        if sa == 0 || sa == sb {
            return if sa == 0 { sb } else { sa };
        }
        // opposite signs: compare a^2 with b^2 d
        match (&self.a * &self.a).cmp(&(&self.b * &self.b * &self.d)) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => 0,
        }
    }

    pub fn to_f64(&self) -> f64 {
        rat_to_f64(&self.a) + rat_to_f64(&self.b) * rat_to_f64(&self.d).sqrt()
    }
}

fn sign(r: &Rat) -> i32 {
    if r.is_positive() {
        1
    } else if r.is_negative() {
        -1
    } else {
        0
    }
}

impl From<Rat> for QuadSurd {
    fn from(r: Rat) -> Self {
        QuadSurd::rational(r)
    }
}

impl Add for &QuadSurd {
    type Output = QuadSurd;
    fn add(self, o: &QuadSurd) -> QuadSurd {
        let d = self.common_d(o);
        QuadSurd::new(&self.a + &o.a, &self.b + &o.b, d)
    }
}

impl Sub for &QuadSurd {
    type Output = QuadSurd;
    fn sub(self, o: &QuadSurd) -> QuadSurd {
        let d = self.common_d(o);
        QuadSurd::new(&self.a - &o.a, &self.b - &o.b, d)
    }
}

impl Mul for &QuadSurd {
    type Output = QuadSurd;
    fn mul(self, o: &QuadSurd) -> QuadSurd {
        let d = self.common_d(o);
        QuadSurd::new(
            &self.a * &o.a + &self.b * &o.b * &d,
            &self.a * &o.b + &self.b * &o.a,
            d,
        )
    }
}

impl Div for &QuadSurd {
    type Output = QuadSurd;
    fn div(self, o: &QuadSurd) -> QuadSurd {
        self * &o.recip()
    }
}

impl Neg for &QuadSurd {
    type Output = QuadSurd;
    fn neg(self) -> QuadSurd {
        QuadSurd { a: -&self.a, b: -&self.b, d: self.d.clone() }
    }
}

impl fmt::Display for QuadSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            return f.write_str(&render_rat(&self.a));
        }
        let d = render_rat(&self.d);
        let b = if self.b.is_one() {
            String::new()
        } else if self.b == -Rat::one() {
            "-".into()
        } else {
            format!("{}*", render_rat(&self.b))
        };
        if self.a.is_zero() {
            write!(f, "{b}sqrt({d})")
        } else if self.b.is_negative() && b.starts_with('-') {
            write!(f, "{} - {}sqrt({d})", render_rat(&self.a), &b[1..])
        } else {
            write!(f, "{} + {b}sqrt({d})", render_rat(&self.a))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rat::{rat, ratio};

    #[test]
    fn arithmetic_and_signs() {
        let s = QuadSurd::sqrt(rat(2));
        let x = &QuadSurd::rational(rat(1)) + &s;
        let y = &x * &x.conj();
        assert_eq!(y, QuadSurd::rational(rat(-1)));
        assert_eq!((&x / &x), QuadSurd::rational(rat(1)));
        assert_eq!(QuadSurd::new(rat(3), rat(-2), rat(2)).signum(), 1);
        assert_eq!(QuadSurd::new(rat(1), rat(-1), rat(2)).signum(), -1);
        assert_eq!(QuadSurd::sqrt(ratio(9, 4)), QuadSurd::rational(ratio(3, 2)));
        assert!((QuadSurd::new(rat(1), rat(1), rat(3)).to_f64() - 2.7320508075688772).abs() < 1e-15);
        assert_eq!(QuadSurd::new(rat(2), rat(-3), rat(5)).to_string(), "2 - 3*sqrt(5)");
    }
}
