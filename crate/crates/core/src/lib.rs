//! Exact calculus on the class of rational functions `F(w) = w P(w) / Q(w)`
//! with `P(0) = Q(0) = 1`: free and monotone convolution, moment and cumulant
//! sequences, characteristic polynomials, real-rootedness certificates,
//! Hankel verdicts, critical parameters of free powers, named distribution
//! families, a numeric density engine and an OEIS fixture store.

pub mod classf;
pub mod density;
pub mod distlib;
pub mod error;
pub mod euler;
pub mod exactalg;
pub mod oeis;
pub mod posdef;
pub mod spectra;

pub use classf::{ClassF, RatFun, SeriesKind, SeriesPrefix};
pub use error::{FclError, Result};
pub use exactalg::{AlgebraicReal, BiPoly, Poly, Rat};
