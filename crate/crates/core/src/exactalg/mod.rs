//! Exact rational and polynomial algebra.

mod algebraic;
mod bipoly;
mod hankel;
mod interval;
mod numfield;
mod poly;
mod rat;
mod resultant;
mod sturm;
mod surd;

pub use algebraic::{decimal, AlgebraicReal};
pub use bipoly::BiPoly;
pub use hankel::{hankel_det, hankel_det_cofactor, hankel_minors};
pub use interval::Interval;
pub use numfield::NumberField;
pub use poly::Poly;
pub use rat::{
    binomial, parse_rat, rat, rat_ceil, rat_floor, rat_from_f64, rat_to_f64, ratio, render_rat,
    Rat,
};
pub use resultant::{interpolate, resultant, resultant_univariate, sylvester_det};
pub use sturm::{
    cauchy_bound, is_real_rooted, isolate_real_roots, real_root_count, sturm_count,
    sturm_sequence, Ext,
};
pub use surd::QuadSurd;
