//! Exact arithmetic: arbitrary-precision rationals, cyclotomic field
//! elements, cyclotomic polynomials, and the sine-ratio decision procedure.

/// The scalar everything reduces to: an arbitrary-precision fraction, always
/// in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

mod cyc;
mod cyclotomic;
mod poly;
mod sign;
mod sine;
mod sparse;

pub use cyc::CycElt;
pub use cyclotomic::{cyclotomic_poly, divisors, euler_phi, factorize, g_of, is_squarefree};
pub use poly::CycPoly;
pub use sine::{
    cos_exact, four_term_shape, is_rational, sin_exact, sine_ratio_rational, verify_section4,
    Section4Entry, Section4Report, Section4Status,
};

/// Convenience constructor for small rationals.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}
