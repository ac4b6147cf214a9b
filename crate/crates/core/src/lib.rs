//! Exact, asymptotic (large-D, Rydberg), and bound-related quantities for
//! D-dimensional hydrogenic states: radial and momentum expectation values,
//! logarithmic moments, Heisenberg-like uncertainty products, and entropic
//! bounds, together with the verification harness that checks every formula
//! against independent oracles (adaptive quadrature and exact rationals).

pub mod entropy;
pub mod error;
pub mod hydrogenic;
pub mod largedim;
pub mod logsigned;
pub mod oracle;
pub mod quad;
pub mod rydberg;
pub mod scalar;
pub mod specfun;
pub mod uncertainty;
pub mod verify;

pub use error::{Error, Result};
pub use hydrogenic::{DerivedParams, Evaluation, HydrogenicState, Method, Space};
pub use logsigned::LogSigned;

/// Floating scalar used by all transcendental evaluation paths.
pub type Real = f64;
/// Exact scalar used by the rational-replay paths.
pub type Rational = num_rational::BigRational;

/// Converts an arbitrary-magnitude exact rational to the nearest f64 without
/// overflowing the intermediate numerator/denominator conversions.
pub fn rational_to_f64(x: &Rational) -> f64 {
    use num_bigint::BigInt;
    use num_traits::{Signed, ToPrimitive, Zero};
    if x.numer().is_zero() {
        return 0.0;
    }
    let sign = if x.numer().is_negative() { -1.0 } else { 1.0 };
    let num = x.numer().abs();
    let den = x.denom().abs();
    // Scale so that num/den fits comfortably in f64, tracking the shift.
    let nb = num.bits() as i64;
    let db = den.bits() as i64;
    // Keep ~80 significant bits in the quotient.
    let shift_num = (nb - 90).max(0) as u64;
    let shift_den = (db - 90).max(0) as u64;
    let n: BigInt = num >> shift_num;
    let d: BigInt = den >> shift_den;
    let q = n.to_f64().unwrap_or(f64::MAX) / d.to_f64().unwrap_or(f64::MAX);
    let exp = shift_num as i64 - shift_den as i64;
    sign * q * 2f64.powi(exp.clamp(i32::MIN as i64, i32::MAX as i64) as i32)
}

/// Relative deviation |a−b| / max(|b|, floor); the verification suites use
/// floor = 1e−300 so exact zeros compare absolutely.
pub fn rel_dev(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(1e-300)
}
