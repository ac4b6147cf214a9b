//! Scalar abstraction for the terminating-series kernels.
//!
//! The hypergeometric sums and the expansion-coefficient combinatorics are
//! exact rational functions of their parameters, so the same kernel runs in
//! f64 (fast, possibly cancellation-limited) and in `BigRational` (exact
//! replay). Transcendental code paths (Γ, ψ, quadrature) stay f64-only.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::ops::{Add, Div, Mul, Neg, Sub};

pub trait Scalar:
    Clone
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
{
    fn from_i64(v: i64) -> Self;
    /// Exact ratio constructor; `den` must be nonzero.
    fn from_ratio(num: i64, den: i64) -> Self;
    fn is_zero_val(&self) -> bool {
        self.is_zero()
    }
}

impl Scalar for f64 {
    fn from_i64(v: i64) -> Self {
        v as f64
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        num as f64 / den as f64
    }
}

impl Scalar for BigRational {
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }
}

/// Exact conversion of a finite f64 into a rational (every finite f64 is a
/// dyadic rational). Used to escalate ill-conditioned float sums.
pub fn rational_from_f64(x: f64) -> Option<BigRational> {
    BigRational::from_float(x)
}

/// True when `x` is an exact integer value.
pub fn f64_is_integer(x: f64) -> bool {
    x.is_finite() && x == x.trunc()
}

/// Rising factorial (a)_j for any scalar.
pub fn pochhammer_scalar<T: Scalar>(a: &T, j: usize) -> T {
    let mut acc = T::one();
    let mut f = a.clone();
    for _ in 0..j {
        acc = acc * f.clone();
        f = f + T::one();
    }
    acc
}

/// Integer power of a rational, negative exponents via reciprocal.
pub fn rational_powi(x: &BigRational, e: i64) -> BigRational {
    let mut acc = BigRational::one();
    for _ in 0..e.unsigned_abs() {
        acc *= x;
    }
    if e < 0 {
        acc.recip()
    } else {
        acc
    }
}

/// Γ(m/2) for positive integer m, returned as (rational, √π exponent ∈ {0, 1}).
/// Even m: Γ(m/2) = (m/2 − 1)!. Odd m: Γ(m/2) = (m−2)!! / 2^{(m−1)/2} · √π.
pub fn half_gamma(twice_x: i64) -> crate::Result<(BigRational, i32)> {
    if twice_x <= 0 {
        return Err(crate::Error::domain("half_gamma requires a positive argument"));
    }
    if twice_x % 2 == 0 {
        let mut acc = BigRational::one();
        for j in 1..(twice_x / 2) {
            acc *= BigRational::from(BigInt::from(j));
        }
        Ok((acc, 0))
    } else {
        let mut acc = BigRational::one();
        let mut j = twice_x - 2;
        while j >= 1 {
            acc *= BigRational::from(BigInt::from(j));
            j -= 2;
        }
        let two = BigRational::from(BigInt::from(2));
        Ok((acc / rational_powi(&two, (twice_x - 1) / 2), 1))
    }
}

/// Binomial coefficient C(n, k) as an exact rational.
pub fn binomial_rational(n: usize, k: usize) -> BigRational {
    if k > n {
        return BigRational::zero();
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k.min(n - k) {
        num *= BigInt::from(n - i);
        den *= BigInt::from(i + 1);
    }
    BigRational::new(num, den)
}
