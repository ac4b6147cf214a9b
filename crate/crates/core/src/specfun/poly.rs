//! Associated Laguerre and Gegenbauer evaluation by three-term recurrence.

use crate::error::{Error, Result};

/// L_k^{(β)}(x) via the standard upward recurrence; stable for x ≥ 0, β > −1.
pub fn laguerre(k: usize, beta: f64, x: f64) -> f64 {
    if k == 0 {
        return 1.0;
    }
    let mut prev = 1.0f64;
    let mut cur = 1.0 + beta - x;
    for j in 1..k {
        let jf = j as f64;
        let next = ((2.0 * jf + 1.0 + beta - x) * cur - (jf + beta) * prev) / (jf + 1.0);
        prev = cur;
        cur = next;
    }
    cur
}

/// C_k^{(ν)}(x); the recurrence degenerates at ν = 0, which never arises here
/// (ν = l + (D−1)/2 ≥ 1/2 for D ≥ 2).
pub fn gegenbauer(k: usize, nu: f64, x: f64) -> Result<f64> {
    if nu <= 0.0 {
        return Err(Error::domain(format!("gegenbauer order parameter must be positive, got {nu}")));
    }
    if k == 0 {
        return Ok(1.0);
    }
    let mut prev = 1.0f64;
    let mut cur = 2.0 * nu * x;
    for j in 1..k {
        let jf = j as f64;
        let next = (2.0 * (jf + nu) * x * cur - (jf + 2.0 * nu - 1.0) * prev) / (jf + 1.0);
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// ln of the Laguerre weighted-norm ∫₀^∞ e^{−x} x^β [L_k^{(β)}]² dx = Γ(k+β+1)/k!.
pub fn ln_laguerre_norm(k: usize, beta: f64) -> Result<f64> {
    Ok(super::gamma::log_gamma(k as f64 + beta + 1.0)? - super::gamma::log_factorial(k))
}

/// ln of the Gegenbauer weighted-norm
/// ∫₋₁¹ (1−x²)^{ν−1/2} [C_k^{(ν)}]² dx = π 2^{1−2ν} Γ(k+2ν) / (k! (k+ν) Γ(ν)²).
pub fn ln_gegenbauer_norm(k: usize, nu: f64) -> Result<f64> {
    let lg = super::gamma::log_gamma;
    Ok(std::f64::consts::PI.ln() + (1.0 - 2.0 * nu) * std::f64::consts::LN_2
        + lg(k as f64 + 2.0 * nu)?
        - super::gamma::log_factorial(k)
        - (k as f64 + nu).ln()
        - 2.0 * lg(nu)?)
}
