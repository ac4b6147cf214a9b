//! Terminating generalized hypergeometric sums, Gauss ₂F₁, and Appell F₁.
//!
//! The terminating sums alternate in sign through the (−k)ⱼ factor and
//! cancel catastrophically for large k, so the float path tracks its own
//! condition number (Σ|tⱼ| / |Σ tⱼ|) and callers can escalate to the exact
//! rational kernel, which shares the same incremental term-ratio structure.

use crate::error::{Error, Result};
use crate::scalar::{rational_from_f64, Scalar};
use crate::Rational;
use num_traits::{Signed, ToPrimitive};

/// A ₚ₊₁Fₚ-style evaluation request at real argument.
#[derive(Debug, Clone)]
pub struct HypSpec {
    pub numerator: Vec<f64>,
    pub denominator: Vec<f64>,
    pub argument: f64,
}

/// Float result with the cancellation diagnostic.
#[derive(Debug, Clone, Copy)]
pub struct HypEval {
    pub value: f64,
    /// Σ|term| / |Σ term|; multiplies machine epsilon to bound the relative error.
    pub condition: f64,
    pub terms: usize,
}

fn termination_index_f64(numerator: &[f64]) -> Option<usize> {
    let mut k: Option<usize> = None;
    for &a in numerator {
        if a <= 0.0 && a == a.trunc() && a >= -(u32::MAX as f64) {
            let cand = (-a) as usize;
            k = Some(k.map_or(cand, |c| c.min(cand)));
        }
    }
    k
}

fn check_denominators(denominator: &[f64], k: usize) -> Result<()> {
    for &d in denominator {
        if d <= 0.0 && d == d.trunc() && (-d) as usize <= k.saturating_sub(1) {
            return Err(Error::domain(format!(
                "denominator parameter {d} hits a pole before the series terminates (k = {k})"
            )));
        }
    }
    Ok(())
}

/// Compensated (Neumaier) summation of the terminating series, with
/// incremental term ratios.
pub fn hyp_terminating(spec: &HypSpec) -> Result<HypEval> {
    let k = termination_index_f64(&spec.numerator).ok_or_else(|| {
        Error::domain(format!(
            "series does not terminate: no non-positive-integer numerator parameter in {:?}",
            spec.numerator
        ))
    })?;
    check_denominators(&spec.denominator, k)?;
    let mut term = 1.0f64;
    let mut sum = 1.0f64;
    let mut comp = 0.0f64;
    let mut abs_sum = 1.0f64;
    for j in 0..k {
        let jf = j as f64;
        let mut ratio = spec.argument / (jf + 1.0);
        for &a in &spec.numerator {
            ratio *= a + jf;
        }
        for &d in &spec.denominator {
            ratio /= d + jf;
        }
        term *= ratio;
        abs_sum += term.abs();
        // Neumaier update
        let t = sum + term;
        if sum.abs() >= term.abs() {
            comp += (sum - t) + term;
        } else {
            comp += (term - t) + sum;
        }
        sum = t;
    }
    let value = sum + comp;
    let condition = if value == 0.0 { f64::INFINITY } else { abs_sum / value.abs() };
    Ok(HypEval { value, condition, terms: k + 1 })
}

/// Exact terminating sum over any `Scalar`, evaluated with a backward Horner
/// recurrence (keeps rational magnitudes small).
pub fn hyp_terminating_scalar<T: Scalar>(numerator: &[T], denominator: &[T], k: usize, z: &T) -> T {
    if k == 0 {
        return T::one();
    }
    let ratio_at = |j: usize| -> T {
        let jf = T::from_i64(j as i64 - 1);
        let mut num = z.clone();
        for a in numerator {
            num = num * (a.clone() + jf.clone());
        }
        let mut den = T::from_i64(j as i64);
        for d in denominator {
            den = den * (d.clone() + jf.clone());
        }
        num / den
    };
    let mut acc = T::one() + ratio_at(k);
    for j in (1..k).rev() {
        acc = T::one() + ratio_at(j) * acc;
    }
    acc
}

/// Exact rational terminating sum; rejects non-terminating parameter sets.
pub fn hyp_terminating_rational(
    numerator: &[Rational],
    denominator: &[Rational],
    z: &Rational,
) -> Result<Rational> {
    let mut k: Option<usize> = None;
    for a in numerator {
        if a.is_integer() && !a.is_positive() {
            let cand = (-a).to_integer().to_usize().ok_or_else(|| {
                Error::domain("termination index too large for rational evaluation")
            })?;
            k = Some(k.map_or(cand, |c| c.min(cand)));
        }
    }
    let k = k.ok_or_else(|| Error::domain("rational series does not terminate"))?;
    for d in denominator {
        if d.is_integer() && !d.is_positive() {
            let m = (-d).to_integer().to_usize().unwrap_or(usize::MAX);
            if m <= k.saturating_sub(1) {
                return Err(Error::domain(format!(
                    "denominator parameter {d} hits a pole before termination (k = {k})"
                )));
            }
        }
    }
    Ok(hyp_terminating_scalar(numerator, denominator, k, z))
}

/// Float evaluation with automatic escalation to exact rationals when the
/// compensated sum cannot certify `rel_tol`. Every finite f64 parameter is an
/// exact dyadic rational, so escalation is always available.
pub fn hyp_terminating_auto(spec: &HypSpec, rel_tol: f64) -> Result<f64> {
    let eval = hyp_terminating(spec)?;
    if eval.condition * f64::EPSILON * (eval.terms as f64) <= rel_tol {
        return Ok(eval.value);
    }
    let to_rat = |v: &[f64]| -> Result<Vec<Rational>> {
        v.iter()
            .map(|&x| rational_from_f64(x).ok_or_else(|| Error::numeric("non-finite parameter")))
            .collect()
    };
    let num = to_rat(&spec.numerator)?;
    let den = to_rat(&spec.denominator)?;
    let z = rational_from_f64(spec.argument).ok_or_else(|| Error::numeric("non-finite argument"))?;
    let exact = hyp_terminating_rational(&num, &den, &z)?;
    Ok(crate::rational_to_f64(&exact))
}

const SERIES_MAX_TERMS: usize = 200_000;

fn gauss_series(a: f64, b: f64, c: f64, z: f64) -> Result<f64> {
    // Plain power series; caller guarantees |z| < 1 or termination.
    let mut term = 1.0f64;
    let mut sum = 1.0f64;
    for j in 0..SERIES_MAX_TERMS {
        let jf = j as f64;
        term *= (a + jf) * (b + jf) / ((c + jf) * (jf + 1.0)) * z;
        sum += term;
        if term.abs() <= f64::EPSILON * sum.abs() * 0.25 {
            return Ok(sum);
        }
    }
    Err(Error::numeric(format!("2F1 series failed to converge at z = {z}")))
}

/// Gauss ₂F₁(a, b; c; z) for z ≤ 0 (via the Pfaff transformation), 0 ≤ z < 1
/// (direct series), or any z when the series terminates.
pub fn gauss_2f1(a: f64, b: f64, c: f64, z: f64) -> Result<f64> {
    if c <= 0.0 && c == c.trunc() {
        return Err(Error::domain(format!("2F1 denominator parameter c = {c} is a non-positive integer")));
    }
    if z == 0.0 {
        return Ok(1.0);
    }
    // Terminating cases evaluate directly at any argument.
    let spec_term = |ta: f64, tb: f64| HypSpec { numerator: vec![ta, tb], denominator: vec![c], argument: z };
    if a <= 0.0 && a == a.trunc() {
        return hyp_terminating_auto(&spec_term(a, b), 1e-13);
    }
    if b <= 0.0 && b == b.trunc() {
        return hyp_terminating_auto(&spec_term(a, b), 1e-13);
    }
    if z < 0.0 {
        // Pfaff: (1−z)^{−a} ₂F₁(a, c−b; c; z/(z−1)); the mapped argument lies in (0, 1).
        let w = z / (z - 1.0);
        let val = gauss_series(a, c - b, c, w)?;
        return Ok((1.0 - z).powf(-a) * val);
    }
    if z < 1.0 {
        return gauss_series(a, b, c, z);
    }
    Err(Error::domain(format!("non-terminating 2F1 at z = {z} >= 1 is unsupported")))
}

/// Appell F₁(a; b1, b2; c; x, y) for |x| < 1 and y either |y| < 1 or y ≤ 0.
/// Near the x → 1 boundary the Euler-type integral representation takes over
/// (requires c > a > 0, which holds for every §V usage).
pub fn appell_f1(a: f64, b1: f64, b2: f64, c: f64, x: f64, y: f64) -> Result<f64> {
    if x.abs() >= 1.0 && !(x == 1.0) {
        return Err(Error::domain(format!("appell_f1 requires |x| < 1 (or x = 1 boundary), got {x}")));
    }
    if b2 == 0.0 || y == 0.0 {
        return gauss_2f1(a, b1, c, x);
    }
    if b1 == 0.0 || x == 0.0 {
        return gauss_2f1(a, b2, c, y);
    }
    if x >= 0.98 {
        return appell_f1_integral(a, b1, b2, c, x, y);
    }
    // Outer series in x, inner 2F1 in y:
    // F₁ = Σ_m (a)_m (b1)_m / ((c)_m m!) x^m ₂F₁(a+m, b2; c+m; y)
    let mut coef = 1.0f64;
    let mut sum = 0.0f64;
    let mut small_streak = 0;
    for m in 0..SERIES_MAX_TERMS {
        let mf = m as f64;
        let inner = gauss_2f1(a + mf, b2, c + mf, y)?;
        let term = coef * inner;
        sum += term;
        if term.abs() <= 1e-16 * sum.abs() {
            small_streak += 1;
            if small_streak >= 3 {
                return Ok(sum);
            }
        } else {
            small_streak = 0;
        }
        coef *= (a + mf) * (b1 + mf) / ((c + mf) * (mf + 1.0)) * x;
        if !coef.is_finite() {
            return Err(Error::numeric("appell_f1 outer series overflowed"));
        }
    }
    Err(Error::numeric(format!("appell_f1 series failed to contract at (x, y) = ({x}, {y})")))
}

/// Integral representation
/// F₁ = Γ(c)/(Γ(a)Γ(c−a)) ∫₀¹ s^{a−1}(1−s)^{c−a−1}(1−sx)^{−b1}(1−sy)^{−b2} ds,
/// evaluated after the s = sin²θ substitution that regularizes both endpoints.
fn appell_f1_integral(a: f64, b1: f64, b2: f64, c: f64, x: f64, y: f64) -> Result<f64> {
    if !(c > a && a > 0.0) {
        return Err(Error::domain("appell_f1 integral route requires c > a > 0"));
    }
    let lg = |v: f64| super::gamma::log_gamma(v);
    let norm = (lg(c)? - lg(a)? - lg(c - a)?).exp();
    let half_pi = std::f64::consts::FRAC_PI_2;
    let r = crate::quad::integrate(
        |theta: f64| {
            let (sin_t, cos_t) = theta.sin_cos();
            let s = sin_t * sin_t;
            // ds = 2 sinθ cosθ dθ; s^{a−1}(1−s)^{c−a−1} = sin^{2a−2}·cos^{2(c−a)−2}
            let base = sin_t.powf(2.0 * a - 1.0) * cos_t.powf(2.0 * (c - a) - 1.0) * 2.0;
            let gx = (1.0 - s * x).powf(-b1);
            let gy = (1.0 - s * y).powf(-b2);
            base * gx * gy
        },
        0.0,
        half_pi,
        1e-12,
        0.0,
        60_000,
    )?;
    if !r.converged {
        return Err(Error::numeric("appell_f1 integral did not converge"));
    }
    Ok(norm * r.value)
}
