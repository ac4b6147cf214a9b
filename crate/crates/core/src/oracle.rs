//! Independent ground truth: adaptive quadrature of the defining integrals
//! plus exact-rational replays of the terminating sums.
//!
//! Nothing here calls into `hydrogenic` or `largedim`; the state parameters
//! and the integrands are assembled from scratch on top of the `specfun`,
//! `scalar`, and `quad` primitives. Agreement between this module and the
//! formula modules is therefore evidence, not tautology.

use crate::error::{Error, Result};
use crate::hydrogenic::HydrogenicState;
use crate::quad::{integrate_segments, integrate_to_inf, QuadratureResult};
use crate::scalar::{
    binomial_rational, half_gamma, pochhammer_scalar, rational_from_f64, rational_powi,
};
use crate::specfun::{gegenbauer, laguerre, log_factorial, log_gamma};
use crate::Rational;
use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

/// What to integrate against the radial density: a power r^α or ln r.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Integrand {
    Power(f64),
    Log,
}

/// Default relative tolerance requested from the adaptive rule.
pub const ORACLE_REL_TOL: f64 = 1e-11;
/// Hard ceiling on integrand evaluations per moment.
pub const ORACLE_NODE_CEILING: usize = 20_000;

// Derived quantities recomputed here on purpose (not via `hydrogenic`):
// eta = (2n + D - 3)/2, L = l + (D - 3)/2, lengthScale = eta/(2Z), k = n - l - 1.
struct OracleParams {
    eta: f64,
    grand_l: f64,
    length_scale: f64,
    k: usize,
    nu: f64,
}

fn params(state: &HydrogenicState) -> OracleParams {
    let n = f64::from(state.n);
    let l = f64::from(state.l);
    let d = f64::from(state.d);
    let eta = n + (d - 3.0) / 2.0;
    OracleParams {
        eta,
        grand_l: l + (d - 3.0) / 2.0,
        length_scale: eta / (2.0 * state.z),
        k: (state.n - state.l - 1) as usize,
        nu: l + (d - 1.0) / 2.0,
    }
}

fn merge(parts: &[QuadratureResult]) -> QuadratureResult {
    QuadratureResult {
        value: parts.iter().map(|p| p.value).sum(),
        error_estimate: parts.iter().map(|p| p.error_estimate).sum(),
        node_count: parts.iter().map(|p| p.node_count).sum(),
        converged: parts.iter().all(|p| p.converged),
    }
}

fn require_converged(r: QuadratureResult, what: &str) -> Result<QuadratureResult> {
    if !r.converged {
        return Err(Error::numeric(format!(
            "{what} did not converge: estimate {:.3e} after {} nodes",
            r.error_estimate, r.node_count
        )));
    }
    Ok(r)
}

/// ∫ r^{α+D−1} ρ(r) dr (or the ln r moment) by adaptive quadrature in the
/// scaled variable u = r/lengthScale. The weight u^{2L+2+α} e^{−u} is
/// assembled pointwise in log space so that no intermediate overflows even
/// when the support sits near u ≈ D² for large dimensions.
pub fn quad_position_moment(state: &HydrogenicState, f: Integrand) -> Result<QuadratureResult> {
    quad_position_moment_with(state, f, ORACLE_REL_TOL, ORACLE_NODE_CEILING)
}

pub fn quad_position_moment_with(
    state: &HydrogenicState,
    f: Integrand,
    rel_tol: f64,
    max_nodes: usize,
) -> Result<QuadratureResult> {
    let p = params(state);
    let alpha = match f {
        Integrand::Power(a) => a,
        Integrand::Log => 0.0,
    };
    let window = -(f64::from(state.d) + 2.0 * f64::from(state.l));
    if !(alpha > window) {
        return Err(Error::validity(format!(
            "position moment diverges: alpha = {alpha} must exceed {window}"
        )));
    }
    let beta = 2.0 * p.grand_l + 1.0;
    let k = p.k;
    // ln of 1/(2η) · k!/Γ(k+β+1): the orthonormal Laguerre weight constant.
    let ln_norm = -(2.0 * p.eta).ln() + log_factorial(k) - log_gamma(k as f64 + beta + 1.0)?;
    let ln_scale = p.length_scale.ln();
    let power_exp = alpha + 2.0 * p.grand_l + 2.0;
    let integrand = move |u: f64| -> f64 {
        if u <= 0.0 {
            return 0.0;
        }
        let lag = laguerre(k, beta, u);
        let base = (ln_norm + power_exp * u.ln() - u).exp() * lag * lag;
        match f {
            Integrand::Power(_) => base,
            Integrand::Log => (ln_scale + u.ln()) * base,
        }
    };

    // Panel boundaries: the weight's peak near 2L+2+α, the classical turning
    // point 4η, then an exponential-tail map from 8η outward.
    let tail_start = 8.0 * p.eta;
    let mut pts = vec![0.0, 2.0 * p.grand_l + 2.0, power_exp, 4.0 * p.eta, tail_start];
    pts.retain(|&x| x >= 0.0 && x <= tail_start);
    pts.sort_by(|a, b| a.partial_cmp(b).expect("finite split points"));
    pts.dedup_by(|a, b| (*a - *b).abs() < 1e-12 * tail_start.max(1.0));
    let half = max_nodes / 2;
    let finite = integrate_segments(integrand, &pts, rel_tol, 0.0, half)?;
    let tail = integrate_to_inf(integrand, tail_start, rel_tol, finite.value.abs() * rel_tol, half)?;
    let total = merge(&[finite, tail]);
    let scale = match f {
        Integrand::Power(a) => p.length_scale.powf(a),
        Integrand::Log => 1.0,
    };
    let scaled = QuadratureResult {
        value: total.value * scale,
        error_estimate: total.error_estimate * scale.abs(),
        node_count: total.node_count,
        converged: total.converged,
    };
    require_converged(scaled, "position moment quadrature")
}

/// Momentum-space moment via the t-integral over [−1, 1] with the Gegenbauer
/// weight, computed through the t = cos θ substitution. Half-angle identities
/// keep 1 ∓ t accurate at the endpoints.
pub fn quad_momentum_moment(state: &HydrogenicState, f: Integrand) -> Result<QuadratureResult> {
    quad_momentum_moment_with(state, f, ORACLE_REL_TOL, ORACLE_NODE_CEILING)
}

pub fn quad_momentum_moment_with(
    state: &HydrogenicState,
    f: Integrand,
    rel_tol: f64,
    max_nodes: usize,
) -> Result<QuadratureResult> {
    let p = params(state);
    let alpha = match f {
        Integrand::Power(a) => a,
        Integrand::Log => 0.0,
    };
    let lo = -(f64::from(state.d) + 2.0 * f64::from(state.l));
    let hi = f64::from(state.d) + 2.0 * f64::from(state.l) + 2.0;
    if !(alpha > lo && alpha < hi) {
        return Err(Error::validity(format!(
            "momentum moment diverges: alpha = {alpha} outside ({lo}, {hi})"
        )));
    }
    let nu = p.nu;
    let k = p.k;
    // ln of the squared Gegenbauer orthonormalization against (1−t²)^{ν−1/2}.
    let ln_norm = log_factorial(k) + (k as f64 + nu).ln() + 2.0 * log_gamma(nu)?
        - std::f64::consts::PI.ln()
        - (1.0 - 2.0 * nu) * std::f64::consts::LN_2
        - log_gamma(k as f64 + 2.0 * nu)?;
    let ln_p_scale = (state.z / p.eta).ln();
    let integrand = move |theta: f64| -> f64 {
        let s = (0.5 * theta).sin();
        let co = (0.5 * theta).cos();
        if s <= 0.0 || co <= 0.0 {
            return 0.0;
        }
        let t = 1.0 - 2.0 * s * s;
        let ln_w = ln_norm
            + (2.0 * nu + 1.0) * std::f64::consts::LN_2
            + (2.0 * nu + alpha) * s.ln()
            + (2.0 * nu + 2.0 - alpha) * co.ln();
        let geg = match gegenbauer(k, nu, t) {
            Ok(v) => v,
            Err(_) => return f64::NAN,
        };
        let base = ln_w.exp() * geg * geg;
        match f {
            Integrand::Power(_) => base,
            Integrand::Log => (ln_p_scale + s.ln() - co.ln()) * base,
        }
    };
    let pi = std::f64::consts::PI;
    let pts = [0.0, 0.25 * pi, 0.5 * pi, 0.75 * pi, pi];
    let raw = integrate_segments(integrand, &pts, rel_tol, 0.0, max_nodes)?;
    let scale = match f {
        Integrand::Power(a) => (state.z / p.eta).powf(a),
        Integrand::Log => 1.0,
    };
    let scaled = QuadratureResult {
        value: raw.value * scale,
        error_estimate: raw.error_estimate * scale.abs(),
        node_count: raw.node_count,
        converged: raw.converged,
    };
    require_converged(scaled, "momentum moment quadrature")
}

/// Which terminating expression to replay in exact rational arithmetic.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReplayExpression {
    /// The position-space moment as prefactor × terminating ₃F₂ (integer α).
    PositionMoment,
    /// The momentum-space moment as prefactor × terminating ₅F₄ (even α).
    MomentumMoment,
    /// The series coefficient f_k in its direct alternating-sum form.
    CoefficientDirect,
    /// The same coefficient recast through backward differences of d_k.
    CoefficientRecast,
}

fn z_exact(state: &HydrogenicState) -> Result<Rational> {
    rational_from_f64(state.z)
        .ok_or_else(|| Error::domain("nuclear charge does not admit an exact representation"))
}

fn big(v: i64) -> Rational {
    Rational::from(BigInt::from(v))
}

/// d_j sequence in the product form:
/// d_j = ν/(ν+j) · ∏_{i=1..j} (1 − p/((ν+i−1/2)(ν+i+1/2))), p = α(α−2)/4.
fn d_sequence_product(nu: &Rational, alpha: &Rational, up_to: usize) -> Vec<Rational> {
    let p = alpha.clone() * (alpha.clone() - big(2)) / big(4);
    let half = Rational::new(BigInt::from(1), BigInt::from(2));
    let mut out = Vec::with_capacity(up_to + 1);
    let mut prod = Rational::one();
    for j in 0..=up_to {
        if j > 0 {
            let i = big(j as i64);
            let lo = nu.clone() + &i - &half;
            let hi = nu.clone() + &i + &half;
            prod *= Rational::one() - p.clone() / (lo * hi);
        }
        out.push(nu.clone() / (nu.clone() + big(j as i64)) * &prod);
    }
    out
}

fn coefficient_direct(nu: &Rational, alpha: &Rational, k: usize) -> Rational {
    let d = d_sequence_product(nu, alpha, k);
    let two_nu = nu.clone() * big(2);
    let mut sum = Rational::zero();
    for (j, dj) in d.iter().enumerate() {
        let sign = if j % 2 == 0 { Rational::one() } else { -Rational::one() };
        let shifted = pochhammer_scalar(&(two_nu.clone() + big(j as i64)), k);
        sum += sign * binomial_rational(k, j) * shifted * dj;
    }
    sum / pochhammer_scalar(&two_nu, k)
}

fn coefficient_recast(nu: &Rational, alpha: &Rational, k: usize) -> Rational {
    let d = d_sequence_product(nu, alpha, k);
    let two_nu = nu.clone() * big(2);
    // Backward differences by explicit difference table (∇ applied i times),
    // a deliberately different route from the binomial-sum evaluation used
    // elsewhere. table[i] holds ∇^i d at the surviving top index k.
    let mut row = d;
    let mut nabla_at_k = vec![row[k].clone()];
    for _ in 1..=k {
        let next: Vec<Rational> =
            row.windows(2).map(|w| w[1].clone() - &w[0]).collect();
        nabla_at_k.push(next.last().expect("nonempty window").clone());
        row = next;
    }
    let mut fact_i = Rational::one();
    let mut sum = Rational::zero();
    for (i, nd) in nabla_at_k.iter().enumerate() {
        if i > 0 {
            fact_i *= big(i as i64);
        }
        let denom = fact_i.clone() * pochhammer_scalar(&two_nu, k - i);
        sum += binomial_rational(k, i) * nd / denom;
    }
    let mut fact_k = Rational::one();
    for i in 1..=k {
        fact_k *= big(i as i64);
    }
    let sign = if k % 2 == 0 { Rational::one() } else { -Rational::one() };
    sign * fact_k * sum
}

fn replay_position(state: &HydrogenicState, alpha: &Rational) -> Result<Rational> {
    if !alpha.is_integer() {
        return Err(Error::domain(
            "position replay requires an integer power; the Γ ratio is rational only there",
        ));
    }
    let a = alpha
        .to_integer()
        .to_i64()
        .ok_or_else(|| Error::domain("power too large for replay"))?;
    let two_l = 2 * i64::from(state.l) + i64::from(state.d) - 3; // 2L
    if a <= -(i64::from(state.d) + 2 * i64::from(state.l)) {
        return Err(Error::validity(format!("position replay diverges at alpha = {a}")));
    }
    let k = (state.n - state.l - 1) as i64;
    let eta = Rational::new(
        BigInt::from(2 * i64::from(state.n) + i64::from(state.d) - 3),
        BigInt::from(2),
    );
    let z = z_exact(state)?;
    // Γ(2L+α+3)/Γ(2L+2) as a rising (or reciprocal rising) product.
    let base = big(two_l) + big(2);
    let gamma_ratio = if a + 1 >= 0 {
        pochhammer_scalar(&base, (a + 1) as usize)
    } else {
        pochhammer_scalar(&(base + big(a + 1)), (-a - 1) as usize).recip()
    };
    let pref = rational_powi(&eta, a - 1) / rational_powi(&big(2), a + 1) / rational_powi(&z, a)
        * gamma_ratio;
    // ₃F₂(−k, −α−1, α+2; 2L+2, 1; 1) by direct term recurrence.
    let mut sum = Rational::one();
    let mut term = Rational::one();
    for j in 0..k {
        let jj = big(j);
        term *= (big(-k) + &jj) * (big(-a - 1) + &jj) * (big(a + 2) + &jj);
        term /= (big(two_l + 2) + &jj) * (Rational::one() + &jj) * (Rational::one() + &jj);
        if term.is_zero() {
            break;
        }
        sum += &term;
    }
    Ok(pref * sum)
}

fn replay_momentum(state: &HydrogenicState, alpha: &Rational) -> Result<Rational> {
    if !alpha.is_integer() {
        return Err(Error::domain("momentum replay requires an even integer power"));
    }
    let a = alpha
        .to_integer()
        .to_i64()
        .ok_or_else(|| Error::domain("power too large for replay"))?;
    if a % 2 != 0 {
        return Err(Error::domain(
            "odd momentum powers carry a bare π and admit no rational value",
        ));
    }
    let window = i64::from(state.d) + 2 * i64::from(state.l);
    if !(a > -window && a < window + 2) {
        return Err(Error::validity(format!("momentum replay diverges at alpha = {a}")));
    }
    let k = (state.n - state.l - 1) as i64;
    let two_nu = 2 * i64::from(state.l) + i64::from(state.d) - 1; // 2ν, an integer
    let eta = Rational::new(
        BigInt::from(2 * i64::from(state.n) + i64::from(state.d) - 3),
        BigInt::from(2),
    );
    let z = z_exact(state)?;

    // Prefactor 2^{1−2ν} √π Z^α/(k! η^α) (k+ν) Γ(k+2ν) Γ(ν+(α+1)/2) Γ(ν+(3−α)/2)
    //            / (Γ(ν+1/2)² Γ(ν+1) Γ(ν+3/2)); the √π parities cancel exactly.
    let mut value = rational_powi(&big(2), 1 - two_nu) * rational_powi(&z, a)
        / rational_powi(&eta, a);
    let mut pi_parity: i32 = 1; // the explicit √π
    let mut fact_k = Rational::one();
    for i in 1..=k {
        fact_k *= big(i);
    }
    value /= fact_k;
    value *= Rational::new(BigInt::from(2 * k + two_nu), BigInt::from(2)); // k+ν

    let mut apply = |twice_arg: i64, invert: bool, value: &mut Rational| -> Result<()> {
        let (g, par) = half_gamma(twice_arg)?;
        if invert {
            *value /= g;
            pi_parity -= par;
        } else {
            *value *= g;
            pi_parity += par;
        }
        Ok(())
    };
    apply(2 * k + 2 * two_nu, false, &mut value)?; // Γ(k+2ν)
    apply(two_nu + a + 1, false, &mut value)?; // Γ(ν+(α+1)/2)
    apply(two_nu + 3 - a, false, &mut value)?; // Γ(ν+(3−α)/2)
    apply(two_nu + 1, true, &mut value)?; // Γ(ν+1/2)
    apply(two_nu + 1, true, &mut value)?; // Γ(ν+1/2) again
    apply(two_nu + 2, true, &mut value)?; // Γ(ν+1)
    apply(two_nu + 3, true, &mut value)?; // Γ(ν+3/2)
    assert_eq!(pi_parity, 0, "√π factors must cancel for even powers");

    // ₅F₄(−k, k+2ν, ν, ν+(α+1)/2, ν+(3−α)/2; 2ν, ν+1/2, ν+1, ν+3/2; 1).
    let half = Rational::new(BigInt::from(1), BigInt::from(2));
    let nu = big(two_nu) * &half;
    let num = [
        big(-k),
        big(k + two_nu),
        nu.clone(),
        nu.clone() + big(a + 1) * &half,
        nu.clone() + big(3 - a) * &half,
    ];
    let den = [
        big(two_nu),
        nu.clone() + &half,
        nu.clone() + Rational::one(),
        nu.clone() + big(3) * &half,
    ];
    let mut sum = Rational::one();
    let mut term = Rational::one();
    for j in 0..k {
        let jj = big(j);
        for a_i in &num {
            term *= a_i.clone() + &jj;
        }
        for b_i in &den {
            term /= b_i.clone() + &jj;
        }
        term /= Rational::one() + &jj;
        if term.is_zero() {
            break;
        }
        sum += &term;
    }
    Ok(value * sum)
}

/// Replays one of the terminating expressions in exact arithmetic.
/// For the coefficient expressions, ν = l+(D−1)/2 and k = n−l−1 are read off
/// the state and α may be any rational.
pub fn rational_replay(
    expr: ReplayExpression,
    state: &HydrogenicState,
    alpha: &Rational,
) -> Result<Rational> {
    match expr {
        ReplayExpression::PositionMoment => replay_position(state, alpha),
        ReplayExpression::MomentumMoment => replay_momentum(state, alpha),
        ReplayExpression::CoefficientDirect | ReplayExpression::CoefficientRecast => {
            let two_nu = 2 * i64::from(state.l) + i64::from(state.d) - 1;
            let nu = Rational::new(BigInt::from(two_nu), BigInt::from(2));
            let k = (state.n - state.l - 1) as usize;
            Ok(match expr {
                ReplayExpression::CoefficientDirect => coefficient_direct(&nu, alpha, k),
                _ => coefficient_recast(&nu, alpha, k),
            })
        }
    }
}
