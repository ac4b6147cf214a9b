//! D-dimensional hydrogenic bound states: quantum numbers, radial densities
//! in both spaces, and exact radial/logarithmic expectation values.

use crate::error::{Error, Result};
use crate::scalar::{pochhammer_scalar, rational_from_f64};
use crate::specfun::{self, HypSpec};
use crate::Rational;
use num_bigint::BigInt;
use num_traits::One;

/// Position or momentum space selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Space {
    Position,
    Momentum,
}

impl std::fmt::Display for Space {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Space::Position => write!(f, "position"),
            Space::Momentum => write!(f, "momentum"),
        }
    }
}

/// Route that produced an `Evaluation`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Exact,
    ClosedForm,
    LargeD,
    Rydberg,
    Oracle,
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Method::Exact => "exact",
            Method::ClosedForm => "closed-form",
            Method::LargeD => "large-d",
            Method::Rydberg => "rydberg",
            Method::Oracle => "oracle",
        };
        write!(f, "{s}")
    }
}

/// A bound state (n, l, D, Z). Radial quantities do not depend on the
/// magnetic chain, which is therefore not stored.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HydrogenicState {
    pub n: u32,
    pub l: u32,
    pub d: u32,
    pub z: f64,
}

impl HydrogenicState {
    pub fn new(n: u32, l: u32, d: u32, z: f64) -> Result<Self> {
        if n < 1 {
            return Err(Error::validity("principal quantum number must satisfy n >= 1"));
        }
        if l + 1 > n {
            return Err(Error::validity(format!("orbital quantum number must satisfy l <= n-1, got l={l}, n={n}")));
        }
        if d < 2 {
            return Err(Error::validity(format!(
                "dimension must satisfy D >= 2 (D={d} breaks the Laguerre weight positivity)"
            )));
        }
        if !(z > 0.0) || !z.is_finite() {
            return Err(Error::validity(format!("nuclear charge must be positive and finite, got {z}")));
        }
        Ok(Self { n, l, d, z })
    }
}

/// Composite parameters every radial formula is phrased in.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DerivedParams {
    /// η = n + (D−3)/2
    pub eta: f64,
    /// L = l + (D−3)/2
    pub grand_l: f64,
    /// λ = η/(2Z)
    pub length_scale: f64,
    /// k = n − l − 1, the polynomial degree
    pub k: usize,
    /// ν = l + (D−1)/2 = L + 1
    pub nu: f64,
}

/// A computed expectation value together with the route and the validity
/// condition that admitted it.
#[derive(Debug, Clone, PartialEq)]
pub struct Evaluation {
    pub value: f64,
    pub method: Method,
    pub validity: String,
}

pub fn derive_params(state: &HydrogenicState) -> DerivedParams {
    let half = f64::from(state.d) - 3.0;
    let eta = f64::from(state.n) + half / 2.0;
    let grand_l = f64::from(state.l) + half / 2.0;
    DerivedParams {
        eta,
        grand_l,
        length_scale: eta / (2.0 * state.z),
        k: (state.n - state.l - 1) as usize,
        nu: grand_l + 1.0,
    }
}

/// η as an exact rational (2n + D − 3)/2.
pub fn eta_rational(state: &HydrogenicState) -> Rational {
    Rational::new(BigInt::from(2 * state.n + state.d - 3), BigInt::from(2))
}

/// L as an exact rational (2l + D − 3)/2.
pub fn grand_l_rational(state: &HydrogenicState) -> Rational {
    Rational::new(BigInt::from(2 * i64::from(state.l) + i64::from(state.d) - 3), BigInt::from(2))
}

fn z_rational(state: &HydrogenicState) -> Result<Rational> {
    rational_from_f64(state.z).ok_or_else(|| Error::numeric("nuclear charge is not finite"))
}

pub fn energy(state: &HydrogenicState) -> f64 {
    let p = derive_params(state);
    -state.z * state.z / (2.0 * p.eta * p.eta)
}

use crate::scalar::rational_powi as rat_powi;

/// ρ_{n,l}(r̃): radial factor of the position density, such that
/// ∫₀^∞ r^{D−1} ρ dr = 1. Log-space assembly, polynomial factor last.
pub fn radial_density_position(state: &HydrogenicState, r: f64) -> Result<f64> {
    if !(r > 0.0) {
        return Err(Error::domain(format!("radius must be positive, got {r}")));
    }
    let p = derive_params(state);
    let beta = 2.0 * p.grand_l + 1.0;
    let rt = r / p.length_scale;
    // λ^{−D}/(2η) · k!/Γ(k+β+1) · r̃^{2l} e^{−r̃} · L_k^{(β)}(r̃)²
    let ln_weight = -f64::from(state.d) * p.length_scale.ln() - (2.0 * p.eta).ln()
        + specfun::log_factorial(p.k)
        - specfun::log_gamma(p.k as f64 + beta + 1.0)?
        + 2.0 * f64::from(state.l) * rt.ln()
        - rt;
    let poly = specfun::laguerre(p.k, beta, rt);
    Ok(ln_weight.exp() * poly * poly)
}

/// M²_{n,l}(p): radial factor of the momentum density, such that
/// ∫₀^∞ p^{D−1} M² dp = 1. Log-space assembly, polynomial factor last.
pub fn radial_density_momentum(state: &HydrogenicState, mom: f64) -> Result<f64> {
    if !(mom > 0.0) {
        return Err(Error::domain(format!("momentum must be positive, got {mom}")));
    }
    let p = derive_params(state);
    let pt = mom / state.z;
    let ep = p.eta * pt;
    let t = (1.0 - ep * ep) / (1.0 + ep * ep);
    // K² = Z^{−D} 2^{4L+6} k! Γ(L+1)² η^{D+1} / (2π Γ(k+2ν))
    let ln_k2 = -f64::from(state.d) * state.z.ln()
        + (4.0 * p.grand_l + 6.0) * std::f64::consts::LN_2
        + specfun::log_factorial(p.k)
        + 2.0 * specfun::log_gamma(p.grand_l + 1.0)?
        + (f64::from(state.d) + 1.0) * p.eta.ln()
        - (2.0 * std::f64::consts::PI).ln()
        - specfun::log_gamma(p.k as f64 + 2.0 * p.nu)?;
    let ln_weight = ln_k2 + 2.0 * f64::from(state.l) * ep.ln()
        - (2.0 * p.grand_l + 4.0) * (1.0 + ep * ep).ln();
    let poly = specfun::gegenbauer(p.k, p.nu, t)?;
    Ok(ln_weight.exp() * poly * poly)
}

fn position_validity(state: &HydrogenicState, alpha: f64) -> Result<String> {
    let lower = -(f64::from(state.d) + 2.0 * f64::from(state.l));
    if alpha <= lower {
        return Err(Error::validity(format!(
            "position moment diverges: alpha = {alpha} must exceed -(D+2l) = {lower}"
        )));
    }
    Ok(format!("alpha > -(D+2l): {alpha} > {lower}"))
}

fn momentum_validity(state: &HydrogenicState, alpha: f64) -> Result<String> {
    let lower = -(f64::from(state.d) + 2.0 * f64::from(state.l));
    let upper = -lower + 2.0;
    if alpha <= lower || alpha >= upper {
        return Err(Error::validity(format!(
            "momentum moment diverges: alpha = {alpha} must lie in ({lower}, {upper})"
        )));
    }
    Ok(format!("-(D+2l) < alpha < D+2l+2: {lower} < {alpha} < {upper}"))
}

/// ⟨r^α⟩ via the terminating ₃F₂ representation, valid for α > −D−2l.
pub fn position_expectation(state: &HydrogenicState, alpha: f64) -> Result<Evaluation> {
    let validity = position_validity(state, alpha)?;
    let p = derive_params(state);
    let two_l2 = 2.0 * p.grand_l + 2.0;
    let ln_pref = (alpha - 1.0) * p.eta.ln() - (alpha + 1.0) * std::f64::consts::LN_2
        - alpha * state.z.ln()
        + specfun::log_gamma(two_l2 + alpha + 1.0)?
        - specfun::log_gamma(two_l2)?;
    let spec = HypSpec {
        numerator: vec![-(p.k as f64), -alpha - 1.0, alpha + 2.0],
        denominator: vec![two_l2, 1.0],
        argument: 1.0,
    };
    let f = specfun::hyp_terminating_auto(&spec, 1e-12)?;
    let value = ln_pref.exp() * f;
    if !value.is_finite() {
        return Err(Error::numeric(format!("position moment overflowed at alpha = {alpha}")));
    }
    Ok(Evaluation { value, method: Method::Exact, validity })
}

/// Exact-rational ⟨r^α⟩ for integer α (Z interpreted exactly as a dyadic rational).
pub fn position_expectation_rational(state: &HydrogenicState, alpha: i64) -> Result<Rational> {
    position_validity(state, alpha as f64)?;
    let eta = eta_rational(state);
    let grand_l = grand_l_rational(state);
    let z = z_rational(state)?;
    let two_l2 = Rational::from(BigInt::from(2)) * &grand_l + Rational::from(BigInt::from(2));
    // Γ(2L+α+3)/Γ(2L+2) as a finite Pochhammer product
    let gamma_ratio = if alpha + 1 >= 0 {
        pochhammer_scalar(&two_l2, (alpha + 1) as usize)
    } else {
        let start = &two_l2 + Rational::from(BigInt::from(alpha + 1));
        pochhammer_scalar(&start, (-alpha - 1) as usize).recip()
    };
    let pref = rat_powi(&eta, alpha - 1)
        / rat_powi(&Rational::from(BigInt::from(2)), alpha + 1)
        / rat_powi(&z, alpha)
        * gamma_ratio;
    let num = vec![
        Rational::from(BigInt::from(-(derive_params(state).k as i64))),
        Rational::from(BigInt::from(-alpha - 1)),
        Rational::from(BigInt::from(alpha + 2)),
    ];
    let den = vec![two_l2, Rational::one()];
    let f = specfun::hyp_terminating_rational(&num, &den, &Rational::one())?;
    Ok(pref * f)
}

/// The explicit low-order ⟨r^α⟩ expressions, α ∈ {−4,−3,−2,−1,1,2}; an
/// independent cross-check of the ₃F₂ route.
pub fn position_closed_forms(state: &HydrogenicState, alpha: i64) -> Result<Evaluation> {
    let r = position_closed_form_rational(state, alpha)?;
    let validity = position_validity(state, alpha as f64)?;
    Ok(Evaluation { value: crate::rational_to_f64(&r), method: Method::ClosedForm, validity })
}

/// Rational form of `position_closed_forms`.
pub fn position_closed_form_rational(state: &HydrogenicState, alpha: i64) -> Result<Rational> {
    position_validity(state, alpha as f64)?;
    let eta = eta_rational(state);
    let l = grand_l_rational(state);
    let z = z_rational(state)?;
    let half = Rational::new(BigInt::from(1), BigInt::from(2));
    let one = Rational::one();
    let eta2 = &eta * &eta;
    let ll1 = &l * (&l + &one);
    let sing = |d: &Rational, what: &str| -> Result<()> {
        if d == &Rational::from(BigInt::from(0)) {
            Err(Error::domain(format!("closed form singular: {what} vanishes at L = {l}")))
        } else {
            Ok(())
        }
    };
    match alpha {
        1 => Ok((Rational::from(BigInt::from(3)) * &eta2 - &ll1) / (Rational::from(BigInt::from(2)) * &z)),
        2 => Ok(&eta2 * (Rational::from(BigInt::from(5)) * &eta2 + &one - Rational::from(BigInt::from(3)) * &ll1)
            / (Rational::from(BigInt::from(2)) * &z * &z)),
        -1 => Ok(&z / &eta2),
        -2 => {
            let d = &l + &half;
            sing(&d, "L + 1/2")?;
            Ok(&z * &z / (&eta2 * &eta * d))
        }
        -3 => {
            let d = &l * (&l + &half) * (&l + &one);
            sing(&d, "L(L+1/2)(L+1)")?;
            Ok(rat_powi(&z, 3) / (rat_powi(&eta, 3) * d))
        }
        -4 => {
            let d = (&l - &half) * &l * (&l + &half) * (&l + &one) * (&l + &one + &half);
            sing(&d, "(L-1/2)L(L+1/2)(L+1)(L+3/2)")?;
            Ok(rat_powi(&z, 4) * (Rational::from(BigInt::from(3)) * &eta2 - &ll1)
                / (Rational::from(BigInt::from(2)) * rat_powi(&eta, 5) * d))
        }
        _ => Err(Error::domain(format!("no closed form for alpha = {alpha}; supported: -4..-1, 1, 2"))),
    }
}

/// ⟨log r⟩ = log η + (2n−2l−1)/(2n+D−3) + ψ(n+l+D−2) − log 2Z.
pub fn log_position_expectation(state: &HydrogenicState) -> Result<Evaluation> {
    let p = derive_params(state);
    let arg = f64::from(state.n + state.l + state.d) - 2.0;
    let value = p.eta.ln()
        + f64::from(2 * state.n - 2 * state.l - 1) / f64::from(2 * state.n + state.d - 3)
        + specfun::digamma(arg)?
        - (2.0 * state.z).ln();
    Ok(Evaluation { value, method: Method::Exact, validity: "all bound states".into() })
}

/// ⟨p^α⟩ via the terminating ₅F₄ representation, valid on −D−2l < α < D+2l+2.
pub fn momentum_expectation(state: &HydrogenicState, alpha: f64) -> Result<Evaluation> {
    let validity = momentum_validity(state, alpha)?;
    let p = derive_params(state);
    let nu = p.nu;
    let kf = p.k as f64;
    let ln_pref = (1.0 - 2.0 * nu) * std::f64::consts::LN_2
        + alpha * state.z.ln()
        + 0.5 * std::f64::consts::PI.ln()
        - specfun::log_factorial(p.k)
        - alpha * p.eta.ln()
        + (kf + nu).ln()
        + specfun::log_gamma(kf + 2.0 * nu)?
        + specfun::log_gamma(nu + (alpha + 1.0) / 2.0)?
        + specfun::log_gamma(nu + (3.0 - alpha) / 2.0)?
        - 2.0 * specfun::log_gamma(nu + 0.5)?
        - specfun::log_gamma(nu + 1.0)?
        - specfun::log_gamma(nu + 1.5)?;
    let spec = HypSpec {
        numerator: vec![-kf, kf + 2.0 * nu, nu, nu + (alpha + 1.0) / 2.0, nu + (3.0 - alpha) / 2.0],
        denominator: vec![2.0 * nu, nu + 0.5, nu + 1.0, nu + 1.5],
        argument: 1.0,
    };
    let f = specfun::hyp_terminating_auto(&spec, 1e-12)?;
    let value = ln_pref.exp() * f;
    if !value.is_finite() {
        return Err(Error::numeric(format!("momentum moment overflowed at alpha = {alpha}")));
    }
    Ok(Evaluation { value, method: Method::Exact, validity })
}

use crate::scalar::half_gamma;

/// Exact-rational ⟨p^α⟩ for even integer α: the √π factors of the prefactor
/// cancel in pairs, so the value is rational whenever α is even.
pub fn momentum_expectation_rational(state: &HydrogenicState, alpha: i64) -> Result<Rational> {
    momentum_validity(state, alpha as f64)?;
    if alpha % 2 != 0 {
        return Err(Error::domain(format!(
            "odd momentum powers involve pi and admit no rational value, got alpha = {alpha}"
        )));
    }
    let p = derive_params(state);
    let eta = eta_rational(state);
    let z = z_rational(state)?;
    let two_nu: i64 = 2 * i64::from(state.l) + i64::from(state.d) - 1;
    let k = p.k as i64;
    let half = Rational::new(BigInt::from(1), BigInt::from(2));
    let nu_r = Rational::from(BigInt::from(two_nu)) * &half;

    let mut rat = Rational::one();
    let mut pi_half_pow: i32 = 1; // the explicit √π
    let mut mul_gamma = |twice: i64, power: i32| -> Result<()> {
        let (g, pi_pow) = half_gamma(twice)?;
        for _ in 0..power.abs() {
            if power > 0 {
                rat *= &g;
            } else {
                rat /= &g;
            }
        }
        pi_half_pow += pi_pow * power;
        Ok(())
    };
    mul_gamma(2 * k + 2 * two_nu, 1)?; // Γ(k+2ν)
    mul_gamma(two_nu + alpha + 1, 1)?; // Γ(ν+(α+1)/2)
    mul_gamma(two_nu + 3 - alpha, 1)?; // Γ(ν+(3−α)/2)
    mul_gamma(two_nu + 1, -2)?; // Γ(ν+1/2)²
    mul_gamma(two_nu + 2, -1)?; // Γ(ν+1)
    mul_gamma(two_nu + 3, -1)?; // Γ(ν+3/2)
    if pi_half_pow != 0 {
        return Err(Error::numeric("pi factors failed to cancel in rational momentum prefactor"));
    }
    let mut kfact = Rational::one();
    for j in 1..=k {
        kfact *= Rational::from(BigInt::from(j));
    }
    let pref = rat_powi(&Rational::from(BigInt::from(2)), 1 - two_nu)
        * rat_powi(&z, alpha)
        / kfact
        / rat_powi(&eta, alpha)
        * (Rational::from(BigInt::from(k)) + &nu_r)
        * rat;

    let num: Vec<Rational> = vec![
        Rational::from(BigInt::from(-k)),
        Rational::from(BigInt::from(k)) + Rational::from(BigInt::from(two_nu)),
        nu_r.clone(),
        &nu_r + Rational::from(BigInt::from(alpha + 1)) * &half,
        &nu_r + Rational::from(BigInt::from(3 - alpha)) * &half,
    ];
    let den: Vec<Rational> = vec![
        Rational::from(BigInt::from(two_nu)),
        &nu_r + &half,
        &nu_r + Rational::one(),
        &nu_r + Rational::new(BigInt::from(3), BigInt::from(2)),
    ];
    let f = specfun::hyp_terminating_rational(&num, &den, &Rational::one())?;
    Ok(pref * f)
}

/// The explicit even-power ⟨p^α⟩ expressions, α ∈ {−2, 2, 4, 6}.
pub fn momentum_closed_forms(state: &HydrogenicState, alpha: i64) -> Result<Evaluation> {
    let r = momentum_closed_form_rational(state, alpha)?;
    let validity = momentum_validity(state, alpha as f64)?;
    Ok(Evaluation { value: crate::rational_to_f64(&r), method: Method::ClosedForm, validity })
}

/// Rational form of `momentum_closed_forms`. The α = 6 entry is transcribed
/// verbatim in k, ν, L; the ₅F₄ route is authoritative if they ever disagree.
pub fn momentum_closed_form_rational(state: &HydrogenicState, alpha: i64) -> Result<Rational> {
    momentum_validity(state, alpha as f64)?;
    let p = derive_params(state);
    let eta = eta_rational(state);
    let l = grand_l_rational(state);
    let z = z_rational(state)?;
    let one = Rational::one();
    let two = Rational::from(BigInt::from(2));
    let two_l1 = &two * &l + &one;
    let sing = |d: &Rational, what: &str| -> Result<()> {
        if d == &Rational::from(BigInt::from(0)) {
            Err(Error::domain(format!("closed form singular: {what} vanishes at L = {l}")))
        } else {
            Ok(())
        }
    };
    match alpha {
        2 => Ok(&z * &z / (&eta * &eta)),
        -2 => {
            sing(&two_l1, "2L+1")?;
            let num = Rational::from(BigInt::from(8)) * &eta - Rational::from(BigInt::from(3)) * &two_l1;
            Ok(&eta * &eta / (&z * &z) * num / &two_l1)
        }
        4 => {
            sing(&two_l1, "2L+1")?;
            let num = Rational::from(BigInt::from(8)) * &eta - Rational::from(BigInt::from(3)) * &two_l1;
            Ok(rat_powi(&z, 4) / rat_powi(&eta, 4) * num / &two_l1)
        }
        6 => {
            let two_l3 = &two * &l + Rational::from(BigInt::from(3));
            let two_lm1 = &two * &l - &one;
            sing(&two_l1, "2L+1")?;
            sing(&two_l3, "2L+3")?;
            sing(&two_lm1, "2L-1")?;
            let k = Rational::from(BigInt::from(p.k as i64));
            let nu = &l + &one;
            let f1 = Rational::from(BigInt::from(4)) * &k + &two * &nu + &one;
            let f2 = Rational::from(BigInt::from(16)) * &k * &k
                + Rational::from(BigInt::from(40)) * &nu * &k
                - Rational::from(BigInt::from(4)) * &k
                + Rational::from(BigInt::from(4)) * &nu * &nu
                + Rational::from(BigInt::from(16)) * &nu
                + Rational::from(BigInt::from(15));
            Ok(rat_powi(&z, 6) / rat_powi(&eta, 6) * f1 * f2 / (two_l3 * two_l1 * two_lm1))
        }
        _ => Err(Error::domain(format!("no closed form for alpha = {alpha}; supported: -2, 2, 4, 6"))),
    }
}

/// Relative deviation between ⟨p^{−β}⟩ and (η/Z)^{2β+2}⟨p^{β+2}⟩, both sides
/// computed independently through the ₅F₄ route.
pub fn momentum_reflection(state: &HydrogenicState, beta: u32) -> Result<f64> {
    let p = derive_params(state);
    let lhs = momentum_expectation(state, -f64::from(beta))?.value;
    let rhs = (p.eta / state.z).powi(2 * beta as i32 + 2) * momentum_expectation(state, f64::from(beta) + 2.0)?.value;
    Ok((lhs - rhs).abs() / lhs.abs().max(rhs.abs()))
}

/// ⟨log p⟩ = −log η + (2l+D−2)(2n+D−3)/((2n+D−3)² − 1) − 1 + log Z.
pub fn log_momentum_expectation(state: &HydrogenicState) -> Result<Evaluation> {
    let p = derive_params(state);
    let m = f64::from(2 * state.n + state.d) - 3.0;
    if m * m == 1.0 {
        return Err(Error::validity(
            "logarithmic momentum moment degenerates at 2n+D-3 = 1 (n=1, D=2)",
        ));
    }
    let value = -p.eta.ln() + (f64::from(2 * state.l + state.d) - 2.0) * m / (m * m - 1.0) - 1.0
        + state.z.ln();
    Ok(Evaluation { value, method: Method::Exact, validity: "2n+D-3 != 1".into() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational_to_f64;

    fn st(n: u32, l: u32, d: u32, z: f64) -> HydrogenicState {
        HydrogenicState::new(n, l, d, z).unwrap()
    }

    #[test]
    fn state_validation() {
        assert!(HydrogenicState::new(0, 0, 3, 1.0).is_err());
        assert!(HydrogenicState::new(2, 2, 3, 1.0).is_err());
        assert!(HydrogenicState::new(1, 0, 1, 1.0).is_err());
        assert!(HydrogenicState::new(1, 0, 3, 0.0).is_err());
        assert!(HydrogenicState::new(1, 0, 2, 1.0).is_ok());
    }

    #[test]
    fn derived_params_examples() {
        let p = derive_params(&st(1, 0, 3, 1.0));
        assert_eq!((p.eta, p.grand_l, p.k, p.nu), (1.0, 0.0, 0, 1.0));
        let q = derive_params(&st(2, 0, 50, 1.0));
        assert_eq!((q.eta, q.grand_l, q.k, q.nu), (25.5, 23.5, 1, 24.5));
        let c = derive_params(&st(3, 2, 3, 1.0));
        assert_eq!((c.eta, c.grand_l, c.k, c.nu), (3.0, 2.0, 0, 3.0));
        assert!((derive_params(&st(2, 0, 50, 1.0)).length_scale - 12.75).abs() < 1e-15);
    }

    #[test]
    fn energies() {
        assert_eq!(energy(&st(1, 0, 3, 1.0)), -0.5);
        assert_eq!(energy(&st(2, 0, 3, 1.0)), -0.125);
        assert_eq!(energy(&st(1, 0, 5, 1.0)), -0.125);
    }

    #[test]
    fn position_density_point_and_shape() {
        // (1,0,3,1): ρ = 4 e^{−2r}
        let v = radial_density_position(&st(1, 0, 3, 1.0), 1.0).unwrap();
        assert!((v - 0.541341132946450768).abs() < 1e-13);
        let w = radial_density_position(&st(1, 0, 3, 1.0), 0.25).unwrap();
        assert!((w - 4.0 * (-0.5f64).exp()).abs() < 1e-13);
        assert!(radial_density_position(&st(1, 0, 3, 1.0), 0.0).is_err());
        // survives a large-D regime that underflows raw gamma products
        let big = radial_density_position(&st(2, 1, 301, 1.0), 140.0).unwrap();
        assert!(big.is_finite() && big >= 0.0);
    }

    #[test]
    fn momentum_density_ground_state() {
        // (1,0,3,1): M² = 32/(π(1+p²)⁴), so that ∫ p² M² dp = (32/π)(π/32) = 1
        let v = radial_density_momentum(&st(1, 0, 3, 1.0), 1.0).unwrap();
        let expected = 32.0 / (std::f64::consts::PI * 16.0);
        assert!((v - expected).abs() < 1e-14);
        // far past the p ~ Z/eta peak the huge normalization underflows cleanly
        let big = radial_density_momentum(&st(3, 0, 301, 1.0), 1.0).unwrap();
        assert!(big.is_finite() && big >= 0.0);
    }

    #[test]
    fn position_expectation_examples() {
        assert!((position_expectation(&st(4, 2, 17, 3.0), 0.0).unwrap().value - 1.0).abs() < 1e-13);
        let v = position_expectation(&st(2, 0, 50, 1.0), 1.0).unwrap();
        assert!((v.value - 687.5).abs() < 1e-9 * 687.5);
        let g = position_expectation(&st(1, 0, 3, 1.0), 1.0).unwrap();
        assert!((g.value - 1.5).abs() < 1e-12);
        // ground state identity ((D−1)/4Z)^α Γ(D+α)/Γ(D) at D = 7, α = 2.5
        let d = 7.0f64;
        let alpha = 2.5f64;
        let reference = ((d - 1.0) / 4.0).powf(alpha)
            * (specfun::log_gamma(d + alpha).unwrap() - specfun::log_gamma(d).unwrap()).exp();
        let got = position_expectation(&st(1, 0, 7, 1.0), alpha).unwrap().value;
        assert!((got - reference).abs() < 1e-11 * reference);
        assert!(position_expectation(&st(1, 0, 3, 1.0), -3.0).is_err());
    }

    #[test]
    fn position_rational_matches_float() {
        let s = st(2, 0, 50, 1.0);
        let r = position_expectation_rational(&s, 1).unwrap();
        assert_eq!(r, Rational::new(BigInt::from(1375), BigInt::from(2)));
        for alpha in [-4i64, -3, -2, -1, 1, 2, 3, 5] {
            let s2 = st(3, 1, 9, 2.0);
            let rf = rational_to_f64(&position_expectation_rational(&s2, alpha).unwrap());
            let ff = position_expectation(&s2, alpha as f64).unwrap().value;
            assert!((rf - ff).abs() <= 1e-12 * rf.abs(), "alpha {alpha}: {rf} vs {ff}");
        }
    }

    #[test]
    fn closed_forms_match_hypergeometric_route() {
        for &(n, l, d, z) in &[(1u32, 0u32, 3u32, 1.0f64), (2, 0, 50, 1.0), (3, 1, 9, 2.0), (4, 3, 12, 0.5), (2, 1, 2, 1.0)] {
            let s = st(n, l, d, z);
            for alpha in [-4i64, -3, -2, -1, 1, 2] {
                let cf = match position_closed_forms(&s, alpha) {
                    Ok(e) => e,
                    Err(_) => continue, // validity or singular denominator
                };
                let hy = position_expectation(&s, alpha as f64).unwrap();
                assert!(
                    (cf.value - hy.value).abs() <= 1e-12 * cf.value.abs(),
                    "({n},{l},{d},{z}) alpha {alpha}: {} vs {}",
                    cf.value,
                    hy.value
                );
            }
        }
        let r2 = position_closed_forms(&st(1, 0, 3, 1.0), 2).unwrap();
        assert!((r2.value - 3.0).abs() < 1e-13);
        let rm2 = position_closed_forms(&st(1, 0, 3, 1.0), -2).unwrap();
        assert!((rm2.value - 2.0).abs() < 1e-13);
        let rm1 = position_closed_forms(&st(2, 0, 50, 1.0), -1).unwrap();
        assert!((rm1.value - 0.00153787004998077662).abs() < 1e-12 * rm1.value);
        // singular denominators rejected
        assert!(position_closed_forms(&st(1, 0, 3, 1.0), -3).is_err()); // validity: L = 0 means alpha <= -(D+2l)
        assert!(position_closed_form_rational(&st(2, 0, 4, 1.0), -4).is_err()); // alpha = -(D+2l)
    }

    #[test]
    fn log_position_values() {
        let v = log_position_expectation(&st(1, 0, 3, 1.0)).unwrap().value;
        assert!((v - 0.22963715453852183).abs() < 1e-12);
        // ground-state form ψ(D) + log(D−1) − 2 log 2 − log Z across D
        for d in [2u32, 3, 7, 40, 401] {
            let got = log_position_expectation(&st(1, 0, d, 1.0)).unwrap().value;
            let reference = specfun::digamma(f64::from(d)).unwrap() + (f64::from(d) - 1.0).ln()
                - 2.0 * std::f64::consts::LN_2;
            assert!((got - reference).abs() < 1e-12, "D = {d}");
        }
        // Z = 2 shifts by −ln 2
        let z2 = log_position_expectation(&st(1, 0, 3, 2.0)).unwrap().value;
        assert!((z2 - (v - std::f64::consts::LN_2)).abs() < 1e-14);
        let deep = log_position_expectation(&st(3, 1, 7, 2.0)).unwrap().value;
        assert!((deep - 2.66378502926981975).abs() < 1e-12);
    }

    #[test]
    fn momentum_expectation_examples() {
        assert!((momentum_expectation(&st(3, 1, 9, 1.0), 0.0).unwrap().value - 1.0).abs() < 1e-13);
        let a2 = momentum_expectation(&st(2, 0, 50, 1.0), 2.0).unwrap().value;
        assert!((a2 - 0.00153787004998077662).abs() < 1e-11 * a2);
        let a1 = momentum_expectation(&st(2, 0, 50, 1.0), 1.0).unwrap().value;
        assert!((a1 - 0.0380788651333145478).abs() < 1e-11 * a1);
        // ground-state identity (2Z/(D−1))^α 2Γ((D−α)/2+1)Γ((D+α)/2)/(D Γ²(D/2))
        let (d, alpha) = (9.0f64, 1.7f64);
        let lg = |x: f64| specfun::log_gamma(x).unwrap();
        let reference = (2.0 / (d - 1.0)).powf(alpha)
            * (lg((d - alpha) / 2.0 + 1.0) + lg((d + alpha) / 2.0) - 2.0 * lg(d / 2.0)).exp()
            * 2.0
            / d;
        let got = momentum_expectation(&st(1, 0, 9, 1.0), alpha).unwrap().value;
        assert!((got - reference).abs() < 1e-11 * reference);
        assert!(momentum_expectation(&st(1, 0, 3, 1.0), 5.0).is_err());
        assert!(momentum_expectation(&st(1, 0, 3, 1.0), -3.0).is_err());
    }

    #[test]
    fn momentum_closed_forms_and_reflection() {
        assert_eq!(
            momentum_closed_form_rational(&st(1, 0, 3, 1.0), -2).unwrap(),
            Rational::from(BigInt::from(5))
        );
        assert_eq!(
            momentum_closed_form_rational(&st(1, 0, 3, 1.0), 4).unwrap(),
            Rational::from(BigInt::from(5))
        );
        // ⟨p²⟩ = −2E
        for &(n, l, d, z) in &[(1u32, 0u32, 3u32, 1.0f64), (3, 1, 9, 2.0), (2, 1, 2, 0.7)] {
            let s = st(n, l, d, z);
            let p2 = momentum_closed_forms(&s, 2).unwrap().value;
            assert!((p2 + 2.0 * energy(&s)).abs() < 1e-15 * p2);
        }
        // verbatim ⟨p⁶⟩ against the hypergeometric route
        let s = st(3, 1, 9, 1.0);
        let p6 = momentum_closed_forms(&s, 6).unwrap().value;
        assert!((p6 - 0.000188818668756940362).abs() < 1e-12 * p6);
        let hy = momentum_expectation(&s, 6.0).unwrap().value;
        assert!((p6 - hy).abs() < 1e-11 * p6);
        // rational route agrees with float route on even powers
        let s2 = st(4, 1, 6, 2.0);
        for alpha in [-2i64, 2, 4, 6] {
            let r = rational_to_f64(&momentum_expectation_rational(&s2, alpha).unwrap());
            let f = momentum_expectation(&s2, alpha as f64).unwrap().value;
            assert!((r - f).abs() < 1e-11 * r.abs(), "alpha {alpha}");
        }
        assert!(momentum_expectation_rational(&s2, 3).is_err());
        // ⟨p⁶⟩ singular at 2L = 1
        assert!(momentum_closed_forms(&st(2, 0, 4, 1.0), 6).is_err());
        for beta in 0..=3u32 {
            let dev = momentum_reflection(&st(3, 2, 6, 2.0), beta).unwrap();
            assert!(dev < 1e-11, "beta {beta}: {dev}");
        }
    }

    #[test]
    fn log_momentum_values() {
        let v = log_momentum_expectation(&st(1, 0, 3, 1.0)).unwrap().value;
        assert!((v + 1.0 / 3.0).abs() < 1e-14);
        let w = log_momentum_expectation(&st(2, 0, 3, 1.0)).unwrap().value;
        assert!((w + 1.42648051389327864).abs() < 1e-12);
        let deep = log_momentum_expectation(&st(3, 1, 7, 2.0)).unwrap().value;
        assert!((deep + 1.20922002480344799).abs() < 1e-12);
        // ground-state identity −log(D−1) + log 2 − 1/D + log Z
        for d in [3u32, 5, 12, 100] {
            let got = log_momentum_expectation(&st(1, 0, d, 1.0)).unwrap().value;
            let reference = -(f64::from(d) - 1.0).ln() + std::f64::consts::LN_2 - 1.0 / f64::from(d);
            assert!((got - reference).abs() < 1e-13, "D = {d}");
        }
        assert!(log_momentum_expectation(&st(1, 0, 2, 1.0)).is_err());
    }

    #[test]
    fn z_scaling() {
        let base_r = position_expectation(&st(3, 1, 9, 1.0), 1.6).unwrap().value;
        let scaled_r = position_expectation(&st(3, 1, 9, 4.0), 1.6).unwrap().value;
        assert!((scaled_r - base_r * 4.0f64.powf(-1.6)).abs() < 1e-13 * scaled_r.abs());
        let base_p = momentum_expectation(&st(3, 1, 9, 1.0), 1.6).unwrap().value;
        let scaled_p = momentum_expectation(&st(3, 1, 9, 4.0), 1.6).unwrap().value;
        assert!((scaled_p - base_p * 4.0f64.powf(1.6)).abs() < 1e-13 * scaled_p.abs());
    }

    #[test]
    fn large_n_cancellation_is_contained() {
        // k = 24: the float ₅F₄ loses ~17 digits and must escalate internally
        let s = st(25, 0, 3, 1.0);
        let v = momentum_expectation(&s, 1.0).unwrap().value;
        assert!(v.is_finite() && v > 0.0);
        // reflection still holds after escalation
        let dev = momentum_reflection(&s, 1).unwrap();
        assert!(dev < 1e-9, "deviation {dev}");
    }
}
