//! Shannon, Rényi and Tsallis entropies of s states (l = 0) in both
//! spaces, with the moment-based upper/lower bound family and its large-D
//! asymptotic term ladder.
//!
//! All densities are evaluated pointwise in log space: the radial factor
//! rho^q underflows for q >= 2 well before D = 30, so every integrand here
//! assembles its full exponent before a single exp. Entropies are computed
//! only for l = 0, where the angular part contributes exactly log(surface
//! area); the bound operations still work for any l.

use crate::error::{Error, Result};
use crate::hydrogenic::{momentum_expectation, position_expectation, HydrogenicState, Space};
use crate::quad::{integrate_segments, integrate_to_inf};
use crate::specfun::{
    gegenbauer, laguerre, ln_surface_area, log_beta_signed, log_factorial, log_gamma,
};
use std::f64::consts::{LN_2, PI};

const ENT_REL_TOL: f64 = 1e-11;
const ENT_NODE_CEILING: usize = 40_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EntropyKind {
    Shannon,
    Renyi,
    Tsallis,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EntropyValue {
    pub kind: EntropyKind,
    /// Order parameter; carried but ignored for Shannon.
    pub q: f64,
    pub space: Space,
    pub value: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MomentSign {
    Plus,
    Minus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Upper,
    Lower,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundInputs {
    pub q: f64,
    pub alpha: f64,
    pub moment_sign: MomentSign,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundReport {
    /// Absent for l > 0 states, where only the bound side is computable.
    pub entropy: Option<EntropyValue>,
    pub bound_value: f64,
    pub direction: Direction,
    pub inputs: BoundInputs,
    /// None when the entropy slot is absent.
    pub satisfied: Option<bool>,
}

fn require_s_state(state: &HydrogenicState) -> Result<()> {
    if state.l != 0 {
        return Err(Error::validity(
            "entropy quadrature is implemented for l = 0 only; bounds remain available",
        ));
    }
    Ok(())
}

/// Position-space context for l = 0: u = r/lambda, u-pdf
/// w(u) = e^{-u} u^{beta+1} L_k^{(beta)}(u)^2 / A with beta = D-2 and
/// A = Gamma(k+beta+1)(2k+beta+1)/k!; radial density rho(r) = c0 e^{-u} L^2.
struct PosCtx {
    k: usize,
    beta: f64,
    eta: f64,
    ln_a_norm: f64,
    ln_c0: f64,
}

fn pos_ctx(state: &HydrogenicState) -> Result<PosCtx> {
    let d = f64::from(state.d);
    let k = (state.n - 1) as usize;
    let beta = d - 2.0;
    let eta = f64::from(state.n) + (d - 3.0) / 2.0;
    let ln_lambda = (eta / (2.0 * state.z)).ln();
    let ln_kfact = log_factorial(k);
    let ln_gkb = log_gamma(k as f64 + beta + 1.0)?;
    let ln_a_norm = ln_gkb + (2.0 * k as f64 + beta + 1.0).ln() - ln_kfact;
    let ln_c0 = -d * ln_lambda + ln_kfact - (2.0 * eta).ln() - ln_gkb;
    Ok(PosCtx { k, beta, eta, ln_a_norm, ln_c0 })
}

fn pos_points(ctx: &PosCtx) -> [f64; 5] {
    let e = ctx.eta;
    [0.0, (ctx.beta + 1.0).min(2.0 * e - 0.5), 2.0 * e, 4.0 * e, 8.0 * e]
}

fn run_radial(
    f: impl Fn(f64) -> f64 + Copy,
    points: &[f64],
    tail_from: Option<f64>,
    what: &str,
) -> Result<f64> {
    let finite = integrate_segments(f, points, ENT_REL_TOL, 1e-300, ENT_NODE_CEILING)?;
    if !finite.converged {
        return Err(Error::numeric(format!("{what} quadrature stalled")));
    }
    let Some(a) = tail_from else {
        return Ok(finite.value);
    };
    let tail = integrate_to_inf(
        f,
        a,
        ENT_REL_TOL,
        finite.value.abs().max(f64::MIN_POSITIVE) * ENT_REL_TOL,
        ENT_NODE_CEILING / 2,
    )?;
    if !tail.converged {
        return Err(Error::numeric(format!("{what} quadrature stalled")));
    }
    Ok(finite.value + tail.value)
}

/// Radial Shannon entropy plus the angular log-volume term.
fn shannon_position(state: &HydrogenicState) -> Result<f64> {
    require_s_state(state)?;
    let ctx = pos_ctx(state)?;
    let (k, beta, ln_a) = (ctx.k, ctx.beta, ctx.ln_a_norm);
    // S_rad = -ln c0 + <u>_w - <ln L^2>_w; the x^2 ln x^2 form stays finite
    // at the polynomial zeros.
    let f = move |u: f64| -> f64 {
        if u <= 0.0 {
            return 0.0;
        }
        let phi = ((beta + 1.0) * u.ln() - u - ln_a).exp();
        let lk = laguerre(k, beta, u);
        let l2 = lk * lk;
        let log_term = if l2 > 0.0 { l2 * l2.ln() } else { 0.0 };
        phi * (l2 * u - log_term)
    };
    let moments = run_radial(f, &pos_points(&ctx), Some(8.0 * ctx.eta), "position entropy")?;
    Ok(-ctx.ln_c0 + moments + ln_surface_area(state.d)?)
}

/// log W_q in position space, assembled fully in log space.
fn ln_w_position(state: &HydrogenicState, q: f64) -> Result<f64> {
    require_s_state(state)?;
    let ctx = pos_ctx(state)?;
    let (k, beta, ln_a, ln_c0) = (ctx.k, ctx.beta, ctx.ln_a_norm, ctx.ln_c0);
    // Shift by m ~ ln rho at the weight's bulk so the integrand is O(1).
    let m = ln_c0 - (beta + 1.0 + 2.0 * k as f64);
    let f = move |u: f64| -> f64 {
        if u <= 0.0 {
            return 0.0;
        }
        let lk = laguerre(k, beta, u);
        let l2 = lk * lk;
        if l2 == 0.0 {
            return 0.0;
        }
        ((beta + 1.0) * u.ln() - q * u + q * l2.ln() + (q - 1.0) * (ln_c0 - m) - ln_a).exp()
    };
    let integral = run_radial(f, &pos_points(&ctx), Some(8.0 * ctx.eta), "position entropic moment")?;
    Ok((1.0 - q) * ln_surface_area(state.d)? + (q - 1.0) * m + integral.ln())
}

/// Momentum-space context for l = 0. In the t = cos(theta) variable the
/// radial pdf is sin^{2 nu}(theta) (1 + t) C_k^{(nu)}(t)^2 / h_k and the
/// density magnitude is ln M^2 = ln K^2 + (D+1) ln((1+t)/2) + ln C^2.
struct MomCtx {
    k: usize,
    nu: f64,
    eta: f64,
    ln_k2: f64,
    ln_hk: f64,
    d: f64,
}

fn mom_ctx(state: &HydrogenicState) -> Result<MomCtx> {
    let d = f64::from(state.d);
    let k = (state.n - 1) as usize;
    let grand_l = (d - 3.0) / 2.0;
    let nu = grand_l + 1.0;
    let eta = f64::from(state.n) + (d - 3.0) / 2.0;
    let ln_k2 = -d * state.z.ln()
        + (4.0 * grand_l + 6.0) * LN_2
        + log_factorial(k)
        + 2.0 * log_gamma(grand_l + 1.0)?
        + (d + 1.0) * eta.ln()
        - (2.0 * PI).ln()
        - log_gamma(k as f64 + 2.0 * nu)?;
    let ln_hk = PI.ln() + (1.0 - 2.0 * nu) * LN_2 + log_gamma(k as f64 + 2.0 * nu)?
        - log_factorial(k)
        - (k as f64 + nu).ln()
        - 2.0 * log_gamma(nu)?;
    Ok(MomCtx { k, nu, eta, ln_k2, ln_hk, d })
}

const MOM_THETA_POINTS: [f64; 5] = [0.0, 0.25 * PI, 0.5 * PI, 0.75 * PI, PI];

fn shannon_momentum_t_route(state: &HydrogenicState) -> Result<f64> {
    let ctx = mom_ctx(state)?;
    let (k, nu, d) = (ctx.k, ctx.nu, ctx.d);
    let (ln_k2, ln_hk) = (ctx.ln_k2, ctx.ln_hk);
    // S_rad = -<ln M^2> under the theta-pdf; 1 + t = 2 cos^2(theta/2).
    let f = move |theta: f64| -> f64 {
        let s = theta.sin();
        if s <= 0.0 {
            return 0.0;
        }
        let half_cos = (theta / 2.0).cos();
        let ln_one_plus_t = LN_2 + 2.0 * half_cos.ln();
        let base = (2.0 * nu * s.ln() + ln_one_plus_t - ln_hk).exp();
        let ck = gegenbauer(k, nu, theta.cos()).unwrap_or(f64::NAN);
        let c2 = ck * ck;
        let smooth = ln_k2 + (d + 1.0) * 2.0 * half_cos.ln();
        let log_term = if c2 > 0.0 { c2 * c2.ln() } else { 0.0 };
        -base * (c2 * smooth + log_term)
    };
    let s_rad = run_radial(f, &MOM_THETA_POINTS, None, "momentum entropy")?;
    Ok(s_rad + ln_surface_area(state.d)?)
}

fn ln_w_momentum_t_route(state: &HydrogenicState, q: f64) -> Result<f64> {
    let ctx = mom_ctx(state)?;
    let (k, nu, d) = (ctx.k, ctx.nu, ctx.d);
    let (ln_k2, ln_hk) = (ctx.ln_k2, ctx.ln_hk);
    let m = ln_k2;
    let f = move |theta: f64| -> f64 {
        let s = theta.sin();
        if s <= 0.0 {
            return 0.0;
        }
        let half_cos = (theta / 2.0).cos();
        let ck = gegenbauer(k, nu, theta.cos()).unwrap_or(f64::NAN);
        let c2 = ck * ck;
        if !(c2 > 0.0) {
            return 0.0;
        }
        (2.0 * nu * s.ln() + LN_2 + 2.0 * half_cos.ln() - ln_hk
            + q * c2.ln()
            + (q - 1.0) * (d + 1.0) * 2.0 * half_cos.ln())
        .exp()
    };
    let integral = run_radial(f, &MOM_THETA_POINTS, None, "momentum entropic moment")?;
    Ok((1.0 - q) * ln_surface_area(state.d)? + (q - 1.0) * m + integral.ln())
}

const MOM_X_POINTS: [f64; 5] = [0.0, 0.25, 1.0, 4.0, 8.0];

/// Direct radial grid in x = eta*p/Z; adequate below D ~ 30 where the
/// density is not yet sharply concentrated.
fn shannon_momentum_p_route(state: &HydrogenicState) -> Result<f64> {
    let ctx = mom_ctx(state)?;
    let (k, nu, d) = (ctx.k, ctx.nu, ctx.d);
    let ln_k2 = ctx.ln_k2;
    let ln_scale = d * (state.z.ln() - ctx.eta.ln());
    let f = move |x: f64| -> f64 {
        if x <= 0.0 {
            return 0.0;
        }
        let x2 = x * x;
        let t = (1.0 - x2) / (1.0 + x2);
        let ln_base = ln_scale + ln_k2 + (d - 1.0) * x.ln() - (d + 1.0) * (1.0 + x2).ln();
        let base = ln_base.exp();
        let ck = gegenbauer(k, nu, t).unwrap_or(f64::NAN);
        let c2 = ck * ck;
        let smooth = ln_k2 - (d + 1.0) * (1.0 + x2).ln();
        let log_term = if c2 > 0.0 { c2 * c2.ln() } else { 0.0 };
        -base * (c2 * smooth + log_term)
    };
    let s_rad = run_radial(f, &MOM_X_POINTS, Some(8.0), "momentum entropy")?;
    Ok(s_rad + ln_surface_area(state.d)?)
}

fn ln_w_momentum_p_route(state: &HydrogenicState, q: f64) -> Result<f64> {
    let ctx = mom_ctx(state)?;
    let (k, nu, d) = (ctx.k, ctx.nu, ctx.d);
    let ln_k2 = ctx.ln_k2;
    let ln_scale = d * (state.z.ln() - ctx.eta.ln());
    let m = ln_k2;
    let f = move |x: f64| -> f64 {
        if x <= 0.0 {
            return 0.0;
        }
        let x2 = x * x;
        let t = (1.0 - x2) / (1.0 + x2);
        let ck = gegenbauer(k, nu, t).unwrap_or(f64::NAN);
        let c2 = ck * ck;
        if !(c2 > 0.0) {
            return 0.0;
        }
        (ln_scale + ln_k2 + (d - 1.0) * x.ln() - (d + 1.0) * q * (1.0 + x2).ln() + q * c2.ln())
            .exp()
    };
    let integral = run_radial(f, &MOM_X_POINTS, Some(8.0), "momentum entropic moment")?;
    Ok((1.0 - q) * ln_surface_area(state.d)? + (q - 1.0) * m + integral.ln())
}

/// The p-space density concentrates near its classical scale as D grows;
/// past D = 30 the Gegenbauer-weight variable keeps the grid conditioned.
const T_ROUTE_MIN_D: u32 = 30;

fn shannon_momentum(state: &HydrogenicState) -> Result<f64> {
    require_s_state(state)?;
    if state.d >= T_ROUTE_MIN_D {
        shannon_momentum_t_route(state)
    } else {
        shannon_momentum_p_route(state)
    }
}

fn ln_w_momentum(state: &HydrogenicState, q: f64) -> Result<f64> {
    require_s_state(state)?;
    if state.d >= T_ROUTE_MIN_D {
        ln_w_momentum_t_route(state, q)
    } else {
        ln_w_momentum_p_route(state, q)
    }
}

/// log W_q (the entropic moment) for an l = 0 state.
pub fn ln_entropic_moment(state: &HydrogenicState, q: f64, space: Space) -> Result<f64> {
    if !(q > 0.0) {
        return Err(Error::domain(format!("entropic moment needs q > 0, got {q}")));
    }
    match space {
        Space::Position => ln_w_position(state, q),
        Space::Momentum => ln_w_momentum(state, q),
    }
}

/// Shannon/Rényi/Tsallis entropy of an l = 0 state by adaptive quadrature.
pub fn entropy_quadrature(
    state: &HydrogenicState,
    kind: EntropyKind,
    q: f64,
    space: Space,
) -> Result<EntropyValue> {
    let value = match kind {
        EntropyKind::Shannon => match space {
            Space::Position => shannon_position(state)?,
            Space::Momentum => shannon_momentum(state)?,
        },
        EntropyKind::Renyi | EntropyKind::Tsallis => {
            if !(q > 0.0) || q == 1.0 {
                return Err(Error::domain(format!(
                    "Renyi/Tsallis order must satisfy q > 0, q != 1, got {q}"
                )));
            }
            let ln_w = ln_entropic_moment(state, q, space)?;
            match kind {
                EntropyKind::Renyi => ln_w / (1.0 - q),
                _ => (1.0 - ln_w.exp()) / (q - 1.0),
            }
        }
    };
    Ok(EntropyValue { kind, q, space, value })
}

fn moment_for(state: &HydrogenicState, order: f64, space: Space) -> Result<f64> {
    match space {
        Space::Position => Ok(position_expectation(state, order)?.value),
        Space::Momentum => Ok(momentum_expectation(state, order)?.value),
    }
}

/// A0(alpha, D) = D/alpha + log[(2 pi^{D/2}/alpha)(alpha/D)^{D/alpha}
/// Gamma(D/alpha)/Gamma(D/2)].
pub fn a0_constant(alpha: f64, d: u32) -> Result<f64> {
    if !(alpha > 0.0) {
        return Err(Error::domain(format!("A0 requires alpha > 0, got {alpha}")));
    }
    let df = f64::from(d);
    Ok(df / alpha + LN_2 + df / 2.0 * PI.ln() - alpha.ln()
        + df / alpha * (alpha / df).ln()
        + log_gamma(df / alpha)?
        - log_gamma(df / 2.0)?)
}

fn require_q_above_one(q: f64) -> Result<()> {
    if !(q > 1.0) {
        return Err(Error::domain(format!(
            "the L-function bounds take a negative-base power for q <= 1 \
             and leave the real domain; got q = {q}"
        )));
    }
    Ok(())
}

/// log L1(q, alpha, D), the positive-moment bound constant.
pub fn ln_l1(q: f64, alpha: f64, d: u32) -> Result<f64> {
    require_q_above_one(q)?;
    if !(alpha > 0.0) {
        return Err(Error::domain("L1 requires alpha > 0"));
    }
    let df = f64::from(d);
    let denom = df * (q - 1.0) + alpha * q;
    let beta = log_beta_signed(q / (q - 1.0), df / alpha)?;
    if beta.sign <= 0 {
        return Err(Error::numeric("L1 beta factor lost positivity"));
    }
    Ok((q * alpha).ln() - denom.ln()
        + (q - 1.0)
            * (alpha.ln() + log_gamma(df / 2.0)?
                + df / alpha * ((df * (q - 1.0)).ln() - denom.ln())
                - LN_2
                - df / 2.0 * PI.ln()
                - beta.log_abs))
}

/// log L2(q, alpha, D), the negative-moment bound constant; enforces the
/// printed existence condition alpha < D(q-1)/q.
pub fn ln_l2(q: f64, alpha: f64, d: u32) -> Result<f64> {
    require_q_above_one(q)?;
    if !(alpha > 0.0) {
        return Err(Error::domain("L2 requires alpha > 0"));
    }
    let df = f64::from(d);
    if !(alpha < df * (q - 1.0) / q) {
        return Err(Error::validity(format!(
            "negative-moment bound needs alpha < D(q-1)/q = {}, got alpha = {alpha}",
            df * (q - 1.0) / q
        )));
    }
    let denom = df * (q - 1.0) - alpha * q;
    let beta = log_beta_signed(df / alpha - 1.0 / (q - 1.0), q / (q - 1.0))?;
    if beta.sign <= 0 {
        return Err(Error::numeric("L2 beta factor lost positivity"));
    }
    Ok((q * alpha).ln() - denom.ln()
        + (q - 1.0)
            * (alpha.ln() + log_gamma(df / 2.0)?
                + df / alpha * (denom.ln() - (df * (q - 1.0)).ln())
                - LN_2
                - df / 2.0 * PI.ln()
                - beta.log_abs))
}

/// S <= A0(alpha, D) + (D/alpha) log<r^alpha> (or the p-space moment).
pub fn bound_shannon_upper(
    state: &HydrogenicState,
    alpha: f64,
    space: Space,
) -> Result<BoundReport> {
    let moment = moment_for(state, alpha, space)?;
    let bound_value = a0_constant(alpha, state.d)? + f64::from(state.d) / alpha * moment.ln();
    let entropy = match entropy_quadrature(state, EntropyKind::Shannon, 1.0, space) {
        Ok(e) => Some(e),
        Err(Error::Validity(_)) => None,
        Err(e) => return Err(e),
    };
    let satisfied = entropy.map(|e| e.value <= bound_value + 1e-9);
    Ok(BoundReport {
        entropy,
        bound_value,
        direction: Direction::Upper,
        inputs: BoundInputs { q: 1.0, alpha, moment_sign: MomentSign::Plus },
        satisfied,
    })
}

fn ln_variational_rhs(
    state: &HydrogenicState,
    q: f64,
    alpha: u32,
    sign: MomentSign,
    space: Space,
) -> Result<(f64, f64)> {
    let af = f64::from(alpha);
    let (ln_l, order) = match sign {
        MomentSign::Plus => (ln_l1(q, af, state.d)?, af),
        MomentSign::Minus => (ln_l2(q, af, state.d)?, -af),
    };
    let moment = moment_for(state, order, space)?;
    // RHS of the W_q bound: L_i * <r^{+-alpha}>^{-+D(q-1)/alpha}. Dividing by
    // the signed order keeps both routes dilation-covariant.
    Ok((ln_l - f64::from(state.d) / order * (q - 1.0) * moment.ln(), moment))
}

/// R_q <= (1/(1-q)) log{ L_i <r^{+-alpha}>^{-D(q-1)/alpha} }.
pub fn bound_renyi_upper(
    state: &HydrogenicState,
    q: f64,
    alpha: u32,
    sign: MomentSign,
    space: Space,
) -> Result<BoundReport> {
    let (ln_rhs, _) = ln_variational_rhs(state, q, alpha, sign, space)?;
    let bound_value = ln_rhs / (1.0 - q);
    let entropy = match entropy_quadrature(state, EntropyKind::Renyi, q, space) {
        Ok(e) => Some(e),
        Err(Error::Validity(_)) => None,
        Err(e) => return Err(e),
    };
    let satisfied = entropy.map(|e| e.value <= bound_value + 1e-9);
    Ok(BoundReport {
        entropy,
        bound_value,
        direction: Direction::Upper,
        inputs: BoundInputs { q, alpha: f64::from(alpha), moment_sign: sign },
        satisfied,
    })
}

/// W_q = 1 + (1-q) T_q >= L_i <r^{+-alpha}>^{-D(q-1)/alpha}. The printed
/// negative-moment condition has a sign that makes it unsatisfiable for
/// q > 1; the existence condition actually forced by L2's beta argument,
/// alpha < D(q-1)/q, is applied for both signs.
pub fn bound_tsallis_lower(
    state: &HydrogenicState,
    q: f64,
    alpha: u32,
    sign: MomentSign,
    space: Space,
) -> Result<BoundReport> {
    let (ln_rhs, _) = ln_variational_rhs(state, q, alpha, sign, space)?;
    let bound_value = ln_rhs.exp();
    let (entropy, satisfied) = match ln_entropic_moment(state, q, space) {
        Ok(ln_w) => {
            let t = (1.0 - ln_w.exp()) / (q - 1.0);
            (
                Some(EntropyValue { kind: EntropyKind::Tsallis, q, space, value: t }),
                Some(ln_w.exp() >= bound_value - 1e-9),
            )
        }
        Err(Error::Validity(_)) => (None, None),
        Err(e) => return Err(e),
    };
    Ok(BoundReport {
        entropy,
        bound_value,
        direction: Direction::Lower,
        inputs: BoundInputs { q, alpha: f64::from(alpha), moment_sign: sign },
        satisfied,
    })
}

/// The printed large-D term ladder for the entropic bounds. The naming
/// skips an A4 on purpose, mirroring the source ladder.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AsymptoticBoundTerms {
    pub a0_asymptotic: f64,
    pub a1: f64,
    pub a2: f64,
    pub a3: f64,
    pub ln_a5: f64,
    /// A0-asymptotic + moment-asymptotic route (consistent assembly).
    pub shannon_upper_assembled: f64,
    /// The one-line printed form, whose leading coefficient (3D log D)
    /// disagrees with its own assembly; kept verbatim.
    pub shannon_upper_printed: f64,
    pub renyi_upper_assembled: f64,
    pub renyi_upper_printed: f64,
    /// ln of A5 * exp(A1)^{-(D/alpha)(q-1)}, the assembly consistent with
    /// A1 being a logarithm.
    pub tsallis_rhs_ln_assembled: f64,
    /// ln of A5 * A1^{-(D/alpha)(q-1)} exactly as printed (A1 as a base);
    /// None when A1 <= 0 makes the power undefined.
    pub tsallis_rhs_ln_printed: Option<f64>,
}

pub fn asymptotic_bound_terms(
    state: &HydrogenicState,
    alpha: f64,
    q: f64,
) -> Result<AsymptoticBoundTerms> {
    if !(alpha > 0.0) {
        return Err(Error::domain("asymptotic bound terms require alpha > 0"));
    }
    require_q_above_one(q)?;
    let d = f64::from(state.d);
    let l = f64::from(state.l);
    let kf = f64::from(state.n - state.l - 1);
    let z = state.z;
    let ln_pi_e_eighth = 1.0 + PI.ln() - 3.0 * LN_2;

    let a0_asymptotic = -(d - 1.0) / 2.0 * (d / 2.0).ln() + d / 2.0 * (1.0 + PI.ln())
        - 0.5 * (d / alpha).ln()
        + (2.0 / alpha).ln();
    let a1 = ((1.0 + (alpha + 1.0) * (alpha + 4.0 * l - 2.0) / (2.0 * d))
        * (1.0 + (alpha + 1.0) * (alpha + 2.0) * kf / d))
        .ln();
    let a2 = 3.0 * d * d.ln() + d / 2.0 * ln_pi_e_eighth + 0.5 * (alpha / 2.0).ln();
    let qq = q / (q - 1.0);
    let a3 = qq.ln() + (1.0 - q) * log_gamma(qq)? + (1.0 - q) / 2.0 * (2.0 / PI).ln();
    let ln_a5 = qq.ln()
        + (1.0 - q) / 2.0
            * ((3.0 * d - 1.0) * d.ln() - (3.0 * d + 2.0) * LN_2 - (d + 1.0) * PI.ln()
                - 2.0 * d * z.ln())
        + (1.0 - q) * d / 2.0
        - q * alpha.ln()
        + (1.0 - q) * log_gamma(qq)?;

    let moment_tail = 2.0 * d * (d / 2.0).ln() - d * z.ln() + d / alpha * a1;
    let shannon_upper_assembled = a0_asymptotic + moment_tail;
    let shannon_upper_printed =
        3.0 * d * d.ln() + (0.5 * ln_pi_e_eighth - z.ln() + a1 / alpha) * d
            - 0.5 * (alpha / 2.0).ln();
    let renyi_upper_assembled = ln_l1(q, alpha, state.d)? / (1.0 - q) + moment_tail;
    let renyi_upper_printed = (3.0 * d - 1.0) / 2.0 * d.ln()
        + (0.5 * ln_pi_e_eighth - z.ln() + a1 / alpha) * d
        + a3 / (1.0 - q);
    let power = d / alpha * (q - 1.0);
    let tsallis_rhs_ln_assembled = ln_a5 - power * a1;
    let tsallis_rhs_ln_printed = (a1 > 0.0).then(|| ln_a5 - power * a1.ln());

    Ok(AsymptoticBoundTerms {
        a0_asymptotic,
        a1,
        a2,
        a3,
        ln_a5,
        shannon_upper_assembled,
        shannon_upper_printed,
        renyi_upper_assembled,
        renyi_upper_printed,
        tsallis_rhs_ln_assembled,
        tsallis_rhs_ln_printed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn state(n: u32, l: u32, d: u32, z: f64) -> HydrogenicState {
        HydrogenicState::new(n, l, d, z).unwrap()
    }

    fn shannon(n: u32, l: u32, d: u32, z: f64, space: Space) -> f64 {
        entropy_quadrature(&state(n, l, d, z), EntropyKind::Shannon, 1.0, space)
            .unwrap()
            .value
    }

    #[test]
    fn position_shannon_values() {
        let s = shannon(1, 0, 3, 1.0, Space::Position);
        assert!((s - (3.0 + PI.ln())).abs() < 1e-9, "got {s}");
        assert!((shannon(2, 0, 3, 1.0, Space::Position) - 8.1109293645902620).abs() < 1e-8);
        assert!((shannon(3, 0, 3, 1.0, Space::Position) - 10.426481230682276).abs() < 1e-8);
        assert!((shannon(1, 0, 10, 1.0, Space::Position) - 34.149872421703758).abs() < 1e-8);
        let s20 = shannon(3, 0, 20, 2.0, Space::Position);
        assert!((s20 - 85.320217391617822).abs() < 1e-8, "got {s20}");
        // Dilation: S(Z) = S(1) - D ln Z in position space.
        let s20_z1 = shannon(3, 0, 20, 1.0, Space::Position);
        assert!((s20 - (s20_z1 - 20.0 * 2f64.ln())).abs() < 1e-8);
    }

    #[test]
    fn momentum_shannon_values() {
        let s = shannon(1, 0, 3, 1.0, Space::Momentum);
        assert!((s - (2.0 * PI.ln() + 5.0 * LN_2 - 10.0 / 3.0)).abs() < 1e-9, "got {s}");
        assert!((shannon(2, 0, 3, 1.0, Space::Momentum) - -0.75757920051464237).abs() < 1e-8);
        assert!((shannon(1, 0, 20, 1.0, Space::Momentum) - -46.765541534629884).abs() < 1e-8);
        let s20 = shannon(3, 0, 20, 2.0, Space::Momentum);
        assert!((s20 - -39.692230397202472).abs() < 1e-8, "got {s20}");
        let s20_z1 = shannon(3, 0, 20, 1.0, Space::Momentum);
        assert!((s20 - (s20_z1 + 20.0 * 2f64.ln())).abs() < 1e-8);
    }

    #[test]
    fn entropic_moments() {
        let w = ln_entropic_moment(&state(1, 0, 3, 1.0), 2.0, Space::Position).unwrap().exp();
        assert!((w - 1.0 / (8.0 * PI)).abs() < 1e-11, "got {w}");
        let w = ln_entropic_moment(&state(1, 0, 3, 1.0), 2.0, Space::Momentum).unwrap().exp();
        assert!((w - 33.0 / (16.0 * PI * PI)).abs() < 1e-9, "got {w}");
        let w = ln_entropic_moment(&state(3, 0, 20, 1.0), 2.0, Space::Position).unwrap().exp();
        assert!(((w - 1.70479311131032e-36) / 1.70479311131032e-36).abs() < 1e-8);
        let w = ln_entropic_moment(&state(3, 0, 20, 1.0), 2.0, Space::Momentum).unwrap().exp();
        assert!(((w - 1.39975887354542e27) / 1.39975887354542e27).abs() < 1e-8);
        // Deep log-space territory: the assembled exponent stays exact.
        let lw = ln_entropic_moment(&state(1, 0, 100, 1.0), 2.0, Space::Position).unwrap();
        assert!((lw - -662.695369853725).abs() < 1e-7, "got {lw}");
        let w = ln_entropic_moment(&state(1, 0, 50, 1.0), 2.0, Space::Position).unwrap().exp();
        assert!(((w - 6.6148465e-122) / 6.6148465e-122).abs() < 1e-6);
    }

    #[test]
    fn renyi_and_tsallis_assembly() {
        let st = state(1, 0, 3, 1.0);
        let r = entropy_quadrature(&st, EntropyKind::Renyi, 2.0, Space::Position).unwrap().value;
        assert!((r - (8.0 * PI).ln()).abs() < 1e-10, "got {r}");
        let r = entropy_quadrature(&st, EntropyKind::Renyi, 2.0, Space::Momentum).unwrap().value;
        assert!((r - 1.5655409324721014).abs() < 1e-9);
        let t = entropy_quadrature(&st, EntropyKind::Tsallis, 2.0, Space::Position).unwrap().value;
        assert!((t - 0.960211264227026).abs() < 1e-10);
        assert!(t <= 1.0); // T_q <= 1/(q-1)
        // Functional identity T_q = (1 - exp((1-q) R_q))/(q-1).
        for (q, space) in [(2.0, Space::Position), (3.0, Space::Momentum), (0.5, Space::Position)]
        {
            let r = entropy_quadrature(&st, EntropyKind::Renyi, q, space).unwrap().value;
            let t = entropy_quadrature(&st, EntropyKind::Tsallis, q, space).unwrap().value;
            let via_r = (1.0 - ((1.0 - q) * r).exp()) / (q - 1.0);
            assert!((t - via_r).abs() < 1e-10, "q={q}");
        }
        assert!(entropy_quadrature(&st, EntropyKind::Renyi, 1.0, Space::Position).is_err());
        assert!(entropy_quadrature(&state(2, 1, 3, 1.0), EntropyKind::Shannon, 1.0, Space::Position)
            .is_err());
    }

    #[test]
    fn renyi_approaches_shannon() {
        for space in [Space::Position, Space::Momentum] {
            let s = shannon(1, 0, 3, 1.0, space);
            for q in [1.0 + 1e-4, 1.0 - 1e-4] {
                let r = entropy_quadrature(&state(1, 0, 3, 1.0), EntropyKind::Renyi, q, space)
                    .unwrap()
                    .value;
                assert!((r - s).abs() < 5e-4, "q={q} {space}: {r} vs {s}");
            }
        }
    }

    #[test]
    fn momentum_routes_agree() {
        for d in [3u32, 12, 28] {
            for n in [1u32, 3] {
                let st = state(n, 0, d, 1.5);
                let a = shannon_momentum_p_route(&st).unwrap();
                let b = shannon_momentum_t_route(&st).unwrap();
                assert!((a - b).abs() < 1e-9 * a.abs().max(1.0), "S n={n} D={d}: {a} vs {b}");
                let a = ln_w_momentum_p_route(&st, 2.0).unwrap();
                let b = ln_w_momentum_t_route(&st, 2.0).unwrap();
                assert!((a - b).abs() < 1e-9 * a.abs().max(1.0), "W n={n} D={d}: {a} vs {b}");
            }
        }
    }

    #[test]
    fn a0_values() {
        assert!((a0_constant(1.0, 3).unwrap() - 2.928334561524907).abs() < 1e-12);
        let a = a0_constant(2.0, 3).unwrap();
        assert!((a - 2.6088971666118537).abs() < 1e-12);
        // The widely quoted 2.6090604 sits ~1.6e-4 from the direct formula.
        assert!((a - 2.6090604).abs() > 1e-4 && (a - 2.6090604).abs() < 2e-4);
        assert!(a0_constant(0.0, 3).is_err());
    }

    #[test]
    fn shannon_bounds() {
        let st = state(1, 0, 3, 1.0);
        let r = bound_shannon_upper(&st, 2.0, Space::Position).unwrap();
        assert!((r.bound_value - 4.2568155996140182).abs() < 1e-9);
        assert_eq!(r.satisfied, Some(true));
        let s = r.entropy.unwrap().value;
        assert!(r.bound_value - s > 0.1 && r.bound_value - s < 0.13);

        // alpha = 1 saturates: the 1s radial density is the exponential
        // maximizer for the first-moment constraint in every D.
        for d in [3u32, 10] {
            let r = bound_shannon_upper(&state(1, 0, d, 1.0), 1.0, Space::Position).unwrap();
            let gap = r.bound_value - r.entropy.unwrap().value;
            assert!(gap.abs() < 1e-8, "D={d}: gap {gap}");
        }

        let r = bound_shannon_upper(&st, 1.0, Space::Momentum).unwrap();
        assert!((r.bound_value - 2.4366326630118852).abs() < 1e-9);
        assert_eq!(r.satisfied, Some(true));
        let r = bound_shannon_upper(&st, 2.0, Space::Momentum).unwrap();
        assert!((r.bound_value - 2.6088971666118537).abs() < 1e-9); // ln<p^2> = 0
    }

    #[test]
    fn renyi_bounds() {
        assert!((ln_l1(2.0, 2.0, 3).unwrap().exp() - 0.095685949934475145).abs() < 1e-12);
        assert!((ln_l2(2.0, 1.0, 3).unwrap().exp() - 1.0 / (9.0 * PI)).abs() < 1e-13);
        let st = state(1, 0, 3, 1.0);
        let r = bound_renyi_upper(&st, 2.0, 2, MomentSign::Plus, Space::Position).unwrap();
        assert!((r.bound_value - 3.9946022379454187).abs() < 1e-9);
        assert_eq!(r.satisfied, Some(true));
        assert!((r.entropy.unwrap().value - 3.2241714275292361).abs() < 1e-9);
        let r = bound_renyi_upper(&st, 2.0, 1, MomentSign::Minus, Space::Position).unwrap();
        assert!((r.bound_value - 3.3419544631856196).abs() < 1e-9);
        assert_eq!(r.satisfied, Some(true));
        // alpha < D(q-1)/q fails for alpha = 2, D = 3, q = 2.
        assert!(bound_renyi_upper(&st, 2.0, 2, MomentSign::Minus, Space::Position).is_err());
    }

    #[test]
    fn renyi_bound_degenerates_to_shannon_from_above() {
        let st = state(1, 0, 3, 1.0);
        let shannon_bound = bound_shannon_upper(&st, 2.0, Space::Position).unwrap().bound_value;
        let q = 1.0 + 1e-4;
        let r = bound_renyi_upper(&st, q, 2, MomentSign::Plus, Space::Position).unwrap();
        assert!((r.bound_value - 4.25674061398614).abs() < 1e-6, "got {}", r.bound_value);
        assert!(((r.bound_value - shannon_bound) / shannon_bound).abs() < 1e-3);
        // From below, the braces of L1 acquire a negative base raised to a
        // non-integer power; the formula leaves the real domain and the
        // operation reports that instead of inventing a value.
        assert!(bound_renyi_upper(&st, 1.0 - 1e-4, 2, MomentSign::Plus, Space::Position).is_err());
    }

    #[test]
    fn tsallis_bounds() {
        let st = state(1, 0, 3, 1.0);
        let r = bound_tsallis_lower(&st, 2.0, 2, MomentSign::Plus, Space::Position).unwrap();
        assert!((r.bound_value - 0.018414769650778093).abs() < 1e-12);
        assert_eq!(r.satisfied, Some(true));
        let w = 1.0 + (1.0 - 2.0) * r.entropy.unwrap().value;
        assert!((w - 1.0 / (8.0 * PI)).abs() < 1e-10);
        // Momentum mirror: <p^2> = 1 so the bound is L1 itself.
        let r = bound_tsallis_lower(&st, 2.0, 2, MomentSign::Plus, Space::Momentum).unwrap();
        assert!((r.bound_value - 0.095685949934475145).abs() < 1e-10);
        assert_eq!(r.satisfied, Some(true));
    }

    #[test]
    fn bounds_hold_on_the_sweep() {
        for n in 1..=3u32 {
            for d in [3u32, 5, 10, 20] {
                for z in [1.0, 2.0] {
                    let st = state(n, 0, d, z);
                    for space in [Space::Position, Space::Momentum] {
                        for alpha in [1.0, 2.0] {
                            let r = bound_shannon_upper(&st, alpha, space).unwrap();
                            assert_eq!(r.satisfied, Some(true), "S n={n} D={d} Z={z} {space}");
                        }
                        let r =
                            bound_renyi_upper(&st, 2.0, 2, MomentSign::Plus, space).unwrap();
                        assert_eq!(r.satisfied, Some(true), "R n={n} D={d} Z={z} {space}");
                        let r =
                            bound_renyi_upper(&st, 2.0, 1, MomentSign::Minus, space).unwrap();
                        assert_eq!(r.satisfied, Some(true), "R- n={n} D={d} Z={z} {space}");
                        let r =
                            bound_tsallis_lower(&st, 2.0, 2, MomentSign::Plus, space).unwrap();
                        assert_eq!(r.satisfied, Some(true), "T n={n} D={d} Z={z} {space}");
                    }
                }
            }
        }
    }

    #[test]
    fn bounds_without_entropy_for_higher_l() {
        let r = bound_shannon_upper(&state(3, 2, 5, 1.0), 2.0, Space::Position).unwrap();
        assert!(r.entropy.is_none() && r.satisfied.is_none());
        assert!(r.bound_value.is_finite());
    }

    #[test]
    fn asymptotic_terms() {
        // Ground-state A1 vanishes identically for alpha = 2.
        let t = asymptotic_bound_terms(&state(1, 0, 100, 1.0), 2.0, 2.0).unwrap();
        assert_eq!(t.a1, 0.0);
        // A1 -> 0 with D.
        let t6 = asymptotic_bound_terms(&state(3, 1, 1_000_000, 1.0), 2.0, 2.0).unwrap();
        assert!(t6.a1.abs() < 3e-5);

        // Exact vs assembled asymptotic Shannon bound at D = 1000.
        let st = state(1, 0, 1000, 1.0);
        let exact = bound_shannon_upper(&st, 2.0, Space::Position).unwrap().bound_value;
        assert!(((exact - 10393.7763403909) / exact).abs() < 1e-9, "got {exact}");
        let t = asymptotic_bound_terms(&st, 2.0, 2.0).unwrap();
        assert!(((t.shannon_upper_assembled - 10394.277090558) / exact).abs() < 1e-9);
        let gap = ((t.shannon_upper_assembled - exact) / exact).abs();
        assert!(gap < 2e-2 && gap > 1e-6, "relative gap {gap}");
        // The printed one-liner's 3D log D leading term overshoots its own
        // assembly by roughly a factor two.
        let printed_gap = ((t.shannon_upper_printed - exact) / exact).abs();
        assert!(printed_gap > 0.5, "printed relgap {printed_gap}");

        // At alpha = 2 the gamma functions cancel and the asymptotic A0 is exact.
        let exact2 = a0_constant(2.0, 3200).unwrap();
        let asym2 = asymptotic_bound_terms(&state(1, 0, 3200, 1.0), 2.0, 2.0).unwrap().a0_asymptotic;
        assert!((exact2 - asym2).abs() < 1e-9 * exact2.abs());
        // Elsewhere the exact-minus-asymptotic gap decays like the Stirling remainder.
        let mut last = f64::INFINITY;
        for d in [200u32, 800, 3200] {
            let exact = a0_constant(3.0, d).unwrap();
            let asym =
                asymptotic_bound_terms(&state(1, 0, d, 1.0), 3.0, 2.0).unwrap().a0_asymptotic;
            let diff = (exact - asym).abs();
            assert!(diff < last, "D={d}: {diff} vs {last}");
            last = diff;
        }
        assert!(last < 1e-3);
    }

    #[test]
    fn renyi_asymptotic_lines_differ_by_a_stabilizing_constant() {
        let mut diffs = Vec::new();
        for d in [500u32, 1000, 2000] {
            let t = asymptotic_bound_terms(&state(1, 0, d, 1.0), 2.0, 2.0).unwrap();
            diffs.push(t.renyi_upper_assembled - t.renyi_upper_printed);
        }
        assert!((diffs[2] - diffs[1]).abs() < (diffs[1] - diffs[0]).abs());
        assert!((diffs[2] - 1.65234).abs() < 1e-3, "got {}", diffs[2]);
    }

    #[test]
    fn printed_tsallis_asymptote_overshoots_the_exact_moment() {
        // Treating the logarithmic A1 as a power-law base sends the printed
        // RHS far above the exact W_2 it is supposed to undercut.
        let st = state(2, 0, 60, 1.0);
        let t = asymptotic_bound_terms(&st, 2.0, 2.0).unwrap();
        let ln_w2 = ln_entropic_moment(&st, 2.0, Space::Position).unwrap();
        let printed = t.tsallis_rhs_ln_printed.unwrap();
        assert!(printed > ln_w2 + 10.0, "printed {printed} vs ln W2 {ln_w2}");
    }
}
