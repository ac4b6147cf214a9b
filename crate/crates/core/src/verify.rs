//! The verification harness: every formula family is checked against an
//! independent route (adaptive quadrature, exact rationals, or a frozen
//! reference value computed offline at high precision) and each check
//! reports PASS, WARN, or FAIL.
//!
//! Taxonomy: a FAIL means a mathematical identity or an advertised tolerance
//! is violated by the implementation. A WARN marks a published value or
//! printed formula variant that is internally inconsistent with the formula
//! family it belongs to; the library carries those variants verbatim for
//! reporting but never uses them as the authoritative route.

use crate::entropy::{
    a0_constant, asymptotic_bound_terms, bound_renyi_upper, bound_shannon_upper,
    bound_tsallis_lower, entropy_quadrature, ln_entropic_moment, EntropyKind, MomentSign,
};
use crate::error::Result;
use crate::hydrogenic::{
    log_momentum_expectation, log_position_expectation, momentum_expectation,
    momentum_expectation_rational, momentum_reflection, position_closed_form_rational,
    position_expectation, position_expectation_rational, HydrogenicState, Space,
};
use crate::largedim::{
    circular_log_momentum_printed, circular_momentum_large_d, fk_direct, fk_direct_rational,
    fk_prop1_rational, gamma_ratio_expansion, momentum_large_d, momentum_large_d_refined,
    pochhammer_shift_identity, position_large_d, position_large_d_refined,
};
use crate::rydberg::{
    equilibrium_momentum, equilibrium_position, limiting_integrals, mom_rydberg_fixed_d,
    mom_rydberg_fixed_nl_gap, mom_rydberg_large_d, pos_rydberg_fixed_d, pos_rydberg_large_d,
    position_moment_closed, RatioLambda,
};
use crate::specfun::{appell_f1, digamma, gauss_2f1, gegenbauer, laguerre, log_gamma, surface_area};
use crate::uncertainty::{
    check_heisenberg_bound, log_uncertainty_sum, log_uncertainty_sum_large_d,
    product22_closed_rational,
};
use crate::{rel_dev, Rational};
use num_bigint::BigInt;
use rayon::prelude::*;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Status {
    Pass,
    Warn,
    Fail,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Warn => "WARN",
            Status::Fail => "FAIL",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone)]
pub struct Check {
    pub id: String,
    pub status: Status,
    pub observed: String,
    pub required: String,
    pub note: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Specfun,
    Exact,
    Largedim,
    Rydberg,
    Uncertainty,
    Entropy,
    All,
}

impl Suite {
    pub const BASE: [Suite; 6] = [
        Suite::Specfun,
        Suite::Exact,
        Suite::Largedim,
        Suite::Rydberg,
        Suite::Uncertainty,
        Suite::Entropy,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Specfun => "specfun",
            Suite::Exact => "exact",
            Suite::Largedim => "largedim",
            Suite::Rydberg => "rydberg",
            Suite::Uncertainty => "uncertainty",
            Suite::Entropy => "entropy",
            Suite::All => "all",
        }
    }
}

impl std::str::FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "specfun" => Ok(Suite::Specfun),
            "exact" => Ok(Suite::Exact),
            "largedim" => Ok(Suite::Largedim),
            "rydberg" => Ok(Suite::Rydberg),
            "uncertainty" => Ok(Suite::Uncertainty),
            "entropy" => Ok(Suite::Entropy),
            "all" => Ok(Suite::All),
            other => Err(format!("unknown suite '{other}'")),
        }
    }
}

pub fn run_suite(suite: Suite) -> Vec<Check> {
    match suite {
        Suite::Specfun => specfun_suite(),
        Suite::Exact => exact_suite(),
        Suite::Largedim => largedim_suite(),
        Suite::Rydberg => rydberg_suite(),
        Suite::Uncertainty => uncertainty_suite(),
        Suite::Entropy => entropy_suite(),
        Suite::All => Suite::BASE
            .par_iter()
            .map(|s| run_suite(*s))
            .reduce(Vec::new, |mut acc, mut v| {
                acc.append(&mut v);
                acc
            }),
    }
}

pub fn has_failure(checks: &[Check]) -> bool {
    checks.iter().any(|c| c.status == Status::Fail)
}

fn state(n: u32, l: u32, d: u32, z: f64) -> HydrogenicState {
    HydrogenicState::new(n, l, d, z).expect("verification state is admissible")
}

fn check(id: &str, ok: bool, observed: String, required: &str, note: &str) -> Check {
    Check {
        id: id.into(),
        status: if ok { Status::Pass } else { Status::Fail },
        observed,
        required: required.into(),
        note: note.into(),
    }
}

fn warn(id: &str, observed: String, required: &str, note: &str) -> Check {
    Check { id: id.into(), status: Status::Warn, observed, required: required.into(), note: note.into() }
}

/// Runs a fallible check body; an evaluation error becomes a FAIL.
fn run(id: &str, body: impl FnOnce() -> Result<Check>) -> Check {
    body().unwrap_or_else(|e| Check {
        id: id.into(),
        status: Status::Fail,
        observed: format!("error: {e}"),
        required: "successful evaluation".into(),
        note: String::new(),
    })
}

fn fmt_dev(d: f64) -> String {
    format!("max relative deviation {d:.3e}")
}

// --- specfun ---

fn specfun_suite() -> Vec<Check> {
    vec![
        run("specfun.log_gamma_reference", || {
            let d1 = rel_dev(log_gamma(11.0)?, 15.104412573075515295);
            let x = 241.5;
            let d2 = (log_gamma(x + 1.0)? - log_gamma(x)? - x.ln()).abs();
            let d3 = (log_gamma(0.5)?.exp() - std::f64::consts::PI.sqrt()).abs();
            let worst = d1.max(d2).max(d3);
            Ok(check(
                "specfun.log_gamma_reference",
                worst <= 1e-13,
                fmt_dev(worst),
                "<= 1e-13",
                "ln Gamma(11) reference, recurrence at x = 241.5, Gamma(1/2) = sqrt(pi)",
            ))
        }),
        run("specfun.digamma_reference", || {
            let d1 = rel_dev(digamma(0.75)?, -1.0858608797864721696);
            let x = 3.7;
            let d2 = (digamma(x + 1.0)? - digamma(x)? - 1.0 / x).abs();
            let worst = d1.max(d2);
            Ok(check(
                "specfun.digamma_reference",
                worst <= 1e-13,
                fmt_dev(worst),
                "<= 1e-13",
                "psi(3/4) reference and the recurrence psi(x+1) = psi(x) + 1/x",
            ))
        }),
        run("specfun.surface_area", || {
            let d1 = rel_dev(surface_area(3)?, 12.566370614359172954);
            let d2 = rel_dev(surface_area(4)?, 19.739208802178717238);
            let worst = d1.max(d2);
            Ok(check(
                "specfun.surface_area",
                worst <= 1e-14,
                fmt_dev(worst),
                "<= 1e-14",
                "Omega_3 = 4 pi and Omega_4 = 2 pi^2",
            ))
        }),
        run("specfun.orthopoly_closed_forms", || {
            let beta = 1.0;
            let x = 0.7;
            let lag = laguerre(2, beta, x);
            let lag_ref = (beta + 1.0) * (beta + 2.0) / 2.0 - (beta + 2.0) * x + x * x / 2.0;
            let nu = 1.25;
            let t = 0.3;
            let geg = gegenbauer(2, nu, t)?;
            let geg_ref = 2.0 * nu * (nu + 1.0) * t * t - nu;
            let worst = (lag - lag_ref).abs().max((geg - geg_ref).abs());
            Ok(check(
                "specfun.orthopoly_closed_forms",
                worst <= 1e-14,
                fmt_dev(worst),
                "<= 1e-14",
                "degree-2 Laguerre and Gegenbauer against their explicit polynomials",
            ))
        }),
        run("specfun.gauss_2f1_terminating", || {
            // 2F1(-3, 3/2; 3; 0.4) summed by hand: 1 - 0.6 + 0.15 - 0.014
            let v = gauss_2f1(-3.0, 1.5, 3.0, 0.4)?;
            let reference = 1.0 - 0.6 + 0.15 - 0.014;
            let d = rel_dev(v, reference);
            Ok(check(
                "specfun.gauss_2f1_terminating",
                d <= 1e-14,
                fmt_dev(d),
                "<= 1e-14",
                "terminating Gauss series against its explicit four-term sum",
            ))
        }),
        run("specfun.appell_reduction", || {
            let f1 = appell_f1(1.5, 0.5, 0.25, 3.0, 0.4, 0.0)?;
            let g = gauss_2f1(1.5, 0.5, 3.0, 0.4)?;
            let d = rel_dev(f1, g);
            Ok(check(
                "specfun.appell_reduction",
                d <= 1e-12,
                fmt_dev(d),
                "<= 1e-12",
                "F1(a, b1, b2; c; x, 0) must reduce to 2F1(a, b1; c; x)",
            ))
        }),
        run("specfun.terminating_sum_escalation", || {
            // Cancellation-heavy 5F4 at k = 40: the float path alone loses
            // everything; the condition-tracked route must match the exact
            // rational value.
            let st = state(41, 0, 3, 1.0);
            let float = momentum_expectation(&st, 2.0)?.value;
            let exact = crate::rational_to_f64(&momentum_expectation_rational(&st, 2)?);
            let d = rel_dev(float, exact);
            Ok(check(
                "specfun.terminating_sum_escalation",
                d <= 1e-10,
                fmt_dev(d),
                "<= 1e-10",
                "condition-tracked float route vs the exact rational sum at k = 40",
            ))
        }),
    ]
}

// --- exact moments ---

/// Published table cells for the n = 2, l = 0, Z = 1 state (D, alpha, value).
const MOMENTUM_TABLE_EXACT: [(u32, f64, f64); 9] = [
    (50, 1.0, 0.0380789),
    (250, 1.0, 0.00792065),
    (500, 1.0, 0.00398008),
    (50, 2.0, 0.00153787),
    (250, 2.0, 6.34911e-5),
    (500, 2.0, 1.59362e-5),
    (50, -1.0, 27.7927),
    (250, -1.0, 127.758),
    (500, -1.0, 252.754),
];

const POSITION_TABLE_PRINTED: [(u32, f64, f64); 9] = [
    (50, 1.0, 612.5),
    (250, 1.0, 15562.5),
    (500, 1.0, 62375.0),
    (50, 2.0, 365766.0),
    (250, 2.0, 2.41176e8),
    (500, 2.0, 3.88267e9),
    (50, -1.0, 0.00160064),
    (250, -1.0, 0.000064001),
    (500, -1.0, 0.0000160001),
];

fn exact_suite() -> Vec<Check> {
    vec![
        run("exact.momentum_table_cells", || {
            let mut worst = 0.0f64;
            for (d, alpha, printed) in MOMENTUM_TABLE_EXACT {
                let v = momentum_expectation(&state(2, 0, d, 1.0), alpha)?.value;
                worst = worst.max(rel_dev(v, printed));
            }
            Ok(check(
                "exact.momentum_table_cells",
                worst <= 5e-6,
                fmt_dev(worst),
                "<= 5e-6 against all nine published cells",
                "published momentum column agrees with the 5F4 route to print precision",
            ))
        }),
        run("exact.position_table_printed_column", || {
            let mut worst = 0.0f64;
            for (d, alpha, printed) in POSITION_TABLE_PRINTED {
                let v = position_expectation(&state(2, 0, d, 1.0), alpha)?.value;
                worst = worst.max(rel_dev(printed, v));
            }
            Ok(warn(
                "exact.position_table_printed_column",
                fmt_dev(worst),
                "published cells should match the closed form",
                "published position column is internally inconsistent: alpha = 1 \
                 cells omit the terminating series factor (612.5 vs 687.5 = 612.5(1+6/49)), \
                 alpha = -1 cells equal 1/(eta(eta-1)) instead of Z/eta^2; quadrature \
                 confirms the closed form",
            ))
        }),
        run("exact.p2_virial_identity", || {
            let mut worst = 0.0f64;
            for (n, l, d, z) in [(1, 0, 3, 1.0), (2, 0, 50, 1.0), (3, 1, 9, 2.0), (4, 2, 24, 10.0)] {
                let st = state(n, l, d, z);
                let eta = f64::from(2 * n + d - 3) / 2.0;
                let p2 = momentum_expectation(&st, 2.0)?.value;
                worst = worst.max(rel_dev(p2, (z / eta) * (z / eta)));
            }
            Ok(check(
                "exact.p2_virial_identity",
                worst <= 1e-13,
                fmt_dev(worst),
                "<= 1e-13",
                "<p^2> = Z^2/eta^2 = -2E on a four-state sample",
            ))
        }),
        run("exact.momentum_reflection", || {
            let worst = momentum_reflection(&state(3, 2, 6, 2.0), 1)?
                .max(momentum_reflection(&state(2, 1, 4, 1.5), 2)?);
            Ok(check(
                "exact.momentum_reflection",
                worst <= 1e-11,
                fmt_dev(worst),
                "<= 1e-11",
                "<p^-beta> vs (eta/Z)^(2beta+2) <p^(beta+2)>, both via the 5F4 route",
            ))
        }),
        run("exact.closed_vs_series_rational", || {
            let mut all_equal = true;
            for (n, l, d) in [(2, 0, 50), (3, 1, 7), (4, 2, 12)] {
                let st = state(n, l, d, 3.0);
                for alpha in [1i64, 2, -1, -2] {
                    all_equal &=
                        position_closed_form_rational(&st, alpha)? == position_expectation_rational(&st, alpha)?;
                }
                for alpha in [2i64, -2, 4] {
                    all_equal &= crate::hydrogenic::momentum_closed_form_rational(&st, alpha)?
                        == momentum_expectation_rational(&st, alpha)?;
                }
            }
            Ok(check(
                "exact.closed_vs_series_rational",
                all_equal,
                format!("exact rational equality: {all_equal}"),
                "closed forms == terminating series, exactly",
                "both routes evaluated in BigRational over three states and seven powers",
            ))
        }),
        run("exact.log_moment_references", || {
            let d1 = (log_momentum_expectation(&state(1, 0, 3, 1.0))?.value - (-1.0 / 3.0)).abs();
            let d2 = (log_position_expectation(&state(3, 1, 7, 2.0))?.value - 2.66378502926981975).abs();
            let worst = d1.max(d2);
            Ok(check(
                "exact.log_moment_references",
                worst <= 1e-12,
                fmt_dev(worst),
                "<= 1e-12",
                "<ln p>(1,0,3,1) = -1/3 exactly; <ln r>(3,1,7,2) against the quadrature oracle",
            ))
        }),
        run("exact.logr_digamma_argument", || {
            let st = state(4, 2, 7, 1.0);
            let implemented = log_position_expectation(&st)?.value;
            // The standalone printed relation uses psi(n+1+D-2) where the
            // component sum gives psi(n+l+D-2); they differ whenever l != 1.
            let printed = implemented - digamma(f64::from(4 + 2 + 7) - 2.0)?
                + digamma(f64::from(4 + 1 + 7) - 2.0)?;
            Ok(warn(
                "exact.logr_digamma_argument",
                format!("printed-variant offset {:.6e}", (printed - implemented).abs()),
                "printed digamma argument should equal the component-sum derivation",
                "quadrature sides with psi(n+l+D-2); the printed psi(n+1+D-2) \
                 coincides only at l = 1",
            ))
        }),
    ]
}

// --- large-D asymptotics ---

const POSITION_TABLE_ASYMP: [(u32, f64, f64); 9] = [
    (50, 1.0, 686.0),
    (250, 1.0, 15936.0),
    (500, 1.0, 63123.5),
    (50, 2.0, 484375.0),
    (250, 2.0, 2.55859e8),
    (500, 2.0, 4.0e9),
    (50, -1.0, 0.0016),
    (250, -1.0, 0.000064),
    (500, -1.0, 0.000016),
];

const MOMENTUM_TABLE_ASYMP: [(u32, f64, f64); 9] = [
    (50, 1.0, 0.0388),
    (250, 1.0, 0.007952),
    (500, 1.0, 0.003988),
    (50, 2.0, 0.0016),
    (250, 2.0, 0.000064),
    (500, 2.0, 0.000016),
    (50, -1.0, 27.25),
    (250, -1.0, 127.25),
    (500, -1.0, 252.25),
];

fn largedim_suite() -> Vec<Check> {
    vec![
        run("largedim.table_asymptotic_cells", || {
            let mut worst = 0.0f64;
            for (d, alpha, printed) in POSITION_TABLE_ASYMP {
                let v = position_large_d(&state(2, 0, d, 1.0), alpha)?.value;
                worst = worst.max(rel_dev(v, printed));
            }
            for (d, alpha, printed) in MOMENTUM_TABLE_ASYMP {
                let v = momentum_large_d(&state(2, 0, d, 1.0), alpha)?.value;
                worst = worst.max(rel_dev(v, printed));
            }
            Ok(check(
                "largedim.table_asymptotic_cells",
                worst <= 5e-6,
                fmt_dev(worst),
                "<= 5e-6 (print truncation) on all eighteen cells",
                "the product-form asymptotics reproduce the published asymptotic columns",
            ))
        }),
        run("largedim.table_alpha0_row", || {
            let mut vals = Vec::new();
            for d in [50u32, 250, 500] {
                vals.push(position_large_d(&state(2, 0, d, 1.0), 0.0)?.value);
            }
            Ok(warn(
                "largedim.table_alpha0_row",
                format!("formula gives {:.6}, {:.6}, {:.6}", vals[0], vals[1], vals[2]),
                "published row prints 1.00199 at D = 50, 250 and 500",
                "only the D = 500 entry matches; the published row repeats the \
                 D = 500 value for all three dimensions",
            ))
        }),
        run("largedim.fk_two_routes_exact", || {
            let mut all_equal = true;
            for k in 0..=8usize {
                for nu in [5i64, 10, 20, 50] {
                    for alpha in [-1i64, 0, 1, 2, 3] {
                        let nu_r = Rational::from(BigInt::from(nu));
                        let al_r = Rational::from(BigInt::from(alpha));
                        all_equal &=
                            fk_direct_rational(k, &nu_r, &al_r)? == fk_prop1_rational(k, &nu_r, &al_r)?;
                    }
                }
            }
            Ok(check(
                "largedim.fk_two_routes_exact",
                all_equal,
                format!("exact rational equality: {all_equal}"),
                "direct alternating sum == backward-difference recast, exactly",
                "k <= 8, nu in {5,10,20,50}, alpha in {-1..3}",
            ))
        }),
        run("largedim.pochhammer_shift", || {
            let mut worst = Rational::from(BigInt::from(0));
            for a_num in [3i64, 7, 11] {
                for j in 0..=4usize {
                    for k in 0..=4usize {
                        let a = Rational::new(BigInt::from(a_num), BigInt::from(2));
                        let (lhs, rhs) = pochhammer_shift_identity(&a, j, k);
                        let diff = if lhs >= rhs { lhs - rhs } else { rhs - lhs };
                        if diff > worst {
                            worst = diff;
                        }
                    }
                }
            }
            let ok = worst == Rational::from(BigInt::from(0));
            Ok(check(
                "largedim.pochhammer_shift",
                ok,
                format!("max absolute defect {}", worst),
                "exact identity",
                "(a+j)_k (a)_j = (a)_k (a+k)_j on a half-integer grid",
            ))
        }),
        run("largedim.refined_halving_ratio", || {
            let mut ratios = Vec::new();
            for (st_args, alpha, momentum) in
                [((2u32, 1u32), 2.0, false), ((3u32, 1u32), 3.0, true)]
            {
                let residual = |d: u32| -> Result<f64> {
                    let st = state(st_args.0, st_args.1, d, 1.0);
                    let (asym, exact) = if momentum {
                        (momentum_large_d_refined(&st, alpha)?.value,
                         momentum_expectation(&st, alpha)?.value)
                    } else {
                        (position_large_d_refined(&st, alpha)?.value,
                         position_expectation(&st, alpha)?.value)
                    };
                    Ok((asym / exact - 1.0).abs())
                };
                ratios.push(residual(100)? / residual(200)?);
                ratios.push(residual(200)? / residual(400)?);
            }
            let ok = ratios.iter().all(|r| (3.0..=5.5).contains(r));
            Ok(check(
                "largedim.refined_halving_ratio",
                ok,
                format!("doubling ratios {ratios:.3?}"),
                "each in [3.0, 5.5] (O(1/D^2) residual)",
                "refined composites halve their residual quadratically in D",
            ))
        }),
        run("largedim.printed_form_residual_order", || {
            let st200 = state(2, 0, 200, 1.0);
            let st400 = state(2, 0, 400, 1.0);
            let r200 = (position_large_d(&st200, 2.0)?.value
                / position_expectation(&st200, 2.0)?.value
                - 1.0)
                .abs();
            let r400 = (position_large_d(&st400, 2.0)?.value
                / position_expectation(&st400, 2.0)?.value
                - 1.0)
                .abs();
            Ok(warn(
                "largedim.printed_form_residual_order",
                format!("residual doubling ratio {:.3}", r200 / r400),
                "would be ~4 if the printed correction captured all 1/D terms",
                "the (D^2/4Z)^alpha leading factor differs from the exact eta \
                 dependence at first order, so the printed form converges only at O(1/D)",
            ))
        }),
        run("largedim.circular_momentum_coefficient", || {
            let st = state(3, 2, 400, 1.0);
            let printed = circular_momentum_large_d(&st, 1.0)?.value;
            let general = momentum_large_d(&st, 1.0)?.value;
            Ok(warn(
                "largedim.circular_momentum_coefficient",
                format!("printed vs general-specialization gap {:.3e}", rel_dev(printed, general)),
                "circular coefficient should specialize the general 2n-2l-1 to 1",
                "the printed circular variant uses 2n-1; the general route is authoritative",
            ))
        }),
        run("largedim.circular_log_momentum", || {
            let st = state(1, 0, 300, 1.0);
            let exact = log_momentum_expectation(&st)?.value;
            let general = crate::largedim::log_momentum_large_d(&st).value;
            let printed = circular_log_momentum_printed(&st)?.value;
            Ok(warn(
                "largedim.circular_log_momentum",
                format!(
                    "general-route error {:.3e}, printed-variant error {:.3e}",
                    (general - exact).abs(),
                    (printed - exact).abs()
                ),
                "printed circular 1/D coefficient should match the general form",
                "printed -1/D disagrees with the specialized -(4n-2l-4)/D = 0 at n = 1",
            ))
        }),
        run("largedim.gamma_ratio_example", || {
            // Gamma(2l+D+alpha)/Gamma(2l+D-1) = (2l+D-1)(2l+D)(2l+D+1)
            // at l = 1, alpha = 2, D = 100: 101 * 102 * 103.
            let exact = 101.0 * 102.0 * 103.0;
            let expansion = gamma_ratio_expansion(1, 2.0, 100, 2)?;
            let dev = rel_dev(expansion, exact);
            Ok(warn(
                "largedim.gamma_ratio_example",
                fmt_dev(dev),
                "advertised <= 1e-3 at (l, alpha, D) = (1, 2, 100)",
                "the two-order expansion leaves 1.04e-3: its own next term is \
                 O((alpha/D)^3); the advertised tolerance is off by that term",
            ))
        }),
        run("largedim.fk_asymptotic_halving", || {
            let mut ratios = Vec::new();
            for k in [2usize, 5] {
                let res = |nu: f64| -> Result<f64> {
                    Ok((fk_direct(k, nu, 1.0)? - crate::largedim::fk_asymptotic(k, nu, 1.0)).abs())
                };
                ratios.push(res(100.0)? / res(200.0)?);
            }
            let ok = ratios.iter().all(|r| (3.0..=5.5).contains(r));
            Ok(check(
                "largedim.fk_asymptotic_halving",
                ok,
                format!("doubling ratios {ratios:.3?}"),
                "each in [3.0, 5.5] (O(1/nu^2) remainder)",
                "f_k minus its large-nu expansion shrinks quadratically",
            ))
        }),
    ]
}

// --- Rydberg ---

fn rydberg_suite() -> Vec<Check> {
    vec![
        run("rydberg.fixed_d_position", || {
            let mut worst = 0.0f64;
            for alpha in [-1.0, 0.5, 1.0, 2.0] {
                let st = state(500, 0, 3, 1.0);
                let asym = pos_rydberg_fixed_d(&st, alpha)?.value;
                let exact = position_expectation(&st, alpha)?.value;
                worst = worst.max(rel_dev(asym, exact));
            }
            Ok(check(
                "rydberg.fixed_d_position",
                worst <= 1e-2,
                fmt_dev(worst),
                "<= 1e-2 at n = 500, D = 3",
                "alpha = 1 and -1 are exact; alpha = 0.5 leaves O(1/n^2)",
            ))
        }),
        run("rydberg.fixed_d_momentum", || {
            let mut worst = 0.0f64;
            for alpha in [0.5, 1.0, 1.5] {
                let st = state(500, 0, 3, 1.0);
                let asym = mom_rydberg_fixed_d(&st, alpha)?.value;
                let exact = momentum_expectation(&st, alpha)?.value;
                worst = worst.max(rel_dev(asym, exact));
            }
            Ok(check(
                "rydberg.fixed_d_momentum",
                worst <= 1e-2,
                fmt_dev(worst),
                "<= 1e-2 at n = 500, D = 3",
                "interior of the (-1, 3) window decays at least like 1/n",
            ))
        }),
        run("rydberg.fixed_d_momentum_edge", || {
            let st300 = state(300, 0, 3, 1.0);
            let st500 = state(500, 0, 3, 1.0);
            let dev = |st: &HydrogenicState| -> Result<f64> {
                Ok(rel_dev(mom_rydberg_fixed_d(st, 2.5)?.value, momentum_expectation(st, 2.5)?.value))
            };
            let d300 = dev(&st300)?;
            let d500 = dev(&st500)?;
            Ok(check(
                "rydberg.fixed_d_momentum_edge",
                d500 <= 1e-2,
                format!("relative deviation {d300:.3e} (n = 300) -> {d500:.3e} (n = 500)"),
                "<= 1e-2 at n = 500",
                "alpha = 2.5 sits at distance 1/2 from the window edge, so the \
                 deviation decays like n^(-1/2) and has not reached 1% by n = 500",
            ))
        }),
        run("rydberg.measure_normalization", || {
            let mut worst = 0.0f64;
            for lam in [0.0, 0.5, 1.0, 2.0, 10.0] {
                let ratio = RatioLambda::new(lam)?;
                worst = worst.max((equilibrium_position(ratio).total_mass()? - 1.0).abs());
                worst = worst.max((equilibrium_momentum(ratio).total_mass()? - 1.0).abs());
            }
            Ok(check(
                "rydberg.measure_normalization",
                worst <= 1e-8,
                format!("max |mass - 1| = {worst:.3e}"),
                "<= 1e-8 for lambda in {0, 0.5, 1, 2, 10}",
                "both equilibrium measures are probability measures",
            ))
        }),
        run("rydberg.position_moment_identity", || {
            let mut worst = 0.0f64;
            for lam in [0.5, 1.0, 2.0] {
                let ratio = RatioLambda::new(lam)?;
                for alpha in [-1.0, 0.0, 1.0, 2.0] {
                    let (j_quad, _) = limiting_integrals(alpha, ratio)?;
                    let closed = position_moment_closed(alpha, ratio)?;
                    worst = worst.max(rel_dev(j_quad, closed));
                }
                let (j_m1, _) = limiting_integrals(-1.0, ratio)?;
                worst = worst.max((j_m1 - 1.0).abs());
            }
            Ok(check(
                "rydberg.position_moment_identity",
                worst <= 1e-8,
                fmt_dev(worst),
                "<= 1e-8",
                "quadrature over the position measure vs the 2F1 closed form; \
                 J(-1) = 1 exactly since ab = lambda^2",
            ))
        }),
        run("rydberg.momentum_limit_identity", || {
            let mut worst = 0.0f64;
            for lam in [0.0, 0.5, 1.0, 2.0, 10.0] {
                let (_, t0) = limiting_integrals(0.0, RatioLambda::new(lam)?)?;
                worst = worst.max((t0 - 1.0).abs());
            }
            for lam in [0.5, 1.0, 2.0] {
                let ratio = RatioLambda::new(lam)?;
                let xi = equilibrium_momentum(ratio).support_high;
                let u = 2.0 * xi / (1.0 + xi);
                for alpha in [0.0, 1.0, 2.0] {
                    let lhs = crate::rydberg::euler_f1_integral(alpha, u)?;
                    let rhs = std::f64::consts::PI / 8.0
                        * appell_f1(1.5, 1.0 - alpha / 2.0, alpha / 2.0, 3.0, u, -u)?;
                    worst = worst.max(rel_dev(lhs, rhs));
                }
            }
            Ok(check(
                "rydberg.momentum_limit_identity",
                worst <= 1e-8,
                fmt_dev(worst),
                "<= 1e-8",
                "T(0) = 1 for every lambda; Euler integral vs Appell F1 reduction",
            ))
        }),
        run("rydberg.nl_gap_self_test", || {
            // The integral itself must hit its two exact values.
            let gap = state(500, 498, 3, 1.0);
            let i0 = mom_rydberg_fixed_nl_gap(&gap, 0.0)?.value;
            let i2 = mom_rydberg_fixed_nl_gap(&gap, 2.0)?.value * 500.0 * 500.0; // eta = 500
            // Exact scaled moment on a genuine fixed-gap sequence (n - l = 2).
            let s_gap = momentum_expectation(&gap, 1.0)?.value * 500.0;
            // Exact scaled moment on the lambda = 1 ray (n = 2l + 2), eta = 202.
            let ray = state(202, 100, 3, 1.0);
            let s_ray = momentum_expectation(&ray, 1.0)?.value * 202.0;
            let law = mom_rydberg_fixed_nl_gap(&ray, 1.0)?.value * 202.0;
            let machinery_ok = (i0 - 1.0).abs() <= 1e-10 && (i2 - 1.0).abs() <= 1e-10;
            let regime_flipped = (s_gap - 1.0).abs() <= 1e-2 && rel_dev(s_ray, law) <= 2e-3;
            if !(machinery_ok && regime_flipped) {
                return Ok(check(
                    "rydberg.nl_gap_self_test",
                    false,
                    format!(
                        "alpha = 0 gives {i0:.12}, alpha = 2 gives {i2:.12}; \
                         scaled fixed-gap moment {s_gap:.6}, lambda = 1 ray {s_ray:.6} vs law {law:.6}"
                    ),
                    "integral == 1 at alpha in {0, 2}; regime measurements as adjudicated",
                    "either the gap integral or the regime measurements moved",
                ));
            }
            Ok(warn(
                "rydberg.nl_gap_self_test",
                format!(
                    "at alpha = 1 the law gives {law:.6} scaled; exact scaled moments: \
                     {s_gap:.6} with n - l = 2 fixed (n = 500), {s_ray:.6} on n = 2l + 2 (n = 202)"
                ),
                "the printed regime label (n - l fixed) must track its own law",
                "the printed gap law does not describe fixed-gap states, whose scaled \
                 moments tend to 1; it is the arcsine band law of the lambda = 1 ray \
                 (n = 2l + 2), which it matches to O(1/n). alpha in {0, 2} are exact \
                 in both regimes, hiding the swap",
            ))
        }),
        run("rydberg.printed_position_self_test", || {
            let st = state(100, 0, 3, 1.0);
            let v = pos_rydberg_large_d(&st, 0.0, RatioLambda::new(0.5)?)?.value;
            Ok(warn(
                "rydberg.printed_position_self_test",
                format!("alpha = 0 evaluates to {v:.6}"),
                "a moment formula must give 1 at alpha = 0",
                "the printed joint large-(n, D) position formula fails its own \
                 normalization self-test; the measure-route normalization passes",
            ))
        }),
        run("rydberg.printed_momentum_gamma_factor", || {
            let st = state(40, 0, 30, 1.0);
            let v = mom_rydberg_large_d(&st, 0.0, RatioLambda::new(0.5)?)?.value;
            Ok(warn(
                "rydberg.printed_momentum_gamma_factor",
                format!("alpha = 0 evaluates to {v:.3e}"),
                "a moment formula must give 1 at alpha = 0",
                "the printed joint large-(n, D) momentum formula carries a squared \
                 Gamma ratio (9.46e-34 at D = 30) that cannot belong to a finite moment",
            ))
        }),
    ]
}

// --- uncertainty ---

fn uncertainty_suite() -> Vec<Check> {
    vec![
        run("uncertainty.product_identity", || {
            let mut all_equal = true;
            for n in 1..=4u32 {
                for l in 0..n {
                    for d in [3u32, 10, 60] {
                        let st = state(n, l, d, 3.0);
                        let product = position_expectation_rational(&st, 2)?
                            * momentum_expectation_rational(&st, 2)?;
                        all_equal &= product == product22_closed_rational(&st);
                    }
                }
            }
            Ok(check(
                "uncertainty.product_identity",
                all_equal,
                format!("exact rational equality: {all_equal}"),
                "<r^2><p^2> == (5 eta^2 + 1 - 3L(L+1))/2, exactly",
                "Z cancels; verified in BigRational over n <= 4, D in {3,10,60}",
            ))
        }),
        run("uncertainty.bounds_hold", || {
            let mut min_margin = f64::INFINITY;
            for n in 1..=6u32 {
                for l in 0..n {
                    for d in [3u32, 25, 100] {
                        for z in [1.0, 2.0, 10.0] {
                            let rec = check_heisenberg_bound(&state(n, l, d, z));
                            if !rec.satisfied {
                                min_margin = f64::NEG_INFINITY;
                            }
                            min_margin = min_margin.min(rec.margin);
                        }
                    }
                }
            }
            Ok(check(
                "uncertainty.bounds_hold",
                min_margin >= 0.0,
                format!("minimum margin {min_margin:.6e}"),
                ">= 0 over n <= 6, D in {3,25,100}, Z in {1,2,10}",
                "<r^2><p^2> >= (D/2 + l)^2 on the full sweep",
            ))
        }),
        run("uncertainty.ground_margin_exact", || {
            let mut ok = true;
            for d in [8u32, 100] {
                let rec = check_heisenberg_bound(&state(1, 0, d, 1.0));
                ok &= rec.margin == f64::from(d) / 4.0;
            }
            Ok(check(
                "uncertainty.ground_margin_exact",
                ok,
                format!("margin equals D/4 exactly: {ok}"),
                "ground-state refined margin == D/4, bit-exact",
                "product D^2/4 (1 + 1/D) minus bound D^2/4",
            ))
        }),
        run("uncertainty.log_sum_reference", || {
            let rec = log_uncertainty_sum(&state(1, 0, 3, 1.0))?;
            let margin_true = 7.0 / 6.0 + std::f64::consts::LN_2 - std::f64::consts::PI / 2.0;
            let d = (rec.margin - margin_true).abs();
            Ok(check(
                "uncertainty.log_sum_reference",
                d <= 1e-12 && rec.satisfied,
                format!("margin {:.17}", rec.margin),
                "== 7/6 + ln 2 - pi/2 within 1e-12",
                "<ln r> + <ln p> minus psi((D+2l)/4) - ln 2 at the ground state",
            ))
        }),
        run("uncertainty.printed_margin_constant", || {
            let rec = log_uncertainty_sum(&state(1, 0, 3, 1.0))?;
            Ok(warn(
                "uncertainty.printed_margin_constant",
                format!("published 0.2890232 deviates by {:.3e}", (rec.margin - 0.2890232).abs()),
                "published constant should match 7/6 + ln 2 - pi/2 = 0.28901752...",
                "the published margin carries a 5.7e-6 arithmetic slip, larger than \
                 its own stated 1e-6 tolerance",
            ))
        }),
        run("uncertainty.log_sum_z_invariance", || {
            let a = log_uncertainty_sum(&state(3, 1, 7, 1.0))?;
            let b = log_uncertainty_sum(&state(3, 1, 7, 7.0))?;
            let d = (a.product_value - b.product_value).abs();
            Ok(check(
                "uncertainty.log_sum_z_invariance",
                d <= 1e-13,
                format!("|sum(Z=1) - sum(Z=7)| = {d:.3e}"),
                "<= 1e-13",
                "the -ln Z and +ln Z dilation terms cancel in the sum",
            ))
        }),
        run("uncertainty.large_d_log_sum", || {
            let mut worst = 0.0f64;
            for d in [100u32, 400, 1600] {
                let st = state(1, 0, d, 1.0);
                let exact = log_uncertainty_sum(&st)?.product_value;
                let asym = log_uncertainty_sum_large_d(&st).value;
                worst = worst.max((exact - asym).abs() * f64::from(d) * f64::from(d));
            }
            Ok(check(
                "uncertainty.large_d_log_sum",
                worst <= 10.0,
                format!("max D^2-scaled error {worst:.3}"),
                "bounded (O(1/D^2) residual)",
                "ln(D/2) + (n + l - 5/2)/D against the exact logarithmic sum",
            ))
        }),
    ]
}

// --- entropy ---

fn entropy_suite() -> Vec<Check> {
    vec![
        run("entropy.shannon_references", || {
            let pi = std::f64::consts::PI;
            let s_pos = entropy_quadrature(&state(1, 0, 3, 1.0), EntropyKind::Shannon, 1.0, Space::Position)?.value;
            let s_mom = entropy_quadrature(&state(1, 0, 3, 1.0), EntropyKind::Shannon, 1.0, Space::Momentum)?.value;
            let worst = (s_pos - (3.0 + pi.ln()))
                .abs()
                .max((s_mom - (2.0 * pi.ln() + 5.0 * std::f64::consts::LN_2 - 10.0 / 3.0)).abs());
            Ok(check(
                "entropy.shannon_references",
                worst <= 1e-9,
                fmt_dev(worst),
                "<= 1e-9",
                "ground-state Shannon entropies: 3 + ln pi and 2 ln pi + 5 ln 2 - 10/3",
            ))
        }),
        run("entropy.w2_identities", || {
            let pi = std::f64::consts::PI;
            let w_pos = ln_entropic_moment(&state(1, 0, 3, 1.0), 2.0, Space::Position)?.exp();
            let w_mom = ln_entropic_moment(&state(1, 0, 3, 1.0), 2.0, Space::Momentum)?.exp();
            let worst = rel_dev(w_pos, 1.0 / (8.0 * pi)).max(rel_dev(w_mom, 33.0 / (16.0 * pi * pi)));
            Ok(check(
                "entropy.w2_identities",
                worst <= 1e-9,
                fmt_dev(worst),
                "<= 1e-9",
                "W_2 = 1/(8 pi) in position and 33/(16 pi^2) in momentum for the ground state",
            ))
        }),
        run("entropy.bounds_hold", || {
            let mut all = true;
            for n in 1..=2u32 {
                for d in [3u32, 10] {
                    let st = state(n, 0, d, 1.0);
                    for space in [Space::Position, Space::Momentum] {
                        all &= bound_shannon_upper(&st, 2.0, space)?.satisfied == Some(true);
                        all &= bound_renyi_upper(&st, 2.0, 2, MomentSign::Plus, space)?.satisfied
                            == Some(true);
                        all &= bound_tsallis_lower(&st, 2.0, 2, MomentSign::Plus, space)?.satisfied
                            == Some(true);
                    }
                }
            }
            Ok(check(
                "entropy.bounds_hold",
                all,
                format!("all bounds satisfied: {all}"),
                "Shannon upper, Renyi upper, Tsallis lower on the sample sweep",
                "n <= 2, D in {3, 10}, both spaces, q = 2, alpha = 2",
            ))
        }),
        run("entropy.alpha1_saturation", || {
            let mut worst = 0.0f64;
            for d in [3u32, 10] {
                let r = bound_shannon_upper(&state(1, 0, d, 1.0), 1.0, Space::Position)?;
                worst = worst.max((r.bound_value - r.entropy.expect("l = 0").value).abs());
            }
            Ok(check(
                "entropy.alpha1_saturation",
                worst <= 1e-8,
                format!("max bound-entropy gap {worst:.3e}"),
                "<= 1e-8",
                "the 1s radial density is the exponential maximizer, so the \
                 alpha = 1 position bound is tight in every dimension",
            ))
        }),
        run("entropy.renyi_bound_degeneracy", || {
            let st = state(1, 0, 3, 1.0);
            let shannon_bound = bound_shannon_upper(&st, 2.0, Space::Position)?.bound_value;
            let renyi = bound_renyi_upper(&st, 1.0 + 1e-4, 2, MomentSign::Plus, Space::Position)?;
            let gap = rel_dev(renyi.bound_value, shannon_bound);
            let rejects = bound_renyi_upper(&st, 1.0 - 1e-4, 2, MomentSign::Plus, Space::Position).is_err();
            Ok(check(
                "entropy.renyi_bound_degeneracy",
                gap <= 1e-3 && rejects,
                format!("relative gap {gap:.3e} at q = 1+1e-4; q < 1 rejected: {rejects}"),
                "<= 1e-3 from above; clean domain rejection from below",
                "for q < 1 the L1 brace has a negative base under a non-integer \
                 power and leaves the real domain",
            ))
        }),
        run("entropy.printed_a0_constant", || {
            let a = a0_constant(2.0, 3)?;
            Ok(warn(
                "entropy.printed_a0_constant",
                format!("published 2.6090604 deviates by {:.3e}", (a - 2.6090604).abs()),
                "published constant should equal the direct formula 2.60889716...",
                "1.6e-4 arithmetic slip in the published A0(2, 3)",
            ))
        }),
        run("entropy.asymptotic_shannon_bound", || {
            let st = state(1, 0, 1000, 1.0);
            let exact = bound_shannon_upper(&st, 2.0, Space::Position)?.bound_value;
            let t = asymptotic_bound_terms(&st, 2.0, 2.0)?;
            let gap = rel_dev(t.shannon_upper_assembled, exact);
            Ok(check(
                "entropy.asymptotic_shannon_bound",
                gap <= 2e-2,
                format!("relative gap {gap:.3e} at D = 1000"),
                "<= 2e-2",
                "A0-asymptotic plus the asymptotic log-moment vs the exact bound",
            ))
        }),
        run("entropy.printed_shannon_asymptote", || {
            let st = state(1, 0, 1000, 1.0);
            let exact = bound_shannon_upper(&st, 2.0, Space::Position)?.bound_value;
            let t = asymptotic_bound_terms(&st, 2.0, 2.0)?;
            Ok(warn(
                "entropy.printed_shannon_asymptote",
                format!("relative gap {:.3} at D = 1000", rel_dev(t.shannon_upper_printed, exact)),
                "the one-line form should track the exact bound",
                "its 3D log D leading term is double the (3/2) D log D implied by \
                 its own assembly",
            ))
        }),
        run("entropy.renyi_asymptote_lines", || {
            let st = state(1, 0, 2000, 1.0);
            let t = asymptotic_bound_terms(&st, 2.0, 2.0)?;
            let gap = rel_dev(t.renyi_upper_printed, t.renyi_upper_assembled);
            Ok(check(
                "entropy.renyi_asymptote_lines",
                gap <= 2e-2,
                format!("relative gap {gap:.3e} at D = 2000"),
                "<= 2e-2",
                "the two printed lines agree to relative precision but differ by a \
                 constant absolute offset ~1.652, documented as a transcription artifact",
            ))
        }),
        run("entropy.printed_tsallis_constant", || {
            let st = state(2, 0, 60, 1.0);
            let t = asymptotic_bound_terms(&st, 2.0, 2.0)?;
            let ln_w2 = ln_entropic_moment(&st, 2.0, Space::Position)?;
            // The exact-moment lower route must hold; the printed asymptotic
            // constant is expected to overshoot the quantity it bounds.
            let exact_route =
                bound_tsallis_lower(&st, 2.0, 2, MomentSign::Plus, Space::Position)?;
            let printed = t.tsallis_rhs_ln_printed.unwrap_or(f64::NEG_INFINITY);
            Ok(Check {
                id: "entropy.printed_tsallis_constant".into(),
                status: if exact_route.satisfied == Some(true) { Status::Warn } else { Status::Fail },
                observed: format!(
                    "printed ln-RHS {printed:.1} vs exact ln W_2 {ln_w2:.1}; \
                     exact-moment route bound ln {:.1}",
                    exact_route.bound_value.ln()
                ),
                required: "a lower bound must sit below the exact ln W_2".into(),
                note: "the printed A5 constant (with its A1-as-base power) exceeds the \
                       exact W_2 it claims to bound; the L1 moment route holds"
                    .into(),
            })
        }),
    ]
}
