//! Heisenberg-like and logarithmic uncertainty products with their
//! universal lower bounds.
//!
//! The generalized product ⟨r^α⟩⟨p^β⟩ is always assembled from the two
//! audited expectation routines; the one-line combined formula for
//! α = β = 2 is kept only as a redundant cross-check, with the product of
//! parts authoritative on any disagreement.

use crate::error::{Error, Result};
use crate::hydrogenic::{
    eta_rational, grand_l_rational, log_momentum_expectation, log_position_expectation,
    momentum_expectation, position_expectation, Evaluation, HydrogenicState, Method,
};
use crate::largedim::{
    circular_momentum_large_d, circular_position_large_d, momentum_large_d, position_large_d,
};
use crate::specfun::digamma;
use crate::{rational_to_f64, Rational};
use num_bigint::BigInt;
use num_traits::One;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundKind {
    /// D²/4, the dimensional Kennard floor.
    Kennard,
    /// (D/2 + l)², the angular-momentum-refined floor.
    CentralRefined,
    /// ψ(D/4) + log 2 for the logarithmic sum.
    LogGeneral,
    /// ψ((D+2l)/4) + log 2.
    LogRefined,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UncertaintyRecord {
    pub product_value: f64,
    pub bound: f64,
    pub margin: f64,
    pub bound_kind: BoundKind,
    pub satisfied: bool,
}

impl UncertaintyRecord {
    fn assemble(product_value: f64, bound: f64, bound_kind: BoundKind) -> Self {
        let margin = product_value - bound;
        UncertaintyRecord {
            product_value,
            bound,
            margin,
            bound_kind,
            satisfied: margin >= -1e-12 * bound.abs().max(1.0),
        }
    }
}

/// ⟨r²⟩⟨p²⟩ in closed rational form: (5η² + 1 − 3L(L+1))/2. Z-free.
pub fn product22_closed_rational(state: &HydrogenicState) -> Rational {
    let eta = eta_rational(state);
    let gl = grand_l_rational(state);
    let five = Rational::from_integer(BigInt::from(5));
    let three = Rational::from_integer(BigInt::from(3));
    let two = Rational::from_integer(BigInt::from(2));
    (five * &eta * &eta + Rational::one() - three * &gl * (&gl + Rational::one())) / two
}

/// Generalized product ⟨r^α⟩⟨p^β⟩ from the audited expectation routines.
pub fn heisenberg_product_exact(
    state: &HydrogenicState,
    alpha: f64,
    beta: f64,
) -> Result<Evaluation> {
    let r = position_expectation(state, alpha)?;
    let p = momentum_expectation(state, beta)?;
    let value = r.value * p.value;
    if alpha == 2.0 && beta == 2.0 {
        let closed = rational_to_f64(&product22_closed_rational(state));
        if ((value - closed) / closed).abs() > 1e-10 {
            return Err(Error::numeric(format!(
                "alpha = beta = 2 cross-check failed: product {value:.15e} vs closed {closed:.15e}"
            )));
        }
    }
    Ok(Evaluation {
        value,
        method: Method::Exact,
        validity: format!("{}; {}", r.validity, p.validity),
    })
}

/// Printed leading-order product (D²/4Z)^α (2Z/D)^β with the three 1/D
/// correction factors; circular states route through their own printed
/// specialization.
pub fn heisenberg_product_large_d(
    state: &HydrogenicState,
    alpha: f64,
    beta: f64,
) -> Result<Evaluation> {
    let circular = state.l + 1 == state.n;
    let (r, p) = if circular {
        (
            circular_position_large_d(state, alpha)?,
            circular_momentum_large_d(state, beta)?,
        )
    } else {
        (position_large_d(state, alpha)?, momentum_large_d(state, beta)?)
    };
    Ok(Evaluation {
        value: r.value * p.value,
        method: Method::LargeD,
        validity: if circular {
            "circular printed product; momentum factor inherits the (2n-1) coefficient".into()
        } else {
            "printed three-correction product, O(1/D) residual".into()
        },
    })
}

/// Both variance-product floors; the refined (D/2 + l)² record is the
/// headline result.
pub fn heisenberg_margins(state: &HydrogenicState) -> (UncertaintyRecord, UncertaintyRecord) {
    let product = rational_to_f64(&product22_closed_rational(state));
    let d = f64::from(state.d);
    let l = f64::from(state.l);
    let kennard = UncertaintyRecord::assemble(product, d * d / 4.0, BoundKind::Kennard);
    let refined = UncertaintyRecord::assemble(
        product,
        (d / 2.0 + l) * (d / 2.0 + l),
        BoundKind::CentralRefined,
    );
    (kennard, refined)
}

pub fn check_heisenberg_bound(state: &HydrogenicState) -> UncertaintyRecord {
    heisenberg_margins(state).1
}

/// Both logarithmic floors for ⟨log r⟩ + ⟨log p⟩; l-refined record first.
pub fn log_uncertainty_margins(
    state: &HydrogenicState,
) -> Result<(UncertaintyRecord, UncertaintyRecord)> {
    let sum = log_position_expectation(state)?.value + log_momentum_expectation(state)?.value;
    let d = f64::from(state.d);
    let l = f64::from(state.l);
    let ln2 = std::f64::consts::LN_2;
    let general =
        UncertaintyRecord::assemble(sum, digamma(d / 4.0)? + ln2, BoundKind::LogGeneral);
    let refined = UncertaintyRecord::assemble(
        sum,
        digamma((d + 2.0 * l) / 4.0)? + ln2,
        BoundKind::LogRefined,
    );
    Ok((refined, general))
}

pub fn log_uncertainty_sum(state: &HydrogenicState) -> Result<UncertaintyRecord> {
    Ok(log_uncertainty_margins(state)?.0)
}

/// Large-D logarithmic sum log(D/2) + (n + l − 5/2)/D; the ground state
/// reduces to log(D/2) − 3/(2D).
pub fn log_uncertainty_sum_large_d(state: &HydrogenicState) -> Evaluation {
    let d = f64::from(state.d);
    let value =
        (d / 2.0).ln() + (f64::from(state.n) + f64::from(state.l) - 2.5) / d;
    Evaluation {
        value,
        method: Method::LargeD,
        validity: "O(1/D^2) residual".into(),
    }
}
