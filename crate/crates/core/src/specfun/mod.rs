//! Special functions: log-gamma family, terminating hypergeometric sums,
//! Gauss ₂F₁, Appell F₁, and orthogonal polynomial recurrences.

pub mod gamma;
pub mod hyp;
pub mod poly;

pub use gamma::{
    digamma, log_beta_signed, log_factorial, log_gamma, log_gamma_ratio, log_gamma_signed,
    ln_surface_area, sin_pi, surface_area,
};
pub use hyp::{
    appell_f1, gauss_2f1, hyp_terminating, hyp_terminating_auto, hyp_terminating_rational,
    hyp_terminating_scalar, HypEval, HypSpec,
};
pub use poly::{gegenbauer, laguerre, ln_gegenbauer_norm, ln_laguerre_norm};
