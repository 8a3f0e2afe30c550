//! Scalar special functions: Bernoulli numbers, Hurwitz zeta with its
//! `s`-derivative, log-gamma, and the Stieltjes / eta constants.

mod bernoulli;
mod gamma;
mod hurwitz;
mod stieltjes;

pub use bernoulli::{bernoulli_f64, bernoulli_numbers, MAX_BERNOULLI_INDEX};
pub use gamma::log_gamma;
pub use hurwitz::{
    hurwitz_engine, hurwitz_engine_regular, hurwitz_error_estimate, hurwitz_zeta, hurwitz_zeta_ds,
    riemann_zeta, EulerMaclaurinConfig, HurwitzEvaluation, MAX_ORDER,
};
pub use stieltjes::{
    eta_constants, stieltjes_gamma, stieltjes_gamma_raw, ConstantsTable, TABLE_BERNOULLI_MAX,
};
