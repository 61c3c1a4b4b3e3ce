//! Named generating functions and their coefficientwise verification.

mod lemmas;
mod oc;
mod products;
mod verify;

use thiserror::Error;

pub use lemmas::{
    d11_bivariate, d11_series, d20_bivariate, d20_series, specialize, thm33_checks,
};
pub use oc::{oc_closed, oc_forms_check, oc_two_sum, oc_vs_enumeration, OcRow, OcTable};
pub use products::{
    borodin_factors, borodin_from_factors, borodin_series, eq23_check, f11_bivariate,
    f11_closed, f20_closed, s_range, to_u64, BorodinFactors,
};
pub use verify::{run_check, verify_all, VerifyConfig, CHECK_NAMES};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdentityError {
    #[error("s({i},{j}) is out of range for a profile with {k} entries")]
    IndexOutOfRange { i: usize, j: usize, k: usize },
    #[error("unknown check {0:?}")]
    UnknownCheck(String),
}
