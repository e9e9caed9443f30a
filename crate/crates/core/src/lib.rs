//! Zeros of J_ν, **H**_ν and K_{n+1/2}, reciprocal-power sums over those
//! zeros, and numerical verification of the identities those sums satisfy.

pub mod cli;
pub mod error;
pub mod identities;
pub mod numkernel;
pub mod specfun;
pub mod sums;
pub mod zeros;

pub use error::{Error, Result};
