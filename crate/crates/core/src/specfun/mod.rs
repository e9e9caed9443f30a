//! Bessel J_ν and I_ν, Struve **H**_ν, and the Macdonald polynomial H_n.
//!
//! Function values come from ascending series summed in [`ExtReal`] at a
//! precision chosen by [`required_precision`]; ratios J_{ν+1}/J_ν and
//! I_{ν+1}/I_ν come from continued fractions in machine precision.
//!
//! [`ExtReal`]: crate::numkernel::ExtReal
//! [`required_precision`]: crate::numkernel::required_precision

mod bessel;
mod hn;
mod series;
mod struve;

pub(crate) use bessel::inverse_ratio_j;
pub use bessel::{bessel_i, bessel_j, bessel_j_derivs, ratio_i, ratio_j, BesselJDerivs};
pub(crate) use hn::hn_eval_ext;
pub use hn::{hn_coeffs, hn_eval, hn_eval_derivs, macdonald_ratio, PolyCoeffs, MAX_HN_DEGREE};
pub(crate) use struve::struve_h_and_deriv;
pub use struve::{
    struve_forcing, struve_h, struve_h_deriv, struve_h_derivs, struve_h_pair, StruveDerivs,
};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default number of significant digits requested from series evaluations.
pub const DEFAULT_DIGITS: u32 = 17;

/// The order ν of a Bessel or Struve function.
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd, Serialize, Deserialize)]
pub struct Order {
    pub nu: f64,
}

impl Order {
    pub fn new(nu: f64) -> Result<Self> {
        if nu.is_finite() {
            Ok(Order { nu })
        } else {
            Err(Error::Domain(format!("order must be finite, got {nu}")))
        }
    }

    /// An order valid for J_ν and I_ν (ν > −1).
    pub fn bessel(nu: f64) -> Result<Self> {
        if nu.is_finite() && nu > -1.0 {
            Ok(Order { nu })
        } else {
            Err(Error::Domain(format!(
                "Bessel order must exceed -1, got {nu}"
            )))
        }
    }

    /// An order valid for the Struve zero sums (|ν| < 1/2).
    pub fn struve(nu: f64) -> Result<Self> {
        if nu.is_finite() && nu.abs() < 0.5 {
            Ok(Order { nu })
        } else {
            Err(Error::Domain(format!(
                "Struve order must satisfy |nu| < 1/2, got {nu}"
            )))
        }
    }
}
