use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::numkernel::{gamma, recip_gamma, ExtReal};

use super::series::{pochhammer_moments, pochhammer_series, series_precision};
use super::Order;

/// Lowest order the series path accepts: Γ(ν + 3/2) must stay finite.
const MIN_STRUVE_ORDER: f64 = -1.5;
/// Highest order accepted; the identities live on |ν| < 1/2.
const MAX_STRUVE_ORDER: f64 = 0.5;

fn check_struve(order: Order, x: f64) -> Result<()> {
    if !(order.nu > MIN_STRUVE_ORDER && order.nu <= MAX_STRUVE_ORDER) {
        return Err(Error::Domain(format!(
            "Struve order must lie in (-3/2, 1/2], got {}",
            order.nu
        )));
    }
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::Domain(format!(
            "Struve argument must be finite and > 0, got {x}"
        )));
    }
    Ok(())
}

/// **H**_ν(x) = (x/2)^{ν+1} Σ (−1)^m (x/2)^{2m} / (Γ(m+3/2) Γ(m+ν+3/2)).
pub fn struve_h(order: Order, x: f64, target_digits: u32) -> Result<f64> {
    check_struve(order, x)?;
    series(order, x, target_digits)
}

/// **H**_ν(x) and **H**_ν'(x) from one pass over the series, differentiated
/// term by term.
pub(crate) fn struve_h_and_deriv(order: Order, x: f64, target_digits: u32) -> Result<(f64, f64)> {
    check_struve(order, x)?;
    let precision = series_precision(x, target_digits, order.nu + 1.5);
    let three_halves = ExtReal::from_f64(1.5, precision)?;
    let shifted = &ExtReal::from_f64(order.nu, precision)? + &three_halves;
    let (sum, moment) = pochhammer_moments(x, &three_halves, &shifted, true, precision)?;
    let prefactor = (x / 2.0).powf(order.nu + 1.0) / (gamma(1.5)? * gamma(order.nu + 1.5)?);
    let (sum, moment) = (sum.to_f64(), moment.to_f64());
    Ok((
        prefactor * sum,
        prefactor * ((order.nu + 1.0) * sum + 2.0 * moment) / x,
    ))
}

fn series(order: Order, x: f64, target_digits: u32) -> Result<f64> {
    let precision = series_precision(x, target_digits, order.nu + 1.5);
    let three_halves = ExtReal::from_f64(1.5, precision)?;
    let shifted = &ExtReal::from_f64(order.nu, precision)? + &three_halves;
    let sum = pochhammer_series(x, &three_halves, &shifted, true, precision)?;
    let prefactor = (x / 2.0).powf(order.nu + 1.0) / (gamma(1.5)? * gamma(order.nu + 1.5)?);
    Ok(prefactor * sum.to_f64())
}

/// Right side of the inhomogeneous Struve equation, x^ν / (√π 2^{ν−1} Γ(ν+1/2)).
pub fn struve_forcing(nu: f64, x: f64) -> Result<f64> {
    Ok(x.powf(nu) / (PI.sqrt() * 2f64.powf(nu - 1.0) * gamma(nu + 0.5)?))
}

/// **H**_ν and **H**_{ν−1}, the latter from
/// **H**_{ν−1} + **H**_{ν+1} = (2ν/x)**H**_ν + (x/2)^ν / (√π Γ(ν+3/2)),
/// which stays regular where Γ(ν+1/2) has its pole.
pub fn struve_h_pair(order: Order, x: f64, target_digits: u32) -> Result<(f64, f64)> {
    check_struve(order, x)?;
    let nu = order.nu;
    let h = series(order, x, target_digits)?;
    let h_next = series(Order::new(nu + 1.0)?, x, target_digits)?;
    let forcing = (x / 2.0).powf(nu) / (PI.sqrt() * gamma(nu + 1.5)?);
    Ok((h, 2.0 * nu / x * h - h_next + forcing))
}

/// **H**_ν'(x) = **H**_{ν−1}(x) − (ν/x)·**H**_ν(x).
pub fn struve_h_deriv(order: Order, x: f64, target_digits: u32) -> Result<f64> {
    let (h, h_prev) = struve_h_pair(order, x, target_digits)?;
    Ok(h_prev - order.nu / x * h)
}

#[derive(Clone, Copy, Debug)]
pub struct StruveDerivs {
    pub h: f64,
    /// **H**_{ν−1}(x)
    pub h_prev: f64,
    pub dh: f64,
    pub d2h: f64,
}

/// Values and first two derivatives from the recurrences
/// x**H**_ν' + ν**H**_ν = x**H**_{ν−1} and
/// **H**_μ' = (μ/x)**H**_μ − **H**_{μ+1} + (x/2)^μ / (√π Γ(μ+3/2)) at μ = ν−1.
pub fn struve_h_derivs(order: Order, x: f64, target_digits: u32) -> Result<StruveDerivs> {
    let nu = order.nu;
    let (h, h_prev) = struve_h_pair(order, x, target_digits)?;
    let dh = h_prev - nu / x * h;
    let dh_prev =
        (nu - 1.0) / x * h_prev - h + (x / 2.0).powf(nu - 1.0) / PI.sqrt() * recip_gamma(nu + 0.5)?;
    let d2h = dh_prev + nu / (x * x) * h - nu / x * dh;
    Ok(StruveDerivs { h, h_prev, dh, d2h })
}
