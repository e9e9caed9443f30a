use crate::error::{Error, Result};
use crate::numkernel::{gamma, ExtReal};

use super::series::{pochhammer_series, series_precision};
use super::Order;

const CF_EPS: f64 = 1e-17;
const CF_TINY: f64 = 1e-300;

fn check_bessel_order(order: Order) -> Result<()> {
    if order.nu > -1.0 {
        Ok(())
    } else {
        Err(Error::Domain(format!(
            "Bessel order must exceed -1, got {}",
            order.nu
        )))
    }
}

fn check_argument(x: f64) -> Result<()> {
    if x >= 0.0 && x.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(format!(
            "argument must be finite and >= 0, got {x}"
        )))
    }
}

/// Value at x = 0 of (x/2)^ν · (series), or `None` when x > 0.
fn origin_value(nu: f64, x: f64) -> Result<Option<f64>> {
    if x > 0.0 {
        return Ok(None);
    }
    if nu == 0.0 {
        Ok(Some(1.0))
    } else if nu > 0.0 {
        Ok(Some(0.0))
    } else {
        Err(Error::Domain(format!(
            "order {nu} < 0 is singular at x = 0"
        )))
    }
}

fn ascending(order: Order, x: f64, target_digits: u32, alternating: bool) -> Result<f64> {
    check_bessel_order(order)?;
    check_argument(x)?;
    if let Some(v) = origin_value(order.nu, x)? {
        return Ok(v);
    }
    let precision = series_precision(x, target_digits, order.nu + 0.5);
    let one = ExtReal::from_i64(1, precision);
    let shifted = &ExtReal::from_f64(order.nu, precision)? + &one;
    let sum = pochhammer_series(x, &one, &shifted, alternating, precision)?;
    let prefactor = (x / 2.0).powf(order.nu) / gamma(order.nu + 1.0)?;
    Ok(prefactor * sum.to_f64())
}

/// J_ν(x) from its ascending series, summed at the precision needed to keep
/// `target_digits` digits despite cancellation.
pub fn bessel_j(order: Order, x: f64, target_digits: u32) -> Result<f64> {
    ascending(order, x, target_digits, true)
}

/// I_ν(x) from its ascending series.
pub fn bessel_i(order: Order, x: f64, target_digits: u32) -> Result<f64> {
    ascending(order, x, target_digits, false)
}

/// J_ν, J_{ν+1} and the derivatives that follow from the recurrences
/// x·J_ν' = ν·J_ν − x·J_{ν+1} and x·J_{ν+1}' = x·J_ν − (ν+1)·J_{ν+1}.
#[derive(Clone, Copy, Debug)]
pub struct BesselJDerivs {
    pub j: f64,
    pub j_next: f64,
    pub dj: f64,
    pub d2j: f64,
    pub dj_next: f64,
}

pub fn bessel_j_derivs(order: Order, x: f64, target_digits: u32) -> Result<BesselJDerivs> {
    if !(x > 0.0) {
        return Err(Error::Domain(format!("derivatives need x > 0, got {x}")));
    }
    let nu = order.nu;
    let j = bessel_j(order, x, target_digits)?;
    let j_next = bessel_j(Order::new(nu + 1.0)?, x, target_digits)?;
    let dj = nu / x * j - j_next;
    let dj_next = j - (nu + 1.0) / x * j_next;
    let d2j = -nu / (x * x) * j + nu / x * dj - dj_next;
    Ok(BesselJDerivs {
        j,
        j_next,
        dj,
        d2j,
        dj_next,
    })
}

/// Modified Lentz evaluation of `b_1 + s/(b_2 + s/(b_3 + ...))` with
/// `b_m = 2(ν+m)/x`.
fn lentz(nu: f64, x: f64, s: f64) -> Result<f64> {
    let b = |m: usize| 2.0 * (nu + m as f64) / x;
    let mut f = b(1);
    if f == 0.0 {
        f = CF_TINY;
    }
    let mut c = f;
    let mut d = 0.0;
    let max_iter = (10.0 * x).ceil() as usize + 1000;
    for m in 2..=max_iter {
        d = b(m) + s * d;
        if d == 0.0 {
            d = CF_TINY;
        }
        c = b(m) + s / c;
        if c == 0.0 {
            c = CF_TINY;
        }
        d = 1.0 / d;
        let delta = c * d;
        f *= delta;
        if (delta - 1.0).abs() < CF_EPS {
            return Ok(f);
        }
    }
    Err(Error::Numerical(format!(
        "continued fraction at nu = {nu}, x = {x} did not converge in {max_iter} terms"
    )))
}

/// J_ν(x)/J_{ν+1}(x) by continued fraction. Finite at zeros of J_ν, which
/// is what the Newton iteration on the logarithmic derivative needs.
pub(crate) fn inverse_ratio_j(order: Order, x: f64) -> Result<f64> {
    check_bessel_order(order)?;
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::Domain(format!("ratio needs finite x > 0, got {x}")));
    }
    lentz(order.nu, x, -1.0)
}

/// J_{ν+1}(x)/J_ν(x) by continued fraction.
pub fn ratio_j(order: Order, x: f64) -> Result<f64> {
    let inverse = inverse_ratio_j(order, x)?;
    if inverse.abs() < 1e-12 {
        return Err(Error::Pole(format!(
            "x = {x} is within 1e-12 of a zero of J_{}",
            order.nu
        )));
    }
    Ok(1.0 / inverse)
}

/// I_{ν+1}(x)/I_ν(x) by continued fraction; lies in (0, 1).
pub fn ratio_i(order: Order, x: f64) -> Result<f64> {
    check_bessel_order(order)?;
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::Domain(format!("ratio needs finite x > 0, got {x}")));
    }
    Ok(1.0 / lentz(order.nu, x, 1.0)?)
}
