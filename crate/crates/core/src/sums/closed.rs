use crate::error::{Error, Result};
use crate::specfun::{ratio_i, ratio_j, struve_h_pair, Order, DEFAULT_DIGITS};

fn check_point(x: f64) -> Result<()> {
    if x > 0.0 && x.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(format!(
            "closed forms need finite x > 0, got {x}"
        )))
    }
}

/// Σ_n 1/(j_{ν,n}² − x²) = J_{ν+1}(x) / (2x J_ν(x)).
pub fn closed_minus_sum(order: Order, x: f64) -> Result<f64> {
    check_point(x)?;
    Ok(ratio_j(order, x)? / (2.0 * x))
}

/// Σ_n 1/(j_{ν,n}² + x²) = I_{ν+1}(x) / (2x I_ν(x)).
pub fn closed_plus_sum(order: Order, x: f64) -> Result<f64> {
    check_point(x)?;
    Ok(ratio_i(order, x)? / (2.0 * x))
}

/// Σ_n 1/(j_{ν,n}⁴ − x⁴) = (J_{ν+1}/J_ν − I_{ν+1}/I_ν) / (4x³).
pub fn closed_quartic_sum(order: Order, x: f64) -> Result<f64> {
    check_point(x)?;
    Ok((ratio_j(order, x)? - ratio_i(order, x)?) / (4.0 * x.powi(3)))
}

/// Σ_n 1/(h_{ν,n}² − x²) = [(2ν+1)/x − **H**_{ν−1}(x)/**H**_ν(x)] / (2x).
pub fn struve_ml_sum(order: Order, x: f64) -> Result<f64> {
    check_point(x)?;
    let order = Order::struve(order.nu)?;
    let (h, h_prev) = struve_h_pair(order, x, DEFAULT_DIGITS)?;
    if h.abs() <= 1e-12 * h_prev.abs() {
        return Err(Error::Pole(format!(
            "x = {x} is within about 1e-12 of a zero of H_{}",
            order.nu
        )));
    }
    Ok(((2.0 * order.nu + 1.0) / x - h_prev / h) / (2.0 * x))
}
