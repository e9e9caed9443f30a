use std::f64::consts::PI;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::specfun::{bessel_j, inverse_ratio_j, Order, DEFAULT_DIGITS};

use super::{Family, ZeroTable};

const MAX_NEWTON_STEPS: usize = 50;
const MAX_STEP: f64 = 1.0;
/// Consecutive zeros of J_ν are always further apart than this.
const MIN_GAP: f64 = 1.0;

/// First-order McMahon approximation β − (4ν²−1)/(8β), β = (n + ν/2 − 1/4)π.
pub fn mcmahon_guess(order: Order, n: usize) -> f64 {
    let nu = order.nu;
    let beta = (n as f64 + nu / 2.0 - 0.25) * PI;
    beta - (4.0 * nu * nu - 1.0) / (8.0 * beta)
}

/// Half-width of the sign-change check around a refined zero.
pub(super) fn check_width(z: f64, abs_tol: f64) -> f64 {
    abs_tol.max(16.0 * f64::EPSILON * z)
}

/// Newton on the logarithmic derivative: with g = J_ν/J_{ν+1},
/// J_ν/J_ν' = g/(ν g/x − 1), so no function values are needed.
fn refine(order: Order, n: usize, abs_tol: f64) -> Result<f64> {
    let nu = order.nu;
    let mut x = mcmahon_guess(order, n);
    if !(x > 0.0) {
        x = 0.5;
    }
    for _ in 0..MAX_NEWTON_STEPS {
        let g = inverse_ratio_j(order, x)?;
        let step = (g / (1.0 - nu * g / x)).clamp(-MAX_STEP, MAX_STEP);
        let next = if x + step > 0.0 { x + step } else { x / 2.0 };
        let settled = (next - x).abs() <= (1e-3 * abs_tol).max(4.0 * f64::EPSILON * x);
        x = next;
        if settled {
            return Ok(x);
        }
    }
    Err(Error::Numerical(format!(
        "Newton iteration for zero {n} of J_{nu} did not converge in {MAX_NEWTON_STEPS} steps"
    )))
}

fn verify_sign_change(order: Order, n: usize, z: f64, abs_tol: f64) -> Result<()> {
    let w = check_width(z, abs_tol);
    let below = bessel_j(order, z - w, DEFAULT_DIGITS)?;
    let above = bessel_j(order, z + w, DEFAULT_DIGITS)?;
    if below * above <= 0.0 {
        Ok(())
    } else {
        Err(Error::Numerical(format!(
            "zero {n} of J_{} at {z} shows no sign change over +-{w}",
            order.nu
        )))
    }
}

/// The first `count` positive zeros of J_ν, refined from McMahon's guesses
/// and each confirmed by a sign change of J_ν.
pub fn find_bessel_zeros(order: Order, count: usize, abs_tol: f64) -> Result<ZeroTable> {
    if count == 0 {
        return Err(Error::Domain("zero count must be at least 1".into()));
    }
    bessel_zeros_range(order, 1, count, abs_tol)
        .and_then(|zeros| ZeroTable::new(Family::BesselJ, order.nu, zeros, abs_tol))
}

/// Zeros `first..=last`, each found independently.
pub(super) fn bessel_zeros_range(
    order: Order,
    first: usize,
    last: usize,
    abs_tol: f64,
) -> Result<Vec<f64>> {
    let order = Order::bessel(order.nu)?;
    if first == 0 {
        return Err(Error::Domain("zero indices start at 1".into()));
    }
    if !(abs_tol > 0.0) {
        return Err(Error::Domain(format!(
            "abs_tol must be positive, got {abs_tol}"
        )));
    }
    let zeros = (first..=last)
        .into_par_iter()
        .map(|n| {
            let z = refine(order, n, abs_tol)?;
            verify_sign_change(order, n, z, abs_tol)?;
            Ok(z)
        })
        .collect::<Result<Vec<f64>>>()?;
    if let Some(i) = zeros.windows(2).position(|w| w[1] - w[0] < MIN_GAP) {
        return Err(Error::Ordering(format!(
            "zeros {} and {} of J_{} collide at {} and {}",
            first + i,
            first + i + 1,
            order.nu,
            zeros[i],
            zeros[i + 1]
        )));
    }
    Ok(zeros)
}
