use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::numkernel::{ComplexVal, ExtComplex};
use crate::specfun::{hn_coeffs, hn_eval_ext, PolyCoeffs, MAX_HN_DEGREE};

use super::ComplexZeroSet;

const MAX_SWEEPS: usize = 200;
/// Relative correction below which the sweeps stop; the polish takes over
/// from there.
const SWEEP_TOL: f64 = 1e-10;
/// The sweeps keep roots in binary64, which puts a floor under the
/// corrections. Below this level, sweeps that stop improving end the iteration.
const NOISE_TOL: f64 = 1e-6;
const STALL_SWEEPS: usize = 5;
const POLISH_STEPS: usize = 20;
/// Working bits for evaluating H_n. Coefficients of H_60 reach about 2^270
/// and the terms near a root cancel by a similar amount.
const WORKING_PRECISION: u32 = 1024;

/// p(z)/p'(z) from the exact coefficients. Near the roots of H_n the
/// terms cancel by far more than binary64 can absorb once n passes about 20.
fn newton_correction(p: &PolyCoeffs, z: ComplexVal) -> Result<ComplexVal> {
    let x = ExtComplex::from_complex(z, WORKING_PRECISION)?;
    let (v, d) = hn_eval_ext(p, &x, WORKING_PRECISION);
    Ok(v.div(&d)?.to_complex())
}

/// Aberth–Ehrlich iteration, updating in place
/// (Gauss–Seidel style). Starts on a circle about the centroid −(n+1)/2 at
/// angles symmetric under conjugation.
fn aberth(p: &PolyCoeffs) -> Result<Vec<ComplexVal>> {
    let n = p.degree();
    let c = p.coeffs();
    let centre = -c[n - 1] / n as f64;
    let radius = c[0].powf(1.0 / n as f64).max(1.0);
    let mut roots: Vec<ComplexVal> = (0..n)
        .map(|k| {
            let angle = 2.0 * PI * (k as f64 + 0.5) / n as f64;
            ComplexVal::new(centre, 0.0) + ComplexVal::from_polar(radius, angle)
        })
        .collect();
    let mut best = f64::INFINITY;
    let mut stalled = 0;
    for _ in 0..MAX_SWEEPS {
        let mut largest = 0.0f64;
        for k in 0..n {
            let ratio = newton_correction(p, roots[k])?;
            let repulsion: ComplexVal = (0..n)
                .filter(|&j| j != k)
                .map(|j| (roots[k] - roots[j]).inv())
                .sum();
            let w = ratio / (1.0 - ratio * repulsion);
            if w.is_finite() {
                roots[k] -= w;
                largest = largest.max(w.norm() / roots[k].norm().max(1.0));
            }
        }
        if largest < SWEEP_TOL {
            return Ok(roots);
        }
        if largest < 0.5 * best {
            best = largest;
            stalled = 0;
        } else {
            stalled += 1;
            if best < NOISE_TOL && stalled >= STALL_SWEEPS {
                return Ok(roots);
            }
        }
    }
    Err(Error::Numerical(format!(
        "Aberth iteration for H_{n} did not converge in {MAX_SWEEPS} sweeps"
    )))
}

/// Newton steps on the exact integer coefficients in extended precision.
fn polish(p: &PolyCoeffs, z: ComplexVal, abs_tol: f64) -> Result<ComplexVal> {
    let mut x = ExtComplex::from_complex(z, WORKING_PRECISION)?;
    for _ in 0..POLISH_STEPS {
        let (v, d) = hn_eval_ext(p, &x, WORKING_PRECISION);
        let step = v.div(&d)?;
        x = x.sub(&step);
        let size = step.to_complex().norm();
        if size <= 1e-6 * abs_tol || size <= f64::EPSILON * x.to_complex().norm() * 1e-3 {
            return Ok(x.to_complex());
        }
    }
    let out = x.to_complex();
    let (v, d) = hn_eval_ext(p, &x, WORKING_PRECISION);
    if v.div(&d)?.to_complex().norm() <= abs_tol {
        Ok(out)
    } else {
        Err(Error::Numerical(format!(
            "polishing the H_{} zero near {z} did not converge",
            p.degree()
        )))
    }
}

/// Makes the set exactly conjugate-closed: the root nearest the real axis
/// becomes real when n is odd, every other root is averaged with its
/// mirror. The result lists pairs (z, z̄) by increasing real part, with the
/// real root last.
fn pair_conjugates(n: usize, mut roots: Vec<ComplexVal>) -> Result<Vec<ComplexVal>> {
    let mut out = Vec::with_capacity(n);
    let mut real = None;
    if n % 2 == 1 {
        let (i, _) = roots
            .iter()
            .enumerate()
            .min_by(|a, b| a.1.im.abs().total_cmp(&b.1.im.abs()))
            .expect("n >= 1");
        real = Some(ComplexVal::new(roots.swap_remove(i).re, 0.0));
    }
    let (mut upper, mut lower): (Vec<_>, Vec<_>) = roots.into_iter().partition(|z| z.im > 0.0);
    if upper.len() != lower.len() {
        return Err(Error::Invariant(format!(
            "H_{n} roots split {} above and {} below the real axis",
            upper.len(),
            lower.len()
        )));
    }
    upper.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    for u in upper {
        let (i, _) = lower
            .iter()
            .enumerate()
            .min_by(|a, b| (a.1.conj() - u).norm().total_cmp(&(b.1.conj() - u).norm()))
            .expect("halves have equal length");
        let l = lower.swap_remove(i);
        let z = ComplexVal::new(0.5 * (u.re + l.re), 0.5 * (u.im - l.im));
        out.push(z);
        out.push(z.conj());
    }
    out.extend(real);
    Ok(out)
}

/// The n zeros of H_n (1 ≤ n ≤ 60).
pub fn find_hn_zeros(n: usize, abs_tol: f64) -> Result<ComplexZeroSet> {
    if n == 0 || n > MAX_HN_DEGREE {
        return Err(Error::Range(format!(
            "H_n zeros need 1 <= n <= {MAX_HN_DEGREE}, got {n}"
        )));
    }
    if !(abs_tol > 0.0) {
        return Err(Error::Domain(format!(
            "abs_tol must be positive, got {abs_tol}"
        )));
    }
    let p = hn_coeffs(n)?;
    let rough = aberth(&p)?;
    let polished = rough
        .iter()
        .map(|&z| polish(&p, z, abs_tol))
        .collect::<Result<Vec<_>>>()?;
    let roots = pair_conjugates(n, polished)?;
    if let Some(z) = roots.iter().find(|z| z.re >= 0.0) {
        return Err(Error::Invariant(format!("H_{n} zero {z} has re >= 0")));
    }
    for (i, a) in roots.iter().enumerate() {
        if roots[i + 1..].iter().any(|b| (a - b).norm() <= abs_tol) {
            return Err(Error::Numerical(format!(
                "two H_{n} roots converged to {a}"
            )));
        }
    }
    let sum: ComplexVal = roots.iter().sum();
    let vieta = -((n * (n + 1)) as f64) / 2.0;
    if (sum.re - vieta).abs() > 1e-9 * (n * n) as f64 || sum.im.abs() > 1e-9 * (n * n) as f64 {
        return Err(Error::Invariant(format!(
            "H_{n} zeros sum to {sum}, expected {vieta}"
        )));
    }
    ComplexZeroSet::new(n, roots, abs_tol)
}
