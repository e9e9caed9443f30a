use std::f64::consts::PI;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::specfun::{struve_h, struve_h_and_deriv, Order, DEFAULT_DIGITS};

use super::bessel::check_width;
use super::{Family, ZeroTable};

const SCAN_START: f64 = 0.1;
const SCAN_STEP: f64 = PI / 4.0;
/// Grid points evaluated per parallel batch.
const SCAN_BATCH: usize = 16;
/// Samples taken across a local minimum of |H| that shows no sign change.
const PROBE_POINTS: usize = 16;
const MAX_NEWTON_STEPS: usize = 50;

fn grid(i: usize) -> f64 {
    SCAN_START + i as f64 * SCAN_STEP
}

fn scan_cap(count: usize) -> f64 {
    1.3 * PI * (count + 2) as f64
}

/// Sign with zero counted as positive, so an exact zero on a grid point is
/// bracketed exactly once.
fn negative(v: f64) -> bool {
    v < 0.0
}

#[derive(Clone, Copy, Debug)]
struct Bracket {
    lo: f64,
    hi: f64,
    f_lo: f64,
}

fn eval_all(order: Order, xs: &[f64]) -> Result<Vec<f64>> {
    xs.par_iter()
        .map(|&x| struve_h(order, x, DEFAULT_DIGITS))
        .collect()
}

/// Sign changes on a fine sub-grid of (a, b), whose endpoint values share a sign.
fn probe(order: Order, a: f64, fa: f64, b: f64, fb: f64) -> Result<Vec<Bracket>> {
    let h = (b - a) / PROBE_POINTS as f64;
    let inner: Vec<f64> = (1..PROBE_POINTS).map(|j| a + j as f64 * h).collect();
    let values = eval_all(order, &inner)?;
    let xs: Vec<f64> = std::iter::once(a)
        .chain(inner)
        .chain(std::iter::once(b))
        .collect();
    let fs: Vec<f64> = std::iter::once(fa)
        .chain(values)
        .chain(std::iter::once(fb))
        .collect();
    Ok((0..xs.len() - 1)
        .filter(|&j| negative(fs[j]) != negative(fs[j + 1]))
        .map(|j| Bracket {
            lo: xs[j],
            hi: xs[j + 1],
            f_lo: fs[j],
        })
        .collect())
}

/// Brackets for the first `count` sign changes of **H**_ν, scanning with
/// step π/4 and probing each local minimum of |**H**_ν| for a close pair.
fn scan(order: Order, count: usize) -> Result<Vec<Bracket>> {
    let cap = scan_cap(count);
    let mut values: Vec<f64> = Vec::new();
    let mut brackets = Vec::new();
    let mut i = 1;
    // One extra grid step after reaching `count`: a probe centred on the
    // last point can still add a bracket to its left.
    let mut extra = None;
    loop {
        if i + 1 >= values.len() {
            let start = values.len();
            let xs: Vec<f64> = (start..start + SCAN_BATCH).map(grid).collect();
            if xs[0] > cap {
                return Err(Error::Numerical(format!(
                    "found {} of {count} sign changes of H_{} below the scan cap {cap:.3}",
                    brackets.len(),
                    order.nu
                )));
            }
            values.extend(eval_all(order, &xs)?);
        }
        let (fp, fc, fnext) = (values[i - 1], values[i], values[i + 1]);
        if negative(fp) != negative(fc) {
            brackets.push(Bracket {
                lo: grid(i - 1),
                hi: grid(i),
                f_lo: fp,
            });
        }
        let flat = negative(fp) == negative(fc) && negative(fc) == negative(fnext);
        if flat && fc.abs() < fp.abs() && fc.abs() < fnext.abs() {
            brackets.extend(probe(order, grid(i - 1), fp, grid(i + 1), fnext)?);
        }
        if extra.is_none() && brackets.len() >= count {
            extra = Some(i + 1);
        }
        if extra == Some(i) {
            break;
        }
        i += 1;
    }
    brackets.sort_by(|a, b| a.lo.total_cmp(&b.lo));
    brackets.truncate(count);
    Ok(brackets)
}

/// Newton from the bracket midpoint with a bisection step whenever an
/// iterate would leave the shrinking bracket.
fn refine(order: Order, n: usize, bracket: Bracket, abs_tol: f64) -> Result<f64> {
    let Bracket {
        mut lo,
        mut hi,
        f_lo,
    } = bracket;
    let lo_negative = negative(f_lo);
    let mut x = 0.5 * (lo + hi);
    let settle = (1e-3 * abs_tol).max(4.0 * f64::EPSILON * x);
    for _ in 0..MAX_NEWTON_STEPS {
        let (h, dh) = struve_h_and_deriv(order, x, DEFAULT_DIGITS)?;
        if h == 0.0 {
            return Ok(x);
        }
        if negative(h) == lo_negative {
            lo = x;
        } else {
            hi = x;
        }
        let step = h / dh;
        let newton = x - step;
        let inside = dh != 0.0 && newton > lo && newton < hi;
        if step.abs() <= settle {
            return Ok(if inside { newton } else { x });
        }
        if hi - lo <= settle {
            return Ok(0.5 * (lo + hi));
        }
        x = if inside { newton } else { 0.5 * (lo + hi) };
    }
    Err(Error::Numerical(format!(
        "refinement of zero {n} of H_{} did not converge in {MAX_NEWTON_STEPS} steps",
        order.nu
    )))
}

fn verify_sign_change(order: Order, n: usize, z: f64, abs_tol: f64) -> Result<()> {
    let w = check_width(z, abs_tol);
    let below = struve_h(order, z - w, DEFAULT_DIGITS)?;
    let above = struve_h(order, z + w, DEFAULT_DIGITS)?;
    if negative(below) != negative(above) {
        Ok(())
    } else {
        Err(Error::Numerical(format!(
            "zero {n} of H_{} at {z} shows no sign change over +-{w}",
            order.nu
        )))
    }
}

/// The first `count` positive zeros of **H**_ν for |ν| < 1/2.
pub fn find_struve_zeros(order: Order, count: usize, abs_tol: f64) -> Result<ZeroTable> {
    let order = Order::struve(order.nu)?;
    if count == 0 {
        return Err(Error::Domain("zero count must be at least 1".into()));
    }
    if !(abs_tol > 0.0) {
        return Err(Error::Domain(format!(
            "abs_tol must be positive, got {abs_tol}"
        )));
    }
    let brackets = scan(order, count)?;
    let zeros = brackets
        .into_par_iter()
        .enumerate()
        .map(|(i, b)| {
            let z = refine(order, i + 1, b, abs_tol)?;
            verify_sign_change(order, i + 1, z, abs_tol)?;
            Ok(z)
        })
        .collect::<Result<Vec<f64>>>()?;
    ZeroTable::new(Family::StruveH, order.nu, zeros, abs_tol)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn order(nu: f64) -> Order {
        Order::new(nu).unwrap()
    }

    #[test]
    fn sine_limit() {
        let t = find_struve_zeros(order(-0.5 + 1e-9), 4, 1e-12).unwrap();
        for (i, z) in t.zeros().iter().enumerate() {
            assert!((z - (i + 1) as f64 * PI).abs() < 1e-6, "{z}");
        }
    }

    #[test]
    fn close_pairs_are_resolved() {
        // At ν = 0.49 the zeros come in pairs about 0.37 apart near 2πm.
        let t = find_struve_zeros(order(0.49), 4, 1e-12).unwrap();
        let expect = [6.082_322_6, 6.457_125_1, 12.332_146, 12.771_501];
        for (z, e) in t.zeros().iter().zip(expect) {
            assert!((z - e).abs() < 1e-6, "{z} vs {e}");
        }
    }

    #[test]
    fn domain() {
        assert!(find_struve_zeros(order(0.5), 3, 1e-12).is_err());
        assert!(find_struve_zeros(order(0.0), 3, 0.0).is_err());
    }
}
