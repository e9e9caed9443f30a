use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::numkernel::{required_precision, ExtReal};

/// A positive dyadic rational `num / 2^shift`.
struct Dyadic {
    num: BigUint,
    shift: u64,
}

impl Dyadic {
    fn new(v: &ExtReal, what: &str) -> Result<Self> {
        if v.signum() <= 0 {
            return Err(Error::Domain(format!(
                "series parameter {what} must be positive"
            )));
        }
        let e = v.exponent();
        Ok(if e >= 0 {
            Dyadic {
                num: v.mantissa() << e as u64,
                shift: 0,
            }
        } else {
            Dyadic {
                num: v.mantissa().clone(),
                shift: e.unsigned_abs(),
            }
        })
    }
}

/// Fractional bits for a series whose terms peak near e^x while the sum
/// can be as small as (x/2)^{-decay}.
pub(crate) fn series_precision(x: f64, target_digits: u32, decay: f64) -> u32 {
    let small = if x > 2.0 {
        (decay.max(0.0) * (x / 2.0).log2()).ceil() as u32
    } else {
        0
    };
    required_precision(x, target_digits) + small
}

/// `Σ t_m` and `Σ m·t_m` for `t_m = (±q)^m / ((a)_m (b)_m)`, `q = x²/4`,
/// where `(a)_m` is the rising factorial, keeping `precision` fractional
/// bits. The second sum gives the x-derivative: d/dx Σ t_m = (2/x) Σ m·t_m.
///
/// Terms are carried as integers scaled by `2^precision`. With `a`, `b`
/// and `x` dyadic, each step multiplies by a short integer and divides by
/// two more, so the cost per term is linear in the working length. `a` and
/// `b` must be exact: the terms of an alternating series can exceed the
/// sum by e^x, so a relative perturbation of the bases that grows with `m`
/// would not cancel.
pub(crate) fn pochhammer_moments(
    x: f64,
    a: &ExtReal,
    b: &ExtReal,
    alternating: bool,
    precision: u32,
) -> Result<(ExtReal, ExtReal)> {
    if x == 0.0 {
        return Ok((ExtReal::from_i64(1, precision), ExtReal::zero(precision)));
    }
    let xe = ExtReal::from_f64(x.abs(), 64)?;
    let (a, b) = (Dyadic::new(a, "a")?, Dyadic::new(b, "b")?);
    let x_sq = xe.mantissa() * xe.mantissa();
    // q / ((a+m)(b+m)) = x_sq · 2^k / (num_a(m) · num_b(m))
    let k = 2 * xe.exponent() - 2 + (a.shift + b.shift) as i64;
    let step_a = BigUint::from(1u32) << a.shift;
    let step_b = BigUint::from(1u32) << b.shift;

    let mut term = BigUint::from(1u32) << precision as u64;
    let mut sums = Signed::default();
    let mut moments = Signed::default();
    sums.add(false, &term);
    let mut num_a = a.num;
    let mut num_b = b.num;
    let max_terms = (10.0 * x).ceil() as usize + 200;
    for m in 1..=max_terms {
        term *= &x_sq;
        if k >= 0 {
            term <<= k as u64;
        } else {
            term >>= k.unsigned_abs();
        }
        divide(&mut term, &num_a);
        divide(&mut term, &num_b);
        let negative = alternating && m % 2 == 1;
        sums.add(negative, &term);
        moments.add(negative, &(&term * m as u64));
        num_a += &step_a;
        num_b += &step_b;
        let past_peak = (m as f64) * (m as f64) > x * x / 4.0;
        if past_peak && term.is_zero() {
            return Ok((sums.finish(precision), moments.finish(precision)));
        }
    }
    Err(Error::Numerical(format!(
        "ascending series at x = {x} did not converge in {max_terms} terms"
    )))
}

/// `Σ t_m` alone; see [`pochhammer_moments`].
pub(crate) fn pochhammer_series(
    x: f64,
    a: &ExtReal,
    b: &ExtReal,
    alternating: bool,
    precision: u32,
) -> Result<ExtReal> {
    pochhammer_moments(x, a, b, alternating, precision).map(|(s, _)| s)
}

fn divide(n: &mut BigUint, d: &BigUint) {
    match u64::try_from(d) {
        // Single-limb divisors take the fast path.
        Ok(small) => *n /= small,
        Err(_) => *n /= d,
    }
}

#[derive(Default)]
struct Signed {
    plus: BigUint,
    minus: BigUint,
}

impl Signed {
    fn add(&mut self, negative: bool, v: &BigUint) {
        if negative {
            self.minus += v;
        } else {
            self.plus += v;
        }
    }

    fn finish(self, precision: u32) -> ExtReal {
        let negative = self.minus > self.plus;
        let mag = if negative {
            self.minus - self.plus
        } else {
            self.plus - self.minus
        };
        if mag.is_zero() {
            return ExtReal::zero(precision);
        }
        ExtReal::from_parts(negative, mag, -(precision as i64), precision)
    }
}
