//! Independent reference computations shared by the integration tests.
//! Nothing here calls into the library's special-function code.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Bits after the binary point in the fixed-point oracles.
const FRAC_BITS: u32 = 320;

/// x as an exact fixed-point integer x·2^FRAC_BITS.
fn fixed(x: f64) -> BigInt {
    let (mant, exp) = decompose(x);
    let shift = exp + FRAC_BITS as i32;
    let m = BigInt::from(mant);
    if shift >= 0 {
        m << shift as u32
    } else {
        m >> (-shift) as u32
    }
}

/// x = mant · 2^exp with an integer mantissa.
fn decompose(x: f64) -> (i64, i32) {
    if x == 0.0 {
        return (0, 0);
    }
    let bits = x.to_bits();
    let sign = if bits >> 63 == 1 { -1 } else { 1 };
    let exp = ((bits >> 52) & 0x7ff) as i32;
    let frac = (bits & ((1 << 52) - 1)) as i64;
    let (mant, e) = if exp == 0 {
        (frac, -1074)
    } else {
        (frac | (1 << 52), exp - 1075)
    };
    (sign * mant, e)
}

fn to_f64(v: &BigInt) -> f64 {
    let bits = v.bits();
    if bits <= 64 {
        return v.to_f64().unwrap() / 2f64.powi(FRAC_BITS as i32);
    }
    let drop = bits - 60;
    let top: BigInt = v >> drop as u32;
    top.to_f64().unwrap() * 2f64.powi(drop as i32 - FRAC_BITS as i32)
}

/// J_0(x) = Σ (−1)^m (x²/4)^m / (m!)², in fixed point.
pub fn bessel_j0(x: f64) -> f64 {
    let q = exact_square_quarter(x);
    let mut term = BigInt::one() << FRAC_BITS;
    let mut sum = term.clone();
    for m in 1u64.. {
        term = (&term * &q) >> FRAC_BITS;
        term /= BigInt::from(m * m);
        if term.is_zero() {
            break;
        }
        if m % 2 == 1 {
            sum -= &term;
        } else {
            sum += &term;
        }
    }
    to_f64(&sum)
}

/// x²/4 in fixed point, formed from the exact mantissa of x.
fn exact_square_quarter(x: f64) -> BigInt {
    let (mant, exp) = decompose(x);
    let sq = BigInt::from(mant) * BigInt::from(mant);
    let shift = 2 * exp - 2 + FRAC_BITS as i32;
    if shift >= 0 {
        sq << shift as u32
    } else {
        sq >> (-shift) as u32
    }
}

/// (π/2)·**H**_0(x) = Σ (−1)^m x^{2m+1} / ((2m+1)!!)², in fixed point.
pub fn struve_h0_scaled(x: f64) -> f64 {
    let x_fixed = fixed(x);
    let x2 = exact_square_quarter(x) << 2u32;
    let mut term = x_fixed;
    let mut sum = term.clone();
    for m in 1u64.. {
        term = (&term * &x2) >> FRAC_BITS;
        let odd = 2 * m + 1;
        term /= BigInt::from(odd * odd);
        if term.is_zero() {
            break;
        }
        if m % 2 == 1 {
            sum -= &term;
        } else {
            sum += &term;
        }
    }
    to_f64(&sum)
}

/// The root of `f` in [lo, hi] by bisection to the last bit.
pub fn bisect(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
    let f_lo = f(lo);
    assert!(f_lo * f(hi) < 0.0, "no sign change on [{lo}, {hi}]");
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if (f(mid) < 0.0) == (f_lo < 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// The first `count` sign changes of `f` on a grid of step `h` from `start`,
/// each refined by bisection.
pub fn zeros_by_bisection(f: impl Fn(f64) -> f64, start: f64, h: f64, count: usize) -> Vec<f64> {
    let mut out = Vec::new();
    let mut a = start;
    let mut fa = f(a);
    while out.len() < count {
        let b = a + h;
        let fb = f(b);
        if fa * fb < 0.0 {
            out.push(bisect(&f, a, b));
        }
        a = b;
        fa = fb;
    }
    out
}

/// Decimal expansion of num/den by schoolbook long division: the integer
/// part, then `digits` fractional digits.
pub fn long_division(num: u64, den: u64, digits: usize) -> String {
    let mut out = format!("{}.", num / den);
    let mut rem = num % den;
    for _ in 0..digits {
        rem *= 10;
        out.push(char::from(b'0' + (rem / den) as u8));
        rem %= den;
    }
    out
}

/// Exact sum of binary64 values, rounded once at the end.
pub fn exact_sum(values: &[f64]) -> f64 {
    let mut acc = BigInt::zero();
    let min_exp = -1074;
    for &v in values {
        let (mant, exp) = decompose(v);
        acc += BigInt::from(mant) << (exp - min_exp) as u32;
    }
    let neg = acc.is_negative();
    let mag = acc.abs();
    let bits = mag.bits() as i32;
    let value = if bits <= 60 {
        mag.to_f64().unwrap() * 2f64.powi(min_exp)
    } else {
        // Round to nearest on the top 60 bits; the final conversion rounds
        // again, which is within the tolerance the tests use.
        let drop = (bits - 60) as u32;
        (&mag >> drop).to_f64().unwrap() * 2f64.powi(min_exp + drop as i32)
    };
    if neg {
        -value
    } else {
        value
    }
}
