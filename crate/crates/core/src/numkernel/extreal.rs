//! Binary floating point with an arbitrary-size integer mantissa.
//!
//! A value is `sign * mantissa * 2^exponent`. Nonzero values are kept
//! normalized so that the mantissa has exactly `precision` bits, and every
//! operation rounds its exact result to nearest (ties to even) at the larger
//! of the operand precisions.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint, Sign};
use num_complex::Complex64;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Smallest working precision accepted by the constructors.
pub const MIN_PRECISION: u32 = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

#[derive(Clone, Debug)]
pub struct ExtReal {
    sign: i8,
    mantissa: BigUint,
    exponent: i64,
    precision: u32,
}

impl ExtReal {
    pub fn zero(precision: u32) -> Self {
        ExtReal {
            sign: 0,
            mantissa: BigUint::zero(),
            exponent: 0,
            precision: precision.max(MIN_PRECISION),
        }
    }

    pub fn from_i64(v: i64, precision: u32) -> Self {
        let sign = v.signum() as i8;
        Self::normalize(sign, BigUint::from(v.unsigned_abs()), 0, precision, false)
    }

    pub fn from_biguint(v: &BigUint, precision: u32) -> Self {
        let sign = if v.is_zero() { 0 } else { 1 };
        Self::normalize(sign, v.clone(), 0, precision, false)
    }

    /// Exact conversion when `precision >= 53`; rounds otherwise.
    ///
    /// Non-finite inputs are rejected.
    pub fn from_f64(v: f64, precision: u32) -> Result<Self> {
        if !v.is_finite() {
            return Err(Error::Domain(format!("cannot represent {v} as ExtReal")));
        }
        if v == 0.0 {
            return Ok(Self::zero(precision));
        }
        let bits = v.to_bits();
        let sign = if bits >> 63 == 1 { -1 } else { 1 };
        let biased = ((bits >> 52) & 0x7ff) as i64;
        let frac = bits & ((1u64 << 52) - 1);
        let (m, e) = if biased == 0 {
            (frac, -1074)
        } else {
            (frac | (1u64 << 52), biased - 1075)
        };
        Ok(Self::normalize(sign, BigUint::from(m), e, precision, false))
    }

    /// `±mag · 2^exponent`, rounded to `precision` bits.
    pub fn from_parts(negative: bool, mag: BigUint, exponent: i64, precision: u32) -> Self {
        let sign = if negative { -1 } else { 1 };
        Self::normalize(sign, mag, exponent, precision, false)
    }

    pub fn precision(&self) -> u32 {
        self.precision
    }

    pub fn signum(&self) -> i8 {
        self.sign
    }

    pub fn is_zero(&self) -> bool {
        self.sign == 0
    }

    pub fn mantissa(&self) -> &BigUint {
        &self.mantissa
    }

    pub fn exponent(&self) -> i64 {
        self.exponent
    }

    /// floor(log2 |x|), or `None` for zero.
    pub fn log2_floor(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.exponent + self.mantissa.bits() as i64 - 1)
        }
    }

    pub fn abs(&self) -> Self {
        let mut out = self.clone();
        out.sign = out.sign.abs();
        out
    }

    pub fn with_precision(&self, precision: u32) -> Self {
        Self::normalize(
            self.sign,
            self.mantissa.clone(),
            self.exponent,
            precision,
            false,
        )
    }

    /// Round to the nearest machine double.
    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let bits = self.mantissa.bits();
        let (top, shift) = if bits > 64 {
            let shift = bits - 64;
            let mut top = (&self.mantissa >> shift).to_u64().unwrap_or(u64::MAX);
            // Sticky bit well below the 53-bit rounding position.
            if self.mantissa.trailing_zeros().unwrap_or(0) < shift {
                top |= 1;
            }
            (top, shift as i64)
        } else {
            (self.mantissa.to_u64().unwrap_or(u64::MAX), 0)
        };
        let magnitude = ldexp(top as f64, self.exponent + shift);
        if self.sign < 0 {
            -magnitude
        } else {
            magnitude
        }
    }

    pub fn checked_div(&self, rhs: &ExtReal) -> Result<ExtReal> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let precision = self.precision.max(rhs.precision);
        if self.is_zero() {
            return Ok(Self::zero(precision));
        }
        let lead = precision as i64 + 2 + rhs.mantissa.bits() as i64 - self.mantissa.bits() as i64;
        let shift = lead.max(0) as u64;
        let numerator = &self.mantissa << shift;
        let quotient = &numerator / &rhs.mantissa;
        let sticky = &quotient * &rhs.mantissa != numerator;
        Ok(Self::normalize(
            self.sign * rhs.sign,
            quotient,
            self.exponent - rhs.exponent - shift as i64,
            precision,
            sticky,
        ))
    }

    /// Decimal scientific notation with `digits` significant digits (truncated).
    pub fn to_scientific(&self, digits: usize) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let digits = digits.max(1);
        // Estimate the decimal exponent from the binary one, then correct.
        let log2 = self.log2_floor().unwrap_or(0) as f64;
        let mut exp10 = (log2 * std::f64::consts::LOG10_2).floor() as i64;
        loop {
            let scaled = self.scaled_integer(digits as i64 - 1 - exp10);
            let text = scaled.to_string();
            if text.len() > digits {
                exp10 += 1;
                continue;
            }
            if text.len() < digits {
                exp10 -= 1;
                continue;
            }
            let sign = if self.sign < 0 { "-" } else { "" };
            let (head, tail) = text.split_at(1);
            if tail.is_empty() {
                return format!("{sign}{head}e{exp10}");
            }
            return format!("{sign}{head}.{tail}e{exp10}");
        }
    }

    /// floor(|x| * 10^power) as an integer.
    fn scaled_integer(&self, power: i64) -> BigUint {
        let mut num = self.mantissa.clone();
        let mut den = BigUint::from(1u32);
        let ten = BigUint::from(10u32);
        if power >= 0 {
            num *= ten.pow(power as u32);
        } else {
            den *= ten.pow((-power) as u32);
        }
        if self.exponent >= 0 {
            num <<= self.exponent as u64;
        } else {
            den <<= (-self.exponent) as u64;
        }
        num / den
    }

    fn normalize(sign: i8, mag: BigUint, exponent: i64, precision: u32, sticky: bool) -> Self {
        let precision = precision.max(MIN_PRECISION);
        if sign == 0 || mag.is_zero() {
            return Self::zero(precision);
        }
        let bits = mag.bits();
        let prec = precision as u64;
        if bits > prec {
            let shift = bits - prec;
            let mut kept = &mag >> shift;
            let half = mag.bit(shift - 1);
            let below = sticky || mag.trailing_zeros().unwrap_or(0) < shift - 1;
            let mut exponent = exponent + shift as i64;
            if half && (below || kept.bit(0)) {
                kept += 1u32;
                if kept.bits() > prec {
                    kept >>= 1u32;
                    exponent += 1;
                }
            }
            ExtReal {
                sign,
                mantissa: kept,
                exponent,
                precision,
            }
        } else {
            let shift = prec - bits;
            ExtReal {
                sign,
                mantissa: mag << shift,
                exponent: exponent - shift as i64,
                precision,
            }
        }
    }

    fn signed(&self) -> BigInt {
        let sign = match self.sign {
            -1 => Sign::Minus,
            0 => Sign::NoSign,
            _ => Sign::Plus,
        };
        BigInt::from_biguint(sign, self.mantissa.clone())
    }

    fn add_impl(&self, rhs: &ExtReal) -> ExtReal {
        let precision = self.precision.max(rhs.precision);
        if rhs.is_zero() {
            return self.with_precision(precision);
        }
        if self.is_zero() {
            return rhs.with_precision(precision);
        }
        let (hi, lo) = match (self.log2_floor(), rhs.log2_floor()) {
            (Some(a), Some(b)) if a >= b => (self, rhs),
            _ => (rhs, self),
        };
        let gap = hi.log2_floor().unwrap_or(0) - lo.log2_floor().unwrap_or(0);
        if gap > precision as i64 + 2 {
            // |lo| < ulp(hi)/4: nearest rounding returns hi in either direction.
            return hi.with_precision(precision);
        }
        let base = hi.exponent.min(lo.exponent);
        let a = hi.signed() << (hi.exponent - base) as u64;
        let b = lo.signed() << (lo.exponent - base) as u64;
        let sum = a + b;
        let (sign, mag) = sum.into_parts();
        let sign = match sign {
            Sign::Minus => -1,
            Sign::NoSign => 0,
            Sign::Plus => 1,
        };
        Self::normalize(sign, mag, base, precision, false)
    }

    fn mul_impl(&self, rhs: &ExtReal) -> ExtReal {
        let precision = self.precision.max(rhs.precision);
        if self.is_zero() || rhs.is_zero() {
            return Self::zero(precision);
        }
        Self::normalize(
            self.sign * rhs.sign,
            &self.mantissa * &rhs.mantissa,
            self.exponent + rhs.exponent,
            precision,
            false,
        )
    }
}

/// Apply one of the four basic operations; division by zero is an error.
pub fn arith(a: &ExtReal, b: &ExtReal, op: ArithOp) -> Result<ExtReal> {
    Ok(match op {
        ArithOp::Add => a + b,
        ArithOp::Sub => a - b,
        ArithOp::Mul => a * b,
        ArithOp::Div => a.checked_div(b)?,
    })
}

/// `x * 2^exp` without intermediate overflow for in-range results.
pub fn ldexp(mut x: f64, mut exp: i64) -> f64 {
    while exp > 1000 {
        x *= 2f64.powi(1000);
        exp -= 1000;
        if x.is_infinite() {
            return x;
        }
    }
    while exp < -1000 {
        x *= 2f64.powi(-1000);
        exp += 1000;
        if x == 0.0 {
            return x;
        }
    }
    x * 2f64.powi(exp as i32)
}

impl PartialEq for ExtReal {
    fn eq(&self, other: &Self) -> bool {
        self.cmp_value(other) == Ordering::Equal
    }
}

impl PartialOrd for ExtReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp_value(other))
    }
}

impl ExtReal {
    fn cmp_value(&self, other: &Self) -> Ordering {
        match self.sign.cmp(&other.sign) {
            Ordering::Equal => {}
            unequal => return unequal,
        }
        if self.sign == 0 {
            return Ordering::Equal;
        }
        let base = self.exponent.min(other.exponent);
        let a = &self.mantissa << (self.exponent - base) as u64;
        let b = &other.mantissa << (other.exponent - base) as u64;
        let magnitude = a.cmp(&b);
        if self.sign > 0 {
            magnitude
        } else {
            magnitude.reverse()
        }
    }
}

impl fmt::Display for ExtReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = (self.precision as f64 * std::f64::consts::LOG10_2).floor() as usize;
        f.write_str(&self.to_scientific(digits.max(1)))
    }
}

impl Neg for ExtReal {
    type Output = ExtReal;
    fn neg(mut self) -> ExtReal {
        self.sign = -self.sign;
        self
    }
}

impl Neg for &ExtReal {
    type Output = ExtReal;
    fn neg(self) -> ExtReal {
        -self.clone()
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl $tr<&ExtReal> for &ExtReal {
            type Output = ExtReal;
            fn $method(self, rhs: &ExtReal) -> ExtReal {
                $body(self, rhs)
            }
        }
        impl $tr<ExtReal> for ExtReal {
            type Output = ExtReal;
            fn $method(self, rhs: ExtReal) -> ExtReal {
                $body(&self, &rhs)
            }
        }
        impl $tr<&ExtReal> for ExtReal {
            type Output = ExtReal;
            fn $method(self, rhs: &ExtReal) -> ExtReal {
                $body(&self, rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a: &ExtReal, b: &ExtReal| a.add_impl(b));
forward_binop!(Sub, sub, |a: &ExtReal, b: &ExtReal| a.add_impl(&-b));
forward_binop!(Mul, mul, |a: &ExtReal, b: &ExtReal| a.mul_impl(b));

/// Complex pair of [`ExtReal`] values, used for polishing polynomial roots.
#[derive(Clone, Debug)]
pub struct ExtComplex {
    pub re: ExtReal,
    pub im: ExtReal,
}

impl ExtComplex {
    pub fn zero(precision: u32) -> Self {
        ExtComplex {
            re: ExtReal::zero(precision),
            im: ExtReal::zero(precision),
        }
    }

    pub fn from_complex(z: Complex64, precision: u32) -> Result<Self> {
        Ok(ExtComplex {
            re: ExtReal::from_f64(z.re, precision)?,
            im: ExtReal::from_f64(z.im, precision)?,
        })
    }

    pub fn to_complex(&self) -> Complex64 {
        Complex64::new(self.re.to_f64(), self.im.to_f64())
    }

    pub fn add(&self, other: &ExtComplex) -> ExtComplex {
        ExtComplex {
            re: &self.re + &other.re,
            im: &self.im + &other.im,
        }
    }

    pub fn sub(&self, other: &ExtComplex) -> ExtComplex {
        ExtComplex {
            re: &self.re - &other.re,
            im: &self.im - &other.im,
        }
    }

    pub fn add_real(&self, other: &ExtReal) -> ExtComplex {
        ExtComplex {
            re: &self.re + other,
            im: self.im.clone(),
        }
    }

    pub fn mul(&self, other: &ExtComplex) -> ExtComplex {
        ExtComplex {
            re: &self.re * &other.re - &self.im * &other.im,
            im: &self.re * &other.im + &self.im * &other.re,
        }
    }

    pub fn scale(&self, factor: &ExtReal) -> ExtComplex {
        ExtComplex {
            re: &self.re * factor,
            im: &self.im * factor,
        }
    }

    pub fn div(&self, other: &ExtComplex) -> Result<ExtComplex> {
        let denom = &other.re * &other.re + &other.im * &other.im;
        let re = &self.re * &other.re + &self.im * &other.im;
        let im = &self.im * &other.re - &self.re * &other.im;
        Ok(ExtComplex {
            re: re.checked_div(&denom)?,
            im: im.checked_div(&denom)?,
        })
    }
}
