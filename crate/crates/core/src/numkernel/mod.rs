//! Extended-precision arithmetic and scalar helpers.

mod compensated;
mod extreal;
mod gamma;

pub use compensated::{CompensatedComplexSum, CompensatedSum};
pub use extreal::{arith, ldexp, ArithOp, ExtComplex, ExtReal, MIN_PRECISION};
pub use gamma::{gamma, recip_gamma};

pub use num_complex::Complex64 as ComplexVal;

/// Guard bits added on top of the cancellation and target-digit budget.
pub const GUARD_BITS: u32 = 64;

/// Working precision (bits) for summing an ascending Bessel/Struve-type
/// series at `x` so that the result keeps `target_digits` digits.
///
/// The largest term of those series grows like e^x while the sum stays
/// O(1), so x·log2(e) bits are lost to cancellation.
pub fn required_precision(x: f64, target_digits: u32) -> u32 {
    let x = if x.is_finite() { x.max(0.0) } else { 0.0 };
    let cancellation = x * std::f64::consts::LOG2_E;
    let digits = target_digits as f64 * std::f64::consts::LOG2_10;
    (cancellation + digits).ceil() as u32 + GUARD_BITS
}
