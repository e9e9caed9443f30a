//! The monic polynomial H_n with K_{n+1/2}(z) = √(π/2z)·e^{−z}·H_n(z)/z^n.

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::numkernel::{ComplexVal, ExtComplex, ExtReal};

pub const MAX_HN_DEGREE: usize = 60;

/// Ascending coefficients of a monic polynomial with positive coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyCoeffs {
    degree: usize,
    coeffs: Vec<f64>,
    exact: Vec<BigUint>,
}

impl PolyCoeffs {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn exact(&self) -> &[BigUint] {
        &self.exact
    }
}

fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::from(1u32), |acc, k| acc * BigUint::from(k))
}

/// Coefficient of z^k is (2n−k)! / ((n−k)! k! 2^{n−k}); every one is an integer.
pub fn hn_coeffs(n: usize) -> Result<PolyCoeffs> {
    if n > MAX_HN_DEGREE {
        return Err(Error::Range(format!(
            "H_n coefficients are limited to n <= {MAX_HN_DEGREE}, got {n}"
        )));
    }
    let mut exact = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let numerator = factorial(2 * n - k);
        let denominator = factorial(n - k) * factorial(k) * (BigUint::from(1u32) << (n - k));
        let quotient = &numerator / &denominator;
        if !(&numerator % &denominator).is_zero() {
            return Err(Error::Invariant(format!(
                "H_{n} coefficient {k} is not an integer"
            )));
        }
        exact.push(quotient);
    }
    let coeffs = exact
        .iter()
        .map(|c| c.to_f64().unwrap_or(f64::INFINITY))
        .collect();
    Ok(PolyCoeffs {
        degree: n,
        coeffs,
        exact,
    })
}

/// Horner evaluation.
pub fn hn_eval(p: &PolyCoeffs, z: ComplexVal) -> ComplexVal {
    p.coeffs
        .iter()
        .rev()
        .fold(ComplexVal::new(0.0, 0.0), |acc, &c| acc * z + c)
}

/// Bits carried by [`hn_eval_derivs`]; enough to absorb the cancellation
/// between the terms of H_n near its zeros for every supported degree.
const DERIV_PRECISION: u32 = 320;

/// p(z), p'(z), p''(z) by a three-row Horner scheme over the exact
/// coefficients in extended precision, rounded once at the end.
pub fn hn_eval_derivs(p: &PolyCoeffs, z: ComplexVal) -> (ComplexVal, ComplexVal, ComplexVal) {
    let Ok(x) = ExtComplex::from_complex(z, DERIV_PRECISION) else {
        return hn_eval_derivs_f64(p, z);
    };
    let mut v = ExtComplex::zero(DERIV_PRECISION);
    let mut d1 = v.clone();
    let mut d2 = v.clone();
    for c in p.exact.iter().rev() {
        d2 = d2.mul(&x).add(&d1);
        d1 = d1.mul(&x).add(&v);
        v = v
            .mul(&x)
            .add_real(&ExtReal::from_biguint(c, DERIV_PRECISION));
    }
    (v.to_complex(), d1.to_complex(), d2.to_complex() * 2.0)
}

fn hn_eval_derivs_f64(p: &PolyCoeffs, z: ComplexVal) -> (ComplexVal, ComplexVal, ComplexVal) {
    let zero = ComplexVal::new(0.0, 0.0);
    let (mut v, mut d1, mut d2) = (zero, zero, zero);
    for &c in p.coeffs.iter().rev() {
        d2 = d2 * z + d1;
        d1 = d1 * z + v;
        v = v * z + c;
    }
    (v, d1, d2 * 2.0)
}

/// p(z) and p'(z) evaluated in extended precision from the exact coefficients.
pub(crate) fn hn_eval_ext(
    p: &PolyCoeffs,
    z: &ExtComplex,
    precision: u32,
) -> (ExtComplex, ExtComplex) {
    let mut v = ExtComplex::zero(precision);
    let mut d = ExtComplex::zero(precision);
    for c in p.exact.iter().rev() {
        d = d.mul(z).add(&v);
        v = v.mul(z).add_real(&ExtReal::from_biguint(c, precision));
    }
    (v, d)
}

/// K_{ν+1}(z)/K_ν(z) for ν = n + 1/2, realized as H_{n+1}(z) / (z·H_n(z)).
pub fn macdonald_ratio(n: usize, z: ComplexVal) -> Result<ComplexVal> {
    let lower = hn_eval(&hn_coeffs(n)?, z);
    let upper = hn_eval(&hn_coeffs(n + 1)?, z);
    let denom = z * lower;
    if denom.norm() == 0.0 {
        return Err(Error::Pole(format!("K ratio is singular at z = {z}")));
    }
    Ok(upper / denom)
}
