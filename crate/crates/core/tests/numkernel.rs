mod common;

use proptest::prelude::*;
use rayleigh::numkernel::{
    arith, gamma, recip_gamma, required_precision, ArithOp, CompensatedSum, ExtReal,
};
use rayleigh::Error;

fn ext(v: f64, precision: u32) -> ExtReal {
    ExtReal::from_f64(v, precision).unwrap()
}

#[test]
fn integer_arithmetic() {
    let one = ExtReal::from_i64(1, 64);
    let two = arith(&one, &one, ArithOp::Add).unwrap();
    assert_eq!(two.to_f64(), 2.0);
    let x = ext(-3.75e12, 64);
    assert!(arith(&x, &x, ArithOp::Sub).unwrap().is_zero());
}

#[test]
fn one_third_matches_long_division() {
    let q = arith(
        &ExtReal::from_i64(1, 128),
        &ExtReal::from_i64(3, 128),
        ArithOp::Div,
    )
    .unwrap();
    let digits: String = q
        .to_scientific(38)
        .chars()
        .filter(char::is_ascii_digit)
        .collect();
    let oracle = common::long_division(1, 3, 38);
    // "3333...3" followed by the exponent digit "1" of "e-1".
    assert_eq!(&digits[..38], &oracle[2..]);
    assert!(q.to_scientific(38).ends_with("e-1"));
}

#[test]
fn division_by_zero_is_an_error() {
    let r = arith(&ExtReal::from_i64(1, 64), &ExtReal::zero(64), ArithOp::Div);
    assert!(matches!(r, Err(Error::DivisionByZero)));
}

#[test]
fn gamma_values() {
    assert_eq!(gamma(1.0).unwrap(), 1.0);
    assert!((gamma(0.5).unwrap() - std::f64::consts::PI.sqrt()).abs() < 1e-14 * 1.8);
    assert!((gamma(6.0).unwrap() - 120.0).abs() < 120.0 * 1e-14);
    assert!(gamma(0.0).is_err());
    assert!(gamma(-1.5).is_err());
    assert!((recip_gamma(3.0).unwrap() - 0.5).abs() < 1e-15);
}

#[test]
fn precision_budget() {
    assert!(required_precision(0.0, 16) >= 64);
    assert!(required_precision(100.0, 16) >= 64 + 87 + 54);
    assert!(required_precision(50.0, 16) <= required_precision(150.0, 16));
}

#[test]
fn precision_budget_covers_cancellation_at_100() {
    // J_0(100) from the library against the fixed-point oracle, which keeps
    // 320 fractional bits throughout.
    let oracle = common::bessel_j0(100.0);
    let lib = rayleigh::specfun::bessel_j(rayleigh::specfun::Order::new(0.0).unwrap(), 100.0, 16)
        .unwrap();
    assert!((lib - oracle).abs() < 1e-15, "{lib} vs {oracle}");
}

proptest! {
    #[test]
    fn addition_is_associative(a in -1e6f64..1e6, b in -1e6f64..1e6, c in -1e6f64..1e6) {
        let p = 200;
        let (a, b, c) = (ext(a, p), ext(b, p), ext(c, p));
        let left = arith(&arith(&a, &b, ArithOp::Add).unwrap(), &c, ArithOp::Add).unwrap();
        let right = arith(&a, &arith(&b, &c, ArithOp::Add).unwrap(), ArithOp::Add).unwrap();
        let diff = arith(&left, &right, ArithOp::Sub).unwrap();
        // Within 2 ulp of the larger magnitude at 200 bits.
        let scale = left.to_f64().abs().max(1.0);
        prop_assert!(diff.to_f64().abs() <= scale * 2f64.powi(-190));
    }

    #[test]
    fn gamma_recurrence(x in 0.25f64..50.0) {
        let lhs = gamma(x + 1.0).unwrap();
        let rhs = x * gamma(x).unwrap();
        prop_assert!(((lhs - rhs) / rhs).abs() <= 1e-13);
    }

    #[test]
    fn machine_round_trip(v in prop::num::f64::NORMAL | prop::num::f64::SUBNORMAL | prop::num::f64::ZERO) {
        let back = ext(v, 64).to_f64();
        prop_assert_eq!(back.to_bits(), if v == 0.0 { 0.0f64.to_bits() } else { v.to_bits() });
        let again = ext(back, 64);
        prop_assert_eq!(again.to_f64().to_bits(), back.to_bits());
    }

    #[test]
    fn compensated_sum_is_nearly_exact(values in prop::collection::vec(-1e10f64..1e10, 1..200)) {
        let mut s = CompensatedSum::new();
        for &v in &values {
            s.add(v);
        }
        let exact = common::exact_sum(&values);
        let scale: f64 = values.iter().map(|v| v.abs()).sum();
        prop_assert!((s.value() - exact).abs() <= exact.abs() * 4.0 * f64::EPSILON + scale * 1e-30);
    }
}
