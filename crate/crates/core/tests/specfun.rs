mod common;

use std::f64::consts::PI;

use rayleigh::numkernel::{gamma, ComplexVal};
use rayleigh::specfun::{
    bessel_i, bessel_j, bessel_j_derivs, hn_coeffs, hn_eval, macdonald_ratio, ratio_i, ratio_j,
    struve_forcing, struve_h, struve_h_deriv, struve_h_derivs, struve_h_pair, Order,
    DEFAULT_DIGITS,
};
use rayleigh::zeros::{Family, ZeroStore};

fn order(nu: f64) -> Order {
    Order::new(nu).unwrap()
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(f64::MIN_POSITIVE)
}

#[test]
fn bessel_j_values() {
    assert!(bessel_j(order(0.5), PI, 16).unwrap().abs() < 1e-12);
    assert_eq!(bessel_j(order(0.0), 0.0, 16).unwrap(), 1.0);
    assert!(bessel_j(order(0.0), 2.404825557695773, 16).unwrap().abs() < 1e-12);
    assert!(bessel_j(Order::new(-1.0).unwrap(), 1.0, 16).is_err());
}

#[test]
fn bessel_j_matches_fixed_point_series() {
    for x in [0.5, 1.0, 7.3, 30.0, 80.0] {
        let oracle = common::bessel_j0(x);
        let lib = bessel_j(order(0.0), x, 16).unwrap();
        assert!(
            (lib - oracle).abs() < 1e-15 * oracle.abs().max(1e-2),
            "x = {x}: {lib} vs {oracle}"
        );
    }
}

#[test]
fn first_zero_of_j0_from_bisection() {
    let z = common::bisect(common::bessel_j0, 2.0, 3.0);
    assert!((z - 2.404825557695773).abs() < 1e-14);
    assert!(bessel_j(order(0.0), z, 16).unwrap().abs() < 1e-12);
}

#[test]
fn bessel_i_closed_forms() {
    let v = bessel_i(order(0.5), 1.0, 16).unwrap();
    assert!(rel(v, (2.0 / PI).sqrt() * 1f64.sinh()) < 1e-14);
    assert_eq!(bessel_i(order(0.0), 0.0, 16).unwrap(), 1.0);
    let v = bessel_i(order(-0.5), 2.0, 16).unwrap();
    assert!(rel(v, (2.0 / (2.0 * PI)).sqrt() * 2f64.cosh()) < 1e-13);
}

#[test]
fn struve_closed_forms() {
    assert!(struve_h(order(-0.5), PI, 16).unwrap().abs() < 1e-12);
    let v = struve_h(order(-0.5), PI / 2.0, 16).unwrap();
    assert!(rel(v, 2.0 / PI) < 1e-12);
    // d/dx √(2/(πx)) sin x = √(2/π)(cos x / √x − sin x / (2 x^{3/2}))
    let x: f64 = 2.0;
    let exact = (2.0 / PI).sqrt() * (x.cos() / x.sqrt() - x.sin() / (2.0 * x.powf(1.5)));
    assert!(rel(struve_h_deriv(order(-0.5), x, 16).unwrap(), exact) < 1e-11);
}

#[test]
fn struve_matches_fixed_point_series() {
    for x in [1.0, 4.0, 25.0, 60.0] {
        let oracle = common::struve_h0_scaled(x) * 2.0 / PI;
        let lib = struve_h(order(0.0), x, 16).unwrap();
        assert!(
            (lib - oracle).abs() < 1e-13 * oracle.abs().max(1.0),
            "x = {x}: {lib} vs {oracle}"
        );
    }
}

#[test]
fn struve_derivative_by_central_difference() {
    let (nu, x, h) = (0.3, 5.0, 1e-6);
    let o = order(nu);
    let fd = (struve_h(o, x + h, 20).unwrap() - struve_h(o, x - h, 20).unwrap()) / (2.0 * h);
    let d = struve_h_deriv(o, x, 16).unwrap();
    assert!(rel(d, fd) < 1e-6, "{d} vs {fd}");
}

#[test]
fn bessel_ode_and_recurrence() {
    for nu in [0.0, 0.5, 2.7] {
        for x in [1.0, 5.0, 20.0] {
            let d = bessel_j_derivs(order(nu), x, DEFAULT_DIGITS).unwrap();
            let terms = [x * x * d.d2j, x * d.dj, (x * x - nu * nu) * d.j];
            let scale = terms.iter().fold(0.0f64, |m, t| m.max(t.abs()));
            assert!(
                terms.iter().sum::<f64>().abs() <= 1e-8 * scale,
                "nu {nu}, x {x}"
            );

            // Recurrence against independently evaluated J_{ν+1}.
            let next = bessel_j(order(nu + 1.0), x, DEFAULT_DIGITS).unwrap();
            let r = x * d.dj - nu * d.j + x * next;
            let scale = (x * d.dj).abs().max((nu * d.j).abs()).max((x * next).abs());
            assert!(r.abs() <= 1e-10 * scale, "nu {nu}, x {x}: {r}");
        }
    }
}

#[test]
fn struve_ode_residual() {
    for nu in [-0.4, 0.0, 0.3] {
        for x in [0.7, 3.0, 12.0, 40.0] {
            let d = struve_h_derivs(order(nu), x, DEFAULT_DIGITS).unwrap();
            let lhs = x * x * d.d2h + x * d.dh + (x * x - nu * nu) * d.h;
            // x²H'' + xH' + (x²−ν²)H = 4(x/2)^{ν+1}/(√π Γ(ν+1/2)) = x · forcing(x)
            let rhs = x * struve_forcing(nu, x).unwrap();
            let expect = 4.0 * (x / 2.0).powf(nu + 1.0) / (PI.sqrt() * gamma(nu + 0.5).unwrap());
            assert!(rel(rhs, expect) < 1e-13);
            assert!(rel(lhs, expect) < 1e-8, "nu {nu}, x {x}: {lhs} vs {expect}");
        }
    }
}

#[test]
fn struve_pair_lowers_the_order() {
    // H_{ν−1} from the pair against a direct evaluation at ν−1 in the slack strip.
    for (nu, x) in [(-0.2, 3.0), (0.25, 9.5)] {
        let (_, prev) = struve_h_pair(order(nu), x, 16).unwrap();
        let direct = struve_h(order(nu - 1.0), x, 16).unwrap();
        assert!(rel(prev, direct) < 1e-12, "{prev} vs {direct}");
    }
}

#[test]
fn ratio_closed_forms() {
    assert!(rel(ratio_j(order(-0.5), 1.0).unwrap(), 1f64.tan()) < 1e-14);
    assert!(rel(ratio_i(order(-0.5), 1.0).unwrap(), 1f64.tanh()) < 1e-14);
    for nu in [-0.5, 0.0, 2.0] {
        let x = 1e-6;
        assert!(rel(ratio_j(order(nu), x).unwrap(), x / (2.0 * (nu + 1.0))) < 1e-5);
    }
    assert!(rel(ratio_i(order(0.5), 1e-6).unwrap(), 1e-6 / 3.0) < 1e-5);
}

#[test]
fn ratios_match_series_quotients() {
    for nu in [-0.9, 0.0, 1.0, 5.0] {
        for x in [0.3, 1.0, 2.0, 9.0, 27.5] {
            let rj = ratio_j(order(nu), x).unwrap();
            let qj =
                bessel_j(order(nu + 1.0), x, 20).unwrap() / bessel_j(order(nu), x, 20).unwrap();
            assert!(rel(rj, qj) < 1e-12, "J: nu {nu}, x {x}: {rj} vs {qj}");
            let ri = ratio_i(order(nu), x).unwrap();
            let qi =
                bessel_i(order(nu + 1.0), x, 20).unwrap() / bessel_i(order(nu), x, 20).unwrap();
            assert!(rel(ri, qi) < 1e-12, "I: nu {nu}, x {x}");
            // I_{ν+1} < I_ν needs ν ≥ −1/2; below that the ratio tends to
            // 1 − (2ν+1)/(2x) from above.
            assert!(ri > 0.0 && (nu < -0.5 || ri < 1.0));
        }
    }
}

#[test]
fn weierstrass_partial_products() {
    let store = ZeroStore::in_memory();
    let table = store.table(Family::BesselJ, order(0.0), 200).unwrap();
    let x: f64 = 1.0;
    let target = bessel_j(order(0.0), x, 16).unwrap();
    let mut errors = Vec::new();
    for n in [50, 100, 200] {
        let product: f64 = table.zeros()[..n]
            .iter()
            .map(|j| 1.0 - x * x / (j * j))
            .product();
        errors.push((product - target).abs());
    }
    assert!(errors[2] < 0.5e-2 * target, "{errors:?}");
    assert!(errors[0] > errors[1] && errors[1] > errors[2], "{errors:?}");
}

fn coefficient(n: u64, k: u64) -> f64 {
    // Γ(2n−k+1)/(Γ(n−k+1)Γ(k+1)2^{n−k}) from the Γ function directly.
    gamma((2 * n - k + 1) as f64).unwrap()
        / (gamma((n - k + 1) as f64).unwrap()
            * gamma((k + 1) as f64).unwrap()
            * 2f64.powi((n - k) as i32))
}

#[test]
fn macdonald_polynomials() {
    assert_eq!(hn_coeffs(1).unwrap().coeffs(), &[1.0, 1.0]);
    assert_eq!(hn_coeffs(2).unwrap().coeffs(), &[3.0, 3.0, 1.0]);
    assert_eq!(hn_coeffs(3).unwrap().coeffs(), &[15.0, 15.0, 6.0, 1.0]);
    for n in [4u64, 9, 15] {
        let p = hn_coeffs(n as usize).unwrap();
        for k in 0..=n {
            assert!(rel(p.coeffs()[k as usize], coefficient(n, k)) < 1e-12);
        }
    }
    assert!(hn_coeffs(61).is_err());
    let p2 = hn_coeffs(2).unwrap();
    assert_eq!(
        hn_eval(&p2, ComplexVal::new(0.0, 0.0)),
        ComplexVal::new(3.0, 0.0)
    );
    assert_eq!(
        hn_eval(&p2, ComplexVal::new(1.0, 0.0)),
        ComplexVal::new(7.0, 0.0)
    );
    assert_eq!(
        hn_eval(&hn_coeffs(1).unwrap(), ComplexVal::new(-1.0, 0.0)).norm(),
        0.0
    );
}

#[test]
fn macdonald_ratio_at_real_argument() {
    // K_{3/2}(x)/K_{1/2}(x) = 1 + 1/x.
    let r = macdonald_ratio(0, ComplexVal::new(2.0, 0.0)).unwrap();
    assert!((r - ComplexVal::new(1.5, 0.0)).norm() < 1e-15);
    assert!(macdonald_ratio(1, ComplexVal::new(-1.0, 0.0)).is_err());
}
