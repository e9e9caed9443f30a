mod common;

use std::f64::consts::PI;

use rayleigh::numkernel::ComplexVal;
use rayleigh::specfun::{
    bessel_j_derivs, hn_coeffs, hn_eval_derivs, struve_forcing, struve_h_deriv, struve_h_derivs,
    Order, DEFAULT_DIGITS,
};
use rayleigh::zeros::{
    cache_load, cache_load_complex, cache_store, cache_store_complex, find_bessel_zeros,
    find_hn_zeros, find_struve_zeros, mcmahon_guess, Family, ZeroStore, ZeroTable,
};
use rayleigh::Error;

fn order(nu: f64) -> Order {
    Order::new(nu).unwrap()
}

#[test]
fn mcmahon_examples() {
    assert_eq!(mcmahon_guess(order(0.5), 3), 3.0 * PI);
    assert_eq!(mcmahon_guess(order(-0.5), 2), 1.5 * PI);
    let g = mcmahon_guess(order(0.0), 1);
    assert!((g - (0.75 * PI + 1.0 / (6.0 * PI))).abs() < 1e-15);
    assert!((g - 2.404825557695773).abs() < 5e-3);
}

#[test]
fn mcmahon_guesses_interlace() {
    for nu in [-0.9, -0.5, 0.0, 0.5, 1.0, 2.7, 5.0] {
        let t = find_bessel_zeros(order(nu), 60, 1e-12).unwrap();
        for (i, z) in t.zeros().iter().enumerate() {
            assert!(
                (z - mcmahon_guess(order(nu), i + 1)).abs() < 0.5,
                "nu {nu}, n {}",
                i + 1
            );
        }
    }
}

#[test]
fn bessel_closed_form_zeros() {
    let t = find_bessel_zeros(order(0.5), 30, 1e-12).unwrap();
    for (i, z) in t.zeros().iter().enumerate() {
        assert!((z - (i + 1) as f64 * PI).abs() < 1e-12);
    }
    let t = find_bessel_zeros(order(-0.5), 30, 1e-12).unwrap();
    for (i, z) in t.zeros().iter().enumerate() {
        assert!((z - (2 * i + 1) as f64 * PI / 2.0).abs() < 1e-12);
    }
}

#[test]
fn bessel_zeros_match_bisection_oracle() {
    let oracle = common::zeros_by_bisection(common::bessel_j0, 0.5, 0.25, 12);
    let t = find_bessel_zeros(order(0.0), 12, 1e-12).unwrap();
    for (z, o) in t.zeros().iter().zip(&oracle) {
        assert!((z - o).abs() < 1e-12, "{z} vs {o}");
    }
    assert!((t.zeros()[0] - 2.404825557695773).abs() < 1e-12);
}

#[test]
fn struve_zeros_match_bisection_oracle() {
    let oracle = common::zeros_by_bisection(common::struve_h0_scaled, 0.1, PI / 4.0, 8);
    let t = find_struve_zeros(order(0.0), 8, 1e-12).unwrap();
    for (z, o) in t.zeros().iter().zip(&oracle) {
        assert!((z - o).abs() < 1e-10, "{z} vs {o}");
    }
}

#[test]
fn struve_sine_limit() {
    let t = find_struve_zeros(order(-0.5 + 1e-9), 4, 1e-12).unwrap();
    for (i, z) in t.zeros().iter().enumerate() {
        assert!((z - (i + 1) as f64 * PI).abs() < 1e-6);
    }
}

#[test]
fn struve_tables_increase_and_are_deterministic() {
    for nu in [-0.4, -0.2, 0.0, 0.2, 0.4] {
        let a = find_struve_zeros(order(nu), 20, 1e-12).unwrap();
        assert!(a.zeros().windows(2).all(|w| w[0] < w[1]) && a.zeros()[0] > 0.0);
        let b = find_struve_zeros(order(nu), 20, 1e-12).unwrap();
        assert_eq!(a, b);
    }
}

#[test]
fn domain_errors() {
    assert!(matches!(
        find_struve_zeros(order(0.7), 3, 1e-12),
        Err(Error::Domain(_))
    ));
    assert!(find_bessel_zeros(order(0.0), 0, 1e-12).is_err());
    assert!(matches!(find_hn_zeros(0, 1e-11), Err(Error::Range(_))));
    assert!(matches!(find_hn_zeros(61, 1e-11), Err(Error::Range(_))));
}

#[test]
fn table_invariants_are_enforced() {
    assert!(ZeroTable::new(Family::BesselJ, 0.0, vec![2.0, 1.0], 1e-12).is_err());
    assert!(ZeroTable::new(Family::BesselJ, 0.0, vec![-1.0, 1.0], 1e-12).is_err());
    let t = ZeroTable::new(Family::BesselJ, 0.0, vec![1.0, 2.0], 1e-12).unwrap();
    assert_eq!(t.count(), 2);
    assert!(t.zero(3).is_err());
}

#[test]
fn small_macdonald_sets() {
    let z1 = find_hn_zeros(1, 1e-11).unwrap();
    assert!((z1.zeros()[0] - ComplexVal::new(-1.0, 0.0)).norm() < 1e-14);
    let z2 = find_hn_zeros(2, 1e-11).unwrap();
    let r = 3f64.sqrt() / 2.0;
    for z in z2.zeros() {
        assert!((z.re + 1.5).abs() < 1e-13 && (z.im.abs() - r).abs() < 1e-13);
    }
    assert!((z2.nu() - 2.5).abs() == 0.0);
}

#[test]
fn macdonald_set_invariants() {
    for n in 1..=20 {
        let set = find_hn_zeros(n, 1e-11).unwrap();
        assert_eq!(set.zeros().len(), n);
        let sum: ComplexVal = set.zeros().iter().sum();
        let expect = -((n * (n + 1)) as f64) / 2.0;
        assert!(
            (sum - expect).norm() <= 1e-9 * (n * n) as f64,
            "n {n}: {sum}"
        );
        for z in set.zeros() {
            assert!(z.re < 0.0);
            if z.im != 0.0 {
                let conj = set
                    .zeros()
                    .iter()
                    .filter(|w| w.re == z.re && w.im == -z.im)
                    .count();
                assert_eq!(conj, 1, "n {n}: {z} lacks its conjugate");
            }
        }
    }
}

#[test]
fn cache_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.json");
    let t = find_bessel_zeros(order(0.0), 10, 1e-12).unwrap();
    cache_store(&t, &path).unwrap();
    assert_eq!(
        cache_load(Family::BesselJ, 0.0, 10, &path)
            .unwrap()
            .unwrap(),
        t
    );
    assert!(cache_load(Family::BesselJ, 0.0, 20, &path)
        .unwrap()
        .is_none());
    assert!(cache_load(Family::BesselJ, 1.0, 5, &path)
        .unwrap()
        .is_none());
    assert!(
        cache_load(Family::BesselJ, 0.0, 5, &dir.path().join("missing.json"))
            .unwrap()
            .is_none()
    );

    let set = find_hn_zeros(7, 1e-11).unwrap();
    let cpath = dir.path().join("c.json");
    cache_store_complex(&set, &cpath).unwrap();
    assert_eq!(cache_load_complex(7, &cpath).unwrap().unwrap(), set);

    std::fs::write(&path, "{\"version\": 1, \"family\": ").unwrap();
    assert!(matches!(
        cache_load(Family::BesselJ, 0.0, 5, &path),
        Err(Error::CacheParse { .. })
    ));
}

#[test]
fn store_reuses_cache_directory() {
    let dir = tempfile::tempdir().unwrap();
    let a = ZeroStore::with_cache_dir(dir.path());
    let short = a.table(Family::StruveH, order(0.2), 5).unwrap();
    let long = a.table(Family::StruveH, order(0.2), 12).unwrap();
    assert_eq!(&long.zeros()[..5], short.zeros());
    let b = ZeroStore::with_cache_dir(dir.path());
    assert_eq!(*b.table(Family::StruveH, order(0.2), 12).unwrap(), *long);
    let j = a.table(Family::BesselJ, order(2.7), 15).unwrap();
    assert_eq!(*j, find_bessel_zeros(order(2.7), 15, 1e-12).unwrap());
}

fn rel_residual(value: f64, terms: &[f64]) -> f64 {
    value.abs() / terms.iter().fold(0.0f64, |m, t| m.max(t.abs()))
}

#[test]
fn bessel_relations_at_zeros() {
    for nu in [-0.9, 0.0, 2.7] {
        let t = find_bessel_zeros(order(nu), 40, 1e-12).unwrap();
        for &j in t.zeros() {
            let d = bessel_j_derivs(order(nu), j, DEFAULT_DIGITS).unwrap();
            assert!(rel_residual(j * d.d2j + d.dj, &[j * d.d2j, d.dj]) < 1e-8);
            assert!(rel_residual(d.j_next + d.dj, &[d.j_next, d.dj]) < 1e-8);
            let r = j * d.dj_next - (nu + 1.0) * d.dj;
            assert!(rel_residual(r, &[j * d.dj_next, (nu + 1.0) * d.dj]) < 1e-8);
        }
    }
}

#[test]
fn struve_relations_at_zeros() {
    for nu in [-0.4, 0.0, 0.4] {
        let t = find_struve_zeros(order(nu), 20, 1e-12).unwrap();
        for &h in t.zeros() {
            let d = struve_h_derivs(order(nu), h, DEFAULT_DIGITS).unwrap();
            let forcing = struve_forcing(nu, h).unwrap();
            assert!(((h * d.d2h + d.dh) - forcing).abs() <= 1e-8 * forcing.abs());
            assert!((d.h_prev - d.dh).abs() <= 1e-10 * d.dh.abs());
            // H_{ν−1}' through its own lowering recurrence.
            let dprev = struve_h_deriv(order(nu - 1.0), h, DEFAULT_DIGITS).unwrap();
            let r = h * dprev - nu * d.dh - h * d.d2h;
            assert!(
                rel_residual(r, &[h * dprev, nu * d.dh, h * d.d2h]) < 1e-8,
                "nu {nu}, h {h}"
            );
        }
    }
}

/// K_{n+1/2} and K_{n+3/2} with first and second derivatives, from
/// K_{n+1/2}(z) = √(π/2) z^{−n−1/2} e^{−z} H_n(z).
fn macdonald_k(n: usize, z: ComplexVal) -> [ComplexVal; 5] {
    let nu = n as f64 + 0.5;
    let f = (PI / 2.0).sqrt() * z.powf(-nu) * (-z).exp();
    let df = f * (-nu / z - 1.0);
    let d2f = f * ((-nu / z - 1.0).powi(2) + nu / (z * z));
    let (h, dh, d2h) = hn_eval_derivs(&hn_coeffs(n).unwrap(), z);
    let k = f * h;
    let dk = df * h + f * dh;
    let d2k = d2f * h + 2.0 * df * dh + f * d2h;
    let g = f / z;
    let dg = g * (-(nu + 1.0) / z - 1.0);
    let (h1, dh1, _) = hn_eval_derivs(&hn_coeffs(n + 1).unwrap(), z);
    [k, dk, d2k, g * h1, dg * h1 + g * dh1]
}

fn rel_complex(value: ComplexVal, terms: &[ComplexVal]) -> f64 {
    value.norm() / terms.iter().fold(0.0f64, |m, t| m.max(t.norm()))
}

#[test]
fn macdonald_relations_at_zeros() {
    for n in 1..=12 {
        let nu = n as f64 + 0.5;
        for &z in find_hn_zeros(n, 1e-11).unwrap().zeros() {
            let [k, dk, d2k, k1, dk1] = macdonald_k(n, z);
            assert!(k.norm() <= 1e-8 * dk.norm());
            assert!(
                rel_complex(z * d2k + dk, &[z * d2k, dk]) < 1e-8,
                "B1 n {n} z {z}"
            );
            assert!(rel_complex(dk + k1, &[dk, k1]) < 1e-8, "B2 n {n} z {z}");
            let r = z * dk1 + (nu + 1.0) * k1;
            assert!(
                rel_complex(r, &[z * dk1, (nu + 1.0) * k1]) < 1e-8,
                "B3 n {n} z {z}"
            );
        }
    }
}
