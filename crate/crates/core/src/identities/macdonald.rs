use crate::error::{Error, Result};
use crate::numkernel::{CompensatedComplexSum, ComplexVal};
use crate::specfun::macdonald_ratio;
use crate::zeros::ComplexZeroSet;

use super::IdentityId;

/// Closest a point may come to a zero of H_n in the Mittag-Leffler check.
pub const POLE_DISTANCE: f64 = 1e-8;

fn one() -> ComplexVal {
    ComplexVal::new(1.0, 0.0)
}

/// Both sides of the K_P1, K_P2 or K_P4 identity at zero `j` (1-based) of
/// the set, in the set's order.
pub fn k_identity_sides(
    id: IdentityId,
    set: &ComplexZeroSet,
    j: usize,
) -> Result<(ComplexVal, ComplexVal)> {
    let n = set.n();
    if j == 0 || j > n {
        return Err(Error::Range(format!("zero index {j} is outside 1..={n}")));
    }
    let zs = set.zeros();
    let nu = set.nu();
    let zj = zs[j - 1];
    let others = || {
        zs.iter()
            .enumerate()
            .filter(move |&(i, _)| i + 1 != j)
            .map(|(_, &z)| z)
    };
    let power = match id {
        IdentityId::KP1 => 1,
        IdentityId::KP2 => 2,
        IdentityId::KP4 => 4,
        other => {
            return Err(Error::Usage(format!(
                "{other} is not a finite Macdonald identity"
            )))
        }
    };
    let zj_p = zj.powi(power);
    let mut lhs = CompensatedComplexSum::default();
    for zk in others() {
        let den = zk.powi(power) - zj_p;
        if den.norm() < 1e-14 * zj_p.norm() {
            return Err(Error::Invariant(format!(
                "zeros {zk} and {zj} of H_{n} have equal {power}th powers"
            )));
        }
        lhs.add(one() / den);
    }
    let rhs = match id {
        IdentityId::KP1 => (1.0 - 2.0 * zj - 2.0 * nu) / (2.0 * zj),
        IdentityId::KP2 => {
            let s: CompensatedComplexSum = zs.iter().map(|&zk| one() / (zk + zj)).collect();
            (1.0 - zj - nu) / (2.0 * zj * zj) - s.value() / (2.0 * zj)
        }
        _ => {
            let s: CompensatedComplexSum = zs
                .iter()
                .map(|&zk| one() / (zj + zk) + 2.0 * zj / (zj * zj + zk * zk))
                .collect();
            (2.0 - nu - zj) / (4.0 * zj.powi(4)) - s.value() / (4.0 * zj.powi(3))
        }
    };
    Ok((lhs.value(), rhs))
}

/// K_{ν+1}(z)/K_ν(z) from the polynomials, and 1 + 2ν/z − Σ_k 1/(z − z_k).
pub fn k_mittag_sides(set: &ComplexZeroSet, z: ComplexVal) -> Result<(ComplexVal, ComplexVal)> {
    if z.norm() == 0.0 || !z.is_finite() {
        return Err(Error::Domain(format!(
            "z must be finite and nonzero, got {z}"
        )));
    }
    if let Some(zk) = set
        .zeros()
        .iter()
        .find(|&&zk| (z - zk).norm() < POLE_DISTANCE)
    {
        return Err(Error::Pole(format!(
            "z = {z} is within {POLE_DISTANCE:e} of the zero {zk} of H_{}",
            set.n()
        )));
    }
    let lhs = macdonald_ratio(set.n(), z)?;
    let poles: CompensatedComplexSum = set.zeros().iter().map(|&zk| one() / (z - zk)).collect();
    let rhs = 1.0 + 2.0 * set.nu() / z - poles.value();
    Ok((lhs, rhs))
}
