//! Positive zeros of J_ν and **H**_ν, complex zeros of H_n, and a disk cache.

mod bessel;
mod cache;
mod hn;
mod store;
mod struve;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numkernel::ComplexVal;

pub use bessel::{find_bessel_zeros, mcmahon_guess};
pub(crate) use cache::write_atomically;
pub use cache::{
    cache_file_name, cache_load, cache_load_complex, cache_store, cache_store_complex,
    CACHE_VERSION,
};
pub use hn::find_hn_zeros;
pub use store::{ZeroStore, CACHE_DIR_ENV};
pub use struve::find_struve_zeros;

/// Default absolute tolerance on real zeros.
pub const REAL_ZERO_TOL: f64 = 1e-12;
/// Default absolute tolerance on the complex zeros of H_n.
pub const COMPLEX_ZERO_TOL: f64 = 1e-11;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    BesselJ,
    StruveH,
}

impl Family {
    pub fn as_str(self) -> &'static str {
        match self {
            Family::BesselJ => "bessel-j",
            Family::StruveH => "struve-h",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "bessel-j" => Ok(Family::BesselJ),
            "struve-h" => Ok(Family::StruveH),
            other => Err(Error::Usage(format!(
                "unknown family '{other}' (expected bessel-j or struve-h)"
            ))),
        }
    }
}

/// Ordered positive zeros of one function at one order.
#[derive(Clone, Debug, PartialEq)]
pub struct ZeroTable {
    family: Family,
    nu: f64,
    zeros: Vec<f64>,
    abs_tol: f64,
}

impl ZeroTable {
    /// Builds a table after checking that the zeros are positive, finite and
    /// strictly increasing.
    pub fn new(family: Family, nu: f64, zeros: Vec<f64>, abs_tol: f64) -> Result<Self> {
        if !(abs_tol > 0.0) {
            return Err(Error::Domain(format!(
                "abs_tol must be positive, got {abs_tol}"
            )));
        }
        if let Some(bad) = zeros.iter().find(|z| !(z.is_finite() && **z > 0.0)) {
            return Err(Error::Invariant(format!(
                "{family} zero table for nu = {nu} contains {bad}"
            )));
        }
        if let Some(i) = zeros.windows(2).position(|w| w[0] >= w[1]) {
            return Err(Error::Ordering(format!(
                "{family} zeros {} and {} at nu = {nu} are not strictly increasing ({} >= {})",
                i + 1,
                i + 2,
                zeros[i],
                zeros[i + 1]
            )));
        }
        Ok(ZeroTable {
            family,
            nu,
            zeros,
            abs_tol,
        })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn nu(&self) -> f64 {
        self.nu
    }

    pub fn zeros(&self) -> &[f64] {
        &self.zeros
    }

    pub fn abs_tol(&self) -> f64 {
        self.abs_tol
    }

    pub fn count(&self) -> usize {
        self.zeros.len()
    }

    /// The n-th zero, counted from 1.
    pub fn zero(&self, n: usize) -> Result<f64> {
        n.checked_sub(1)
            .and_then(|i| self.zeros.get(i).copied())
            .ok_or_else(|| {
                Error::Range(format!(
                    "zero {n} requested from a table of {} {} zeros",
                    self.zeros.len(),
                    self.family
                ))
            })
    }

    /// The first `count` zeros as a table of their own.
    pub fn truncated(&self, count: usize) -> ZeroTable {
        ZeroTable {
            zeros: self.zeros[..count.min(self.zeros.len())].to_vec(),
            ..self.clone()
        }
    }
}

/// The n zeros of H_n, equivalently of K_{n+1/2}, in the left half-plane.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexZeroSet {
    n: usize,
    zeros: Vec<ComplexVal>,
    abs_tol: f64,
}

impl ComplexZeroSet {
    /// Builds a zero set after checking the count, the half-plane and
    /// conjugate closure.
    pub fn new(n: usize, zeros: Vec<ComplexVal>, abs_tol: f64) -> Result<Self> {
        if n == 0 || zeros.len() != n {
            return Err(Error::Invariant(format!(
                "H_{n} needs {n} zeros, got {}",
                zeros.len()
            )));
        }
        if let Some(z) = zeros.iter().find(|z| !(z.re < 0.0 && z.im.is_finite())) {
            return Err(Error::Invariant(format!(
                "H_{n} zero {z} is not in the left half-plane"
            )));
        }
        for z in zeros.iter().filter(|z| z.im != 0.0) {
            if !zeros.contains(&z.conj()) {
                return Err(Error::Invariant(format!(
                    "H_{n} zero {z} has no conjugate partner"
                )));
            }
        }
        Ok(ComplexZeroSet { n, zeros, abs_tol })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The Macdonald order ν = n + 1/2.
    pub fn nu(&self) -> f64 {
        self.n as f64 + 0.5
    }

    pub fn zeros(&self) -> &[ComplexVal] {
        &self.zeros
    }

    pub fn abs_tol(&self) -> f64 {
        self.abs_tol
    }

    /// The same zeros in another order, for reordering-invariance checks.
    pub fn permuted(&self, order: &[usize]) -> Result<ComplexZeroSet> {
        let mut seen = vec![false; self.n];
        for &i in order {
            if i >= self.n || std::mem::replace(&mut seen[i], true) {
                return Err(Error::Domain(format!(
                    "{order:?} is not a permutation of 0..{}",
                    self.n
                )));
            }
        }
        if order.len() != self.n {
            return Err(Error::Domain(format!(
                "{order:?} is not a permutation of 0..{}",
                self.n
            )));
        }
        Ok(ComplexZeroSet {
            zeros: order.iter().map(|&i| self.zeros[i]).collect(),
            ..self.clone()
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_validation() {
        assert!(ZeroTable::new(Family::BesselJ, 0.0, vec![1.0, 2.0], 1e-12).is_ok());
        assert!(matches!(
            ZeroTable::new(Family::BesselJ, 0.0, vec![2.0, 2.0], 1e-12),
            Err(Error::Ordering(_))
        ));
        assert!(ZeroTable::new(Family::StruveH, 0.0, vec![-1.0], 1e-12).is_err());
        let t = ZeroTable::new(Family::StruveH, 0.0, vec![1.0, 2.0, 3.0], 1e-12).unwrap();
        assert_eq!(t.zero(3).unwrap(), 3.0);
        assert!(t.zero(0).is_err());
        assert!(t.zero(4).is_err());
        assert_eq!(t.truncated(2).zeros(), &[1.0, 2.0]);
    }

    #[test]
    fn complex_set_validation() {
        let pair = vec![ComplexVal::new(-1.5, 0.5), ComplexVal::new(-1.5, -0.5)];
        assert!(ComplexZeroSet::new(2, pair.clone(), 1e-11).is_ok());
        let unpaired = vec![ComplexVal::new(-1.5, 0.5), ComplexVal::new(-1.5, -0.4)];
        assert!(ComplexZeroSet::new(2, unpaired, 1e-11).is_err());
        assert!(ComplexZeroSet::new(1, vec![ComplexVal::new(0.5, 0.0)], 1e-11).is_err());
        let set = ComplexZeroSet::new(2, pair, 1e-11).unwrap();
        assert_eq!(set.permuted(&[1, 0]).unwrap().zeros()[0].im, -0.5);
        assert!(set.permuted(&[0, 0]).is_err());
    }

    #[test]
    fn family_names() {
        for f in [Family::BesselJ, Family::StruveH] {
            assert_eq!(f.as_str().parse::<Family>().unwrap(), f);
        }
        assert!("airy".parse::<Family>().is_err());
    }
}
