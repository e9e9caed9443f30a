//! Both sides of each zero-sum identity, evaluated independently, with
//! residuals and pass/fail against a tolerance.

mod macdonald;

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numkernel::{recip_gamma, ComplexVal};
use crate::specfun::{struve_h_deriv, Order, DEFAULT_DIGITS};
use crate::sums::{
    closed_plus_sum, series_with_tail, sum_with_tail, tail_extrapolate, Center, ShiftSign,
    SumResult, SumSpec,
};
use crate::zeros::{ComplexZeroSet, Family, ZeroStore};

pub use macdonald::{k_identity_sides, k_mittag_sides, POLE_DISTANCE};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum IdentityId {
    /// Σ_{n≠k} 1/(j_n² − j_k²) = (ν+1)/(2j_k²)
    #[serde(rename = "CALOGERO_P2")]
    CalogeroP2,
    /// Σ_{n≠k} 1/(j_n⁴ − j_k⁴) = −(1/2j_k²) Σ_n 1/(j_n² + j_k²) + (ν+2)/(4j_k⁴)
    #[serde(rename = "QUARTIC_J")]
    QuarticJ,
    /// Σ_{n≠k} 1/(n⁴ − k⁴) = −π coth(kπ)/(4k³) + 7/(8k⁴)
    #[serde(rename = "QUARTIC_INT")]
    QuarticInt,
    /// Σ over odd n ≠ k of 1/(n⁴ − k⁴) = −π tanh(kπ/2)/(8k³) + 3/(8k⁴), k odd
    #[serde(rename = "QUARTIC_ODD")]
    QuarticOdd,
    /// Σ_{n≠k} 1/(n² − k²) = 3/(4k²)
    #[serde(rename = "KNOWN_P2")]
    KnownP2,
    /// Quadratic sum over the zeros of **H**_ν.
    #[serde(rename = "STRUVE_P2")]
    StruveP2,
    /// Quartic sum over the zeros of **H**_ν.
    #[serde(rename = "STRUVE_P4")]
    StruveP4,
    /// Σ_{k≠j} 1/(z_k − z_j) over the zeros of H_n.
    #[serde(rename = "K_P1")]
    KP1,
    /// Σ_{k≠j} 1/(z_k² − z_j²) over the zeros of H_n.
    #[serde(rename = "K_P2")]
    KP2,
    /// Σ_{k≠j} 1/(z_k⁴ − z_j⁴) over the zeros of H_n.
    #[serde(rename = "K_P4")]
    KP4,
    /// K_{ν+1}(z)/K_ν(z) = 1 + 2ν/z − Σ_k 1/(z − z_k).
    #[serde(rename = "K_ML")]
    KMl,
}

impl IdentityId {
    pub const ALL: [IdentityId; 11] = [
        IdentityId::CalogeroP2,
        IdentityId::QuarticJ,
        IdentityId::QuarticInt,
        IdentityId::QuarticOdd,
        IdentityId::KnownP2,
        IdentityId::StruveP2,
        IdentityId::StruveP4,
        IdentityId::KP1,
        IdentityId::KP2,
        IdentityId::KP4,
        IdentityId::KMl,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            IdentityId::CalogeroP2 => "CALOGERO_P2",
            IdentityId::QuarticJ => "QUARTIC_J",
            IdentityId::QuarticInt => "QUARTIC_INT",
            IdentityId::QuarticOdd => "QUARTIC_ODD",
            IdentityId::KnownP2 => "KNOWN_P2",
            IdentityId::StruveP2 => "STRUVE_P2",
            IdentityId::StruveP4 => "STRUVE_P4",
            IdentityId::KP1 => "K_P1",
            IdentityId::KP2 => "K_P2",
            IdentityId::KP4 => "K_P4",
            IdentityId::KMl => "K_ML",
        }
    }

    /// Lower-case command-line name, e.g. `calogero` or `k-p4`.
    pub fn slug(self) -> &'static str {
        match self {
            IdentityId::CalogeroP2 => "calogero",
            IdentityId::QuarticJ => "quartic-j",
            IdentityId::QuarticInt => "quartic-int",
            IdentityId::QuarticOdd => "quartic-odd",
            IdentityId::KnownP2 => "known-p2",
            IdentityId::StruveP2 => "struve-p2",
            IdentityId::StruveP4 => "struve-p4",
            IdentityId::KP1 => "k-p1",
            IdentityId::KP2 => "k-p2",
            IdentityId::KP4 => "k-p4",
            IdentityId::KMl => "k-ml",
        }
    }

    pub fn default_tolerance(self) -> f64 {
        match self {
            IdentityId::CalogeroP2 | IdentityId::QuarticJ => 1e-9,
            IdentityId::QuarticInt | IdentityId::QuarticOdd => 1e-10,
            IdentityId::KnownP2 => 1e-12,
            IdentityId::StruveP2 | IdentityId::StruveP4 => 1e-8,
            IdentityId::KP1 | IdentityId::KP2 | IdentityId::KP4 | IdentityId::KMl => 1e-11,
        }
    }

    /// What the first parameter of a case means for this identity.
    pub fn kind(self) -> IdentityKind {
        match self {
            IdentityId::CalogeroP2 | IdentityId::QuarticJ => IdentityKind::Bessel,
            IdentityId::StruveP2 | IdentityId::StruveP4 => IdentityKind::Struve,
            IdentityId::QuarticInt | IdentityId::QuarticOdd | IdentityId::KnownP2 => {
                IdentityKind::Integer
            }
            IdentityId::KP1 | IdentityId::KP2 | IdentityId::KP4 => IdentityKind::Macdonald,
            IdentityId::KMl => IdentityKind::MacdonaldRatio,
        }
    }
}

/// How an identity is parametrized.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IdentityKind {
    /// Order ν > −1 and zero index k.
    Bessel,
    /// Order |ν| < 1/2 and zero index k.
    Struve,
    /// Index k only.
    Integer,
    /// Degree n and zero index j.
    Macdonald,
    /// Degree n and a complex point z.
    MacdonaldRatio,
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for IdentityId {
    type Err = Error;

    /// Accepts either the upper-case id or the command-line name.
    fn from_str(s: &str) -> Result<Self> {
        IdentityId::ALL
            .into_iter()
            .find(|id| id.as_str() == s || id.slug() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = IdentityId::ALL.iter().map(|id| id.slug()).collect();
                Error::Usage(format!(
                    "unknown identity '{s}' (expected one of {})",
                    names.join(", ")
                ))
            })
    }
}

/// Which power of two multiplies Γ(ν+1/2) in the Struve right-hand sides.
///
/// At a zero h of **H**_ν the Struve equation gives
/// h**H**_ν''(h) + **H**_ν'(h) = h^ν / (√π 2^{ν−1} Γ(ν+1/2)), and carrying
/// that through the residue at h leads to 2^{ν+1} in the quadratic identity
/// and 2^{ν+2} in the quartic one. The alternative forms with 2^{ν−1} and
/// 2^ν differ from these by a factor of 4 in the last term.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StruvePrefactor {
    /// 2^{ν+1} (quadratic) and 2^{ν+2} (quartic).
    #[default]
    Derived,
    /// 2^{ν−1} (quadratic) and 2^ν (quartic).
    Printed,
}

impl StruvePrefactor {
    fn exponent_shift(self, id: IdentityId) -> f64 {
        match (self, id) {
            (StruvePrefactor::Derived, IdentityId::StruveP2) => 1.0,
            (StruvePrefactor::Derived, _) => 2.0,
            (StruvePrefactor::Printed, IdentityId::StruveP2) => -1.0,
            (StruvePrefactor::Printed, _) => 0.0,
        }
    }

    fn other(self) -> Self {
        match self {
            StruvePrefactor::Derived => StruvePrefactor::Printed,
            StruvePrefactor::Printed => StruvePrefactor::Derived,
        }
    }

    fn label(self, id: IdentityId) -> &'static str {
        match (self, id) {
            (StruvePrefactor::Derived, IdentityId::StruveP2) => "2^(nu+1)",
            (StruvePrefactor::Derived, _) => "2^(nu+2)",
            (StruvePrefactor::Printed, IdentityId::StruveP2) => "2^(nu-1)",
            (StruvePrefactor::Printed, _) => "2^nu",
        }
    }
}

impl FromStr for StruvePrefactor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "derived" => Ok(StruvePrefactor::Derived),
            "printed" => Ok(StruvePrefactor::Printed),
            other => Err(Error::Usage(format!(
                "unknown Struve prefactor '{other}' (expected derived or printed)"
            ))),
        }
    }
}

/// Parameters of one identity instance; unused fields stay `None`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Params {
    pub nu: Option<f64>,
    pub k: Option<usize>,
    pub n: Option<usize>,
    pub j: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub z: Option<ComplexVal>,
}

impl Params {
    pub fn order_index(nu: f64, k: usize) -> Self {
        Params {
            nu: Some(nu),
            k: Some(k),
            ..Params::default()
        }
    }

    pub fn index(k: usize) -> Self {
        Params {
            k: Some(k),
            ..Params::default()
        }
    }

    pub fn degree_index(n: usize, j: usize) -> Self {
        Params {
            nu: Some(n as f64 + 0.5),
            n: Some(n),
            j: Some(j),
            ..Params::default()
        }
    }

    pub fn degree_point(n: usize, z: ComplexVal) -> Self {
        Params {
            nu: Some(n as f64 + 0.5),
            n: Some(n),
            z: Some(z),
            ..Params::default()
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub identity_id: IdentityId,
    pub params: Params,
    pub lhs: ComplexVal,
    pub rhs: ComplexVal,
    pub abs_residual: f64,
    pub rel_residual: f64,
    pub truncation_n: usize,
    pub tail_bound: f64,
    pub tolerance: f64,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub notes: Option<String>,
    /// Set when the evaluation failed; the numeric fields are then NaN.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub error: Option<String>,
}

impl IdentityReport {
    /// Residuals of `lhs − rhs`; passes when |lhs − rhs| ≤ tol·max(1, |rhs|).
    pub fn new(
        identity_id: IdentityId,
        params: Params,
        lhs: ComplexVal,
        rhs: ComplexVal,
        tolerance: f64,
    ) -> Self {
        let abs_residual = (lhs - rhs).norm();
        let scale = rhs.norm();
        let rel_residual = if scale > 0.0 {
            abs_residual / scale
        } else {
            abs_residual
        };
        IdentityReport {
            identity_id,
            params,
            lhs,
            rhs,
            abs_residual,
            rel_residual,
            truncation_n: 0,
            tail_bound: 0.0,
            tolerance,
            passed: abs_residual <= tolerance * scale.max(1.0),
            notes: None,
            error: None,
        }
    }

    /// A report for a case whose evaluation failed.
    pub fn failed(identity_id: IdentityId, params: Params, tolerance: f64, error: &Error) -> Self {
        let nan = ComplexVal::new(f64::NAN, f64::NAN);
        IdentityReport {
            identity_id,
            params,
            lhs: nan,
            rhs: nan,
            abs_residual: f64::NAN,
            rel_residual: f64::NAN,
            truncation_n: 0,
            tail_bound: f64::NAN,
            tolerance,
            passed: false,
            notes: None,
            error: Some(error.to_string()),
        }
    }

    fn real(id: IdentityId, params: Params, lhs: f64, rhs: f64, tol: f64) -> Self {
        Self::new(
            id,
            params,
            ComplexVal::new(lhs, 0.0),
            ComplexVal::new(rhs, 0.0),
            tol,
        )
    }

    fn with_tail(mut self, truncation_n: usize, tail_bound: f64, warning: Option<String>) -> Self {
        self.truncation_n = truncation_n;
        self.tail_bound = tail_bound;
        self.notes = warning;
        self
    }

    fn add_note(&mut self, note: String) {
        self.notes = Some(match self.notes.take() {
            Some(n) => format!("{n}; {note}"),
            None => note,
        });
    }
}

fn check_tolerance(tol: f64) -> Result<()> {
    if tol > 0.0 && tol.is_finite() {
        Ok(())
    } else {
        Err(Error::Usage(format!(
            "tolerance must be positive, got {tol}"
        )))
    }
}

fn check_index(k: usize) -> Result<()> {
    if k == 0 {
        Err(Error::Domain("zero indices start at 1".into()))
    } else {
        Ok(())
    }
}

/// Share of the identity tolerance granted to each extrapolated tail.
const TAIL_SHARE: f64 = 0.25;

/// Evaluates identities against zeros drawn from a shared [`ZeroStore`].
#[derive(Debug, Default)]
pub struct Verifier {
    store: ZeroStore,
    struve_prefactor: StruvePrefactor,
    truncation: Option<usize>,
}

impl Verifier {
    pub fn new(store: ZeroStore) -> Self {
        Verifier {
            store,
            ..Verifier::default()
        }
    }

    pub fn with_struve_prefactor(mut self, prefactor: StruvePrefactor) -> Self {
        self.struve_prefactor = prefactor;
        self
    }

    /// Fixes the truncation N of zero sums instead of doubling it adaptively.
    pub fn with_truncation(mut self, n: Option<usize>) -> Self {
        self.truncation = n;
        self
    }

    pub fn store(&self) -> &ZeroStore {
        &self.store
    }

    fn zero_sum(&self, spec: &SumSpec, tol: f64) -> Result<SumResult> {
        match self.truncation {
            Some(n) => {
                let order = Order::new(spec.nu())?;
                let table = self.store.table(spec.family(), order, n)?;
                tail_extrapolate(spec, &table, n)
            }
            None => sum_with_tail(spec, &self.store, tol),
        }
    }

    fn zero(&self, family: Family, order: Order, k: usize) -> Result<f64> {
        self.store.table(family, order, k)?.zero(k)
    }

    /// Σ_{n≠k} 1/(j_n² − j_k²) against (ν+1)/(2j_k²).
    pub fn verify_calogero(&self, nu: f64, k: usize, tol: f64) -> Result<IdentityReport> {
        check_tolerance(tol)?;
        check_index(k)?;
        let order = Order::bessel(nu)?;
        let jk = self.zero(Family::BesselJ, order, k)?;
        let rhs = (nu + 1.0) / (2.0 * jk * jk);
        let spec = SumSpec::excluded(Family::BesselJ, nu, 2, k)?;
        let lhs = self.zero_sum(&spec, TAIL_SHARE * tol * rhs.abs().max(1.0))?;
        let params = Params::order_index(nu, k);
        Ok(
            IdentityReport::real(IdentityId::CalogeroP2, params, lhs.value, rhs, tol).with_tail(
                lhs.truncation_n,
                lhs.tail_bound,
                lhs.warning,
            ),
        )
    }

    /// Σ_{n≠k} 1/(j_n⁴ − j_k⁴) against the quadratic plus-sum in closed form.
    pub fn verify_quartic_j(&self, nu: f64, k: usize, tol: f64) -> Result<IdentityReport> {
        check_tolerance(tol)?;
        check_index(k)?;
        let order = Order::bessel(nu)?;
        let jk = self.zero(Family::BesselJ, order, k)?;
        let j2 = jk * jk;
        let rhs = -closed_plus_sum(order, jk)? / (2.0 * j2) + (nu + 2.0) / (4.0 * j2 * j2);
        let spec = SumSpec::excluded(Family::BesselJ, nu, 4, k)?;
        let lhs = self.zero_sum(&spec, TAIL_SHARE * tol * rhs.abs().max(1.0))?;
        let params = Params::order_index(nu, k);
        Ok(
            IdentityReport::real(IdentityId::QuarticJ, params, lhs.value, rhs, tol).with_tail(
                lhs.truncation_n,
                lhs.tail_bound,
                lhs.warning,
            ),
        )
    }

    /// The integer cases: sums over n (or odd n) summed directly with an
    /// extrapolated tail, against their hyperbolic and rational closed forms.
    pub fn verify_halfinteger_special(
        &self,
        id: IdentityId,
        k: usize,
        tol: f64,
    ) -> Result<IdentityReport> {
        check_tolerance(tol)?;
        check_index(k)?;
        let kf = k as f64;
        let start = 200.max(20 * k);
        let (lhs, rhs) = match id {
            IdentityId::KnownP2 => {
                let rhs = 3.0 / (4.0 * kf * kf);
                let term = |n: usize| if n == k { 0.0 } else { power_term(n, k, 2) };
                (series_with_tail(term, 2, start, TAIL_SHARE * tol)?, rhs)
            }
            IdentityId::QuarticInt => {
                let rhs = -PI / (4.0 * kf.powi(3) * (kf * PI).tanh()) + 7.0 / (8.0 * kf.powi(4));
                let term = |n: usize| if n == k { 0.0 } else { power_term(n, k, 4) };
                (series_with_tail(term, 4, start, TAIL_SHARE * tol)?, rhs)
            }
            IdentityId::QuarticOdd => {
                if k.is_multiple_of(2) {
                    return Err(Error::Usage(format!("QUARTIC_ODD needs an odd k, got {k}")));
                }
                let rhs =
                    -PI * (kf * PI / 2.0).tanh() / (8.0 * kf.powi(3)) + 3.0 / (8.0 * kf.powi(4));
                let term = |m: usize| {
                    let n = 2 * m - 1;
                    if n == k {
                        0.0
                    } else {
                        power_term(n, k, 4)
                    }
                };
                (series_with_tail(term, 4, start, TAIL_SHARE * tol)?, rhs)
            }
            other => {
                return Err(Error::Usage(format!(
                    "{other} is not an integer-sum identity"
                )))
            }
        };
        Ok(
            IdentityReport::real(id, Params::index(k), lhs.value, rhs, tol).with_tail(
                lhs.truncation_n,
                lhs.tail_bound,
                lhs.warning,
            ),
        )
    }

    /// The quadratic and quartic sums over the zeros of **H**_ν, |ν| < 1/2.
    /// The notes record the residual under the other choice of prefactor.
    pub fn verify_struve(
        &self,
        id: IdentityId,
        nu: f64,
        k: usize,
        tol: f64,
    ) -> Result<IdentityReport> {
        check_tolerance(tol)?;
        check_index(k)?;
        if !matches!(id, IdentityId::StruveP2 | IdentityId::StruveP4) {
            return Err(Error::Usage(format!("{id} is not a Struve identity")));
        }
        let order = Order::struve(nu)?;
        let hk = self.zero(Family::StruveH, order, k)?;
        let h2 = hk * hk;
        let dh = struve_h_deriv(order, hk, DEFAULT_DIGITS)?;
        // h^{ν−2p'} / (√π Γ(ν+1/2) H'(h)) without the power of two; 1/Γ is
        // used so that the term vanishes smoothly as ν → −1/2.
        let power = if id == IdentityId::StruveP2 { 2.0 } else { 4.0 };
        let core = hk.powf(nu - power) * recip_gamma(nu + 0.5)? / (PI.sqrt() * dh);
        let gamma_term = |p: StruvePrefactor| core / 2f64.powf(nu + p.exponent_shift(id));

        let mut tail_n = 0;
        let mut tail_bound = 0.0;
        let mut warnings = Vec::new();
        let base = if id == IdentityId::StruveP2 {
            (nu + 2.0) / (2.0 * h2)
        } else {
            let plus = SumSpec::new(
                Family::StruveH,
                nu,
                2,
                ShiftSign::Plus,
                Center::Zero(k),
                false,
            )?;
            let plus = self.zero_sum(&plus, TAIL_SHARE * tol * 2.0 * h2)?;
            tail_n = plus.truncation_n;
            tail_bound = plus.tail_bound / (2.0 * h2);
            warnings.extend(plus.warning);
            -plus.value / (2.0 * h2) + (nu + 3.0) / (4.0 * h2 * h2)
        };
        let rhs = base - gamma_term(self.struve_prefactor);
        let p = if id == IdentityId::StruveP2 { 2 } else { 4 };
        let spec = SumSpec::excluded(Family::StruveH, nu, p, k)?;
        let lhs = self.zero_sum(&spec, TAIL_SHARE * tol * rhs.abs().max(1.0))?;
        warnings.extend(lhs.warning);
        let warning = (!warnings.is_empty()).then(|| warnings.join("; "));
        let mut report = IdentityReport::real(id, Params::order_index(nu, k), lhs.value, rhs, tol)
            .with_tail(
                lhs.truncation_n.max(tail_n),
                lhs.tail_bound + tail_bound,
                warning,
            );

        let other = self.struve_prefactor.other();
        let alt = (lhs.value - (base - gamma_term(other))).abs();
        report.add_note(format!(
            "prefactor {}; with {} the residual is {alt:.3e}",
            self.struve_prefactor.label(id),
            other.label(id)
        ));
        Ok(report)
    }

    /// The finite sums over the zeros of H_n at zero `j`.
    pub fn verify_k_identity(
        &self,
        id: IdentityId,
        n: usize,
        j: usize,
        tol: f64,
    ) -> Result<IdentityReport> {
        check_tolerance(tol)?;
        let set = self.store.hn_zeros(n)?;
        verify_k_identity_on(&set, id, j, tol)
    }

    /// K_{ν+1}(z)/K_ν(z) against its expansion over the zeros of H_n.
    pub fn verify_k_mittag(&self, n: usize, z: ComplexVal, tol: f64) -> Result<IdentityReport> {
        check_tolerance(tol)?;
        let set = self.store.hn_zeros(n)?;
        let (lhs, rhs) = k_mittag_sides(&set, z)?;
        Ok(IdentityReport::new(
            IdentityId::KMl,
            Params::degree_point(n, z),
            lhs,
            rhs,
            tol,
        ))
    }

    /// Dispatches on the identity, reading the fields its kind needs from
    /// `params`. Failures are folded into the report.
    pub fn verify(&self, id: IdentityId, params: Params, tol: Option<f64>) -> IdentityReport {
        let tol = tol.unwrap_or(id.default_tolerance());
        let missing = |what: &str| Error::Usage(format!("{id} needs {what}"));
        let result = match id.kind() {
            IdentityKind::Bessel | IdentityKind::Struve => match (params.nu, params.k) {
                (Some(nu), Some(k)) => match id {
                    IdentityId::CalogeroP2 => self.verify_calogero(nu, k, tol),
                    IdentityId::QuarticJ => self.verify_quartic_j(nu, k, tol),
                    _ => self.verify_struve(id, nu, k, tol),
                },
                _ => Err(missing("nu and k")),
            },
            IdentityKind::Integer => match params.k {
                Some(k) => self.verify_halfinteger_special(id, k, tol),
                None => Err(missing("k")),
            },
            IdentityKind::Macdonald => match (params.n, params.j) {
                (Some(n), Some(j)) => self.verify_k_identity(id, n, j, tol),
                _ => Err(missing("n and j")),
            },
            IdentityKind::MacdonaldRatio => match (params.n, params.z) {
                (Some(n), Some(z)) => self.verify_k_mittag(n, z, tol),
                _ => Err(missing("n and z")),
            },
        };
        result.unwrap_or_else(|e| IdentityReport::failed(id, params, tol, &e))
    }
}

/// `verify_k_identity` on a given zero set, in its own order.
pub fn verify_k_identity_on(
    set: &ComplexZeroSet,
    id: IdentityId,
    j: usize,
    tol: f64,
) -> Result<IdentityReport> {
    check_tolerance(tol)?;
    let (lhs, rhs) = k_identity_sides(id, set, j)?;
    Ok(IdentityReport::new(
        id,
        Params::degree_index(set.n(), j),
        lhs,
        rhs,
        tol,
    ))
}

/// 1/(n^p − k^p) with the difference formed exactly in integers.
fn power_term(n: usize, k: usize, p: u32) -> f64 {
    let (np, kp) = ((n as u128).pow(p), (k as u128).pow(p));
    if np > kp {
        1.0 / (np - kp) as f64
    } else {
        -1.0 / (kp - np) as f64
    }
}
