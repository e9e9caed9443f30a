//! Reciprocal-power sums over zeros: direct truncation with an extrapolated
//! tail, and closed forms from the Mittag-Leffler expansions.

mod closed;
mod richardson;
mod vignat;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numkernel::CompensatedSum;
use crate::specfun::Order;
use crate::zeros::{Family, ZeroStore, ZeroTable};

pub use closed::{closed_minus_sum, closed_plus_sum, closed_quartic_sum, struve_ml_sum};
pub use richardson::{extrapolate_series, TailFit, DEFAULT_LEVELS};
pub use vignat::vignat_split;

/// Smallest truncation index the tail model accepts.
pub const MIN_TRUNCATION: usize = 20;
/// Starting truncation for p = 2 sums.
pub const DEFAULT_N_P2: usize = 200;
/// Starting truncation for p = 4 sums.
pub const DEFAULT_N_P4: usize = 60;
/// The adaptive driver stops doubling N here.
pub const MAX_TRUNCATION: usize = 1600;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ShiftSign {
    /// Terms 1/(z_n^p − c^p).
    Minus,
    /// Terms 1/(z_n^p + c^p).
    Plus,
}

/// The point c that the sum is taken about.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Center {
    /// The k-th zero of the table (k ≥ 1).
    Zero(usize),
    /// An arbitrary point x ≥ 0.
    Point(f64),
}

/// Σ_n 1/(z_n^p ∓ c^p) over the positive zeros z_n of one function.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SumSpec {
    family: Family,
    nu: f64,
    power: u32,
    sign: ShiftSign,
    center: Center,
    exclude_center: bool,
}

impl SumSpec {
    /// `exclude_center` drops the n = k term and needs a `Center::Zero(k)`.
    pub fn new(
        family: Family,
        nu: f64,
        power: u32,
        sign: ShiftSign,
        center: Center,
        exclude_center: bool,
    ) -> Result<Self> {
        if power != 2 && power != 4 {
            return Err(Error::Domain(format!("power must be 2 or 4, got {power}")));
        }
        match center {
            Center::Zero(0) => return Err(Error::Domain("zero indices start at 1".into())),
            Center::Point(x) if !(x >= 0.0 && x.is_finite()) => {
                return Err(Error::Domain(format!(
                    "center must be finite and >= 0, got {x}"
                )))
            }
            Center::Point(_) if exclude_center => {
                return Err(Error::Domain("only a zero center can be excluded".into()))
            }
            _ => {}
        }
        Ok(SumSpec {
            family,
            nu,
            power,
            sign,
            center,
            exclude_center,
        })
    }

    /// Σ_{n≠k} 1/(z_n^p − z_k^p), the form on the left of the zero-sum identities.
    pub fn excluded(family: Family, nu: f64, power: u32, k: usize) -> Result<Self> {
        Self::new(family, nu, power, ShiftSign::Minus, Center::Zero(k), true)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn nu(&self) -> f64 {
        self.nu
    }

    pub fn power(&self) -> u32 {
        self.power
    }

    pub fn sign(&self) -> ShiftSign {
        self.sign
    }

    pub fn center(&self) -> Center {
        self.center
    }

    pub fn exclude_center(&self) -> bool {
        self.exclude_center
    }

    fn center_index(&self) -> usize {
        match self.center {
            Center::Zero(k) => k,
            Center::Point(_) => 0,
        }
    }

    fn check_table(&self, table: &ZeroTable) -> Result<()> {
        if table.family() != self.family || table.nu().to_bits() != self.nu.to_bits() {
            return Err(Error::Domain(format!(
                "sum over {} zeros at nu = {} given a {} table at nu = {}",
                self.family,
                self.nu,
                table.family(),
                table.nu()
            )));
        }
        Ok(())
    }

    /// The terms for n = 1..=n_max, with the excluded term set to 0.
    fn terms(&self, table: &ZeroTable, n_max: usize) -> Result<Vec<f64>> {
        self.check_table(table)?;
        if n_max > table.count() {
            return Err(Error::Range(format!(
                "truncation {n_max} exceeds the {} zeros in the table",
                table.count()
            )));
        }
        let c = match self.center {
            Center::Zero(k) => table.zero(k)?,
            Center::Point(x) => x,
        };
        let p = self.power as i32;
        let cp = c.powi(p);
        let shift = match self.sign {
            ShiftSign::Minus => -cp,
            ShiftSign::Plus => cp,
        };
        let k = self.center_index();
        table.zeros()[..n_max]
            .iter()
            .enumerate()
            .map(|(i, &z)| {
                if self.exclude_center && i + 1 == k {
                    return Ok(0.0);
                }
                let den = z.powi(p) + shift;
                if den.abs() < 1e-14 * cp {
                    return Err(Error::DegenerateSpacing(format!(
                        "term {} has denominator {den:e} against center^p = {cp:e}",
                        i + 1
                    )));
                }
                Ok(1.0 / den)
            })
            .collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SumMethod {
    DirectTail,
    ClosedForm,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SumResult {
    pub value: f64,
    pub truncation_n: usize,
    /// Bound on the error of the extrapolated tail; zero inaccuracy is not included.
    pub tail_bound: f64,
    pub method: SumMethod,
    pub warning: Option<String>,
}

impl SumResult {
    pub fn closed_form(value: f64) -> Self {
        SumResult {
            value,
            truncation_n: 0,
            tail_bound: 0.0,
            method: SumMethod::ClosedForm,
            warning: None,
        }
    }
}

/// The first `n` terms, compensated.
pub fn partial_sum(spec: &SumSpec, table: &ZeroTable, n: usize) -> Result<f64> {
    let k = spec.center_index();
    if k > table.count() {
        return Err(Error::Range(format!(
            "center zero {k} is not in a table of {} zeros",
            table.count()
        )));
    }
    let terms = spec.terms(table, n)?;
    Ok(terms.into_iter().collect::<CompensatedSum>().value())
}

/// The first `n` terms plus an extrapolated tail, with `levels` partial sums.
pub fn tail_extrapolate_levels(
    spec: &SumSpec,
    table: &ZeroTable,
    n: usize,
    levels: usize,
) -> Result<SumResult> {
    if n < MIN_TRUNCATION {
        return Err(Error::Domain(format!(
            "tail extrapolation needs N >= {MIN_TRUNCATION}, got {n}"
        )));
    }
    let k = spec.center_index();
    let first = richardson::nodes(n, levels)[0];
    if first <= k {
        return Err(Error::Domain(format!(
            "N = {n} puts the first of {levels} partial sums at M = {first}, not beyond k = {k}"
        )));
    }
    let terms = spec.terms(table, n)?;
    let fit = extrapolate_series(&terms, spec.power, levels)?;
    Ok(SumResult {
        value: fit.value,
        truncation_n: n,
        tail_bound: fit.tail_bound,
        method: SumMethod::DirectTail,
        warning: fit.warning,
    })
}

/// [`tail_extrapolate_levels`] with the default number of levels.
pub fn tail_extrapolate(spec: &SumSpec, table: &ZeroTable, n: usize) -> Result<SumResult> {
    tail_extrapolate_levels(spec, table, n, DEFAULT_LEVELS)
}

/// Starting truncation for a spec: the default for its power, raised so
/// that every partial sum in the fit lies well past the center.
pub fn initial_truncation(spec: &SumSpec) -> usize {
    let base = if spec.power == 2 {
        DEFAULT_N_P2
    } else {
        DEFAULT_N_P4
    };
    base.max(20 * spec.center_index())
}

/// Doubles N from `start` until the tail bound drops below `tol`. Stops
/// early once doubling no longer halves the bound, which means rounding in
/// the fit dominates; past `max_n` the last result carries a warning.
fn doubling(
    start: usize,
    max_n: usize,
    tol: f64,
    mut attempt: impl FnMut(usize) -> Result<SumResult>,
) -> Result<SumResult> {
    if !(tol > 0.0) {
        return Err(Error::Domain(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    let mut n = start;
    let mut previous: Option<SumResult> = None;
    loop {
        let result = attempt(n)?;
        if result.tail_bound < tol {
            return Ok(result);
        }
        if let Some(prev) = previous {
            if result.tail_bound > 0.5 * prev.tail_bound {
                return Ok(if prev.tail_bound < result.tail_bound {
                    prev
                } else {
                    result
                });
            }
        }
        if 2 * n > max_n {
            let note = format!(
                "tail bound {:e} above tolerance {tol:e} at N = {n}",
                result.tail_bound
            );
            let warning = Some(match result.warning {
                Some(w) => format!("{note}; {w}"),
                None => note,
            });
            return Ok(SumResult { warning, ..result });
        }
        previous = Some(result);
        n *= 2;
    }
}

/// Doubles N from [`initial_truncation`] until the tail bound drops below
/// `tol`, fetching zeros from `store`, up to [`MAX_TRUNCATION`].
pub fn sum_with_tail(spec: &SumSpec, store: &ZeroStore, tol: f64) -> Result<SumResult> {
    let order = Order::new(spec.nu)?;
    doubling(initial_truncation(spec), MAX_TRUNCATION, tol, |n| {
        let table = store.table(spec.family, order, n)?;
        tail_extrapolate(spec, &table, n)
    })
}

/// Σ_{m≥1} term(m) for terms decaying like m^{-p}, by the same doubling
/// scheme, starting from `start` terms and stopping at 2^20.
pub fn series_with_tail(
    term: impl Fn(usize) -> f64,
    p: u32,
    start: usize,
    tol: f64,
) -> Result<SumResult> {
    doubling(start.max(MIN_TRUNCATION), 1 << 20, tol, |n| {
        let terms: Vec<f64> = (1..=n).map(&term).collect();
        let fit = extrapolate_series(&terms, p, DEFAULT_LEVELS)?;
        Ok(SumResult {
            value: fit.value,
            truncation_n: n,
            tail_bound: fit.tail_bound,
            method: SumMethod::DirectTail,
            warning: fit.warning,
        })
    })
}
