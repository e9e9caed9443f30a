use crate::error::{Error, Result};
use crate::numkernel::CompensatedSum;

/// Number of partial sums the extrapolation combines by default.
pub const DEFAULT_LEVELS: usize = 8;

/// Limit of a series estimated from its partial sums.
#[derive(Clone, Debug, PartialEq)]
pub struct TailFit {
    pub value: f64,
    /// 4 × the change from dropping the shortest partial sum from the fit,
    /// plus the rounding error the fit amplifies.
    pub tail_bound: f64,
    pub warning: Option<String>,
}

/// Node indices M_i ≈ N·i/L, rounded to even values so that sequences with
/// a period-two component are sampled in phase.
pub(crate) fn nodes(n: usize, levels: usize) -> Vec<usize> {
    (1..=levels).map(|i| 2 * (n * i / (2 * levels))).collect()
}

/// Solves `a x = b` by Gaussian elimination with partial pivoting.
fn solve(mut a: Vec<Vec<f64>>, mut b: Vec<f64>) -> Result<Vec<f64>> {
    let n = b.len();
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs()))
            .expect("non-empty range");
        if a[pivot][col] == 0.0 {
            return Err(Error::Numerical("singular extrapolation system".into()));
        }
        a.swap(col, pivot);
        b.swap(col, pivot);
        for row in col + 1..n {
            let f = a[row][col] / a[col][col];
            for k in col..n {
                a[row][k] -= f * a[col][k];
            }
            b[row] -= f * b[col];
        }
    }
    let mut x = vec![0.0; n];
    for row in (0..n).rev() {
        let s: f64 = (row + 1..n).map(|k| a[row][k] * x[k]).sum();
        x[row] = (b[row] - s) / a[row][row];
    }
    Ok(x)
}

/// Fits `T(M) = S + Σ_j c_j M^{-e_j}` through the given points and returns S.
fn fit_limit(ms: &[usize], ts: &[f64], exponents: &[f64]) -> Result<f64> {
    let scale = *ms.last().expect("at least one node") as f64;
    let rows = ms
        .iter()
        .map(|&m| {
            let r = m as f64 / scale;
            std::iter::once(1.0)
                .chain(exponents.iter().map(|&e| r.powf(-e)))
                .collect()
        })
        .collect();
    Ok(solve(rows, ts.to_vec())?[0])
}

/// Estimates `Σ_{n≥1} terms[n-1]` for terms decaying like n^{-p}.
///
/// Smoothed partial sums T_M = S_M − t_M/2 at `levels` nodes up to
/// N = `terms.len()` are fitted with the model S + Σ c_j M^{-(p-1+j)},
/// j = 0..levels-2, which matches the Euler–Maclaurin form of the tail
/// for terms with an asymptotic expansion in 1/n.
pub fn extrapolate_series(terms: &[f64], p: u32, levels: usize) -> Result<TailFit> {
    let n = terms.len();
    if levels < 2 {
        return Err(Error::Domain(format!(
            "extrapolation needs at least 2 levels, got {levels}"
        )));
    }
    let ms = nodes(n, levels);
    if ms[0] < 2 || ms.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Domain(format!(
            "{n} terms are too few for {levels} extrapolation levels"
        )));
    }
    let mut sum = CompensatedSum::new();
    let mut ts = Vec::with_capacity(levels);
    let mut next = 0;
    for (i, &t) in terms.iter().enumerate() {
        sum.add(t);
        if next < ms.len() && i + 1 == ms[next] {
            ts.push(sum.value() - 0.5 * t);
            next += 1;
        }
    }
    let exponents: Vec<f64> = (0..levels - 1).map(|j| (p - 1 + j as u32) as f64).collect();
    let value = fit_limit(&ms, &ts, &exponents)?;
    let coarser = fit_limit(&ms[1..], &ts[1..], &exponents[..levels - 2])?;
    // The limit is a fixed linear combination Σ w_i T_i; rounding in each
    // T_i reaches the result scaled by |w_i|.
    let mut rounding = 0.0;
    for i in 0..levels {
        let mut unit = vec![0.0; levels];
        unit[i] = 1.0;
        rounding += fit_limit(&ms, &unit, &exponents)?.abs() * ts[i].abs();
    }
    let tail_bound = 4.0 * (value - coarser).abs() + 4.0 * f64::EPSILON * rounding;

    let residuals: Vec<f64> = ts.iter().map(|t| (value - t).abs()).collect();
    let warning = residuals.windows(2).position(|w| w[1] > w[0]).map(|i| {
        format!(
            "partial-sum residuals are not monotone at M = {} -> {} ({:e} -> {:e})",
            ms[i],
            ms[i + 1],
            residuals[i],
            residuals[i + 1]
        )
    });
    Ok(TailFit {
        value,
        tail_bound,
        warning,
    })
}
