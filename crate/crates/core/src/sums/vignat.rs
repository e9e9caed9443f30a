use crate::error::{Error, Result};
use crate::numkernel::CompensatedSum;

/// Both sides of
/// Σ_{n≠k} 1/(a_n⁴ − a_k⁴) = (1/2a_k²)[Σ_{n≠k} 1/(a_n² − a_k²) − Σ_{n≠k} 1/(a_n² + a_k²)]
/// over a finite list, with `k` counted from 1.
pub fn vignat_split(values: &[f64], k: usize) -> Result<(f64, f64)> {
    if k == 0 || k > values.len() {
        return Err(Error::Range(format!(
            "index {k} is outside a list of {} values",
            values.len()
        )));
    }
    let ak = values[k - 1];
    if !(ak.is_finite() && ak != 0.0) {
        return Err(Error::Domain(format!(
            "a_k must be finite and nonzero, got {ak}"
        )));
    }
    let (a2, a4) = (ak * ak, ak.powi(4));
    let mut quartic = CompensatedSum::new();
    let mut minus = CompensatedSum::new();
    let mut plus = CompensatedSum::new();
    for (i, &a) in values.iter().enumerate() {
        if i + 1 == k {
            continue;
        }
        let d4 = a.powi(4) - a4;
        if d4.abs() < 1e-14 * a4 {
            return Err(Error::DegenerateSpacing(format!(
                "a_{} = {a} has the same fourth power as a_{k} = {ak}",
                i + 1
            )));
        }
        // Factored so that close values keep full relative accuracy:
        // a − a_k is exact when a and a_k are within a factor of two.
        let d2 = (a - ak) * (a + ak);
        let s2 = a * a + a2;
        quartic.add(1.0 / (d2 * s2));
        minus.add(1.0 / d2);
        plus.add(1.0 / s2);
    }
    let rhs = (minus.value() - plus.value()) / (2.0 * a2);
    Ok((quartic.value(), rhs))
}
