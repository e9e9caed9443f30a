use std::str::FromStr;

use crate::error::{Error, Result};
use crate::numkernel::ComplexVal;

/// An inclusive index range written `a..b`, or a single index `a`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IndexRange {
    pub first: usize,
    pub last: usize,
}

impl IndexRange {
    pub fn single(k: usize) -> Self {
        IndexRange { first: k, last: k }
    }

    /// Empty when `first > last`.
    pub fn values(&self) -> impl Iterator<Item = usize> {
        self.first..=self.last
    }

    pub fn is_empty(&self) -> bool {
        self.first > self.last
    }
}

impl FromStr for IndexRange {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parse = |t: &str| {
            t.trim().parse::<usize>().map_err(|_| {
                Error::Usage(format!(
                    "'{t}' is not a non-negative integer in range '{s}'"
                ))
            })
        };
        match s.split_once("..") {
            Some((a, b)) => Ok(IndexRange {
                first: parse(a)?,
                last: parse(b)?,
            }),
            None => Ok(IndexRange::single(parse(s)?)),
        }
    }
}

/// A comma-separated list of orders, e.g. `-0.9,0,2.7`. Duplicates are
/// dropped and the list is sorted.
pub fn parse_nu_list(s: &str) -> Result<Vec<f64>> {
    let mut out = Vec::new();
    for t in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let v = t
            .parse::<f64>()
            .map_err(|_| Error::Usage(format!("'{t}' is not a number in the order list '{s}'")))?;
        if !v.is_finite() {
            return Err(Error::Usage(format!("order {t} is not finite")));
        }
        out.push(v);
    }
    out.sort_by(f64::total_cmp);
    out.dedup_by(|a, b| a.to_bits() == b.to_bits());
    Ok(out)
}

/// A complex point written `re,im` or as a single real number.
pub fn parse_complex(s: &str) -> Result<ComplexVal> {
    let num = |t: &str| {
        t.trim()
            .parse::<f64>()
            .map_err(|_| Error::Usage(format!("'{t}' is not a number in the point '{s}'")))
    };
    let z = match s.split_once(',') {
        Some((re, im)) => ComplexVal::new(num(re)?, num(im)?),
        None => ComplexVal::new(num(s)?, 0.0),
    };
    if z.is_finite() {
        Ok(z)
    } else {
        Err(Error::Usage(format!("point '{s}' is not finite")))
    }
}
