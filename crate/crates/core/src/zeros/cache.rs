//! JSON zero caches. Zeros are stored as decimal strings with 20 significant
//! digits, enough to reproduce every binary64 value exactly.

use std::fs;
use std::io::{self, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::numkernel::ComplexVal;

use super::{ComplexZeroSet, Family, ZeroTable};

pub const CACHE_VERSION: u64 = 1;
const MACDONALD: &str = "macdonald";

#[derive(Serialize, Deserialize)]
struct RealDoc {
    version: u64,
    family: Family,
    nu: f64,
    abs_tol: f64,
    zeros: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct ComplexEntry {
    re: String,
    im: String,
}

#[derive(Serialize, Deserialize)]
struct ComplexDoc {
    version: u64,
    family: String,
    n: usize,
    nu: f64,
    abs_tol: f64,
    zeros: Vec<ComplexEntry>,
}

/// File name used for a cached table inside a cache directory.
pub fn cache_file_name(family: Family, nu: f64) -> String {
    format!("{family}_nu{nu:?}.json")
}

pub(super) fn complex_cache_file_name(n: usize) -> String {
    format!("{MACDONALD}_n{n}.json")
}

fn decimal(x: f64) -> String {
    format!("{x:.19e}")
}

pub(crate) fn write_atomically(path: &Path, text: &str) -> Result<()> {
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    fs::create_dir_all(dir)?;
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(text.as_bytes())?;
    tmp.as_file().sync_all()?;
    tmp.persist(path).map_err(|e| Error::Io(e.error))?;
    Ok(())
}

pub fn cache_store(table: &ZeroTable, path: &Path) -> Result<()> {
    let doc = RealDoc {
        version: CACHE_VERSION,
        family: table.family(),
        nu: table.nu(),
        abs_tol: table.abs_tol(),
        zeros: table.zeros().iter().map(|&z| decimal(z)).collect(),
    };
    write_atomically(
        path,
        &serde_json::to_string_pretty(&doc).expect("plain data serializes"),
    )
}

pub fn cache_store_complex(set: &ComplexZeroSet, path: &Path) -> Result<()> {
    let doc = ComplexDoc {
        version: CACHE_VERSION,
        family: MACDONALD.into(),
        n: set.n(),
        nu: set.nu(),
        abs_tol: set.abs_tol(),
        zeros: set
            .zeros()
            .iter()
            .map(|z| ComplexEntry {
                re: decimal(z.re),
                im: decimal(z.im),
            })
            .collect(),
    };
    write_atomically(
        path,
        &serde_json::to_string_pretty(&doc).expect("plain data serializes"),
    )
}

fn parse_error(path: &Path, text: &str, line: usize, column: usize, message: String) -> Error {
    let offset = text
        .split_inclusive('\n')
        .take(line.saturating_sub(1))
        .map(str::len)
        .sum::<usize>()
        + column.saturating_sub(1);
    Error::CacheParse {
        path: path.to_path_buf(),
        offset: offset.min(text.len()),
        line,
        column,
        message,
    }
}

/// Reads the file, checks its version, and decodes it; `None` when absent.
fn read_doc<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<Option<(T, String)>> {
    let text = match fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) if e.kind() == io::ErrorKind::NotFound => return Ok(None),
        Err(e) => return Err(e.into()),
    };
    let value: Value = serde_json::from_str(&text)
        .map_err(|e| parse_error(path, &text, e.line(), e.column(), e.to_string()))?;
    let found = value.get("version").and_then(Value::as_u64);
    match found {
        Some(CACHE_VERSION) => {}
        Some(found) => {
            return Err(Error::StaleCache {
                path: path.to_path_buf(),
                found,
                expected: CACHE_VERSION,
            })
        }
        None => {
            return Err(parse_error(
                path,
                &text,
                1,
                1,
                "missing integer field 'version'".into(),
            ))
        }
    }
    let doc = serde_json::from_str(&text)
        .map_err(|e| parse_error(path, &text, e.line(), e.column(), e.to_string()))?;
    Ok(Some((doc, text)))
}

fn parse_decimal(path: &Path, text: &str, s: &str) -> Result<f64> {
    s.parse::<f64>().map_err(|e| {
        let offset = text.find(s).unwrap_or(0);
        let line = text[..offset].matches('\n').count() + 1;
        let column = offset - text[..offset].rfind('\n').map_or(0, |i| i + 1) + 1;
        parse_error(path, text, line, column, format!("bad decimal '{s}': {e}"))
    })
}

/// Loads a cached table holding at least `min_count` zeros of the given
/// family and order. A missing file, a different family or order, or a
/// shorter table all give `None`.
pub fn cache_load(
    family: Family,
    nu: f64,
    min_count: usize,
    path: &Path,
) -> Result<Option<ZeroTable>> {
    let Some((doc, text)) = read_doc::<RealDoc>(path)? else {
        return Ok(None);
    };
    if doc.family != family || doc.nu.to_bits() != nu.to_bits() || doc.zeros.len() < min_count {
        return Ok(None);
    }
    let zeros = doc
        .zeros
        .iter()
        .map(|s| parse_decimal(path, &text, s))
        .collect::<Result<Vec<_>>>()?;
    ZeroTable::new(family, nu, zeros, doc.abs_tol).map(Some)
}

/// Loads the cached zeros of H_n, or `None` when absent or for another n.
pub fn cache_load_complex(n: usize, path: &Path) -> Result<Option<ComplexZeroSet>> {
    let Some((doc, text)) = read_doc::<ComplexDoc>(path)? else {
        return Ok(None);
    };
    if doc.family != MACDONALD || doc.n != n {
        return Ok(None);
    }
    let zeros = doc
        .zeros
        .iter()
        .map(|e| {
            Ok(ComplexVal::new(
                parse_decimal(path, &text, &e.re)?,
                parse_decimal(path, &text, &e.im)?,
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    ComplexZeroSet::new(n, zeros, doc.abs_tol).map(Some)
}
