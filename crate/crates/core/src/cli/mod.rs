//! The `rayleigh` command line: zeros, sums, identity checks, sweeps and
//! cache management.
//!
//! Exit codes: 0 when everything ran and passed, 1 when an identity
//! residual exceeded its tolerance, 2 for usage errors and 3 for numerical
//! or I/O failures.

mod grid;
mod output;

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::identities::{
    IdentityId, IdentityKind, IdentityReport, Params, StruvePrefactor, Verifier,
};
use crate::numkernel::ComplexVal;
use crate::specfun::{Order, MAX_HN_DEGREE};
use crate::sums::{
    closed_minus_sum, closed_plus_sum, closed_quartic_sum, struve_ml_sum, sum_with_tail,
    tail_extrapolate, Center, ShiftSign, SumResult, SumSpec, MIN_TRUNCATION,
};
use crate::zeros::{
    find_bessel_zeros, find_hn_zeros, find_struve_zeros, Family, ZeroStore, COMPLEX_ZERO_TOL,
    REAL_ZERO_TOL,
};

pub use grid::{parse_complex, parse_nu_list, IndexRange};
pub use output::{
    render, summarize, ComplexZeroRow, Format, Row, SumRow, SummaryRow, ZeroRow, TOOL_VERSION,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NUMERICAL: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "rayleigh",
    version,
    about = "Zeros of Bessel, Struve and Macdonald functions, and sums over them"
)]
pub struct Cli {
    /// Directory for cached zero tables (overrides RAYLEIGH_CACHE_DIR).
    #[arg(long, global = true)]
    pub cache_dir: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write the output here (atomically) instead of to stdout.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute zeros of J_ν, H_ν, or the polynomial H_n behind K_{n+1/2}.
    Zeros(ZerosArgs),
    /// Evaluate a reciprocal-power sum over zeros.
    Sum(SumArgs),
    /// Check one identity over a grid of parameters.
    Verify(VerifyArgs),
    /// Check several identities over grids, with a summary per identity.
    Sweep(SweepArgs),
    /// Inspect, fill or clear the zero cache.
    Cache(CacheArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ZeroFamily {
    BesselJ,
    StruveH,
    Macdonald,
}

#[derive(Debug, Args)]
pub struct ZerosArgs {
    #[arg(long, value_enum)]
    pub family: ZeroFamily,
    #[arg(long, allow_hyphen_values = true)]
    pub nu: Option<f64>,
    #[arg(long)]
    pub count: Option<usize>,
    /// Degree of H_n (macdonald family).
    #[arg(long)]
    pub n: Option<usize>,
    /// Absolute tolerance on each zero.
    #[arg(long)]
    pub tol: Option<f64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SignArg {
    Minus,
    Plus,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    /// Truncated sum with an extrapolated tail.
    Tail,
    /// Closed form from the Mittag-Leffler expansion.
    Closed,
    Both,
}

#[derive(Debug, Args)]
pub struct SumArgs {
    #[arg(long, value_parser = parse_family)]
    pub family: Family,
    #[arg(long, allow_hyphen_values = true)]
    pub nu: f64,
    #[arg(long, default_value_t = 2)]
    pub power: u32,
    #[arg(long, value_enum, default_value_t = SignArg::Minus)]
    pub sign: SignArg,
    /// Center the sum on the k-th zero.
    #[arg(long, conflicts_with = "x", required_unless_present = "x")]
    pub k: Option<usize>,
    /// Center the sum on a point x ≥ 0.
    #[arg(long)]
    pub x: Option<f64>,
    /// Leave out the n = k term. Always done for the minus sign, where
    /// that term is singular.
    #[arg(long, requires = "k")]
    pub exclude: bool,
    #[arg(long, value_enum, default_value_t = MethodArg::Tail)]
    pub method: MethodArg,
    /// Fixed truncation N instead of adaptive doubling.
    #[arg(long)]
    pub truncation: Option<usize>,
    /// Target tail bound for the adaptive truncation.
    #[arg(long, default_value_t = 1e-10)]
    pub tol: f64,
}

#[derive(Debug, Args)]
pub struct GridArgs {
    /// Orders as a comma list, e.g. -0.9,0,2.7.
    #[arg(long, allow_hyphen_values = true)]
    pub nu: Option<String>,
    /// Zero index or inclusive range a..b.
    #[arg(long)]
    pub k: Option<IndexRange>,
    /// Degree of H_n, or an inclusive range.
    #[arg(long)]
    pub n: Option<IndexRange>,
    /// Zero index of H_n, or a range; defaults to all zeros.
    #[arg(long)]
    pub j: Option<IndexRange>,
    /// Point for k-ml, written re,im.
    #[arg(long, allow_hyphen_values = true, value_parser = parse_complex_arg)]
    pub z: Option<ComplexVal>,
    /// Tolerance for every identity in the run.
    #[arg(long)]
    pub tol: Option<f64>,
    /// Fixed truncation N for zero sums.
    #[arg(long)]
    pub truncation: Option<usize>,
    #[arg(long, value_parser = parse_prefactor, default_value = "derived")]
    pub struve_prefactor: StruvePrefactor,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_parser = parse_identity)]
    pub id: IdentityId,
    #[command(flatten)]
    pub grid: GridArgs,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    /// Identities as a comma list; all of them when omitted.
    #[arg(long, value_delimiter = ',', value_parser = parse_identity)]
    pub ids: Vec<IdentityId>,
    #[command(flatten)]
    pub grid: GridArgs,
}

#[derive(Debug, Args)]
pub struct CacheArgs {
    #[command(subcommand)]
    pub action: CacheAction,
}

#[derive(Debug, Subcommand)]
pub enum CacheAction {
    /// List cached tables.
    List,
    /// Delete cached tables.
    Clear,
    /// Compute tables and store them in the cache.
    Warm {
        #[arg(long, value_enum)]
        family: ZeroFamily,
        #[arg(long, allow_hyphen_values = true)]
        nu: Option<String>,
        #[arg(long)]
        count: Option<usize>,
        #[arg(long)]
        n: Option<IndexRange>,
    },
}

fn parse_family(s: &str) -> std::result::Result<Family, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_identity(s: &str) -> std::result::Result<IdentityId, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_prefactor(s: &str) -> std::result::Result<StruvePrefactor, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_complex_arg(s: &str) -> std::result::Result<ComplexVal, String> {
    parse_complex(s).map_err(|e| e.to_string())
}

fn usage(msg: impl Into<String>) -> Error {
    Error::Usage(msg.into())
}

/// Exit code for an error that stopped a command.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Usage(_) | Error::Domain(_) | Error::Range(_) => EXIT_USAGE,
        _ => EXIT_NUMERICAL,
    }
}

/// Exit code for a finished set of reports.
pub fn reports_exit_code(reports: &[IdentityReport]) -> i32 {
    if reports.iter().any(|r| r.error.is_some()) {
        EXIT_NUMERICAL
    } else if reports.iter().all(|r| r.passed) {
        EXIT_OK
    } else {
        EXIT_FAILED
    }
}

/// Parses `args` (program name first), runs the command and returns the
/// process exit code. Diagnostics go to stderr.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match execute(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("rayleigh: {e}");
            exit_code(&e)
        }
    }
}

fn store_for(cli: &Cli) -> ZeroStore {
    match &cli.cache_dir {
        Some(dir) => ZeroStore::with_cache_dir(dir),
        None => ZeroStore::from_env(),
    }
}

fn execute(cli: &Cli) -> Result<i32> {
    let out = cli.output.as_deref();
    match &cli.command {
        Command::Zeros(args) => zeros_command(cli, args, out),
        Command::Sum(args) => sum_command(cli, args, out),
        Command::Verify(args) => {
            let cases = verify_cases(args)?;
            run_cases(cli, &args.grid, cases, false, out)
        }
        Command::Sweep(args) => {
            let cases = sweep_cases(args)?;
            run_cases(cli, &args.grid, cases, true, out)
        }
        Command::Cache(args) => cache_command(cli, args, out),
    }
}

fn check_tol(tol: f64) -> Result<()> {
    if tol > 0.0 && tol.is_finite() {
        Ok(())
    } else {
        Err(usage(format!("tolerance must be positive, got {tol}")))
    }
}

fn check_degree(n: usize) -> Result<()> {
    if (1..=MAX_HN_DEGREE).contains(&n) {
        Ok(())
    } else {
        Err(usage(format!(
            "degree n must lie in 1..={MAX_HN_DEGREE}, got {n}"
        )))
    }
}

fn zeros_command(cli: &Cli, args: &ZerosArgs, out: Option<&Path>) -> Result<i32> {
    let store = store_for(cli);
    if let Some(tol) = args.tol {
        check_tol(tol)?;
    }
    let text = match args.family {
        ZeroFamily::Macdonald => {
            if args.nu.is_some() || args.count.is_some() {
                return Err(usage("--family macdonald takes --n, not --nu or --count"));
            }
            let n = args
                .n
                .ok_or_else(|| usage("--family macdonald needs --n"))?;
            check_degree(n)?;
            let set = match args.tol {
                Some(tol) if tol != COMPLEX_ZERO_TOL => std::sync::Arc::new(find_hn_zeros(n, tol)?),
                _ => store.hn_zeros(n)?,
            };
            let rows: Vec<ComplexZeroRow> = set
                .zeros()
                .iter()
                .enumerate()
                .map(|(i, z)| ComplexZeroRow {
                    family: "macdonald",
                    n,
                    nu: set.nu(),
                    j: i + 1,
                    re: z.re,
                    im: z.im,
                })
                .collect();
            render(&rows, cli.format, None)?
        }
        family => {
            if args.n.is_some() {
                return Err(usage("--n applies only to --family macdonald"));
            }
            let nu = args.nu.ok_or_else(|| usage("--nu is required"))?;
            let count = args.count.ok_or_else(|| usage("--count is required"))?;
            if count == 0 {
                return Err(usage("--count must be at least 1"));
            }
            let (family, order) = match family {
                ZeroFamily::BesselJ => (Family::BesselJ, Order::bessel(nu)?),
                _ => (Family::StruveH, Order::struve(nu)?),
            };
            let table = match args.tol {
                Some(tol) if tol != REAL_ZERO_TOL => match family {
                    Family::BesselJ => find_bessel_zeros(order, count, tol)?,
                    Family::StruveH => find_struve_zeros(order, count, tol)?,
                },
                _ => store.table(family, order, count)?.truncated(count),
            };
            let rows: Vec<ZeroRow> = table
                .zeros()
                .iter()
                .enumerate()
                .map(|(i, &zero)| ZeroRow {
                    family: family.as_str(),
                    nu,
                    n: i + 1,
                    zero,
                })
                .collect();
            render(&rows, cli.format, None)?
        }
    };
    output::emit(&text, out)?;
    Ok(EXIT_OK)
}

fn sum_command(cli: &Cli, args: &SumArgs, out: Option<&Path>) -> Result<i32> {
    check_tol(args.tol)?;
    match args.family {
        Family::BesselJ => Order::bessel(args.nu)?,
        Family::StruveH => Order::struve(args.nu)?,
    };
    let sign = match args.sign {
        SignArg::Minus => ShiftSign::Minus,
        SignArg::Plus => ShiftSign::Plus,
    };
    let center = match (args.k, args.x) {
        (Some(k), None) => Center::Zero(k),
        (None, Some(x)) => Center::Point(x),
        _ => return Err(usage("give exactly one of --k and --x")),
    };
    let exclude = args.exclude || (args.k.is_some() && sign == ShiftSign::Minus);
    let spec = SumSpec::new(args.family, args.nu, args.power, sign, center, exclude)?;
    if let Some(n) = args.truncation {
        if n < MIN_TRUNCATION {
            return Err(usage(format!(
                "--truncation must be at least {MIN_TRUNCATION}"
            )));
        }
    }
    let closed = |x: f64| -> Result<f64> {
        let order = Order::new(args.nu)?;
        match (args.family, args.power, sign) {
            (Family::BesselJ, 2, ShiftSign::Minus) => closed_minus_sum(order, x),
            (Family::BesselJ, 2, ShiftSign::Plus) => closed_plus_sum(order, x),
            (Family::BesselJ, 4, ShiftSign::Minus) => closed_quartic_sum(order, x),
            (Family::StruveH, 2, ShiftSign::Minus) => struve_ml_sum(order, x),
            _ => Err(usage("no closed form for this sum")),
        }
    };
    if args.method != MethodArg::Tail {
        if matches!(center, Center::Zero(_)) {
            return Err(usage("closed forms need a point center (--x)"));
        }
        if !(args.nu > -1.0) {
            return Err(usage("closed forms need nu > -1"));
        }
    }
    let store = store_for(cli);
    let mut rows = Vec::new();
    if args.method != MethodArg::Closed {
        let result = match args.truncation {
            Some(n) => {
                let table = store.table(args.family, Order::new(args.nu)?, n)?;
                tail_extrapolate(&spec, &table, n)?
            }
            None => sum_with_tail(&spec, &store, args.tol)?,
        };
        rows.push(SumRow::new(&spec, args.k, args.x, result));
    }
    if args.method != MethodArg::Tail {
        let x = args.x.expect("checked above");
        rows.push(SumRow::new(
            &spec,
            None,
            Some(x),
            SumResult::closed_form(closed(x)?),
        ));
    }
    output::emit(&render(&rows, cli.format, None)?, out)?;
    Ok(EXIT_OK)
}

/// One identity instance to evaluate.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Case {
    pub id: IdentityId,
    pub params: Params,
}

fn check_order(id: IdentityId, nu: f64) -> Result<()> {
    match id.kind() {
        IdentityKind::Bessel => Order::bessel(nu).map(|_| ()),
        IdentityKind::Struve => Order::struve(nu).map(|_| ()),
        _ => Ok(()),
    }
    .map_err(|e| usage(e.to_string()))
}

fn check_index(k: usize) -> Result<()> {
    if k == 0 {
        Err(usage("zero indices start at 1"))
    } else {
        Ok(())
    }
}

/// Expands one identity over a grid in the order (ν, k) or (n, j), both
/// ascending. Every cell is validated before anything is computed.
fn expand(
    id: IdentityId,
    nus: &[f64],
    ks: Option<IndexRange>,
    ns: Option<IndexRange>,
    js: Option<IndexRange>,
    z: Option<ComplexVal>,
    odd_only: bool,
) -> Result<Vec<Case>> {
    let mut cases = Vec::new();
    let need = |what: &str| usage(format!("{} needs {what}", id.slug()));
    match id.kind() {
        IdentityKind::Bessel | IdentityKind::Struve => {
            let ks = ks.ok_or_else(|| need("--k"))?;
            for &nu in nus {
                check_order(id, nu)?;
                for k in ks.values() {
                    check_index(k)?;
                    cases.push(Case {
                        id,
                        params: Params::order_index(nu, k),
                    });
                }
            }
        }
        IdentityKind::Integer => {
            let ks = ks.ok_or_else(|| need("--k"))?;
            for k in ks.values() {
                check_index(k)?;
                if id == IdentityId::QuarticOdd && k % 2 == 0 {
                    if odd_only {
                        continue;
                    }
                    return Err(usage(format!("quartic-odd needs odd k, got {k}")));
                }
                cases.push(Case {
                    id,
                    params: Params::index(k),
                });
            }
        }
        IdentityKind::Macdonald => {
            let ns = ns.ok_or_else(|| need("--n"))?;
            for n in ns.values() {
                check_degree(n)?;
                let js = js.unwrap_or(IndexRange { first: 1, last: n });
                for j in js.values() {
                    if j == 0 || j > n {
                        return Err(usage(format!("zero index j = {j} is outside 1..={n}")));
                    }
                    cases.push(Case {
                        id,
                        params: Params::degree_index(n, j),
                    });
                }
            }
        }
        IdentityKind::MacdonaldRatio => {
            let ns = ns.ok_or_else(|| need("--n"))?;
            let z = z.ok_or_else(|| need("--z"))?;
            for n in ns.values() {
                check_degree(n)?;
                cases.push(Case {
                    id,
                    params: Params::degree_point(n, z),
                });
            }
        }
    }
    Ok(cases)
}

fn grid_nus(grid: &GridArgs) -> Result<Option<Vec<f64>>> {
    grid.nu.as_deref().map(parse_nu_list).transpose()
}

fn verify_cases(args: &VerifyArgs) -> Result<Vec<Case>> {
    let id = args.id;
    let g = &args.grid;
    let nus = grid_nus(g)?;
    if matches!(id.kind(), IdentityKind::Bessel | IdentityKind::Struve) && nus.is_none() {
        return Err(usage(format!("{} needs --nu", id.slug())));
    }
    let cases = expand(id, &nus.unwrap_or_default(), g.k, g.n, g.j, g.z, false)?;
    if cases.is_empty() {
        return Err(usage("the parameter grid is empty"));
    }
    Ok(cases)
}

/// The default grid for each identity in a sweep: the parameter sets of the
/// acceptance checks.
fn default_grid(id: IdentityId) -> (Vec<f64>, Option<IndexRange>, Option<IndexRange>) {
    let range = |a, b| Some(IndexRange { first: a, last: b });
    match id {
        IdentityId::CalogeroP2 | IdentityId::QuarticJ => (
            vec![-0.9, -0.5, 0.0, 0.5, 1.0, 2.7, 5.0],
            range(1, 10),
            None,
        ),
        IdentityId::StruveP2 | IdentityId::StruveP4 => {
            (vec![-0.4, -0.2, 0.0, 0.2, 0.4], range(1, 6), None)
        }
        IdentityId::QuarticInt => (vec![], range(1, 8), None),
        IdentityId::QuarticOdd => (vec![], range(1, 7), None),
        IdentityId::KnownP2 => (vec![], range(1, 20), None),
        IdentityId::KP1 | IdentityId::KP2 | IdentityId::KP4 | IdentityId::KMl => {
            (vec![], None, range(1, 12))
        }
    }
}

fn sweep_cases(args: &SweepArgs) -> Result<Vec<Case>> {
    let g = &args.grid;
    let mut ids = if args.ids.is_empty() {
        IdentityId::ALL.to_vec()
    } else {
        args.ids.clone()
    };
    ids.sort();
    ids.dedup();
    let nus = grid_nus(g)?;
    let mut cases = Vec::new();
    for id in ids {
        let (default_nus, default_k, default_n) = default_grid(id);
        let nus = nus.clone().unwrap_or(default_nus);
        let z =
            g.z.or((id == IdentityId::KMl).then_some(ComplexVal::new(2.0, 1.0)));
        cases.extend(expand(
            id,
            &nus,
            g.k.or(default_k),
            g.n.or(default_n),
            g.j,
            z,
            true,
        )?);
    }
    if cases.is_empty() {
        return Err(usage("the parameter grid is empty"));
    }
    Ok(cases)
}

/// Evaluates cases in parallel; the reports keep the order of `cases`.
pub fn evaluate(verifier: &Verifier, cases: &[Case], tol: Option<f64>) -> Vec<IdentityReport> {
    cases
        .par_iter()
        .map(|c| verifier.verify(c.id, c.params, tol))
        .collect()
}

fn run_cases(
    cli: &Cli,
    grid: &GridArgs,
    cases: Vec<Case>,
    with_summary: bool,
    out: Option<&Path>,
) -> Result<i32> {
    if let Some(tol) = grid.tol {
        check_tol(tol)?;
    }
    if let Some(n) = grid.truncation {
        if n < MIN_TRUNCATION {
            return Err(usage(format!(
                "--truncation must be at least {MIN_TRUNCATION}"
            )));
        }
    }
    let verifier = Verifier::new(store_for(cli))
        .with_struve_prefactor(grid.struve_prefactor)
        .with_truncation(grid.truncation);
    let reports = evaluate(&verifier, &cases, grid.tol);
    let summary = summarize(&reports);
    for r in reports.iter().filter(|r| r.error.is_some()) {
        eprintln!(
            "rayleigh: {} {:?}: {}",
            r.identity_id,
            r.params,
            r.error.as_deref().unwrap_or_default()
        );
    }
    let text = render(
        &reports,
        cli.format,
        with_summary.then_some(summary.as_slice()),
    )?;
    output::emit(&text, out)?;
    if with_summary && cli.format == Format::Csv {
        eprint!("{}", output::summary_text(&summary));
    }
    Ok(reports_exit_code(&reports))
}

fn cache_dir(cli: &Cli) -> Result<PathBuf> {
    store_for(cli)
        .cache_dir()
        .map(Path::to_path_buf)
        .ok_or_else(|| usage("no cache directory: pass --cache-dir or set RAYLEIGH_CACHE_DIR"))
}

fn is_cache_file(name: &str) -> bool {
    let known = ["bessel-j_", "struve-h_", "macdonald_"];
    name.ends_with(".json") && known.iter().any(|p| name.starts_with(p))
}

fn cache_files(dir: &Path) -> Result<Vec<PathBuf>> {
    let mut files = Vec::new();
    match std::fs::read_dir(dir) {
        Ok(entries) => {
            for entry in entries {
                let path = entry?.path();
                if path
                    .file_name()
                    .and_then(|n| n.to_str())
                    .is_some_and(is_cache_file)
                {
                    files.push(path);
                }
            }
        }
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => {}
        Err(e) => return Err(e.into()),
    }
    files.sort();
    Ok(files)
}

fn cache_command(cli: &Cli, args: &CacheArgs, out: Option<&Path>) -> Result<i32> {
    let dir = cache_dir(cli)?;
    let mut text = String::new();
    match &args.action {
        CacheAction::List => {
            for path in cache_files(&dir)? {
                text.push_str(&format!("{}\n", path.display()));
            }
        }
        CacheAction::Clear => {
            for path in cache_files(&dir)? {
                std::fs::remove_file(&path)?;
                text.push_str(&format!("removed {}\n", path.display()));
            }
        }
        CacheAction::Warm {
            family,
            nu,
            count,
            n,
        } => {
            let store = store_for(cli);
            match family {
                ZeroFamily::Macdonald => {
                    let ns = n.ok_or_else(|| usage("warming macdonald zeros needs --n"))?;
                    for n in ns.values() {
                        check_degree(n)?;
                    }
                    for n in ns.values() {
                        store.hn_zeros(n)?;
                        text.push_str(&format!("macdonald n={n}\n"));
                    }
                }
                f => {
                    let nus =
                        parse_nu_list(nu.as_deref().ok_or_else(|| usage("--nu is required"))?)?;
                    let count = count.ok_or_else(|| usage("--count is required"))?;
                    let family = if *f == ZeroFamily::BesselJ {
                        Family::BesselJ
                    } else {
                        Family::StruveH
                    };
                    let orders = nus
                        .iter()
                        .map(|&nu| match family {
                            Family::BesselJ => Order::bessel(nu),
                            Family::StruveH => Order::struve(nu),
                        })
                        .collect::<Result<Vec<_>>>()?;
                    for order in orders {
                        store.table(family, order, count)?;
                        text.push_str(&format!("{family} nu={} count={count}\n", order.nu));
                    }
                }
            }
        }
    }
    output::emit(&text, out)?;
    Ok(EXIT_OK)
}
