//! Command-line front end: argument model, dispatch and rendering.
//!
//! `run` writes its rendered output to any `Write` so the binary can stream
//! roots to stdout while tests capture the same bytes in memory.

use std::io::{self, Write};
use std::ops::RangeInclusive;

use clap::{Args, Parser, Subcommand, ValueEnum};
use itertools::Itertools;
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};
use serde_json::{json, Value};
use thiserror::Error;

use permroots::counting::{length_class_count, r_total_by_classification};
use permroots::egf::{
    check_prime_power_equalities, power_product_egf, prime_power_structure, r_total,
    root_count_from_egf, root_count_egf, PrimePowerReport,
};
use permroots::gsets::g_set_bounded;
use permroots::numtheory::bracket;
use permroots::series::format_rational;
use permroots::{
    brute_force_roots, enumerate_roots, has_mth_root, root_count, CycleType, OracleConfig,
    Permutation,
};

pub const DEFAULT_ORACLE_CAP: usize = 8;
pub const DEFAULT_ROOT_LIMIT: usize = 10_000;
pub const DEFAULT_MAX_ORDER: usize = 40;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("input format: {0}")]
    InputFormat(String),
    #[error("size cap: {0}")]
    SizeCap(String),
    #[error("internal check failed: {0}")]
    Internal(String),
    #[error("i/o: {0}")]
    Io(#[from] io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::InputFormat(_) => 3,
            CliError::SizeCap(_) => 4,
            CliError::Internal(_) | CliError::Io(_) => 5,
        }
    }
}

impl From<permroots::Error> for CliError {
    fn from(e: permroots::Error) -> Self {
        use permroots::Error as E;
        match e {
            E::InvalidPermutation(_) | E::InvalidCycleType(_) => {
                CliError::InputFormat(e.to_string())
            }
            E::OracleBound { .. } => CliError::SizeCap(e.to_string()),
            E::ZeroArgument(_) | E::NotPrime(_) | E::NotInGSet { .. } => {
                CliError::Usage(e.to_string())
            }
            _ => CliError::Internal(e.to_string()),
        }
    }
}

type CliResult<T> = Result<T, CliError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

/// Decide, count and construct m-th roots of permutations.
#[derive(Debug, Parser)]
#[command(name = "permroots", version)]
pub struct Request {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide whether a permutation (or cycle type) has an m-th root.
    Exists(ObjectArgs),
    /// Count the m-th roots of a permutation (or cycle type).
    Count(CountArgs),
    /// Stream the m-th roots of a permutation in one-line notation.
    Roots(RootsArgs),
    /// Tabulate r(n,m) and p_m(n) over a range of n.
    Table(TableArgs),
    /// Check the block equalities of p_m(n) for a prime power m = q^r.
    Prob(ProbArgs),
    /// Like `prob`, and also check the series factorization behind it.
    Verify(VerifyArgs),
    /// Cross-check the library against the brute-force oracle.
    Selftest(SelftestArgs),
}

#[derive(Debug, Args)]
#[command(group = clap::ArgGroup::new("input").required(true).args(["perm", "cycle_type"]))]
pub struct ObjectArgs {
    #[arg(short = 'm', value_parser = clap::value_parser!(u64).range(1..))]
    pub m: u64,
    /// One-line notation, e.g. "2 3 1".
    #[arg(long)]
    pub perm: Option<String>,
    /// Cycle type, e.g. "1^2 3".
    #[arg(long = "type")]
    pub cycle_type: Option<String>,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct CountArgs {
    #[command(flatten)]
    pub object: ObjectArgs,
    #[arg(short, long, action = clap::ArgAction::Count)]
    pub verbose: u8,
}

#[derive(Debug, Args)]
pub struct RootsArgs {
    #[command(flatten)]
    pub object: ObjectArgs,
    /// Stop after this many roots; exceeding it is a size-cap refusal.
    #[arg(long, default_value_t = DEFAULT_ROOT_LIMIT)]
    pub limit: usize,
    /// Stream every root regardless of --limit.
    #[arg(long)]
    pub all: bool,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(short = 'm', value_parser = clap::value_parser!(u64).range(1..))]
    pub m: u64,
    /// Inclusive range such as 0..12, or a single n.
    #[arg(long = "n")]
    pub range: String,
    #[arg(long, default_value_t = DEFAULT_MAX_ORDER)]
    pub max_order: usize,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct ProbArgs {
    /// The prime q.
    #[arg(short = 'q', long)]
    pub q: u64,
    /// The exponent r in m = q^r.
    #[arg(short = 'r', long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    pub r: u32,
    /// Last block index j.
    #[arg(short = 'j', long, default_value_t = 5)]
    pub j: usize,
    #[arg(long, default_value_t = DEFAULT_MAX_ORDER)]
    pub max_order: usize,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub prob: ProbArgs,
    /// Truncation order for the factorization check.
    #[arg(long, default_value_t = 24)]
    pub order: usize,
}

#[derive(Debug, Args)]
pub struct SelftestArgs {
    /// Largest n for the exhaustive oracle comparison.
    #[arg(long, default_value_t = 5)]
    pub max_n: usize,
    #[arg(long, default_value_t = DEFAULT_ORACLE_CAP)]
    pub oracle_cap: usize,
    /// Comma-separated root degrees.
    #[arg(long, value_delimiter = ',', default_value = "2,3,4,5,6,8,9,12")]
    pub m: Vec<u64>,
    /// Largest weight for the identity checks.
    #[arg(long, default_value_t = 10)]
    pub identity_n: usize,
}

pub fn run(request: &Request, out: &mut dyn Write) -> CliResult<()> {
    match &request.command {
        Command::Exists(args) => exists(args, out),
        Command::Count(args) => count(args, out),
        Command::Roots(args) => roots(args, out),
        Command::Table(args) => table(args, out),
        Command::Prob(args) => prob(args, out),
        Command::Verify(args) => verify(args, out),
        Command::Selftest(args) => selftest(args, out),
    }
}

fn cycle_type_of(args: &ObjectArgs) -> CliResult<CycleType> {
    match (&args.perm, &args.cycle_type) {
        (Some(p), None) => Ok(p.parse::<Permutation>()?.cycle_type()),
        (None, Some(t)) => Ok(t.parse::<CycleType>()?),
        _ => Err(CliError::Usage(
            "give exactly one of --perm or --type".into(),
        )),
    }
}

fn permutation_of(args: &ObjectArgs) -> CliResult<Permutation> {
    match (&args.perm, &args.cycle_type) {
        (Some(p), None) => Ok(p.parse()?),
        (None, Some(t)) => Ok(t.parse::<CycleType>()?.representative()),
        _ => Err(CliError::Usage(
            "give exactly one of --perm or --type".into(),
        )),
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn exists(args: &ObjectArgs, out: &mut dyn Write) -> CliResult<()> {
    let t = cycle_type_of(args)?;
    let m = args.m;
    let verdict = has_mth_root(&t, m)?;
    let mut rows = Vec::new();
    for (ell, count) in t.parts() {
        let b = bracket(ell as u64, m)?;
        rows.push((ell, count, b, count % b == 0));
    }
    match args.format {
        Format::Text => {
            writeln!(out, "{}", yes_no(verdict))?;
            writeln!(out, "type {t}, m = {m}")?;
            writeln!(
                out,
                "{:>6} {:>6} {:>8} {:>8}",
                "ell", "a_ell", "bracket", "divides"
            )?;
            for (ell, count, b, d) in &rows {
                writeln!(out, "{ell:>6} {count:>6} {b:>8} {:>8}", yes_no(*d))?;
            }
        }
        Format::Json => {
            let witness: Vec<Value> = rows
                .iter()
                .map(|(ell, count, b, d)| json!({"ell": ell, "a_ell": count, "bracket": b, "divides": d}))
                .collect();
            let doc =
                json!({"m": m, "type": t.to_string(), "has_root": verdict, "witness": witness});
            writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("json"))?;
        }
        Format::Csv => {
            writeln!(out, "m,ell,a_ell,bracket,divides")?;
            for (ell, count, b, d) in &rows {
                writeln!(out, "{m},{ell},{count},{b},{d}")?;
            }
        }
    }
    Ok(())
}

fn count(args: &CountArgs, out: &mut dyn Write) -> CliResult<()> {
    let t = cycle_type_of(&args.object)?;
    let m = args.object.m;
    let total = root_count(&t, m)?;
    let mut classes = Vec::new();
    if args.verbose > 0 {
        for (ell, a) in t.parts() {
            let set = g_set_bounded(m, ell as u64, a)?;
            let solutions = set.solutions(a).len();
            let roots = length_class_count(ell as u64, a, m)?;
            classes.push((ell, a, set.elements().to_vec(), solutions, roots));
        }
    }
    match args.object.format {
        Format::Text => {
            writeln!(out, "{total}")?;
            for (ell, a, g, sols, roots) in &classes {
                writeln!(
                    out,
                    "ell={ell} a={a} G={} |E|={sols} roots={roots}",
                    format!("{g:?}").replace(' ', "")
                )?;
            }
        }
        Format::Json => {
            let mut doc = json!({"m": m, "type": t.to_string(), "count": total.to_string()});
            if args.verbose > 0 {
                doc["classes"] = classes
                    .iter()
                    .map(|(ell, a, g, sols, roots)| {
                        json!({"ell": ell, "a_ell": a, "associate_vector": g,
                               "solutions": sols, "roots": roots.to_string()})
                    })
                    .collect();
            }
            writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("json"))?;
        }
        Format::Csv => {
            writeln!(out, "m,type,count")?;
            writeln!(out, "{m},{t},{total}")?;
        }
    }
    Ok(())
}

fn roots(args: &RootsArgs, out: &mut dyn Write) -> CliResult<()> {
    let sigma = permutation_of(&args.object)?;
    let mut stream = enumerate_roots(&sigma, args.object.m)?.peekable();
    let mut emitted = 0usize;
    while let Some(tau) = stream.next() {
        match args.object.format {
            Format::Text => writeln!(out, "{tau}")?,
            Format::Csv => writeln!(
                out,
                "{}",
                tau.one_line()
                    .iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            )?,
            Format::Json => writeln!(out, "{}", json!(tau.one_line()))?,
        }
        emitted += 1;
        if !args.all && emitted >= args.limit && stream.peek().is_some() {
            out.flush()?;
            let total = root_count(&sigma.cycle_type(), args.object.m)?;
            return Err(CliError::SizeCap(format!(
                "stopped after {emitted} of {total} roots; raise --limit or pass --all"
            )));
        }
    }
    Ok(())
}

fn parse_range(text: &str) -> CliResult<RangeInclusive<usize>> {
    let bad = || CliError::InputFormat(format!("bad n-range `{text}`; expected a..b"));
    let (lo, hi) = match text.split_once("..") {
        Some((a, b)) => (
            a.trim().parse::<usize>().map_err(|_| bad())?,
            b.trim()
                .trim_start_matches('=')
                .parse::<usize>()
                .map_err(|_| bad())?,
        ),
        None => {
            let n = text.trim().parse::<usize>().map_err(|_| bad())?;
            (n, n)
        }
    };
    if lo > hi {
        return Err(bad());
    }
    Ok(lo..=hi)
}

/// `value` rounded half-up to `places` decimals; `value` must be non-negative.
fn decimal(num: &BigInt, den: &BigInt, places: u32) -> String {
    let scale = BigInt::from(10u32).pow(places);
    let scaled: BigInt = (num * &scale * 2 + den) / (den * 2);
    let (int, frac) = scaled.div_rem(&scale);
    format!(
        "{int}.{:0>width$}",
        frac.to_string(),
        width = places as usize
    )
}

fn table(args: &TableArgs, out: &mut dyn Write) -> CliResult<()> {
    let range = parse_range(&args.range)?;
    let hi = *range.end();
    if hi > args.max_order {
        return Err(CliError::SizeCap(format!(
            "n = {hi} exceeds the truncation cap {}; raise --max-order",
            args.max_order
        )));
    }
    let series = power_product_egf(args.m, hi)?;
    let mut rows = Vec::new();
    let mut n_fact = BigUint::one();
    for n in 0..=hi {
        if n > 0 {
            n_fact *= n;
        }
        if !range.contains(&n) {
            continue;
        }
        let p = series.coeff(n);
        let r = p * BigInt::from(n_fact.clone());
        if !r.is_integer() {
            return Err(CliError::Internal(format!(
                "r({n},{}) is not an integer",
                args.m
            )));
        }
        rows.push((n, r.to_integer(), p.numer().clone(), p.denom().clone()));
    }
    match args.format {
        Format::Json => {
            let doc: Vec<Value> = rows
                .iter()
                .map(|(n, r, pn, pd)| {
                    json!({"n": n, "m": args.m, "r_total": r.to_string(),
                           "p_num": pn.to_string(), "p_den": pd.to_string(),
                           "p_decimal": decimal(pn, pd, 12)})
                })
                .collect();
            writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("json"))?;
        }
        Format::Csv | Format::Text => {
            writeln!(out, "n,m,r_total,p_num,p_den,p_decimal")?;
            for (n, r, pn, pd) in &rows {
                writeln!(out, "{n},{},{r},{pn},{pd},{}", args.m, decimal(pn, pd, 12))?;
            }
        }
    }
    Ok(())
}

fn prime_power_report(args: &ProbArgs) -> CliResult<PrimePowerReport> {
    let last_n = (args.j + 1)
        .checked_mul(args.q as usize)
        .map(|x| x.saturating_sub(1))
        .unwrap_or(usize::MAX);
    if last_n > args.max_order {
        return Err(CliError::SizeCap(format!(
            "the last block reaches n = {last_n}, above the truncation cap {}",
            args.max_order
        )));
    }
    Ok(check_prime_power_equalities(args.q, args.r, args.j)?)
}

fn render_report(report: &PrimePowerReport, format: Format, out: &mut dyn Write) -> CliResult<()> {
    match format {
        Format::Text => {
            writeln!(out, "m = {}^{} = {}", report.q, report.r, report.m)?;
            for b in &report.blocks {
                let cells: Vec<String> = b
                    .values
                    .iter()
                    .map(|(n, p)| format!("p({n})={}", format_rational(p)))
                    .collect();
                writeln!(
                    out,
                    "j={} {} {}",
                    b.j,
                    cells.join(" "),
                    if b.equal { "equal" } else { "DIFFER" }
                )?;
            }
            writeln!(out, "{}", if report.passed() { "pass" } else { "fail" })?;
        }
        Format::Json => {
            let blocks: Vec<Value> = report
                .blocks
                .iter()
                .map(|b| {
                    let vals: Vec<Value> = b
                        .values
                        .iter()
                        .map(|(n, p)| json!({"n": n, "p": format_rational(p)}))
                        .collect();
                    json!({"j": b.j, "values": vals, "equal": b.equal})
                })
                .collect();
            let doc = json!({"q": report.q, "r": report.r, "m": report.m,
                             "blocks": blocks, "passed": report.passed()});
            writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("json"))?;
        }
        Format::Csv => {
            writeln!(out, "q,r,m,j,n,p,block_equal")?;
            for b in &report.blocks {
                for (n, p) in &b.values {
                    writeln!(
                        out,
                        "{},{},{},{},{n},{},{}",
                        report.q,
                        report.r,
                        report.m,
                        b.j,
                        format_rational(p),
                        b.equal
                    )?;
                }
            }
        }
    }
    Ok(())
}

fn prob(args: &ProbArgs, out: &mut dyn Write) -> CliResult<()> {
    let report = prime_power_report(args)?;
    render_report(&report, args.format, out)?;
    if !report.passed() {
        return Err(CliError::Internal(format!(
            "block equalities fail for m = {}",
            report.m
        )));
    }
    Ok(())
}

fn verify(args: &VerifyArgs, out: &mut dyn Write) -> CliResult<()> {
    let report = prime_power_report(&args.prob)?;
    render_report(&report, args.prob.format, out)?;
    if args.order > args.prob.max_order {
        return Err(CliError::SizeCap(format!(
            "order {} exceeds the truncation cap {}",
            args.order, args.prob.max_order
        )));
    }
    let s = prime_power_structure(args.prob.q, args.prob.r, args.order)?;
    writeln!(
        out,
        "G(x) exponents divisible by {}: {}",
        args.prob.q,
        yes_no(s.exponents_divisible)
    )?;
    writeln!(
        out,
        "G(x)/(1-x) partial sums: {}",
        yes_no(s.partial_sums_hold)
    )?;
    writeln!(
        out,
        "G(x)/(1-x) equals the power-product EGF: {}",
        yes_no(s.matches_product)
    )?;
    if !(report.passed() && s.holds()) {
        return Err(CliError::Internal(format!(
            "verification failed for m = {}",
            s.m
        )));
    }
    Ok(())
}

fn selftest(args: &SelftestArgs, out: &mut dyn Write) -> CliResult<()> {
    if args.max_n > args.oracle_cap {
        return Err(CliError::SizeCap(format!(
            "--max-n {} exceeds the oracle cap {}; raise --oracle-cap",
            args.max_n, args.oracle_cap
        )));
    }
    if args.identity_n > args.oracle_cap.max(DEFAULT_MAX_ORDER) {
        return Err(CliError::SizeCap(format!(
            "--identity-n {} is too large",
            args.identity_n
        )));
    }
    if args.m.contains(&0) {
        return Err(CliError::Usage("root degrees must be positive".into()));
    }
    let cfg = OracleConfig {
        max_n: args.oracle_cap,
    };
    let mut failures = Vec::new();

    let mut pairs = 0usize;
    for n in 0..=args.max_n {
        for image in (0..n).permutations(n) {
            let sigma = Permutation::from_images(image).expect("valid image");
            for &m in &args.m {
                let mut scanned = brute_force_roots(&sigma, m, &cfg)?;
                let mut built: Vec<Permutation> = enumerate_roots(&sigma, m)?.collect();
                scanned.sort();
                built.sort();
                let count = root_count(&sigma.cycle_type(), m)?;
                if built != scanned || *count.value() != BigUint::from(scanned.len()) {
                    failures.push(format!("oracle mismatch for sigma = {sigma}, m = {m}"));
                }
                pairs += 1;
            }
        }
    }
    writeln!(
        out,
        "oracle equivalence: {pairs} cases, n <= {}",
        args.max_n
    )?;

    for &m in &args.m {
        let series = root_count_egf(m, args.identity_n)?;
        for n in 0..=args.identity_n {
            let mut total = BigUint::zero();
            let mut n_fact = BigUint::one();
            for i in 1..=n {
                n_fact *= i;
            }
            for t in CycleType::all_of_weight(n) {
                let c = root_count(&t, m)?;
                if root_count_from_egf(&series, &t) != c {
                    failures.push(format!(
                        "generating function disagrees for type {t}, m = {m}"
                    ));
                }
                total += c.into_inner() * t.class_size();
            }
            if total != n_fact {
                failures.push(format!("class-sum identity fails for n = {n}, m = {m}"));
            }
            if r_total(n, m)? != r_total_by_classification(n, m)? {
                failures.push(format!("r({n},{m}) routes disagree"));
            }
        }
    }
    writeln!(
        out,
        "identity checks: n <= {}, m in {:?}",
        args.identity_n, args.m
    )?;

    if failures.is_empty() {
        writeln!(out, "selftest: pass")?;
        Ok(())
    } else {
        for f in &failures {
            writeln!(out, "{f}")?;
        }
        Err(CliError::Internal(format!(
            "{} selftest mismatches",
            failures.len()
        )))
    }
}
