//! `nqual` — generate, check, store, and export tuple-quality records over
//! the rational integers, the Gaussian integers, and the Hurwitz
//! quaternions.
//!
//! Exit codes: 0 success, 1 usage error (bad flags, unknown family,
//! unparseable tuple literal), 2 computation error (zero entries,
//! undefined quality, unreadable store).

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;

use nqual_core::arith::Budget;
use nqual_core::conditions::classify;
use nqual_core::families::{
    coeff_table, elkies_stream, generate, hurwitz_pell_x, hurwitz_power_triple, FamilyError,
    FamilySpec, QUARTET_BOUND,
};
use nqual_core::gaussian::{self, GaussianInt};
use nqual_core::hurwitz::{self, HurwitzInt};
use nqual_core::quality::{quality, QualityReport, SequenceTracker, Q_MARGIN};
use nqual_core::ring::{Ring, RingElem};
use nqual_core::store::{export_csv, JsonlStore, TupleRecord, ADHOC_FAMILY};

const STORE_ENV: &str = "NQUAL_STORE";
const DEFAULT_STORE: &str = "nqual.jsonl";

#[derive(Parser)]
#[command(
    name = "nqual",
    version,
    about = "Tuple qualities over Z, Z[i], and the Hurwitz quaternions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate family tuples, classify and score them, append to the store
    Gen(ScanArgs),
    /// Classify and score one user-supplied tuple
    Check(CheckArgs),
    /// Export the store as CSV
    Export(ExportArgs),
    /// Continue a family scan up to a total count, without duplicates
    Resume(ScanArgs),
    /// Run the built-in smoke checks
    Selftest,
}

#[derive(Args)]
struct ScanArgs {
    /// Family id: elkies4 | hurwitz-power3 | hurwitz-pell3 | hurwitz-n
    #[arg(long)]
    family: String,
    /// How many tuples to generate (for resume: the total target)
    #[arg(long)]
    count: Option<u64>,
    /// For hurwitz-power3: cover exponents 1..=LMAX (same as --count LMAX)
    #[arg(long)]
    lmax: Option<u64>,
    /// Tuple length for hurwitz-n (4..=12)
    #[arg(long)]
    n: Option<u32>,
    #[command(flatten)]
    effort: EffortArgs,
    /// Forbidden divisors for condition (F), comma-separated, all >= 3
    #[arg(long, value_name = "LIST")]
    f_set: Option<String>,
    /// Window length for the running-maximum report
    #[arg(long, default_value_t = 10)]
    window: usize,
    /// Results file (JSONL, appended); default $NQUAL_STORE or nqual.jsonl
    #[arg(long)]
    store: Option<PathBuf>,
}

#[derive(Args)]
struct CheckArgs {
    /// Ring of the entries: Z | Zi | Hurwitz
    #[arg(long, default_value = "Z")]
    ring: String,
    /// Forbidden divisors for condition (F), comma-separated, all >= 3
    #[arg(long, value_name = "LIST")]
    f_set: Option<String>,
    #[command(flatten)]
    effort: EffortArgs,
    /// Results file (JSONL, appended); default $NQUAL_STORE or nqual.jsonl
    #[arg(long)]
    store: Option<PathBuf>,
    /// Comma-separated entries, e.g. "1,8,-9" or "13,-1,-185646+246829i"
    tuple: String,
}

#[derive(Args)]
struct ExportArgs {
    /// Results file to read; default $NQUAL_STORE or nqual.jsonl
    #[arg(long)]
    store: Option<PathBuf>,
    /// Output CSV path (stdout if omitted)
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Clone, Copy)]
struct EffortArgs {
    /// Pollard-rho iteration budget per factorization
    #[arg(long)]
    budget: Option<u64>,
    /// Trial-division bound tried before rho
    #[arg(long)]
    trial_bound: Option<u64>,
}

impl EffortArgs {
    fn to_budget(self) -> Budget {
        let mut b = Budget::default();
        if let Some(rho) = self.budget {
            b.rho_iterations = rho;
        }
        if let Some(t) = self.trial_bound {
            b.trial_bound = t;
        }
        b
    }
}

/// Failures split by exit code: usage problems (1) versus computation
/// problems (2).
enum CliError {
    Usage(anyhow::Error),
    Computation(anyhow::Error),
}

fn usage(e: impl Into<anyhow::Error>) -> CliError {
    CliError::Usage(e.into())
}

fn comp(e: impl Into<anyhow::Error>) -> CliError {
    CliError::Computation(e.into())
}

type CliResult<T = ()> = Result<T, CliError>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version ride the error path in clap; they are not
            // failures. Everything else is a usage error: exit 1, not
            // clap's default 2 (which this tool reserves for computation
            // errors).
            use clap::error::ErrorKind;
            let ok = matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            let _ = e.print();
            return if ok { ExitCode::SUCCESS } else { ExitCode::from(1) };
        }
    };
    let result = match cli.command {
        Command::Gen(args) => cmd_scan(args, false),
        Command::Resume(args) => cmd_scan(args, true),
        Command::Check(args) => cmd_check(args),
        Command::Export(args) => cmd_export(args),
        Command::Selftest => cmd_selftest(),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Usage(e)) => {
            eprintln!("usage error: {e:#}");
            ExitCode::from(1)
        }
        Err(CliError::Computation(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn resolve_store(flag: Option<PathBuf>) -> PathBuf {
    flag.or_else(|| std::env::var_os(STORE_ENV).map(PathBuf::from))
        .unwrap_or_else(|| PathBuf::from(DEFAULT_STORE))
}

fn parse_f_set(raw: Option<&str>) -> CliResult<Vec<u64>> {
    let Some(raw) = raw else { return Ok(Vec::new()) };
    let mut out = Vec::new();
    for part in raw.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let v: u64 = part
            .parse()
            .map_err(|_| usage(anyhow!("--f-set entry {part:?} is not a positive integer")))?;
        if v < 3 {
            return Err(usage(anyhow!(
                "--f-set entry {v} is below 3; forbidding divisors 1 or 2 empties the tuple space"
            )));
        }
        out.push(v);
    }
    Ok(out)
}

fn family_usage_error(e: FamilyError) -> CliError {
    match e {
        FamilyError::UnknownFamily(_) | FamilyError::MissingN | FamilyError::UnsupportedN { .. } => {
            usage(e)
        }
        other => comp(other),
    }
}

/// q column: six decimals, ">=" prefix when the value is a certified lower
/// bound rather than the exact quality.
fn fmt_q(report: &QualityReport) -> String {
    if report.q_is_lower_bound {
        format!(">={:.6}", report.q)
    } else {
        format!("{:.6}", report.q)
    }
}

fn yn(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn cmd_scan(args: ScanArgs, resume: bool) -> CliResult {
    let spec = FamilySpec::from_id(&args.family, args.n).map_err(family_usage_error)?;
    let f_set = parse_f_set(args.f_set.as_deref())?;
    let target = args
        .count
        .or(args.lmax)
        .ok_or_else(|| usage(anyhow!("--count (or --lmax for hurwitz-power3) is required")))?;
    let budget = args.effort.to_budget();
    let store = JsonlStore::new(resolve_store(args.store));

    let start = if resume {
        let (records, skipped) = store
            .load()
            .with_context(|| format!("reading store {}", store.path().display()))
            .map_err(comp)?;
        if skipped > 0 {
            eprintln!("warning: skipped {skipped} unreadable line(s) in {}", store.path().display());
        }
        records
            .iter()
            .filter(|r| {
                r.family_id == spec.id()
                    && match spec {
                        // hurwitz-n records of different lengths share one
                        // family id; continue each length independently.
                        FamilySpec::HurwitzN { n } => r.n == n,
                        _ => true,
                    }
            })
            .map(|r| r.index + 1)
            .max()
            .unwrap_or(0)
    } else {
        0
    };

    if start >= target {
        println!(
            "store already holds {start} record(s) for {}; target {target} — nothing to generate",
            spec.id()
        );
        return Ok(());
    }
    let todo = target - start;
    let tuples = generate(spec, start, todo).map_err(family_usage_error)?;

    let mut tracker = SequenceTracker::new(args.window.max(1));
    println!(
        "{:<6} {:<15} {:<26} {:>2} {:>5} {:>5}  q",
        "index", "family", "params", "n", "in_A", "in_U"
    );
    for t in &tuples {
        let classification = t.tuple.classify(&f_set).map_err(comp)?;
        let report = t.tuple.quality(&budget).map_err(comp)?;
        tracker.track(&report);
        let record = TupleRecord::new(
            spec.ring(),
            t.tuple.entry_strings(),
            classification.profile,
            &report,
            spec.id(),
            t.params.clone(),
            t.index,
        );
        store
            .append(&record)
            .with_context(|| format!("appending to {}", store.path().display()))
            .map_err(comp)?;
        println!(
            "{:<6} {:<15} {:<26} {:>2} {:>5} {:>5}  {}",
            t.index,
            spec.id(),
            t.params,
            record.n,
            yn(classification.in_a),
            yn(classification.in_u),
            fmt_q(&report)
        );
    }
    println!("appended {} record(s) to {}", tuples.len(), store.path().display());
    if let (Some(best), Some(recent)) = (tracker.best_q(), tracker.recent_window_max()) {
        println!(
            "best q = {best:.6}; max over the last {} = {recent:.6}",
            tracker.window().min(tuples.len())
        );
    }
    Ok(())
}

fn cmd_check(args: CheckArgs) -> CliResult {
    let ring: Ring = args
        .ring
        .parse()
        .map_err(|_| usage(anyhow!("unknown ring {:?} (expected Z, Zi, or Hurwitz)", args.ring)))?;
    let f_set = parse_f_set(args.f_set.as_deref())?;
    let parts: Vec<&str> =
        args.tuple.split(',').map(str::trim).filter(|p| !p.is_empty()).collect();
    if parts.is_empty() {
        return Err(usage(anyhow!("empty tuple literal")));
    }
    let budget = args.effort.to_budget();
    let store = JsonlStore::new(resolve_store(args.store));
    match ring {
        Ring::Z => check_in_ring::<BigInt>(ring, &parts, &f_set, &budget, &store),
        Ring::Zi => check_in_ring::<GaussianInt>(ring, &parts, &f_set, &budget, &store),
        Ring::Hurwitz => check_in_ring::<HurwitzInt>(ring, &parts, &f_set, &budget, &store),
    }
}

fn check_in_ring<R: RingElem>(
    ring: Ring,
    parts: &[&str],
    f_set: &[u64],
    budget: &Budget,
    store: &JsonlStore,
) -> CliResult {
    let entries: Vec<R> = parts
        .iter()
        .map(|p| R::parse(p).map_err(|e| usage(anyhow!("entry {p:?}: {e}"))))
        .collect::<CliResult<_>>()?;
    let classification = classify(&entries, f_set).map_err(comp)?;
    let report = quality(&entries, budget).map_err(comp)?;

    let strings: Vec<String> = entries.iter().map(|e| e.to_string()).collect();
    println!("ring     {ring}");
    println!("entries  ({})", strings.join(", "));
    let p = &classification.profile;
    println!(
        "checks   Z {}  S1 {}  S2 {}  G1 {}  G2 {}  F {}",
        yn(p.zero_sum),
        yn(p.s1),
        yn(p.s2),
        yn(p.g1),
        yn(p.g2),
        yn(p.f)
    );
    println!("classes  in_A {}  in_U {}", yn(classification.in_a), yn(classification.in_u));
    println!("q        {}", fmt_q(&report));
    println!(
        "detail   max_norm {}  rad {}{}",
        report.max_norm,
        report.rad_value,
        if report.rad_complete { "" } else { " (upper bound; factorization incomplete)" }
    );

    let record = TupleRecord::new(
        ring,
        strings.clone(),
        classification.profile,
        &report,
        ADHOC_FAMILY,
        strings.join(","),
        0,
    );
    store
        .append(&record)
        .with_context(|| format!("appending to {}", store.path().display()))
        .map_err(comp)?;
    println!("appended 1 record to {}", store.path().display());
    Ok(())
}

fn cmd_export(args: ExportArgs) -> CliResult {
    let path = resolve_store(args.store);
    if !path.exists() {
        return Err(comp(anyhow!("store {} does not exist", path.display())));
    }
    let store = JsonlStore::new(&path);
    let (records, skipped) = store.load().map_err(comp)?;
    if skipped > 0 {
        eprintln!("warning: skipped {skipped} unreadable line(s) in {}", path.display());
    }
    match args.out {
        Some(out) => {
            let file = std::fs::File::create(&out)
                .with_context(|| format!("creating {}", out.display()))
                .map_err(comp)?;
            export_csv(&records, file).map_err(comp)?;
            println!("wrote {} row(s) to {}", records.len(), out.display());
        }
        None => {
            export_csv(&records, std::io::stdout().lock()).map_err(comp)?;
        }
    }
    Ok(())
}

fn cmd_selftest() -> CliResult {
    let budget = Budget::default();
    let mut passed = 0u32;
    let mut check = |name: &str, ok: bool| -> CliResult {
        if ok {
            println!("[ok] {name}");
            passed += 1;
            Ok(())
        } else {
            println!("[FAIL] {name}");
            Err(comp(anyhow!("selftest failed at: {name}")))
        }
    };

    let ints = |v: &[i64]| -> Vec<BigInt> { v.iter().map(|&x| BigInt::from(x)).collect() };

    let z = quality(&ints(&[1, 8, -9]), &budget).map_err(comp)?;
    check("quality of (1, 8, -9) over Z is log 9 / log 6", {
        (z.q - 9f64.ln() / 6f64.ln()).abs() < 1e-12
    })?;

    let zi_entries: Vec<GaussianInt> =
        ints(&[1, 8, -9]).iter().map(GaussianInt::from_int).collect();
    let zi = quality(&zi_entries, &budget).map_err(comp)?;
    let hw_entries: Vec<HurwitzInt> = ints(&[1, 8, -9]).iter().map(HurwitzInt::from_int).collect();
    let hw = quality(&hw_entries, &budget).map_err(comp)?;
    check("doubling: same tuple scores 2x over Z[i] and over the quaternions", {
        (zi.q - 2.0 * z.q).abs() < 1e-9 && (hw.q - 2.0 * z.q).abs() < 1e-9
    })?;

    let (gq, gr) = gaussian::divmod(
        &GaussianInt::from_int(&BigInt::from(5)),
        &GaussianInt::new(1, 1),
    )
    .map_err(comp)?;
    check("Gaussian division of 5 by 1+i leaves a small remainder", {
        gq == GaussianInt::new(2, -3) && gr == GaussianInt::i_unit()
    })?;

    let f = gaussian::factor(&GaussianInt::new(-11, 6), &budget).map_err(comp)?;
    check("Gaussian factorization recomposes -11+6i", f.value() == GaussianInt::new(-11, 6))?;

    let (hq, hr) = hurwitz::divmod_right(
        &HurwitzInt::from_ints(1, 1, 1, 1),
        &HurwitzInt::from_int(&BigInt::from(2)),
    )
    .map_err(comp)?;
    check("quaternion division of 1+i+j+k by 2 is exact at a half-integer", {
        RingElem::is_zero(&hr) && hq.norm() == 1u32.into()
    })?;

    let units = HurwitzInt::units();
    let closed = units.iter().all(|u| {
        units.iter().all(|v| units.contains(&u.mul(v)))
    });
    check("the 24 quaternion units are closed under multiplication", closed)?;

    let quartet = elkies_stream(1).remove(0);
    let report = quality(quartet.tuple.as_ref(), &budget).map_err(comp)?;
    check("first Gaussian quintic quadruple scores above 10/3", {
        report.q >= QUARTET_BOUND - Q_MARGIN
    })?;

    let t = hurwitz_power_triple(1);
    let pt = quality(t.as_ref(), &budget).map_err(comp)?;
    check("power triple at l=1 scores log 25 / log 10", {
        (pt.q - 25f64.ln() / 10f64.ln()).abs() < 1e-12
    })?;

    let x = hurwitz_pell_x(&BigInt::from(3), &BigInt::from(2)).map_err(comp)?;
    check("Pell quaternion for (3, 2) has norm 17^4", x.norm() == 83521u32.into())?;

    let row = coeff_table(7).map_err(comp)?;
    check("coefficient row m=7 is [128, -224, 112, -14]", {
        row.coefficients == vec![128, -224, 112, -14].into_iter().map(BigInt::from).collect::<Vec<_>>()
    })?;

    println!("selftest passed ({passed} checks)");
    Ok(())
}
