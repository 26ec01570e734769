//! Command-line front end for the bounds library.
//!
//! Four subcommands:
//!
//! * `convert` — translate between f-, h-, and g-vectors and report
//!   validity (O-sequence / SI-sequence checks).
//! * `bound`   — evaluate the closed-form bounds: full empty-simplex
//!   reports, single per-degree / cumulative / total values, the
//!   vertex-count and dimension-free variants, the g_k bounds, and whole
//!   Betti-table bounds for a given Hilbert function.
//! * `oracle`  — exact computations on explicit complexes: Hochster Betti
//!   tables over a chosen field characteristic, minimal non-face lists,
//!   and f-vectors.
//! * `compare` — run both sides on one polytope boundary and print
//!   actual vs bound per degree, flagging attainment and violations.
//!
//! Exit codes: 0 success; 2 invalid input; 3 precondition violated
//! (structurally valid input outside a bound's stated domain); 4 size
//! limit exceeded; 5 bound violation detected by `compare` (which would
//! falsify the library and is never expected).

mod render;

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;
use std::time::Instant;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::Zero;
use serde_json::{json, Value};

use betti_bounds::betti::betti_table_bound;
use betti_bounds::error::{Error, ErrorCategory};
use betti_bounds::json::{
    betti_table_to_json, bigint_to_number, complex_from_json, f_vector_to_json, g_vector_to_json,
    h_vector_to_json, report_to_json,
};
use betti_bounds::oracle::{
    cross_polytope_boundary, cyclic_polytope_boundary, hochster_betti_with_limit,
    polygon_boundary, simplex_boundary, Characteristic, SimplicialComplex, DEFAULT_VERTEX_LIMIT,
};
use betti_bounds::simplices::{
    bound_report, cumulative_bound, dimension_free_bound, generator_degree_bound, gk_bound,
    total_bound, vertex_count_bound,
};
use betti_bounds::vectors::{f_to_h, h_to_f, h_to_g, FVector, GVector, HVector, OSequence};

/// Environment variable overriding the default Hochster vertex limit;
/// the `--vertex-limit` flag takes precedence over both.
const VERTEX_LIMIT_ENV: &str = "EMPTY_SIMPLEX_VERTEX_LIMIT";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    /// Human-readable aligned text.
    Table,
    /// JSON documents that round-trip through the library parsers.
    Json,
}

#[derive(Parser)]
#[command(
    name = "betti-bounds",
    version,
    about = "Sharp bounds on graded Betti numbers and empty-simplex counts, with exact oracles",
    long_about = "Sharp bounds on graded Betti numbers and empty-simplex counts, with exact \
                  oracles.\n\nVector conventions on the command line: face-count vectors are \
                  given without the leading f_{-1} = 1 (e.g. --f 6,12,8 for the octahedron); \
                  h- and g-vectors are given with their leading 1 (e.g. --h 1,3,3,1 and \
                  --g 1,2). Entries may be arbitrarily large integers."
)]
struct Cli {
    /// Output format for results.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Table)]
    output_format: OutputFormat,

    /// Field characteristic for homology computations: 0 or a prime.
    #[arg(long, global = true, default_value_t = 0)]
    characteristic: u64,

    /// Cap on vertex counts for Hochster sweeps
    /// (precedence: this flag, then EMPTY_SIMPLEX_VERTEX_LIMIT, then 12).
    #[arg(long, global = true)]
    vertex_limit: Option<u32>,

    /// Worker threads for the parallel subset sweep; the result is
    /// bit-identical for any thread count.
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Print configuration and timing to stderr (-v, -vv).
    #[arg(short, long, global = true, action = clap::ArgAction::Count)]
    verbose: u8,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Convert between f-, h-, and g-vectors, validating growth conditions.
    Convert(ConvertArgs),
    /// Evaluate closed-form bounds on empty simplices or Betti tables.
    Bound(BoundArgs),
    /// Exact oracle computations on an explicit simplicial complex.
    Oracle(OracleArgs),
    /// Compare oracle counts against the closed-form bounds on one complex.
    Compare(CompareArgs),
}

#[derive(Args)]
#[command(group(ArgGroup::new("input").required(true)))]
struct ConvertArgs {
    /// Face counts f_0,...,f_{d-1} (without the leading f_{-1} = 1).
    #[arg(long, group = "input", value_name = "F0,F1,...")]
    f: Option<String>,

    /// h-vector with the leading h_0 = 1.
    #[arg(long, group = "input", value_name = "1,H1,...")]
    h: Option<String>,

    /// g-vector with the leading g_0 = 1 (requires --d to derive h and f).
    #[arg(long, group = "input", value_name = "1,G1,...")]
    g: Option<String>,

    /// Polytope dimension; defaults to the length of --f, or one less
    /// than the length of --h.
    #[arg(long)]
    d: Option<u32>,
}

#[derive(Args)]
#[command(group(ArgGroup::new("query")))]
struct BoundArgs {
    /// g-vector with the leading g_0 = 1.
    #[arg(long, value_name = "1,G1,...")]
    g: Option<String>,

    /// h-vector (with leading 1). For empty-simplex bounds this must be an
    /// SI-sequence and the g-vector is derived; for --betti-table it is
    /// the Hilbert function of the Artinian reduction.
    #[arg(long, value_name = "1,H1,...")]
    h: Option<String>,

    /// Polytope dimension d.
    #[arg(long)]
    d: Option<u32>,

    /// Total empty-simplex bound (independent of the dimension).
    #[arg(long, group = "query")]
    total: bool,

    /// Bound on minimal generators of degree J, i.e. empty (J-1)-simplices
    /// (requires --d).
    #[arg(long, group = "query", value_name = "J")]
    per_degree: Option<i64>,

    /// Cumulative bound N(K) on empty simplices of dimension <= K
    /// (requires --d).
    #[arg(long, group = "query", value_name = "K")]
    cumulative: Option<u32>,

    /// Closed-form N(k) bound for polytopes with d + g_1 + 1 vertices
    /// (requires --g1, --d, --k).
    #[arg(long, group = "query")]
    vertex_count: bool,

    /// Dimension-free bound on empty simplices of dimension <= k
    /// (requires --g1, --k).
    #[arg(long, group = "query")]
    dimension_free: bool,

    /// Bound on empty j-simplices given g_k <= B; valid only when
    /// d >= j + k (requires --k, --j, --d).
    #[arg(long, group = "query", value_name = "B")]
    gk: Option<String>,

    /// Betti table bound for the Hilbert function --h in --n variables.
    #[arg(long, group = "query")]
    betti_table: bool,

    /// The entry g_1 = (number of vertices) - d - 1, for the bounds that
    /// need only it.
    #[arg(long)]
    g1: Option<i64>,

    /// Expansion degree k (cumulative dimension, or the g_k index).
    #[arg(long)]
    k: Option<u32>,

    /// Simplex dimension j for the g_k bound.
    #[arg(long)]
    j: Option<u32>,

    /// Number of polynomial-ring variables for --betti-table.
    #[arg(long)]
    n: Option<u32>,
}

/// Selects the complex a subcommand operates on: a built-in family member
/// or a JSON file {"n": int, "facets": [[int,...],...]} with 1-based
/// vertices.
#[derive(Args)]
#[group(required = true, multiple = false)]
struct ComplexSource {
    /// Boundary of the cyclic polytope C(N, D).
    #[arg(long, num_args = 2, value_names = ["N", "D"])]
    cyclic: Option<Vec<u32>>,

    /// Boundary of a convex polygon with N vertices.
    #[arg(long, value_name = "N")]
    polygon: Option<u32>,

    /// Boundary of the D-dimensional cross-polytope.
    #[arg(long, value_name = "D")]
    cross: Option<u32>,

    /// Boundary of the D-simplex.
    #[arg(long, value_name = "D")]
    simplex: Option<u32>,

    /// Boundary of the octahedron (the 3-dimensional cross-polytope).
    #[arg(long)]
    octahedron: bool,

    /// Load a complex from a JSON file.
    #[arg(long, value_name = "PATH")]
    file: Option<PathBuf>,
}

#[derive(Args)]
#[command(group(ArgGroup::new("what").required(true)))]
struct OracleArgs {
    #[command(flatten)]
    source: ComplexSource,

    /// Exact graded Betti numbers via Hochster's formula.
    #[arg(long, group = "what")]
    betti: bool,

    /// List the minimal non-faces (empty simplices), sorted by size.
    #[arg(long, group = "what")]
    nonfaces: bool,

    /// The f-vector of the complex.
    #[arg(long, group = "what")]
    fvector: bool,
}

#[derive(Args)]
struct CompareArgs {
    #[command(flatten)]
    source: ComplexSource,
}

/// A failure carrying the exit code mandated for its class.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        let code = match err.category() {
            ErrorCategory::Validation => 2,
            ErrorCategory::Precondition => 3,
            ErrorCategory::Size => 4,
        };
        Failure {
            code,
            message: err.to_string(),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let started = Instant::now();
    match run(&cli) {
        Ok(code) => {
            if cli.verbose > 1 {
                eprintln!("done in {:.3}s", started.elapsed().as_secs_f64());
            }
            ExitCode::from(code)
        }
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

fn run(cli: &Cli) -> Result<u8, Failure> {
    if let Some(threads) = cli.threads {
        if threads == 0 {
            return Err(Failure::usage("--threads must be at least 1"));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .map_err(|e| Failure::usage(format!("could not configure thread pool: {e}")))?;
    }
    let characteristic = Characteristic::new(cli.characteristic)?;
    let vertex_limit = resolve_vertex_limit(cli.vertex_limit)?;
    if cli.verbose > 0 {
        eprintln!(
            "config: format {:?}, characteristic {characteristic}, vertex limit {vertex_limit}",
            cli.output_format
        );
    }
    match &cli.command {
        Command::Convert(args) => cmd_convert(args, cli.output_format),
        Command::Bound(args) => cmd_bound(args, cli.output_format),
        Command::Oracle(args) => cmd_oracle(args, cli.output_format, characteristic, vertex_limit),
        Command::Compare(args) => cmd_compare(args, cli.output_format),
    }
}

fn resolve_vertex_limit(flag: Option<u32>) -> Result<u32, Failure> {
    let limit = match flag {
        Some(v) => v,
        None => match std::env::var(VERTEX_LIMIT_ENV) {
            Ok(raw) => raw.trim().parse().map_err(|_| {
                Failure::usage(format!(
                    "{VERTEX_LIMIT_ENV} must be a non-negative integer, found {raw:?}"
                ))
            })?,
            Err(_) => DEFAULT_VERTEX_LIMIT,
        },
    };
    if limit == 0 {
        return Err(Failure::usage("vertex limit must be at least 1"));
    }
    Ok(limit)
}

/// Parse a comma-separated list of (arbitrarily large) integers.
fn parse_entries(raw: &str, flag: &str) -> Result<Vec<BigInt>, Failure> {
    raw.split(',')
        .map(|token| {
            let token = token.trim();
            BigInt::from_str(token).map_err(|_| {
                Failure::usage(format!("{flag}: could not parse {token:?} as an integer"))
            })
        })
        .collect()
}

fn cmd_convert(args: &ConvertArgs, format: OutputFormat) -> Result<u8, Failure> {
    let (d, f, h, g) = if let Some(raw) = &args.f {
        let counts = parse_entries(raw, "--f")?;
        let d = args.d.unwrap_or(counts.len() as u32);
        if d as usize != counts.len() {
            return Err(Failure::usage(format!(
                "--f lists f_0..f_{{d-1}}, so --d {} needs exactly {} face counts, found {}",
                d,
                d,
                counts.len()
            )));
        }
        let f = FVector::from_face_counts(d, counts)?;
        let h = f_to_h(&f)?;
        let g = h_to_g(&h)?;
        (d, f, h, g)
    } else if let Some(raw) = &args.h {
        let entries = parse_entries(raw, "--h")?;
        let d = args.d.unwrap_or(entries.len().saturating_sub(1) as u32);
        if d as usize + 1 != entries.len() {
            return Err(Failure::usage(format!(
                "an h-vector for dimension d = {} has {} entries h_0..h_d, found {}",
                d,
                d + 1,
                entries.len()
            )));
        }
        let h = HVector::new(entries)?;
        let g = h_to_g(&h)?;
        let f = h_to_f(&h, d)?;
        (d, f, h, g)
    } else {
        let raw = args.g.as_ref().expect("clap guarantees one input");
        let g = GVector::new(parse_entries(raw, "--g")?)?;
        let d = args.d.ok_or_else(|| {
            Failure::usage("--g needs --d to reconstruct the h- and f-vectors")
        })?;
        let h = betti_bounds::vectors::g_to_h(&g, d)?;
        let f = h_to_f(&h, d)?;
        (d, f, h, g)
    };

    match format {
        OutputFormat::Json => {
            let doc = json!({
                "d": d,
                "f": f_vector_to_json(&f),
                "h": h_vector_to_json(&h),
                "g": g_vector_to_json(&g, Some(d)),
                "si_sequence": true,
            });
            println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
        }
        OutputFormat::Table => {
            println!("d = {d}");
            println!("f = {}  (f_0..f_{{d-1}})", render::join(&f.entries()[1..]));
            println!("h = {}", render::join(h.entries()));
            println!("g = {}", render::join(g.entries()));
            println!("status: valid SI-sequence (candidate simplicial {d}-polytope)");
        }
    }
    Ok(0)
}

fn cmd_bound(args: &BoundArgs, format: OutputFormat) -> Result<u8, Failure> {
    // Single-value queries that need only scalar inputs.
    if let Some(raw) = &args.gk {
        let b = parse_entries(raw, "--gk")?
            .pop()
            .expect("split yields at least one token");
        let k = require(args.k, "--gk needs --k")?;
        let j = require(args.j, "--gk needs --j")?;
        let d = require(args.d, "--gk needs --d")?;
        return emit_value(&gk_bound(&b, k, j, d)?, format);
    }
    if args.dimension_free {
        let g1 = require(args.g1, "--dimension-free needs --g1")?;
        let k = require(args.k, "--dimension-free needs --k")?;
        return emit_value(&dimension_free_bound(g1, i64::from(k))?, format);
    }
    if args.vertex_count {
        let g1 = require(args.g1, "--vertex-count needs --g1")?;
        let d = require(args.d, "--vertex-count needs --d")?;
        let k = require(args.k, "--vertex-count needs --k")?;
        return emit_value(&vertex_count_bound(g1, d, k)?, format);
    }
    if args.betti_table {
        let raw = args
            .h
            .as_ref()
            .ok_or_else(|| Failure::usage("--betti-table needs --h (a Hilbert function)"))?;
        let n = require(args.n, "--betti-table needs --n (number of variables)")?;
        let h = OSequence::artinian(parse_entries(raw, "--h")?)?;
        let table = betti_table_bound(&h, n)?;
        match format {
            OutputFormat::Json => println!(
                "{}",
                serde_json::to_string_pretty(&betti_table_to_json(&table))
                    .expect("serializable")
            ),
            OutputFormat::Table => print!("{}", render::betti_table(&table)),
        }
        return Ok(0);
    }

    // The remaining queries take a g-vector (directly or via an SI h-vector).
    let g = bound_g_vector(args)?;
    if args.total {
        if let Some(d) = args.d {
            // The total is dimension-free, but reject a d inconsistent
            // with the g-vector rather than silently ignoring it.
            let _ = bound_report(&g, d)?;
        }
        return emit_value(&total_bound(&g)?, format);
    }
    if let Some(j) = args.per_degree {
        let d = require(args.d, "--per-degree needs --d")?;
        return emit_value(&generator_degree_bound(&g, d, j)?, format);
    }
    if let Some(k) = args.cumulative {
        let d = require(args.d, "--cumulative needs --d")?;
        return emit_value(&cumulative_bound(&g, d, k)?, format);
    }

    // No query flag: the full report.
    let d = require(args.d, "the full report needs --d")?;
    let report = bound_report(&g, d)?;
    match format {
        OutputFormat::Json => println!(
            "{}",
            serde_json::to_string_pretty(&report_to_json(&report)).expect("serializable")
        ),
        OutputFormat::Table => print!("{}", render::report(&report)),
    }
    Ok(0)
}

fn bound_g_vector(args: &BoundArgs) -> Result<GVector, Failure> {
    if let Some(raw) = &args.g {
        return Ok(GVector::new(parse_entries(raw, "--g")?)?);
    }
    if let Some(raw) = &args.h {
        let h = HVector::new(parse_entries(raw, "--h")?)?;
        return Ok(h_to_g(&h)?);
    }
    Err(Failure::usage(
        "this query needs a g-vector: pass --g directly or --h to derive it",
    ))
}

fn require<T>(value: Option<T>, message: &str) -> Result<T, Failure> {
    value.ok_or_else(|| Failure::usage(message))
}

fn emit_value(value: &BigInt, format: OutputFormat) -> Result<u8, Failure> {
    match format {
        OutputFormat::Json => println!(
            "{}",
            serde_json::to_string(&bigint_to_number(value)).expect("serializable")
        ),
        OutputFormat::Table => println!("{value}"),
    }
    Ok(0)
}

/// Resolve a complex source to (complex, label, polytope dimension).
fn resolve_complex(source: &ComplexSource) -> Result<(SimplicialComplex, String, u32), Failure> {
    if let Some(pair) = &source.cyclic {
        let (n, d) = (pair[0], pair[1]);
        return Ok((
            cyclic_polytope_boundary(n, d)?,
            format!("cyclic({n},{d})"),
            d,
        ));
    }
    if let Some(n) = source.polygon {
        return Ok((polygon_boundary(n)?, format!("polygon({n})"), 2));
    }
    if let Some(d) = source.cross {
        return Ok((cross_polytope_boundary(d)?, format!("cross({d})"), d));
    }
    if let Some(d) = source.simplex {
        return Ok((simplex_boundary(d)?, format!("simplex({d})"), d));
    }
    if source.octahedron {
        return Ok((cross_polytope_boundary(3)?, "octahedron".to_string(), 3));
    }
    let path = source.file.as_ref().expect("clap guarantees one source");
    let complex = load_complex(path)?;
    let d = u32::try_from(complex.dimension() + 1).expect("dimension of a non-void complex");
    Ok((complex, path.display().to_string(), d))
}

fn load_complex(path: &Path) -> Result<SimplicialComplex, Failure> {
    let raw = std::fs::read_to_string(path)
        .map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))?;
    let value: Value = serde_json::from_str(&raw)
        .map_err(|e| Failure::usage(format!("{} is not valid JSON: {e}", path.display())))?;
    Ok(complex_from_json(&value)?)
}

fn cmd_oracle(
    args: &OracleArgs,
    format: OutputFormat,
    characteristic: Characteristic,
    vertex_limit: u32,
) -> Result<u8, Failure> {
    let (complex, _label, _) = resolve_complex(&args.source)?;
    if args.betti {
        let table = hochster_betti_with_limit(&complex, characteristic, vertex_limit)?;
        match format {
            OutputFormat::Json => println!(
                "{}",
                serde_json::to_string_pretty(&betti_table_to_json(&table))
                    .expect("serializable")
            ),
            OutputFormat::Table => print!("{}", render::betti_table(&table)),
        }
    } else if args.nonfaces {
        let nonfaces = complex.minimal_nonfaces();
        match format {
            OutputFormat::Json => {
                let doc = Value::Array(
                    nonfaces
                        .iter()
                        .map(|nf| Value::Array(nf.iter().map(|v| json!(v)).collect()))
                        .collect(),
                );
                println!("{}", serde_json::to_string(&doc).expect("serializable"));
            }
            OutputFormat::Table => {
                for nf in &nonfaces {
                    println!("{}", render::vertex_set(nf));
                }
            }
        }
    } else {
        debug_assert!(args.fvector, "clap guarantees one query");
        let f = complex.f_vector();
        match format {
            OutputFormat::Json => println!(
                "{}",
                serde_json::to_string_pretty(&f_vector_to_json(&f)).expect("serializable")
            ),
            OutputFormat::Table => {
                println!("f = {}  (f_0..f_{{d-1}})", render::join(&f.entries()[1..]))
            }
        }
    }
    Ok(0)
}

fn cmd_compare(args: &CompareArgs, format: OutputFormat) -> Result<u8, Failure> {
    let (complex, label, d) = resolve_complex(&args.source)?;
    let h = f_to_h(&complex.f_vector())?;
    let g = h_to_g(&h)?;
    let report = bound_report(&g, d)?;

    // Actual counts of minimal non-faces, keyed by vertex-set size.
    let mut actual: std::collections::BTreeMap<u32, BigInt> = std::collections::BTreeMap::new();
    for nf in complex.minimal_nonfaces() {
        *actual.entry(nf.len() as u32).or_insert_with(BigInt::zero) += 1;
    }

    let mut violations: Vec<String> = Vec::new();
    let mut degree_rows: Vec<(u32, BigInt, BigInt)> = Vec::new();
    for j in 0..=(d + 1) {
        let count = actual.get(&j).cloned().unwrap_or_else(BigInt::zero);
        let bound = report
            .per_degree()
            .get(&j)
            .cloned()
            .unwrap_or_else(BigInt::zero);
        if count > bound {
            violations.push(format!(
                "degree {j}: actual {count} exceeds bound {bound}"
            ));
        }
        if !count.is_zero() || !bound.is_zero() {
            degree_rows.push((j, count, bound));
        }
    }

    let mut cumulative_rows: Vec<(u32, BigInt, BigInt)> = Vec::new();
    let mut running = BigInt::zero();
    for k in 1..d {
        running += actual.get(&(k + 1)).cloned().unwrap_or_else(BigInt::zero);
        if k == 1 {
            // N(1) also counts the (never-present) size-1 and size-2 strata.
            running += actual.get(&1).cloned().unwrap_or_else(BigInt::zero);
        }
        let bound = report
            .cumulative()
            .get(&k)
            .cloned()
            .unwrap_or_else(BigInt::zero);
        if running > bound {
            violations.push(format!(
                "cumulative N({k}): actual {running} exceeds bound {bound}"
            ));
        }
        cumulative_rows.push((k, running.clone(), bound));
    }

    let actual_total: BigInt = actual.values().sum();
    let total = report.total().clone();
    if actual_total > total {
        violations.push(format!(
            "total: actual {actual_total} exceeds bound {total}"
        ));
    }
    let total_attained = actual_total == total;

    match format {
        OutputFormat::Json => {
            let doc = json!({
                "complex": label,
                "n": complex.n(),
                "d": d,
                "g": g.entries().iter().map(bigint_to_number).collect::<Vec<_>>(),
                "per_degree": degree_rows.iter().map(|(j, count, bound)| json!({
                    "j": j,
                    "actual": bigint_to_number(count),
                    "bound": bigint_to_number(bound),
                    "attained": count == bound,
                })).collect::<Vec<_>>(),
                "cumulative": cumulative_rows.iter().map(|(k, count, bound)| json!({
                    "k": k,
                    "actual": bigint_to_number(count),
                    "bound": bigint_to_number(bound),
                    "attained": count == bound,
                })).collect::<Vec<_>>(),
                "total": {
                    "actual": bigint_to_number(&actual_total),
                    "bound": bigint_to_number(&total),
                    "attained": total_attained,
                },
                "violations": violations,
            });
            println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
        }
        OutputFormat::Table => {
            println!(
                "complex: {label}   n = {}   d = {d}   g = {}",
                complex.n(),
                render::join(g.entries())
            );
            print!(
                "{}",
                render::comparison(&degree_rows, &cumulative_rows, &actual_total, &total)
            );
            if violations.is_empty() {
                println!(
                    "verdict: all bounds satisfied{}",
                    if total_attained { "; total attained" } else { "" }
                );
            } else {
                println!("verdict: BOUND VIOLATION");
            }
        }
    }

    if violations.is_empty() {
        Ok(0)
    } else {
        for violation in &violations {
            eprintln!("bound violation: {violation}");
        }
        Ok(5)
    }
}
