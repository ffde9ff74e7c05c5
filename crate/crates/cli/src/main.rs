//! `rcb`: exact Riordan-array and restricted Chebyshev-Boubaker toolbox.
//!
//! Subcommands: `array` (matrix truncations), `seq` (sequence prefixes),
//! `hankel` (Hankel transforms and continued fractions), `verify` (the
//! reference-claim registry). All arithmetic is exact; `--r` takes either
//! `symbolic` or an exact rational literal like `3` or `-2/7`.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};

use rcb_core::exactalg::{parse_rat, ParamPoly, Rat, Series};
use rcb_core::fixtures::{verify_all, Fixtures};
use rcb_core::hankel::{
    jfraction_extract, sfraction_extract, HankelError, HankelSpec, JFraction, SFraction,
};
use rcb_core::rcb::{self, FamilyContext};
use rcb_core::report::{Report, Status};
use rcb_core::riordan::SeqVec;

#[derive(Parser)]
#[command(
    name = "rcb",
    about = "Exact Riordan-array algebra and the restricted Chebyshev-Boubaker polynomials",
    version
)]
struct Cli {
    /// Series truncation order (default 32; RCB_ORDER env overrides).
    #[arg(long, global = true)]
    order: Option<usize>,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Parameter mode: `symbolic` or an exact rational like `3` or `-2/7`.
    #[arg(long, global = true, default_value = "symbolic")]
    r: RArg,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone)]
enum RArg {
    Symbolic,
    Value(Rat),
}

impl FromStr for RArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.eq_ignore_ascii_case("symbolic") {
            return Ok(RArg::Symbolic);
        }
        parse_rat(s)
            .map(RArg::Value)
            .map_err(|e| format!("{e} (use `symbolic` or an exact rational like 3 or -2/7)"))
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Print a matrix truncation.
    Array {
        #[arg(value_enum)]
        which: ArrayKind,
        /// Number of rows.
        #[arg(long)]
        rows: usize,
    },
    /// Print a sequence prefix.
    Seq {
        #[arg(value_enum)]
        which: SeqKind,
        /// Number of terms (polynomials for `polys`).
        #[arg(long)]
        n: usize,
    },
    /// Print the Hankel transform of a built-in or file-provided sequence.
    Hankel {
        /// Built-in source sequence.
        #[arg(value_enum, required_unless_present = "file")]
        source: Option<SourceKind>,
        /// File of exact rational terms (whitespace/comma separated).
        #[arg(long, conflicts_with = "source")]
        file: Option<PathBuf>,
        /// Largest Hankel order n (the transform has n+1 terms).
        #[arg(long = "max-n")]
        max_n: usize,
        /// Also print continued-fraction coefficients of the source.
        #[arg(long, value_enum)]
        cf: Option<CfKind>,
    },
    /// Run reference claims (optionally filtered by a `*` glob) and report.
    Verify {
        /// Claim-id glob, e.g. `oeis.*` (default: all claims).
        filter: Option<String>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ArrayKind {
    /// Coefficient array of the polynomial family.
    Coeff,
    /// Moment matrix (inverse of the coefficient array).
    Moment,
    /// Production matrix of the moment matrix.
    Production,
    /// Reversal of the row-sum Hankel coefficient array.
    Reversal,
}

#[derive(Clone, Copy, ValueEnum)]
enum SeqKind {
    Moments,
    Rowsums,
    Central,
    Centralplus,
    Polys,
}

#[derive(Clone, Copy, ValueEnum)]
enum SourceKind {
    Moments,
    MomentsUnaerated,
    Rowsums,
    Central,
    CentralUnaerated,
    Centralplus,
}

#[derive(Clone, Copy, ValueEnum)]
enum CfKind {
    J,
    S,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn resolve_order(flag: Option<usize>) -> Result<usize, String> {
    let order = match flag {
        Some(o) => o,
        None => match std::env::var("RCB_ORDER") {
            Ok(v) => v
                .trim()
                .parse::<usize>()
                .map_err(|_| format!("RCB_ORDER must be a positive integer, got {v:?}"))?,
            Err(_) => rcb::DEFAULT_ORDER,
        },
    };
    if order < 4 {
        return Err(format!("order must be at least 4, got {order}"));
    }
    Ok(order)
}

fn run(cli: Cli) -> Result<u8, String> {
    let order = resolve_order(cli.order)?;
    let ctx = match &cli.r {
        RArg::Symbolic => FamilyContext::symbolic(order),
        RArg::Value(r) => FamilyContext::numeric(r.clone(), order),
    };
    match cli.cmd {
        Cmd::Array { which, rows } => cmd_array(which, rows, &ctx, cli.format),
        Cmd::Seq { which, n } => cmd_seq(which, n, &ctx, cli.format),
        Cmd::Hankel {
            source,
            file,
            max_n,
            cf,
        } => cmd_hankel(source, file, max_n, cf, &ctx, cli.format),
        Cmd::Verify { filter } => cmd_verify(filter.as_deref(), &ctx, cli.format),
    }
}

// -- array -------------------------------------------------------------

fn cmd_array(
    which: ArrayKind,
    rows: usize,
    ctx: &FamilyContext,
    format: Format,
) -> Result<u8, String> {
    if rows == 0 {
        return Err("--rows must be at least 1".to_string());
    }
    let order = ctx.order();
    let matrix = match which {
        ArrayKind::Coeff => {
            if rows > order {
                return Err(format!("--rows at most the order ({order})"));
            }
            rcb::coefficient_array(ctx)
                .to_matrix(rows)
                .map_err(|e| e.to_string())?
        }
        ArrayKind::Moment => {
            if rows > order {
                return Err(format!("--rows at most the order ({order})"));
            }
            rcb::moment_matrix(ctx)
                .to_matrix(rows)
                .map_err(|e| e.to_string())?
        }
        ArrayKind::Production => {
            if rows + 1 > order {
                return Err(format!(
                    "--rows at most order - 1 ({}) for the production matrix",
                    order - 1
                ));
            }
            rcb::moment_matrix(ctx)
                .production_matrix(rows)
                .map_err(|e| e.to_string())?
        }
        ArrayKind::Reversal => {
            if rows > order {
                return Err(format!("--rows at most the order ({order})"));
            }
            rcb::hpoly_reversal(rows)
        }
    };
    match format {
        Format::Text => print!("{}", matrix.render_text()),
        Format::Json => {
            let value = serde_json::json!({ "rows": matrix.to_json() });
            println!("{}", serde_json::to_string_pretty(&value).unwrap());
        }
        Format::Csv => {
            let mut out = String::new();
            for (i, row) in matrix.rows().iter().enumerate() {
                let cells: Vec<String> = row.iter().map(|p| p.render()).collect();
                writeln!(out, "{i},{}", cells.join(",")).unwrap();
            }
            print!("{out}");
        }
    }
    Ok(0)
}

// -- seq ---------------------------------------------------------------

fn cmd_seq(which: SeqKind, n: usize, ctx: &FamilyContext, format: Format) -> Result<u8, String> {
    if n == 0 {
        return Err("--n must be at least 1".to_string());
    }
    let order = ctx.order();
    let limit = match which {
        SeqKind::Central | SeqKind::Centralplus => order / 2,
        _ => order,
    };
    if n > limit {
        return Err(format!(
            "--n at most {limit} at order {order} (raise --order or RCB_ORDER)"
        ));
    }
    if matches!(which, SeqKind::Polys) {
        let polys = rcb::polynomials(ctx, n);
        match format {
            Format::Text => {
                for (i, p) in polys.polys.iter().enumerate() {
                    println!("P_{i}: {}", rcb::xpoly::xp_render(p));
                }
            }
            Format::Json => {
                let value = serde_json::json!({
                    "polys": polys
                        .polys
                        .iter()
                        .map(|p| poly_list_json(p))
                        .collect::<Vec<_>>()
                });
                println!("{}", serde_json::to_string_pretty(&value).unwrap());
            }
            Format::Csv => {
                for (i, p) in polys.polys.iter().enumerate() {
                    let cells: Vec<String> = p.iter().map(|c| c.render()).collect();
                    println!("{i},{}", cells.join(","));
                }
            }
        }
        return Ok(0);
    }
    let seq = match which {
        SeqKind::Moments => rcb::moments(ctx, n),
        SeqKind::Rowsums => rcb::row_sum_sequence(ctx, n),
        SeqKind::Central => rcb::central_sequence(ctx, n),
        SeqKind::Centralplus => rcb::central_plus_sequence(ctx, n),
        SeqKind::Polys => unreachable!(),
    };
    print_seq(&seq, format);
    Ok(0)
}

fn poly_list_json(polys: &[ParamPoly]) -> serde_json::Value {
    serde_json::Value::Array(
        polys
            .iter()
            .map(|p| {
                serde_json::Value::Array(
                    p.coeff_strings()
                        .into_iter()
                        .map(serde_json::Value::String)
                        .collect(),
                )
            })
            .collect(),
    )
}

fn print_seq(seq: &SeqVec, format: Format) {
    match format {
        Format::Text => println!("{}", seq.render_text()),
        Format::Json => {
            let value = serde_json::json!({ "terms": seq.to_json() });
            println!("{}", serde_json::to_string_pretty(&value).unwrap());
        }
        Format::Csv => {
            for (i, t) in seq.iter().enumerate() {
                let coeffs = t.coeff_strings();
                if coeffs.is_empty() {
                    println!("{i},0");
                } else {
                    println!("{i},{}", coeffs.join(","));
                }
            }
        }
    }
}

// -- hankel ------------------------------------------------------------

fn cmd_hankel(
    source: Option<SourceKind>,
    file: Option<PathBuf>,
    max_n: usize,
    cf: Option<CfKind>,
    ctx: &FamilyContext,
    format: Format,
) -> Result<u8, String> {
    let order = ctx.order();
    if max_n > order / 2 {
        return Err(format!(
            "--max-n at most order/2 ({}) at order {order}",
            order / 2
        ));
    }
    let needed = 2 * max_n + 1;
    let terms: SeqVec = if let Some(path) = file {
        let text = std::fs::read_to_string(&path)
            .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
        let parsed: Result<Vec<Rat>, _> = text
            .split([' ', '\t', '\n', '\r', ','])
            .filter(|t| !t.is_empty())
            .map(parse_rat)
            .collect();
        let values = parsed.map_err(|e| e.to_string())?;
        SeqVec::new(
            values
                .into_iter()
                .map(|v| {
                    if v == Rat::from_integer(0.into()) {
                        ParamPoly::zero()
                    } else {
                        ParamPoly::constant(v)
                    }
                })
                .collect(),
        )
    } else {
        match source.expect("clap enforces source xor file") {
            SourceKind::Moments => rcb::moments(ctx, needed),
            SourceKind::MomentsUnaerated => rcb::moments_unaerated(ctx, needed),
            SourceKind::Rowsums => rcb::row_sum_sequence(ctx, needed),
            SourceKind::Central => rcb::central_sequence(ctx, needed),
            SourceKind::CentralUnaerated => rcb::central_unaerated_sequence(ctx, needed),
            SourceKind::Centralplus => rcb::central_plus_sequence(ctx, needed),
        }
    };
    let spec = HankelSpec::new(terms, max_n).map_err(|e| e.to_string())?;
    let transform = spec.transform();
    let cf_data = match cf {
        None => None,
        Some(kind) => {
            let gf = Series::from_polys(spec.source().terms().to_vec());
            Some(extract_cf(kind, &gf, max_n))
        }
    };
    match format {
        Format::Text => {
            println!("{}", transform.render_text());
            if let Some(data) = &cf_data {
                print_cf_text(data);
            }
        }
        Format::Json => {
            let mut value = serde_json::json!({ "transform": transform.to_json() });
            if let Some(data) = &cf_data {
                value["cf"] = cf_json(data);
            }
            println!("{}", serde_json::to_string_pretty(&value).unwrap());
        }
        Format::Csv => {
            for (i, t) in transform.iter().enumerate() {
                let coeffs = t.coeff_strings();
                if coeffs.is_empty() {
                    println!("{i},0");
                } else {
                    println!("{i},{}", coeffs.join(","));
                }
            }
            if cf_data.is_some() {
                eprintln!("note: --cf output is omitted in csv format");
            }
        }
    }
    Ok(0)
}

enum CfData {
    J {
        cf: JFraction,
        stopped: Option<usize>,
    },
    S {
        cf: SFraction,
        stopped: Option<usize>,
    },
}

fn extract_cf(kind: CfKind, gf: &Series, depth: usize) -> CfData {
    match kind {
        CfKind::J => match jfraction_extract(gf, depth) {
            Ok(cf) => CfData::J { cf, stopped: None },
            Err(HankelError::ZeroHankelBlock { depth, partial }) => CfData::J {
                cf: partial,
                stopped: Some(depth),
            },
            Err(e) => {
                eprintln!("note: J-fraction extraction failed: {e}");
                CfData::J {
                    cf: JFraction {
                        a: vec![],
                        b: vec![],
                    },
                    stopped: Some(0),
                }
            }
        },
        CfKind::S => match sfraction_extract(gf, depth) {
            Ok(cf) => CfData::S { cf, stopped: None },
            Err(HankelError::ZeroPivot { depth, partial }) => CfData::S {
                cf: partial,
                stopped: Some(depth),
            },
            Err(e) => {
                eprintln!("note: S-fraction extraction failed: {e}");
                CfData::S {
                    cf: SFraction { alpha: vec![] },
                    stopped: Some(0),
                }
            }
        },
    }
}

fn print_cf_text(data: &CfData) {
    match data {
        CfData::J { cf, stopped } => {
            println!("a: {}", SeqVec::new(cf.a.clone()).render_text());
            println!("b: {}", SeqVec::new(cf.b.clone()).render_text());
            if let Some(d) = stopped {
                eprintln!("note: extraction stopped at depth {d} (zero Hankel block)");
            }
        }
        CfData::S { cf, stopped } => {
            println!("alpha: {}", SeqVec::new(cf.alpha.clone()).render_text());
            if let Some(d) = stopped {
                eprintln!("note: extraction stopped at depth {d} (zero pivot)");
            }
        }
    }
}

fn cf_json(data: &CfData) -> serde_json::Value {
    match data {
        CfData::J { cf, stopped } => {
            let mut v = cf.to_json();
            v["kind"] = serde_json::Value::String("j".to_string());
            if let Some(d) = stopped {
                v["stopped_at_depth"] = serde_json::json!(d);
            }
            v
        }
        CfData::S { cf, stopped } => {
            let mut v = cf.to_json();
            v["kind"] = serde_json::Value::String("s".to_string());
            if let Some(d) = stopped {
                v["stopped_at_depth"] = serde_json::json!(d);
            }
            v
        }
    }
}

// -- verify ------------------------------------------------------------

fn cmd_verify(filter: Option<&str>, ctx: &FamilyContext, format: Format) -> Result<u8, String> {
    let report = verify_all(Fixtures::embedded(), ctx, filter);
    if report.checks.is_empty() {
        eprintln!("warning: no claims match {:?}", filter.unwrap_or("*"));
    }
    print_report(&report, format);
    Ok(if report.all_passed() { 0 } else { 1 })
}

fn print_report(report: &Report, format: Format) {
    match format {
        Format::Text => {
            for c in &report.checks {
                let tag = match c.status {
                    Status::Pass => "PASS",
                    Status::Fail => "FAIL",
                    Status::Skipped => "SKIP",
                };
                println!("{tag} {} :: {}", c.claim_id, c.location);
                if c.status == Status::Fail {
                    if let (Some(lhs), Some(rhs)) = (&c.lhs, &c.rhs) {
                        println!("     computed: {lhs}");
                        println!("     expected: {rhs}");
                    }
                }
            }
            println!(
                "{} passed, {} failed, {} skipped",
                report.count(Status::Pass),
                report.count(Status::Fail),
                report.count(Status::Skipped)
            );
        }
        Format::Json => {
            let value = serde_json::json!({
                "checks": report.checks,
                "passed": report.count(Status::Pass),
                "failed": report.count(Status::Fail),
                "skipped": report.count(Status::Skipped),
            });
            println!("{}", serde_json::to_string_pretty(&value).unwrap());
        }
        Format::Csv => {
            for c in &report.checks {
                let status = match c.status {
                    Status::Pass => "pass",
                    Status::Fail => "fail",
                    Status::Skipped => "skipped",
                };
                println!("{},{status},{}", c.claim_id, csv_quote(&c.location));
            }
        }
    }
}

fn csv_quote(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}
