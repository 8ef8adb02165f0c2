//! Command line front end: argument parsing, report assembly and serialization for the
//! `spectough` binary.
//!
//! Exit codes: 0 clean, 1 usage or input error, 2 a mathematical violation was found
//! (a check verdict not respected, or a search/audit reporting violations). Reports go
//! to stdout in json (default), csv or plain form; timings and errors go to stderr so
//! stdout stays byte-stable across runs with identical inputs and seeds.

use crate::error::{Error, Result};
use crate::families::{
    scattering_extremal, split_join, split_join_quotient, tau_fractional_extremal,
    tau_integer_extremal, threshold_rho, FamilyGraph, FamilySpec,
};
use crate::graph::Graph;
use crate::graph6::{from_edge_list, from_graph6, to_graph6};
use crate::invariants::{invariant_report, InvariantReport};
use crate::rational::Alpha;
use crate::spectral::a_alpha;
use crate::verify::{
    audit_equivalences, check_scattering, check_tau_fractional, check_tau_integer, sweep_rows,
    SearchMode, SearchReport, SearchTarget, SweepRow, Verdict,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use std::fmt::Write as _;
use std::path::PathBuf;

// ===========================================================================
// Argument grammar
// ===========================================================================

#[derive(Parser, Debug)]
#[command(
    name = "spectough",
    version,
    about = "A_alpha spectral radii, scattering number, toughness and tau-toughness of small graphs",
    max_term_width = 100
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Scattering number, toughness and tau-toughness of one graph.
    Invariants {
        #[command(flatten)]
        source: GraphSource,
        #[command(flatten)]
        output: Output,
    },
    /// A_alpha spectral radius of one graph at each alpha; family sources also report
    /// the quotient radius and the dense-vs-quotient gap.
    Rho {
        #[command(flatten)]
        source: GraphSource,
        /// Comma-separated alphas in [0,1]; decimals or exact rationals like 1/2.
        #[arg(long, value_parser = parse_alpha, value_delimiter = ',', default_value = "0")]
        alpha: Vec<Alpha>,
        #[command(flatten)]
        output: Output,
    },
    /// Closed-form quotient matrix of a split join family at each alpha.
    Quotient {
        #[command(flatten)]
        source: FamilySource,
        #[arg(long, value_parser = parse_alpha, value_delimiter = ',', default_value = "0")]
        alpha: Vec<Alpha>,
        #[command(flatten)]
        output: Output,
    },
    /// Construct a split join family member and report its invariants.
    Family {
        #[command(flatten)]
        source: FamilySource,
        /// Also write the graph as a single graph6 line to this file.
        #[arg(long, value_name = "FILE")]
        g6_out: Option<PathBuf>,
        #[command(flatten)]
        output: Output,
    },
    /// Check one threshold statement on one graph; exit 2 if any verdict is violated.
    Check {
        /// Which statement: t11 (scattering), t12a (integer tau), t12b (fractional tau).
        target: TargetName,
        #[command(flatten)]
        source: GraphSource,
        #[arg(long, value_parser = parse_alpha, value_delimiter = ',', default_value = "1/2")]
        alpha: Vec<Alpha>,
        /// Integer tau for t12a; defaults to the tau of a --family-extremal source.
        #[arg(long)]
        tau: Option<i64>,
        /// Denominator b (tau = 1/b) for t12b; defaults to the b of a --family-extremal source.
        #[arg(long)]
        b: Option<i64>,
        #[command(flatten)]
        output: Output,
    },
    /// Search a population of graphs for threshold violations; exit 2 if any found.
    Search {
        target: TargetName,
        /// Number of vertices.
        #[arg(long)]
        n: usize,
        /// Restrict to this minimum degree (filter when exhaustive, generator target when random).
        #[arg(long)]
        delta: Option<usize>,
        #[arg(long, value_parser = parse_alpha, value_delimiter = ',', default_value = "1/2")]
        alpha: Vec<Alpha>,
        #[arg(long, value_enum, default_value_t = Mode::Exhaustive)]
        mode: Mode,
        /// Number of random graphs when --mode random.
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        tau: Option<i64>,
        #[arg(long)]
        b: Option<i64>,
        /// Worker threads; falls back to SPECTOUGH_JOBS, then 1.
        #[arg(long)]
        jobs: Option<usize>,
        /// Dump violating graphs as graph6 lines to this file.
        #[arg(long, value_name = "FILE")]
        g6_out: Option<PathBuf>,
        #[command(flatten)]
        output: Output,
    },
    /// Exhaustively audit the scattering/toughness/tau equivalences; exit 2 on violation.
    Audit {
        /// Largest vertex count to enumerate (<= 7).
        #[arg(long, default_value_t = 6)]
        nmax: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Tabulate quotient vs dense radii over all small split join families.
    Sweep {
        #[arg(long, default_value_t = 10)]
        nmax: usize,
        #[arg(long, default_value_t = 2)]
        smax: usize,
        #[arg(long, default_value_t = 3)]
        tmax: usize,
        #[arg(long, value_parser = parse_alpha, value_delimiter = ',', default_value = "0,1/2")]
        alpha: Vec<Alpha>,
        #[arg(long)]
        jobs: Option<usize>,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct GraphSource {
    /// graph6 string, e.g. "D?{".
    #[arg(long)]
    g6: Option<String>,
    /// Edge list file: first line n, then one "u v" pair per line, 0-indexed.
    #[arg(long, value_name = "FILE")]
    edges: Option<PathBuf>,
    /// Split join family spec, e.g. "s=2;parts=5,1,1,1".
    #[arg(long, value_name = "SPEC")]
    family: Option<String>,
    /// Named extremal family: "n=6;delta=1", "n=52;tau=3" or "n=30;b=2".
    #[arg(long, value_name = "SPEC")]
    family_extremal: Option<String>,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct FamilySource {
    /// Split join family spec, e.g. "s=2;parts=5,1,1,1".
    #[arg(long, value_name = "SPEC")]
    family: Option<String>,
    /// Named extremal family: "n=6;delta=1", "n=52;tau=3" or "n=30;b=2".
    #[arg(long, value_name = "SPEC")]
    family_extremal: Option<String>,
}

#[derive(Args, Debug)]
struct Output {
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Json,
    Csv,
    Plain,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Mode {
    Exhaustive,
    Random,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum TargetName {
    /// Scattering threshold: rho above the family radius forces s(G) <= 1.
    T11,
    /// Integer tau threshold: rho above the family radius forces tau(G) >= tau.
    T12a,
    /// Fractional tau threshold: rho above the family radius forces tau(G) >= 1/b.
    T12b,
}

fn parse_alpha(text: &str) -> std::result::Result<Alpha, String> {
    text.trim().parse::<Alpha>().map_err(|e| e.to_string())
}

// ===========================================================================
// Sources
// ===========================================================================

/// The kind-inferring parse of "n=..;delta=.." / "n=..;tau=.." / "n=..;b=..".
fn parse_extremal(text: &str) -> Result<FamilyGraph> {
    let mut n: Option<usize> = None;
    let mut kind: Option<(&str, i64)> = None;
    for item in text.split(';') {
        let (key, value) = item
            .split_once('=')
            .ok_or_else(|| Error::Malformed(format!("expected key=value in {item:?}")))?;
        let key = key.trim();
        let value = value.trim();
        match key {
            "n" => {
                n = Some(value.parse().map_err(|_| {
                    Error::Malformed(format!("bad vertex count {value:?}"))
                })?);
            }
            "delta" | "tau" | "b" => {
                if kind.is_some() {
                    return Err(Error::Malformed(
                        "give exactly one of delta=, tau=, b=".into(),
                    ));
                }
                let v = value
                    .parse()
                    .map_err(|_| Error::Malformed(format!("bad value {value:?} for {key}")))?;
                kind = Some((key, v));
            }
            other => {
                return Err(Error::Malformed(format!("unknown key {other:?}")));
            }
        }
    }
    let n = n.ok_or_else(|| Error::Malformed("extremal spec needs n=".into()))?;
    match kind {
        Some(("delta", d)) if d >= 0 => scattering_extremal(n, d as usize),
        Some(("tau", t)) => tau_integer_extremal(n, t),
        Some(("b", b)) => tau_fractional_extremal(n, b),
        Some((k, v)) => Err(Error::InvalidParameter(format!("bad {k} = {v}"))),
        None => Err(Error::Malformed(
            "extremal spec needs one of delta=, tau=, b=".into(),
        )),
    }
}

/// What a graph-producing flag resolved to. Families keep their spec so reports can add
/// the quotient side.
enum Resolved {
    Plain(Graph),
    Family(FamilyGraph),
}

impl Resolved {
    fn graph(&self) -> &Graph {
        match self {
            Resolved::Plain(g) => g,
            Resolved::Family(f) => &f.graph,
        }
    }

    fn spec(&self) -> Option<&FamilySpec> {
        match self {
            Resolved::Plain(_) => None,
            Resolved::Family(f) => Some(&f.spec),
        }
    }
}

impl GraphSource {
    fn resolve(&self) -> Result<Resolved> {
        if let Some(g6) = &self.g6 {
            return Ok(Resolved::Plain(from_graph6(g6)?));
        }
        if let Some(path) = &self.edges {
            let text = std::fs::read_to_string(path).map_err(|e| Error::Io(e.to_string()))?;
            return Ok(Resolved::Plain(from_edge_list(&text)?));
        }
        if let Some(spec) = &self.family {
            return Ok(Resolved::Family(split_join(&spec.parse()?)?));
        }
        if let Some(spec) = &self.family_extremal {
            return Ok(Resolved::Family(parse_extremal(spec)?));
        }
        Err(Error::Malformed("no graph source given".into()))
    }
}

impl FamilySource {
    fn resolve(&self) -> Result<FamilyGraph> {
        if let Some(spec) = &self.family {
            return split_join(&spec.parse()?);
        }
        if let Some(spec) = &self.family_extremal {
            return parse_extremal(spec);
        }
        Err(Error::Malformed("no family source given".into()))
    }
}

// ===========================================================================
// Report payloads
// ===========================================================================

#[derive(Serialize)]
struct RhoRow {
    alpha: Alpha,
    rho: f64,
    residual: f64,
    iterations: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    rho_quotient: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    delta_rho: Option<f64>,
}

#[derive(Serialize)]
struct RhoReport {
    graph6: String,
    n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    family: Option<String>,
    rows: Vec<RhoRow>,
}

#[derive(Serialize)]
struct QuotientAt {
    alpha: Alpha,
    rows: Vec<Vec<f64>>,
    charpoly: Vec<f64>,
    rho: f64,
}

#[derive(Serialize)]
struct QuotientReport {
    family: String,
    n: usize,
    k: usize,
    evaluations: Vec<QuotientAt>,
}

#[derive(Serialize)]
struct FamilyReport {
    family: String,
    n: usize,
    s: usize,
    parts: Vec<usize>,
    graph6: String,
    meets_size_hypothesis: bool,
    invariants: InvariantReport,
}

#[derive(Serialize)]
struct CheckReport {
    target: String,
    graph6: String,
    verdicts: Vec<Verdict>,
    all_respected: bool,
}

// ===========================================================================
// Rendering
// ===========================================================================

fn render_json<T: Serialize>(value: &T) -> Result<String> {
    let mut text = serde_json::to_string_pretty(value)
        .map_err(|e| Error::Io(format!("serialization failed: {e}")))?;
    text.push('\n');
    Ok(text)
}

fn fmt_opt<T: std::fmt::Display>(v: &Option<T>) -> String {
    match v {
        Some(x) => x.to_string(),
        None => "none".to_string(),
    }
}

fn invariants_plain(r: &InvariantReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "graph6 = {}", r.graph6);
    let _ = writeln!(out, "n = {}", r.n);
    let _ = writeln!(out, "scattering = {}", fmt_opt(&r.scattering));
    let _ = writeln!(out, "toughness = {}", r.toughness);
    let _ = writeln!(out, "tau = {}", fmt_opt(&r.tau));
    for (name, witness) in &r.witnesses {
        let verts: Vec<String> = witness.iter().map(|v| v.to_string()).collect();
        let _ = writeln!(out, "witness.{} = {}", name, verts.join(" "));
    }
    out
}

fn verdict_plain(v: &Verdict) -> String {
    format!(
        "alpha = {} rho = {:.12} threshold = {:.12} hypothesis = {} conclusion = {} extremal = {} respected = {}\n",
        v.alpha,
        v.rho,
        v.threshold,
        v.hypothesis_holds,
        v.conclusion_holds,
        v.is_extremal,
        v.respected()
    )
}

fn search_plain(r: &SearchReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "space = {}", r.space);
    let _ = writeln!(out, "examined = {}", r.examined);
    for c in &r.examined_by_size {
        let _ = writeln!(out, "examined.n{} = {}", c.n, c.classes);
    }
    let _ = writeln!(out, "violations = {}", r.violations.len());
    for v in &r.violations {
        let _ = writeln!(
            out,
            "violation {} alpha = {} {}",
            v.graph6,
            fmt_opt(&v.alpha),
            v.detail
        );
    }
    out
}

fn search_csv(r: &SearchReport) -> String {
    let mut out = String::from("graph6,alpha,detail\n");
    for v in &r.violations {
        let _ = writeln!(
            out,
            "{},{},{:?}",
            v.graph6,
            fmt_opt(&v.alpha),
            v.detail
        );
    }
    out
}

fn emit(output: &Output, text: &str) -> Result<()> {
    match &output.out {
        Some(path) => std::fs::write(path, text).map_err(|e| Error::Io(e.to_string())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn resolve_jobs(flag: Option<usize>) -> usize {
    flag.or_else(|| {
        std::env::var("SPECTOUGH_JOBS")
            .ok()
            .and_then(|s| s.parse().ok())
    })
    .unwrap_or(1)
    .max(1)
}

// ===========================================================================
// Dispatch
// ===========================================================================

/// Run the parsed command. Ok(0) clean, Ok(2) violations found; hard failures bubble up
/// as errors and the caller maps them to exit 1.
pub fn execute(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Invariants { source, output } => {
            let resolved = source.resolve()?;
            let report = invariant_report(resolved.graph())?;
            let text = match output.format {
                Format::Json => render_json(&report)?,
                Format::Plain | Format::Csv => invariants_plain(&report),
            };
            emit(&output, &text)?;
            Ok(0)
        }
        Command::Rho {
            source,
            alpha,
            output,
        } => {
            let resolved = source.resolve()?;
            let g = resolved.graph();
            let mut rows = Vec::with_capacity(alpha.len());
            for &a in &alpha {
                let m = a_alpha(g, a.as_f64())?;
                let result = crate::eigen::spectral_radius(&m, 1e-11)?;
                let rho_quotient = match resolved.spec() {
                    Some(spec) => Some(threshold_rho::<f64>(spec, a)?),
                    None => None,
                };
                rows.push(RhoRow {
                    alpha: a,
                    rho: result.radius,
                    residual: result.residual,
                    iterations: result.iterations,
                    rho_quotient,
                    delta_rho: rho_quotient.map(|q| q - result.radius),
                });
            }
            let report = RhoReport {
                graph6: to_graph6(g),
                n: g.n(),
                family: resolved.spec().map(|s| s.to_string()),
                rows,
            };
            let text = match output.format {
                Format::Json => render_json(&report)?,
                Format::Csv => {
                    let mut out =
                        String::from("alpha,rho,residual,iterations,rho_quotient,delta_rho\n");
                    for r in &report.rows {
                        let _ = writeln!(
                            out,
                            "{},{:.16e},{:.3e},{},{},{}",
                            r.alpha,
                            r.rho,
                            r.residual,
                            r.iterations,
                            r.rho_quotient.map_or("".into(), |q| format!("{q:.16e}")),
                            r.delta_rho.map_or("".into(), |d| format!("{d:.3e}")),
                        );
                    }
                    out
                }
                Format::Plain => {
                    let mut out = String::new();
                    let _ = writeln!(out, "graph6 = {}", report.graph6);
                    for r in &report.rows {
                        let _ = write!(out, "alpha = {} rho = {:.12}", r.alpha, r.rho);
                        if let Some(q) = r.rho_quotient {
                            let _ = write!(out, " rho_quotient = {q:.12}");
                        }
                        let _ = writeln!(out);
                    }
                    out
                }
            };
            emit(&output, &text)?;
            Ok(0)
        }
        Command::Quotient {
            source,
            alpha,
            output,
        } => {
            let fam = source.resolve()?;
            let mut evaluations = Vec::with_capacity(alpha.len());
            let mut k = 0;
            for &a in &alpha {
                let q = split_join_quotient::<f64>(&fam.spec, a)?;
                k = q.k();
                evaluations.push(QuotientAt {
                    alpha: a,
                    rows: q.rows(),
                    charpoly: q.charpoly()?,
                    rho: q.largest_eigenvalue()?,
                });
            }
            let report = QuotientReport {
                family: fam.spec.to_string(),
                n: fam.spec.n(),
                k,
                evaluations,
            };
            let text = match output.format {
                Format::Json => render_json(&report)?,
                Format::Csv => {
                    let mut out = String::from("alpha,i,j,value\n");
                    for e in &report.evaluations {
                        for (i, row) in e.rows.iter().enumerate() {
                            for (j, value) in row.iter().enumerate() {
                                let _ =
                                    writeln!(out, "{},{},{},{:.16e}", e.alpha, i, j, value);
                            }
                        }
                    }
                    out
                }
                Format::Plain => {
                    let mut out = String::new();
                    let _ = writeln!(out, "family = {}", report.family);
                    for e in &report.evaluations {
                        let _ = writeln!(out, "alpha = {} rho = {:.12}", e.alpha, e.rho);
                        for row in &e.rows {
                            let cells: Vec<String> =
                                row.iter().map(|v| format!("{v:.6}")).collect();
                            let _ = writeln!(out, "  [{}]", cells.join(", "));
                        }
                    }
                    out
                }
            };
            emit(&output, &text)?;
            Ok(0)
        }
        Command::Family {
            source,
            g6_out,
            output,
        } => {
            let fam = source.resolve()?;
            let g6 = to_graph6(&fam.graph);
            if let Some(path) = &g6_out {
                std::fs::write(path, format!("{g6}\n")).map_err(|e| Error::Io(e.to_string()))?;
            }
            let report = FamilyReport {
                family: fam.spec.to_string(),
                n: fam.spec.n(),
                s: fam.spec.s(),
                parts: fam.spec.parts().to_vec(),
                graph6: g6,
                meets_size_hypothesis: fam.meets_size_hypothesis,
                invariants: invariant_report(&fam.graph)?,
            };
            let text = match output.format {
                Format::Json => render_json(&report)?,
                Format::Plain | Format::Csv => {
                    let mut out = String::new();
                    let _ = writeln!(out, "family = {}", report.family);
                    let _ = writeln!(out, "meets_size_hypothesis = {}", report.meets_size_hypothesis);
                    out.push_str(&invariants_plain(&report.invariants));
                    out
                }
            };
            emit(&output, &text)?;
            Ok(0)
        }
        Command::Check {
            target,
            source,
            alpha,
            tau,
            b,
            output,
        } => {
            let resolved = source.resolve()?;
            let g = resolved.graph();
            // For the tau checks, fall back to the parameter implied by the family
            // source: s + 1 for the integer form, t - 1 for the fractional form.
            let mut verdicts = Vec::with_capacity(alpha.len());
            for &a in &alpha {
                let v = match target {
                    TargetName::T11 => check_scattering(g, a)?,
                    TargetName::T12a => {
                        let tau = tau
                            .or_else(|| resolved.spec().map(|s| s.s() as i64 + 1))
                            .ok_or_else(|| {
                                Error::InvalidParameter("t12a needs --tau".into())
                            })?;
                        check_tau_integer(g, a, tau)?
                    }
                    TargetName::T12b => {
                        let b = b
                            .or_else(|| resolved.spec().map(|s| s.t() as i64 - 1))
                            .ok_or_else(|| Error::InvalidParameter("t12b needs --b".into()))?;
                        check_tau_fractional(g, a, b)?
                    }
                };
                verdicts.push(v);
            }
            let all_respected = verdicts.iter().all(|v| v.respected());
            let report = CheckReport {
                target: format!("{target:?}").to_lowercase(),
                graph6: to_graph6(g),
                verdicts,
                all_respected,
            };
            let text = match output.format {
                Format::Json => render_json(&report)?,
                Format::Plain | Format::Csv => {
                    let mut out = String::new();
                    let _ = writeln!(out, "target = {}", report.target);
                    let _ = writeln!(out, "graph6 = {}", report.graph6);
                    for v in &report.verdicts {
                        out.push_str(&verdict_plain(v));
                    }
                    out
                }
            };
            emit(&output, &text)?;
            Ok(if all_respected { 0 } else { 2 })
        }
        Command::Search {
            target,
            n,
            delta,
            alpha,
            mode,
            count,
            seed,
            tau,
            b,
            jobs,
            g6_out,
            output,
        } => {
            let target = match target {
                TargetName::T11 => SearchTarget::Scattering,
                TargetName::T12a => SearchTarget::TauInteger(
                    tau.ok_or_else(|| Error::InvalidParameter("t12a needs --tau".into()))?,
                ),
                TargetName::T12b => SearchTarget::TauFractional(
                    b.ok_or_else(|| Error::InvalidParameter("t12b needs --b".into()))?,
                ),
            };
            let mode = match mode {
                Mode::Exhaustive => SearchMode::Exhaustive,
                Mode::Random => SearchMode::Random { count, seed },
            };
            let report =
                search_counterexamples_timed(target, n, delta, &alpha, mode, resolve_jobs(jobs))?;
            if let Some(path) = &g6_out {
                let mut lines = String::new();
                for v in &report.violations {
                    let _ = writeln!(lines, "{}", v.graph6);
                }
                std::fs::write(path, lines).map_err(|e| Error::Io(e.to_string()))?;
            }
            let text = match output.format {
                Format::Json => render_json(&report)?,
                Format::Csv => search_csv(&report),
                Format::Plain => search_plain(&report),
            };
            emit(&output, &text)?;
            Ok(if report.violations.is_empty() { 0 } else { 2 })
        }
        Command::Audit { nmax, output } => {
            let report = audit_equivalences(nmax)?;
            eprintln!("audit finished in {:.2?}", report.runtime);
            let text = match output.format {
                Format::Json => render_json(&report)?,
                Format::Csv => search_csv(&report),
                Format::Plain => search_plain(&report),
            };
            emit(&output, &text)?;
            Ok(if report.violations.is_empty() { 0 } else { 2 })
        }
        Command::Sweep {
            nmax,
            smax,
            tmax,
            alpha,
            jobs,
            output,
        } => {
            let rows = sweep_rows(nmax, smax, tmax, &alpha, resolve_jobs(jobs))?;
            let text = match output.format {
                Format::Json => render_json(&rows)?,
                Format::Csv | Format::Plain => {
                    let mut out = String::from(SweepRow::csv_header());
                    out.push('\n');
                    for row in &rows {
                        out.push_str(&row.to_csv());
                        out.push('\n');
                    }
                    out
                }
            };
            emit(&output, &text)?;
            Ok(0)
        }
    }
}

fn search_counterexamples_timed(
    target: SearchTarget,
    n: usize,
    delta: Option<usize>,
    alphas: &[Alpha],
    mode: SearchMode,
    jobs: usize,
) -> Result<SearchReport> {
    let report = crate::verify::search_counterexamples(target, n, delta, alphas, mode, jobs)?;
    eprintln!("search finished in {:.2?}", report.runtime);
    Ok(report)
}

/// Parse argv and run. Usage problems exit 1 (not clap's default 2, which is reserved
/// for mathematical violations); --help and --version exit 0.
pub fn main_with_args<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return code;
        }
    };
    match execute(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}
