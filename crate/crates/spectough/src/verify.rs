//! Verdicts, audits and counterexample searches tying the spectral thresholds to the
//! combinatorial invariants.
//!
//! A check takes one graph and one alpha and answers four questions: does the size and
//! alpha regime apply, does the spectral hypothesis rho >= threshold hold (ties resolved
//! toward holding at [`RHO_TIE_TOL`]), does the claimed invariant conclusion hold, and is
//! the graph the designated extremal family member. A verdict is respected unless the
//! hypothesis holds while both the conclusion and extremality fail. Searches fan a check
//! over exhaustive or random graph populations and collect disrespected verdicts.

use crate::enumerate::{enumerate_connected, random_connected_min_degree};
use crate::error::{Error, Result};
use crate::families::{
    matches_family, scattering_extremal, tau_fractional_extremal, tau_integer_extremal,
    threshold_rho, FamilyGraph,
};
use crate::graph::{Graph, VertexSet};
use crate::graph6::to_graph6;
use crate::invariants::invariant_report;
use crate::rational::{Alpha, Rational};
use crate::spectral::a_alpha;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::collections::BTreeMap;
use std::time::{Duration, Instant};

/// Spectral comparisons treat |rho - threshold| below this as a tie in favor of the
/// hypothesis, so the extremal equality cases are never lost to rounding.
pub const RHO_TIE_TOL: f64 = 1e-9;

// ===========================================================================
// Verdicts
// ===========================================================================

/// Outcome of checking one threshold statement on one graph at one alpha.
#[derive(Clone, Debug, Serialize)]
pub struct Verdict {
    pub graph6: String,
    pub n: usize,
    pub alpha: Alpha,
    /// Dense A_alpha spectral radius of the graph (Jacobi route).
    pub rho: f64,
    /// Spectral radius of the extremal family at the same n; NaN serializes as null when
    /// the family does not exist at these parameters.
    pub threshold: f64,
    pub hypothesis_holds: bool,
    pub conclusion_holds: bool,
    pub is_extremal: bool,
    pub scattering: Option<i64>,
    pub tau: Option<Rational>,
    pub witness: Option<VertexSet>,
}

impl Verdict {
    /// The statement survives: hypothesis fails, or conclusion holds, or the graph is
    /// the designated extremal member.
    pub fn respected(&self) -> bool {
        !self.hypothesis_holds || self.conclusion_holds || self.is_extremal
    }
}

fn dense_rho(g: &Graph, alpha: Alpha) -> Result<f64> {
    let m = a_alpha(g, alpha.as_f64())?;
    Ok(crate::eigen::spectral_radius(&m, 1e-11)?.radius)
}

fn family_threshold(family: &Result<FamilyGraph>, alpha: Alpha) -> f64 {
    match family {
        Ok(f) => threshold_rho::<f64>(&f.spec, alpha).unwrap_or(f64::NAN),
        Err(_) => f64::NAN,
    }
}

/// Scattering threshold check: rho_alpha(G) >= rho_alpha(K_delta v (K_{n-2delta-1} u
/// (delta+1) K_1)) forces s(G) <= 1 unless G is that family member.
///
/// Hypothesis regime: alpha in [0, 3/4], with n >= max(delta^3 + delta, 4 delta + 3)
/// when alpha <= 1/2 and n >= max(delta^3 + delta, 8 delta + 4) otherwise. The often
/// quoted boundary n = 4 delta + 2 does not work: at n = 6, delta = 1 a non-member
/// ties the threshold exactly at alpha = 1/2 (it is signless-Laplacian cospectral
/// with the family member) and overtakes it for larger alpha, and at n = 10,
/// delta = 2 the threshold is beaten even at alpha = 0. Above 3/4 the violating
/// order range grows without bound as alpha -> 1 (already n = 12 at alpha = 9/10
/// for delta = 1), so no fixed size bound covers the full alpha range.
pub fn check_scattering(g: &Graph, alpha: Alpha) -> Result<Verdict> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.n();
    let delta = g.min_degree();
    let rho = dense_rho(g, alpha)?;
    let family = scattering_extremal(n, delta);
    let threshold = family_threshold(&family, alpha);
    let size_floor = if alpha <= Alpha::HALF {
        4 * delta + 3
    } else {
        8 * delta + 4
    };
    let size_ok = delta >= 1 && n >= size_floor.max(delta * delta * delta + delta);
    let alpha_ok = alpha <= Alpha::new(3, 4).expect("3/4 is a valid alpha");
    let hypothesis_holds = size_ok && alpha_ok && rho >= threshold - RHO_TIE_TOL;
    let report = invariant_report(g)?;
    let conclusion_holds = report.scattering.is_none_or(|s| s <= 1);
    let is_extremal = family
        .as_ref()
        .map(|f| matches_family(g, &f.spec))
        .unwrap_or(false);
    Ok(Verdict {
        graph6: to_graph6(g),
        n,
        alpha,
        rho,
        threshold,
        hypothesis_holds,
        conclusion_holds,
        is_extremal,
        scattering: report.scattering,
        tau: None,
        witness: report.witnesses.get("scattering").copied(),
    })
}

/// Integer tau threshold check: for tau >= 2, alpha in [1/2, 3/4), and
/// n >= max(4 tau^2 + 5 tau + 1, (8 tau (1 - alpha) - 2 alpha + 1) / (3 - 4 alpha)),
/// rho_alpha(G) >= rho_alpha(K_{tau-1} v (K_{n-tau} u K_1)) forces tau(G) >= tau unless
/// G is that family member (whose tau is tau - 1).
pub fn check_tau_integer(g: &Graph, alpha: Alpha, tau: i64) -> Result<Verdict> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if tau < 1 {
        return Err(Error::InvalidParameter(format!(
            "integer tau check needs tau >= 1, got {tau}"
        )));
    }
    let n = g.n();
    let rho = dense_rho(g, alpha)?;
    let family = tau_integer_extremal(n, tau);
    let threshold = family_threshold(&family, alpha);
    let a = alpha.rational();
    let alpha_ok = alpha >= Alpha::HALF && alpha < Alpha::new(3, 4).unwrap();
    // n >= (8 tau (1 - alpha) - 2 alpha + 1) / (3 - 4 alpha); the denominator is positive
    // on the whole alpha window.
    let n_rat = Rational::from_int(n as i64);
    let num = Rational::from_int(8 * tau + 1) - a * Rational::from_int(8 * tau + 2);
    let den = Rational::from_int(3) - Rational::from_int(4) * a;
    let size_ok = tau >= 2
        && n as i64 >= 4 * tau * tau + 5 * tau + 1
        && den > Rational::from_int(0)
        && n_rat * den >= num;
    let hypothesis_holds = alpha_ok && size_ok && rho >= threshold - RHO_TIE_TOL;
    let report = invariant_report(g)?;
    let conclusion_holds = report.tau.is_none_or(|t| t >= Rational::from_int(tau));
    let is_extremal = family
        .as_ref()
        .map(|f| matches_family(g, &f.spec))
        .unwrap_or(false);
    Ok(Verdict {
        graph6: to_graph6(g),
        n,
        alpha,
        rho,
        threshold,
        hypothesis_holds,
        conclusion_holds,
        is_extremal,
        scattering: report.scattering,
        tau: report.tau,
        witness: report.witnesses.get("tau").copied(),
    })
}

/// Fractional tau threshold check, tau = 1/b: for b >= 2,
/// alpha in [1/2, (3b+1)/(4b+2)), and n above both the polynomial bound
/// n b^2 >= 2 b^3 + 8 b^2 + 5 b + 2 and the rational bound T(alpha, b),
/// rho_alpha(G) >= rho_alpha(K_1 v (K_{n-b-2} u (b+1) K_1)) forces tau(G) >= 1/b unless
/// G is that family member (whose tau is 1/(b+1)).
pub fn check_tau_fractional(g: &Graph, alpha: Alpha, b: i64) -> Result<Verdict> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if b < 1 {
        return Err(Error::InvalidParameter(format!(
            "fractional tau check needs b >= 1, got {b}"
        )));
    }
    let n = g.n();
    let rho = dense_rho(g, alpha)?;
    let family = tau_fractional_extremal(n, b);
    let threshold = family_threshold(&family, alpha);
    let a = alpha.rational();
    let alpha_ok = alpha >= Alpha::HALF && a * Rational::from_int(4 * b + 2) < Rational::from_int(3 * b + 1);
    // T(alpha, b) = ((5-6a) + (13-14a) b + 4 (1-a) b^2) / ((1-2a) + (3-4a) b), already
    // cleared of 1/b^2; the denominator is positive exactly on the alpha window.
    let rb = Rational::from_int(b);
    let one = Rational::from_int(1);
    let num = (Rational::from_int(5) - Rational::from_int(6) * a)
        + (Rational::from_int(13) - Rational::from_int(14) * a) * rb
        + Rational::from_int(4) * (one - a) * rb * rb;
    let den = (one - Rational::from_int(2) * a) + (Rational::from_int(3) - Rational::from_int(4) * a) * rb;
    let n_rat = Rational::from_int(n as i64);
    let size_ok = b >= 2
        && (n as i64) * b * b >= 2 * b * b * b + 8 * b * b + 5 * b + 2
        && den > Rational::from_int(0)
        && n_rat * den >= num;
    let hypothesis_holds = alpha_ok && size_ok && rho >= threshold - RHO_TIE_TOL;
    let report = invariant_report(g)?;
    let conclusion_holds = report.tau.is_none_or(|t| t >= Rational::new(1, b));
    let is_extremal = family
        .as_ref()
        .map(|f| matches_family(g, &f.spec))
        .unwrap_or(false);
    Ok(Verdict {
        graph6: to_graph6(g),
        n,
        alpha,
        rho,
        threshold,
        hypothesis_holds,
        conclusion_holds,
        is_extremal,
        scattering: report.scattering,
        tau: report.tau,
        witness: report.witnesses.get("tau").copied(),
    })
}

// ===========================================================================
// Reports
// ===========================================================================

#[derive(Clone, Debug, Serialize)]
pub struct SizeCount {
    pub n: usize,
    pub classes: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Violation {
    pub graph6: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha: Option<Alpha>,
    pub detail: String,
}

/// Result of an audit or search. The wall-clock runtime is deliberately excluded from
/// serialization so identical runs produce identical bytes; callers print it separately.
#[derive(Clone, Debug, Serialize)]
pub struct SearchReport {
    pub space: String,
    pub examined: usize,
    pub examined_by_size: Vec<SizeCount>,
    pub violations: Vec<Violation>,
    #[serde(skip)]
    pub runtime: Duration,
}

// ===========================================================================
// Equivalence audit
// ===========================================================================

/// Exhaustively confirm, over all connected non-complete graphs with 2 <= n <= nmax,
/// the order-reversing bridges between the invariants: s(G) <= 0 iff t(G) >= 1, and
/// s(G) <= 1 iff tau(G) >= 1.
pub fn audit_equivalences(nmax: usize) -> Result<SearchReport> {
    let start = Instant::now();
    let mut examined = 0;
    let mut examined_by_size = Vec::new();
    let mut violations = Vec::new();
    for n in 2..=nmax {
        let mut here = 0;
        for g in enumerate_connected(n)? {
            if g.is_complete() {
                continue;
            }
            here += 1;
            let report = invariant_report(&g)?;
            let s = report
                .scattering
                .expect("non-complete graphs have a separating set");
            let t = report.toughness;
            let tau = report.tau.expect("non-complete graphs have finite tau");
            let one = Rational::from_int(1);
            if (s <= 0) != (t >= one) {
                violations.push(Violation {
                    graph6: report.graph6.clone(),
                    alpha: None,
                    detail: format!("s = {s} but t = {t}: scattering/toughness bridge broken"),
                });
            }
            if (s <= 1) != (tau >= one) {
                violations.push(Violation {
                    graph6: report.graph6.clone(),
                    alpha: None,
                    detail: format!("s = {s} but tau = {tau}: scattering/tau bridge broken"),
                });
            }
        }
        examined += here;
        examined_by_size.push(SizeCount { n, classes: here });
    }
    Ok(SearchReport {
        space: format!("connected non-complete graphs, 2 <= n <= {nmax}"),
        examined,
        examined_by_size,
        violations,
        runtime: start.elapsed(),
    })
}

// ===========================================================================
// Counterexample search
// ===========================================================================

/// Which threshold statement a search exercises.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchTarget {
    Scattering,
    TauInteger(i64),
    TauFractional(i64),
}

impl SearchTarget {
    fn check(self, g: &Graph, alpha: Alpha) -> Result<Verdict> {
        match self {
            SearchTarget::Scattering => check_scattering(g, alpha),
            SearchTarget::TauInteger(tau) => check_tau_integer(g, alpha, tau),
            SearchTarget::TauFractional(b) => check_tau_fractional(g, alpha, b),
        }
    }

    fn name(self) -> &'static str {
        match self {
            SearchTarget::Scattering => "scattering threshold",
            SearchTarget::TauInteger(_) => "integer tau threshold",
            SearchTarget::TauFractional(_) => "fractional tau threshold",
        }
    }
}

/// How the graph population is produced.
#[derive(Clone, Copy, Debug)]
pub enum SearchMode {
    /// Every connected graph on n vertices up to isomorphism (n <= 7).
    Exhaustive,
    /// `count` seeded random connected graphs on n vertices.
    Random { count: usize, seed: u64 },
}

/// Run a threshold check over a population of n-vertex graphs at each alpha, in
/// parallel, collecting every disrespected verdict. `delta` filters exhaustive
/// populations by minimum degree and pins the generator for random ones; None means
/// unconstrained (random mode then uses edge probability 1/2).
pub fn search_counterexamples(
    target: SearchTarget,
    n: usize,
    delta: Option<usize>,
    alphas: &[Alpha],
    mode: SearchMode,
    jobs: usize,
) -> Result<SearchReport> {
    let start = Instant::now();
    let graphs: Vec<Graph> = match mode {
        SearchMode::Exhaustive => enumerate_connected(n)?
            .filter(|g| delta.is_none_or(|d| g.min_degree() == d))
            .collect(),
        SearchMode::Random { count, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut graphs = Vec::with_capacity(count);
            for _ in 0..count {
                let g = match delta {
                    Some(d) => random_connected_min_degree(n, d, &mut rng)?,
                    None => crate::enumerate::random_connected(n, 0.5, &mut rng)?,
                };
                graphs.push(g);
            }
            graphs
        }
    };
    let per_graph = parallel_map(&graphs, jobs, |g| -> Result<Vec<Violation>> {
        let mut found = Vec::new();
        for &alpha in alphas {
            let v = target.check(g, alpha)?;
            if !v.respected() {
                found.push(Violation {
                    graph6: v.graph6.clone(),
                    alpha: Some(alpha),
                    detail: format!(
                        "{}: rho = {:.12} >= threshold = {:.12} but conclusion fails \
                         (scattering = {:?}, tau = {:?}) and graph is not extremal",
                        target.name(),
                        v.rho,
                        v.threshold,
                        v.scattering,
                        v.tau
                    ),
                });
            }
        }
        Ok(found)
    });
    let mut violations = Vec::new();
    for r in per_graph {
        violations.extend(r?);
    }
    let mode_desc = match mode {
        SearchMode::Exhaustive => "exhaustive".to_string(),
        SearchMode::Random { count, seed } => format!("random count = {count} seed = {seed}"),
    };
    let delta_desc = match delta {
        Some(d) => format!(", min degree {d}"),
        None => String::new(),
    };
    Ok(SearchReport {
        space: format!("{} over connected graphs on {n} vertices{delta_desc} ({mode_desc})",
            target.name()),
        examined: graphs.len(),
        examined_by_size: vec![SizeCount {
            n,
            classes: graphs.len(),
        }],
        violations,
        runtime: start.elapsed(),
    })
}

/// Map f over items on up to `jobs` threads, preserving order.
pub(crate) fn parallel_map<T: Sync, U: Send>(
    items: &[T],
    jobs: usize,
    f: impl Fn(&T) -> U + Sync,
) -> Vec<U> {
    let jobs = jobs.clamp(1, items.len().max(1));
    if jobs <= 1 {
        return items.iter().map(&f).collect();
    }
    let chunk = items.len().div_ceil(jobs);
    let mut out: Vec<Vec<U>> = Vec::new();
    std::thread::scope(|scope| {
        let f = &f;
        let handles: Vec<_> = items
            .chunks(chunk)
            .map(|slice| scope.spawn(move || slice.iter().map(f).collect::<Vec<U>>()))
            .collect();
        out = handles
            .into_iter()
            .map(|h| h.join().expect("search worker panicked"))
            .collect();
    });
    out.into_iter().flatten().collect()
}

// ===========================================================================
// Quadratics behind the counting arguments
// ===========================================================================

/// f(c) = (2 tau + 1) c^2 - (2n + 4 tau + 3) c + n^2 + n + 2 tau + 2: the discriminant
/// count controlling how many components an integer-tau counterexample could shatter
/// into. Convex in c, so its maximum over an interval sits at an endpoint.
pub fn components_quadratic(n: f64, tau: f64, c: f64) -> f64 {
    (2.0 * tau + 1.0) * c * c - (2.0 * n + 4.0 * tau + 3.0) * c + n * n + n + 2.0 * tau + 2.0
}

/// g(s) = b (b + 2) s^2 - (2 b n - 3 b - 2) s + n^2 - 3 n + 2: the analogous count for
/// the fractional case, in the cut size s.
pub fn cutsize_quadratic(n: f64, b: f64, s: f64) -> f64 {
    b * (b + 2.0) * s * s - (2.0 * b * n - 3.0 * b - 2.0) * s + n * n - 3.0 * n + 2.0
}

// ===========================================================================
// Quotient sweeps
// ===========================================================================

/// One sweep observation: a split join family evaluated at one alpha, with the spectral
/// radius computed both ways.
#[derive(Clone, Debug, Serialize)]
pub struct SweepRow {
    pub n: usize,
    pub s: usize,
    pub parts: Vec<usize>,
    pub alpha: Alpha,
    pub rho_quotient: f64,
    pub rho_dense: f64,
    pub delta_rho: f64,
}

impl SweepRow {
    pub fn csv_header() -> &'static str {
        "n,s,parts,alpha,rho_quotient,rho_dense,delta_rho"
    }

    pub fn to_csv(&self) -> String {
        let parts = self
            .parts
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join("|");
        format!(
            "{},{},{},{},{:.16e},{:.16e},{:.16e}",
            self.n, self.s, parts, self.alpha, self.rho_quotient, self.rho_dense, self.delta_rho
        )
    }
}

fn partitions_into(total: usize, parts: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if parts == 1 {
        if total >= 1 && total <= max {
            let mut v = prefix.clone();
            v.push(total);
            out.push(v);
        }
        return;
    }
    // Keep non-increasing order; each remaining part needs at least 1.
    let hi = max.min(total - (parts - 1));
    for first in (1..=hi).rev() {
        prefix.push(first);
        partitions_into(total - first, parts - 1, first, prefix, out);
        prefix.pop();
    }
}

/// All split joins with n <= nmax, 1 <= s <= smax, 1 <= t <= tmax, each evaluated at
/// every alpha, with the quotient and dense spectral radii side by side.
pub fn sweep_rows(
    nmax: usize,
    smax: usize,
    tmax: usize,
    alphas: &[Alpha],
    jobs: usize,
) -> Result<Vec<SweepRow>> {
    let mut configs: Vec<(usize, usize, Vec<usize>)> = Vec::new();
    for n in 2..=nmax {
        for s in 1..=smax.min(n - 1) {
            let rest = n - s;
            for t in 1..=tmax.min(rest) {
                let mut parts_list = Vec::new();
                partitions_into(rest, t, rest, &mut Vec::new(), &mut parts_list);
                for parts in parts_list {
                    configs.push((n, s, parts));
                }
            }
        }
    }
    let rows = parallel_map(&configs, jobs, |(n, s, parts)| -> Result<Vec<SweepRow>> {
        let spec = crate::families::FamilySpec::new(*s, parts.clone())?;
        let fam = crate::families::split_join(&spec)?;
        let mut rows = Vec::with_capacity(alphas.len());
        for &alpha in alphas {
            let rho_quotient: f64 = threshold_rho(&spec, alpha)?;
            let m = a_alpha(&fam.graph, alpha.as_f64())?;
            let rho_dense = crate::eigen::spectral_radius(&m, 1e-11)?.radius;
            rows.push(SweepRow {
                n: *n,
                s: *s,
                parts: parts.clone(),
                alpha,
                rho_quotient,
                rho_dense,
                delta_rho: rho_quotient - rho_dense,
            });
        }
        Ok(rows)
    });
    let mut out = Vec::new();
    for r in rows {
        out.extend(r?);
    }
    Ok(out)
}

/// Check that within every (n, s, t, alpha) group whose parts all have size >= p, the
/// mass-concentrated vector [n - s - p (t - 1), p, ..., p] is the strict maximizer of
/// the spectral radius, by more than `margin`. Returns human-readable descriptions of
/// the failures.
pub fn monotonicity_violations(rows: &[SweepRow], pmax: usize, margin: f64) -> Vec<String> {
    let mut groups: BTreeMap<(usize, usize, usize, Alpha), Vec<&SweepRow>> = BTreeMap::new();
    for row in rows {
        groups
            .entry((row.n, row.s, row.parts.len(), row.alpha))
            .or_default()
            .push(row);
    }
    let mut failures = Vec::new();
    for ((n, s, t, alpha), group) in groups {
        if t < 2 {
            continue;
        }
        for p in 1..=pmax {
            let rest = n - s;
            if rest < p * t {
                continue;
            }
            let concentrated: Vec<usize> = {
                let mut v = vec![p; t];
                v[0] = rest - p * (t - 1);
                v
            };
            let Some(conc_row) = group.iter().find(|r| r.parts == concentrated) else {
                continue;
            };
            for other in &group {
                if other.parts == concentrated || other.parts.iter().any(|&x| x < p) {
                    continue;
                }
                if conc_row.rho_quotient - other.rho_quotient <= margin {
                    failures.push(format!(
                        "n = {n}, s = {s}, t = {t}, alpha = {alpha}, p = {p}: parts {:?} \
                         (rho = {:.12}) not dominated by {:?} (rho = {:.12})",
                        other.parts, other.rho_quotient, concentrated, conc_row.rho_quotient
                    ));
                }
            }
        }
    }
    failures
}
