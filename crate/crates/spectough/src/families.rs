//! Join-of-cliques families and their closed-form quotient matrices.
//!
//! Every construction here is a split join: a clique K_s joined onto a disjoint union of
//! cliques with sizes parts[0] >= ... >= parts[t-1]. The block partition (join block,
//! then one block per part) is equitable for every A_alpha, so the spectral radius is the
//! largest eigenvalue of a (t+1) x (t+1) quotient whose entries are affine in alpha and
//! can be assembled exactly.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::matrix::{Partition, QuotientMatrix};
use crate::rational::Alpha;
use crate::scalar::Real;
use std::fmt;
use std::str::FromStr;

// ===========================================================================
// Specs
// ===========================================================================

/// Parameters of a split join K_s v (K_{parts[0]} u ... u K_{parts[t-1]}).
/// Parts are kept sorted non-increasing; s = 0 means a plain union of cliques.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilySpec {
    s: usize,
    parts: Vec<usize>,
}

impl FamilySpec {
    pub fn new(s: usize, mut parts: Vec<usize>) -> Result<FamilySpec> {
        if parts.is_empty() {
            return Err(Error::InvalidParameter("at least one part required".into()));
        }
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidParameter("parts must be nonempty cliques".into()));
        }
        let n = s + parts.iter().sum::<usize>();
        if n > crate::graph::MAX_VERTICES {
            return Err(Error::SizeOverflow(n));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(FamilySpec { s, parts })
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of parts.
    pub fn t(&self) -> usize {
        self.parts.len()
    }

    pub fn n(&self) -> usize {
        self.s + self.parts.iter().sum::<usize>()
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "s={};parts=", self.s)?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    /// Parses the Display form, e.g. "s=2;parts=5,1,1,1".
    fn from_str(text: &str) -> Result<FamilySpec> {
        let mut s: Option<usize> = None;
        let mut parts: Option<Vec<usize>> = None;
        for item in text.split(';') {
            let (key, value) = item
                .split_once('=')
                .ok_or_else(|| Error::Malformed(format!("expected key=value in {item:?}")))?;
            match key.trim() {
                "s" => {
                    s = Some(value.trim().parse().map_err(|_| {
                        Error::Malformed(format!("bad clique size {value:?}"))
                    })?);
                }
                "parts" => {
                    let list: std::result::Result<Vec<usize>, _> =
                        value.split(',').map(|v| v.trim().parse()).collect();
                    parts = Some(list.map_err(|_| {
                        Error::Malformed(format!("bad parts list {value:?}"))
                    })?);
                }
                other => {
                    return Err(Error::Malformed(format!("unknown key {other:?}")));
                }
            }
        }
        match (s, parts) {
            (Some(s), Some(parts)) => FamilySpec::new(s, parts),
            _ => Err(Error::Malformed(format!(
                "family spec {text:?} needs both s= and parts="
            ))),
        }
    }
}

/// A constructed family member: the graph, its spec, the equitable block partition
/// (join block first when s >= 1, then one block per part), and whether the parameters
/// satisfy the size hypothesis of the theorem the family is extremal for.
#[derive(Clone, Debug)]
pub struct FamilyGraph {
    pub graph: Graph,
    pub spec: FamilySpec,
    pub blocks: Vec<VertexSet>,
    pub meets_size_hypothesis: bool,
}

impl FamilyGraph {
    pub fn partition(&self) -> Partition {
        Partition::new(self.graph.n(), self.blocks.clone())
            .expect("family blocks partition the vertex set")
    }
}

// ===========================================================================
// Constructions
// ===========================================================================

/// Build the split join graph with the join block on vertices 0..s and parts following
/// in spec order.
pub fn split_join(spec: &FamilySpec) -> Result<FamilyGraph> {
    let n = spec.n();
    let s = spec.s;
    let mut g = Graph::new(n)?;
    let full = VertexSet::full(n).mask();
    let join = VertexSet::full(s).mask();
    let mut blocks = Vec::new();
    if s > 0 {
        blocks.push(VertexSet::from_mask(join));
    }
    let mut start = s;
    let mut part_masks = Vec::new();
    for &p in &spec.parts {
        let mask = (VertexSet::full(start + p).mask()) & !VertexSet::full(start).mask();
        part_masks.push(mask);
        blocks.push(VertexSet::from_mask(mask));
        start += p;
    }
    for u in 0..s {
        g.set_neighbors(u, full & !(1u64 << u));
    }
    for &mask in &part_masks {
        for u in VertexSet::from_mask(mask).iter() {
            g.set_neighbors(u, (mask & !(1u64 << u)) | join);
        }
    }
    debug_assert!(g.invariants_ok());
    Ok(FamilyGraph {
        graph: g,
        spec: spec.clone(),
        blocks,
        meets_size_hypothesis: true,
    })
}

/// K_delta v (K_{n-2 delta-1} u (delta+1) K_1): the extremal graph for the scattering
/// threshold. Size hypothesis: n >= max(4 delta + 2, delta^3 + delta).
pub fn scattering_extremal(n: usize, delta: usize) -> Result<FamilyGraph> {
    if delta < 1 {
        return Err(Error::InvalidParameter(
            "scattering family needs delta >= 1".into(),
        ));
    }
    let big = n
        .checked_sub(2 * delta + 1)
        .filter(|&b| b >= 1)
        .ok_or_else(|| {
            Error::InvalidParameter(format!(
                "scattering family needs n >= 2 delta + 2, got n = {n}, delta = {delta}"
            ))
        })?;
    let mut parts = vec![1; delta + 1];
    parts.insert(0, big);
    let spec = FamilySpec::new(delta, parts)?;
    let mut fam = split_join(&spec)?;
    fam.meets_size_hypothesis = n >= (4 * delta + 2).max(delta * delta * delta + delta);
    debug_assert_eq!(fam.graph.min_degree(), delta);
    Ok(fam)
}

/// K_{tau-1} v (K_{n-tau} u K_1): the extremal graph for the integer tau threshold.
/// Size hypothesis: n >= 4 tau^2 + 5 tau + 1 (together with the alpha window).
pub fn tau_integer_extremal(n: usize, tau: i64) -> Result<FamilyGraph> {
    if tau < 2 {
        return Err(Error::InvalidParameter(
            "integer tau family needs tau >= 2".into(),
        ));
    }
    let tau_u = tau as usize;
    let big = n.checked_sub(tau_u).filter(|&b| b >= 1).ok_or_else(|| {
        Error::InvalidParameter(format!(
            "integer tau family needs n > tau, got n = {n}, tau = {tau}"
        ))
    })?;
    let spec = FamilySpec::new(tau_u - 1, vec![big, 1])?;
    let mut fam = split_join(&spec)?;
    fam.meets_size_hypothesis = n >= 4 * tau_u * tau_u + 5 * tau_u + 1;
    Ok(fam)
}

/// K_1 v (K_{n-b-2} u (b+1) K_1): the extremal graph for the fractional tau threshold
/// tau = 1/b. Size hypothesis: b >= 2 and n >= 2/b^2 + 5/b + 2b + 8, checked in
/// integers as n b^2 >= 2 b^3 + 8 b^2 + 5 b + 2.
pub fn tau_fractional_extremal(n: usize, b: i64) -> Result<FamilyGraph> {
    if b < 1 {
        return Err(Error::InvalidParameter(
            "fractional tau family needs b >= 1".into(),
        ));
    }
    let b_u = b as usize;
    let big = n.checked_sub(b_u + 2).filter(|&x| x >= 1).ok_or_else(|| {
        Error::InvalidParameter(format!(
            "fractional tau family needs n >= b + 3, got n = {n}, b = {b}"
        ))
    })?;
    let mut parts = vec![1; b_u + 1];
    parts.insert(0, big);
    let spec = FamilySpec::new(1, parts)?;
    let mut fam = split_join(&spec)?;
    fam.meets_size_hypothesis =
        b >= 2 && (n as u64) * (b_u * b_u) as u64 >= (2 * b_u * b_u * b_u + 8 * b_u * b_u + 5 * b_u + 2) as u64;
    Ok(fam)
}

/// K_s v (K_{n-s-(s+1)(delta+1-s)} u (s+1) K_{delta+1-s}): minimum degree delta with a
/// join block of only s < delta vertices. Used to compare thresholds across s.
pub fn min_degree_family(n: usize, delta: usize, s: usize) -> Result<FamilyGraph> {
    if s < 1 || s > delta {
        return Err(Error::InvalidParameter(format!(
            "min degree family needs 1 <= s <= delta, got s = {s}, delta = {delta}"
        )));
    }
    let q = delta + 1 - s;
    let small_total = (s + 1) * q;
    let big = n
        .checked_sub(s + small_total)
        .filter(|&x| x >= q)
        .ok_or_else(|| {
            Error::InvalidParameter(format!(
                "min degree family needs n >= {}, got n = {n}",
                s + small_total + q
            ))
        })?;
    let mut parts = vec![q; s + 1];
    parts.insert(0, big);
    let spec = FamilySpec::new(s, parts)?;
    let mut fam = split_join(&spec)?;
    fam.meets_size_hypothesis = n >= (4 * delta + 2).max(delta * delta * delta + delta);
    debug_assert_eq!(fam.graph.min_degree(), delta);
    Ok(fam)
}

/// Structural test for membership in a split join family, valid at any size. For t >= 2
/// the universal vertices of the family are exactly its join block, so the test checks:
/// exactly s universal vertices, and removing them leaves cliques with the right sizes.
/// For t = 1 the family is complete.
pub fn matches_family(g: &Graph, spec: &FamilySpec) -> bool {
    if g.n() != spec.n() {
        return false;
    }
    if spec.t() == 1 {
        return g.is_complete();
    }
    let n = g.n();
    let universal: Vec<usize> = (0..n).filter(|&v| g.degree(v) == n - 1).collect();
    if universal.len() != spec.s {
        return false;
    }
    let removed = VertexSet::from_indices(universal);
    let comps = match g.components(removed) {
        Ok(c) => c,
        Err(_) => return false,
    };
    let mut sizes: Vec<usize> = comps.iter().map(|c| c.len()).collect();
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    if sizes != spec.parts {
        return false;
    }
    comps
        .iter()
        .all(|&c| g.induced(c).map(|h| h.is_complete()).unwrap_or(false))
}

// ===========================================================================
// Closed-form quotients
// ===========================================================================

/// The (t+1) x (t+1) A_alpha quotient of a split join with s >= 1, join block first:
///
///   row 0:   alpha n + (1 - alpha) s - 1, then (1 - alpha) n_j per part
///   row j:   (1 - alpha) s in column 0, alpha s + n_j - 1 on the diagonal, else 0
///
/// Entries are affine in alpha and assembled exactly from the rational alpha.
pub fn split_join_quotient<T: Real>(spec: &FamilySpec, alpha: Alpha) -> Result<QuotientMatrix<T>> {
    let s = spec.s;
    if s == 0 {
        return Err(Error::InvalidParameter(
            "split join quotient needs a join block; use threshold_rho for s = 0".into(),
        ));
    }
    let n = spec.n();
    let t = spec.t();
    let mut rows = vec![vec![T::zero(); t + 1]; t + 1];
    rows[0][0] = alpha.affine(n as i64 - s as i64, s as i64 - 1);
    for (j, &nj) in spec.parts.iter().enumerate() {
        rows[0][j + 1] = alpha.affine(-(nj as i64), nj as i64);
        rows[j + 1][0] = alpha.affine(-(s as i64), s as i64);
        rows[j + 1][j + 1] = alpha.affine(s as i64, nj as i64 - 1);
    }
    QuotientMatrix::from_rows(rows)
}

/// The 3 x 3 A_alpha quotient of the minimum degree family, blocks ordered
/// [big part, all small parts, join block]. With n1 the big part size and
/// q = delta + 1 - s the small part size:
///
///   [ n1 - 1 + alpha s,  0,                       (1 - alpha) s      ]
///   [ 0,                 (delta - s) + alpha s,   (1 - alpha) s      ]
///   [ (1 - alpha) n1,    (1 - alpha)(s+1) q,      alpha n + (1-alpha) s - 1 ]
///
/// The middle diagonal is alpha delta + (1 - alpha)(q - 1): a small part vertex sees its
/// q - 1 clique mates plus its degree-delta diagonal term. The merged small block is
/// equitable because distinct small cliques are pairwise non-adjacent.
pub fn min_degree_family_quotient<T: Real>(
    n: usize,
    delta: usize,
    s: usize,
    alpha: Alpha,
) -> Result<QuotientMatrix<T>> {
    let fam = min_degree_family(n, delta, s)?;
    let n1 = fam.spec.parts()[0] as i64;
    let q = (delta + 1 - s) as i64;
    let s_i = s as i64;
    let n_i = n as i64;
    let rows = vec![
        vec![
            alpha.affine(s_i, n1 - 1),
            T::zero(),
            alpha.affine(-s_i, s_i),
        ],
        vec![
            T::zero(),
            alpha.affine(s_i, delta as i64 - s_i),
            alpha.affine(-s_i, s_i),
        ],
        vec![
            alpha.affine(-n1, n1),
            alpha.affine(-((s_i + 1) * q), (s_i + 1) * q),
            alpha.affine(n_i - s_i, s_i - 1),
        ],
    ];
    QuotientMatrix::from_rows(rows)
}

/// Spectral radius of the split join, from the closed-form quotient. For s = 0 the graph
/// is a union of cliques and the radius is simply (largest part) - 1 plus the alpha
/// diagonal, which collapses to n_1 - 1 for every alpha.
pub fn threshold_rho<T: Real>(spec: &FamilySpec, alpha: Alpha) -> Result<T> {
    if spec.s == 0 {
        return Ok(T::from_int(spec.parts[0] as i64 - 1));
    }
    split_join_quotient::<T>(spec, alpha)?.largest_eigenvalue()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eigen::spectral_radius;
    use crate::invariants::{scattering_number, tau_toughness};
    use crate::matrix::quotient;
    use crate::rational::Rational;
    use crate::spectral::a_alpha;

    #[test]
    fn spec_parse_and_display() {
        let spec: FamilySpec = "s=2;parts=5,1,1,1".parse().unwrap();
        assert_eq!(spec.s(), 2);
        assert_eq!(spec.parts(), &[5, 1, 1, 1]);
        assert_eq!(spec.n(), 10);
        assert_eq!(spec.to_string(), "s=2;parts=5,1,1,1");
        // Parts get sorted.
        let spec: FamilySpec = "parts=1,5,1;s=0".parse().unwrap();
        assert_eq!(spec.parts(), &[5, 1, 1]);
        assert!("s=1".parse::<FamilySpec>().is_err());
        assert!("s=1;parts=0,2".parse::<FamilySpec>().is_err());
        assert!("s=1;parts=2;bogus=3".parse::<FamilySpec>().is_err());
        assert!(FamilySpec::new(60, vec![4, 4]).is_err());
    }

    #[test]
    fn split_join_shape() {
        // K_1 v (K_3 u 2 K_1): 6 vertices, 8 edges, min degree 1.
        let spec = FamilySpec::new(1, vec![3, 1, 1]).unwrap();
        let fam = split_join(&spec).unwrap();
        assert_eq!(fam.graph.n(), 6);
        assert_eq!(fam.graph.edge_count(), 8);
        assert_eq!(fam.graph.min_degree(), 1);
        assert_eq!(fam.blocks.len(), 4);
        assert_eq!(fam.blocks[0], VertexSet::singleton(0));
        assert_eq!(fam.blocks[1], VertexSet::from_indices([1, 2, 3]));
        assert!(fam.graph.is_connected());
        // The partition is equitable for A_alpha.
        let q = quotient(&a_alpha(&fam.graph, 0.3f64).unwrap(), &fam.partition()).unwrap();
        assert!(q.is_equitable());
    }

    #[test]
    fn quotient_closed_form_matches_averaging() {
        for (s, parts) in [(1usize, vec![3usize, 1, 1]), (2, vec![5, 1, 1, 1]), (3, vec![4, 2, 2])] {
            let spec = FamilySpec::new(s, parts).unwrap();
            let fam = split_join(&spec).unwrap();
            for alpha in [Alpha::ZERO, Alpha::new(1, 4).unwrap(), Alpha::HALF, Alpha::new(3, 4).unwrap()] {
                let averaged =
                    quotient(&a_alpha(&fam.graph, alpha.as_f64()).unwrap(), &fam.partition())
                        .unwrap();
                let closed = split_join_quotient::<f64>(&spec, alpha).unwrap();
                assert!(averaged.is_equitable());
                for i in 0..closed.k() {
                    for j in 0..closed.k() {
                        assert!(
                            (closed.get(i, j) - averaged.get(i, j)).abs() < 1e-12,
                            "entry ({i}, {j}) at alpha = {alpha}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn quotient_first_row_frozen_values() {
        // (s, parts, alpha) = (1, [3,1,1], 0): first row [0, 3, 1, 1].
        let spec = FamilySpec::new(1, vec![3, 1, 1]).unwrap();
        let q = split_join_quotient::<f64>(&spec, Alpha::ZERO).unwrap();
        assert_eq!(q.rows()[0], vec![0.0, 3.0, 1.0, 1.0]);
        // (2, [5,1,1,1], 1/2): corner entry alpha n + (1 - alpha) s - 1 = 5.
        let spec = FamilySpec::new(2, vec![5, 1, 1, 1]).unwrap();
        let q = split_join_quotient::<f64>(&spec, Alpha::HALF).unwrap();
        assert_eq!(q.get(0, 0), 5.0);
        // s = 0 is routed to the closed form.
        let spec = FamilySpec::new(0, vec![4, 2]).unwrap();
        assert!(split_join_quotient::<f64>(&spec, Alpha::HALF).is_err());
        assert_eq!(threshold_rho::<f64>(&spec, Alpha::HALF).unwrap(), 3.0);
    }

    #[test]
    fn threshold_matches_dense_radius() {
        let spec = FamilySpec::new(2, vec![5, 1, 1, 1]).unwrap();
        let fam = split_join(&spec).unwrap();
        for alpha in [Alpha::ZERO, Alpha::HALF, Alpha::new(3, 4).unwrap()] {
            let t: f64 = threshold_rho(&spec, alpha).unwrap();
            let dense = spectral_radius(&a_alpha(&fam.graph, alpha.as_f64()).unwrap(), 1e-12)
                .unwrap()
                .radius;
            assert!((t - dense).abs() < 1e-9, "alpha = {alpha}: {t} vs {dense}");
        }
    }

    #[test]
    fn extremal_constructors() {
        let fam = scattering_extremal(6, 1).unwrap();
        assert_eq!(fam.spec, FamilySpec::new(1, vec![3, 1, 1]).unwrap());
        assert!(fam.meets_size_hypothesis);
        assert_eq!(scattering_number(&fam.graph).unwrap(), Some(2));
        let fam = scattering_extremal(9, 2).unwrap();
        assert!(!fam.meets_size_hypothesis, "9 < 10 fails the size bound");
        assert!(scattering_extremal(5, 2).is_err());

        let fam = tau_integer_extremal(16, 3).unwrap();
        assert_eq!(fam.spec, FamilySpec::new(2, vec![13, 1]).unwrap());
        assert_eq!(
            tau_toughness(&fam.graph).unwrap(),
            Some(Rational::new(2, 1))
        );
        assert!(!fam.meets_size_hypothesis, "needs n >= 52");
        assert!(tau_integer_extremal(10, 1).is_err());

        let fam = tau_fractional_extremal(10, 2).unwrap();
        assert_eq!(fam.spec, FamilySpec::new(1, vec![6, 1, 1, 1]).unwrap());
        assert_eq!(
            tau_toughness(&fam.graph).unwrap(),
            Some(Rational::new(1, 3))
        );
        assert!(tau_fractional_extremal(4, 2).is_err());
    }

    #[test]
    fn min_degree_family_and_quotient() {
        // n = 10, delta = 2, s = 1: K_1 v (K_5 u 2 K_2).
        let fam = min_degree_family(10, 2, 1).unwrap();
        assert_eq!(fam.spec.parts(), &[5, 2, 2]);
        assert_eq!(fam.graph.min_degree(), 2);
        let q = min_degree_family_quotient::<f64>(10, 2, 1, Alpha::ZERO).unwrap();
        assert_eq!(
            q.rows(),
            vec![
                vec![4.0, 0.0, 1.0],
                vec![0.0, 1.0, 1.0],
                vec![5.0, 4.0, 0.0],
            ]
        );
        // Characteristic polynomial x^3 - 5 x^2 - 5 x + 21 and its largest root.
        assert_eq!(q.charpoly().unwrap(), vec![21.0, -5.0, -5.0, 1.0]);
        let rho = q.largest_eigenvalue().unwrap();
        let dense = spectral_radius(&a_alpha(&fam.graph, 0.0f64).unwrap(), 1e-12)
            .unwrap()
            .radius;
        assert!((rho - dense).abs() < 1e-9);
        // The merged-small-parts partition is genuinely equitable.
        let merged = Partition::new(
            10,
            vec![
                fam.blocks[1],
                fam.blocks[2].union(fam.blocks[3]),
                fam.blocks[0],
            ],
        )
        .unwrap();
        let averaged = quotient(&a_alpha(&fam.graph, 0.0f64).unwrap(), &merged).unwrap();
        assert!(averaged.is_equitable());
        assert_eq!(averaged.rows(), q.rows());
        assert!(min_degree_family(10, 2, 3).is_err());
    }

    #[test]
    fn family_membership_certificate() {
        let spec = FamilySpec::new(2, vec![5, 1, 1, 1]).unwrap();
        let fam = split_join(&spec).unwrap();
        assert!(matches_family(&fam.graph, &spec));
        // Remove one join edge: no longer a member.
        let mut g = fam.graph.clone();
        let mut adj = g.neighbors(0).mask();
        adj &= !(1u64 << 9);
        g.set_neighbors(0, adj);
        let mut adj9 = g.neighbors(9).mask();
        adj9 &= !1u64;
        g.set_neighbors(9, adj9);
        assert!(!matches_family(&g, &spec));
        // Complete graphs match the one-part spec.
        let kspec = FamilySpec::new(2, vec![4]).unwrap();
        assert!(matches_family(&Graph::complete(6).unwrap(), &kspec));
        assert!(!matches_family(&Graph::complete(7).unwrap(), &kspec));
        // The permuted family still matches (test is label-free).
        let perm: Vec<usize> = vec![9, 3, 5, 0, 7, 1, 8, 2, 6, 4];
        let h = fam.graph.permute(&perm).unwrap();
        assert!(matches_family(&h, &spec));
    }
}
