//! Exhaustive and randomized generation of small connected graphs.
//!
//! Enumeration walks every edge subset of K_n (n <= 7, so at most 2^21 masks), keeps the
//! connected ones and deduplicates by canonical form. Brute force over edge masks was
//! chosen over orderly generation for auditability; at this scale it finishes in seconds.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::iso::{canonical_form, CanonicalLabel};
use rand::Rng;
use std::collections::HashSet;

/// Largest vertex count for exhaustive enumeration (2^21 edge subsets).
pub const ENUMERATION_LIMIT: usize = 7;

/// Known counts of connected graphs up to isomorphism for n = 1..=7.
/// Used as a self-check by tests and the audit machinery.
pub const CONNECTED_CLASS_COUNTS: [usize; 7] = [1, 1, 2, 6, 21, 112, 853];

/// Iterator over one representative per isomorphism class of connected n-vertex
/// graphs, in first-encountered edge-mask order.
pub struct ConnectedGraphs {
    n: usize,
    pairs: Vec<(usize, usize)>,
    mask: u64,
    end: u64,
    seen: HashSet<CanonicalLabel>,
}

pub fn enumerate_connected(n: usize) -> Result<ConnectedGraphs> {
    if n == 0 || n > ENUMERATION_LIMIT {
        return Err(Error::EnumerationLimit {
            n,
            limit: ENUMERATION_LIMIT,
        });
    }
    let mut pairs = Vec::with_capacity(n * (n - 1) / 2);
    for v in 1..n {
        for u in 0..v {
            pairs.push((u, v));
        }
    }
    Ok(ConnectedGraphs {
        n,
        mask: 0,
        end: 1u64 << pairs.len(),
        pairs,
        seen: HashSet::new(),
    })
}

impl Iterator for ConnectedGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        while self.mask < self.end {
            let mut m = self.mask;
            self.mask += 1;
            let mut g = Graph::new(self.n).unwrap();
            while m != 0 {
                let k = m.trailing_zeros() as usize;
                m &= m - 1;
                let (u, v) = self.pairs[k];
                g.add_edge(u, v).unwrap();
            }
            if !g.is_connected() {
                continue;
            }
            let label = canonical_form(&g).expect("enumeration limit is below the exact-iso limit");
            if self.seen.insert(label) {
                return Some(g);
            }
        }
        None
    }
}

// ===========================================================================
// Random generation
// ===========================================================================

/// G(n, p) conditioned on connectivity, by rejection.
pub fn random_connected<R: Rng>(n: usize, p: f64, rng: &mut R) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParameter(format!(
            "edge probability {p} outside [0, 1]"
        )));
    }
    const ATTEMPTS: usize = 100_000;
    for _ in 0..ATTEMPTS {
        let g = sample_gnp(n, p, rng)?;
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(Error::GenerationFailed(ATTEMPTS))
}

/// G(n, p) conditioned on connectivity and minimum degree exactly delta, by rejection.
/// The edge probability is pinned near (delta + 0.8) / (n - 1) so the conditioning event
/// is not vanishingly rare.
pub fn random_connected_min_degree<R: Rng>(n: usize, delta: usize, rng: &mut R) -> Result<Graph> {
    if delta >= n {
        return Err(Error::InvalidParameter(format!(
            "minimum degree {delta} impossible on {n} vertices"
        )));
    }
    if n == 1 {
        return Graph::new(1);
    }
    let p = ((delta as f64 + 0.8) / (n as f64 - 1.0)).clamp(0.05, 0.95);
    const ATTEMPTS: usize = 2_000_000;
    for _ in 0..ATTEMPTS {
        let g = sample_gnp(n, p, rng)?;
        if g.min_degree() == delta && g.is_connected() {
            return Ok(g);
        }
    }
    Err(Error::GenerationFailed(ATTEMPTS))
}

fn sample_gnp<R: Rng>(n: usize, p: f64, rng: &mut R) -> Result<Graph> {
    let mut g = Graph::new(n)?;
    for v in 1..n {
        for u in 0..v {
            if rng.gen_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    Ok(g)
}
