//! Exact scattering number, toughness and tau-toughness via twin-class cut profiles.
//!
//! Brute force over all 2^n vertex subsets dies long before n = 40, but the graphs this
//! crate cares about are stuffed with twins: vertices u, v whose swap is an automorphism
//! (N(u) minus v equals N(v) minus u, covering both adjacent and non-adjacent twins).
//! Twin transpositions are automorphisms, and the transpositions inside one twin class
//! form a connected graph on it, so they generate the full symmetric group on the class.
//! Any cut set S can therefore be pushed by an automorphism onto the canonical set that
//! takes the lowest-index vertices of each class, and both |S| and the component count of
//! G - S survive the push. It suffices to scan one representative per per-class removal
//! profile: prod (size_i + 1) configurations instead of 2^n.
//!
//! A clique join family on 40 vertices has three or four classes; its scan is a few
//! hundred profiles. A twin-free graph degrades to the full 2^n, which the profile budget
//! cap turns into a clean error instead of a hang.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::rational::Rational;
use serde::Serialize;
use std::collections::BTreeMap;

/// Budget for the twin-class profile space. Scans beyond this are refused.
pub const PROFILE_LIMIT: u128 = 1 << 24;

/// Twin classes (transitive closure of the pairwise twin relation), each given as a
/// vertex set, ordered by their lowest member.
pub fn twin_classes(g: &Graph) -> Vec<VertexSet> {
    let n = g.n();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, mut v: usize) -> usize {
        while parent[v] != v {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        v
    }
    for u in 0..n {
        for v in u + 1..n {
            let nu = g.neighbors(u).mask() & !(1u64 << v);
            let nv = g.neighbors(v).mask() & !(1u64 << u);
            if nu == nv {
                let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
                if ru != rv {
                    parent[rv.max(ru)] = ru.min(rv);
                }
            }
        }
    }
    let mut by_root: BTreeMap<usize, VertexSet> = BTreeMap::new();
    for v in 0..n {
        let r = find(&mut parent, v);
        by_root.entry(r).or_insert(VertexSet::EMPTY).insert(v);
    }
    by_root.into_values().collect()
}

// ===========================================================================
// Cut profile scan
// ===========================================================================

#[derive(Default)]
struct CutScan {
    /// max of c(G - S) - |S| over separating S.
    scattering: Option<(i64, VertexSet)>,
    /// min of |S| / c(G - S) over separating S with |S| >= 1.
    toughness: Option<(Rational, VertexSet)>,
    /// min of |S| / (c(G - S) - 1) over separating S with |S| >= 1.
    tau: Option<(Rational, VertexSet)>,
}

impl CutScan {
    fn offer(&mut self, size: usize, comps: usize, mask: u64) {
        debug_assert!(comps >= 2);
        let witness = VertexSet::from_mask(mask);
        let sc = comps as i64 - size as i64;
        match self.scattering {
            Some((best, w)) if sc < best || (sc == best && w.mask() <= mask) => {}
            _ => self.scattering = Some((sc, witness)),
        }
        if size >= 1 {
            let t = Rational::new(size as i64, comps as i64);
            match self.toughness {
                Some((best, w)) if t > best || (t == best && w.mask() <= mask) => {}
                _ => self.toughness = Some((t, witness)),
            }
            let tau = Rational::new(size as i64, comps as i64 - 1);
            match self.tau {
                Some((best, w)) if tau > best || (tau == best && w.mask() <= mask) => {}
                _ => self.tau = Some((tau, witness)),
            }
        }
    }
}

/// Scan every twin-class removal profile once.
fn scan_cuts(g: &Graph) -> Result<CutScan> {
    let classes = twin_classes(g);
    let sizes: Vec<usize> = classes.iter().map(|c| c.len()).collect();
    let space: u128 = sizes.iter().map(|&s| s as u128 + 1).product();
    if space > PROFILE_LIMIT {
        return Err(Error::ProfileSpace {
            profiles: space,
            limit: PROFILE_LIMIT,
        });
    }
    // prefix[i][k]: the lowest k vertices of class i, as a mask.
    let prefix: Vec<Vec<u64>> = classes
        .iter()
        .map(|c| {
            let mut acc = vec![0u64];
            let mut m = 0u64;
            for u in c.iter() {
                m |= 1u64 << u;
                acc.push(m);
            }
            acc
        })
        .collect();
    let mut counts = vec![0usize; sizes.len()];
    let mut scan = CutScan::default();
    loop {
        let total: usize = counts.iter().sum();
        if total < g.n() {
            let mask = counts
                .iter()
                .zip(&prefix)
                .fold(0u64, |m, (&k, p)| m | p[k]);
            let comps = g
                .component_count(VertexSet::from_mask(mask))
                .expect("profile never removes every vertex");
            if comps >= 2 {
                scan.offer(total, comps, mask);
            }
        }
        let mut i = 0;
        loop {
            if i == counts.len() {
                return Ok(scan);
            }
            counts[i] += 1;
            if counts[i] <= sizes[i] {
                break;
            }
            counts[i] = 0;
            i += 1;
        }
    }
}

// ===========================================================================
// Public invariants
// ===========================================================================

/// Scattering number s(G) = max { c(G - S) - |S| : c(G - S) >= 2 }, or None when no
/// vertex set separates G (complete graphs). Defined for disconnected graphs too, where
/// S may be empty.
pub fn scattering_number(g: &Graph) -> Result<Option<i64>> {
    Ok(scan_cuts(g)?.scattering.map(|(s, _)| s))
}

/// Toughness t(G) = min { |S| / c(G - S) : c(G - S) >= 2 } for connected G, infinite on
/// complete graphs.
pub fn toughness(g: &Graph) -> Result<Rational> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(scan_cuts(g)?
        .toughness
        .map_or(Rational::Infinity, |(t, _)| t))
}

/// tau-toughness tau(G) = min { |S| / (c(G - S) - 1) : c(G - S) >= 2 } for connected G;
/// None on complete graphs, where no S separates.
pub fn tau_toughness(g: &Graph) -> Result<Option<Rational>> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(scan_cuts(g)?.tau.map(|(t, _)| t))
}

/// t(G) >= t, with complete graphs vacuously t-tough for every t.
pub fn is_t_tough(g: &Graph, t: Rational) -> Result<bool> {
    Ok(toughness(g)? >= t)
}

/// tau(G) >= t, with complete graphs vacuously tau-tough for every t.
pub fn is_tau_tough(g: &Graph, t: Rational) -> Result<bool> {
    Ok(tau_toughness(g)?.is_none_or(|tau| tau >= t))
}

/// All three invariants of a connected graph, with optimizing vertex sets.
#[derive(Clone, Debug, Serialize)]
pub struct InvariantReport {
    pub n: usize,
    pub graph6: String,
    pub scattering: Option<i64>,
    pub toughness: Rational,
    pub tau: Option<Rational>,
    pub witnesses: BTreeMap<String, VertexSet>,
}

pub fn invariant_report(g: &Graph) -> Result<InvariantReport> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let scan = scan_cuts(g)?;
    let mut witnesses = BTreeMap::new();
    if let Some((_, w)) = scan.scattering {
        witnesses.insert("scattering".to_string(), w);
    }
    if let Some((_, w)) = scan.toughness {
        witnesses.insert("toughness".to_string(), w);
    }
    if let Some((_, w)) = scan.tau {
        witnesses.insert("tau".to_string(), w);
    }
    Ok(InvariantReport {
        n: g.n(),
        graph6: crate::graph6::to_graph6(g),
        scattering: scan.scattering.map(|(s, _)| s),
        toughness: scan.toughness.map_or(Rational::Infinity, |(t, _)| t),
        tau: scan.tau.map(|(t, _)| t),
        witnesses,
    })
}
