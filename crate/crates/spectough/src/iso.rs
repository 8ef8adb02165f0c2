//! Isomorphism testing and canonical labeling for small graphs.
//!
//! Exact mode handles n <= 12. Iterated colour refinement narrows the candidate
//! relabelings, then a backtracking search over colour-respecting orders finds the
//! lexicographically smallest upper-triangle bitstring. Candidates that are twins of an
//! already-explored sibling (swapping the two is an automorphism) are skipped, which keeps
//! cliques and join-of-cliques families cheap despite their huge automorphism groups.

use crate::error::{Error, Result};
use crate::graph::Graph;
use std::cmp::Ordering;

/// Largest vertex count for exact isomorphism and canonical labeling.
pub const EXACT_ISO_LIMIT: usize = 12;

/// Canonical label: vertex count plus the minimal column-major upper-triangle bitstring.
/// Labels are equal exactly when the graphs are isomorphic.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CanonicalLabel {
    n: u8,
    bits: u128,
}

/// Stable vertex colouring by iterated neighbour-colour refinement. Colours are dense
/// ranks of refinement histories, so corresponding vertices of isomorphic graphs get the
/// same colour.
pub fn stable_coloring(g: &Graph) -> Vec<u32> {
    let n = g.n();
    let mut color = vec![0u32; n];
    loop {
        let mut keys: Vec<(u32, Vec<u32>)> = Vec::with_capacity(n);
        for v in 0..n {
            let mut nb: Vec<u32> = g.neighbors(v).iter().map(|u| color[u]).collect();
            nb.sort_unstable();
            keys.push((color[v], nb));
        }
        let mut sorted: Vec<&(u32, Vec<u32>)> = keys.iter().collect();
        sorted.sort();
        sorted.dedup();
        let next: Vec<u32> = keys
            .iter()
            .map(|k| sorted.binary_search(&k).unwrap() as u32)
            .collect();
        if next == color {
            return color;
        }
        color = next;
    }
}

struct CanonSearch<'a> {
    g: &'a Graph,
    n: usize,
    cell_of_position: Vec<usize>,
    cells: Vec<Vec<usize>>,
    placed: Vec<usize>,
    used: u64,
    chunks: Vec<u64>,
    best: Option<Vec<u64>>,
}

impl CanonSearch<'_> {
    /// Adjacency bits of v against the already placed vertices, earliest placed in the
    /// most significant position, so numeric order on chunks is lexicographic bit order.
    fn chunk(&self, v: usize) -> u64 {
        let mut c = 0u64;
        for &u in &self.placed {
            c = c << 1 | self.g.has_edge(v, u) as u64;
        }
        c
    }

    fn dfs(&mut self) {
        let depth = self.placed.len();
        if depth == self.n {
            if self.best.as_ref().is_none_or(|b| self.chunks < *b) {
                self.best = Some(self.chunks.clone());
            }
            return;
        }
        let cell = self.cell_of_position[depth];
        let mut cands: Vec<(u64, usize)> = self.cells[cell]
            .iter()
            .copied()
            .filter(|&v| self.used >> v & 1 == 0)
            .map(|v| (self.chunk(v), v))
            .collect();
        cands.sort_unstable();
        let mut i = 0;
        while i < cands.len() {
            let chunk = cands[i].0;
            let mut reps: Vec<usize> = Vec::new();
            let mut j = i;
            while j < cands.len() && cands[j].0 == chunk {
                let v = cands[j].1;
                let twin = reps.iter().any(|&u| {
                    self.g.neighbors(u).mask() & !(1u64 << v)
                        == self.g.neighbors(v).mask() & !(1u64 << u)
                });
                if !twin {
                    reps.push(v);
                }
                j += 1;
            }
            if let Some(best) = &self.best {
                match self.chunks[..].cmp(&best[..depth]) {
                    Ordering::Greater => return,
                    Ordering::Equal if chunk > best[depth] => return,
                    _ => {}
                }
            }
            for v in reps {
                self.placed.push(v);
                self.used |= 1u64 << v;
                self.chunks.push(chunk);
                self.dfs();
                self.chunks.pop();
                self.used &= !(1u64 << v);
                self.placed.pop();
            }
            i = j;
        }
    }
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalLabel> {
    let n = g.n();
    if n > EXACT_ISO_LIMIT {
        return Err(Error::TooLargeForExact {
            n,
            limit: EXACT_ISO_LIMIT,
        });
    }
    let color = stable_coloring(g);
    let ncells = (*color.iter().max().unwrap() + 1) as usize;
    let mut cells: Vec<Vec<usize>> = vec![Vec::new(); ncells];
    for (v, &c) in color.iter().enumerate() {
        cells[c as usize].push(v);
    }
    let mut cell_of_position = Vec::with_capacity(n);
    for (i, cell) in cells.iter().enumerate() {
        cell_of_position.extend(std::iter::repeat_n(i, cell.len()));
    }
    let mut search = CanonSearch {
        g,
        n,
        cell_of_position,
        cells,
        placed: Vec::new(),
        used: 0,
        chunks: Vec::new(),
        best: None,
    };
    search.dfs();
    let chunks = search.best.expect("canonical search visits at least one leaf");
    let mut bits = 0u128;
    for (j, chunk) in chunks.iter().enumerate() {
        for i in 0..j {
            bits = bits << 1 | (chunk >> (j - 1 - i) & 1) as u128;
        }
    }
    Ok(CanonicalLabel { n: n as u8, bits })
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    for g in [a, b] {
        if g.n() > EXACT_ISO_LIMIT {
            return Err(Error::TooLargeForExact {
                n: g.n(),
                limit: EXACT_ISO_LIMIT,
            });
        }
    }
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return Ok(false);
    }
    let mut deg_a: Vec<usize> = (0..a.n()).map(|v| a.degree(v)).collect();
    let mut deg_b: Vec<usize> = (0..b.n()).map(|v| b.degree(v)).collect();
    deg_a.sort_unstable();
    deg_b.sort_unstable();
    if deg_a != deg_b {
        return Ok(false);
    }
    Ok(canonical_form(a)? == canonical_form(b)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn path_and_star_with_equal_degcounts_differ() {
        // P4 and K_{1,3} share n = 4, m = 3 but have different degree sequences.
        let p4 = Graph::path(4).unwrap();
        let star = Graph::star(4).unwrap();
        assert!(!is_isomorphic(&p4, &star).unwrap());
        assert!(is_isomorphic(&p4, &p4.permute(&[2, 0, 3, 1]).unwrap()).unwrap());
    }

    #[test]
    fn same_degree_sequence_non_isomorphic_pair() {
        // C6 versus two triangles: both 2-regular on 6 vertices.
        let c6 = Graph::cycle(6).unwrap();
        let k3 = Graph::complete(3).unwrap();
        let two_k3 = Graph::union(&k3, &k3).unwrap();
        assert!(!is_isomorphic(&c6, &two_k3).unwrap());
    }

    #[test]
    fn large_automorphism_groups_are_cheap() {
        // Twin skipping collapses the search for cliques and empty graphs.
        let k12 = Graph::complete(12).unwrap();
        let e12 = Graph::new(12).unwrap();
        assert!(is_isomorphic(&k12, &k12.permute(&[3, 1, 4, 0, 5, 9, 2, 6, 8, 7, 11, 10]).unwrap()).unwrap());
        assert!(!is_isomorphic(&k12, &e12).unwrap());
        assert!(canonical_form(&Graph::cycle(12).unwrap()).is_ok());
    }

    #[test]
    fn size_limit_enforced() {
        let g = Graph::complete(13).unwrap();
        assert!(matches!(
            canonical_form(&g),
            Err(Error::TooLargeForExact { n: 13, .. })
        ));
        assert!(is_isomorphic(&g, &g).is_err());
    }

    #[test]
    fn coloring_separates_degree_classes() {
        let star = Graph::star(5).unwrap();
        let color = stable_coloring(&star);
        assert_eq!(color.iter().filter(|&&c| c == color[0]).count(), 1);
        assert!(color[1..].iter().all(|&c| c == color[1]));
    }

    proptest! {
        // Canonical labels must be invariant under relabeling.
        #[test]
        fn canonical_form_relabeling_invariant(
            edges in proptest::collection::vec((0usize..6, 0usize..6), 0..15),
            seed in 0u64..1000,
        ) {
            let mut g = Graph::new(6).unwrap();
            for (u, v) in edges {
                if u != v {
                    g.add_edge(u, v).unwrap();
                }
            }
            // Cheap seeded shuffle for a permutation.
            let mut perm: Vec<usize> = (0..6).collect();
            let mut state = seed.wrapping_mul(6364136223846793005).wrapping_add(1);
            for i in (1..6).rev() {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                let j = (state >> 33) as usize % (i + 1);
                perm.swap(i, j);
            }
            let h = g.permute(&perm).unwrap();
            prop_assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
        }
    }
}
