//! graph6 codec and a plain edge-list text format.
//!
//! graph6 packs the upper triangle of the adjacency matrix in column-major order
//! ((0,1), (0,2), (1,2), (0,3), ...) into 6-bit groups, each printed as its value plus 63.
//! Graphs on up to 62 vertices use a single header byte n+63; the '~'-prefixed 18-bit
//! header extends the range to cover this crate's 64-vertex cap.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(63 + n as u8);
    } else {
        out.push(b'~');
        out.push(63 + ((n >> 12) & 63) as u8);
        out.push(63 + ((n >> 6) & 63) as u8);
        out.push(63 + (n & 63) as u8);
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | g.has_edge(u, v) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).unwrap()
}

pub fn from_graph6(s: &str) -> Result<Graph> {
    let bytes = s.trim().as_bytes();
    if bytes.is_empty() {
        return Err(Error::Malformed("empty graph6 string".into()));
    }
    for &b in bytes {
        if !(63..=126).contains(&b) {
            return Err(Error::Malformed(format!(
                "graph6 byte {b:#04x} outside printable range 63..=126"
            )));
        }
    }
    let (n, mut pos) = if bytes[0] == b'~' {
        if bytes.len() < 4 {
            return Err(Error::Malformed("truncated extended graph6 header".into()));
        }
        let n = ((bytes[1] - 63) as usize) << 12
            | ((bytes[2] - 63) as usize) << 6
            | (bytes[3] - 63) as usize;
        (n, 4)
    } else {
        ((bytes[0] - 63) as usize, 1)
    };
    if n == 0 || n > MAX_VERTICES {
        return Err(Error::VertexCount(n));
    }
    let nbits = n * (n - 1) / 2;
    let nchars = nbits.div_ceil(6);
    if bytes.len() != pos + nchars {
        return Err(Error::Malformed(format!(
            "graph6 body has {} chars, expected {nchars} for n = {n}",
            bytes.len() - pos
        )));
    }
    let mut g = Graph::new(n)?;
    let mut acc = 0u8;
    let mut used = 6;
    for v in 1..n {
        for u in 0..v {
            if used == 6 {
                acc = bytes[pos] - 63;
                pos += 1;
                used = 0;
            }
            if acc >> (5 - used) & 1 == 1 {
                g.add_edge(u, v)?;
            }
            used += 1;
        }
    }
    // Padding bits in the final char must be zero for a canonical encoding.
    if used < 6 && acc & ((1 << (6 - used)) - 1) != 0 {
        return Err(Error::Malformed("nonzero padding bits in graph6 body".into()));
    }
    Ok(g)
}

/// Writes "n" on the first line, then one "u v" pair per line, 0-indexed, u < v.
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn from_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
    let n: usize = lines
        .next()
        .ok_or_else(|| Error::Malformed("empty edge list".into()))?
        .parse()
        .map_err(|_| Error::Malformed("first line of an edge list must be the vertex count".into()))?;
    let mut g = Graph::new(n)?;
    for line in lines {
        let mut it = line.split_whitespace();
        let (u, v) = match (it.next(), it.next(), it.next()) {
            (Some(u), Some(v), None) => (u, v),
            _ => return Err(Error::Malformed(format!("bad edge line {line:?}"))),
        };
        let u: usize = u
            .parse()
            .map_err(|_| Error::Malformed(format!("bad vertex {u:?}")))?;
        let v: usize = v
            .parse()
            .map_err(|_| Error::Malformed(format!("bad vertex {v:?}")))?;
        g.add_edge(u, v)?;
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::VertexSet;

    #[test]
    fn k3_encodes_as_bw() {
        assert_eq!(to_graph6(&Graph::complete(3).unwrap()), "Bw");
        assert_eq!(from_graph6("Bw").unwrap(), Graph::complete(3).unwrap());
    }

    #[test]
    fn known_five_vertex_string_is_a_star() {
        // "D?{": no edges among 0..4 except all of (0,4), (1,4), (2,4), (3,4).
        let g = from_graph6("D?{").unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.edge_count(), 4);
        assert_eq!(g.degree(4), 4);
        assert_eq!(g.min_degree(), 1);
        assert_eq!(to_graph6(&g), "D?{");
    }

    #[test]
    fn rejects_malformed_strings() {
        assert!(from_graph6("").is_err());
        assert!(from_graph6("B").is_err()); // truncated body
        assert!(from_graph6("Bww").is_err()); // trailing garbage
        assert!(from_graph6("B\x1f").is_err()); // byte below 63
        // K2 with a nonzero padding bit: header 'A', body must be '_' (bit5 only) or '?'.
        assert!(from_graph6("A@").is_err());
    }

    #[test]
    fn sixty_four_vertex_round_trip() {
        let g = Graph::complete(64).unwrap();
        let s = to_graph6(&g);
        assert!(s.starts_with('~'));
        assert_eq!(from_graph6(&s).unwrap(), g);
    }

    #[test]
    fn edge_list_round_trip() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)]).unwrap();
        let text = to_edge_list(&g);
        assert_eq!(from_edge_list(&text).unwrap(), g);
        assert!(from_edge_list("3\n0 3\n").is_err());
        assert!(from_edge_list("3\n0 0\n").is_err());
        assert!(from_edge_list("x\n").is_err());
        assert!(from_edge_list("3\n0 1 2\n").is_err());
    }

    #[test]
    fn path_removal_witness_sanity() {
        // Kept here because the graph6 example strings double as fixtures elsewhere:
        // removing the centre of the star "D?{" leaves 4 isolated vertices.
        let g = from_graph6("D?{").unwrap();
        assert_eq!(g.component_count(VertexSet::singleton(4)).unwrap(), 4);
    }
}
