//! Exhaustive and sampled families of small connected graphs.

use crate::error::{Error, Result};
use crate::generate::SeededRng;
use crate::graph::{Graph, Vertex};

/// Largest order for exhaustive enumeration (2^21 edge masks at n = 7).
pub const MAX_ENUMERATE: usize = 7;

fn pairs(n: usize) -> Vec<(Vertex, Vertex)> {
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect()
}

fn connected_mask(n: usize, pairs: &[(Vertex, Vertex)], mask: u64) -> bool {
    let mut adj = vec![0u64; n];
    for (i, &(u, v)) in pairs.iter().enumerate() {
        if mask >> i & 1 == 1 {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
    }
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let (mut seen, mut frontier) = (1u64, 1u64);
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let fresh = adj[v] & !seen;
        seen |= fresh;
        frontier |= fresh;
    }
    seen == full
}

fn from_mask(n: usize, pairs: &[(Vertex, Vertex)], mask: u64) -> Graph {
    let edges = pairs
        .iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, &p)| p);
    Graph::new(n, edges).expect("pairs are distinct")
}

/// Every connected graph on the vertex set `0..n`, labeled, in increasing
/// order of the edge mask over lexicographically ordered vertex pairs.
pub fn enumerate_connected(n: usize) -> Result<Vec<Graph>> {
    if n == 0 || n > MAX_ENUMERATE {
        return Err(Error::BadParameters(format!(
            "enumeration needs 1 ≤ n ≤ {MAX_ENUMERATE}, got {n}"
        )));
    }
    let pairs = pairs(n);
    Ok((0..1u64 << pairs.len())
        .filter(|&mask| connected_mask(n, &pairs, mask))
        .map(|mask| from_mask(n, &pairs, mask))
        .collect())
}

/// `count` labeled graphs drawn uniformly from the connected graphs on
/// `0..n`: each pair is an edge with probability 1/2 and disconnected draws
/// are rejected.
pub fn sample_connected(n: usize, count: usize, seed: u64) -> Result<Vec<Graph>> {
    if n == 0 || n > 11 {
        return Err(Error::BadParameters(format!(
            "sampling needs 1 ≤ n ≤ 11, got {n}"
        )));
    }
    let pairs = pairs(n);
    let mut rng = SeededRng::new(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let mask = if pairs.is_empty() {
            0
        } else {
            rng.next_u64() & ((1u64 << pairs.len()) - 1)
        };
        if connected_mask(n, &pairs, mask) {
            out.push(from_mask(n, &pairs, mask));
        }
    }
    Ok(out)
}
