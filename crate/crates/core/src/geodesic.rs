//! Edge triples on a common shortest path.
//!
//! Three edges lie on one geodesic iff they can be ordered and oriented as
//! `(a₁,b₁), (a₂,b₂), (a₃,b₃)` with
//! `d(a₁,b₃) = 3 + d(b₁,a₂) + d(b₂,a₃)`: the walk that follows the three
//! edges joined by shortest connectors has length `d(a₁,b₃)`, and a walk
//! that short is a shortest path.

use std::collections::{BTreeSet, HashSet};

use serde::Serialize;

use crate::distance::{apsp, bfs, DistanceMatrix, INFINITY};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, Vertex};

type Edge = (Vertex, Vertex);

const PERMUTATIONS: [[usize; 3]; 6] = [
    [0, 1, 2],
    [0, 2, 1],
    [1, 0, 2],
    [1, 2, 0],
    [2, 0, 1],
    [2, 1, 0],
];

#[inline]
fn oriented(e: Edge, flip: bool) -> Edge {
    if flip {
        (e.1, e.0)
    } else {
        e
    }
}

/// Core test; expects three distinct edges of the graph behind `dist`.
pub(crate) fn triple_on_geodesic(dist: &DistanceMatrix, edges: [Edge; 3]) -> bool {
    for perm in PERMUTATIONS {
        for mask in 0..8u8 {
            let (a1, b1) = oriented(edges[perm[0]], mask & 1 != 0);
            let (a2, b2) = oriented(edges[perm[1]], mask & 2 != 0);
            let (a3, b3) = oriented(edges[perm[2]], mask & 4 != 0);
            let span = dist.raw(a1, b3);
            let gap1 = dist.raw(b1, a2);
            let gap2 = dist.raw(b2, a3);
            if span == INFINITY || gap1 == INFINITY || gap2 == INFINITY {
                continue;
            }
            if span == 3 + gap1 + gap2 {
                return true;
            }
        }
    }
    false
}

/// Whether some shortest path contains all three edges.
pub fn on_common_geodesic(e1: Edge, e2: Edge, e3: Edge, dist: &DistanceMatrix) -> Result<bool> {
    let norm = |(u, v): Edge| (u.min(v), u.max(v));
    let (x, y, z) = (norm(e1), norm(e2), norm(e3));
    if x == y || y == z || x == z {
        return Err(Error::NonDistinctEdges);
    }
    Ok(triple_on_geodesic(dist, [x, y, z]))
}

/// Three distinct edge ids in increasing order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ConflictTriple([EdgeId; 3]);

impl ConflictTriple {
    pub fn new(a: EdgeId, b: EdgeId, c: EdgeId) -> Result<Self> {
        let mut ids = [a, b, c];
        ids.sort_unstable();
        if ids[0] == ids[1] || ids[1] == ids[2] {
            return Err(Error::NonDistinctEdges);
        }
        Ok(ConflictTriple(ids))
    }

    pub fn ids(&self) -> [EdgeId; 3] {
        self.0
    }
}

/// All conflict triples of a graph with a per-pair index of third edges.
#[derive(Clone, Debug)]
pub struct ConflictSet {
    m: usize,
    triples: Vec<ConflictTriple>,
    members: HashSet<ConflictTriple>,
    thirds: Vec<Vec<EdgeId>>,
    degree: Vec<usize>,
}

impl ConflictSet {
    fn from_triples(m: usize, triples: Vec<ConflictTriple>) -> Self {
        let mut thirds = vec![Vec::new(); m * m];
        let mut degree = vec![0; m];
        for t in &triples {
            let [a, b, c] = t.0;
            for (p, q, r) in [(a, b, c), (a, c, b), (b, c, a)] {
                thirds[p * m + q].push(r);
                thirds[q * m + p].push(r);
            }
            degree[a] += 1;
            degree[b] += 1;
            degree[c] += 1;
        }
        let members = triples.iter().copied().collect();
        ConflictSet {
            m,
            triples,
            members,
            thirds,
            degree,
        }
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    pub fn len(&self) -> usize {
        self.triples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triples.is_empty()
    }

    /// Triples in lexicographic order.
    pub fn triples(&self) -> &[ConflictTriple] {
        &self.triples
    }

    pub fn contains(&self, a: EdgeId, b: EdgeId, c: EdgeId) -> bool {
        ConflictTriple::new(a, b, c).is_ok_and(|t| self.members.contains(&t))
    }

    /// Edges `r` such that `{p, q, r}` is a conflict triple, ascending.
    pub fn thirds(&self, p: EdgeId, q: EdgeId) -> &[EdgeId] {
        &self.thirds[p * self.m + q]
    }

    /// Number of triples containing `e`.
    pub fn conflict_degree(&self, e: EdgeId) -> usize {
        self.degree[e]
    }

    /// True when no triple lies inside `edges`.
    pub fn is_free(&self, edges: &[EdgeId]) -> bool {
        for (i, &p) in edges.iter().enumerate() {
            for &q in &edges[i + 1..] {
                if self.thirds(p, q).iter().any(|r| edges.contains(r)) {
                    return false;
                }
            }
        }
        true
    }
}

/// Every conflict triple of a connected graph.
pub fn build_conflicts(graph: &Graph) -> Result<ConflictSet> {
    graph.require_connected()?;
    Ok(conflicts_with(graph, &apsp(graph)))
}

pub(crate) fn conflicts_with(graph: &Graph, dist: &DistanceMatrix) -> ConflictSet {
    let m = graph.edge_count();
    let edges = graph.edges();
    let mut triples = Vec::new();
    for a in 0..m {
        for b in a + 1..m {
            for c in b + 1..m {
                if triple_on_geodesic(dist, [edges[a], edges[b], edges[c]]) {
                    triples.push(ConflictTriple([a, b, c]));
                }
            }
        }
    }
    ConflictSet::from_triples(m, triples)
}

/// Whether no three edges of `edges` share a shortest path.
pub fn is_general_position(graph: &Graph, edges: &[EdgeId]) -> Result<bool> {
    if let Some(&bad) = edges.iter().find(|&&e| e >= graph.edge_count()) {
        return Err(Error::UnknownEdge(bad));
    }
    let set: Vec<EdgeId> = edges
        .iter()
        .copied()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    if set.len() < 3 {
        return Ok(true);
    }
    let dist = apsp(graph);
    let e = |id: EdgeId| graph.edge(id);
    for i in 0..set.len() {
        for j in i + 1..set.len() {
            for k in j + 1..set.len() {
                if triple_on_geodesic(&dist, [e(set[i]), e(set[j]), e(set[k])]) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// All shortest `u,v`-paths as vertex sequences from `u` to `v`.
///
/// Exhaustive; meant for test-sized graphs.
pub fn enumerate_geodesics(graph: &Graph, u: Vertex, v: Vertex) -> Result<Vec<Vec<Vertex>>> {
    let n = graph.vertex_count();
    for w in [u, v] {
        if w >= n {
            return Err(Error::VertexOutOfRange { vertex: w, n });
        }
    }
    let from_u = bfs(graph, u);
    if from_u[v] == INFINITY {
        return Err(Error::Unreachable(u, v));
    }
    let mut out = Vec::new();
    let mut trail = vec![v];
    walk_back(graph, &from_u, &mut trail, &mut out);
    Ok(out)
}

fn walk_back(graph: &Graph, from_u: &[u32], trail: &mut Vec<Vertex>, out: &mut Vec<Vec<Vertex>>) {
    let cur = *trail.last().expect("non-empty");
    if from_u[cur] == 0 {
        out.push(trail.iter().rev().copied().collect());
        return;
    }
    for &w in graph.neighbors(cur) {
        if from_u[w] + 1 == from_u[cur] {
            trail.push(w);
            walk_back(graph, from_u, trail, out);
            trail.pop();
        }
    }
}

/// Conflict triples obtained by listing every geodesic of the graph and
/// taking all triples of its edges. Independent of the distance criterion.
pub fn conflicts_by_enumeration(graph: &Graph) -> Vec<[EdgeId; 3]> {
    let mut found = BTreeSet::new();
    for u in graph.vertices() {
        for v in u + 1..graph.vertex_count() {
            let Ok(paths) = enumerate_geodesics(graph, u, v) else {
                continue;
            };
            for path in paths.iter().filter(|p| p.len() >= 4) {
                let ids: Vec<EdgeId> = path
                    .windows(2)
                    .map(|w| graph.edge_id(w[0], w[1]).expect("path edge"))
                    .collect();
                for i in 0..ids.len() {
                    for j in i + 1..ids.len() {
                        for k in j + 1..ids.len() {
                            let mut t = [ids[i], ids[j], ids[k]];
                            t.sort_unstable();
                            found.insert(t);
                        }
                    }
                }
            }
        }
    }
    found.into_iter().collect()
}
