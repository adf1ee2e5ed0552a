//! Simple undirected graphs with stable edge identifiers.

use std::collections::VecDeque;

use crate::error::{Error, Result};

pub type Vertex = usize;
pub type EdgeId = usize;

/// Largest supported order. Neighborhoods are kept as `u64` bit masks and
/// graph6 codes use the single-byte size field.
pub const MAX_VERTICES: usize = 62;

const NO_EDGE: u32 = u32::MAX;

/// A simple undirected graph on vertices `0..n`.
///
/// Edges are stored as `(u, v)` with `u < v`; edge ids are positions in the
/// edge list and never change after construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    adj: Vec<Vec<Vertex>>,
    masks: Vec<u64>,
    ids: Vec<u32>,
}

impl Graph {
    /// Builds a graph, rejecting loops, duplicate edges and bad endpoints.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                n,
                max: MAX_VERTICES,
            });
        }
        let mut g = Graph {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
            masks: vec![0; n],
            ids: vec![NO_EDGE; n * n],
        };
        for (u, v) in edges {
            g.push_edge(u, v)?;
        }
        for list in &mut g.adj {
            list.sort_unstable();
        }
        Ok(g)
    }

    /// Graph with no edges.
    pub fn empty(n: usize) -> Result<Self> {
        Graph::new(n, std::iter::empty())
    }

    fn push_edge(&mut self, u: Vertex, v: Vertex) -> Result<()> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::VertexOutOfRange {
                    vertex: w,
                    n: self.n,
                });
            }
        }
        if u == v {
            return Err(Error::Loop(u));
        }
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        if self.ids[a * self.n + b] != NO_EDGE {
            return Err(Error::DuplicateEdge(a, b));
        }
        let id = self.edges.len() as u32;
        self.ids[a * self.n + b] = id;
        self.ids[b * self.n + a] = id;
        self.edges.push((a, b));
        self.adj[a].push(b);
        self.adj[b].push(a);
        self.masks[a] |= 1 << b;
        self.masks[b] |= 1 << a;
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    /// Endpoints of edge `id`, smaller first.
    pub fn edge(&self, id: EdgeId) -> (Vertex, Vertex) {
        self.edges[id]
    }

    /// Sorted neighbor list.
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn neighbor_mask(&self, v: Vertex) -> u64 {
        self.masks[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    /// Δ(G); zero for the empty graph.
    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.edge_id(u, v).is_some()
    }

    pub fn edge_id(&self, u: Vertex, v: Vertex) -> Option<EdgeId> {
        if u >= self.n || v >= self.n {
            return None;
        }
        match self.ids[u * self.n + v] {
            NO_EDGE => None,
            id => Some(id as EdgeId),
        }
    }

    /// Edge ids incident to `v`, in neighbor order.
    pub fn incident_edges(&self, v: Vertex) -> Vec<EdgeId> {
        self.adj[v]
            .iter()
            .map(|&w| self.ids[v * self.n + w] as EdgeId)
            .collect()
    }

    /// Vertices of degree one.
    pub fn leaves(&self) -> Vec<Vertex> {
        self.vertices().filter(|&v| self.degree(v) == 1).collect()
    }

    /// Edges with an endpoint of degree one.
    pub fn pendant_edges(&self) -> Vec<EdgeId> {
        (0..self.edge_count())
            .filter(|&e| {
                let (u, v) = self.edges[e];
                self.degree(u) == 1 || self.degree(v) == 1
            })
            .collect()
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in self.vertices() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// True for graphs with at least one vertex and a single component.
    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.components().len() == 1
    }

    pub(crate) fn require_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::DisconnectedInput)
        }
    }

    pub fn is_bipartite(&self) -> bool {
        let mut side = vec![u8::MAX; self.n];
        for s in self.vertices() {
            if side[s] != u8::MAX {
                continue;
            }
            side[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if side[w] == u8::MAX {
                        side[w] = 1 - side[u];
                        queue.push_back(w);
                    } else if side[w] == side[u] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// True when every pair of distinct vertices is adjacent.
    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * self.n.saturating_sub(1) / 2
    }

    /// True when the vertices in `set` are pairwise adjacent.
    pub fn is_clique_mask(&self, set: u64) -> bool {
        let mut rest = set;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if set & !(1 << v) & !self.masks[v] != 0 {
                return false;
            }
        }
        true
    }

    /// Subgraph induced by `vertices` (relabelled `0..k` in the given
    /// order) and, for each of its edges, the id of the original edge.
    pub fn induced_subgraph(&self, vertices: &[Vertex]) -> (Graph, Vec<EdgeId>) {
        let mut local = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let mut edges = Vec::new();
        let mut origin = Vec::new();
        for (id, &(u, v)) in self.edges.iter().enumerate() {
            if local[u] != usize::MAX && local[v] != usize::MAX {
                edges.push((local[u], local[v]));
                origin.push(id);
            }
        }
        let sub = Graph::new(vertices.len(), edges).expect("induced subgraph of a simple graph");
        (sub, origin)
    }

    /// Disjoint union; vertices of `other` are shifted by `self.vertex_count()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let shift = self.n;
        Graph::new(
            self.n + other.n,
            self.edges
                .iter()
                .copied()
                .chain(other.edges.iter().map(|&(u, v)| (u + shift, v + shift))),
        )
    }
}

/// Unordered-pair count `C(k, 2)`.
pub fn choose2(k: usize) -> usize {
    k * k.saturating_sub(1) / 2
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_loops_and_duplicates() {
        assert_eq!(Graph::new(2, [(1, 1)]), Err(Error::Loop(1)));
        assert_eq!(
            Graph::new(3, [(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge(0, 1))
        );
        assert!(matches!(
            Graph::new(2, [(0, 2)]),
            Err(Error::VertexOutOfRange { vertex: 2, n: 2 })
        ));
        assert!(matches!(
            Graph::empty(63),
            Err(Error::TooManyVertices { .. })
        ));
    }

    #[test]
    fn adjacency_matches_edge_list() {
        let g = Graph::new(4, [(2, 0), (0, 1), (3, 2)]).unwrap();
        assert_eq!(g.edges(), &[(0, 2), (0, 1), (2, 3)]);
        assert_eq!(g.neighbors(0), &[1, 2]);
        assert_eq!(g.edge_id(2, 0), Some(0));
        assert_eq!(g.edge_id(1, 3), None);
        assert_eq!(g.neighbor_mask(2), 0b1001);
        assert_eq!(g.max_degree(), 2);
        assert_eq!(g.leaves(), vec![1, 3]);
    }

    #[test]
    fn components_and_bipartiteness() {
        let g = Graph::new(5, [(0, 1), (1, 2), (3, 4)]).unwrap();
        assert_eq!(g.components(), vec![vec![0, 1, 2], vec![3, 4]]);
        assert!(!g.is_connected());
        assert!(g.is_bipartite());
        let k3 = Graph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(!k3.is_bipartite());
        assert!(k3.is_complete());
        assert!(!Graph::empty(0).unwrap().is_connected());
        assert!(Graph::empty(1).unwrap().is_connected());
    }

    #[test]
    fn induced_subgraph_keeps_edge_origin() {
        let g = Graph::new(4, [(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        let (h, origin) = g.induced_subgraph(&[3, 2, 1]);
        assert_eq!(h.edges(), &[(1, 2), (0, 1)]);
        assert_eq!(origin, vec![1, 2]);
    }
}
