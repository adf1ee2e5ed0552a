//! All-pairs hop distances by breadth-first search.

use std::collections::VecDeque;

use crate::graph::{Graph, Vertex};

/// Marker for pairs in different components.
pub const INFINITY: u32 = u32::MAX;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    dist: Vec<u32>,
}

impl DistanceMatrix {
    pub fn order(&self) -> usize {
        self.n
    }

    /// Raw entry, [`INFINITY`] when unreachable.
    #[inline]
    pub fn raw(&self, u: Vertex, v: Vertex) -> u32 {
        self.dist[u * self.n + v]
    }

    pub fn get(&self, u: Vertex, v: Vertex) -> Option<u32> {
        match self.raw(u, v) {
            INFINITY => None,
            d => Some(d),
        }
    }

    pub fn row(&self, u: Vertex) -> &[u32] {
        &self.dist[u * self.n..(u + 1) * self.n]
    }

    /// Largest distance, `None` when some pair is unreachable.
    pub fn diameter(&self) -> Option<u32> {
        let mut best = 0;
        for &d in &self.dist {
            if d == INFINITY {
                return None;
            }
            best = best.max(d);
        }
        Some(best)
    }
}

pub fn bfs(graph: &Graph, source: Vertex) -> Vec<u32> {
    let mut dist = vec![INFINITY; graph.vertex_count()];
    dist[source] = 0;
    let mut queue = VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        for &w in graph.neighbors(u) {
            if dist[w] == INFINITY {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

pub fn apsp(graph: &Graph) -> DistanceMatrix {
    let n = graph.vertex_count();
    let mut dist = Vec::with_capacity(n * n);
    for s in graph.vertices() {
        dist.extend(bfs(graph, s));
    }
    DistanceMatrix { n, dist }
}

/// diam(G); `None` for disconnected graphs.
pub fn diameter(dist: &DistanceMatrix) -> Option<u32> {
    dist.diameter()
}
