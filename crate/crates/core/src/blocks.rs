//! Blocks, cut vertices and simplicial structure.

use serde::Serialize;

use crate::error::Result;
use crate::graph::{choose2, EdgeId, Graph, Vertex};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Block {
    /// Sorted vertex set.
    pub vertices: Vec<Vertex>,
    /// Sorted edge ids.
    pub edges: Vec<EdgeId>,
    /// Cut vertices of the whole graph that lie in this block.
    pub cut_vertices: Vec<Vertex>,
    /// Simplicial vertices of the whole graph that lie in this block.
    pub simplicial_vertices: Vec<Vertex>,
    pub thick: bool,
    pub pendant: bool,
    pub complete: bool,
    pub simplicial: bool,
}

impl Block {
    pub fn order(&self) -> usize {
        self.vertices.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockDecomposition {
    /// Blocks ordered by their sorted vertex lists.
    pub blocks: Vec<Block>,
    pub cut_vertices: Vec<Vertex>,
    pub simplicial_vertices: Vec<Vertex>,
    pub simplicial_edges: Vec<EdgeId>,
    /// Index into `blocks` for every edge id.
    pub block_of_edge: Vec<usize>,
}

impl BlockDecomposition {
    /// Every block is complete.
    pub fn is_block_graph(&self) -> bool {
        self.blocks.iter().all(|b| b.complete)
    }

    /// s(G)
    pub fn s(&self) -> usize {
        self.simplicial_vertices.len()
    }

    /// s′(G), counted directly from the simplicial edge set.
    pub fn s_prime(&self) -> usize {
        self.simplicial_edges.len()
    }

    /// `(b_i, s_i)` for every simplicial block.
    pub fn simplicial_block_sizes(&self) -> Vec<(usize, usize)> {
        self.blocks
            .iter()
            .filter(|b| b.simplicial)
            .map(|b| (b.order(), b.simplicial_vertices.len()))
            .collect()
    }

    /// s′(G) as `Σ [C(b_i,2) − C(b_i − s_i,2)]` over simplicial blocks.
    /// Only meaningful for block graphs, `None` otherwise.
    pub fn s_prime_by_blocks(&self) -> Option<usize> {
        if !self.is_block_graph() {
            return None;
        }
        Some(
            self.simplicial_block_sizes()
                .into_iter()
                .map(|(b, s)| choose2(b) - choose2(b - s))
                .sum(),
        )
    }

    /// `C(s(G), 2) + 1`
    pub fn upper_bound(&self) -> usize {
        choose2(self.s()) + 1
    }

    pub fn is_bridge(&self, e: EdgeId) -> bool {
        self.blocks[self.block_of_edge[e]].edges.len() == 1
    }
}

/// A vertex whose neighborhood is a clique.
pub fn is_simplicial(graph: &Graph, v: Vertex) -> bool {
    graph.is_clique_mask(graph.neighbor_mask(v))
}

pub fn simplicial_vertices(graph: &Graph) -> Vec<Vertex> {
    graph
        .vertices()
        .filter(|&v| is_simplicial(graph, v))
        .collect()
}

/// Lowpoint decomposition of a connected graph.
pub fn decompose_blocks(graph: &Graph) -> Result<BlockDecomposition> {
    graph.require_connected()?;
    let n = graph.vertex_count();
    let m = graph.edge_count();

    let mut edge_groups = biconnected_edge_sets(graph);
    let mut blocks: Vec<(Vec<Vertex>, Vec<EdgeId>)> = if m == 0 {
        vec![(vec![0], Vec::new())]
    } else {
        edge_groups
            .iter_mut()
            .map(|edges| {
                edges.sort_unstable();
                let mut vs: Vec<Vertex> = edges
                    .iter()
                    .flat_map(|&e| {
                        let (u, v) = graph.edge(e);
                        [u, v]
                    })
                    .collect();
                vs.sort_unstable();
                vs.dedup();
                (vs, std::mem::take(edges))
            })
            .collect()
    };
    blocks.sort();

    let mut membership = vec![0usize; n];
    for (vs, _) in &blocks {
        for &v in vs {
            membership[v] += 1;
        }
    }
    let cut_vertices: Vec<Vertex> = (0..n).filter(|&v| membership[v] >= 2).collect();
    let simplicial = simplicial_vertices(graph);
    let mut is_simp = vec![false; n];
    for &v in &simplicial {
        is_simp[v] = true;
    }
    let simplicial_edges: Vec<EdgeId> = (0..m)
        .filter(|&e| {
            let (u, v) = graph.edge(e);
            is_simp[u] || is_simp[v]
        })
        .collect();

    let mut block_of_edge = vec![0; m];
    let blocks: Vec<Block> = blocks
        .into_iter()
        .enumerate()
        .map(|(idx, (vertices, edges))| {
            for &e in &edges {
                block_of_edge[e] = idx;
            }
            let cuts: Vec<Vertex> = vertices
                .iter()
                .copied()
                .filter(|&v| membership[v] >= 2)
                .collect();
            let simp: Vec<Vertex> = vertices.iter().copied().filter(|&v| is_simp[v]).collect();
            Block {
                thick: vertices.len() >= 3,
                pendant: cuts.len() == 1,
                complete: edges.len() == choose2(vertices.len()),
                simplicial: !simp.is_empty(),
                vertices,
                edges,
                cut_vertices: cuts,
                simplicial_vertices: simp,
            }
        })
        .collect();

    let decomposition = BlockDecomposition {
        blocks,
        cut_vertices,
        simplicial_vertices: simplicial,
        simplicial_edges,
        block_of_edge,
    };
    if let Some(by_blocks) = decomposition.s_prime_by_blocks() {
        assert_eq!(
            by_blocks,
            decomposition.s_prime(),
            "simplicial edge count disagrees with the per-block sum"
        );
    }
    Ok(decomposition)
}

/// Edge sets of the biconnected components (iterative Hopcroft–Tarjan).
fn biconnected_edge_sets(graph: &Graph) -> Vec<Vec<EdgeId>> {
    const UNSEEN: usize = usize::MAX;
    let n = graph.vertex_count();
    let mut disc = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut parent_edge = vec![usize::MAX; n];
    let mut edge_stack: Vec<EdgeId> = Vec::new();
    let mut out = Vec::new();
    let mut clock = 0;

    for root in 0..n {
        if disc[root] != UNSEEN {
            continue;
        }
        disc[root] = clock;
        low[root] = clock;
        clock += 1;
        let mut stack: Vec<(Vertex, usize)> = vec![(root, 0)];
        while let Some(&mut (v, ref mut next)) = stack.last_mut() {
            if let Some(&w) = graph.neighbors(v).get(*next) {
                *next += 1;
                let e = graph.edge_id(v, w).expect("adjacent");
                if disc[w] == UNSEEN {
                    parent_edge[w] = e;
                    disc[w] = clock;
                    low[w] = clock;
                    clock += 1;
                    edge_stack.push(e);
                    stack.push((w, 0));
                } else if e != parent_edge[v] && disc[w] < disc[v] {
                    low[v] = low[v].min(disc[w]);
                    edge_stack.push(e);
                }
            } else {
                stack.pop();
                if let Some(&(u, _)) = stack.last() {
                    low[u] = low[u].min(low[v]);
                    if low[v] >= disc[u] {
                        let mut group = Vec::new();
                        while let Some(e) = edge_stack.pop() {
                            group.push(e);
                            if e == parent_edge[v] {
                                break;
                            }
                        }
                        out.push(group);
                    }
                }
            }
        }
    }
    out
}
