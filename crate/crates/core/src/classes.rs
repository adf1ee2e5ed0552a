//! Recognizers and closed forms for the graph families with known `gp_e`.

use std::collections::VecDeque;

use serde::Serialize;

use crate::blocks::{decompose_blocks, BlockDecomposition};
use crate::distance::apsp;
use crate::error::{Error, Result};
use crate::geodesic::conflicts_with;
use crate::graph::{choose2, EdgeId, Graph, Vertex};
use crate::reduce::{reduce_tracked, ReductionOrder};
use crate::solver::{gpe_exact, max_free_set, Bounds, FastpathRule, GpeResult, Method};

/// A pendant edge `leaf–attach` whose removal leaves a diameter-2 graph in
/// which `attach` misses at least one other vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct G1Witness {
    pub special_edge: EdgeId,
    pub leaf: Vertex,
    pub attach: Vertex,
}

impl G1Witness {
    /// Re-runs the construction: `H = G − leaf`, then a fresh pendant vertex
    /// on the image of `attach`.
    pub fn rebuild(&self, graph: &Graph) -> Result<Graph> {
        let rest: Vec<Vertex> = graph.vertices().filter(|&v| v != self.leaf).collect();
        let (h, _) = graph.induced_subgraph(&rest);
        let u = rest
            .iter()
            .position(|&v| v == self.attach)
            .expect("attach vertex kept");
        family_g1(&h, u)
    }
}

/// A central edge `x1x2` with the common neighbors `a` (the graph G₀),
/// the private neighbors `b1` of `x1` (G₁) and `b2` of `x2` (G₂).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct G2Witness {
    pub central_edge: EdgeId,
    pub x1: Vertex,
    pub x2: Vertex,
    pub a: Vec<Vertex>,
    pub b1: Vec<Vertex>,
    pub b2: Vec<Vertex>,
}

impl G2Witness {
    /// Re-runs the construction from the three induced part graphs.
    pub fn rebuild(&self, graph: &Graph) -> Result<Graph> {
        let part = |vs: &[Vertex]| graph.induced_subgraph(vs).0;
        family_g2(&part(&self.a), &part(&self.b1), &part(&self.b2))
    }
}

/// Attaches a pendant vertex (numbered `n(H)`) to `u`, provided
/// `diam(H) = 2` and `deg_H(u) ≤ n(H) − 2`.
pub fn family_g1(h: &Graph, u: Vertex) -> Result<Graph> {
    let n = h.vertex_count();
    if u >= n || apsp(h).diameter() != Some(2) || h.degree(u) + 2 > n {
        return Err(Error::BadParameters(
            "family G1 needs diam(H) = 2 and deg(u) ≤ n(H) − 2".into(),
        ));
    }
    Graph::new(n + 1, h.edges().iter().copied().chain([(u, n)]))
}

/// Vertices `0 = x1`, `1 = x2`, then the parts `g0`, `g1`, `g2` in order;
/// `x1x2` is joined to all of `g0`, `x1` to all of `g1`, `x2` to all of `g2`.
pub fn family_g2(g0: &Graph, g1: &Graph, g2: &Graph) -> Result<Graph> {
    let k2 = Graph::new(2, [(0, 1)])?;
    let union = k2
        .disjoint_union(g0)?
        .disjoint_union(g1)?
        .disjoint_union(g2)?;
    let (n0, n1, n2) = (g0.vertex_count(), g1.vertex_count(), g2.vertex_count());
    let mut edges = union.edges().to_vec();
    for v in 2..2 + n0 {
        edges.push((0, v));
        edges.push((1, v));
    }
    for v in 2 + n0..2 + n0 + n1 {
        edges.push((0, v));
    }
    for v in 2 + n0 + n1..2 + n0 + n1 + n2 {
        edges.push((1, v));
    }
    Graph::new(union.vertex_count(), edges)
}

pub fn in_family_g1(graph: &Graph) -> Result<Option<G1Witness>> {
    graph.require_connected()?;
    if graph.vertex_count() < 4 {
        return Ok(None);
    }
    for leaf in graph.leaves() {
        let attach = graph.neighbors(leaf)[0];
        let rest: Vec<Vertex> = graph.vertices().filter(|&v| v != leaf).collect();
        let (h, _) = graph.induced_subgraph(&rest);
        let u = rest.iter().position(|&v| v == attach).expect("kept");
        if apsp(&h).diameter() == Some(2) && h.degree(u) + 2 <= h.vertex_count() {
            return Ok(Some(G1Witness {
                special_edge: graph.edge_id(leaf, attach).expect("pendant edge"),
                leaf,
                attach,
            }));
        }
    }
    Ok(None)
}

pub fn in_family_g2(graph: &Graph) -> Result<Option<G2Witness>> {
    graph.require_connected()?;
    if graph.vertex_count() < 4 {
        return Ok(None);
    }
    let all: u64 = (1 << graph.vertex_count()) - 1;
    // swapping the ends only swaps the two sides, so one orientation suffices
    for (id, &(x1, x2)) in graph.edges().iter().enumerate() {
        let n1 = graph.neighbor_mask(x1) & !(1 << x2);
        let n2 = graph.neighbor_mask(x2) & !(1 << x1);
        let a = n1 & n2;
        let b1 = n1 & !n2;
        let b2 = n2 & !n1;
        if b1 == 0 || b2 == 0 || (a | b1 | b2 | 1 << x1 | 1 << x2) != all {
            continue;
        }
        let crosses = |from: u64, to: u64| bits(from).any(|w| graph.neighbor_mask(w) & to != 0);
        if crosses(a, b1 | b2) || crosses(b1, b2) {
            continue;
        }
        return Ok(Some(G2Witness {
            central_edge: id,
            x1,
            x2,
            a: bits(a).collect(),
            b1: bits(b1).collect(),
            b2: bits(b2).collect(),
        }));
    }
    Ok(None)
}

fn bits(mut mask: u64) -> impl Iterator<Item = Vertex> {
    std::iter::from_fn(move || {
        (mask != 0).then(|| {
            let v = mask.trailing_zeros() as Vertex;
            mask &= mask - 1;
            v
        })
    })
}

/// Length of a shortest cycle, `None` for forests.
pub fn girth(graph: &Graph) -> Option<usize> {
    let n = graph.vertex_count();
    let mut best = usize::MAX;
    for s in graph.vertices() {
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &w in graph.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    best = best.min(dist[u] + dist[w] + 1);
                }
            }
        }
    }
    (best != usize::MAX).then_some(best)
}

pub fn is_path(graph: &Graph) -> bool {
    graph.is_connected()
        && graph.edge_count() + 1 == graph.vertex_count()
        && graph.max_degree() <= 2
}

pub fn is_cycle(graph: &Graph) -> bool {
    graph.vertex_count() >= 3
        && graph.is_connected()
        && graph.vertices().all(|v| graph.degree(v) == 2)
}

pub fn is_tree(graph: &Graph) -> bool {
    graph.is_connected() && graph.edge_count() + 1 == graph.vertex_count()
}

/// A tree in which some leaves were replaced by cliques hanging from a bridge.
pub fn is_thick_leaved(blocks: &BlockDecomposition, graph: &Graph) -> bool {
    blocks.is_block_graph()
        && blocks
            .blocks
            .iter()
            .filter(|b| b.thick)
            .all(|b| b.pendant && graph.degree(b.cut_vertices[0]) == b.order())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationResult {
    pub n: usize,
    pub m: usize,
    pub is_path: bool,
    pub is_cycle: bool,
    pub is_tree: bool,
    pub is_complete: bool,
    pub is_bipartite: bool,
    pub is_block_graph: bool,
    pub is_thick_leaved: bool,
    pub diameter: Option<u32>,
    pub max_degree: usize,
    pub leaf_count: usize,
    pub girth: Option<usize>,
    pub membership_g1: Option<G1Witness>,
    pub membership_g2: Option<G2Witness>,
    pub block_bounds: Option<Bounds>,
}

pub fn classify(graph: &Graph) -> Result<ClassificationResult> {
    let blocks = decompose_blocks(graph)?;
    let is_block_graph = blocks.is_block_graph();
    Ok(ClassificationResult {
        n: graph.vertex_count(),
        m: graph.edge_count(),
        is_path: is_path(graph),
        is_cycle: is_cycle(graph),
        is_tree: is_tree(graph),
        is_complete: graph.is_complete(),
        is_bipartite: graph.is_bipartite(),
        is_block_graph,
        is_thick_leaved: is_thick_leaved(&blocks, graph),
        diameter: apsp(graph).diameter(),
        max_degree: graph.max_degree(),
        leaf_count: graph.leaves().len(),
        girth: girth(graph),
        membership_g1: in_family_g1(graph)?,
        membership_g2: in_family_g2(graph)?,
        block_bounds: is_block_graph.then(|| Bounds {
            s_prime: blocks.s_prime(),
            upper: blocks.upper_bound(),
        }),
    })
}

/// `(s′(G), C(s(G),2) + 1)` for a connected block graph.
pub fn block_bounds(graph: &Graph) -> Result<Bounds> {
    let blocks = decompose_blocks(graph)?;
    if !blocks.is_block_graph() {
        return Err(Error::NotBlockGraph);
    }
    Ok(Bounds {
        s_prime: blocks.s_prime(),
        upper: blocks.upper_bound(),
    })
}

/// Necessary conditions for `gp_e = 4`: `Δ ≤ 4`, and bipartite when `Δ = 4`.
pub fn necessary_gpe4_check(graph: &Graph, gpe: usize) -> bool {
    let delta = graph.max_degree();
    gpe != 4 || delta < 4 || (delta == 4 && graph.is_bipartite())
}

/// A closed-form value with the edge set that attains it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Fastpath {
    pub value: usize,
    pub rule: FastpathRule,
    pub witness: Vec<EdgeId>,
}

/// First applicable closed form: diameter at most 2, tree, cycle,
/// thick-leaved tree, then search on the reduction of a block graph.
pub fn gpe_fastpath(graph: &Graph) -> Result<Option<Fastpath>> {
    let blocks = decompose_blocks(graph)?;
    let m = graph.edge_count();
    let found = |rule, mut witness: Vec<EdgeId>| {
        witness.sort_unstable();
        Ok(Some(Fastpath {
            value: witness.len(),
            rule,
            witness,
        }))
    };
    let dist = apsp(graph);
    if dist.diameter().is_some_and(|d| d <= 2) {
        return found(FastpathRule::Diameter2, (0..m).collect());
    }
    if is_tree(graph) {
        return found(FastpathRule::Tree, graph.pendant_edges());
    }
    if is_cycle(graph) {
        let n = graph.vertex_count();
        if n <= 5 {
            return found(FastpathRule::Cycle, (0..m).collect());
        }
        return found(FastpathRule::Cycle, cycle_witness(graph));
    }
    if is_thick_leaved(&blocks, graph) {
        // the simplicial blocks are complete, so every edge in them is simplicial
        let witness: Vec<EdgeId> = blocks
            .blocks
            .iter()
            .filter(|b| b.simplicial)
            .flat_map(|b| b.edges.iter().copied())
            .collect();
        debug_assert_eq!(
            witness.len(),
            blocks
                .simplicial_block_sizes()
                .iter()
                .map(|&(b, _)| choose2(b))
                .sum::<usize>()
        );
        return found(FastpathRule::ThickLeavedTree, witness);
    }
    if blocks.is_block_graph() {
        let reduction = reduce_tracked(graph, ReductionOrder::default())?;
        let reduced = &reduction.graph;
        let seed = decompose_blocks(reduced)?.simplicial_edges;
        let solved = max_free_set(
            reduced,
            &conflicts_with(reduced, &apsp(reduced)),
            Some(&seed),
        );
        return found(FastpathRule::BlockReduction, reduction.lift(&solved.best));
    }
    Ok(None)
}

/// Two pairs of consecutive edges on opposite sides of a cycle of length
/// at least six. Any arc through three of them exceeds half the cycle.
fn cycle_witness(graph: &Graph) -> Vec<EdgeId> {
    let n = graph.vertex_count();
    let mut order = vec![0, graph.neighbors(0)[0]];
    while order.len() < n {
        let (prev, cur) = (order[order.len() - 2], order[order.len() - 1]);
        let next = graph
            .neighbors(cur)
            .iter()
            .copied()
            .find(|&w| w != prev)
            .expect("cycle");
        order.push(next);
    }
    let half = n / 2;
    [0, 1, half, half + 1]
        .into_iter()
        .map(|i| {
            graph
                .edge_id(order[i], order[(i + 1) % n])
                .expect("cycle edge")
        })
        .collect()
}

/// `gp_e` by closed form where one applies, otherwise by [`gpe_exact`].
/// A single vertex has value zero.
pub fn gpe_auto(graph: &Graph) -> Result<GpeResult> {
    match gpe_fastpath(graph)? {
        Some(fast) => Ok(GpeResult {
            value: fast.value,
            witness: fast.witness,
            method: Method::Fastpath(fast.rule),
            lower_bound_used: fast.value,
            bounds: block_bounds(graph).ok(),
        }),
        None => gpe_exact(graph),
    }
}
