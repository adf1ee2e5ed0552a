//! Exact edge general position number.
//!
//! [`gpe_exact`] runs a depth-first include/exclude search over the conflict
//! hypergraph; [`gpe_bruteforce`] is a deliberately naive enumeration over a
//! conflict list built from explicit geodesic listings, used as an oracle.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::blocks::decompose_blocks;
use crate::distance::apsp;
use crate::error::{Error, Result};
use crate::geodesic::{conflicts_by_enumeration, conflicts_with, triple_on_geodesic, ConflictSet};
use crate::graph::{EdgeId, Graph};

/// Edge cap for [`gpe_bruteforce`].
pub const BRUTEFORCE_MAX_EDGES: usize = 24;

/// How a value was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    BruteForce,
    BranchAndBound,
    Fastpath(FastpathRule),
}

/// Closed-form rules, in the order they are tried.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FastpathRule {
    Diameter2,
    Tree,
    Cycle,
    ThickLeavedTree,
    BlockReduction,
}

impl FastpathRule {
    pub fn tag(self) -> &'static str {
        match self {
            FastpathRule::Diameter2 => "diam2",
            FastpathRule::Tree => "tree",
            FastpathRule::Cycle => "cycle",
            FastpathRule::ThickLeavedTree => "thick-leaved",
            FastpathRule::BlockReduction => "block-reduction",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Method::BruteForce => f.write_str("bruteforce"),
            Method::BranchAndBound => f.write_str("branch-and-bound"),
            Method::Fastpath(rule) => write!(f, "fastpath:{}", rule.tag()),
        }
    }
}

impl Serialize for FastpathRule {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.tag())
    }
}

impl Serialize for Method {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Block-graph bounds `s′(G) ≤ gp_e(G) ≤ C(s(G),2) + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Bounds {
    pub s_prime: usize,
    pub upper: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GpeResult {
    pub value: usize,
    /// Sorted edge ids of a largest edge general position set.
    pub witness: Vec<EdgeId>,
    pub method: Method,
    /// Size of the incumbent the search started from.
    pub lower_bound_used: usize,
    pub bounds: Option<Bounds>,
}

/// Block-graph bounds, `None` for other graphs.
pub(crate) fn block_bounds_of(graph: &Graph) -> Option<(Bounds, Vec<EdgeId>)> {
    let blocks = decompose_blocks(graph).ok()?;
    blocks.is_block_graph().then(|| {
        (
            Bounds {
                s_prime: blocks.s_prime(),
                upper: blocks.upper_bound(),
            },
            blocks.simplicial_edges.clone(),
        )
    })
}

/// Maximum conflict-free edge set of a connected graph with at least one edge.
pub fn gpe_exact(graph: &Graph) -> Result<GpeResult> {
    graph.require_connected()?;
    if graph.edge_count() == 0 {
        return Err(Error::EmptyEdgeSet);
    }
    let conflicts = conflicts_with(graph, &apsp(graph));
    let block = block_bounds_of(graph);
    let seed = block.as_ref().map(|(_, simplicial)| simplicial.as_slice());
    let witness = max_free_set(graph, &conflicts, seed);
    Ok(GpeResult {
        value: witness.best.len(),
        witness: witness.best,
        method: Method::BranchAndBound,
        lower_bound_used: witness.incumbent,
        bounds: block.map(|(b, _)| b),
    })
}

pub(crate) struct Solved {
    pub best: Vec<EdgeId>,
    pub incumbent: usize,
}

/// Branch and bound over `conflicts`, seeded with the largest of: the star
/// at a maximum-degree vertex, `extra_seed`, and the greedy set.
pub(crate) fn max_free_set(
    graph: &Graph,
    conflicts: &ConflictSet,
    extra_seed: Option<&[EdgeId]>,
) -> Solved {
    let m = graph.edge_count();
    let hub = graph
        .vertices()
        .max_by_key(|&v| (graph.degree(v), std::cmp::Reverse(v)))
        .expect("non-empty graph");
    let mut incumbent = graph.incident_edges(hub);
    let candidates = extra_seed
        .into_iter()
        .map(<[EdgeId]>::to_vec)
        .chain(std::iter::once(greedy_with(conflicts)));
    for candidate in candidates {
        if candidate.len() > incumbent.len() && conflicts.is_free(&candidate) {
            incumbent = candidate;
        }
    }
    let start = incumbent.len();

    let mut order: Vec<EdgeId> = (0..m).collect();
    order.sort_by_key(|&e| (std::cmp::Reverse(conflicts.conflict_degree(e)), e));
    let mut search = Search {
        conflicts,
        order,
        blocked: vec![0; m],
        current: Vec::new(),
        best: incumbent,
    };
    search.run(0);
    let mut best = search.best;
    best.sort_unstable();
    Solved {
        best,
        incumbent: start,
    }
}

struct Search<'a> {
    conflicts: &'a ConflictSet,
    order: Vec<EdgeId>,
    /// Number of pairs in `current` that complete a conflict with each edge.
    blocked: Vec<u32>,
    current: Vec<EdgeId>,
    best: Vec<EdgeId>,
}

impl Search<'_> {
    fn run(&mut self, from: usize) {
        if self.current.len() > self.best.len() {
            self.best = self.current.clone();
        }
        let open = self.order[from..]
            .iter()
            .filter(|&&e| self.blocked[e] == 0)
            .count();
        if self.current.len() + open <= self.best.len() {
            return;
        }
        let Some(offset) = self.order[from..]
            .iter()
            .position(|&e| self.blocked[e] == 0)
        else {
            return;
        };
        let depth = from + offset;
        let e = self.order[depth];

        self.toggle(e, true);
        self.current.push(e);
        self.run(depth + 1);
        self.current.pop();
        self.toggle(e, false);

        self.run(depth + 1);
    }

    fn toggle(&mut self, e: EdgeId, add: bool) {
        for &p in &self.current {
            for &r in self.conflicts.thirds(e, p) {
                if add {
                    self.blocked[r] += 1;
                } else {
                    self.blocked[r] -= 1;
                }
            }
        }
    }
}

/// A maximal conflict-free set, inserting edges by ascending conflict degree.
pub fn greedy_lower(graph: &Graph) -> Vec<EdgeId> {
    greedy_with(&conflicts_with(graph, &apsp(graph)))
}

fn greedy_with(conflicts: &ConflictSet) -> Vec<EdgeId> {
    let mut order: Vec<EdgeId> = (0..conflicts.edge_count()).collect();
    order.sort_by_key(|&e| (conflicts.conflict_degree(e), e));
    let mut chosen: Vec<EdgeId> = Vec::new();
    for e in order {
        let legal = chosen.iter().enumerate().all(|(i, &p)| {
            chosen[i + 1..]
                .iter()
                .all(|&q| !conflicts.thirds(p, q).contains(&e))
        });
        if legal {
            chosen.push(e);
        }
    }
    chosen.sort_unstable();
    chosen
}

/// Exhaustive include/exclude enumeration for graphs with at most
/// [`BRUTEFORCE_MAX_EDGES`] edges.
pub fn gpe_bruteforce(graph: &Graph) -> Result<GpeResult> {
    let m = graph.edge_count();
    if m > BRUTEFORCE_MAX_EDGES {
        return Err(Error::TooLarge {
            m,
            cap: BRUTEFORCE_MAX_EDGES,
        });
    }
    graph.require_connected()?;
    let mut partners: Vec<Vec<u32>> = vec![Vec::new(); m];
    for [a, b, c] in conflicts_by_enumeration(graph) {
        partners[a].push(1 << b | 1 << c);
        partners[b].push(1 << a | 1 << c);
        partners[c].push(1 << a | 1 << b);
    }
    let mut best = 0u32;
    enumerate(0, 0, &partners, &mut best);
    let witness: Vec<EdgeId> = (0..m).filter(|&e| best >> e & 1 == 1).collect();
    Ok(GpeResult {
        value: witness.len(),
        witness,
        method: Method::BruteForce,
        lower_bound_used: 0,
        bounds: None,
    })
}

fn enumerate(edge: usize, chosen: u32, partners: &[Vec<u32>], best: &mut u32) {
    if edge == partners.len() {
        if chosen.count_ones() > best.count_ones() {
            *best = chosen;
        }
        return;
    }
    if partners[edge].iter().all(|&pair| chosen & pair != pair) {
        enumerate(edge + 1, chosen | 1 << edge, partners, best);
    }
    enumerate(edge + 1, chosen, partners, best);
}

/// Why a result failed certification.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum CertifyFailure {
    #[error("witness names unknown edge {0}")]
    UnknownEdge(EdgeId),
    #[error("witness repeats edge {0}")]
    RepeatedEdge(EdgeId),
    #[error("value {value} differs from witness size {witness}")]
    SizeMismatch { value: usize, witness: usize },
    #[error("edges {0:?} lie on a common geodesic")]
    ConflictViolated([EdgeId; 3]),
    #[error("value {value} is below the maximum degree {delta}")]
    BelowDeltaBound { value: usize, delta: usize },
}

/// Checks that the witness is an edge general position set of the stated
/// size and that the value respects `gp_e ≥ Δ`.
pub fn certify(graph: &Graph, result: &GpeResult) -> std::result::Result<(), CertifyFailure> {
    let m = graph.edge_count();
    let mut seen = vec![false; m];
    for &e in &result.witness {
        if e >= m {
            return Err(CertifyFailure::UnknownEdge(e));
        }
        if std::mem::replace(&mut seen[e], true) {
            return Err(CertifyFailure::RepeatedEdge(e));
        }
    }
    let w = &result.witness;
    if w.len() != result.value {
        return Err(CertifyFailure::SizeMismatch {
            value: result.value,
            witness: w.len(),
        });
    }
    let dist = apsp(graph);
    for i in 0..w.len() {
        for j in i + 1..w.len() {
            for k in j + 1..w.len() {
                if triple_on_geodesic(
                    &dist,
                    [graph.edge(w[i]), graph.edge(w[j]), graph.edge(w[k])],
                ) {
                    return Err(CertifyFailure::ConflictViolated([w[i], w[j], w[k]]));
                }
            }
        }
    }
    let delta = graph.max_degree();
    if result.value < delta {
        return Err(CertifyFailure::BelowDeltaBound {
            value: result.value,
            delta,
        });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geodesic::build_conflicts;

    fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::new(n, edges.iter().copied()).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    #[test]
    fn cycles() {
        for (n, want) in [(3, 3), (4, 4), (5, 5), (6, 4), (7, 4), (9, 4)] {
            let r = gpe_exact(&cycle(n)).unwrap();
            assert_eq!(r.value, want, "C{n}");
            assert_eq!(certify(&cycle(n), &r), Ok(()));
        }
        assert_eq!(gpe_bruteforce(&cycle(5)).unwrap().value, 5);
    }

    #[test]
    fn stars_paths_and_triangle() {
        let k15 = graph(6, &[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5)]);
        assert_eq!(gpe_exact(&k15).unwrap().value, 5);
        assert_eq!(gpe_bruteforce(&path(5)).unwrap().value, 2);
        assert_eq!(gpe_bruteforce(&cycle(3)).unwrap().value, 3);
        assert_eq!(gpe_exact(&path(2)).unwrap().value, 1);
    }

    #[test]
    fn errors() {
        assert_eq!(
            gpe_exact(&Graph::empty(1).unwrap()),
            Err(Error::EmptyEdgeSet)
        );
        assert_eq!(
            gpe_exact(&Graph::empty(2).unwrap()),
            Err(Error::DisconnectedInput)
        );
        assert_eq!(
            gpe_bruteforce(&path(26)),
            Err(Error::TooLarge { m: 25, cap: 24 })
        );
    }

    #[test]
    fn certify_reasons() {
        let p4 = path(4);
        let bad = GpeResult {
            value: 3,
            witness: vec![0, 1, 2],
            method: Method::BruteForce,
            lower_bound_used: 0,
            bounds: None,
        };
        assert_eq!(
            certify(&p4, &bad),
            Err(CertifyFailure::ConflictViolated([0, 1, 2]))
        );
        let low = GpeResult {
            value: 1,
            witness: vec![0],
            ..bad.clone()
        };
        assert_eq!(
            certify(&cycle(3), &low),
            Err(CertifyFailure::BelowDeltaBound { value: 1, delta: 2 })
        );
        let short = GpeResult {
            value: 2,
            witness: vec![0],
            ..bad.clone()
        };
        assert!(matches!(
            certify(&p4, &short),
            Err(CertifyFailure::SizeMismatch { .. })
        ));
        let unknown = GpeResult {
            value: 1,
            witness: vec![7],
            ..bad
        };
        assert_eq!(certify(&p4, &unknown), Err(CertifyFailure::UnknownEdge(7)));
    }

    #[test]
    fn greedy_is_maximal_and_free() {
        let k4 = graph(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert_eq!(greedy_lower(&k4), vec![0, 1, 2, 3, 4, 5]);
        let c6 = cycle(6);
        let g = greedy_lower(&c6);
        let conflicts = build_conflicts(&c6).unwrap();
        assert!(g.len() >= 2 && conflicts.is_free(&g));
        for e in 0..6 {
            if !g.contains(&e) {
                let mut bigger = g.clone();
                bigger.push(e);
                assert!(!conflicts.is_free(&bigger));
            }
        }
    }

    #[test]
    fn block_graph_result_carries_bounds() {
        let g = graph(
            7,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (1, 5),
                (5, 6),
                (5, 2),
                (2, 6),
                (1, 6),
            ],
        );
        let r = gpe_exact(&g).unwrap();
        assert_eq!(r.value, 7);
        assert_eq!(
            r.bounds,
            Some(Bounds {
                s_prime: 7,
                upper: 7
            })
        );
        assert_eq!(r.lower_bound_used, 7);
        assert_eq!(r.method.to_string(), "branch-and-bound");
    }
}
