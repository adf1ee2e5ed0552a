//! The reduction of a block graph: internal paths are contracted to a
//! vertex and pendant paths shortened to a single pendant edge.

use crate::blocks::decompose_blocks;
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, Vertex};
use crate::paths::find_paths_with;

/// Order in which single path operations are applied until a fixpoint.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ReductionOrder {
    /// Pendant paths first, then internal paths by (smaller end, length).
    #[default]
    PendantFirst,
    /// Internal paths first, both kinds taken from the back of their lists.
    InternalFirstReversed,
}

/// A reduced graph together with where its pieces came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduction {
    pub graph: Graph,
    /// Original edge behind every reduced edge. A shortened pendant path is
    /// represented by its leaf edge.
    pub edge_origin: Vec<EdgeId>,
    /// Original vertex behind every reduced vertex; a merged vertex keeps
    /// the smaller end of the contracted path.
    pub vertex_origin: Vec<Vertex>,
}

impl Reduction {
    /// Maps an edge set of the reduced graph back to the original graph.
    pub fn lift(&self, edges: &[EdgeId]) -> Vec<EdgeId> {
        let mut out: Vec<EdgeId> = edges.iter().map(|&e| self.edge_origin[e]).collect();
        out.sort_unstable();
        out
    }
}

/// R(G) for a connected block graph.
pub fn reduce(graph: &Graph) -> Result<Graph> {
    Ok(reduce_tracked(graph, ReductionOrder::default())?.graph)
}

pub fn reduce_tracked(graph: &Graph, order: ReductionOrder) -> Result<Reduction> {
    let blocks = decompose_blocks(graph)?;
    if !blocks.is_block_graph() {
        return Err(Error::NotBlockGraph);
    }
    let mut current = Reduction {
        graph: graph.clone(),
        edge_origin: (0..graph.edge_count()).collect(),
        vertex_origin: graph.vertices().collect(),
    };
    loop {
        let blocks = decompose_blocks(&current.graph)?;
        let catalog = find_paths_with(&current.graph, &blocks);
        let long_pendant = |rev: bool| {
            let mut it = catalog.pendant_paths.iter().filter(|p| p.len() > 2);
            if rev {
                it.next_back()
            } else {
                it.next()
            }
        };
        let step = match order {
            ReductionOrder::PendantFirst => long_pendant(false)
                .map(|p| (p, false))
                .or_else(|| catalog.internal_paths.first().map(|p| (p, true))),
            ReductionOrder::InternalFirstReversed => catalog
                .internal_paths
                .last()
                .map(|p| (p, true))
                .or_else(|| long_pendant(true).map(|p| (p, false))),
        };
        let Some((path, internal)) = step else {
            return Ok(current);
        };
        current = if internal {
            contract_internal(&current, path)?
        } else {
            shorten_pendant(&current, path)?
        };
    }
}

/// Removes `dropped` vertices, sends `from` onto `into`, and renumbers the
/// survivors densely in their old order.
fn vertex_map(
    n: usize,
    dropped: &[Vertex],
    merge: Option<(Vertex, Vertex)>,
) -> (Vec<Option<Vertex>>, usize) {
    let mut gone = vec![false; n];
    for &v in dropped {
        gone[v] = true;
    }
    if let Some((from, _)) = merge {
        gone[from] = true;
    }
    let mut map = vec![None; n];
    let mut next = 0;
    for v in 0..n {
        if !gone[v] {
            map[v] = Some(next);
            next += 1;
        }
    }
    if let Some((from, into)) = merge {
        map[from] = map[into];
    }
    (map, next)
}

fn rebuild(
    current: &Reduction,
    map: &[Option<Vertex>],
    order: usize,
    edges: impl Iterator<Item = ((Vertex, Vertex), EdgeId)>,
) -> Result<Reduction> {
    let mut pairs = Vec::new();
    let mut edge_origin = Vec::new();
    for ((u, v), origin) in edges {
        pairs.push((map[u].expect("kept"), map[v].expect("kept")));
        edge_origin.push(origin);
    }
    let mut vertex_origin = vec![usize::MAX; order];
    for (old, new) in map.iter().enumerate() {
        if let Some(new) = *new {
            // merged vertices map twice; keep the smaller original
            vertex_origin[new] = vertex_origin[new].min(current.vertex_origin[old]);
        }
    }
    Ok(Reduction {
        graph: Graph::new(order, pairs)?,
        edge_origin,
        vertex_origin,
    })
}

fn path_edges(graph: &Graph, path: &[Vertex]) -> Vec<EdgeId> {
    path.windows(2)
        .map(|w| graph.edge_id(w[0], w[1]).expect("path edge"))
        .collect()
}

fn contract_internal(current: &Reduction, path: &[Vertex]) -> Result<Reduction> {
    let g = &current.graph;
    let (a, b) = (path[0], path[path.len() - 1]);
    let (keep, merge) = (a.min(b), a.max(b));
    let on_path = path_edges(g, path);
    let (map, order) = vertex_map(
        g.vertex_count(),
        &path[1..path.len() - 1],
        Some((merge, keep)),
    );
    rebuild(
        current,
        &map,
        order,
        g.edges()
            .iter()
            .enumerate()
            .filter(|(e, _)| !on_path.contains(e))
            .map(|(e, &uv)| (uv, current.edge_origin[e])),
    )
}

fn shorten_pendant(current: &Reduction, path: &[Vertex]) -> Result<Reduction> {
    let g = &current.graph;
    let (branch, leaf) = (path[0], path[path.len() - 1]);
    let on_path = path_edges(g, path);
    let first = on_path[0];
    let leaf_origin = current.edge_origin[on_path[on_path.len() - 1]];
    let (map, order) = vertex_map(g.vertex_count(), &path[1..path.len() - 1], None);
    rebuild(
        current,
        &map,
        order,
        g.edges().iter().enumerate().filter_map(|(e, &uv)| {
            if e == first {
                Some(((branch, leaf), leaf_origin))
            } else if on_path.contains(&e) {
                None
            } else {
                Some((uv, current.edge_origin[e]))
            }
        }),
    )
}
