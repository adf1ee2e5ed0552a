//! Internal and pendant paths.
//!
//! A path `p_1 … p_k` (`k ≥ 2`) whose interior vertices have degree two is
//! *internal* when both ends have degree at least three and *pendant* when
//! `p_1` has degree at least three and `p_k` is a leaf. Only paths made of
//! bridges are reported; an edge or a detour inside a 2-connected block is
//! never treated as a path.

use serde::Serialize;

use crate::blocks::{decompose_blocks, BlockDecomposition};
use crate::error::Result;
use crate::graph::{Graph, Vertex};

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct PathsCatalog {
    /// Oriented from the smaller end vertex, ordered by (first vertex, length).
    pub internal_paths: Vec<Vec<Vertex>>,
    /// Oriented from the branch vertex to the leaf, ordered by (first, second vertex).
    pub pendant_paths: Vec<Vec<Vertex>>,
}

pub fn find_paths(graph: &Graph) -> Result<PathsCatalog> {
    let blocks = decompose_blocks(graph)?;
    Ok(find_paths_with(graph, &blocks))
}

pub(crate) fn find_paths_with(graph: &Graph, blocks: &BlockDecomposition) -> PathsCatalog {
    let mut catalog = PathsCatalog::default();
    for start in graph.vertices().filter(|&v| graph.degree(v) >= 3) {
        for &first in graph.neighbors(start) {
            let e = graph.edge_id(start, first).expect("adjacent");
            if !blocks.is_bridge(e) {
                continue;
            }
            let mut path = vec![start, first];
            let (mut prev, mut cur) = (start, first);
            // a degree-2 vertex entered through a bridge leaves through one
            while graph.degree(cur) == 2 {
                let next = graph
                    .neighbors(cur)
                    .iter()
                    .copied()
                    .find(|&w| w != prev)
                    .expect("degree 2");
                path.push(next);
                prev = cur;
                cur = next;
            }
            match graph.degree(cur) {
                1 => catalog.pendant_paths.push(path),
                _ if start < cur => catalog.internal_paths.push(path),
                _ => {}
            }
        }
    }
    catalog
        .internal_paths
        .sort_by_key(|p| (p[0], p.len(), p[1]));
    catalog.pendant_paths.sort_by_key(|p| (p[0], p[1]));
    catalog
}
