//! Canonical labeling by partition refinement and individualization.
//!
//! The search tree is explored depth first. Automorphisms found at equal
//! leaves prune sibling subtrees twice over: the search backjumps to the
//! node where the two paths diverge, and children lying in one orbit of the
//! pointwise stabilizer of the current prefix are tried only once.

use crate::graph::{Graph, Vertex};

type Cells = Vec<Vec<Vertex>>;

fn mask_of(cell: &[Vertex]) -> u64 {
    cell.iter().fold(0, |m, &v| m | 1 << v)
}

/// Splits cells by neighbor counts into splitter cells until equitable.
/// Sub-cells are ordered by count, so the result is label invariant.
fn refine(g: &Graph, cells: &mut Cells) {
    'again: loop {
        for s in 0..cells.len() {
            let splitter = mask_of(&cells[s]);
            for c in 0..cells.len() {
                if cells[c].len() < 2 {
                    continue;
                }
                let count = |v: Vertex| (g.neighbor_mask(v) & splitter).count_ones();
                let first = count(cells[c][0]);
                if cells[c].iter().all(|&v| count(v) == first) {
                    continue;
                }
                let mut keyed: Vec<(u32, Vertex)> =
                    cells[c].iter().map(|&v| (count(v), v)).collect();
                keyed.sort_unstable();
                let mut parts: Cells = Vec::new();
                for (i, &(k, v)) in keyed.iter().enumerate() {
                    if i == 0 || keyed[i - 1].0 != k {
                        parts.push(Vec::new());
                    }
                    parts.last_mut().unwrap().push(v);
                }
                cells.splice(c..=c, parts);
                continue 'again;
            }
        }
        return;
    }
}

struct Leaf {
    path: Vec<Vertex>,
    /// vertex -> canonical position
    perm: Vec<usize>,
    cert: Vec<u64>,
}

struct Search<'a> {
    g: &'a Graph,
    first: Option<Leaf>,
    best: Option<Leaf>,
    autos: Vec<Vec<Vertex>>,
}

fn common_prefix(a: &[Vertex], b: &[Vertex]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

impl Search<'_> {
    fn certificate(&self, perm: &[usize]) -> Vec<u64> {
        let mut rows = vec![0u64; perm.len()];
        for &(u, v) in self.g.edges() {
            rows[perm[u]] |= 1 << perm[v];
            rows[perm[v]] |= 1 << perm[u];
        }
        rows
    }

    /// Records the automorphism taking `known` onto `perm`; returns the
    /// depth at which the two paths diverge.
    fn automorphism(&mut self, known: &Leaf, perm: &[usize], path: &[Vertex]) -> usize {
        let mut at = vec![0; perm.len()];
        for (v, &p) in perm.iter().enumerate() {
            at[p] = v;
        }
        self.autos.push(known.perm.iter().map(|&p| at[p]).collect());
        common_prefix(&known.path, path)
    }

    fn leaf(&mut self, cells: &Cells, path: &[Vertex]) -> Option<usize> {
        let mut perm = vec![0; cells.len()];
        for (i, cell) in cells.iter().enumerate() {
            perm[cell[0]] = i;
        }
        let cert = self.certificate(&perm);
        let leaf = Leaf {
            path: path.to_vec(),
            perm,
            cert,
        };
        let Some(first) = self.first.take() else {
            self.best = Some(Leaf {
                path: leaf.path.clone(),
                perm: leaf.perm.clone(),
                cert: leaf.cert.clone(),
            });
            self.first = Some(leaf);
            return None;
        };
        let jump = if first.cert == leaf.cert {
            Some(self.automorphism(&first, &leaf.perm, path))
        } else {
            None
        };
        self.first = Some(first);
        if jump.is_some() {
            return jump;
        }
        let best = self.best.take().unwrap();
        if best.cert == leaf.cert {
            let d = self.automorphism(&best, &leaf.perm, path);
            self.best = Some(best);
            return Some(d);
        }
        self.best = Some(if leaf.cert < best.cert { leaf } else { best });
        None
    }

    fn same_orbit(&self, fixed: &[Vertex], a: Vertex, b: Vertex) -> bool {
        let mut parent: Vec<Vertex> = (0..self.g.vertex_count()).collect();
        fn find(p: &mut [Vertex], mut x: Vertex) -> Vertex {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for gamma in self
            .autos
            .iter()
            .filter(|gm| fixed.iter().all(|&v| gm[v] == v))
        {
            for (v, &w) in gamma.iter().enumerate() {
                let (rv, rw) = (find(&mut parent, v), find(&mut parent, w));
                parent[rv] = rw;
            }
        }
        find(&mut parent, a) == find(&mut parent, b)
    }

    fn explore(&mut self, cells: Cells, path: &mut Vec<Vertex>) -> Option<usize> {
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            return self.leaf(&cells, path);
        };
        let mut candidates = cells[target].clone();
        candidates.sort_unstable();
        let mut tried: Vec<Vertex> = Vec::new();
        for v in candidates {
            if tried.iter().any(|&t| self.same_orbit(path, t, v)) {
                continue;
            }
            tried.push(v);
            let mut next = cells.clone();
            let rest: Vec<Vertex> = next[target].iter().copied().filter(|&w| w != v).collect();
            next.splice(target..=target, [vec![v], rest]);
            refine(self.g, &mut next);
            path.push(v);
            let jump = self.explore(next, path);
            path.pop();
            if let Some(d) = jump {
                if d < path.len() {
                    return Some(d);
                }
            }
        }
        None
    }
}

/// Relabeling `perm` (vertex to position) such that isomorphic graphs map
/// onto the same labeled graph.
pub fn canonical_labeling(graph: &Graph) -> Vec<usize> {
    let n = graph.vertex_count();
    if n == 0 {
        return Vec::new();
    }
    let mut cells: Cells = vec![(0..n).collect()];
    refine(graph, &mut cells);
    let mut search = Search {
        g: graph,
        first: None,
        best: None,
        autos: Vec::new(),
    };
    search.explore(cells, &mut Vec::new());
    search.best.expect("search reaches a leaf").perm
}

pub fn canonical_form(graph: &Graph) -> Graph {
    let perm = canonical_labeling(graph);
    let mut edges: Vec<(Vertex, Vertex)> = graph
        .edges()
        .iter()
        .map(|&(u, v)| (perm[u].min(perm[v]), perm[u].max(perm[v])))
        .collect();
    edges.sort_unstable();
    Graph::new(graph.vertex_count(), edges).expect("relabeling keeps the graph simple")
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.vertex_count() == b.vertex_count()
        && a.edge_count() == b.edge_count()
        && canonical_form(a) == canonical_form(b)
}
