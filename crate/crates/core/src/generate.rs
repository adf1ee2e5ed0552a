//! Generators for the graph families under study.
//!
//! Random families draw from [`SeededRng`]: xoshiro256** seeded through
//! SplitMix64 (`seed_from_u64`), with bounded integers taken by Lemire's
//! multiply-and-reject method. The same seed gives the same graph on every
//! platform.

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::Xoshiro256StarStar;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, MAX_VERTICES};

/// Deterministic generator for reproducible corpora.
pub struct SeededRng(Xoshiro256StarStar);

impl SeededRng {
    pub fn new(seed: u64) -> Self {
        SeededRng(Xoshiro256StarStar::seed_from_u64(seed))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0.next_u64()
    }

    /// Uniform integer in `0..bound`; `bound` must be positive.
    pub fn below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0);
        let threshold = bound.wrapping_neg() % bound;
        loop {
            let wide = u128::from(self.next_u64()) * u128::from(bound);
            if (wide as u64) >= threshold {
                return (wide >> 64) as u64;
            }
        }
    }

    /// Uniform integer in `lo..=hi`.
    pub fn range(&mut self, lo: usize, hi: usize) -> usize {
        lo + self.below((hi - lo + 1) as u64) as usize
    }

    pub fn coin(&mut self) -> bool {
        self.next_u64() >> 63 == 1
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    Path {
        n: usize,
    },
    Cycle {
        n: usize,
    },
    Complete {
        n: usize,
    },
    Star {
        leaves: usize,
    },
    /// `k` four-cycles in a row, consecutive ones sharing one vertex.
    ChainGk {
        k: usize,
    },
    /// Even cycles in a row; each meets the next at the vertex opposite to
    /// where it meets the previous one.
    ChainEvenCycles {
        lengths: Vec<usize>,
    },
    /// `K_n` with a pendant path of `lengths[i]` edges at clique vertex `i`.
    CliquePendantPaths {
        n: usize,
        k: usize,
        lengths: Vec<usize>,
    },
    /// Random recursive tree: vertex `i` joins a uniform earlier vertex.
    RandomTree {
        n: usize,
        seed: u64,
    },
    /// Tree of `blocks` cliques; each new clique shares one uniform existing
    /// vertex and has order 2 with probability 1/2, otherwise uniform in
    /// `3..=max_block`.
    RandomBlockGraph {
        blocks: usize,
        max_block: usize,
        seed: u64,
    },
    /// Random tree on `n` vertices whose leaves are each, with probability
    /// 1/2, replaced by a clique of uniform order in `2..=6`.
    RandomThickLeaved {
        n: usize,
        seed: u64,
    },
}

impl FamilySpec {
    pub fn name(&self) -> &'static str {
        match self {
            FamilySpec::Path { .. } => "path",
            FamilySpec::Cycle { .. } => "cycle",
            FamilySpec::Complete { .. } => "complete",
            FamilySpec::Star { .. } => "star",
            FamilySpec::ChainGk { .. } => "chain_Gk",
            FamilySpec::ChainEvenCycles { .. } => "chain_even_cycles",
            FamilySpec::CliquePendantPaths { .. } => "clique_pendant_paths",
            FamilySpec::RandomTree { .. } => "random_tree",
            FamilySpec::RandomBlockGraph { .. } => "random_block_graph",
            FamilySpec::RandomThickLeaved { .. } => "random_thick_leaved",
        }
    }

    /// Parses `family` with positional `params`; lists are comma separated.
    ///
    /// ```text
    /// path 5 | cycle 6 | complete 4 | star 5 | chain_Gk 5
    /// chain_even_cycles 4,6,4 | clique_pendant_paths 4 2 1,2
    /// random_tree 12 | random_block_graph 6 4 | random_thick_leaved 8
    /// ```
    pub fn parse(family: &str, params: &[String], seed: u64) -> Result<FamilySpec> {
        let bad = |msg: &str| Error::BadParameters(format!("{family}: {msg}"));
        let int = |i: usize| -> Result<usize> {
            params
                .get(i)
                .ok_or_else(|| bad(&format!("missing parameter {}", i + 1)))?
                .parse()
                .map_err(|_| bad(&format!("parameter {} is not an integer", i + 1)))
        };
        let list = |i: usize| -> Result<Vec<usize>> {
            let raw = params
                .get(i)
                .ok_or_else(|| bad(&format!("missing list parameter {}", i + 1)))?;
            raw.split(',')
                .map(|s| {
                    s.trim()
                        .parse()
                        .map_err(|_| bad("list entries must be integers"))
                })
                .collect()
        };
        let arity = match family {
            "path"
            | "cycle"
            | "complete"
            | "star"
            | "chain_Gk"
            | "chain_even_cycles"
            | "random_tree"
            | "random_thick_leaved" => 1,
            "random_block_graph" => 2,
            "clique_pendant_paths" => 3,
            _ => return Err(bad("unknown family")),
        };
        if params.len() != arity {
            return Err(bad(&format!(
                "expected {arity} parameter(s), got {}",
                params.len()
            )));
        }
        let spec = match family {
            "path" => FamilySpec::Path { n: int(0)? },
            "cycle" => FamilySpec::Cycle { n: int(0)? },
            "complete" => FamilySpec::Complete { n: int(0)? },
            "star" => FamilySpec::Star { leaves: int(0)? },
            "chain_Gk" => FamilySpec::ChainGk { k: int(0)? },
            "chain_even_cycles" => FamilySpec::ChainEvenCycles { lengths: list(0)? },
            "clique_pendant_paths" => FamilySpec::CliquePendantPaths {
                n: int(0)?,
                k: int(1)?,
                lengths: list(2)?,
            },
            "random_tree" => FamilySpec::RandomTree { n: int(0)?, seed },
            "random_block_graph" => FamilySpec::RandomBlockGraph {
                blocks: int(0)?,
                max_block: int(1)?,
                seed,
            },
            _ => FamilySpec::RandomThickLeaved { n: int(0)?, seed },
        };
        Ok(spec)
    }
}

/// Edge accumulator that hands out fresh vertex numbers.
#[derive(Default)]
struct Builder {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
}

impl Builder {
    fn vertex(&mut self) -> Vertex {
        self.n += 1;
        self.n - 1
    }

    fn edge(&mut self, u: Vertex, v: Vertex) {
        self.edges.push((u, v));
    }

    fn clique_on(&mut self, vs: &[Vertex]) {
        for (i, &u) in vs.iter().enumerate() {
            for &v in &vs[i + 1..] {
                self.edge(u, v);
            }
        }
    }

    /// Path of `len` new edges hanging from `from`; returns its far end.
    fn tail(&mut self, from: Vertex, len: usize) -> Vertex {
        let mut cur = from;
        for _ in 0..len {
            let next = self.vertex();
            self.edge(cur, next);
            cur = next;
        }
        cur
    }

    fn finish(self) -> Result<Graph> {
        Graph::new(self.n, self.edges)
    }
}

pub fn generate(spec: &FamilySpec) -> Result<Graph> {
    let bad = |msg: &str| Err(Error::BadParameters(format!("{}: {msg}", spec.name())));
    let mut b = Builder::default();
    match spec {
        FamilySpec::Path { n } => {
            if *n == 0 {
                return bad("n ≥ 1");
            }
            let start = b.vertex();
            b.tail(start, n - 1);
        }
        FamilySpec::Cycle { n } => {
            if *n < 3 {
                return bad("n ≥ 3");
            }
            let start = b.vertex();
            let end = b.tail(start, n - 1);
            b.edge(end, start);
        }
        FamilySpec::Complete { n } => {
            if *n == 0 {
                return bad("n ≥ 1");
            }
            let vs: Vec<Vertex> = (0..*n).map(|_| b.vertex()).collect();
            b.clique_on(&vs);
        }
        FamilySpec::Star { leaves } => {
            if *leaves == 0 {
                return bad("at least one leaf");
            }
            let hub = b.vertex();
            for _ in 0..*leaves {
                b.tail(hub, 1);
            }
        }
        FamilySpec::ChainGk { k } => {
            if *k == 0 {
                return bad("k ≥ 1");
            }
            return generate(&FamilySpec::ChainEvenCycles {
                lengths: vec![4; *k],
            });
        }
        FamilySpec::ChainEvenCycles { lengths } => {
            if lengths.is_empty() || lengths.iter().any(|&l| l < 4 || l % 2 == 1) {
                return bad("at least one cycle, every length even and ≥ 4");
            }
            let mut joint = b.vertex();
            for &len in lengths {
                let half = len / 2;
                let far = b.tail(joint, half);
                let back = b.tail(far, half - 1);
                b.edge(back, joint);
                joint = far;
            }
        }
        FamilySpec::CliquePendantPaths { n, k, lengths } => {
            if *n < 2 || k > n || lengths.len() != *k || lengths.contains(&0) {
                return bad("n ≥ 2, k ≤ n, k path lengths each ≥ 1");
            }
            let vs: Vec<Vertex> = (0..*n).map(|_| b.vertex()).collect();
            b.clique_on(&vs);
            for (i, &len) in lengths.iter().enumerate() {
                b.tail(vs[i], len);
            }
        }
        FamilySpec::RandomTree { n, seed } => {
            if *n == 0 {
                return bad("n ≥ 1");
            }
            random_tree(&mut b, *n, &mut SeededRng::new(*seed));
        }
        FamilySpec::RandomBlockGraph {
            blocks,
            max_block,
            seed,
        } => {
            if *blocks == 0 || *max_block < 2 {
                return bad("blocks ≥ 1, max_block ≥ 2");
            }
            let mut rng = SeededRng::new(*seed);
            let first = b.vertex();
            for i in 0..*blocks {
                let order = if *max_block == 2 || rng.coin() {
                    2
                } else {
                    rng.range(3, *max_block)
                };
                let anchor = if i == 0 {
                    first
                } else {
                    rng.below(b.n as u64) as Vertex
                };
                let mut vs = vec![anchor];
                vs.extend((1..order).map(|_| b.vertex()));
                b.clique_on(&vs);
                if b.n > MAX_VERTICES {
                    return bad("graph exceeds the vertex cap");
                }
            }
        }
        FamilySpec::RandomThickLeaved { n, seed } => {
            if *n < 2 {
                return bad("n ≥ 2");
            }
            let mut rng = SeededRng::new(*seed);
            random_tree(&mut b, *n, &mut rng);
            let mut degree = vec![0usize; b.n];
            for &(u, v) in &b.edges {
                degree[u] += 1;
                degree[v] += 1;
            }
            for leaf in (0..*n).filter(|&v| degree[v] == 1) {
                if rng.coin() {
                    let order = rng.range(2, 6);
                    let mut vs = vec![leaf];
                    vs.extend((1..order).map(|_| b.vertex()));
                    b.clique_on(&vs);
                }
            }
        }
    }
    if b.n > MAX_VERTICES {
        return bad("graph exceeds the vertex cap");
    }
    b.finish()
}

fn random_tree(b: &mut Builder, n: usize, rng: &mut SeededRng) {
    b.vertex();
    for i in 1..n {
        let parent = rng.below(i as u64) as Vertex;
        let v = b.vertex();
        b.edge(parent, v);
    }
}
