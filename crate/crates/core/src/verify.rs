//! Sweeps that check the closed-form results against the exact solver.
//!
//! Every graph in scope is solved by [`gpe_exact`], certified, compared with
//! [`gpe_bruteforce`] when it is small enough and with [`gpe_fastpath`]
//! whenever a closed form applies; the theorem's own predicate is then
//! evaluated on top of that ground truth.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::blocks::decompose_blocks;
use crate::classes::{
    block_bounds, gpe_fastpath, in_family_g1, in_family_g2, is_path, is_thick_leaved, is_tree,
    necessary_gpe4_check,
};
use crate::distance::apsp;
use crate::enumerate::{enumerate_connected, sample_connected};
use crate::error::{Error, Result};
use crate::generate::{generate, FamilySpec, SeededRng};
use crate::graph::{choose2, Graph};
use crate::graph6::write_graph6;
use crate::iso::are_isomorphic;
use crate::reduce::{reduce_tracked, ReductionOrder};
use crate::solver::{certify, gpe_bruteforce, gpe_exact, BRUTEFORCE_MAX_EDGES};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Theorem {
    /// `gp_e = m` exactly when the diameter is at most 2.
    Diam2,
    /// `gp_e = m − 1` exactly for the two families with a special or central edge.
    M1,
    /// `gp_e = 2` exactly for paths.
    Gpe2,
    /// `gp_e = 3` exactly for `K₃` and trees with three leaves.
    Gpe3,
    /// `gp_e = 4` forces `Δ ≤ 4`, and bipartiteness when `Δ = 4`.
    Gpe4Nec,
    /// `s′ ≤ gp_e ≤ C(s,2) + 1` on block graphs.
    BlockBounds,
    /// The path reduction preserves `gp_e` on block graphs.
    Reduction,
    /// Thick-leaved trees have `gp_e` equal to the summed simplicial block sizes `C(b,2)`.
    ThickLeaved,
    /// Cycles, paths, stars and trees.
    SmallClasses,
    /// Branch and bound against the brute-force oracle.
    Oracle,
}

impl Theorem {
    pub const ALL: [Theorem; 10] = [
        Theorem::Diam2,
        Theorem::M1,
        Theorem::Gpe2,
        Theorem::Gpe3,
        Theorem::Gpe4Nec,
        Theorem::BlockBounds,
        Theorem::Reduction,
        Theorem::ThickLeaved,
        Theorem::SmallClasses,
        Theorem::Oracle,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Theorem::Diam2 => "diam2",
            Theorem::M1 => "m1",
            Theorem::Gpe2 => "gpe2",
            Theorem::Gpe3 => "gpe3",
            Theorem::Gpe4Nec => "gpe4nec",
            Theorem::BlockBounds => "blockbounds",
            Theorem::Reduction => "reduction",
            Theorem::ThickLeaved => "thickleaved",
            Theorem::SmallClasses => "smallclasses",
            Theorem::Oracle => "oracle",
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Theorem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Theorem::ALL
            .into_iter()
            .find(|t| t.tag() == s)
            .ok_or_else(|| Error::UnknownTheorem(s.to_string()))
    }
}

impl Serialize for Theorem {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.tag())
    }
}

/// Which graphs a sweep covers.
#[derive(Clone, Debug)]
pub enum Scope {
    /// The theorem's documented default corpus.
    Default,
    /// Every connected labeled graph with `lo ≤ n ≤ hi`.
    Exhaustive { lo: usize, hi: usize },
    /// `count` seeded uniform connected graphs for each `lo ≤ n ≤ hi`.
    Sampled { lo: usize, hi: usize, count: usize },
    /// Graphs supplied by the caller, e.g. read from a graph6 file.
    Corpus { name: String, graphs: Vec<Graph> },
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    /// Worker threads; `None` uses the available parallelism.
    pub jobs: Option<usize>,
    pub seed: u64,
    /// Graphs with at most this many edges are also solved by brute force.
    pub oracle_max_edges: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            jobs: None,
            seed: 0,
            oracle_max_edges: BRUTEFORCE_MAX_EDGES,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub graph6: String,
    pub expected: String,
    pub got: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub theorem: Theorem,
    pub scope: String,
    pub checked: usize,
    /// Graphs outside the theorem's hypotheses.
    pub skipped: usize,
    pub failures: Vec<Failure>,
    pub wall_time_secs: f64,
    pub passed: bool,
}

enum Outcome {
    Checked,
    Skipped,
    Failed { expected: String, got: String },
}

fn fail(expected: impl fmt::Display, got: impl fmt::Display) -> Outcome {
    Outcome::Failed {
        expected: expected.to_string(),
        got: got.to_string(),
    }
}

fn expect<T: PartialEq + fmt::Display>(expected: T, got: T) -> Outcome {
    if expected == got {
        Outcome::Checked
    } else {
        fail(expected, got)
    }
}

fn random_block_graphs(count: usize, seed: u64) -> Result<Vec<Graph>> {
    let mut rng = SeededRng::new(seed);
    (0..count)
        .map(|_| {
            let blocks = rng.range(1, 7);
            generate(&FamilySpec::RandomBlockGraph {
                blocks,
                max_block: 5,
                seed: rng.next_u64(),
            })
        })
        .collect()
}

fn random_thick_leaved(count: usize, seed: u64) -> Result<Vec<Graph>> {
    let mut rng = SeededRng::new(seed);
    (0..count)
        .map(|_| {
            generate(&FamilySpec::RandomThickLeaved {
                n: rng.range(2, 8),
                seed: rng.next_u64(),
            })
        })
        .collect()
}

fn small_classes(seed: u64) -> Result<Vec<Graph>> {
    let mut graphs = Vec::new();
    for n in 3..=12 {
        graphs.push(generate(&FamilySpec::Cycle { n })?);
    }
    for n in 2..=12 {
        graphs.push(generate(&FamilySpec::Path { n })?);
    }
    for leaves in 1..=12 {
        graphs.push(generate(&FamilySpec::Star { leaves })?);
    }
    let mut rng = SeededRng::new(seed);
    for _ in 0..200 {
        graphs.push(generate(&FamilySpec::RandomTree {
            n: rng.range(2, 20),
            seed: rng.next_u64(),
        })?);
    }
    Ok(graphs)
}

/// Default corpus of each theorem, with its description.
fn default_corpus(theorem: Theorem, seed: u64) -> Result<(String, Vec<Graph>)> {
    let exhaustive = |lo: usize, hi: usize| -> Result<Vec<Graph>> {
        let mut all = Vec::new();
        for n in lo..=hi {
            all.extend(enumerate_connected(n)?);
        }
        Ok(all)
    };
    Ok(match theorem {
        Theorem::Diam2 | Theorem::Gpe2 | Theorem::Gpe3 | Theorem::Gpe4Nec => {
            ("exhaustive n=1..6".into(), exhaustive(1, 6)?)
        }
        Theorem::M1 => ("exhaustive n=4..6".into(), exhaustive(4, 6)?),
        Theorem::Oracle => {
            let mut graphs = exhaustive(1, 5)?;
            graphs.extend(sample_connected(6, 5000, seed)?);
            graphs.extend(sample_connected(7, 5000, seed.wrapping_add(1))?);
            (
                "exhaustive n=1..5, 5000 samples each at n=6,7".into(),
                graphs,
            )
        }
        Theorem::BlockBounds | Theorem::Reduction => (
            "200 random block graphs".into(),
            random_block_graphs(200, seed)?,
        ),
        Theorem::ThickLeaved => (
            "100 random thick-leaved trees".into(),
            random_thick_leaved(100, seed)?,
        ),
        Theorem::SmallClasses => (
            "cycles n=3..12, paths n=2..12, stars, 200 random trees n≤20".into(),
            small_classes(seed)?,
        ),
    })
}

fn resolve(theorem: Theorem, scope: Scope, seed: u64) -> Result<(String, Vec<Graph>)> {
    match scope {
        Scope::Default => default_corpus(theorem, seed),
        Scope::Exhaustive { lo, hi } => {
            let mut graphs = Vec::new();
            for n in lo..=hi {
                graphs.extend(enumerate_connected(n)?);
            }
            Ok((format!("exhaustive n={lo}..{hi}"), graphs))
        }
        Scope::Sampled { lo, hi, count } => {
            let mut graphs = Vec::new();
            for n in lo..=hi {
                graphs.extend(sample_connected(n, count, seed.wrapping_add(n as u64))?);
            }
            Ok((
                format!("{count} samples each at n={lo}..{hi}, seed {seed}"),
                graphs,
            ))
        }
        Scope::Corpus { name, graphs } => Ok((name, graphs)),
    }
}

/// Runs `theorem` over `scope`. Results do not depend on the worker count.
pub fn verify(
    theorem: Theorem,
    scope: Scope,
    options: &VerifyOptions,
) -> Result<VerificationReport> {
    let start = Instant::now();
    let (scope, graphs) = resolve(theorem, scope, options.seed)?;
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(jobs) = options.jobs {
        pool = pool.num_threads(jobs);
    }
    let pool = pool
        .build()
        .map_err(|e| Error::BadParameters(e.to_string()))?;
    let outcomes: Vec<Outcome> = pool.install(|| {
        graphs
            .par_iter()
            .map(|g| check(theorem, g, options.oracle_max_edges))
            .collect()
    });

    let (mut checked, mut skipped, mut failures) = (0, 0, Vec::new());
    for (g, outcome) in graphs.iter().zip(outcomes) {
        match outcome {
            Outcome::Checked => checked += 1,
            Outcome::Skipped => skipped += 1,
            Outcome::Failed { expected, got } => {
                checked += 1;
                failures.push(Failure {
                    graph6: write_graph6(g),
                    expected,
                    got,
                });
            }
        }
    }
    Ok(VerificationReport {
        theorem,
        scope,
        checked,
        skipped,
        passed: failures.is_empty(),
        failures,
        wall_time_secs: start.elapsed().as_secs_f64(),
    })
}

/// Checks one graph; public so that a failure can be replayed from its
/// graph6 code alone.
pub fn check_graph(theorem: Theorem, graph: &Graph, oracle_max_edges: usize) -> Option<Failure> {
    match check(theorem, graph, oracle_max_edges) {
        Outcome::Failed { expected, got } => Some(Failure {
            graph6: write_graph6(graph),
            expected,
            got,
        }),
        _ => None,
    }
}

fn check(theorem: Theorem, g: &Graph, oracle_max_edges: usize) -> Outcome {
    if !g.is_connected() || g.edge_count() == 0 {
        return Outcome::Skipped;
    }
    let exact = match gpe_exact(g) {
        Ok(r) => r,
        Err(e) => return fail("a solution", e),
    };
    if let Err(reason) = certify(g, &exact) {
        return fail("certified witness", reason);
    }
    let gpe = exact.value;
    if g.edge_count() <= oracle_max_edges.min(BRUTEFORCE_MAX_EDGES) {
        match gpe_bruteforce(g) {
            Ok(brute) if brute.value != gpe => {
                return fail(
                    format!("bruteforce gpe={}", brute.value),
                    format!("exact gpe={gpe}"),
                )
            }
            Ok(_) => {}
            Err(e) => return fail("bruteforce result", e),
        }
    }
    match gpe_fastpath(g) {
        Ok(Some(fast)) if fast.value != gpe => {
            return fail(
                format!("gpe={gpe}"),
                format!("fastpath:{} gpe={}", fast.rule.tag(), fast.value),
            )
        }
        Ok(_) => {}
        Err(e) => return fail("fastpath result", e),
    }

    let (n, m) = (g.vertex_count(), g.edge_count());
    match theorem {
        Theorem::Oracle => Outcome::Checked,
        Theorem::Diam2 => {
            let small = apsp(g).diameter().is_some_and(|d| d <= 2);
            expect(small, gpe == m)
        }
        Theorem::M1 => {
            if n < 4 {
                return Outcome::Skipped;
            }
            let (g1, g2) = match (in_family_g1(g), in_family_g2(g)) {
                (Ok(a), Ok(b)) => (a, b),
                (Err(e), _) | (_, Err(e)) => return fail("recognizer result", e),
            };
            if let Some(w) = &g1 {
                if !w.rebuild(g).is_ok_and(|h| are_isomorphic(&h, g)) {
                    return fail("G1 witness rebuilds the graph", format!("{w:?}"));
                }
            }
            if let Some(w) = &g2 {
                if !w.rebuild(g).is_ok_and(|h| are_isomorphic(&h, g)) {
                    return fail("G2 witness rebuilds the graph", format!("{w:?}"));
                }
            }
            let member = g1.is_some() || g2.is_some();
            if member == (gpe + 1 == m) {
                Outcome::Checked
            } else {
                fail(format!("gpe=m-1 is {member}"), format!("gpe={gpe}, m={m}"))
            }
        }
        Theorem::Gpe2 => {
            if m < 2 {
                return Outcome::Skipped;
            }
            expect(is_path(g), gpe == 2)
        }
        Theorem::Gpe3 => {
            if m < 2 {
                return Outcome::Skipped;
            }
            let shape = (n == 3 && m == 3) || (is_tree(g) && g.leaves().len() == 3);
            expect(shape, gpe == 3)
        }
        Theorem::Gpe4Nec => {
            if necessary_gpe4_check(g, gpe) {
                Outcome::Checked
            } else {
                fail(
                    "Δ<4, or Δ=4 and bipartite",
                    format!("Δ={}, bipartite={}", g.max_degree(), g.is_bipartite()),
                )
            }
        }
        Theorem::BlockBounds => match block_bounds(g) {
            Err(_) => Outcome::Skipped,
            Ok(b) if b.s_prime <= gpe && gpe <= b.upper => Outcome::Checked,
            Ok(b) => fail(
                format!("{} ≤ gpe ≤ {}", b.s_prime, b.upper),
                format!("gpe={gpe}"),
            ),
        },
        Theorem::Reduction => {
            let Ok(first) = reduce_tracked(g, ReductionOrder::PendantFirst) else {
                return Outcome::Skipped;
            };
            let reduced = match gpe_exact(&first.graph) {
                Ok(r) => r.value,
                Err(e) => return fail(format!("gpe={gpe}"), e),
            };
            if reduced != gpe {
                return fail(format!("gpe(R(G))={gpe}"), format!("gpe(R(G))={reduced}"));
            }
            match reduce_tracked(g, ReductionOrder::InternalFirstReversed) {
                Ok(other) if are_isomorphic(&other.graph, &first.graph) => Outcome::Checked,
                _ => fail("reduction independent of order", "orders disagree"),
            }
        }
        Theorem::ThickLeaved => {
            let Ok(blocks) = decompose_blocks(g) else {
                return Outcome::Skipped;
            };
            if !is_thick_leaved(&blocks, g) {
                return Outcome::Skipped;
            }
            let formula: usize = blocks
                .simplicial_block_sizes()
                .iter()
                .map(|&(b, _)| choose2(b))
                .sum();
            expect(formula, gpe)
        }
        Theorem::SmallClasses => {
            let expected = if n == m && g.vertices().all(|v| g.degree(v) == 2) {
                if n <= 5 {
                    n
                } else {
                    4
                }
            } else if is_tree(g) {
                g.pendant_edges().len()
            } else {
                return Outcome::Skipped;
            };
            expect(expected, gpe)
        }
    }
}
