//! Acceptance suite. Runs without the libtest harness so that one PASS/FAIL
//! line per criterion is always printed; exits nonzero if any fails.

use std::process::ExitCode;
use std::time::Instant;

use edgegp::blocks::decompose_blocks;
use edgegp::classes::{
    block_bounds, gpe_auto, gpe_fastpath, in_family_g1, in_family_g2, is_path, is_thick_leaved,
    is_tree,
};
use edgegp::distance::apsp;
use edgegp::enumerate::{enumerate_connected, sample_connected};
use edgegp::generate::{generate, FamilySpec, SeededRng};
use edgegp::geodesic::{build_conflicts, conflicts_by_enumeration, is_general_position};
use edgegp::graph::choose2;
use edgegp::graph6::{parse_graph6, write_graph6};
use edgegp::iso::are_isomorphic;
use edgegp::named;
use edgegp::reduce::reduce;
use edgegp::solver::{certify, gpe_bruteforce, gpe_exact, BRUTEFORCE_MAX_EDGES};
use edgegp::Graph;

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

/// A connected graph with its exact value, shared by the n ≤ 6 sweeps.
struct Solved {
    graph: Graph,
    gpe: usize,
}

fn solve(g: &Graph) -> Result<usize, String> {
    if g.edge_count() == 0 {
        return Ok(0);
    }
    let r = gpe_exact(g).map_err(|e| e.to_string())?;
    certify(g, &r).map_err(|e| format!("{}: {e}", write_graph6(g)))?;
    Ok(r.value)
}

fn small_sweep() -> Result<Vec<Solved>, String> {
    let mut out = Vec::new();
    for n in 1..=6 {
        for graph in enumerate_connected(n).map_err(|e| e.to_string())? {
            let gpe = solve(&graph)?;
            out.push(Solved { graph, gpe });
        }
    }
    Ok(out)
}

fn oracle_equivalence() -> Outcome {
    let mut graphs = Vec::new();
    for n in 1..=5 {
        graphs.extend(enumerate_connected(n).unwrap());
    }
    let exhaustive = graphs.len();
    graphs.extend(sample_connected(6, 5000, 6).unwrap());
    graphs.extend(sample_connected(7, 5000, 7).unwrap());
    for g in graphs.iter().filter(|g| g.edge_count() > 0) {
        let exact = solve(g)?;
        let brute = gpe_bruteforce(g).map_err(|e| e.to_string())?;
        ensure!(
            exact == brute.value,
            "{}: exact {exact}, bruteforce {}",
            write_graph6(g),
            brute.value
        );
    }
    Ok(format!(
        "{exhaustive} exhaustive (n≤5) + 5000 at n=6 + 5000 at n=7 agree"
    ))
}

fn cycles_and_trees() -> Outcome {
    for n in 3..=12 {
        let c = generate(&FamilySpec::Cycle { n }).unwrap();
        let want = if n <= 5 { n } else { 4 };
        let exact = solve(&c)?;
        let auto = gpe_auto(&c).unwrap().value;
        ensure!(
            exact == want && auto == want,
            "C{n}: exact {exact}, auto {auto}, want {want}"
        );
    }
    let mut rng = SeededRng::new(2);
    let mut solver_checked = 0;
    for _ in 0..200 {
        let t = generate(&FamilySpec::RandomTree {
            n: rng.range(3, 20),
            seed: rng.next_u64(),
        })
        .unwrap();
        let leaves = t.leaves().len();
        let fast = gpe_fastpath(&t).unwrap().map(|f| f.value);
        ensure!(
            fast == Some(leaves),
            "{}: fastpath {fast:?}, leaves {leaves}",
            write_graph6(&t)
        );
        if t.edge_count() <= BRUTEFORCE_MAX_EDGES {
            let via_reduction = solve(&reduce(&t).unwrap())?;
            let direct = solve(&t)?;
            ensure!(
                via_reduction == leaves && direct == leaves,
                "{}: reduced {via_reduction}, direct {direct}, leaves {leaves}",
                write_graph6(&t)
            );
            solver_checked += 1;
        }
    }
    Ok(format!(
        "C3..C12 match; 200 random trees, {solver_checked} also solved exactly"
    ))
}

fn diameter_two(sweep: &[Solved]) -> Outcome {
    for s in sweep {
        let small = apsp(&s.graph).diameter().is_some_and(|d| d <= 2);
        ensure!(
            (s.gpe == s.graph.edge_count()) == small,
            "{}: gpe {}, m {}, diameter ≤ 2 is {small}",
            write_graph6(&s.graph),
            s.gpe,
            s.graph.edge_count()
        );
    }
    Ok(format!("{} graphs, n ≤ 6", sweep.len()))
}

fn m_minus_one(sweep: &[Solved]) -> Outcome {
    let mut members = 0;
    for s in sweep.iter().filter(|s| s.graph.vertex_count() >= 4) {
        let g = &s.graph;
        let g1 = in_family_g1(g).unwrap();
        let g2 = in_family_g2(g).unwrap();
        if let Some(w) = &g1 {
            ensure!(
                are_isomorphic(&w.rebuild(g).unwrap(), g),
                "{}: G1 witness does not rebuild",
                write_graph6(g)
            );
        }
        if let Some(w) = &g2 {
            ensure!(
                are_isomorphic(&w.rebuild(g).unwrap(), g),
                "{}: G2 witness does not rebuild",
                write_graph6(g)
            );
        }
        let member = g1.is_some() || g2.is_some();
        ensure!(
            member == (s.gpe + 1 == g.edge_count()),
            "{}: gpe {}, m {}, witness {member}",
            write_graph6(g),
            s.gpe,
            g.edge_count()
        );
        members += usize::from(member);
    }
    let z1 = named::z1();
    ensure!(z1.edge_count() == 16, "Z1 has {} edges", z1.edge_count());
    let (z1_exact, z1_brute) = (solve(&z1)?, gpe_bruteforce(&z1).unwrap().value);
    ensure!(
        z1_exact == 15 && z1_brute == 15,
        "Z1: exact {z1_exact}, bruteforce {z1_brute}"
    );
    ensure!(in_family_g1(&z1).unwrap().is_some(), "Z1 has no G1 witness");
    let z2 = named::z2();
    let z2_exact = solve(&z2)?;
    ensure!(
        z2_exact + 1 == z2.edge_count(),
        "Z2: gpe {z2_exact}, m {}",
        z2.edge_count()
    );
    ensure!(in_family_g2(&z2).unwrap().is_some(), "Z2 has no G2 witness");
    Ok(format!(
        "{members} members among n=4..6; Z1 = 15, Z2 = {z2_exact} = m − 1"
    ))
}

fn two_and_three(sweep: &[Solved]) -> Outcome {
    let mut checked = 0;
    for s in sweep.iter().filter(|s| s.graph.edge_count() >= 2) {
        let g = &s.graph;
        ensure!(
            (s.gpe == 2) == is_path(g),
            "{}: gpe {}, path {}",
            write_graph6(g),
            s.gpe,
            is_path(g)
        );
        let shape =
            (g.vertex_count() == 3 && g.edge_count() == 3) || (is_tree(g) && g.leaves().len() == 3);
        ensure!(
            (s.gpe == 3) == shape,
            "{}: gpe {}, K3 or 3-leaf tree {shape}",
            write_graph6(g),
            s.gpe
        );
        checked += 1;
    }
    Ok(format!("{checked} graphs with m ≥ 2"))
}

fn four_is_bipartite(sweep: &[Solved]) -> Outcome {
    let mut fours = 0;
    for s in sweep.iter().filter(|s| s.gpe == 4) {
        let (delta, bip) = (s.graph.max_degree(), s.graph.is_bipartite());
        ensure!(
            delta <= 4 && (delta < 4 || bip),
            "{}: Δ {delta}, bipartite {bip}",
            write_graph6(&s.graph)
        );
        fours += 1;
    }
    Ok(format!("{fours} graphs with gpe = 4"))
}

fn figure_values() -> Outcome {
    for k in 1..=5 {
        let g = named::chain_gk(k);
        let (exact, brute) = (solve(&g)?, gpe_bruteforce(&g).unwrap().value);
        ensure!(
            exact == 4 && brute == 4,
            "G{k}: exact {exact}, bruteforce {brute}"
        );
    }
    ensure!(
        are_isomorphic(&named::chain_gk(5), &named::g5_drawing()),
        "G5 differs from its drawing"
    );
    let gp = solve(&named::g_prime())?;
    ensure!(gp == 9, "G′: {gp}");
    let gpp = named::g_double_prime();
    let value = solve(&gpp)?;
    let bounds = block_bounds(&gpp).unwrap();
    ensure!(value == 7, "G″: {value}");
    ensure!(
        (bounds.s_prime, bounds.upper) == (7, 7),
        "G″ bounds {bounds:?}"
    );
    ensure!(bounds.upper == choose2(4) + 1, "G″ has s ≠ 4");
    let k5_tail = generate(&FamilySpec::CliquePendantPaths {
        n: 5,
        k: 1,
        lengths: vec![3],
    })
    .unwrap();
    let tail = solve(&k5_tail)?;
    ensure!(
        tail == 11 && block_bounds(&k5_tail).unwrap().upper == 11,
        "K5 with a pendant P3: {tail}"
    );
    Ok("G1..G5 = 4, G′ = 9, G″ = 7 with bounds (7, 7), K5 + pendant path = 11".into())
}

fn block_graph_theorems() -> Outcome {
    let start = Instant::now();
    let mut rng = SeededRng::new(8);
    let (mut accepted, mut drawn, mut largest) = (Vec::new(), 0, 0);
    while accepted.len() < 200 {
        drawn += 1;
        let blocks = rng.range(2, 8);
        let g = generate(&FamilySpec::RandomBlockGraph {
            blocks,
            max_block: 5,
            seed: rng.next_u64(),
        })
        .unwrap();
        let r = reduce(&g).unwrap();
        if r.edge_count() <= BRUTEFORCE_MAX_EDGES {
            largest = largest.max(g.edge_count());
            accepted.push((g, r));
        }
    }
    for (g, r) in &accepted {
        let code = write_graph6(g);
        let gpe = solve(g)?;
        let b = block_bounds(g).unwrap();
        ensure!(
            b.s_prime <= gpe && gpe <= b.upper,
            "{code}: {} ≤ {gpe} ≤ {} fails",
            b.s_prime,
            b.upper
        );
        let reduced = solve(r)?;
        let reduced_brute = gpe_bruteforce(r).unwrap().value;
        ensure!(
            gpe == reduced && reduced == reduced_brute,
            "{code}: G {gpe}, R(G) {reduced} / {reduced_brute}"
        );
    }
    let mut rng = SeededRng::new(9);
    let mut thick = 0;
    for _ in 0..100 {
        let g = generate(&FamilySpec::RandomThickLeaved {
            n: rng.range(2, 8),
            seed: rng.next_u64(),
        })
        .unwrap();
        let blocks = decompose_blocks(&g).unwrap();
        ensure!(
            is_thick_leaved(&blocks, &g),
            "{}: not recognized as thick-leaved",
            write_graph6(&g)
        );
        let formula: usize = blocks
            .simplicial_block_sizes()
            .iter()
            .map(|&(b, _)| choose2(b))
            .sum();
        let gpe = solve(&g)?;
        ensure!(
            gpe == formula,
            "{}: gpe {gpe}, formula {formula}",
            write_graph6(&g)
        );
        thick += usize::from(blocks.blocks.iter().any(|b| b.thick));
    }
    let secs = start.elapsed().as_secs_f64();
    ensure!(secs < 180.0, "took {secs:.1}s");
    Ok(format!(
        "200 block graphs ({drawn} drawn, up to {largest} edges before reduction); 100 thick-leaved trees ({thick} with a thick block); {secs:.1}s"
    ))
}

fn property_suites(sweep: &[Solved]) -> Outcome {
    let mut subsets = 0;
    for s in sweep
        .iter()
        .filter(|s| s.graph.vertex_count() <= 5 && s.graph.edge_count() > 0)
    {
        let g = &s.graph;
        let w = gpe_exact(g).unwrap().witness;
        for mask in 0u32..1 << w.len() {
            let y: Vec<usize> = (0..w.len())
                .filter(|&i| mask >> i & 1 == 1)
                .map(|i| w[i])
                .collect();
            ensure!(
                is_general_position(g, &y).unwrap(),
                "{}: subset {y:?} of a witness conflicts",
                write_graph6(g)
            );
            subsets += 1;
        }
        let mut by_criterion: Vec<[usize; 3]> = build_conflicts(g)
            .unwrap()
            .triples()
            .iter()
            .map(|t| t.ids())
            .collect();
        by_criterion.sort_unstable();
        ensure!(
            by_criterion == conflicts_by_enumeration(g),
            "{}: triple test disagrees with listing",
            write_graph6(g)
        );
    }
    // every solver result in the sweeps above went through certify
    let mut rng = SeededRng::new(10);
    for _ in 0..300 {
        let g = generate(&FamilySpec::RandomBlockGraph {
            blocks: rng.range(1, 9),
            max_block: 5,
            seed: rng.next_u64(),
        })
        .unwrap();
        let r = reduce(&g).unwrap();
        ensure!(
            are_isomorphic(&reduce(&r).unwrap(), &r),
            "{}: reduction not idempotent",
            write_graph6(&g)
        );
        let auto = gpe_auto(&g).unwrap();
        ensure!(
            certify(&g, &auto).is_ok(),
            "{}: fastpath witness fails certify",
            write_graph6(&g)
        );
    }
    for s in sweep {
        let code = write_graph6(&s.graph);
        let back = parse_graph6(&code).unwrap();
        ensure!(
            write_graph6(&back) == code && back.edge_count() == s.graph.edge_count(),
            "{code}: round trip"
        );
    }
    Ok(format!(
        "{subsets} witness subsets, 300 reductions, {} graph6 round trips",
        sweep.len()
    ))
}

fn main() -> ExitCode {
    let start = Instant::now();
    let sweep = small_sweep();
    let with_sweep = |f: fn(&[Solved]) -> Outcome| -> Outcome {
        match &sweep {
            Ok(s) => f(s),
            Err(e) => Err(format!("n ≤ 6 sweep failed: {e}")),
        }
    };
    let results: Vec<(u32, &str, Outcome)> = vec![
        (1, "exact solver equals brute force", oracle_equivalence()),
        (2, "cycle and tree values", cycles_and_trees()),
        (3, "gpe = m iff diameter ≤ 2", with_sweep(diameter_two)),
        (
            4,
            "gpe = m − 1 iff a G1 or G2 witness exists",
            with_sweep(m_minus_one),
        ),
        (
            5,
            "gpe = 2 and gpe = 3 characterizations",
            with_sweep(two_and_three),
        ),
        (
            6,
            "gpe = 4 forces Δ ≤ 4, bipartite at Δ = 4",
            with_sweep(four_is_bipartite),
        ),
        (7, "figure graphs", figure_values()),
        (
            8,
            "block graph bounds, reduction, thick-leaved formula",
            block_graph_theorems(),
        ),
        (9, "property suites", with_sweep(property_suites)),
    ];
    let mut failed = 0;
    for (id, name, outcome) in &results {
        match outcome {
            Ok(detail) => println!("criterion {id}: PASS  {name}: {detail}"),
            Err(reason) => {
                failed += 1;
                println!("criterion {id}: FAIL  {name}: {reason}");
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed in {:.1}s",
        results.len() - failed,
        start.elapsed().as_secs_f64()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
