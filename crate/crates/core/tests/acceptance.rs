//! Acceptance criteria, one PASS/FAIL line each. Runs as a plain binary so
//! every criterion reports even when an earlier one fails.

mod common;

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use strongrecolor_core::classifier::{brute_force_connected, weight_pattern};
use strongrecolor_core::graph::{make_cycle, make_i, make_path, make_psi};
use strongrecolor_core::trees::nonisomorphic_trees;
use strongrecolor_core::{
    build, classify_cycle, classify_path, classify_tree, cycle_weight, globally_frozen_vertices, parse_colouring,
    validate_schedule, verify_certificate, Cap, Certifier, Colouring, Graph, Mode, ReconfigGraph, Schedule,
};

type Outcome = Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn cap() -> Cap {
    Cap::default()
}

fn strong(g: &Graph, k: usize) -> ReconfigGraph {
    build(g, k, Mode::Strong, cap()).expect("within cap")
}

fn counts_p4_p5() -> Outcome {
    let p4 = strong(&make_path(4).unwrap(), 3);
    ensure!(p4.state_count() == 18, "S_3(P_4) has {} states", p4.state_count());
    ensure!(!p4.is_connected(), "S_3(P_4) is connected");
    let p5 = strong(&make_path(5).unwrap(), 3);
    ensure!(p5.state_count() == 42, "S_3(P_5) has {} states", p5.state_count());
    ensure!(p5.component_count() == 1, "S_3(P_5) has {} components", p5.component_count());
    Ok(())
}

fn two_colour_paths() -> Outcome {
    for n in 3..=8 {
        let rg = strong(&make_path(n).unwrap(), 2);
        let got = (rg.state_count(), rg.edge_count(), rg.component_count());
        ensure!(got == (2, 0, 2), "S_2(P_{n}): (states, edges, components) = {got:?}");
    }
    Ok(())
}

fn c4_isolated() -> Outcome {
    let rg = strong(&make_cycle(4).unwrap(), 3);
    let got = (rg.state_count(), rg.edge_count(), rg.component_count());
    ensure!(got == (12, 0, 12), "S_3(C_4): (states, edges, components) = {got:?}");
    Ok(())
}

fn c5_six_cycles() -> Outcome {
    let rg = strong(&make_cycle(5).unwrap(), 4);
    ensure!(rg.state_count() == 120, "S_4(C_5) has {} states", rg.state_count());
    let summary = rg.component_summary();
    ensure!(summary.len() == 6, "S_4(C_5) has {} components", summary.len());
    for s in summary {
        ensure!(
            s.size == 20 && s.edges == 20 && s.min_degree == 2 && s.max_degree == 2 && s.is_cycle,
            "component {s:?} is not a 20-cycle"
        );
    }
    Ok(())
}

fn connected_families() -> Outcome {
    let mut cases = vec![(make_cycle(6).unwrap(), 5, "C_6"), (make_path(5).unwrap(), 4, "P_5")];
    for k in 4..=6 {
        cases.push((make_path(k + 1).unwrap(), k, "P_{k+1}"));
    }
    for (g, k, name) in cases {
        let rg = strong(&g, k);
        ensure!(rg.state_count() > 0 && rg.is_connected(), "S_{k}({name}) on {} vertices is disconnected", g.n());
    }
    Ok(())
}

fn i_graph_counts() -> Outcome {
    let rg = strong(&make_i(), 3);
    ensure!(rg.state_count() == 90, "S_3(I) has {} states", rg.state_count());
    ensure!(rg.is_connected(), "S_3(I) is disconnected");
    // x_2 and x_5 are vertices 1 and 4
    let mut per_pair: BTreeMap<(u8, u8), usize> = BTreeMap::new();
    for c in rg.states() {
        *per_pair.entry((c.get(1), c.get(4))).or_default() += 1;
    }
    ensure!(per_pair.len() == 6, "{} ordered pairs on (x_2, x_5)", per_pair.len());
    ensure!(per_pair.values().all(|&c| c == 15), "pair counts {per_pair:?}");
    Ok(())
}

/// Explicit walks, one colouring per word, vertices in drawing order.
const WALKS: &[(&str, usize, &str)] = &[
    ("P5", 4, "abcda abcdb adcdb adcab cdcab cdbab cdbac adbac adbdc acbdc acbda"),
    ("P5", 4, "abcda cbcda cbada cbadc"),
    ("P5", 4, "abcda dbcda dbcba dacba dacbd bacbd bacad bdcad bdcab"),
    ("P5", 4, "bacad bdcad bdcab"),
    ("P5", 4, "abcad dbcad"),
    ("P5", 4, "abacd dbacd"),
    ("P5", 4, "bacda bacdb"),
    ("P5", 4, "bcada bcadb"),
    ("P6", 5, "cbdeab cadeab cadedb cabedb cabeda cebeda"),
    (
        "C5",
        4,
        "abacd abdcd abdcb acdcb acdab dcdab dcbab dcbac dabac dabdc babdc bacdc bacda bdcda bdcba cdcba cdaba cdabd \
         cbabd cbacd abacd",
    ),
    ("C6", 5, "abacde abecde abecdc abebdc acebdc acebde acabde"),
    (
        "C6",
        5,
        "abacde abecde abecdb adecdb adeceb adbceb adbcec adbaec bdbaec bdeaec bdeabc adeabc adecbc adecbe adacbe",
    ),
    ("C6", 5, "abacde abdcde abdcae dbdcae"),
    ("C6", 5, "abacde cbacde cbaede cbaeda cbceda"),
    ("C6", 5, "abacde dbacde dbacbe dcacbe dcadbe bcadbe bcadae bcbdae"),
    ("C6", 5, "abcade cbcade"),
    ("C6", 5, "abcdae cbcdae"),
    ("C6", 5, "bcadae bcbdae"),
    ("C6", 5, "bcadea bcbdea"),
    (
        "I",
        3,
        "babcba baccba bacaba cacaba cacabc bacabc baccbc caccbc caccba cabcba cabcbc babcbc bababc cababc cababa",
    ),
    ("I", 3, "cbabcb cbabab cbacab abacab acacab acbcab acbcac acbcbc acbabc bcbabc bababc bacabc bacaba bacaca"),
];

fn family(name: &str) -> Graph {
    match name {
        "P5" => make_path(5).unwrap(),
        "P6" => make_path(6).unwrap(),
        "C5" => make_cycle(5).unwrap(),
        "C6" => make_cycle(6).unwrap(),
        "I" => make_i(),
        _ => unreachable!(),
    }
}

fn walk_replay() -> Outcome {
    for (i, &(name, k, text)) in WALKS.iter().enumerate() {
        let g = family(name);
        let walk: Vec<Colouring> = text.split_whitespace().map(|w| parse_colouring(w, k).unwrap()).collect();
        let schedule = Schedule::from_walk(&walk).map_err(|e| format!("walk {i} ({name}): {e}"))?;
        let end = validate_schedule(&g, k, &schedule, Mode::Strong).map_err(|e| format!("walk {i} ({name}): {e}"))?;
        ensure!(&end == walk.last().unwrap(), "walk {i} ({name}) ends at {end}");
    }
    let (_, _, first) = WALKS[0];
    ensure!(first.split_whitespace().count() == 11, "first walk should have 10 steps");
    let (_, _, cycle) = WALKS[9];
    let words: Vec<&str> = cycle.split_whitespace().collect();
    ensure!(words.len() == 21 && words[0] == words[20], "C_5 walk is not a closed 20-step walk");
    Ok(())
}

fn weight_table() -> Outcome {
    for n in 5..=12 {
        let g = make_cycle(n).unwrap();
        let c = Colouring::new(weight_pattern(n), 3).unwrap();
        ensure!(strongrecolor_core::is_strong(&g, &c).unwrap(), "pattern for C_{n} is not strong");
        let w = cycle_weight(&g, &(0..n).collect::<Vec<_>>(), &c).unwrap();
        let expect = match n % 3 {
            0 => n,
            1 => n - 4,
            _ => n - 2,
        } as i64;
        ensure!(w == expect, "W(C_{n}) = {w}, expected {expect}");
    }
    for n in 3..=9 {
        let g = make_cycle(n).unwrap();
        let cycle: Vec<usize> = (0..n).collect();
        let rg = build(&g, 3, Mode::Proper, cap()).unwrap();
        for (a, b) in rg.edges() {
            let (wa, wb) = (cycle_weight(&g, &cycle, &rg.states()[a]), cycle_weight(&g, &cycle, &rg.states()[b]));
            ensure!(wa == wb, "weight changes along an edge of C_3(C_{n})");
        }
    }
    Ok(())
}

fn path_grid() -> impl Iterator<Item = (usize, usize)> {
    (2..=5).flat_map(|k| (k + 1..=8).map(move |n| (n, k)))
}

fn cycle_grid() -> impl Iterator<Item = (usize, usize)> {
    (3..=5).flat_map(|k| (4.max(k + 1)..=8).map(move |n| (n, k)))
}

fn tree_grid() -> impl Iterator<Item = Graph> {
    (4..=8).flat_map(nonisomorphic_trees)
}

fn classifier_grids() -> Outcome {
    for (n, k) in path_grid() {
        let brute = brute_force_connected(&make_path(n).unwrap(), k, cap()).unwrap();
        ensure!(classify_path(n, k).unwrap().connected == brute, "path oracle wrong at n={n}, k={k}");
    }
    for (n, k) in cycle_grid() {
        let brute = brute_force_connected(&make_cycle(n).unwrap(), k, cap()).unwrap();
        ensure!(classify_cycle(n, k).unwrap().connected == brute, "cycle oracle wrong at n={n}, k={k}");
    }
    let mut trees = 0;
    for t in tree_grid() {
        let brute = brute_force_connected(&t, 3, cap()).unwrap();
        ensure!(
            classify_tree(&t).unwrap().connected == brute,
            "tree oracle wrong on {:?}",
            t.edges().collect::<Vec<_>>()
        );
        trees += 1;
    }
    ensure!(trees == 2 + 3 + 6 + 11 + 23, "{trees} tree classes");
    Ok(())
}

/// `S_k` connectivity of every connected graph with at most 7 vertices,
/// keyed by isomorphism class, for `k = 2..=4`.
struct ClosureGrid {
    graphs: Vec<Vec<Graph>>,
    strong: BTreeMap<(usize, common::CanonicalKey), bool>,
}

impl ClosureGrid {
    fn new() -> Self {
        let graphs = common::connected_graphs(7);
        let mut strong = BTreeMap::new();
        for g in graphs.iter().flatten() {
            for k in 2..=4 {
                strong.insert((k, common::key(g)), self::strong(g, k).is_connected());
            }
        }
        ClosureGrid { graphs, strong }
    }

    fn connected(&self, g: &Graph, k: usize) -> bool {
        self.strong[&(k, common::key(g))]
    }

    /// Base graphs satisfying the closure hypotheses: room for one more
    /// vertex, `n >= k + 1`, and `S_k` non-empty and connected.
    fn bases(&self, k: usize) -> impl Iterator<Item = &Graph> {
        self.graphs[..=6].iter().flatten().filter(move |g| g.n() > k && self.connected(g, k))
    }
}

fn subsets(items: &[usize]) -> impl Iterator<Item = Vec<usize>> + '_ {
    (1u32..1 << items.len()).map(move |m| (0..items.len()).filter(|&i| m >> i & 1 == 1).map(|i| items[i]).collect())
}

fn closure_properties(grid: &ClosureGrid) -> Outcome {
    let mut checked = [0usize; 3];
    for g in grid.graphs.iter().flatten() {
        for k in 2..=4 {
            if grid.connected(g, k) {
                ensure!(
                    build(g, k, Mode::Proper, cap()).unwrap().is_connected(),
                    "S_{k} connected but C_{k} not on {:?}",
                    g.edges().collect::<Vec<_>>()
                );
                checked[0] += 1;
            }
        }
    }
    for k in 2..=4 {
        for g in grid.bases(k) {
            let all: Vec<usize> = (0..g.n()).collect();
            for nbrs in subsets(&all).filter(|s| s.len() <= k - 2) {
                let h = g.add_vertex(&nbrs).unwrap();
                ensure!(
                    grid.connected(&h, k),
                    "low-degree attachment {nbrs:?} to {:?} breaks S_{k}",
                    g.edges().collect::<Vec<_>>()
                );
                checked[1] += 1;
            }
            for v in 0..g.n() {
                for nbrs in subsets(g.neighbours(v)) {
                    let h = g.add_vertex(&nbrs).unwrap();
                    ensure!(
                        grid.connected(&h, k),
                        "twin-like attachment {nbrs:?} to {:?} breaks S_{k}",
                        g.edges().collect::<Vec<_>>()
                    );
                    checked[2] += 1;
                }
            }
        }
    }
    ensure!(checked.iter().all(|&c| c > 0), "vacuous grid: {checked:?}");
    println!("      instances: {} implication, {} low-degree, {} neighbourhood", checked[0], checked[1], checked[2]);
    Ok(())
}

/// Every separated component pair is certified (checked from component 0
/// outward, verifying the first few); no pair inside a component is.
fn certificate_round_trip(g: &Graph, k: usize) -> Outcome {
    let rg = strong(g, k);
    if rg.is_connected() {
        return Ok(());
    }
    let mut certifier = Certifier::new(g, k, cap());
    let mut reps: Vec<Option<usize>> = vec![None; rg.component_count()];
    for id in 0..rg.state_count() {
        reps[rg.component_of(id)].get_or_insert(id);
    }
    let reps: Vec<usize> = reps.into_iter().map(Option::unwrap).collect();
    let states = rg.states();
    let alpha = &states[reps[0]];
    for (j, &r) in reps.iter().enumerate().skip(1) {
        let cert = certifier.certify(alpha, &states[r]).map_err(|e| e.to_string())?;
        let Some(cert) = cert else {
            return Err(format!(
                "no certificate for {alpha} vs {} on {:?}, k={k}",
                states[r],
                g.edges().collect::<Vec<_>>()
            ));
        };
        if j <= 3 {
            ensure!(verify_certificate(g, k, alpha, &states[r], &cert, cap()), "rejected {cert:?}");
        }
    }
    let exhaustive = rg.state_count() <= 200;
    for b in 0..rg.state_count() {
        let within: Vec<usize> = if exhaustive {
            (0..rg.state_count()).filter(|&a| rg.component_of(a) == rg.component_of(b)).collect()
        } else {
            vec![reps[rg.component_of(b)]]
        };
        for a in within {
            let cert = certifier.certify(&states[a], &states[b]).map_err(|e| e.to_string())?;
            ensure!(cert.is_none(), "{cert:?} for connected pair {} / {}", states[a], states[b]);
        }
    }
    Ok(())
}

fn certificate_sweep(grid: &ClosureGrid) -> Outcome {
    for (n, k) in path_grid() {
        certificate_round_trip(&make_path(n).unwrap(), k)?;
    }
    for (n, k) in cycle_grid() {
        certificate_round_trip(&make_cycle(n).unwrap(), k)?;
    }
    for t in tree_grid() {
        certificate_round_trip(&t, 3)?;
    }
    for g in grid.graphs.iter().flatten() {
        for k in 2..=4 {
            if !grid.connected(g, k) {
                certificate_round_trip(g, k)?;
            }
        }
    }
    Ok(())
}

fn frozen_hub() -> Outcome {
    for n in 1..=4 {
        let frozen = globally_frozen_vertices(&make_psi(n).unwrap(), 3, cap()).unwrap();
        ensure!(frozen.contains(&0), "hub of Psi_{n} is not frozen: {frozen:?}");
        // Psi_1 is P_4, whose reflection swaps v_0 with p_1 (vertex 2)
        let expect: &[usize] = if n == 1 { &[0, 2] } else { &[0] };
        ensure!(frozen == expect, "frozen set of Psi_{n} is {frozen:?}");
    }
    println!("      note: Psi_1 = P_4 also freezes p_1 by symmetry; exactly {{v_0}} for n = 2..4");
    Ok(())
}

struct Report {
    failures: usize,
}

impl Report {
    fn run(&mut self, id: usize, name: &str, budget: Duration, f: impl FnOnce() -> Outcome) {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            let msg = p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|()| {
            if elapsed <= budget {
                Ok(())
            } else {
                Err(format!("over budget ({:.2?} > {budget:.0?})", elapsed))
            }
        });
        match outcome {
            Ok(()) => println!("PASS  {id:>2}. {name} [{elapsed:.2?}]"),
            Err(e) => {
                self.failures += 1;
                println!("FAIL  {id:>2}. {name} [{elapsed:.2?}]: {e}");
            }
        }
    }
}

fn main() -> ExitCode {
    let secs = Duration::from_secs;
    let mut r = Report { failures: 0 };
    r.run(1, "S_3(P_4) has 18 states and is disconnected; S_3(P_5) has 42 in one component", secs(1), counts_p4_p5);
    r.run(2, "S_2(P_n), n = 3..8: two isolated states", secs(1), two_colour_paths);
    r.run(3, "S_3(C_4): 12 isolated states", secs(1), c4_isolated);
    r.run(4, "S_4(C_5): six components, each a 20-cycle", secs(1), c5_six_cycles);
    r.run(5, "S_5(C_6), S_4(P_5), S_k(P_{k+1}) for k = 4..6 are connected", secs(30), connected_families);
    r.run(6, "S_3(I): 90 states, connected, 15 per colour pair on x_2, x_5", secs(1), i_graph_counts);
    r.run(7, "explicit walks replay as valid strong schedules", secs(1), walk_replay);
    r.run(8, "cycle weight table and conservation on C_3(C_n)", secs(10), weight_table);
    r.run(9, "path, cycle and tree oracles agree with brute force", secs(300), classifier_grids);
    let start = Instant::now();
    let grid = ClosureGrid::new();
    let grid_time = start.elapsed();
    println!("      closure grid: {} graphs in {grid_time:.2?}", grid.graphs.iter().map(Vec::len).sum::<usize>());
    r.run(10, "vertex-addition closure and strong-to-proper connectivity", secs(300) - grid_time, || {
        closure_properties(&grid)
    });
    r.run(11, "certificates exist, verify, and are sound on every disconnected instance", secs(300), || {
        certificate_sweep(&grid)
    });
    r.run(12, "the hub of Psi_n is globally frozen for k = 3", secs(5), frozen_hub);
    println!("{} of 12 criteria passed", 12 - r.failures);
    if r.failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
