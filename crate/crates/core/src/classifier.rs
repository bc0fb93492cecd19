//! Closed-form connectivity oracles for `S_k(G)`.
//!
//! * paths: connected iff `k >= 3`, `n >= 5` and `n >= k + 1`;
//! * cycles: connected iff `k >= 4`, `n >= 6` and `n >= k + 1`;
//! * trees with `k = 3`: connected iff the tree contains `P_5` or `I`;
//! * a spanning complete bipartite subgraph always disconnects;
//! * `k = 2` disconnects any graph with an edge.
//!
//! [`classify`] dispatches to these and falls back to a full build.

use alloc::vec::Vec;

use crate::certificate::{Certificate, Certifier};
use crate::colouring::{enumerate_strong, first_strong, Cap, Colour, Colouring};
use crate::error::{Error, Result};
use crate::graph::{make_cycle, make_path, Bipartition, Graph};
use crate::reconfig::{build, Mode, ReconfigGraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Reason {
    PathThm,
    CycleThm,
    TreeThm,
    BipartiteObstruction,
    TwoColour,
    BruteForce,
}

impl Reason {
    pub fn as_str(self) -> &'static str {
        match self {
            Reason::PathThm => "PATH_THM",
            Reason::CycleThm => "CYCLE_THM",
            Reason::TreeThm => "TREE_THM",
            Reason::BipartiteObstruction => "BIPARTITE_OBSTRUCTION",
            Reason::TwoColour => "TWO_COLOUR",
            Reason::BruteForce => "BRUTE_FORCE",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// Two strong colourings and a certificate that they are separated.
    Separation {
        alpha: Colouring,
        beta: Colouring,
        certificate: Certificate,
    },
    ComponentCount(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub connected: bool,
    pub reason: Reason,
    pub witness: Option<Witness>,
}

impl Verdict {
    fn connected(reason: Reason) -> Self {
        Verdict { connected: true, reason, witness: None }
    }

    fn disconnected(reason: Reason, witness: Option<Witness>) -> Self {
        Verdict { connected: false, reason, witness }
    }
}

/// `c` with colours `a` and `b` exchanged everywhere.
fn swap_colours(c: &Colouring, a: Colour, b: Colour) -> Colouring {
    let colours = c
        .colours()
        .iter()
        .map(|&x| {
            if x == a {
                b
            } else if x == b {
                a
            } else {
                x
            }
        })
        .collect();
    Colouring::from_raw(colours, c.k())
}

/// A separated pair from a full build: state 0 against the first state of
/// component 1.
fn separation_from_build(g: &Graph, k: usize, rg: &ReconfigGraph, cap: Cap) -> Result<Option<Witness>> {
    let Some(other) = rg.components().iter().position(|&c| c == 1) else {
        return Ok(None);
    };
    let alpha = rg.states()[0].clone();
    let beta = rg.states()[other].clone();
    let certificate = Certifier::new(g, k, cap).certify(&alpha, &beta)?.expect("different components always certify");
    Ok(Some(Witness::Separation { alpha, beta, certificate }))
}

fn witness_by_search(g: &Graph, k: usize) -> Option<Witness> {
    let cap = Cap::default();
    let rg = build(g, k, Mode::Strong, cap).ok()?;
    separation_from_build(g, k, &rg, cap).ok().flatten()
}

/// `k = 2` on a graph with an edge: every endpoint of an edge is frozen, and
/// swapping the two colours gives a second strong colouring.
fn two_colour_witness(g: &Graph, alpha: Colouring) -> Option<Witness> {
    let (u, _) = g.edges().next()?;
    let beta = swap_colours(&alpha, 0, 1);
    Some(Witness::Separation { alpha, beta, certificate: Certificate::FrozenVertex { vertex: u } })
}

/// For a path or cycle `g`, the vertex of `g` playing the part of vertex `i`
/// of `make_path(n)` / `make_cycle(n)`.
fn standard_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let start = if g.is_path_graph() { (0..n).find(|&v| g.degree(v) <= 1).unwrap_or(0) } else { 0 };
    let mut order = Vec::with_capacity(n);
    let mut prev = usize::MAX;
    let mut cur = start;
    while order.len() < n {
        order.push(cur);
        let next = g.neighbours(cur).iter().copied().find(|&u| u != prev && !order.contains(&u));
        let Some(next) = next else { break };
        prev = cur;
        cur = next;
    }
    order
}

/// Carries a witness built on the standard path or cycle over to `g`,
/// which may number its vertices differently.
fn relabel_verdict(g: &Graph, k: usize, verdict: Verdict, cap: Cap) -> Result<Verdict> {
    let order = standard_order(g);
    if order.iter().enumerate().all(|(i, &v)| i == v) {
        return Ok(verdict);
    }
    let Some(Witness::Separation { alpha, beta, certificate }) = verdict.witness else {
        return Ok(verdict);
    };
    let map = |c: &Colouring| {
        let mut colours = alpha.colours().to_vec();
        for (i, &v) in order.iter().enumerate() {
            colours[v] = c.get(i);
        }
        Colouring::from_raw(colours, c.k())
    };
    let (alpha, beta) = (map(&alpha), map(&beta));
    let sorted = |part: &[usize]| {
        let mut out: Vec<usize> = part.iter().map(|&v| order[v]).collect();
        out.sort_unstable();
        out
    };
    let certificate = match certificate {
        Certificate::FrozenVertex { vertex } => Certificate::FrozenVertex { vertex: order[vertex] },
        Certificate::CycleWeight { cycle, weight_alpha, weight_beta } => {
            Certificate::CycleWeight { cycle: cycle.iter().map(|&v| order[v]).collect(), weight_alpha, weight_beta }
        }
        Certificate::BipartiteSwap { bipartition, colour } => {
            let (a, b) = (sorted(&bipartition.part_a), sorted(&bipartition.part_b));
            let (part_a, part_b) = if a.first() < b.first() { (a, b) } else { (b, a) };
            Certificate::BipartiteSwap { bipartition: Bipartition { part_a, part_b }, colour }
        }
        // component numbering depends on the labelling
        Certificate::Exhaustive { .. } => {
            Certifier::new(g, k, cap).certify(&alpha, &beta)?.expect("relabelling preserves separation")
        }
    };
    Ok(Verdict { witness: Some(Witness::Separation { alpha, beta, certificate }), ..verdict })
}

/// `S_k(P_n)` is connected iff `k >= 3`, `n >= 5` and `n >= k + 1`.
#[allow(clippy::int_plus_one)] // mirrors the stated condition
pub fn classify_path(n: usize, k: usize) -> Result<Verdict> {
    if n < 2 || k < 2 {
        return Err(Error::InvalidParameter("classify_path needs n >= 2 and k >= 2"));
    }
    if k >= 3 && n >= 5 && n >= k + 1 {
        return Ok(Verdict::connected(Reason::PathThm));
    }
    let g = make_path(n)?;
    let witness = if k == 2 {
        let alpha = Colouring::from_raw((0..n).map(|v| (v % 2) as Colour).collect(), 2);
        two_colour_witness(&g, alpha)
    } else {
        witness_by_search(&g, k)
    };
    Ok(Verdict::disconnected(Reason::PathThm, witness))
}

/// The weight pattern colouring of `C_n` with non-zero weight:
/// `1,2,3,...` repeated, ending `...,2` when `n = 1 (mod 3)` and
/// `...,1,2` when `n = 2 (mod 3)`. Colours are shifted to `0..3`.
pub fn weight_pattern(n: usize) -> Vec<Colour> {
    let mut out: Vec<Colour> = (0..n).map(|i| (i % 3) as Colour).collect();
    if n % 3 == 1 && n > 4 {
        out[n - 1] = 1;
    }
    out
}

/// `S_k(C_n)` is connected iff `k >= 4`, `n >= 6` and `n >= k + 1`.
#[allow(clippy::int_plus_one)]
pub fn classify_cycle(n: usize, k: usize) -> Result<Verdict> {
    if n < 3 || k < 3 {
        return Err(Error::InvalidParameter("classify_cycle needs n >= 3 and k >= 3"));
    }
    if k >= 4 && n >= 6 && n >= k + 1 {
        return Ok(Verdict::connected(Reason::CycleThm));
    }
    let g = make_cycle(n)?;
    let witness = if k == 3 && n != 4 {
        let alpha = Colouring::from_raw(weight_pattern(n), 3);
        let beta = swap_colours(&alpha, 0, 1);
        let cycle: Vec<usize> = (0..n).collect();
        let weight_alpha = crate::certificate::cycle_weight(&g, &cycle, &alpha)?;
        let weight_beta = crate::certificate::cycle_weight(&g, &cycle, &beta)?;
        Some(Witness::Separation {
            alpha,
            beta,
            certificate: Certificate::CycleWeight { cycle, weight_alpha, weight_beta },
        })
    } else {
        witness_by_search(&g, k)
    };
    Ok(Verdict::disconnected(Reason::CycleThm, witness))
}

/// `S_3(T)` for a tree `T` on at least four vertices is connected iff `T`
/// contains `P_5` or `I`.
pub fn classify_tree(t: &Graph) -> Result<Verdict> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    if t.n() < 4 {
        return Err(Error::TooFewVertices { required: 4, found: t.n() });
    }
    if t.contains_p5_subgraph()? || t.contains_i_subgraph()? {
        Ok(Verdict::connected(Reason::TreeThm))
    } else {
        Ok(Verdict::disconnected(Reason::TreeThm, witness_by_search(t, 3)))
    }
}

/// Classifies `S_k(g)`: theorem oracles where they apply, structural
/// obstructions next, a full build otherwise.
///
/// When `g` has fewer than `k` vertices or no strong k-colouring at all,
/// the state set is empty and the verdict is the vacuous
/// `connected = true` with a component count of 0.
pub fn classify(g: &Graph, k: usize, cap: Cap) -> Result<Verdict> {
    if k == 0 {
        return Err(Error::InvalidParameter("k must be at least 1"));
    }
    let n = g.n();
    let first = if n >= k { first_strong(g, k, cap)? } else { None };
    let Some(first) = first else {
        return Ok(Verdict { connected: true, reason: Reason::BruteForce, witness: Some(Witness::ComponentCount(0)) });
    };
    if k >= 2 && g.is_path_graph() {
        return relabel_verdict(g, k, classify_path(n, k)?, cap);
    }
    if k >= 3 && g.is_cycle_graph() {
        return relabel_verdict(g, k, classify_cycle(n, k)?, cap);
    }
    if k == 3 && n >= 4 && g.is_tree() {
        return classify_tree(g);
    }
    if k >= 2 && n >= 2 {
        if let Some(split) = g.detect_spanning_complete_bipartite()? {
            // one colour from each side, exchanged
            let side_a = first.get(split.part_a[0]);
            let side_b = first.get(split.part_b[0]);
            let beta = swap_colours(&first, side_a, side_b);
            let certificate = crate::certificate::swap_certificate(g, k, &first, &beta)?
                .expect("swapping colours across a complete split always moves a colour");
            return Ok(Verdict::disconnected(
                Reason::BipartiteObstruction,
                Some(Witness::Separation { alpha: first, beta, certificate }),
            ));
        }
    }
    if k == 2 && g.edge_count() > 0 {
        return Ok(Verdict::disconnected(Reason::TwoColour, two_colour_witness(g, first)));
    }
    let rg = build(g, k, Mode::Strong, cap)?;
    if rg.is_connected() {
        return Ok(Verdict {
            connected: true,
            reason: Reason::BruteForce,
            witness: Some(Witness::ComponentCount(rg.component_count())),
        });
    }
    let witness = separation_from_build(g, k, &rg, cap)?;
    Ok(Verdict::disconnected(Reason::BruteForce, witness))
}

/// Brute-force connectivity of `S_k(g)`, for checking a verdict.
pub fn brute_force_connected(g: &Graph, k: usize, cap: Cap) -> Result<bool> {
    Ok(build(g, k, Mode::Strong, cap)?.is_connected())
}

/// Number of strong colourings, exposed for reports.
pub fn strong_count(g: &Graph, k: usize, cap: Cap) -> Result<usize> {
    Ok(enumerate_strong(g, k, cap)?.len())
}
