//! Checkable proofs that two strong colourings lie in different components
//! of `S_k(G)`.
//!
//! Three invariants are used, each preserved by every valid single-vertex
//! recolouring:
//!
//! * **Bipartite swap.** If every pair across a bipartition `(A, B)` is an
//!   edge, each colour lives entirely on one side, and in a strong colouring
//!   no move can change a colour's side.
//! * **Cycle weight** (k = 3). Orient a cycle; an edge `u -> v` weighs +1 if
//!   `colour(v) = colour(u) + 1 (mod 3)` and -1 otherwise. Recolouring one
//!   vertex leaves the cycle's total unchanged.
//! * **Frozen vertex.** A vertex that can be recoloured in no strong
//!   colouring keeps its colour along every walk.
//!
//! When none applies, the exhaustive fallback compares component labels of
//! a full build.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::colouring::{enumerate_strong, is_strong, Cap, Colour, Colouring};
use crate::error::{Error, Result};
use crate::graph::{Bipartition, Graph};
use crate::reconfig::{build, check_state, recolourable_vertices, Mode, ReconfigGraph};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    /// `colour` sits on different sides of `bipartition` in the two colourings.
    BipartiteSwap { bipartition: Bipartition, colour: Colour },
    /// An oriented cycle (closing edge implied) whose weights differ.
    CycleWeight { cycle: Vec<usize>, weight_alpha: i64, weight_beta: i64 },
    /// A globally frozen vertex on which the two colourings disagree.
    FrozenVertex { vertex: usize },
    /// Component labels from a full build of `S_k(G)`.
    Exhaustive { component_alpha: usize, component_beta: usize },
}

impl Certificate {
    pub fn kind(&self) -> &'static str {
        match self {
            Certificate::BipartiteSwap { .. } => "BIPARTITE_SWAP",
            Certificate::CycleWeight { .. } => "CYCLE_WEIGHT",
            Certificate::FrozenVertex { .. } => "FROZEN_VERTEX",
            Certificate::Exhaustive { .. } => "EXHAUSTIVE",
        }
    }
}

fn is_cycle_of(g: &Graph, cycle: &[usize]) -> bool {
    let n = cycle.len();
    if n < 3 || cycle.iter().any(|&v| v >= g.n()) {
        return false;
    }
    let mut seen = vec![false; g.n()];
    for &v in cycle {
        if core::mem::replace(&mut seen[v], true) {
            return false;
        }
    }
    (0..n).all(|i| g.has_edge(cycle[i], cycle[(i + 1) % n]))
}

/// Weight of the cycle `cycle[0] -> cycle[1] -> ... -> cycle[0]` under a
/// 3-colouring.
pub fn cycle_weight(g: &Graph, cycle: &[usize], c: &Colouring) -> Result<i64> {
    if c.k() != 3 {
        return Err(Error::RequiresThreeColours { k: c.k() });
    }
    if c.len() != g.n() {
        return Err(Error::LengthMismatch { expected: g.n(), found: c.len() });
    }
    if !is_cycle_of(g, cycle) {
        return Err(Error::NotACycle);
    }
    let n = cycle.len();
    let mut total = 0;
    for i in 0..n {
        let (u, v) = (cycle[i], cycle[(i + 1) % n]);
        let (cu, cv) = (c.get(u), c.get(v));
        if cu == cv {
            return Err(Error::MonochromaticEdge { u: u.min(v), v: u.max(v) });
        }
        total += if cv == (cu + 1) % 3 { 1 } else { -1 };
    }
    Ok(total)
}

/// Fundamental cycles of a BFS spanning forest, one per non-tree edge
/// `(u, v)` in ascending edge order. Each starts `u -> v` and returns to `u`
/// through the tree.
fn fundamental_cycles(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    let mut seen = vec![false; n];
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &v in g.neighbours(u) {
                if !seen[v] {
                    seen[v] = true;
                    parent[v] = u;
                    depth[v] = depth[u] + 1;
                    queue.push_back(v);
                }
            }
        }
    }
    let mut out = Vec::new();
    for (u, v) in g.edges() {
        if parent[u] == v || parent[v] == u {
            continue;
        }
        let (mut a, mut b) = (u, v);
        let mut from_u = vec![a];
        let mut from_v = vec![b];
        while a != b {
            if depth[a] >= depth[b] {
                a = parent[a];
                from_u.push(a);
            } else {
                b = parent[b];
                from_v.push(b);
            }
        }
        from_v.pop();
        from_v.reverse();
        from_u.extend(from_v);
        // [u .. lca .. v] -> [u, v .. lca ..]
        from_u.reverse();
        from_u.rotate_right(1);
        out.push(from_u);
    }
    out
}

/// Looks for a cycle on which `alpha` and `beta` have different weights.
/// Weight is conserved along every edge of `C_3(G)`, so such a cycle
/// separates them.
pub fn weight_certificate(g: &Graph, alpha: &Colouring, beta: &Colouring) -> Result<Option<Certificate>> {
    for c in [alpha, beta] {
        if c.k() != 3 {
            return Err(Error::RequiresThreeColours { k: c.k() });
        }
        check_state(g, 3, c, Mode::Strong)?;
    }
    if alpha == beta {
        return Ok(None);
    }
    let mut cycles = fundamental_cycles(g);
    if g.is_cycle_graph() {
        cycles.push(cycle_order(g));
    }
    for cycle in cycles {
        let weight_alpha = cycle_weight(g, &cycle, alpha)?;
        let weight_beta = cycle_weight(g, &cycle, beta)?;
        if weight_alpha != weight_beta {
            return Ok(Some(Certificate::CycleWeight { cycle, weight_alpha, weight_beta }));
        }
    }
    Ok(None)
}

/// Vertex order around a cycle graph starting at 0 towards its smaller
/// neighbour.
fn cycle_order(g: &Graph) -> Vec<usize> {
    let mut order = vec![0];
    let mut prev = 0;
    let mut cur = g.neighbours(0)[0];
    while cur != 0 {
        order.push(cur);
        let next = g.neighbours(cur).iter().copied().find(|&x| x != prev).unwrap_or(0);
        prev = cur;
        cur = next;
    }
    order
}

/// Side of each colour under `split`: `Some(false)` for `part_a`,
/// `Some(true)` for `part_b`, `None` if absent or on both sides.
fn colour_sides(split: &Bipartition, c: &Colouring) -> Vec<Option<bool>> {
    let mut sides: Vec<Option<Option<bool>>> = vec![None; c.k()];
    for (part, side) in [(&split.part_a, false), (&split.part_b, true)] {
        for &v in part {
            let slot = &mut sides[c.get(v) as usize];
            *slot = match *slot {
                None => Some(Some(side)),
                Some(Some(s)) if s == side => Some(Some(side)),
                _ => Some(None),
            };
        }
    }
    sides.into_iter().map(Option::flatten).collect()
}

fn swap_with_split(split: Bipartition, alpha: &Colouring, beta: &Colouring) -> Option<Certificate> {
    let sa = colour_sides(&split, alpha);
    let sb = colour_sides(&split, beta);
    let colour = (0..alpha.k()).find(|&c| matches!((sa[c], sb[c]), (Some(x), Some(y)) if x != y))?;
    Some(Certificate::BipartiteSwap { bipartition: split, colour: colour as Colour })
}

/// If `g` has a spanning complete bipartite subgraph and some colour sits on
/// different sides in `alpha` and `beta`, returns that colour.
pub fn swap_certificate(g: &Graph, k: usize, alpha: &Colouring, beta: &Colouring) -> Result<Option<Certificate>> {
    check_state(g, k, alpha, Mode::Strong)?;
    check_state(g, k, beta, Mode::Strong)?;
    if alpha == beta || g.n() < 2 {
        return Ok(None);
    }
    Ok(g.detect_spanning_complete_bipartite()?.and_then(|split| swap_with_split(split, alpha, beta)))
}

/// Vertices recolourable in no strong k-colouring. Vacuously every vertex
/// when there are no strong colourings.
pub fn globally_frozen_vertices(g: &Graph, k: usize, cap: Cap) -> Result<Vec<usize>> {
    let states = enumerate_strong(g, k, cap)?;
    frozen_among(g, k, &states)
}

fn frozen_among(g: &Graph, k: usize, states: &[Colouring]) -> Result<Vec<usize>> {
    let mut movable = vec![false; g.n()];
    for s in states {
        for v in recolourable_vertices(g, k, s, Mode::Strong)? {
            movable[v] = true;
        }
    }
    Ok((0..g.n()).filter(|&v| !movable[v]).collect())
}

/// Produces separation certificates for many pairs over one `(G, k)`,
/// caching the frozen-vertex set and the full build between calls.
pub struct Certifier<'g> {
    graph: &'g Graph,
    k: usize,
    cap: Cap,
    split: Option<Option<Bipartition>>,
    frozen: Option<Vec<usize>>,
    reconfig: Option<ReconfigGraph>,
}

impl<'g> Certifier<'g> {
    pub fn new(graph: &'g Graph, k: usize, cap: Cap) -> Self {
        Certifier { graph, k, cap, split: None, frozen: None, reconfig: None }
    }

    fn reconfig(&mut self) -> Result<&ReconfigGraph> {
        if self.reconfig.is_none() {
            self.reconfig = Some(build(self.graph, self.k, Mode::Strong, self.cap)?);
        }
        Ok(self.reconfig.as_ref().expect("just built"))
    }

    fn frozen(&mut self) -> Result<&[usize]> {
        if self.frozen.is_none() {
            let states = self.reconfig()?.states().to_vec();
            self.frozen = Some(frozen_among(self.graph, self.k, &states)?);
        }
        Ok(self.frozen.as_deref().expect("just computed"))
    }

    /// Tries the bipartite swap, the cycle weight (k = 3), a frozen vertex,
    /// then exhaustive component comparison. `None` means the two colourings
    /// are in the same component.
    pub fn certify(&mut self, alpha: &Colouring, beta: &Colouring) -> Result<Option<Certificate>> {
        let (g, k) = (self.graph, self.k);
        check_state(g, k, alpha, Mode::Strong)?;
        check_state(g, k, beta, Mode::Strong)?;
        if alpha == beta {
            return Ok(None);
        }
        if g.n() >= 2 {
            if self.split.is_none() {
                self.split = Some(g.detect_spanning_complete_bipartite()?);
            }
            if let Some(Some(split)) = &self.split {
                if let Some(cert) = swap_with_split(split.clone(), alpha, beta) {
                    return Ok(Some(cert));
                }
            }
        }
        if k == 3 {
            if let Some(cert) = weight_certificate(g, alpha, beta)? {
                return Ok(Some(cert));
            }
        }
        if let Some(&vertex) = self.frozen()?.iter().find(|&&v| alpha.get(v) != beta.get(v)) {
            return Ok(Some(Certificate::FrozenVertex { vertex }));
        }
        let rg = self.reconfig()?;
        let ia = rg.state_id(alpha).ok_or(Error::InvalidColouring)?;
        let ib = rg.state_id(beta).ok_or(Error::InvalidColouring)?;
        let (component_alpha, component_beta) = (rg.component_of(ia), rg.component_of(ib));
        if component_alpha == component_beta {
            Ok(None)
        } else {
            Ok(Some(Certificate::Exhaustive { component_alpha, component_beta }))
        }
    }
}

/// One-shot form of [`Certifier::certify`].
pub fn certify_separation(
    g: &Graph,
    k: usize,
    alpha: &Colouring,
    beta: &Colouring,
    cap: Cap,
) -> Result<Option<Certificate>> {
    Certifier::new(g, k, cap).certify(alpha, beta)
}

/// Re-checks a certificate from scratch without trusting whatever produced
/// it. Any malformed payload or failed check yields `false`.
pub fn verify_certificate(
    g: &Graph,
    k: usize,
    alpha: &Colouring,
    beta: &Colouring,
    cert: &Certificate,
    cap: Cap,
) -> bool {
    let strong = |c: &Colouring| c.k() == k && is_strong(g, c).unwrap_or(false);
    if !strong(alpha) || !strong(beta) || alpha == beta {
        return false;
    }
    match cert {
        Certificate::BipartiteSwap { bipartition, colour } => {
            let mut a = bipartition.part_a.clone();
            let mut b = bipartition.part_b.clone();
            a.sort_unstable();
            b.sort_unstable();
            let split = Bipartition { part_a: a, part_b: b };
            if (*colour as usize) >= k || !split.is_spanning_complete_in(g) {
                return false;
            }
            let side = |c: &Colouring| colour_sides(&split, c)[*colour as usize];
            matches!((side(alpha), side(beta)), (Some(x), Some(y)) if x != y)
        }
        Certificate::CycleWeight { cycle, weight_alpha, weight_beta } => {
            if k != 3 {
                return false;
            }
            match (cycle_weight(g, cycle, alpha), cycle_weight(g, cycle, beta)) {
                (Ok(wa), Ok(wb)) => wa == *weight_alpha && wb == *weight_beta && wa != wb,
                _ => false,
            }
        }
        Certificate::FrozenVertex { vertex } => {
            let v = *vertex;
            if v >= g.n() || alpha.get(v) == beta.get(v) {
                return false;
            }
            let Ok(states) = enumerate_strong(g, k, cap) else {
                return false;
            };
            // v is movable in s iff its colour is repeated and some other
            // colour is absent from its neighbourhood
            states.iter().all(|s| {
                let own = s.get(v);
                let repeated = (0..g.n()).any(|u| u != v && s.get(u) == own);
                let free = (0..k as Colour).any(|x| x != own && g.neighbours(v).iter().all(|&u| s.get(u) != x));
                !(repeated && free)
            })
        }
        Certificate::Exhaustive { component_alpha, component_beta } => {
            let Ok(rg) = build(g, k, Mode::Strong, cap) else {
                return false;
            };
            match (rg.state_id(alpha), rg.state_id(beta)) {
                (Some(ia), Some(ib)) => {
                    rg.component_of(ia) == *component_alpha
                        && rg.component_of(ib) == *component_beta
                        && component_alpha != component_beta
                }
                _ => false,
            }
        }
    }
}
