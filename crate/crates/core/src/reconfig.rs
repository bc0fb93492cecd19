//! The colour graphs `S_k(G)` and `C_k(G)`: single-vertex moves, full
//! builds with component labels, shortest recolouring schedules, and
//! schedule replay.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::colouring::{enumerate_proper, enumerate_strong, is_proper, Cap, Colour, Colouring};
use crate::dsu::UnionFind;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Which colourings count as states: strong ones (`S_k`) or all proper
/// ones (`C_k`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Mode {
    Strong,
    Proper,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Strong => "STRONG",
            Mode::Proper => "PROPER",
        }
    }
}

pub(crate) fn check_state(g: &Graph, k: usize, c: &Colouring, mode: Mode) -> Result<()> {
    if c.k() != k {
        return Err(Error::ColourCountMismatch { expected: k, found: c.k() });
    }
    let valid = match mode {
        Mode::Strong => crate::colouring::is_strong(g, c)?,
        Mode::Proper => is_proper(g, c)?,
    };
    if valid {
        Ok(())
    } else {
        Err(Error::InvalidColouring)
    }
}

/// Calls `f(v, new_colour)` for every valid single-vertex move out of
/// `colours`, in (vertex asc, colour asc) order.
fn for_each_move(
    g: &Graph,
    k: usize,
    colours: &[Colour],
    counts: &[usize],
    mode: Mode,
    mut f: impl FnMut(usize, Colour),
) {
    for v in 0..g.n() {
        let old = colours[v];
        // in a strong state the only colour at risk is the one being vacated
        if mode == Mode::Strong && counts[old as usize] == 1 {
            continue;
        }
        for x in 0..k as Colour {
            if x != old && g.neighbours(v).iter().all(|&u| colours[u] != x) {
                f(v, x);
            }
        }
    }
}

/// All colourings one valid recolouring away from `c`.
pub fn neighbours(g: &Graph, k: usize, c: &Colouring, mode: Mode) -> Result<Vec<Colouring>> {
    check_state(g, k, c, mode)?;
    let mut out = Vec::new();
    for_each_move(g, k, c.colours(), &c.colour_counts(), mode, |v, x| out.push(c.recoloured(v, x)));
    Ok(out)
}

/// Vertices that admit at least one valid recolouring from `c`.
pub fn recolourable_vertices(g: &Graph, k: usize, c: &Colouring, mode: Mode) -> Result<Vec<usize>> {
    check_state(g, k, c, mode)?;
    let mut out: Vec<usize> = Vec::new();
    for_each_move(g, k, c.colours(), &c.colour_counts(), mode, |v, _| {
        if out.last() != Some(&v) {
            out.push(v);
        }
    });
    Ok(out)
}

/// Base-k positional encoding with vertex 0 most significant, so key order
/// matches lexicographic colouring order.
struct KeyCodec {
    weights: Vec<u64>,
}

impl KeyCodec {
    fn new(k: usize, n: usize) -> Self {
        let mut weights = vec![1u64; n];
        for v in (0..n.saturating_sub(1)).rev() {
            weights[v] = weights[v + 1] * k as u64;
        }
        KeyCodec { weights }
    }

    fn key(&self, colours: &[Colour]) -> u64 {
        colours.iter().zip(&self.weights).map(|(&c, &w)| c as u64 * w).sum()
    }

    fn moved(&self, key: u64, v: usize, old: Colour, new: Colour) -> u64 {
        key - old as u64 * self.weights[v] + new as u64 * self.weights[v]
    }
}

/// A fully built `S_k(G)` or `C_k(G)`.
#[derive(Clone, Debug)]
pub struct ReconfigGraph {
    mode: Mode,
    base: Graph,
    k: usize,
    states: Vec<Colouring>,
    keys: Vec<u64>,
    adjacency: Vec<Vec<usize>>,
    components: Vec<usize>,
    component_count: usize,
}

/// Shape of one connected component of a [`ReconfigGraph`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ComponentSummary {
    pub size: usize,
    pub edges: usize,
    pub min_degree: usize,
    pub max_degree: usize,
    /// Every degree is 2 and the edge count equals the size.
    pub is_cycle: bool,
}

/// Enumerates the states for `mode` and wires up adjacency and components.
pub fn build(g: &Graph, k: usize, mode: Mode, cap: Cap) -> Result<ReconfigGraph> {
    let states = match mode {
        Mode::Strong => enumerate_strong(g, k, cap)?,
        Mode::Proper => enumerate_proper(g, k, cap)?,
    };
    let codec = KeyCodec::new(k, g.n());
    let keys: Vec<u64> = states.iter().map(|s| codec.key(s.colours())).collect();
    debug_assert!(keys.windows(2).all(|w| w[0] < w[1]));

    let mut adjacency = Vec::with_capacity(states.len());
    let mut uf = UnionFind::new(states.len());
    for (id, state) in states.iter().enumerate() {
        let mut adj = Vec::new();
        let key = keys[id];
        for_each_move(g, k, state.colours(), &state.colour_counts(), mode, |v, x| {
            let target = codec.moved(key, v, state.get(v), x);
            let other = keys.binary_search(&target).expect("valid move lands on an enumerated state");
            adj.push(other);
        });
        for &other in &adj {
            if other > id {
                uf.union(id, other);
            }
        }
        adjacency.push(adj);
    }
    let (components, component_count) = uf.labels();
    Ok(ReconfigGraph { mode, base: g.clone(), k, states, keys, adjacency, components, component_count })
}

impl ReconfigGraph {
    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn states(&self) -> &[Colouring] {
        &self.states
    }

    pub fn state_count(&self) -> usize {
        self.states.len()
    }

    /// Neighbour IDs of state `id`, in move order.
    pub fn adjacent(&self, id: usize) -> &[usize] {
        &self.adjacency[id]
    }

    pub fn degree(&self, id: usize) -> usize {
        self.adjacency[id].len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges as `(a, b)` with `a < b`, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (a, adj) in self.adjacency.iter().enumerate() {
            let mut higher: Vec<usize> = adj.iter().copied().filter(|&b| b > a).collect();
            higher.sort_unstable();
            out.extend(higher.into_iter().map(|b| (a, b)));
        }
        out
    }

    /// Component label of each state, numbered by smallest member.
    pub fn components(&self) -> &[usize] {
        &self.components
    }

    pub fn component_of(&self, id: usize) -> usize {
        self.components[id]
    }

    pub fn component_count(&self) -> usize {
        self.component_count
    }

    /// Zero states count as connected.
    pub fn is_connected(&self) -> bool {
        self.component_count <= 1
    }

    pub fn state_id(&self, c: &Colouring) -> Option<usize> {
        if c.len() != self.base.n() || c.k() != self.k {
            return None;
        }
        let key = KeyCodec::new(self.k, self.base.n()).key(c.colours());
        self.keys.binary_search(&key).ok()
    }

    pub fn component_summary(&self) -> Vec<ComponentSummary> {
        let mut out =
            vec![
                ComponentSummary { size: 0, edges: 0, min_degree: usize::MAX, max_degree: 0, is_cycle: false };
                self.component_count
            ];
        let mut degree_sum = vec![0; self.component_count];
        for id in 0..self.states.len() {
            let s = &mut out[self.components[id]];
            let d = self.degree(id);
            s.size += 1;
            s.min_degree = s.min_degree.min(d);
            s.max_degree = s.max_degree.max(d);
            degree_sum[self.components[id]] += d;
        }
        for (s, sum) in out.iter_mut().zip(degree_sum) {
            s.edges = sum / 2;
            s.is_cycle = s.min_degree == 2 && s.max_degree == 2 && s.edges == s.size;
        }
        out
    }
}

/// One recolouring: `vertex` goes from colour `from` to colour `to`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RecolourStep {
    pub vertex: usize,
    pub from: Colour,
    pub to: Colour,
}

/// A start colouring and the recolourings applied to it in order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Schedule {
    pub start: Colouring,
    pub steps: Vec<RecolourStep>,
}

impl Schedule {
    pub fn empty(start: Colouring) -> Self {
        Schedule { start, steps: Vec::new() }
    }

    /// Converts a walk of colourings into steps. Consecutive colourings
    /// must differ at exactly one vertex.
    pub fn from_walk(walk: &[Colouring]) -> Result<Schedule> {
        let start = walk.first().ok_or(Error::InvalidParameter("walk is empty"))?.clone();
        let mut steps = Vec::with_capacity(walk.len() - 1);
        for pair in walk.windows(2) {
            let (a, b) = (&pair[0], &pair[1]);
            if a.len() != b.len() || a.k() != b.k() || a.hamming(b) != 1 {
                return Err(Error::InvalidParameter(
                    "consecutive colourings in a walk must differ at exactly one vertex",
                ));
            }
            let vertex = (0..a.len()).find(|&v| a.get(v) != b.get(v)).unwrap_or(0);
            steps.push(RecolourStep { vertex, from: a.get(vertex), to: b.get(vertex) });
        }
        Ok(Schedule { start, steps })
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }
}

/// Why a schedule failed to replay.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StepFault {
    LengthMismatch {
        expected: usize,
        found: usize,
    },
    ColourCountMismatch {
        expected: usize,
        found: usize,
    },
    VertexOutOfRange {
        vertex: usize,
    },
    ColourOutOfRange {
        colour: Colour,
    },
    /// The step claims `claimed` but the vertex currently has `actual`.
    StaleFromColour {
        actual: Colour,
        claimed: Colour,
    },
    NoChange,
    ImproperEdge {
        u: usize,
        v: usize,
    },
    MissingColour {
        colour: Colour,
    },
}

/// A replay failure. `step` is `None` when the start colouring itself is
/// invalid.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ScheduleError {
    pub step: Option<usize>,
    pub fault: StepFault,
}

impl fmt::Display for ScheduleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.step {
            Some(i) => write!(f, "step {i}: ")?,
            None => write!(f, "start colouring: ")?,
        }
        match self.fault {
            StepFault::LengthMismatch { expected, found } => {
                write!(f, "{found} entries for {expected} vertices")
            }
            StepFault::ColourCountMismatch { expected, found } => {
                write!(f, "k = {found}, expected {expected}")
            }
            StepFault::VertexOutOfRange { vertex } => write!(f, "vertex {vertex} out of range"),
            StepFault::ColourOutOfRange { colour } => write!(f, "colour {colour} out of range"),
            StepFault::StaleFromColour { actual, claimed } => {
                write!(f, "step expects colour {claimed} but vertex has colour {actual}")
            }
            StepFault::NoChange => write!(f, "step does not change the colour"),
            StepFault::ImproperEdge { u, v } => write!(f, "edge {{{u},{v}}} becomes monochromatic"),
            StepFault::MissingColour { colour } => write!(f, "colour {colour} no longer appears"),
        }
    }
}

impl core::error::Error for ScheduleError {}

/// Replays `s`, checking every intermediate colouring is valid for `mode`.
/// Returns the final colouring.
pub fn validate_schedule(g: &Graph, k: usize, s: &Schedule, mode: Mode) -> Result<Colouring, ScheduleError> {
    let fail = |step, fault| Err(ScheduleError { step, fault });
    let start = &s.start;
    if start.len() != g.n() {
        return fail(None, StepFault::LengthMismatch { expected: g.n(), found: start.len() });
    }
    if start.k() != k {
        return fail(None, StepFault::ColourCountMismatch { expected: k, found: start.k() });
    }
    if let Some((u, v)) = g.edges().find(|&(u, v)| start.get(u) == start.get(v)) {
        return fail(None, StepFault::ImproperEdge { u, v });
    }
    let mut counts = start.colour_counts();
    if mode == Mode::Strong {
        if let Some(c) = counts.iter().position(|&n| n == 0) {
            return fail(None, StepFault::MissingColour { colour: c as Colour });
        }
    }
    let mut colours = start.colours().to_vec();
    for (i, step) in s.steps.iter().enumerate() {
        let at = Some(i);
        let v = step.vertex;
        if v >= g.n() {
            return fail(at, StepFault::VertexOutOfRange { vertex: v });
        }
        if step.to as usize >= k {
            return fail(at, StepFault::ColourOutOfRange { colour: step.to });
        }
        if colours[v] != step.from {
            return fail(at, StepFault::StaleFromColour { actual: colours[v], claimed: step.from });
        }
        if step.from == step.to {
            return fail(at, StepFault::NoChange);
        }
        if let Some(&u) = g.neighbours(v).iter().find(|&&u| colours[u] == step.to) {
            return fail(at, StepFault::ImproperEdge { u: u.min(v), v: u.max(v) });
        }
        colours[v] = step.to;
        counts[step.from as usize] -= 1;
        counts[step.to as usize] += 1;
        if mode == Mode::Strong && counts[step.from as usize] == 0 {
            return fail(at, StepFault::MissingColour { colour: step.from });
        }
    }
    Ok(Colouring::from_raw(colours, k))
}

/// Shortest schedule from `from` to `to` by breadth-first search over the
/// implicit state space; `None` when `to` is unreachable. Fails with
/// [`Error::CapExceeded`] once more than `cap` states have been visited.
pub fn find_path(
    g: &Graph,
    k: usize,
    from: &Colouring,
    to: &Colouring,
    mode: Mode,
    cap: Cap,
) -> Result<Option<Schedule>> {
    check_state(g, k, from, mode)?;
    check_state(g, k, to, mode)?;
    if from == to {
        return Ok(Some(Schedule::empty(from.clone())));
    }
    // arena of visited colour vectors; parent[i] = (predecessor, step)
    let mut arena: Vec<Vec<Colour>> = vec![from.colours().to_vec()];
    let mut parent: Vec<Option<(usize, RecolourStep)>> = vec![None];
    let mut index: BTreeMap<Vec<Colour>, usize> = BTreeMap::new();
    index.insert(from.colours().to_vec(), 0);
    let mut queue = VecDeque::from([0usize]);
    let goal = to.colours();

    while let Some(cur) = queue.pop_front() {
        let colours = arena[cur].clone();
        let mut counts = vec![0usize; k];
        for &c in &colours {
            counts[c as usize] += 1;
        }
        let mut found = None;
        let mut over_cap = false;
        for_each_move(g, k, &colours, &counts, mode, |v, x| {
            if found.is_some() || over_cap {
                return;
            }
            let mut next = colours.clone();
            next[v] = x;
            if index.contains_key(&next) {
                return;
            }
            let id = arena.len();
            if id as u64 >= cap.0 {
                over_cap = true;
                return;
            }
            index.insert(next.clone(), id);
            parent.push(Some((cur, RecolourStep { vertex: v, from: colours[v], to: x })));
            if next == goal {
                found = Some(id);
            }
            arena.push(next);
            queue.push_back(id);
        });
        if over_cap {
            return Err(Error::CapExceeded { candidates: arena.len() as u64 + 1, cap: cap.0 });
        }
        if let Some(mut id) = found {
            let mut steps = Vec::new();
            while let Some((prev, step)) = parent[id] {
                steps.push(step);
                id = prev;
            }
            steps.reverse();
            return Ok(Some(Schedule { start: from.clone(), steps }));
        }
    }
    Ok(None)
}
