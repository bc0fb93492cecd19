//! Simple undirected graphs, the named families used throughout the crate,
//! and the structural predicates the classifier relies on.

use alloc::collections::VecDeque;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::colouring::{candidate_count, Cap};
use crate::error::{Error, Result};

/// A finite simple graph on the vertices `0..n`.
///
/// Adjacency lists are kept sorted, so neighbour iteration order is
/// deterministic and `has_edge` is a binary search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    labels: Option<Vec<String>>,
}

/// A split of the vertex set into two non-empty parts such that every pair
/// across the parts is an edge.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Bipartition {
    pub part_a: Vec<usize>,
    pub part_b: Vec<usize>,
}

impl Bipartition {
    /// Which part `v` lies in: `Some(false)` for `part_a`, `Some(true)` for `part_b`.
    pub fn side(&self, v: usize) -> Option<bool> {
        if self.part_a.binary_search(&v).is_ok() {
            Some(false)
        } else if self.part_b.binary_search(&v).is_ok() {
            Some(true)
        } else {
            None
        }
    }

    /// Checks the parts against `g`: disjoint, non-empty, covering, and
    /// complete across.
    pub fn is_spanning_complete_in(&self, g: &Graph) -> bool {
        if self.part_a.is_empty() || self.part_b.is_empty() {
            return false;
        }
        let mut seen = vec![false; g.n()];
        for &v in self.part_a.iter().chain(&self.part_b) {
            if v >= g.n() || seen[v] {
                return false;
            }
            seen[v] = true;
        }
        if seen.iter().any(|s| !s) {
            return false;
        }
        self.part_a.iter().all(|&a| self.part_b.iter().all(|&b| g.has_edge(a, b)))
    }
}

impl Graph {
    /// Builds a graph from an edge list. Loops, duplicates (in either
    /// orientation) and out-of-range endpoints are rejected.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop { vertex: u });
            }
            if adj[u].contains(&v) {
                return Err(Error::DuplicateEdge { u: u.min(v), v: u.max(v) });
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { adj, labels: None })
    }

    pub fn empty(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n], labels: None }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n() {
            return Err(Error::LabelCount { expected: self.n(), found: labels.len() });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    fn labelled(self, labels: Vec<String>) -> Self {
        debug_assert_eq!(labels.len(), self.n());
        Graph { labels: Some(labels), ..self }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn neighbours(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Breadth-first distances from `src`; `None` for unreachable vertices.
    pub fn distances_from(&self, src: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        let mut queue = VecDeque::new();
        dist[src] = Some(0);
        queue.push_back(src);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap_or(0);
            for &v in &self.adj[u] {
                if dist[v].is_none() {
                    dist[v] = Some(d + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.n() == 0 || self.distances_from(0).iter().all(Option::is_some)
    }

    /// Largest eccentricity, or `None` when disconnected.
    pub fn diameter(&self) -> Option<usize> {
        let mut best = 0;
        for v in 0..self.n() {
            for d in self.distances_from(v) {
                best = best.max(d?);
            }
        }
        Some(best)
    }

    pub fn is_tree(&self) -> bool {
        self.n() >= 1 && self.edge_count() == self.n() - 1 && self.is_connected()
    }

    /// Two vertices of degree 1, the rest of degree 2, connected.
    pub fn is_path_graph(&self) -> bool {
        let n = self.n();
        if n < 2 || !self.is_connected() {
            return false;
        }
        let ends = (0..n).filter(|&v| self.degree(v) == 1).count();
        ends == 2 && (0..n).all(|v| matches!(self.degree(v), 1 | 2))
    }

    /// Every vertex of degree 2, connected, at least three vertices.
    pub fn is_cycle_graph(&self) -> bool {
        self.n() >= 3 && (0..self.n()).all(|v| self.degree(v) == 2) && self.is_connected()
    }

    /// Returns a new graph with vertex `n` joined to each of `neighbours`.
    pub fn add_vertex(&self, neighbours: &[usize]) -> Result<Graph> {
        if neighbours.is_empty() {
            return Err(Error::EmptyNeighbourhood);
        }
        let n = self.n();
        let mut edges: Vec<(usize, usize)> = self.edges().collect();
        edges.extend(neighbours.iter().map(|&u| (u, n)));
        let g = Graph::new(n + 1, edges)?;
        Ok(match &self.labels {
            Some(labels) => {
                let mut labels = labels.clone();
                labels.push(String::from("v*"));
                g.labelled(labels)
            }
            None => g,
        })
    }

    /// Finds a bipartition whose cross pairs are all edges, if one exists.
    ///
    /// Such a split exists exactly when the complement graph is
    /// disconnected; `part_a` is the complement component of vertex 0.
    pub fn detect_spanning_complete_bipartite(&self) -> Result<Option<Bipartition>> {
        let n = self.n();
        if n < 2 {
            return Err(Error::TooFewVertices { required: 2, found: n });
        }
        let mut in_a = vec![false; n];
        let mut stack = vec![0];
        in_a[0] = true;
        while let Some(u) = stack.pop() {
            // complement neighbours of u
            for (v, seen) in in_a.iter_mut().enumerate() {
                if v != u && !*seen && !self.has_edge(u, v) {
                    *seen = true;
                    stack.push(v);
                }
            }
        }
        let part_a: Vec<usize> = (0..n).filter(|&v| in_a[v]).collect();
        if part_a.len() == n {
            return Ok(None);
        }
        let part_b = (0..n).filter(|&v| !in_a[v]).collect();
        Ok(Some(Bipartition { part_a, part_b }))
    }

    fn require_tree(&self) -> Result<()> {
        if self.is_tree() {
            Ok(())
        } else {
            Err(Error::NotATree)
        }
    }

    /// For a tree: does it contain a path on five vertices? Equivalent to
    /// the tree diameter being at least 4, found by two BFS sweeps.
    pub fn contains_p5_subgraph(&self) -> Result<bool> {
        self.require_tree()?;
        let far = |src: usize| {
            self.distances_from(src)
                .into_iter()
                .enumerate()
                .max_by_key(|&(v, d)| (d, core::cmp::Reverse(v)))
                .map(|(v, d)| (v, d.unwrap_or(0)))
                .unwrap_or((src, 0))
        };
        let (a, _) = far(0);
        let (_, diameter) = far(a);
        Ok(diameter >= 4)
    }

    /// For a tree: does it contain the graph `I` (two adjacent vertices each
    /// with two further neighbours)? In a tree that holds exactly when some
    /// edge joins two vertices of degree at least 3.
    pub fn contains_i_subgraph(&self) -> Result<bool> {
        self.require_tree()?;
        Ok(self.edges().any(|(u, v)| self.degree(u) >= 3 && self.degree(v) >= 3))
    }

    /// Least k admitting a proper k-colouring. Each tried k must satisfy
    /// `k^n <= cap`.
    pub fn chromatic_number(&self, cap: Cap) -> Result<usize> {
        let n = self.n();
        if n == 0 {
            return Ok(0);
        }
        let mut colours = vec![0u8; n];
        for k in 1..=n {
            let candidates = candidate_count(k, n);
            if candidates > cap.0 {
                return Err(Error::CapExceeded { candidates, cap: cap.0 });
            }
            if self.colour_from(0, k, 0, &mut colours) {
                return Ok(k);
            }
        }
        unreachable!("n colours always suffice")
    }

    // Colours vertex `v` onward; new colours are introduced in order so
    // each colouring is tried once up to relabelling.
    fn colour_from(&self, v: usize, k: usize, used: usize, colours: &mut [u8]) -> bool {
        if v == self.n() {
            return true;
        }
        for c in 0..k.min(used + 1) {
            let clash = self.adj[v].iter().any(|&u| u < v && colours[u] as usize == c);
            if !clash {
                colours[v] = c as u8;
                if self.colour_from(v + 1, k, used.max(c + 1), colours) {
                    return true;
                }
            }
        }
        false
    }
}

fn numbered(prefix: &str, range: core::ops::RangeInclusive<usize>) -> impl Iterator<Item = String> + '_ {
    range.map(move |i| format!("{prefix}{i}"))
}

/// Path `v1 - v2 - ... - vn`.
pub fn make_path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameter("a path needs at least one vertex"));
    }
    let g = Graph::new(n, (1..n).map(|i| (i - 1, i)))?;
    Ok(g.labelled(numbered("v", 1..=n).collect()))
}

pub fn make_cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter("a cycle needs at least three vertices"));
    }
    let g = Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))?;
    Ok(g.labelled(numbered("v", 1..=n).collect()))
}

/// `K_{m,q}` with parts `0..m` and `m..m+q`.
pub fn make_complete_bipartite(m: usize, q: usize) -> Result<Graph> {
    if m == 0 || q == 0 {
        return Err(Error::InvalidParameter("both parts of K_{m,q} must be non-empty"));
    }
    Graph::new(m + q, (0..m).flat_map(|a| (m..m + q).map(move |b| (a, b))))
}

/// The star `K_{1,m}` with centre 0.
pub fn make_star(m: usize) -> Result<Graph> {
    make_complete_bipartite(1, m)
}

/// `Psi_n`: hub `v0` (vertex 0) with leaves `v1..vn` (vertices `1..=n`) and a
/// pendant path `v0 - p1 - p2` (vertices `n+1`, `n+2`).
pub fn make_psi(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameter("Psi_n needs n >= 1"));
    }
    let mut edges: Vec<(usize, usize)> = (1..=n).map(|leaf| (0, leaf)).collect();
    edges.push((0, n + 1));
    edges.push((n + 1, n + 2));
    let g = Graph::new(n + 3, edges)?;
    let mut labels: Vec<String> = numbered("v", 0..=n).collect();
    labels.push(String::from("p1"));
    labels.push(String::from("p2"));
    Ok(g.labelled(labels))
}

/// `Phi_{p,q}`: the double star. Centres are vertices 0 and 1; leaves
/// `u1..up` hang from 0 and `w1..wq` from 1.
pub fn make_phi(p: usize, q: usize) -> Result<Graph> {
    if p < 2 || q < 2 {
        return Err(Error::InvalidParameter("Phi_{p,q} needs p, q >= 2"));
    }
    let mut edges = vec![(0, 1)];
    edges.extend((0..p).map(|i| (0, 2 + i)));
    edges.extend((0..q).map(|i| (1, 2 + p + i)));
    let g = Graph::new(p + q + 2, edges)?;
    let mut labels = vec![String::from("u"), String::from("w")];
    labels.extend(numbered("u", 1..=p));
    labels.extend(numbered("w", 1..=q));
    Ok(g.labelled(labels))
}

/// The six-vertex tree `I`: `x1-x2-x3`, `x4-x5-x6`, and `x2-x5`, on
/// vertices `0..6` in label order.
pub fn make_i() -> Graph {
    let g = Graph::new(6, [(0, 1), (1, 2), (3, 4), (4, 5), (1, 4)]).expect("static edge list");
    g.labelled(numbered("x", 1..=6).collect())
}
