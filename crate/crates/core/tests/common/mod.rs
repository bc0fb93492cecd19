//! Independent oracles shared by the integration tests. Nothing here calls
//! into the enumeration, reconfiguration or certificate code under test.
#![allow(dead_code)]

use std::collections::BTreeMap;

use strongrecolor_core::{Colouring, Graph};

/// Every vector in `0..k` of length `n`, in lexicographic order.
pub fn all_vectors(n: usize, k: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut cur = vec![0u8; n];
    loop {
        out.push(cur.clone());
        let mut i = n;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            cur[i] += 1;
            if (cur[i] as usize) < k {
                break;
            }
            cur[i] = 0;
        }
    }
}

pub fn proper(g: &Graph, c: &[u8]) -> bool {
    g.edges().all(|(u, v)| c[u] != c[v])
}

pub fn surjective(c: &[u8], k: usize) -> bool {
    (0..k as u8).all(|x| c.contains(&x))
}

/// The naive filter over all `k^n` vectors.
pub fn naive_colourings(g: &Graph, k: usize, strong: bool) -> Vec<Vec<u8>> {
    all_vectors(g.n(), k).into_iter().filter(|c| proper(g, c) && (!strong || surjective(c, k))).collect()
}

pub fn raw(cs: &[Colouring]) -> Vec<Vec<u8>> {
    cs.iter().map(|c| c.colours().to_vec()).collect()
}

fn binomial(n: u64, r: u64) -> i128 {
    (0..r).fold(1i128, |acc, i| acc * (n - i) as i128 / (i + 1) as i128)
}

/// Surjective colourings from a chromatic polynomial by inclusion–exclusion
/// over the set of colours left out.
pub fn strong_count_from(chromatic: impl Fn(i128) -> i128, k: u64) -> i128 {
    (0..=k)
        .map(|j| {
            let sign = if (k - j).is_multiple_of(2) { 1 } else { -1 };
            sign * binomial(k, j) * chromatic(j as i128)
        })
        .sum()
}

pub fn tree_chromatic(n: usize) -> impl Fn(i128) -> i128 {
    move |x| x * (x - 1).pow(n as u32 - 1)
}

pub fn cycle_chromatic(n: usize) -> impl Fn(i128) -> i128 {
    move |x| (x - 1).pow(n as u32) + if n.is_multiple_of(2) { x - 1 } else { 1 - x }
}

fn bits_under(g: &Graph, order: &[usize]) -> u64 {
    let n = order.len();
    let mut bits = 0u64;
    for i in 0..n {
        for j in i + 1..n {
            bits = (bits << 1) | g.has_edge(order[i], order[j]) as u64;
        }
    }
    bits
}

/// Isomorphism-invariant key: vertices are grouped by (degree, sorted
/// neighbour degrees) and the adjacency bit string is maximised over all
/// orders that respect the grouping. Only sensible for `n <= 8`.
pub fn canonical(g: &Graph) -> (Vec<(usize, Vec<usize>)>, u64) {
    let n = g.n();
    let sig = |v: usize| {
        let mut nd: Vec<usize> = g.neighbours(v).iter().map(|&u| g.degree(u)).collect();
        nd.sort_unstable();
        (g.degree(v), nd)
    };
    let mut vs: Vec<usize> = (0..n).collect();
    vs.sort_by_key(|&v| sig(v));
    let vsig: Vec<_> = (0..n).map(sig).collect();
    let sigs: Vec<_> = vs.iter().map(|&v| vsig[v].clone()).collect();
    let mut best = 0u64;
    let mut order = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn rec(
        g: &Graph,
        sigs: &[(usize, Vec<usize>)],
        vsig: &[(usize, Vec<usize>)],
        order: &mut Vec<usize>,
        used: &mut [bool],
        best: &mut u64,
    ) {
        let pos = order.len();
        if pos == sigs.len() {
            *best = (*best).max(bits_under(g, order));
            return;
        }
        for v in 0..sigs.len() {
            if !used[v] && vsig[v] == sigs[pos] {
                used[v] = true;
                order.push(v);
                rec(g, sigs, vsig, order, used, best);
                order.pop();
                used[v] = false;
            }
        }
    }
    rec(g, &sigs, &vsig, &mut order, &mut used, &mut best);
    (sigs, best)
}

pub type CanonicalKey = (usize, usize, (Vec<(usize, Vec<usize>)>, u64));

pub fn key(g: &Graph) -> CanonicalKey {
    (g.n(), g.edge_count(), canonical(g))
}

pub fn isomorphic(a: &Graph, b: &Graph) -> bool {
    key(a) == key(b)
}

/// Generic subgraph isomorphism: is there an injective map of `pattern`'s
/// vertices into `host` carrying every pattern edge onto a host edge?
pub fn contains_subgraph(host: &Graph, pattern: &Graph) -> bool {
    fn extend(host: &Graph, pattern: &Graph, map: &mut Vec<usize>, used: &mut [bool]) -> bool {
        let p = map.len();
        if p == pattern.n() {
            return true;
        }
        for h in 0..host.n() {
            if used[h] {
                continue;
            }
            let fits = pattern.neighbours(p).iter().filter(|&&q| q < p).all(|&q| host.has_edge(map[q], h));
            if fits {
                used[h] = true;
                map.push(h);
                if extend(host, pattern, map, used) {
                    return true;
                }
                map.pop();
                used[h] = false;
            }
        }
        false
    }
    pattern.n() <= host.n() && extend(host, pattern, &mut Vec::new(), &mut vec![false; host.n()])
}

/// Connected graphs on `1..=max_n` vertices, one per isomorphism class,
/// indexed by vertex count. Every connected graph has a vertex whose removal
/// leaves it connected, so attaching a new vertex to every non-empty subset
/// of each smaller class reaches every class.
pub fn connected_graphs(max_n: usize) -> Vec<Vec<Graph>> {
    let mut by_n: Vec<Vec<Graph>> = vec![Vec::new(), vec![Graph::empty(1)]];
    for n in 2..=max_n {
        let mut seen = BTreeMap::new();
        for g in &by_n[n - 1] {
            for mask in 1u32..(1 << (n - 1)) {
                let nbrs: Vec<usize> = (0..n - 1).filter(|&v| mask >> v & 1 == 1).collect();
                let h = g.add_vertex(&nbrs).expect("in-range neighbours");
                seen.entry(key(&h)).or_insert(h);
            }
        }
        by_n.push(seen.into_values().collect());
    }
    by_n
}

/// Brute-force connectivity of the Hamming-1 graph on a set of colour vectors.
pub fn hamming_components(states: &[Vec<u8>]) -> usize {
    let m = states.len();
    let mut label: Vec<Option<usize>> = vec![None; m];
    let mut count = 0;
    for s in 0..m {
        if label[s].is_some() {
            continue;
        }
        label[s] = Some(count);
        let mut stack = vec![s];
        while let Some(a) = stack.pop() {
            for b in 0..m {
                if label[b].is_none() && hamming(&states[a], &states[b]) == 1 {
                    label[b] = Some(count);
                    stack.push(b);
                }
            }
        }
        count += 1;
    }
    count
}

pub fn hamming(a: &[u8], b: &[u8]) -> usize {
    a.iter().zip(b).filter(|(x, y)| x != y).count()
}

/// Every edge list on `n` vertices encoded by the bits of `mask`.
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    let mut bit = 0;
    for u in 0..n {
        for v in u + 1..n {
            if mask >> bit & 1 == 1 {
                edges.push((u, v));
            }
            bit += 1;
        }
    }
    Graph::new(n, edges).expect("simple graph")
}

pub fn pair_count(n: usize) -> u32 {
    (n * n.saturating_sub(1) / 2) as u32
}
