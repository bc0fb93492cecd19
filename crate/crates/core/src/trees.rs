//! Labelled trees from Prüfer sequences and AHU canonical forms, used to
//! enumerate every tree on `n` vertices up to isomorphism.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Decodes a Prüfer sequence (length `n - 2`, entries `< n`) into the
/// labelled tree on `n` vertices it encodes.
pub fn prufer_decode(seq: &[usize], n: usize) -> Result<Graph> {
    if n < 2 || seq.len() != n - 2 {
        return Err(Error::InvalidParameter("a Prüfer sequence for n vertices has length n - 2"));
    }
    if let Some(&v) = seq.iter().find(|&&v| v >= n) {
        return Err(Error::VertexOutOfRange { vertex: v, n });
    }
    let mut degree = vec![1usize; n];
    for &v in seq {
        degree[v] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &v in seq {
        let leaf = (0..n).find(|&u| degree[u] == 1).expect("a leaf always remains");
        edges.push((leaf, v));
        degree[leaf] -= 1;
        degree[v] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&u| degree[u] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::new(n, edges)
}

fn centres(t: &Graph) -> Vec<usize> {
    let n = t.n();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut degree: Vec<usize> = (0..n).map(|v| t.degree(v)).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &leaf in &layer {
            degree[leaf] = 0;
            for &u in t.neighbours(leaf) {
                if degree[u] > 0 {
                    degree[u] -= 1;
                    if degree[u] == 1 {
                        next.push(u);
                    }
                }
            }
        }
        layer = next;
    }
    layer.sort_unstable();
    layer
}

fn encode_rooted(t: &Graph, v: usize, parent: usize, out: &mut Vec<u8>) {
    let mut children: Vec<Vec<u8>> = t
        .neighbours(v)
        .iter()
        .filter(|&&u| u != parent)
        .map(|&u| {
            let mut code = Vec::new();
            encode_rooted(t, u, v, &mut code);
            code
        })
        .collect();
    children.sort_unstable();
    out.push(b'(');
    for c in children {
        out.extend(c);
    }
    out.push(b')');
}

/// AHU encoding of the tree rooted at its centre (the smaller of the two
/// encodings when there are two centres). Two trees are isomorphic exactly
/// when their canonical forms are equal.
pub fn canonical_form(t: &Graph) -> Result<Vec<u8>> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    let mut best: Option<Vec<u8>> = None;
    for c in centres(t) {
        let mut code = Vec::new();
        encode_rooted(t, c, usize::MAX, &mut code);
        if best.as_ref().is_none_or(|b| code < *b) {
            best = Some(code);
        }
    }
    Ok(best.unwrap_or_default())
}

/// One representative per isomorphism class of trees on `n` vertices, in
/// canonical-form order. Walks all `n^(n-2)` Prüfer sequences.
pub fn nonisomorphic_trees(n: usize) -> Vec<Graph> {
    match n {
        0 => return Vec::new(),
        1 => return vec![Graph::empty(1)],
        _ => {}
    }
    let mut classes: BTreeMap<Vec<u8>, Graph> = BTreeMap::new();
    let mut seq = vec![0usize; n - 2];
    loop {
        let t = prufer_decode(&seq, n).expect("in-range sequence");
        let code = canonical_form(&t).expect("decoded graph is a tree");
        classes.entry(code).or_insert(t);
        // odometer increment
        let mut i = 0;
        loop {
            if i == seq.len() {
                return classes.into_values().collect();
            }
            seq[i] += 1;
            if seq[i] < n {
                break;
            }
            seq[i] = 0;
            i += 1;
        }
    }
}
