//! Colour-graph exports: Graphviz DOT, CSV edge lists and a JSON dump.

use std::fmt::Write;

use serde::Serialize;
use strongrecolor_core::{Mode, ReconfigGraph};

use crate::formats::ComponentJson;

/// Undirected DOT graph; each state is a node named by its letter string.
pub fn to_dot(rg: &ReconfigGraph) -> String {
    let name = match rg.mode() {
        Mode::Strong => "S",
        Mode::Proper => "C",
    };
    let labels: Vec<String> = rg.states().iter().map(|c| c.letters()).collect();
    let mut out = String::new();
    let _ = writeln!(out, "graph {}_{} {{", name, rg.k());
    let _ = writeln!(out, "  node [shape=box, fontname=monospace];");
    for l in &labels {
        let _ = writeln!(out, "  \"{l}\";");
    }
    for (a, b) in rg.edges() {
        let _ = writeln!(out, "  \"{}\" -- \"{}\";", labels[a], labels[b]);
    }
    out.push_str("}\n");
    out
}

/// `source,target` rows, one per edge, states as letter strings.
pub fn to_csv(rg: &ReconfigGraph) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["source", "target"]).expect("in-memory write");
    for (a, b) in rg.edges() {
        w.write_record([rg.states()[a].letters(), rg.states()[b].letters()]).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("letters are ASCII")
}

#[derive(Serialize)]
struct Dump<'a> {
    mode: &'a str,
    k: usize,
    states: Vec<&'a [u8]>,
    edges: Vec<(usize, usize)>,
    component_of: &'a [usize],
    components: Vec<ComponentJson>,
}

/// States (as integer arrays), edges by state index, and component labels.
pub fn to_json(rg: &ReconfigGraph) -> String {
    crate::formats::to_json(&Dump {
        mode: rg.mode().as_str(),
        k: rg.k(),
        states: rg.states().iter().map(|c| c.colours()).collect(),
        edges: rg.edges(),
        component_of: rg.components(),
        components: rg.component_summary().iter().map(ComponentJson::from).collect(),
    })
}
