//! Graphviz DOT rendering of flag graphs, simple graphs, layer graphs and
//! symmetry type graphs.

use std::fmt::Write as _;

use crate::factorization::OneFactorization;
use crate::graph::SimpleGraph;
use crate::maniplex::Maniplex;
use crate::symmetry::{Dart, SymmetryTypeGraph};

const PALETTE: [&str; 8] = [
    "red",
    "blue",
    "darkgreen",
    "orange",
    "purple",
    "brown",
    "deepskyblue",
    "magenta",
];

fn color_of(c: usize) -> &'static str {
    PALETTE[c % PALETTE.len()]
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Each flag is a node; each edge is drawn once, colored by its label.
pub fn maniplex_dot(m: &Maniplex) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "graph {} {{", quote(m.name().unwrap_or("maniplex")));
    let _ = writeln!(out, "  node [shape=circle];");
    for f in 0..m.flag_count() {
        let _ = writeln!(out, "  {f};");
    }
    for f in 0..m.flag_count() {
        for i in 0..m.rank() {
            let g = m.adj(f, i);
            if f < g {
                let _ = writeln!(out, "  {f} -- {g} [label={i}, color={}];", color_of(i));
            }
        }
    }
    out.push_str("}\n");
    out
}

pub fn simple_graph_dot(g: &SimpleGraph, name: &str) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "graph {} {{", quote(name));
    for v in 0..g.node_count() {
        let _ = writeln!(out, "  {v};");
    }
    for (a, b) in g.edges() {
        let _ = writeln!(out, "  {a} -- {b};");
    }
    out.push_str("}\n");
    out
}

/// The layer graph of a factorization: nodes `1..=k`, one color per factor.
pub fn factorization_dot(fac: &OneFactorization) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "graph {} {{", quote(&format!("layers K_{}", fac.k())));
    for v in 1..=fac.k() {
        let _ = writeln!(out, "  {v};");
    }
    let (_, tagged) = fac.layer_graph();
    for (a, b, c) in tagged {
        let _ = writeln!(
            out,
            "  {} -- {} [label={}, color={}];",
            a + 1,
            b + 1,
            c + 1,
            color_of(c)
        );
    }
    out.push_str("}\n");
    out
}

/// Semi-edges are drawn as an edge to a small anonymous point node.
pub fn stg_dot(stg: &SymmetryTypeGraph, name: &str) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "graph {} {{", quote(name));
    for v in 0..stg.node_count() {
        let _ = writeln!(out, "  {v} [shape=circle];");
    }
    for (v, row) in stg.darts.iter().enumerate() {
        for (c, dart) in row.iter().enumerate() {
            match *dart {
                Dart::To(w) if v < w => {
                    let _ = writeln!(out, "  {v} -- {w} [label={c}, color={}];", color_of(c));
                }
                Dart::To(_) => {}
                Dart::SemiEdge => {
                    let _ = writeln!(out, "  s{v}_{c} [shape=point, width=0.05, label=\"\"];");
                    let _ = writeln!(out, "  {v} -- s{v}_{c} [label={c}, color={}];", color_of(c));
                }
            }
        }
    }
    out.push_str("}\n");
    out
}
