//! Graphviz DOT output.
//!
//! Incidence hypergraphs are drawn with vertices as circles, edges as
//! squares and one line per incidence.

use std::fmt::Write;

use anyhow::{bail, Result};
use clap::ValueEnum;
use graphcat::incidence::{self, IncidenceHypergraph};
use graphcat::quiver::Quiver;
use graphcat::set_system::SetSystemHypergraph;
use graphcat::{Atom, Bounds};

use crate::document::Object;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
pub enum View {
    /// The object as it is.
    Plain,
    /// Bipartite incidence digraph: vertex side and edge side in two ranks.
    Bipartite,
    /// The looped incidence-matrix quiver.
    IncidenceMatrix,
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

fn id(prefix: &str, a: &Atom) -> String {
    quote(&format!("{prefix}{}", a.text()))
}

fn quiver_dot(q: &Quiver) -> String {
    let mut out = String::from("digraph G {\n");
    for v in q.vertices().iter() {
        let _ = writeln!(out, "  {} [shape=circle];", quote(v.text()));
    }
    for (e, a) in q.edges().iter().enumerate() {
        let (s, t) = (q.vertices().get(q.src().at(e)), q.vertices().get(q.tgt().at(e)));
        let _ = writeln!(out, "  {} -> {} [label={}];", quote(s.text()), quote(t.text()), quote(a.text()));
    }
    out.push_str("}\n");
    out
}

fn hypergraph_dot(h: &SetSystemHypergraph) -> String {
    let mut out = String::from("graph G {\n");
    for v in h.vertices().iter() {
        let _ = writeln!(out, "  {} [shape=circle,label={}];", id("v:", v), quote(v.text()));
    }
    for (e, a) in h.edges().iter().enumerate() {
        let _ = writeln!(out, "  {} [shape=square,label={}];", id("e:", a), quote(a.text()));
        for &v in h.ends(e) {
            let _ = writeln!(out, "  {} -- {};", id("v:", h.vertices().get(v)), id("e:", a));
        }
    }
    out.push_str("}\n");
    out
}

fn incidence_dot(g: &IncidenceHypergraph) -> String {
    let mut out = String::from("graph G {\n");
    for v in g.vertices().iter() {
        let _ = writeln!(out, "  {} [shape=circle,label={}];", id("v:", v), quote(v.text()));
    }
    for e in g.edges().iter() {
        let _ = writeln!(out, "  {} [shape=square,label={}];", id("e:", e), quote(e.text()));
    }
    for (i, a) in g.incidences().iter().enumerate() {
        let v = g.vertices().get(g.port().at(i));
        let e = g.edges().get(g.att().at(i));
        let _ = writeln!(out, "  {} -- {} [label={}];", id("v:", v), id("e:", e), quote(a.text()));
    }
    out.push_str("}\n");
    out
}

/// Two ranks: vertices on one, edges on the other, an arrow per incidence.
fn bipartite_dot(g: &IncidenceHypergraph) -> String {
    let mut out = String::from("digraph G {\n  rankdir=LR;\n");
    let mut rank = |prefix: &str, shape: &str, atoms: &[Atom]| {
        if atoms.is_empty() {
            return;
        }
        out.push_str("  { rank=same;");
        for a in atoms {
            let _ = write!(out, " {} [shape={shape},label={}];", id(prefix, a), quote(a.text()));
        }
        out.push_str(" }\n");
    };
    rank("v:", "circle", g.vertices().atoms());
    rank("e:", "square", g.edges().atoms());
    for (i, a) in g.incidences().iter().enumerate() {
        let v = g.vertices().get(g.port().at(i));
        let e = g.edges().get(g.att().at(i));
        let _ = writeln!(out, "  {} -> {} [label={}];", id("v:", v), id("e:", e), quote(a.text()));
    }
    out.push_str("}\n");
    out
}

fn as_incidence(x: &Object) -> Result<IncidenceHypergraph> {
    match x {
        Object::Incidence(g) => Ok(g.clone()),
        Object::Hypergraph(h) => Ok(incidence::incidence_forming(h)),
        Object::Quiver(_) => bail!("this view needs a hypergraph or incidence hypergraph, not a quiver"),
    }
}

pub fn emit(x: &Object, view: View, bounds: &Bounds) -> Result<String> {
    Ok(match (view, x) {
        (View::Plain, Object::Quiver(q)) => quiver_dot(q),
        (View::Plain, Object::Hypergraph(h)) => hypergraph_dot(h),
        (View::Plain, Object::Incidence(g)) => incidence_dot(g),
        (View::Bipartite, _) => bipartite_dot(&as_incidence(x)?),
        (View::IncidenceMatrix, _) => quiver_dot(&incidence::upsilon_star(&as_incidence(x)?, bounds)?),
    })
}
