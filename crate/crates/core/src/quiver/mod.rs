//! Quivers: vertices, edges, and source/target maps.

mod exponential;

pub use exponential::{classical_exponential, exponential, QuiverExponential};
pub(crate) use exponential::pair_lookup;

use crate::error::{Error, Result};
use crate::finset::{self, Atom, FiniteFunction, FiniteSet};
use crate::presheaf::{Presheaf, PresheafMorphism, Shape};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct QuiverShape;

impl Shape for QuiverShape {
    const OBJECT: &'static str = "quiver";
    const SORTS: &'static [&'static str] = &["vertices", "edges"];
    const ARROWS: &'static [(&'static str, usize)] = &[("source", 0), ("target", 0)];
    const ELEMENT: &'static [&'static str] = &["vertex", "edge"];
}

pub type Quiver = Presheaf<QuiverShape>;
pub type QuiverMorphism = PresheafMorphism<QuiverShape>;

pub const VERTICES: usize = 0;
pub const EDGES: usize = 1;

impl Presheaf<QuiverShape> {
    pub fn quiver(v: FiniteSet, e: FiniteSet, src: FiniteFunction, tgt: FiniteFunction) -> Result<Quiver> {
        Presheaf::new(vec![v, e], vec![src, tgt])
    }

    /// From labeled vertices and `(edge, source, target)` triples.
    pub fn from_edges(vertices: &[&str], edges: &[(&str, &str, &str)]) -> Result<Quiver> {
        let v = FiniteSet::new(vertices.iter().map(|n| Atom::symbol(n)).collect::<Result<Vec<_>>>()?)?;
        let e = FiniteSet::new(edges.iter().map(|t| Atom::symbol(t.0)).collect::<Result<Vec<_>>>()?)?;
        let src = FiniteFunction::from_pairs(
            e.clone(),
            v.clone(),
            edges.iter().map(|t| (Atom::label(t.0), Atom::label(t.1))),
        )?;
        let tgt = FiniteFunction::from_pairs(
            e.clone(),
            v.clone(),
            edges.iter().map(|t| (Atom::label(t.0), Atom::label(t.2))),
        )?;
        Quiver::quiver(v, e, src, tgt)
    }

    pub fn vertices(&self) -> &FiniteSet {
        self.set(VERTICES)
    }

    pub fn edges(&self) -> &FiniteSet {
        self.set(EDGES)
    }

    pub fn src(&self) -> &FiniteFunction {
        self.arrow(0)
    }

    pub fn tgt(&self) -> &FiniteFunction {
        self.arrow(1)
    }

    /// Distinct (source, target) index pairs that carry an edge.
    pub fn edge_pairs(&self) -> Vec<(usize, usize)> {
        let mut pairs: Vec<(usize, usize)> = (0..self.edges().len())
            .map(|e| (self.src().at(e), self.tgt().at(e)))
            .collect();
        pairs.sort_unstable();
        pairs.dedup();
        pairs
    }
}

impl PresheafMorphism<QuiverShape> {
    pub fn quiver_map(dom: Quiver, cod: Quiver, fv: FiniteFunction, fe: FiniteFunction) -> Result<QuiverMorphism> {
        PresheafMorphism::new(dom, cod, vec![fv, fe])
    }

    pub fn fv(&self) -> &FiniteFunction {
        self.comp(VERTICES)
    }

    pub fn fe(&self) -> &FiniteFunction {
        self.comp(EDGES)
    }
}

/// The named quivers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StandardQuiver {
    /// Complete digraph with loops on `X`.
    VertexStar,
    /// Isolated vertices `X`.
    VertexDiamond,
    /// Bouquet of loops `X` at one vertex.
    EdgeStar,
    /// Disjoint 1-paths, one per element of `X`.
    EdgeDiamond,
    Terminal,
    Path1,
}

impl StandardQuiver {
    pub const ALL: [StandardQuiver; 6] = [
        StandardQuiver::VertexStar,
        StandardQuiver::VertexDiamond,
        StandardQuiver::EdgeStar,
        StandardQuiver::EdgeDiamond,
        StandardQuiver::Terminal,
        StandardQuiver::Path1,
    ];

    pub fn name(self) -> &'static str {
        match self {
            StandardQuiver::VertexStar => "vertex_star",
            StandardQuiver::VertexDiamond => "vertex_diamond",
            StandardQuiver::EdgeStar => "edge_star",
            StandardQuiver::EdgeDiamond => "edge_diamond",
            StandardQuiver::Terminal => "terminal",
            StandardQuiver::Path1 => "path1",
        }
    }

    pub fn parse(name: &str) -> Result<StandardQuiver> {
        StandardQuiver::ALL
            .into_iter()
            .find(|k| k.name() == name)
            .ok_or_else(|| Error::Unknown(name.to_owned()))
    }

    pub fn build(self, x: &FiniteSet) -> Quiver {
        match self {
            StandardQuiver::VertexStar => vertex_star(x),
            StandardQuiver::VertexDiamond => vertex_diamond(x),
            StandardQuiver::EdgeStar => edge_star(x),
            StandardQuiver::EdgeDiamond => edge_diamond(x),
            StandardQuiver::Terminal => terminal(),
            StandardQuiver::Path1 => path1(),
        }
    }
}

/// `(X, X×X, π₁, π₂)`.
pub fn vertex_star(x: &FiniteSet) -> Quiver {
    let (_, pr) = finset::product_set(&[x.clone(), x.clone()]);
    let [p1, p2]: [FiniteFunction; 2] = pr.try_into().expect("two projections");
    Presheaf::raw(vec![x.clone(), p1.dom().clone()], vec![p1, p2])
}

/// `(X, ∅)`.
pub fn vertex_diamond(x: &FiniteSet) -> Quiver {
    Presheaf::from_tables(vec![x.clone(), FiniteSet::empty()], vec![vec![], vec![]])
}

/// `({1}, X)` with every edge a loop.
pub fn edge_star(x: &FiniteSet) -> Quiver {
    Presheaf::from_tables(vec![FiniteSet::one(), x.clone()], vec![vec![0; x.len()], vec![0; x.len()]])
}

/// `({0,1}×X, X)` with `e: (0,e) → (1,e)`.
pub fn edge_diamond(x: &FiniteSet) -> Quiver {
    let (v, inj) = finset::coproduct_set(&[x.clone(), x.clone()]);
    Presheaf::raw(
        vec![v, x.clone()],
        vec![inj[0].clone(), inj[1].clone()],
    )
}

/// The one-loop quiver.
pub fn terminal() -> Quiver {
    edge_star(&FiniteSet::one())
}

/// The 1-path `(0,1) → (1,1)` with edge `1`.
pub fn path1() -> Quiver {
    edge_diamond(&FiniteSet::one())
}
