//! Incidence hypergraphs: vertices, edges, and incidences with port and
//! attachment maps.

mod bridge;
mod exponential;
mod upsilon;

pub use bridge::{forget_incidence, incidence_forming, incidence_forming_map};
pub use exponential::{exponential, IncidenceExponential};
pub use upsilon::{upsilon, upsilon_diamond, upsilon_diamond_map, upsilon_map, upsilon_star, upsilon_star_map};

use crate::error::{Error, Result};
use crate::finset::{self, Atom, FiniteFunction, FiniteSet};
use crate::presheaf::{Presheaf, PresheafMorphism, Shape};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct IncidenceShape;

impl Shape for IncidenceShape {
    const OBJECT: &'static str = "incidence hypergraph";
    const SORTS: &'static [&'static str] = &["vertices", "edges", "incidences"];
    const ARROWS: &'static [(&'static str, usize)] = &[("port", 0), ("attachment", 1)];
    const ELEMENT: &'static [&'static str] = &["vertex", "edge", "incidence"];
}

pub type IncidenceHypergraph = Presheaf<IncidenceShape>;
pub type IncidenceMorphism = PresheafMorphism<IncidenceShape>;

pub const VERTICES: usize = 0;
pub const EDGES: usize = 1;
pub const INCIDENCES: usize = 2;

impl Presheaf<IncidenceShape> {
    pub fn incidence(
        v: FiniteSet,
        e: FiniteSet,
        i: FiniteSet,
        port: FiniteFunction,
        att: FiniteFunction,
    ) -> Result<IncidenceHypergraph> {
        Presheaf::new(vec![v, e, i], vec![port, att])
    }

    /// From labels and `(incidence, vertex, edge)` triples.
    pub fn from_incidences(
        vertices: &[&str],
        edges: &[&str],
        incidences: &[(&str, &str, &str)],
    ) -> Result<IncidenceHypergraph> {
        let set = |names: &[&str]| -> Result<FiniteSet> {
            FiniteSet::new(names.iter().map(|n| Atom::symbol(n)).collect::<Result<Vec<_>>>()?)
        };
        let v = set(vertices)?;
        let e = set(edges)?;
        let i = set(&incidences.iter().map(|t| t.0).collect::<Vec<_>>())?;
        let port = FiniteFunction::from_pairs(
            i.clone(),
            v.clone(),
            incidences.iter().map(|t| (Atom::label(t.0), Atom::label(t.1))),
        )?;
        let att = FiniteFunction::from_pairs(
            i.clone(),
            e.clone(),
            incidences.iter().map(|t| (Atom::label(t.0), Atom::label(t.2))),
        )?;
        IncidenceHypergraph::incidence(v, e, i, port, att)
    }

    pub fn vertices(&self) -> &FiniteSet {
        self.set(VERTICES)
    }

    pub fn edges(&self) -> &FiniteSet {
        self.set(EDGES)
    }

    pub fn incidences(&self) -> &FiniteSet {
        self.set(INCIDENCES)
    }

    pub fn port(&self) -> &FiniteFunction {
        self.arrow(0)
    }

    pub fn att(&self) -> &FiniteFunction {
        self.arrow(1)
    }
}

impl PresheafMorphism<IncidenceShape> {
    pub fn incidence_map(
        dom: IncidenceHypergraph,
        cod: IncidenceHypergraph,
        fv: FiniteFunction,
        fe: FiniteFunction,
        fi: FiniteFunction,
    ) -> Result<IncidenceMorphism> {
        PresheafMorphism::new(dom, cod, vec![fv, fe, fi])
    }

    pub fn fv(&self) -> &FiniteFunction {
        self.comp(VERTICES)
    }

    pub fn fe(&self) -> &FiniteFunction {
        self.comp(EDGES)
    }

    pub fn fi(&self) -> &FiniteFunction {
        self.comp(INCIDENCES)
    }
}

/// The named incidence hypergraphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StandardIncidence {
    /// Vertices `X`, one edge, one incidence from each vertex to it.
    VStar,
    /// Isolated vertices `X`.
    VDiamond,
    /// Edges `X` at one vertex, one incidence each.
    EStar,
    /// Loose edges `X`.
    EDiamond,
    /// Incidences `X` between one vertex and one edge.
    IStar,
    /// Disjoint 1-edges, one per element of `X`.
    IDiamond,
    Terminal,
}

impl StandardIncidence {
    pub const ALL: [StandardIncidence; 7] = [
        StandardIncidence::VStar,
        StandardIncidence::VDiamond,
        StandardIncidence::EStar,
        StandardIncidence::EDiamond,
        StandardIncidence::IStar,
        StandardIncidence::IDiamond,
        StandardIncidence::Terminal,
    ];

    pub fn name(self) -> &'static str {
        match self {
            StandardIncidence::VStar => "v_star",
            StandardIncidence::VDiamond => "v_diamond",
            StandardIncidence::EStar => "e_star",
            StandardIncidence::EDiamond => "e_diamond",
            StandardIncidence::IStar => "i_star",
            StandardIncidence::IDiamond => "i_diamond",
            StandardIncidence::Terminal => "terminal",
        }
    }

    pub fn parse(name: &str) -> Result<StandardIncidence> {
        StandardIncidence::ALL
            .into_iter()
            .find(|k| k.name() == name)
            .ok_or_else(|| Error::Unknown(name.to_owned()))
    }

    pub fn build(self, x: &FiniteSet) -> IncidenceHypergraph {
        match self {
            StandardIncidence::VStar => v_star(x),
            StandardIncidence::VDiamond => v_diamond(x),
            StandardIncidence::EStar => e_star(x),
            StandardIncidence::EDiamond => e_diamond(x),
            StandardIncidence::IStar => i_star(x),
            StandardIncidence::IDiamond => i_diamond(x),
            StandardIncidence::Terminal => terminal(),
        }
    }
}

/// `(X, {1}, X×{1})`.
pub fn v_star(x: &FiniteSet) -> IncidenceHypergraph {
    let (i, pr) = finset::product_set(&[x.clone(), FiniteSet::one()]);
    Presheaf::raw(vec![x.clone(), FiniteSet::one(), i], pr)
}

/// `(X, ∅, ∅)`.
pub fn v_diamond(x: &FiniteSet) -> IncidenceHypergraph {
    Presheaf::from_tables(vec![x.clone(), FiniteSet::empty(), FiniteSet::empty()], vec![vec![], vec![]])
}

/// `({1}, X, {1}×X)`.
pub fn e_star(x: &FiniteSet) -> IncidenceHypergraph {
    let (i, pr) = finset::product_set(&[FiniteSet::one(), x.clone()]);
    Presheaf::raw(vec![FiniteSet::one(), x.clone(), i], pr)
}

/// `(∅, X, ∅)`.
pub fn e_diamond(x: &FiniteSet) -> IncidenceHypergraph {
    Presheaf::from_tables(vec![FiniteSet::empty(), x.clone(), FiniteSet::empty()], vec![vec![], vec![]])
}

/// `({1}, {1}, X)`.
pub fn i_star(x: &FiniteSet) -> IncidenceHypergraph {
    Presheaf::from_tables(
        vec![FiniteSet::one(), FiniteSet::one(), x.clone()],
        vec![vec![0; x.len()], vec![0; x.len()]],
    )
}

/// `(X, X, X)` with identity port and attachment.
pub fn i_diamond(x: &FiniteSet) -> IncidenceHypergraph {
    let id: Vec<usize> = (0..x.len()).collect();
    Presheaf::from_tables(vec![x.clone(), x.clone(), x.clone()], vec![id.clone(), id])
}

/// One vertex, one edge, one incidence.
pub fn terminal() -> IncidenceHypergraph {
    i_star(&FiniteSet::one())
}
