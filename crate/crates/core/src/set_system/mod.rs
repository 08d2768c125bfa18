//! Set-system hypergraphs: vertices, edges, and an endpoint set for each edge.

mod classify;
mod envelopes;
mod limits;

pub use classify::{
    classify_morphism, classify_object, is_injective_object, is_projective_object, isolated_vertices, neighborhood,
    MorphismFlags, ObjectFlags,
};
pub use envelopes::{
    classify_partial_morphism, edge_star_counit, factor_through_edge_star, factor_through_vertex_star, loading,
    partial_morphism_representer, Envelope,
};
pub use limits::{
    coequalizer, coequalizer_mediator, coproduct, coproduct_mediator, equalizer, equalizer_mediator, from_initial, initial,
    product, product_mediator, product_morphism, pullback, to_terminal, HyperCone,
};

use std::fmt;
use std::sync::Arc;

use crate::bounds::Bounds;
use crate::error::{Error, Result};
use crate::finset::{self, Atom, FiniteFunction, FiniteSet};
use crate::search::{KeyKind, Mode, Problem, Solution, Structure};

/// A set-system hypergraph. Endpoint sets are stored as sorted vertex indices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SetSystemHypergraph {
    v: FiniteSet,
    e: FiniteSet,
    ends: Arc<[Vec<usize>]>,
}

impl SetSystemHypergraph {
    /// From an endpoint function into subset atoms over `v`.
    pub fn new(v: FiniteSet, e: FiniteSet, eps: &FiniteFunction) -> Result<Self> {
        if eps.dom() != &e {
            return Err(Error::Mismatch("endpoint map must be defined on the edges".into()));
        }
        let ends = (0..e.len())
            .map(|x| v.subset_indices(eps.cod().get(eps.at(x)), "the vertex set"))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::raw(v, e, ends))
    }

    /// From sorted, distinct vertex indices per edge.
    pub fn from_endpoints(v: FiniteSet, e: FiniteSet, ends: Vec<Vec<usize>>) -> Result<Self> {
        if ends.len() != e.len() {
            return Err(Error::Mismatch("one endpoint set per edge is required".into()));
        }
        for (x, s) in ends.iter().enumerate() {
            if s.windows(2).any(|w| w[0] >= w[1]) || s.iter().any(|&i| i >= v.len()) {
                return Err(Error::Mismatch(format!("bad endpoint set for edge {}", e.get(x))));
            }
        }
        Ok(Self::raw(v, e, ends))
    }

    pub(crate) fn raw(v: FiniteSet, e: FiniteSet, ends: Vec<Vec<usize>>) -> Self {
        debug_assert!(ends.iter().all(|s| s.windows(2).all(|w| w[0] < w[1])));
        SetSystemHypergraph {
            v,
            e,
            ends: ends.into(),
        }
    }

    /// From labels and `(edge, endpoints)` pairs.
    pub fn from_lists(vertices: &[&str], edges: &[(&str, &[&str])]) -> Result<Self> {
        let v = FiniteSet::new(vertices.iter().map(|n| Atom::symbol(n)).collect::<Result<Vec<_>>>()?)?;
        let mut pairs: Vec<(Atom, Vec<usize>)> = Vec::new();
        for (name, eps) in edges {
            let mut idx = eps
                .iter()
                .map(|w| v.require(&Atom::symbol(w)?, "the vertex set"))
                .collect::<Result<Vec<_>>>()?;
            idx.sort_unstable();
            idx.dedup();
            pairs.push((Atom::symbol(name)?, idx));
        }
        let e = FiniteSet::new(pairs.iter().map(|p| p.0.clone()))?;
        let mut ends = vec![Vec::new(); e.len()];
        for (a, idx) in pairs {
            ends[e.index_of(&a).expect("edge")] = idx;
        }
        Ok(Self::raw(v, e, ends))
    }

    pub fn empty() -> Self {
        Self::raw(FiniteSet::empty(), FiniteSet::empty(), Vec::new())
    }

    pub fn vertices(&self) -> &FiniteSet {
        &self.v
    }

    pub fn edges(&self) -> &FiniteSet {
        &self.e
    }

    /// Endpoint indices of edge `x`, sorted.
    pub fn ends(&self, x: usize) -> &[usize] {
        &self.ends[x]
    }

    pub fn all_ends(&self) -> &[Vec<usize>] {
        &self.ends
    }

    /// Endpoint set of edge `x` as a subset atom.
    pub fn eps_atom(&self, x: usize) -> Atom {
        self.v.subset_atom(self.ends[x].iter().copied())
    }

    /// The endpoint map `E → 𝒫(V)` as a function.
    pub fn eps_function(&self, bounds: &Bounds) -> Result<FiniteFunction> {
        let pv = finset::powerset(&self.v, bounds)?;
        FiniteFunction::from_fn(self.e.clone(), pv, |a| {
            self.eps_atom(self.e.index_of(a).expect("edge"))
        })
    }

    /// Edges whose endpoint set is exactly `s` (sorted indices).
    pub fn edges_over(&self, s: &[usize]) -> Vec<usize> {
        (0..self.e.len()).filter(|&x| self.ends[x] == s).collect()
    }

    /// Distinct endpoint sets that occur.
    pub fn edge_sets(&self) -> Vec<Vec<usize>> {
        let mut sets: Vec<Vec<usize>> = self.ends.to_vec();
        sets.sort();
        sets.dedup();
        sets
    }

    pub fn sizes(&self) -> Vec<usize> {
        vec![self.v.len(), self.e.len()]
    }

    pub fn summary(&self) -> String {
        format!("{} vertices, {} edges", self.v.len(), self.e.len())
    }

    pub(crate) fn structure(&self) -> Structure {
        Structure {
            base: vec![self.v.len()],
            derived: vec![self.ends.to_vec()],
        }
    }

    /// True when every edge has one or two endpoints.
    pub fn is_multigraph(&self) -> bool {
        self.ends.iter().all(|s| (1..=2).contains(&s.len()))
    }
}

impl fmt::Display for SetSystemHypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "hypergraph(vertices={}; edges={{", self.v)?;
        for x in 0..self.e.len() {
            if x > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}:{}", self.e.get(x), self.eps_atom(x))?;
        }
        f.write_str("})")
    }
}

impl fmt::Debug for SetSystemHypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A vertex map and an edge map with `ε(f(e)) = f(ε(e))` for every edge.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct HyperMorphism {
    dom: SetSystemHypergraph,
    cod: SetSystemHypergraph,
    fv: FiniteFunction,
    fe: FiniteFunction,
}

impl HyperMorphism {
    pub fn new(
        dom: SetSystemHypergraph,
        cod: SetSystemHypergraph,
        fv: FiniteFunction,
        fe: FiniteFunction,
    ) -> Result<Self> {
        if fv.dom() != dom.vertices() || fv.cod() != cod.vertices() {
            return Err(Error::NotMorphism("vertex map has the wrong domain or codomain".into()));
        }
        if fe.dom() != dom.edges() || fe.cod() != cod.edges() {
            return Err(Error::NotMorphism("edge map has the wrong domain or codomain".into()));
        }
        for x in 0..dom.edges().len() {
            if fv.image_indices(dom.ends(x)) != cod.ends(fe.at(x)) {
                return Err(Error::NotMorphism(format!(
                    "edge {}: image of its endpoints {} is not the endpoint set {} of its image",
                    dom.edges().get(x),
                    fv.image_of(&dom.eps_atom(x)).expect("subset of domain"),
                    cod.eps_atom(fe.at(x))
                )));
            }
        }
        Ok(Self::raw(dom, cod, fv, fe))
    }

    pub(crate) fn raw(dom: SetSystemHypergraph, cod: SetSystemHypergraph, fv: FiniteFunction, fe: FiniteFunction) -> Self {
        HyperMorphism { dom, cod, fv, fe }
    }

    pub(crate) fn from_tables(dom: &SetSystemHypergraph, cod: &SetSystemHypergraph, fv: Vec<usize>, fe: Vec<usize>) -> Self {
        Self::raw(
            dom.clone(),
            cod.clone(),
            FiniteFunction::raw(dom.vertices().clone(), cod.vertices().clone(), fv),
            FiniteFunction::raw(dom.edges().clone(), cod.edges().clone(), fe),
        )
    }

    fn from_solution(dom: &SetSystemHypergraph, cod: &SetSystemHypergraph, mut sol: Solution) -> Self {
        let fv = sol.base.remove(0);
        let fe = sol.derived.remove(0);
        Self::from_tables(dom, cod, fv, fe)
    }

    pub fn identity(g: &SetSystemHypergraph) -> Self {
        Self::raw(
            g.clone(),
            g.clone(),
            FiniteFunction::identity(g.vertices()),
            FiniteFunction::identity(g.edges()),
        )
    }

    pub fn dom(&self) -> &SetSystemHypergraph {
        &self.dom
    }

    pub fn cod(&self) -> &SetSystemHypergraph {
        &self.cod
    }

    pub fn fv(&self) -> &FiniteFunction {
        &self.fv
    }

    pub fn fe(&self) -> &FiniteFunction {
        &self.fe
    }

    /// `g.after(f)` is `g ∘ f`.
    pub fn after(&self, f: &HyperMorphism) -> Result<HyperMorphism> {
        if f.cod != self.dom {
            return Err(Error::Mismatch(format!(
                "cannot compose: {} is not {}",
                f.cod.summary(),
                self.dom.summary()
            )));
        }
        Ok(Self::raw(
            f.dom.clone(),
            self.cod.clone(),
            self.fv.after(&f.fv)?,
            self.fe.after(&f.fe)?,
        ))
    }

    pub fn is_mono(&self) -> bool {
        self.fv.is_injective() && self.fe.is_injective()
    }

    pub fn is_epi(&self) -> bool {
        self.fv.is_surjective() && self.fe.is_surjective()
    }

    pub fn is_iso(&self) -> bool {
        self.fv.is_bijective() && self.fe.is_bijective()
    }

    pub fn inverse(&self) -> Result<HyperMorphism> {
        Ok(Self::raw(self.cod.clone(), self.dom.clone(), self.fv.inverse()?, self.fe.inverse()?))
    }

    /// `(vertex map, edge map)` as a pair of function atoms.
    pub fn to_atom(&self) -> Atom {
        Atom::pair(self.fv.to_atom(), self.fe.to_atom())
    }
}

impl fmt::Debug for HyperMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_atom())
    }
}

impl fmt::Display for HyperMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_atom())
    }
}

pub fn hom_count(a: &SetSystemHypergraph, b: &SetSystemHypergraph) -> u128 {
    let (d, c) = (a.structure(), b.structure());
    Problem::new(&d, &c, KeyKind::Set, &[]).count(Mode::Hom)
}

pub fn homs(a: &SetSystemHypergraph, b: &SetSystemHypergraph, bounds: &Bounds) -> Result<Vec<HyperMorphism>> {
    let (d, c) = (a.structure(), b.structure());
    Ok(Problem::new(&d, &c, KeyKind::Set, &[])
        .list(bounds.hom)?
        .into_iter()
        .map(|s| HyperMorphism::from_solution(a, b, s))
        .collect())
}

pub fn first_hom(a: &SetSystemHypergraph, b: &SetSystemHypergraph) -> Option<HyperMorphism> {
    let (d, c) = (a.structure(), b.structure());
    Problem::new(&d, &c, KeyKind::Set, &[])
        .first(Mode::Hom)
        .map(|s| HyperMorphism::from_solution(a, b, s))
}

pub fn find_iso(a: &SetSystemHypergraph, b: &SetSystemHypergraph) -> Option<HyperMorphism> {
    let (d, c) = (a.structure(), b.structure());
    Problem::new(&d, &c, KeyKind::Set, &[])
        .first(Mode::Iso)
        .map(|s| HyperMorphism::from_solution(a, b, s))
}

pub fn iso_count(a: &SetSystemHypergraph, b: &SetSystemHypergraph) -> u128 {
    let (d, c) = (a.structure(), b.structure());
    Problem::new(&d, &c, KeyKind::Set, &[]).count(Mode::Iso)
}

/// The named set-system hypergraphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StandardHypergraph {
    /// Every subset of `X` is an edge.
    VertexStar,
    /// Isolated vertices `X`.
    VertexDiamond,
    /// One vertex with a 0-edge and a 1-edge for each element of `X`.
    EdgeStar,
    /// A single edge whose endpoint set is `X`.
    KEdge,
    Terminal,
    /// A single edge over `X`, named as a generator.
    GeneratorGS,
}

impl StandardHypergraph {
    pub const ALL: [StandardHypergraph; 6] = [
        StandardHypergraph::VertexStar,
        StandardHypergraph::VertexDiamond,
        StandardHypergraph::EdgeStar,
        StandardHypergraph::KEdge,
        StandardHypergraph::Terminal,
        StandardHypergraph::GeneratorGS,
    ];

    pub fn name(self) -> &'static str {
        match self {
            StandardHypergraph::VertexStar => "vertex_star",
            StandardHypergraph::VertexDiamond => "vertex_diamond",
            StandardHypergraph::EdgeStar => "edge_star",
            StandardHypergraph::KEdge => "k_edge",
            StandardHypergraph::Terminal => "terminal",
            StandardHypergraph::GeneratorGS => "generator_gs",
        }
    }

    pub fn parse(name: &str) -> Result<StandardHypergraph> {
        StandardHypergraph::ALL
            .into_iter()
            .find(|k| k.name() == name)
            .ok_or_else(|| Error::Unknown(name.to_owned()))
    }

    pub fn build(self, x: &FiniteSet, bounds: &Bounds) -> Result<SetSystemHypergraph> {
        Ok(match self {
            StandardHypergraph::VertexStar => vertex_star(x, bounds)?,
            StandardHypergraph::VertexDiamond => vertex_diamond(x),
            StandardHypergraph::EdgeStar => edge_star(x),
            StandardHypergraph::KEdge | StandardHypergraph::GeneratorGS => k_edge(x),
            StandardHypergraph::Terminal => terminal(),
        })
    }
}

/// `(X, 𝒫(X))` with each subset its own endpoint set.
pub fn vertex_star(x: &FiniteSet, bounds: &Bounds) -> Result<SetSystemHypergraph> {
    let e = finset::powerset(x, bounds)?;
    let ends = e
        .iter()
        .map(|s| x.subset_indices(s, "the vertex set"))
        .collect::<Result<Vec<_>>>()?;
    Ok(SetSystemHypergraph::raw(x.clone(), e, ends))
}

/// `(X, ∅)`.
pub fn vertex_diamond(x: &FiniteSet) -> SetSystemHypergraph {
    SetSystemHypergraph::raw(x.clone(), FiniteSet::empty(), Vec::new())
}

/// Vertex `1`; edges `(0,x)` with no endpoints and `(1,x)` over `{1}`.
pub fn edge_star(x: &FiniteSet) -> SetSystemHypergraph {
    let (e, inj) = finset::coproduct_set(&[x.clone(), x.clone()]);
    let mut ends = vec![Vec::new(); e.len()];
    for k in 0..x.len() {
        ends[inj[1].at(k)] = vec![0];
    }
    SetSystemHypergraph::raw(FiniteSet::one(), e, ends)
}

/// One edge `1` with endpoint set `X`.
pub fn k_edge(x: &FiniteSet) -> SetSystemHypergraph {
    SetSystemHypergraph::raw(x.clone(), FiniteSet::one(), vec![(0..x.len()).collect()])
}

/// The terminal object: one vertex, a 0-edge and a 1-edge.
pub fn terminal() -> SetSystemHypergraph {
    edge_star(&FiniteSet::one())
}

/// A single edge on `k` vertices `0..k`.
pub fn e_k(k: usize) -> SetSystemHypergraph {
    k_edge(&FiniteSet::range(k))
}

/// The path of length one: vertices `v`, `w` joined by one edge.
pub fn p1() -> SetSystemHypergraph {
    k_edge(&FiniteSet::labels(&["v", "w"]))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_shapes() {
        let b = Bounds::default();
        assert_eq!(p1().sizes(), vec![2, 1]);
        assert_eq!(terminal().sizes(), vec![1, 2]);
        assert_eq!(terminal().to_string(), "hypergraph(vertices={1}; edges={(0,1):{},(1,1):{1}})");
        assert_eq!(vertex_star(&FiniteSet::labels(&["a"]), &b).unwrap().sizes(), vec![1, 2]);
        assert_eq!(e_k(0).sizes(), vec![0, 1]);
    }

    #[test]
    fn hom_examples() {
        assert_eq!(hom_count(&e_k(4), &e_k(1)), 1);
        assert_eq!(hom_count(&p1(), &p1()), 2);
        assert_eq!(hom_count(&e_k(0), &p1()), 0);
        for g in [p1(), e_k(3), terminal()] {
            assert_eq!(hom_count(&g, &terminal()), 1);
        }
    }

    #[test]
    fn morphism_condition_checked() {
        let g = p1();
        let h = e_k(1);
        let fv = FiniteFunction::constant(g.vertices(), h.vertices(), &Atom::int(0)).unwrap();
        let fe = FiniteFunction::identity(g.edges());
        assert!(HyperMorphism::new(g.clone(), h.clone(), fv, fe).is_ok());
        let two = SetSystemHypergraph::from_lists(&["a", "b"], &[("e", &["a"])]).unwrap();
        let fv = FiniteFunction::identity(two.vertices());
        let err = HyperMorphism::new(
            two.clone(),
            SetSystemHypergraph::from_lists(&["a", "b"], &[("e", &["b"])]).unwrap(),
            fv,
            FiniteFunction::identity(two.edges()),
        );
        assert!(matches!(err, Err(Error::NotMorphism(m)) if m.contains("edge e")));
    }

    #[test]
    fn eps_function_lands_in_powerset() {
        let f = p1().eps_function(&Bounds::default()).unwrap();
        assert_eq!(f.to_atom().text(), "[1:{v,w}]");
        assert_eq!(f.cod().len(), 4);
    }
}
