//! Object and morphism actions of the named functors, together with the
//! units and counits of their adjunctions.

use crate::bounds::Bounds;
use crate::error::Result;
use crate::finset::{self, Atom, FiniteFunction, FiniteSet};
use crate::incidence::{self, IncidenceHypergraph, IncidenceMorphism};
use crate::multigraph;
use crate::presheaf::{Presheaf, PresheafMorphism, Shape};
use crate::quiver::{self, Quiver, QuiverMorphism};
use crate::set_system::{self, HyperMorphism, SetSystemHypergraph};

/// Applies `fs[k]` to component `k` of each tuple atom; `None` leaves the
/// component unchanged.
fn tuple_map(dom: &FiniteSet, cod: &FiniteSet, fs: &[Option<&FiniteFunction>]) -> Result<FiniteFunction> {
    FiniteFunction::from_fn(dom.clone(), cod.clone(), |a| {
        let parts = a.as_tuple().expect("tuple atom");
        Atom::tuple(
            parts
                .iter()
                .zip(fs)
                .map(|(p, f)| match f {
                    Some(f) => f.apply(p).expect("component lies in the domain").clone(),
                    None => p.clone(),
                })
                .collect(),
        )
    })
}

/// The function `a ↦ g(a)` between two carriers, checked.
fn atom_fn(dom: &FiniteSet, cod: &FiniteSet, g: impl Fn(&Atom) -> Atom) -> Result<FiniteFunction> {
    FiniteFunction::from_fn(dom.clone(), cod.clone(), g)
}

fn constant(dom: &FiniteSet, cod: &FiniteSet) -> FiniteFunction {
    FiniteFunction::from_indices(dom.clone(), cod.clone(), vec![0; dom.len()]).expect("one-point codomain")
}

fn same_atoms(dom: &FiniteSet, cod: &FiniteSet) -> Result<FiniteFunction> {
    atom_fn(dom, cod, Atom::clone)
}

/// The empty component at `sort`; the domain's set there is empty.
fn empty_between<S: Shape>(dom: &Presheaf<S>, cod: &Presheaf<S>, sort: usize) -> FiniteFunction {
    debug_assert!(dom.set(sort).is_empty());
    FiniteFunction::empty(cod.set(sort))
}

fn second(a: &Atom) -> Atom {
    a.as_tuple().expect("tagged atom")[1].clone()
}

fn component(a: &Atom, k: usize) -> Atom {
    a.as_tuple().expect("tuple atom")[k].clone()
}

// Quivers and sets.

pub fn q_vertices(q: &Quiver, _: &Bounds) -> Result<FiniteSet> {
    Ok(q.vertices().clone())
}

pub fn q_vertices_map(f: &QuiverMorphism, _: &Bounds) -> Result<FiniteFunction> {
    Ok(f.fv().clone())
}

pub fn q_edges(q: &Quiver, _: &Bounds) -> Result<FiniteSet> {
    Ok(q.edges().clone())
}

pub fn q_edges_map(f: &QuiverMorphism, _: &Bounds) -> Result<FiniteFunction> {
    Ok(f.fe().clone())
}

pub fn q_vertex_diamond(x: &FiniteSet, _: &Bounds) -> Result<Quiver> {
    Ok(quiver::vertex_diamond(x))
}

pub fn q_vertex_diamond_map(f: &FiniteFunction, _: &Bounds) -> Result<QuiverMorphism> {
    let (d, c) = (quiver::vertex_diamond(f.dom()), quiver::vertex_diamond(f.cod()));
    let fe = FiniteFunction::empty(c.edges());
    PresheafMorphism::new(d, c, vec![f.clone(), fe])
}

pub fn q_vertex_star(x: &FiniteSet, _: &Bounds) -> Result<Quiver> {
    Ok(quiver::vertex_star(x))
}

pub fn q_vertex_star_map(f: &FiniteFunction, _: &Bounds) -> Result<QuiverMorphism> {
    let (d, c) = (quiver::vertex_star(f.dom()), quiver::vertex_star(f.cod()));
    let fe = tuple_map(d.edges(), c.edges(), &[Some(f), Some(f)])?;
    PresheafMorphism::new(d, c, vec![f.clone(), fe])
}

pub fn q_edge_diamond(x: &FiniteSet, _: &Bounds) -> Result<Quiver> {
    Ok(quiver::edge_diamond(x))
}

pub fn q_edge_diamond_map(f: &FiniteFunction, _: &Bounds) -> Result<QuiverMorphism> {
    let (d, c) = (quiver::edge_diamond(f.dom()), quiver::edge_diamond(f.cod()));
    let fv = tuple_map(d.vertices(), c.vertices(), &[None, Some(f)])?;
    PresheafMorphism::new(d, c, vec![fv, f.clone()])
}

pub fn q_edge_star(x: &FiniteSet, _: &Bounds) -> Result<Quiver> {
    Ok(quiver::edge_star(x))
}

pub fn q_edge_star_map(f: &FiniteFunction, _: &Bounds) -> Result<QuiverMorphism> {
    let (d, c) = (quiver::edge_star(f.dom()), quiver::edge_star(f.cod()));
    let fv = FiniteFunction::identity(d.vertices());
    PresheafMorphism::new(d, c, vec![fv, f.clone()])
}

pub fn q_identity_set(x: &FiniteSet, _: &Bounds) -> Result<FiniteFunction> {
    Ok(FiniteFunction::identity(x))
}

/// `V◇(V(Q)) → Q`.
pub fn q_vertex_diamond_counit(q: &Quiver, _: &Bounds) -> Result<QuiverMorphism> {
    let d = quiver::vertex_diamond(q.vertices());
    let fe = empty_between(&d, q, quiver::EDGES);
    PresheafMorphism::new(d, q.clone(), vec![FiniteFunction::identity(q.vertices()), fe])
}

/// `Q → V★(V(Q))`: each edge goes to its endpoint pair.
pub fn q_vertex_star_unit(q: &Quiver, _: &Bounds) -> Result<QuiverMorphism> {
    let s = quiver::vertex_star(q.vertices());
    let fe = atom_fn(q.edges(), s.edges(), |e| {
        let x = q.edges().index_of(e).expect("edge");
        Atom::tuple(vec![
            q.vertices().get(q.src().at(x)).clone(),
            q.vertices().get(q.tgt().at(x)).clone(),
        ])
    })?;
    PresheafMorphism::new(q.clone(), s, vec![FiniteFunction::identity(q.vertices()), fe])
}

/// `E◇(E(Q)) → Q`: `(0,e) ↦ src e`, `(1,e) ↦ tgt e`.
pub fn q_edge_diamond_counit(q: &Quiver, _: &Bounds) -> Result<QuiverMorphism> {
    let d = quiver::edge_diamond(q.edges());
    let fv = atom_fn(d.vertices(), q.vertices(), |a| {
        let t = a.as_tuple().expect("tagged vertex");
        let x = q.edges().index_of(&t[1]).expect("edge");
        let end = if t[0] == Atom::int(0) { q.src().at(x) } else { q.tgt().at(x) };
        q.vertices().get(end).clone()
    })?;
    PresheafMorphism::new(d, q.clone(), vec![fv, FiniteFunction::identity(q.edges())])
}

/// `Q → E★(E(Q))`: all vertices to the single vertex.
pub fn q_edge_star_unit(q: &Quiver, _: &Bounds) -> Result<QuiverMorphism> {
    let s = quiver::edge_star(q.edges());
    let fv = constant(q.vertices(), s.vertices());
    PresheafMorphism::new(q.clone(), s, vec![fv, FiniteFunction::identity(q.edges())])
}

// Set-system hypergraphs and sets.

pub fn h_vertices(g: &SetSystemHypergraph, _: &Bounds) -> Result<FiniteSet> {
    Ok(g.vertices().clone())
}

pub fn h_vertices_map(f: &HyperMorphism, _: &Bounds) -> Result<FiniteFunction> {
    Ok(f.fv().clone())
}

pub fn h_edges(g: &SetSystemHypergraph, _: &Bounds) -> Result<FiniteSet> {
    Ok(g.edges().clone())
}

pub fn h_edges_map(f: &HyperMorphism, _: &Bounds) -> Result<FiniteFunction> {
    Ok(f.fe().clone())
}

pub fn h_vertex_diamond(x: &FiniteSet, _: &Bounds) -> Result<SetSystemHypergraph> {
    Ok(set_system::vertex_diamond(x))
}

pub fn h_vertex_diamond_map(f: &FiniteFunction, _: &Bounds) -> Result<HyperMorphism> {
    let (d, c) = (set_system::vertex_diamond(f.dom()), set_system::vertex_diamond(f.cod()));
    let fe = FiniteFunction::empty(c.edges());
    HyperMorphism::new(d, c, f.clone(), fe)
}

pub fn h_vertex_star(x: &FiniteSet, bounds: &Bounds) -> Result<SetSystemHypergraph> {
    set_system::vertex_star(x, bounds)
}

/// `V★(f)`: each subset goes to its image.
pub fn h_vertex_star_map(f: &FiniteFunction, bounds: &Bounds) -> Result<HyperMorphism> {
    let (d, c) = (set_system::vertex_star(f.dom(), bounds)?, set_system::vertex_star(f.cod(), bounds)?);
    let fe = atom_fn(d.edges(), c.edges(), |s| f.image_of(s).expect("subset of the domain"))?;
    HyperMorphism::new(d, c, f.clone(), fe)
}

pub fn h_edge_star(x: &FiniteSet, _: &Bounds) -> Result<SetSystemHypergraph> {
    Ok(set_system::edge_star(x))
}

/// `E★(f)`: `(n,x) ↦ (n,f(x))`.
pub fn h_edge_star_map(f: &FiniteFunction, _: &Bounds) -> Result<HyperMorphism> {
    let (d, c) = (set_system::edge_star(f.dom()), set_system::edge_star(f.cod()));
    let fe = tuple_map(d.edges(), c.edges(), &[None, Some(f)])?;
    HyperMorphism::new(d.clone(), c, FiniteFunction::identity(d.vertices()), fe)
}

pub fn h_vertex_diamond_counit(g: &SetSystemHypergraph, _: &Bounds) -> Result<HyperMorphism> {
    let d = set_system::vertex_diamond(g.vertices());
    HyperMorphism::new(d, g.clone(), FiniteFunction::identity(g.vertices()), FiniteFunction::empty(g.edges()))
}

pub fn h_vertex_star_unit(g: &SetSystemHypergraph, bounds: &Bounds) -> Result<HyperMorphism> {
    set_system::factor_through_vertex_star(g, &FiniteFunction::identity(g.vertices()), bounds)
}

pub fn h_edge_star_unit(g: &SetSystemHypergraph, _: &Bounds) -> Result<HyperMorphism> {
    set_system::factor_through_edge_star(g, &FiniteFunction::identity(g.edges()))
}

pub fn h_edge_star_counit(x: &FiniteSet, _: &Bounds) -> Result<FiniteFunction> {
    Ok(set_system::edge_star_counit(x))
}

pub fn h_edge_star_lift(g: &SetSystemHypergraph, xi: &FiniteFunction, _: &Bounds) -> Result<HyperMorphism> {
    set_system::factor_through_edge_star(g, xi)
}

pub fn h_vertex_star_lift(g: &SetSystemHypergraph, f: &FiniteFunction, bounds: &Bounds) -> Result<HyperMorphism> {
    set_system::factor_through_vertex_star(g, f, bounds)
}

// Multigraphs.

pub fn m_inclusion(g: &SetSystemHypergraph, _: &Bounds) -> Result<SetSystemHypergraph> {
    Ok(g.clone())
}

pub fn m_inclusion_map(f: &HyperMorphism, _: &Bounds) -> Result<HyperMorphism> {
    Ok(f.clone())
}

pub fn m_del(h: &SetSystemHypergraph, _: &Bounds) -> Result<SetSystemHypergraph> {
    Ok(multigraph::del(h).obj.into_carrier())
}

pub fn m_del_map(f: &HyperMorphism, _: &Bounds) -> Result<HyperMorphism> {
    multigraph::del_map(f)
}

pub fn m_del_unit(g: &SetSystemHypergraph, _: &Bounds) -> Result<HyperMorphism> {
    let d = multigraph::del(g).obj.into_carrier();
    HyperMorphism::new(g.clone(), d, FiniteFunction::identity(g.vertices()), FiniteFunction::identity(g.edges()))
}

pub fn m_del_counit(h: &SetSystemHypergraph, _: &Bounds) -> Result<HyperMorphism> {
    Ok(multigraph::del(h).inclusion)
}

pub fn m_del_lift(_: &SetSystemHypergraph, phi: &HyperMorphism, _: &Bounds) -> Result<HyperMorphism> {
    multigraph::del_factor(phi)
}

pub fn m_underlying(q: &Quiver, _: &Bounds) -> Result<SetSystemHypergraph> {
    Ok(multigraph::underlying(q).into_carrier())
}

pub fn m_underlying_map(f: &QuiverMorphism, _: &Bounds) -> Result<HyperMorphism> {
    Ok(multigraph::underlying_map(f))
}

pub fn m_assoc(g: &SetSystemHypergraph, _: &Bounds) -> Result<Quiver> {
    Ok(multigraph::assoc_digraph(&multigraph::Multigraph::new(g.clone())?).obj)
}

pub fn m_assoc_map(f: &HyperMorphism, _: &Bounds) -> Result<QuiverMorphism> {
    multigraph::assoc_digraph_map(f)
}

pub fn m_assoc_unit(q: &Quiver, _: &Bounds) -> Result<QuiverMorphism> {
    let u = multigraph::underlying(q).into_carrier();
    multigraph::assoc_factor(q, &HyperMorphism::identity(&u))
}

pub fn m_assoc_counit(g: &SetSystemHypergraph, _: &Bounds) -> Result<HyperMorphism> {
    Ok(multigraph::assoc_digraph(&multigraph::Multigraph::new(g.clone())?).theta)
}

pub fn m_assoc_lift(q: &Quiver, phi: &HyperMorphism, _: &Bounds) -> Result<QuiverMorphism> {
    multigraph::assoc_factor(q, phi)
}

// Incidence hypergraphs and sets.

pub fn r_sort<const SORT: usize>(g: &IncidenceHypergraph, _: &Bounds) -> Result<FiniteSet> {
    Ok(g.set(SORT).clone())
}

pub fn r_sort_map<const SORT: usize>(f: &IncidenceMorphism, _: &Bounds) -> Result<FiniteFunction> {
    Ok(f.comp(SORT).clone())
}

pub fn r_v_diamond(x: &FiniteSet, _: &Bounds) -> Result<IncidenceHypergraph> {
    Ok(incidence::v_diamond(x))
}

pub fn r_v_diamond_map(f: &FiniteFunction, _: &Bounds) -> Result<IncidenceMorphism> {
    let (d, c) = (incidence::v_diamond(f.dom()), incidence::v_diamond(f.cod()));
    let e = empty_between(&d, &c, 1);
    let i = empty_between(&d, &c, 2);
    PresheafMorphism::new(d, c, vec![f.clone(), e, i])
}

pub fn r_v_star(x: &FiniteSet, _: &Bounds) -> Result<IncidenceHypergraph> {
    Ok(incidence::v_star(x))
}

pub fn r_v_star_map(f: &FiniteFunction, _: &Bounds) -> Result<IncidenceMorphism> {
    let (d, c) = (incidence::v_star(f.dom()), incidence::v_star(f.cod()));
    let i = tuple_map(d.incidences(), c.incidences(), &[Some(f), None])?;
    PresheafMorphism::new(d.clone(), c, vec![f.clone(), FiniteFunction::identity(d.edges()), i])
}

pub fn r_e_diamond(x: &FiniteSet, _: &Bounds) -> Result<IncidenceHypergraph> {
    Ok(incidence::e_diamond(x))
}

pub fn r_e_diamond_map(f: &FiniteFunction, _: &Bounds) -> Result<IncidenceMorphism> {
    let (d, c) = (incidence::e_diamond(f.dom()), incidence::e_diamond(f.cod()));
    let v = empty_between(&d, &c, 0);
    let i = empty_between(&d, &c, 2);
    PresheafMorphism::new(d, c, vec![v, f.clone(), i])
}

pub fn r_e_star(x: &FiniteSet, _: &Bounds) -> Result<IncidenceHypergraph> {
    Ok(incidence::e_star(x))
}

pub fn r_e_star_map(f: &FiniteFunction, _: &Bounds) -> Result<IncidenceMorphism> {
    let (d, c) = (incidence::e_star(f.dom()), incidence::e_star(f.cod()));
    let i = tuple_map(d.incidences(), c.incidences(), &[None, Some(f)])?;
    PresheafMorphism::new(d.clone(), c, vec![FiniteFunction::identity(d.vertices()), f.clone(), i])
}

pub fn r_i_diamond(x: &FiniteSet, _: &Bounds) -> Result<IncidenceHypergraph> {
    Ok(incidence::i_diamond(x))
}

pub fn r_i_diamond_map(f: &FiniteFunction, _: &Bounds) -> Result<IncidenceMorphism> {
    let (d, c) = (incidence::i_diamond(f.dom()), incidence::i_diamond(f.cod()));
    PresheafMorphism::new(d, c, vec![f.clone(), f.clone(), f.clone()])
}

pub fn r_i_star(x: &FiniteSet, _: &Bounds) -> Result<IncidenceHypergraph> {
    Ok(incidence::i_star(x))
}

pub fn r_i_star_map(f: &FiniteFunction, _: &Bounds) -> Result<IncidenceMorphism> {
    let (d, c) = (incidence::i_star(f.dom()), incidence::i_star(f.cod()));
    let one = FiniteFunction::identity(&FiniteSet::one());
    PresheafMorphism::new(d, c, vec![one.clone(), one, f.clone()])
}

pub fn r_v_diamond_counit(g: &IncidenceHypergraph, _: &Bounds) -> Result<IncidenceMorphism> {
    let d = incidence::v_diamond(g.vertices());
    let e = empty_between(&d, g, 1);
    let i = empty_between(&d, g, 2);
    PresheafMorphism::new(d, g.clone(), vec![FiniteFunction::identity(g.vertices()), e, i])
}

/// `G → V̌★(V̌(G))`: each incidence goes to `(port i, 1)`.
pub fn r_v_star_unit(g: &IncidenceHypergraph, _: &Bounds) -> Result<IncidenceMorphism> {
    let s = incidence::v_star(g.vertices());
    let e = constant(g.edges(), s.edges());
    let i = atom_fn(g.incidences(), s.incidences(), |a| {
        let x = g.incidences().index_of(a).expect("incidence");
        Atom::tuple(vec![g.vertices().get(g.port().at(x)).clone(), s.edges().get(0).clone()])
    })?;
    PresheafMorphism::new(g.clone(), s, vec![FiniteFunction::identity(g.vertices()), e, i])
}

pub fn r_e_diamond_counit(g: &IncidenceHypergraph, _: &Bounds) -> Result<IncidenceMorphism> {
    let d = incidence::e_diamond(g.edges());
    let v = empty_between(&d, g, 0);
    let i = empty_between(&d, g, 2);
    PresheafMorphism::new(d, g.clone(), vec![v, FiniteFunction::identity(g.edges()), i])
}

/// `G → Ě★(Ě(G))`: each incidence goes to `(1, att i)`.
pub fn r_e_star_unit(g: &IncidenceHypergraph, _: &Bounds) -> Result<IncidenceMorphism> {
    let s = incidence::e_star(g.edges());
    let v = constant(g.vertices(), s.vertices());
    let i = atom_fn(g.incidences(), s.incidences(), |a| {
        let x = g.incidences().index_of(a).expect("incidence");
        Atom::tuple(vec![s.vertices().get(0).clone(), g.edges().get(g.att().at(x)).clone()])
    })?;
    PresheafMorphism::new(g.clone(), s, vec![v, FiniteFunction::identity(g.edges()), i])
}

/// `I◇(I(G)) → G`: port, attachment and identity.
pub fn r_i_diamond_counit(g: &IncidenceHypergraph, _: &Bounds) -> Result<IncidenceMorphism> {
    let d = incidence::i_diamond(g.incidences());
    let v = same_atoms(d.vertices(), g.incidences())?;
    let port = g.port().after(&v)?;
    let att = g.att().after(&v)?;
    PresheafMorphism::new(d, g.clone(), vec![port, att, FiniteFunction::identity(g.incidences())])
}

pub fn r_i_star_unit(g: &IncidenceHypergraph, _: &Bounds) -> Result<IncidenceMorphism> {
    let s = incidence::i_star(g.incidences());
    let v = constant(g.vertices(), s.vertices());
    let e = constant(g.edges(), s.edges());
    PresheafMorphism::new(g.clone(), s, vec![v, e, FiniteFunction::identity(g.incidences())])
}

pub fn r_identity_set(x: &FiniteSet, _: &Bounds) -> Result<FiniteFunction> {
    Ok(FiniteFunction::identity(x))
}

// The functor from quivers to incidence hypergraphs and its adjoints.

pub fn u_obj(q: &Quiver, _: &Bounds) -> Result<IncidenceHypergraph> {
    Ok(incidence::upsilon(q))
}

pub fn u_map(f: &QuiverMorphism, _: &Bounds) -> Result<IncidenceMorphism> {
    Ok(incidence::upsilon_map(f))
}

pub fn u_diamond(g: &IncidenceHypergraph, _: &Bounds) -> Result<Quiver> {
    Ok(incidence::upsilon_diamond(g))
}

pub fn u_diamond_map(f: &IncidenceMorphism, _: &Bounds) -> Result<QuiverMorphism> {
    Ok(incidence::upsilon_diamond_map(f))
}

pub fn u_star(g: &IncidenceHypergraph, bounds: &Bounds) -> Result<Quiver> {
    incidence::upsilon_star(g, bounds)
}

pub fn u_star_map(f: &IncidenceMorphism, bounds: &Bounds) -> Result<QuiverMorphism> {
    incidence::upsilon_star_map(f, bounds)
}

/// `G → Υ(Υ◇(G))`: vertices to `(0,v)`, edges to `(1,e)`.
pub fn u_diamond_unit(g: &IncidenceHypergraph, _: &Bounds) -> Result<IncidenceMorphism> {
    let t = incidence::upsilon(&incidence::upsilon_diamond(g));
    let v = atom_fn(g.vertices(), t.vertices(), |a| finset::tag(0, a))?;
    let e = atom_fn(g.edges(), t.edges(), |a| finset::tag(1, a))?;
    PresheafMorphism::new(g.clone(), t, vec![v, e, FiniteFunction::identity(g.incidences())])
}

/// `Υ◇(Υ(Q)) → Q`: `(n,v) ↦ v`.
pub fn u_diamond_counit(q: &Quiver, _: &Bounds) -> Result<QuiverMorphism> {
    let d = incidence::upsilon_diamond(&incidence::upsilon(q));
    let v = atom_fn(d.vertices(), q.vertices(), second)?;
    PresheafMorphism::new(d, q.clone(), vec![v, FiniteFunction::identity(q.edges())])
}

/// `Q → Υ★(Υ(Q))`: `v ↦ (v,v)` and `e ↦ (tgt e, e, src e)`.
pub fn u_star_unit(q: &Quiver, bounds: &Bounds) -> Result<QuiverMorphism> {
    let s = incidence::upsilon_star(&incidence::upsilon(q), bounds)?;
    let v = atom_fn(q.vertices(), s.vertices(), |a| Atom::tuple(vec![a.clone(), a.clone()]))?;
    let e = atom_fn(q.edges(), s.edges(), |a| {
        let x = q.edges().index_of(a).expect("edge");
        Atom::tuple(vec![
            q.vertices().get(q.tgt().at(x)).clone(),
            a.clone(),
            q.vertices().get(q.src().at(x)).clone(),
        ])
    })?;
    PresheafMorphism::new(q.clone(), s, vec![v, e])
}

/// `Υ(Υ★(G)) → G`: `(v,e) ↦ v` on vertices, `(v,e) ↦ e` on edges and
/// `(v,i,e) ↦ i` on incidences.
pub fn u_star_counit(g: &IncidenceHypergraph, bounds: &Bounds) -> Result<IncidenceMorphism> {
    let d = incidence::upsilon(&incidence::upsilon_star(g, bounds)?);
    let v = atom_fn(d.vertices(), g.vertices(), |a| component(a, 0))?;
    let e = atom_fn(d.edges(), g.edges(), |a| component(a, 1))?;
    let i = atom_fn(d.incidences(), g.incidences(), |a| component(a, 1))?;
    PresheafMorphism::new(d, g.clone(), vec![v, e, i])
}
