//! Universal maps into the edge star, the partial morphism representer and
//! the loading.

use super::{edge_star, vertex_star, HyperMorphism, SetSystemHypergraph};
use crate::bounds::Bounds;
use crate::error::{Error, Result};
use crate::finset::{self, Atom, FiniteFunction, FiniteSet};

/// An object together with its embedding of the original.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Envelope {
    pub obj: SetSystemHypergraph,
    pub embedding: HyperMorphism,
}

/// The unique `ξ̂: G → E★(X)` whose edge part followed by forgetting the tag
/// is `ξ`: empty edges go to `(0, ξ(e))`, the rest to `(1, ξ(e))`.
pub fn factor_through_edge_star(g: &SetSystemHypergraph, xi: &FiniteFunction) -> Result<HyperMorphism> {
    if xi.dom() != g.edges() {
        return Err(Error::Mismatch("the function must be defined on the edges".into()));
    }
    let star = edge_star(xi.cod());
    let fe = (0..g.edges().len())
        .map(|e| {
            let n = usize::from(!g.ends(e).is_empty());
            let atom = finset::tag(n, xi.cod().get(xi.at(e)));
            star.edges().index_of(&atom).expect("tagged edge")
        })
        .collect();
    Ok(HyperMorphism::from_tables(g, &star, vec![0; g.vertices().len()], fe))
}

/// The edge function `(n, x) ↦ x` of the edge star.
pub fn edge_star_counit(x: &FiniteSet) -> FiniteFunction {
    let star = edge_star(x);
    FiniteFunction::from_fn(star.edges().clone(), x.clone(), |a| a.as_tuple().expect("tagged edge")[1].clone())
        .expect("tag component lies in the set")
}

/// The unique map into `V★(X)` with vertex part `f`: each edge goes to the
/// image of its endpoint set.
pub fn factor_through_vertex_star(
    g: &SetSystemHypergraph,
    f: &FiniteFunction,
    bounds: &Bounds,
) -> Result<HyperMorphism> {
    if f.dom() != g.vertices() {
        return Err(Error::Mismatch("the function must be defined on the vertices".into()));
    }
    let star = vertex_star(f.cod(), bounds)?;
    let fe = (0..g.edges().len())
        .map(|e| {
            let atom = f.cod().subset_atom(f.image_indices(g.ends(e)));
            star.edges().index_of(&atom).expect("every subset is an edge")
        })
        .collect();
    Ok(HyperMorphism::from_tables(g, &star, f.table().to_vec(), fe))
}

/// `G̃`: a fresh vertex `(0,0)`, the old vertices as `(1,v)`, the old edges as
/// `(1,e)` and one fresh edge `(0,S)` over every vertex subset `S`.
pub fn partial_morphism_representer(g: &SetSystemHypergraph, bounds: &Bounds) -> Result<Envelope> {
    let fresh = finset::tag(0, &Atom::int(0));
    let v = FiniteSet::collect(
        std::iter::once(fresh).chain(g.vertices().iter().map(|a| finset::tag(1, a))),
    );
    bounds.check_powerset("partial morphism representer", v.len())?;
    let vmap: Vec<usize> = g
        .vertices()
        .iter()
        .map(|a| v.index_of(&finset::tag(1, a)).expect("tagged vertex"))
        .collect();
    let mut found: Vec<(Atom, Vec<usize>)> = Vec::new();
    for e in 0..g.edges().len() {
        let mut s: Vec<usize> = g.ends(e).iter().map(|&w| vmap[w]).collect();
        s.sort_unstable();
        found.push((finset::tag(1, g.edges().get(e)), s));
    }
    for mask in finset::subset_masks(v.len()) {
        let s: Vec<usize> = finset::mask_indices(mask).collect();
        found.push((finset::tag(0, &v.subset_atom(s.iter().copied())), s));
    }
    let obj = assemble(v, found)?;
    let fe = (0..g.edges().len())
        .map(|e| obj.edges().index_of(&finset::tag(1, g.edges().get(e))).expect("tagged edge"))
        .collect();
    let embedding = HyperMorphism::from_tables(g, &obj, vmap, fe);
    Ok(Envelope { obj, embedding })
}

fn assemble(v: FiniteSet, found: Vec<(Atom, Vec<usize>)>) -> Result<SetSystemHypergraph> {
    let e = FiniteSet::new(found.iter().map(|f| f.0.clone()))?;
    let mut ends = vec![Vec::new(); e.len()];
    for (a, s) in found {
        ends[e.index_of(&a).expect("edge")] = s;
    }
    Ok(SetSystemHypergraph::raw(v, e, ends))
}

/// The map `ψ̂: K → G̃` classifying the partial map `K ↢ H → G`: the image of
/// `φ` goes to the tagged copy of `G` along `ψ`, everything else to the
/// fresh vertex and the fresh edge over its image.
pub fn classify_partial_morphism(
    phi: &HyperMorphism,
    psi: &HyperMorphism,
    bounds: &Bounds,
) -> Result<HyperMorphism> {
    if !phi.is_mono() {
        return Err(Error::NotMonic(format!("{} -> {}", phi.dom().summary(), phi.cod().summary())));
    }
    if phi.dom() != psi.dom() {
        return Err(Error::Mismatch("the mono and the map must share a domain".into()));
    }
    let rep = partial_morphism_representer(psi.cod(), bounds)?;
    let (k, gt, eta) = (phi.cod(), &rep.obj, &rep.embedding);
    let fresh_v = gt.vertices().index_of(&finset::tag(0, &Atom::int(0))).expect("fresh vertex");
    let mut fv = vec![fresh_v; k.vertices().len()];
    for w in 0..phi.dom().vertices().len() {
        fv[phi.fv().at(w)] = eta.fv().at(psi.fv().at(w));
    }
    let mut fe: Vec<Option<usize>> = vec![None; k.edges().len()];
    for f in 0..phi.dom().edges().len() {
        fe[phi.fe().at(f)] = Some(eta.fe().at(psi.fe().at(f)));
    }
    let fe = fe
        .into_iter()
        .enumerate()
        .map(|(e, slot)| {
            slot.unwrap_or_else(|| {
                let mut s: Vec<usize> = k.ends(e).iter().map(|&w| fv[w]).collect();
                s.sort_unstable();
                s.dedup();
                let atom = finset::tag(0, &gt.vertices().subset_atom(s));
                gt.edges().index_of(&atom).expect("fresh edge for every subset")
            })
        })
        .collect();
    Ok(HyperMorphism::from_tables(k, gt, fv, fe))
}

/// The loading: vertices kept (or a single vertex `0` when there are none),
/// old edges tagged `(1,e)` with their endpoints unchanged, and one edge
/// `(0,S)` for every vertex subset `S` that no edge covers exactly.
pub fn loading(g: &SetSystemHypergraph, bounds: &Bounds) -> Result<Envelope> {
    let v = if g.vertices().is_empty() {
        FiniteSet::collect([Atom::int(0)])
    } else {
        g.vertices().clone()
    };
    bounds.check_powerset("loading", v.len())?;
    let mut found: Vec<(Atom, Vec<usize>)> = (0..g.edges().len())
        .map(|e| (finset::tag(1, g.edges().get(e)), g.ends(e).to_vec()))
        .collect();
    let hit = g.edge_sets();
    for mask in finset::subset_masks(v.len()) {
        let s: Vec<usize> = finset::mask_indices(mask).collect();
        if hit.binary_search(&s).is_err() {
            found.push((finset::tag(0, &v.subset_atom(s.iter().copied())), s));
        }
    }
    let obj = assemble(v, found)?;
    let fe = (0..g.edges().len())
        .map(|e| obj.edges().index_of(&finset::tag(1, g.edges().get(e))).expect("tagged edge"))
        .collect();
    let embedding = HyperMorphism::from_tables(g, &obj, (0..g.vertices().len()).collect(), fe);
    Ok(Envelope { obj, embedding })
}
