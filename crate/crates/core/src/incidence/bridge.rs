//! Passing between set-system hypergraphs and incidence hypergraphs.

use super::{IncidenceHypergraph, IncidenceMorphism};
use crate::finset::{Atom, FiniteFunction, FiniteSet};
use crate::presheaf::{Presheaf, PresheafMorphism};
use crate::set_system::{HyperMorphism, SetSystemHypergraph};

/// One incidence `(v,e)` for each vertex `v` on each edge `e`.
pub fn incidence_forming(g: &SetSystemHypergraph) -> IncidenceHypergraph {
    let pairs: Vec<(usize, usize)> = (0..g.edges().len())
        .flat_map(|e| g.ends(e).iter().map(move |&v| (v, e)))
        .collect();
    let atom = |&(v, e): &(usize, usize)| Atom::pair(g.vertices().get(v).clone(), g.edges().get(e).clone());
    let i = FiniteSet::collect(pairs.iter().map(atom));
    let mut port = vec![0; i.len()];
    let mut att = vec![0; i.len()];
    for p in &pairs {
        let x = i.index_of(&atom(p)).expect("incidence");
        port[x] = p.0;
        att[x] = p.1;
    }
    Presheaf::from_tables(vec![g.vertices().clone(), g.edges().clone(), i], vec![port, att])
}

/// `(v,e) ↦ (φ(v), φ(e))` on incidences.
pub fn incidence_forming_map(phi: &HyperMorphism) -> IncidenceMorphism {
    let dom = incidence_forming(phi.dom());
    let cod = incidence_forming(phi.cod());
    let fi = FiniteFunction::from_fn(dom.incidences().clone(), cod.incidences().clone(), |a| {
        let t = a.as_tuple().expect("pair");
        Atom::pair(
            phi.fv().apply(&t[0]).expect("vertex").clone(),
            phi.fe().apply(&t[1]).expect("edge").clone(),
        )
    })
    .expect("image vertex lies on the image edge");
    PresheafMorphism::raw(dom, cod, vec![phi.fv().clone(), phi.fe().clone(), fi])
}

/// Each edge's endpoint set is the set of vertices sharing an incidence with
/// it. There is no action on morphisms.
pub fn forget_incidence(g: &IncidenceHypergraph) -> SetSystemHypergraph {
    let mut ends = vec![Vec::new(); g.edges().len()];
    for i in 0..g.incidences().len() {
        ends[g.att().at(i)].push(g.port().at(i));
    }
    for s in &mut ends {
        s.sort_unstable();
        s.dedup();
    }
    SetSystemHypergraph::raw(g.vertices().clone(), g.edges().clone(), ends)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::Bounds;
    use crate::incidence::i_star;
    use crate::set_system::{e_k, homs, p1, terminal};

    #[test]
    fn forming_examples() {
        assert_eq!(incidence_forming(&p1()).sizes(), vec![2, 1, 2]);
        assert_eq!(incidence_forming(&e_k(0)).sizes(), vec![0, 1, 0]);
        assert_eq!(incidence_forming(&e_k(4)).sizes(), vec![4, 1, 4]);
    }

    #[test]
    fn forgetting_undoes_forming() {
        for g in [p1(), e_k(0), e_k(3), terminal(), SetSystemHypergraph::empty()] {
            assert_eq!(forget_incidence(&incidence_forming(&g)), g);
        }
        let f = forget_incidence(&i_star(&FiniteSet::range(2)));
        assert_eq!(f.sizes(), vec![1, 1]);
        assert_eq!(f.ends(0), &[0]);
    }

    #[test]
    fn forming_is_functorial() {
        let b = Bounds::default();
        for m in homs(&p1(), &e_k(1), &b).unwrap().iter().chain(homs(&terminal(), &terminal(), &b).unwrap().iter()) {
            let im = incidence_forming_map(m);
            IncidenceMorphism::new(im.dom().clone(), im.cod().clone(), im.comps().to_vec()).unwrap();
        }
    }
}
