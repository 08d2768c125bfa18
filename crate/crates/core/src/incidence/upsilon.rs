//! The functor turning directed edges into incidences, and its two adjoints.

use std::collections::HashMap;

use super::{IncidenceHypergraph, IncidenceMorphism, EDGES, INCIDENCES, VERTICES};
use crate::bounds::Bounds;
use crate::error::Result;
use crate::finset::{self, FiniteFunction};
use crate::presheaf::{Presheaf, PresheafMorphism};
use crate::quiver::{Quiver, QuiverMorphism};

/// `(V, V, E, src, tgt)`: every edge becomes an incidence from its source
/// vertex to its target read as an edge.
pub fn upsilon(q: &Quiver) -> IncidenceHypergraph {
    Presheaf::raw(
        vec![q.vertices().clone(), q.vertices().clone(), q.edges().clone()],
        vec![q.src().clone(), q.tgt().clone()],
    )
}

pub fn upsilon_map(f: &QuiverMorphism) -> IncidenceMorphism {
    PresheafMorphism::raw(
        upsilon(f.dom()),
        upsilon(f.cod()),
        vec![f.fv().clone(), f.fv().clone(), f.fe().clone()],
    )
}

/// Bipartite incidence digraph: vertices `(0,v)` and `(1,e)`, one arrow per
/// incidence from its vertex to its edge.
pub fn upsilon_diamond(g: &IncidenceHypergraph) -> Quiver {
    let (v, inj) = finset::coproduct_set(&[g.vertices().clone(), g.edges().clone()]);
    let src = inj[0].after(g.port()).expect("port lands in vertices");
    let tgt = inj[1].after(g.att()).expect("attachment lands in edges");
    Presheaf::raw(vec![v, g.incidences().clone()], vec![src, tgt])
}

pub fn upsilon_diamond_map(f: &IncidenceMorphism) -> QuiverMorphism {
    let dom = upsilon_diamond(f.dom());
    let cod = upsilon_diamond(f.cod());
    let (_, dinj) = finset::coproduct_set(&[f.dom().vertices().clone(), f.dom().edges().clone()]);
    let (_, cinj) = finset::coproduct_set(&[f.cod().vertices().clone(), f.cod().edges().clone()]);
    let mut table = vec![0; dom.vertices().len()];
    for (k, h) in [f.fv(), f.fe()].into_iter().enumerate() {
        for x in 0..h.dom().len() {
            table[dinj[k].at(x)] = cinj[k].at(h.at(x));
        }
    }
    let fv = FiniteFunction::raw(dom.vertices().clone(), cod.vertices().clone(), table);
    PresheafMorphism::raw(dom, cod, vec![fv, f.fi().clone()])
}

/// Looped incidence-matrix quiver: vertices `V̌×Ě`, edges `V̌×I×Ě` with
/// `(v,i,e): (port i, e) → (v, att i)`.
pub fn upsilon_star(g: &IncidenceHypergraph, bounds: &Bounds) -> Result<Quiver> {
    let (nv, ne, ni) = (g.vertices().len(), g.edges().len(), g.incidences().len());
    bounds.check_upsilon_star((nv as u128) * (ni as u128) * (ne as u128))?;
    let (verts, vp) = finset::product_set(&[g.vertices().clone(), g.edges().clone()]);
    let (edges, ep) = finset::product_set(&[g.vertices().clone(), g.incidences().clone(), g.edges().clone()]);
    let vindex: HashMap<(usize, usize), usize> = (0..verts.len()).map(|x| ((vp[0].at(x), vp[1].at(x)), x)).collect();
    let mut src = Vec::with_capacity(edges.len());
    let mut tgt = Vec::with_capacity(edges.len());
    for x in 0..edges.len() {
        let (v, i, e) = (ep[0].at(x), ep[1].at(x), ep[2].at(x));
        src.push(vindex[&(g.port().at(i), e)]);
        tgt.push(vindex[&(v, g.att().at(i))]);
    }
    Ok(Presheaf::from_tables(vec![verts, edges], vec![src, tgt]))
}

pub fn upsilon_star_map(f: &IncidenceMorphism, bounds: &Bounds) -> Result<QuiverMorphism> {
    let dom = upsilon_star(f.dom(), bounds)?;
    let cod = upsilon_star(f.cod(), bounds)?;
    let table = |sorts: &[usize]| -> Vec<usize> {
        let factors = |g: &IncidenceHypergraph| sorts.iter().map(|&s| g.set(s).clone()).collect::<Vec<_>>();
        let (dset, dpr) = finset::product_set(&factors(f.dom()));
        let (cset, cpr) = finset::product_set(&factors(f.cod()));
        let lookup: HashMap<Vec<usize>, usize> = (0..cset.len())
            .map(|y| (cpr.iter().map(|p| p.at(y)).collect(), y))
            .collect();
        (0..dset.len())
            .map(|x| {
                let key: Vec<usize> = sorts.iter().zip(&dpr).map(|(&s, p)| f.comp(s).at(p.at(x))).collect();
                lookup[&key]
            })
            .collect()
    };
    let fv = table(&[VERTICES, EDGES]);
    let fe = table(&[VERTICES, INCIDENCES, EDGES]);
    Ok(PresheafMorphism::from_tables(&dom, &cod, vec![fv, fe]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finset::FiniteSet;
    use crate::incidence::{e_diamond, i_diamond, i_star};
    use crate::presheaf::{find_iso, homs};
    use crate::quiver::{path1, terminal};

    #[test]
    fn upsilon_examples() {
        assert_eq!(upsilon(&path1()).sizes(), vec![2, 2, 1]);
        assert!(find_iso(&upsilon(&terminal()), &i_diamond(&FiniteSet::one())).is_some());
    }

    #[test]
    fn diamond_examples() {
        let one = upsilon_diamond(&i_star(&FiniteSet::labels(&["p"])));
        assert!(find_iso(&one, &path1()).is_some());
        assert_eq!(upsilon_diamond(&e_diamond(&FiniteSet::labels(&["a", "b"]))).sizes(), vec![2, 0]);
    }

    #[test]
    fn star_examples() {
        let b = Bounds::default();
        let s = upsilon_star(&i_star(&FiniteSet::labels(&["p"])), &b).unwrap();
        assert!(find_iso(&s, &terminal()).is_some());
        let s = upsilon_star(&upsilon(&path1()), &b).unwrap();
        assert_eq!(s.sizes(), vec![4, 4]);
        let loops = (0..s.edges().len()).filter(|&e| s.src().at(e) == s.tgt().at(e)).count();
        assert_eq!(loops, 1);
    }

    #[test]
    fn morphism_actions_are_morphisms() {
        let b = Bounds::default();
        let g = upsilon(&path1());
        for f in homs(&g, &g, &b).unwrap() {
            let d = upsilon_diamond_map(&f);
            QuiverMorphism::new(d.dom().clone(), d.cod().clone(), d.comps().to_vec()).unwrap();
            let s = upsilon_star_map(&f, &b).unwrap();
            QuiverMorphism::new(s.dom().clone(), s.cod().clone(), s.comps().to_vec()).unwrap();
        }
        for f in homs(&path1(), &path1(), &b).unwrap() {
            let u = upsilon_map(&f);
            IncidenceMorphism::new(u.dom().clone(), u.cod().clone(), u.comps().to_vec()).unwrap();
        }
    }
}
