//! Quiver exponentials: the one with incidence morphisms as edges, and the
//! classical digraph exponential.

use std::collections::HashMap;

use super::{Quiver, QuiverMorphism, QuiverShape};
use crate::bounds::Bounds;
use crate::error::{Error, Result};
use crate::finset::{self, Atom, FiniteFunction, FiniteSet};
use crate::incidence::{upsilon, IncidenceMorphism};
use crate::presheaf::{self, product, product_morphism, Cone, Presheaf, PresheafMorphism};

/// `R^Q` with its evaluation map `Q × R^Q → R`.
#[derive(Debug, Clone)]
pub struct QuiverExponential {
    pub base: Quiver,
    pub target: Quiver,
    pub obj: Quiver,
    /// The product `Q × R^Q` that is the domain of `eval`.
    pub product: Cone<QuiverShape>,
    pub eval: QuiverMorphism,
    /// The incidence morphism `Υ(Q) → Υ(R)` behind each edge, by edge index.
    pub edge_maps: Vec<IncidenceMorphism>,
}

/// Index of each product element by its pair of factor indices.
pub(crate) fn pair_lookup(p0: &FiniteFunction, p1: &FiniteFunction) -> HashMap<(usize, usize), usize> {
    (0..p0.dom().len()).map(|x| ((p0.at(x), p1.at(x)), x)).collect()
}

impl QuiverExponential {
    /// Vertices are the functions `V(Q) → V(R)`; edges are the morphisms
    /// `Υ(Q) → Υ(R)`, running from their vertex part to their edge part.
    pub fn new(q: &Quiver, r: &Quiver, bounds: &Bounds) -> Result<Self> {
        let v = finset::all_functions(q.vertices(), r.vertices(), bounds)?;
        let homs = presheaf::homs(&upsilon(q), &upsilon(r), bounds)?;
        let e = FiniteSet::new(homs.iter().map(PresheafMorphism::to_atom))?;
        let mut edge_maps: Vec<Option<IncidenceMorphism>> = vec![None; e.len()];
        let mut src = vec![0; e.len()];
        let mut tgt = vec![0; e.len()];
        for h in homs {
            let x = e.index_of(&h.to_atom()).expect("edge");
            src[x] = v.index_of(&h.fv().to_atom()).expect("function");
            tgt[x] = v.index_of(&h.fe().to_atom()).expect("function");
            edge_maps[x] = Some(h);
        }
        let edge_maps: Vec<IncidenceMorphism> = edge_maps.into_iter().map(|h| h.expect("filled")).collect();
        let obj = Presheaf::from_tables(vec![v, e], vec![src, tgt]);
        let prod = product(&[q.clone(), obj.clone()]);
        let (pq, pe) = (&prod.legs[0], &prod.legs[1]);
        let tables: Vec<usize> = (0..prod.apex.vertices().len())
            .map(|x| {
                let f = FiniteFunction::from_atom(q.vertices(), r.vertices(), obj.vertices().get(pe.fv().at(x)))
                    .expect("function atom");
                f.at(pq.fv().at(x))
            })
            .collect();
        let etable: Vec<usize> = (0..prod.apex.edges().len())
            .map(|x| edge_maps[pe.fe().at(x)].fi().at(pq.fe().at(x)))
            .collect();
        let eval = PresheafMorphism::from_tables(&prod.apex, r, vec![tables, etable]);
        Ok(QuiverExponential {
            base: q.clone(),
            target: r.clone(),
            obj,
            product: prod,
            eval,
            edge_maps,
        })
    }

    /// The transpose `K → R^Q` of `ψ: Q × K → R`.
    pub fn curry(&self, k: &Quiver, psi: &QuiverMorphism) -> Result<QuiverMorphism> {
        let prod = product(&[self.base.clone(), k.clone()]);
        if psi.dom() != &prod.apex {
            return Err(Error::NotProduct("the domain is not the constructed product of the base and the given quiver".into()));
        }
        if psi.cod() != &self.target {
            return Err(Error::Mismatch("the map does not land in the exponential's target".into()));
        }
        let (q, r) = (&self.base, &self.target);
        let vpair = pair_lookup(prod.legs[0].fv(), prod.legs[1].fv());
        let epair = pair_lookup(prod.legs[0].fe(), prod.legs[1].fe());
        let column = |kv: usize| -> Vec<usize> {
            (0..q.vertices().len()).map(|v| psi.fv().at(vpair[&(v, kv)])).collect()
        };
        let fv: Vec<usize> = (0..k.vertices().len())
            .map(|kv| {
                let f = FiniteFunction::raw(q.vertices().clone(), r.vertices().clone(), column(kv));
                self.obj.vertices().index_of(&f.to_atom()).expect("every function is a vertex")
            })
            .collect();
        let uq = upsilon(q);
        let ur = upsilon(r);
        let fe = (0..k.edges().len())
            .map(|x| {
                let vpart = column(k.src().at(x));
                let epart = column(k.tgt().at(x));
                let ipart = (0..q.edges().len()).map(|e| psi.fe().at(epair[&(e, x)])).collect();
                let h = PresheafMorphism::from_tables(&uq, &ur, vec![vpart, epart, ipart]);
                self.obj.edges().require(&h.to_atom(), "the exponential edges")
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(PresheafMorphism::from_tables(k, &self.obj, vec![fv, fe]))
    }

    /// `eval ∘ (Q × g)` for `g: K → R^Q`.
    pub fn uncurry(&self, g: &QuiverMorphism) -> Result<QuiverMorphism> {
        if g.cod() != &self.obj {
            return Err(Error::Mismatch("the map does not land in the exponential".into()));
        }
        let prod = product(&[self.base.clone(), g.dom().clone()]);
        let qg = product_morphism(&prod, &self.product, &[QuiverMorphism::identity(&self.base), g.clone()])?;
        self.eval.after(&qg)
    }
}

/// Exponential of quivers.
pub fn exponential(q: &Quiver, r: &Quiver, bounds: &Bounds) -> Result<QuiverExponential> {
    QuiverExponential::new(q, r, bounds)
}

/// `[Q,R]`: vertices are functions `V(Q) → V(R)`, with one edge `(f,g)`
/// exactly when `(f(src e), g(tgt e))` is an edge of `R` for every edge `e`
/// of `Q`. Parallel edges are irrelevant to the condition.
pub fn classical_exponential(q: &Quiver, r: &Quiver, bounds: &Bounds) -> Result<Quiver> {
    let tables = finset::function_tables(q.vertices(), r.vertices(), bounds)?;
    let v = finset::all_functions(q.vertices(), r.vertices(), bounds)?;
    let funcs: Vec<(usize, Vec<usize>)> = tables
        .into_iter()
        .map(|t| {
            let a = FiniteFunction::raw(q.vertices().clone(), r.vertices().clone(), t.clone()).to_atom();
            (v.index_of(&a).expect("function"), t)
        })
        .collect();
    let rpairs = r.edge_pairs();
    let qpairs = q.edge_pairs();
    bounds.check_hom("classical exponential edges", (funcs.len() as u128).pow(2))?;
    let mut found: Vec<(Atom, usize, usize)> = Vec::new();
    for (fi, f) in &funcs {
        for (gi, g) in &funcs {
            if qpairs.iter().all(|&(s, t)| rpairs.binary_search(&(f[s], g[t])).is_ok()) {
                found.push((Atom::pair(v.get(*fi).clone(), v.get(*gi).clone()), *fi, *gi));
            }
        }
    }
    let e = FiniteSet::new(found.iter().map(|f| f.0.clone()))?;
    let mut src = vec![0; e.len()];
    let mut tgt = vec![0; e.len()];
    for (a, s, t) in found {
        let x = e.index_of(&a).expect("edge");
        src[x] = s;
        tgt[x] = t;
    }
    Ok(Presheaf::from_tables(vec![v, e], vec![src, tgt]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presheaf::{find_iso, hom_count, homs};
    use crate::quiver::{path1, terminal, vertex_diamond, vertex_star};

    #[test]
    fn path_self_exponential() {
        let b = Bounds::default();
        let x = exponential(&path1(), &path1(), &b).unwrap();
        assert_eq!(x.obj.sizes(), vec![4, 4]);
        let c = classical_exponential(&path1(), &path1(), &b).unwrap();
        assert_eq!(c.sizes(), vec![4, 4]);
        assert!(find_iso(&x.obj, &c).is_some());
    }

    #[test]
    fn classical_examples() {
        let b = Bounds::default();
        let c = classical_exponential(&path1(), &terminal(), &b).unwrap();
        assert_eq!(c.sizes(), vec![1, 1]);
        let r = vertex_star(&FiniteSet::labels(&["a", "b"]));
        let c = classical_exponential(&vertex_diamond(&FiniteSet::labels(&["x"])), &path1(), &b).unwrap();
        assert_eq!(c.sizes(), vec![2, 4]);
        let c = classical_exponential(&vertex_diamond(&FiniteSet::labels(&["x"])), &r, &b).unwrap();
        assert_eq!(c.sizes(), vec![2, 4]);
    }

    #[test]
    fn isolated_vertex_exponent() {
        let b = Bounds::default();
        let q = vertex_diamond(&FiniteSet::labels(&["x"]));
        let r = Quiver::from_edges(&["a", "b", "c"], &[("e", "a", "b")]).unwrap();
        let x = exponential(&q, &r, &b).unwrap();
        assert_eq!(x.obj.sizes(), vec![3, 9]);
    }

    #[test]
    fn exponential_of_terminal() {
        let b = Bounds::default();
        for q in [path1(), vertex_diamond(&FiniteSet::range(2))] {
            let x = exponential(&q, &terminal(), &b).unwrap();
            assert!(find_iso(&x.obj, &terminal()).is_some());
        }
    }

    #[test]
    fn curry_round_trips() {
        let b = Bounds::default();
        let p = path1();
        let x = exponential(&p, &p, &b).unwrap();
        let prod = product(&[p.clone(), p.clone()]);
        let all = homs(&prod.apex, &p, &b).unwrap();
        assert_eq!(all.len() as u128, hom_count(&p, &x.obj));
        // brute force over every pair of vertex and edge tables
        let brute = finset::function_tables(prod.apex.vertices(), p.vertices(), &b)
            .unwrap()
            .into_iter()
            .flat_map(|tv| {
                finset::function_tables(prod.apex.edges(), p.edges(), &b)
                    .unwrap()
                    .into_iter()
                    .map(move |te| (tv.clone(), te))
            })
            .filter(|(tv, te)| {
                let fv = FiniteFunction::from_indices(prod.apex.vertices().clone(), p.vertices().clone(), tv.clone()).unwrap();
                let fe = FiniteFunction::from_indices(prod.apex.edges().clone(), p.edges().clone(), te.clone()).unwrap();
                QuiverMorphism::quiver_map(prod.apex.clone(), p.clone(), fv, fe).is_ok()
            })
            .count();
        assert_eq!(all.len(), brute);
        assert_eq!(all.len(), 4);
        let mut seen = std::collections::BTreeSet::new();
        for psi in &all {
            let hat = x.curry(&p, psi).unwrap();
            QuiverMorphism::new(hat.dom().clone(), hat.cod().clone(), hat.comps().to_vec()).unwrap();
            assert_eq!(&x.uncurry(&hat).unwrap(), psi);
            seen.insert(hat.to_atom());
        }
        assert_eq!(seen.len(), 4);
        let id = x.curry(&x.obj, &x.eval).unwrap();
        assert_eq!(id, QuiverMorphism::identity(&x.obj));
    }

    #[test]
    fn curry_rejects_foreign_domain() {
        let b = Bounds::default();
        let x = exponential(&path1(), &path1(), &b).unwrap();
        let id = QuiverMorphism::identity(&path1());
        assert!(matches!(x.curry(&path1(), &id), Err(Error::NotProduct(_))));
    }
}
