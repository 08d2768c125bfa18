//! The incidence hypergraph exponential `H^G`.

use super::{terminal, IncidenceHypergraph, IncidenceMorphism, IncidenceShape};
use crate::bounds::Bounds;
use crate::error::{Error, Result};
use crate::finset::{self, FiniteFunction, FiniteSet};
use crate::presheaf::{self, product, product_morphism, Cone, Presheaf, PresheafMorphism};
use crate::quiver::pair_lookup;

/// `H^G` with its evaluation map `G × H^G → H`.
#[derive(Debug, Clone)]
pub struct IncidenceExponential {
    pub base: IncidenceHypergraph,
    pub target: IncidenceHypergraph,
    pub obj: IncidenceHypergraph,
    /// The product `G × H^G` that is the domain of `eval`.
    pub product: Cone<IncidenceShape>,
    pub eval: IncidenceMorphism,
    /// The morphism `G → H` behind each incidence, by incidence index.
    pub incidence_maps: Vec<IncidenceMorphism>,
}

impl IncidenceExponential {
    /// Vertices and edges are the functions on vertices and on edges; the
    /// incidences are the morphisms `G → H`, each with its vertex part as
    /// port and its edge part as attachment.
    pub fn new(g: &IncidenceHypergraph, h: &IncidenceHypergraph, bounds: &Bounds) -> Result<Self> {
        let v = finset::all_functions(g.vertices(), h.vertices(), bounds)?;
        let e = finset::all_functions(g.edges(), h.edges(), bounds)?;
        let homs = presheaf::homs(g, h, bounds)?;
        let i = FiniteSet::new(homs.iter().map(PresheafMorphism::to_atom))?;
        let mut maps: Vec<Option<IncidenceMorphism>> = vec![None; i.len()];
        let mut port = vec![0; i.len()];
        let mut att = vec![0; i.len()];
        for m in homs {
            let x = i.index_of(&m.to_atom()).expect("incidence");
            port[x] = v.index_of(&m.fv().to_atom()).expect("function");
            att[x] = e.index_of(&m.fe().to_atom()).expect("function");
            maps[x] = Some(m);
        }
        let incidence_maps: Vec<IncidenceMorphism> = maps.into_iter().map(|m| m.expect("filled")).collect();
        let obj = Presheaf::from_tables(vec![v, e, i], vec![port, att]);
        let prod = product(&[g.clone(), obj.clone()]);
        let (pg, px) = (&prod.legs[0], &prod.legs[1]);
        let apply = |sort: usize| -> Vec<usize> {
            (0..prod.apex.set(sort).len())
                .map(|x| {
                    let f = FiniteFunction::from_atom(g.set(sort), h.set(sort), obj.set(sort).get(px.comp(sort).at(x)))
                        .expect("function atom");
                    f.at(pg.comp(sort).at(x))
                })
                .collect()
        };
        let tv = apply(0);
        let te = apply(1);
        let ti = (0..prod.apex.incidences().len())
            .map(|x| incidence_maps[px.fi().at(x)].fi().at(pg.fi().at(x)))
            .collect();
        let eval = PresheafMorphism::from_tables(&prod.apex, h, vec![tv, te, ti]);
        Ok(IncidenceExponential {
            base: g.clone(),
            target: h.clone(),
            obj,
            product: prod,
            eval,
            incidence_maps,
        })
    }

    fn check_curry_input(&self, k: &IncidenceHypergraph, psi: &IncidenceMorphism) -> Result<Cone<IncidenceShape>> {
        let prod = product(&[self.base.clone(), k.clone()]);
        if psi.dom() != &prod.apex {
            return Err(Error::NotProduct(
                "the domain is not the constructed product of the base and the given hypergraph".into(),
            ));
        }
        if psi.cod() != &self.target {
            return Err(Error::Mismatch("the map does not land in the exponential's target".into()));
        }
        Ok(prod)
    }

    /// The transpose `K → H^G` of `ψ: G × K → H`. The morphism for an
    /// incidence `j` of `K` is `ψ ∘ (G × α_j) ∘ ρ⁻¹`, where `α_j` picks `j` out of
    /// the one-incidence object and `ρ: G × 1 → G` is the projection. The
    /// result is checked against the componentwise description.
    pub fn curry(&self, k: &IncidenceHypergraph, psi: &IncidenceMorphism) -> Result<IncidenceMorphism> {
        let prod = self.check_curry_input(k, psi)?;
        let (g, one) = (&self.base, terminal());
        let gone = product(&[g.clone(), one.clone()]);
        let rho_inv = gone.legs[0].inverse()?;
        let id_g = IncidenceMorphism::identity(g);
        let mut ti = Vec::with_capacity(k.incidences().len());
        for j in 0..k.incidences().len() {
            let alpha = PresheafMorphism::from_tables(
                &one,
                k,
                vec![vec![k.port().at(j)], vec![k.att().at(j)], vec![j]],
            );
            let g_alpha = product_morphism(&gone, &prod, &[id_g.clone(), alpha])?;
            let m = psi.after(&g_alpha)?.after(&rho_inv)?;
            ti.push(self.obj.incidences().require(&m.to_atom(), "the exponential incidences")?);
        }
        let tv = self.columns(&prod, psi, 0, k.vertices().len());
        let te = self.columns(&prod, psi, 1, k.edges().len());
        let literal = PresheafMorphism::from_tables(k, &self.obj, vec![tv, te, ti]);
        let direct = self.curry_direct(k, psi)?;
        if literal != direct {
            return Err(Error::Mismatch("the two descriptions of the transpose disagree".into()));
        }
        Ok(literal)
    }

    /// Each element `x` of sort `sort` in `K` goes to the function
    /// `y ↦ ψ(y, x)`.
    fn columns(&self, prod: &Cone<IncidenceShape>, psi: &IncidenceMorphism, sort: usize, n: usize) -> Vec<usize> {
        let lookup = pair_lookup(prod.legs[0].comp(sort), prod.legs[1].comp(sort));
        let (g, h) = (&self.base, &self.target);
        (0..n)
            .map(|x| {
                let t = (0..g.set(sort).len()).map(|y| psi.comp(sort).at(lookup[&(y, x)])).collect();
                let f = FiniteFunction::raw(g.set(sort).clone(), h.set(sort).clone(), t);
                self.obj.set(sort).index_of(&f.to_atom()).expect("every function is present")
            })
            .collect()
    }

    /// The componentwise transpose: incidence `j` goes to the morphism with
    /// vertex part `v ↦ ψ(v, port j)`, edge part `e ↦ ψ(e, att j)` and
    /// incidence part `i ↦ ψ(i, j)`.
    pub fn curry_direct(&self, k: &IncidenceHypergraph, psi: &IncidenceMorphism) -> Result<IncidenceMorphism> {
        let prod = self.check_curry_input(k, psi)?;
        let (g, h) = (&self.base, &self.target);
        let look: Vec<_> = (0..3)
            .map(|s| pair_lookup(prod.legs[0].comp(s), prod.legs[1].comp(s)))
            .collect();
        let ti = (0..k.incidences().len())
            .map(|j| {
                let tv = (0..g.vertices().len()).map(|v| psi.fv().at(look[0][&(v, k.port().at(j))])).collect();
                let te = (0..g.edges().len()).map(|e| psi.fe().at(look[1][&(e, k.att().at(j))])).collect();
                let tinc = (0..g.incidences().len()).map(|i| psi.fi().at(look[2][&(i, j)])).collect();
                let m = PresheafMorphism::from_tables(g, h, vec![tv, te, tinc]);
                self.obj.incidences().require(&m.to_atom(), "the exponential incidences")
            })
            .collect::<Result<Vec<_>>>()?;
        let tv = self.columns(&prod, psi, 0, k.vertices().len());
        let te = self.columns(&prod, psi, 1, k.edges().len());
        Ok(PresheafMorphism::from_tables(k, &self.obj, vec![tv, te, ti]))
    }

    /// `eval ∘ (G × f)` for `f: K → H^G`.
    pub fn uncurry(&self, f: &IncidenceMorphism) -> Result<IncidenceMorphism> {
        if f.cod() != &self.obj {
            return Err(Error::Mismatch("the map does not land in the exponential".into()));
        }
        let prod = product(&[self.base.clone(), f.dom().clone()]);
        let gf = product_morphism(&prod, &self.product, &[IncidenceMorphism::identity(&self.base), f.clone()])?;
        self.eval.after(&gf)
    }
}

/// Exponential of incidence hypergraphs.
pub fn exponential(g: &IncidenceHypergraph, h: &IncidenceHypergraph, bounds: &Bounds) -> Result<IncidenceExponential> {
    IncidenceExponential::new(g, h, bounds)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::incidence::{i_star, upsilon};
    use crate::presheaf::{find_iso, hom_count, homs};
    use crate::quiver::path1;

    #[test]
    fn path_self_exponential_has_four_incidences() {
        let b = Bounds::default();
        let g = upsilon(&path1());
        let x = exponential(&g, &g, &b).unwrap();
        assert_eq!(x.obj.sizes(), vec![4, 4, 4]);
    }

    #[test]
    fn unit_exponents() {
        let b = Bounds::default();
        let g = i_star(&FiniteSet::range(2));
        let x = exponential(&terminal(), &g, &b).unwrap();
        assert!(find_iso(&x.obj, &g).is_some());
        let x = exponential(&g, &terminal(), &b).unwrap();
        assert!(find_iso(&x.obj, &terminal()).is_some());
    }

    #[test]
    fn curry_is_a_bijection() {
        let b = Bounds::default();
        let g = upsilon(&path1());
        let x = exponential(&g, &g, &b).unwrap();
        let prod = product(&[g.clone(), g.clone()]);
        let all = homs(&prod.apex, &g, &b).unwrap();
        assert_eq!(all.len() as u128, hom_count(&g, &x.obj));
        let mut seen = std::collections::BTreeSet::new();
        for psi in &all {
            let hat = x.curry(&g, psi).unwrap();
            IncidenceMorphism::new(hat.dom().clone(), hat.cod().clone(), hat.comps().to_vec()).unwrap();
            assert_eq!(&x.uncurry(&hat).unwrap(), psi);
            seen.insert(hat.to_atom());
        }
        assert_eq!(seen.len(), all.len());
        assert_eq!(x.curry(&x.obj, &x.eval).unwrap(), IncidenceMorphism::identity(&x.obj));
    }

    #[test]
    fn global_elements_are_incidences() {
        let b = Bounds::default();
        let g = upsilon(&path1());
        let x = exponential(&g, &g, &b).unwrap();
        let t = terminal();
        let gt = product(&[g.clone(), t.clone()]);
        for m in homs(&g, &g, &b).unwrap() {
            let psi = m.after(&gt.legs[0]).unwrap();
            let hat = x.curry(&t, &psi).unwrap();
            assert_eq!(x.obj.incidences().get(hat.fi().at(0)), &m.to_atom());
        }
    }
}
