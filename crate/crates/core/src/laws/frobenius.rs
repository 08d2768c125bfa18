//! Frobenius morphisms `L(F(G) × S) → G × L(S)` for the adjoint strings
//! `L ⊣ F ⊣ R`, built twice: as the product mediator of the legs
//! `ε_G ∘ L(π₁)` and `L(π₂)`, and from the componentwise formula. The two
//! must agree before the verdict is taken.

use super::functors as f;
use super::report::{Evidence, LawReport};
use crate::bounds::Bounds;
use crate::error::{Error, Result};
use crate::finset::{self, Atom, FiniteFunction, FiniteSet};
use crate::incidence::{self, IncidenceHypergraph, IncidenceMorphism};
use crate::presheaf::{self, PresheafMorphism, Shape};
use crate::quiver::{Quiver, QuiverMorphism};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FrobeniusName {
    PhiV,
    PhiE,
    PhiI,
    PhiUpsilon,
}

impl FrobeniusName {
    pub const ALL: [FrobeniusName; 4] = [
        FrobeniusName::PhiV,
        FrobeniusName::PhiE,
        FrobeniusName::PhiI,
        FrobeniusName::PhiUpsilon,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FrobeniusName::PhiV => "phi_V",
            FrobeniusName::PhiE => "phi_E",
            FrobeniusName::PhiI => "phi_I",
            FrobeniusName::PhiUpsilon => "phi_upsilon",
        }
    }

    pub fn parse(s: &str) -> Result<FrobeniusName> {
        FrobeniusName::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Unknown(s.to_owned()))
    }
}

/// Two elements identified by `m`, with their sort.
pub fn collision_witness<S: Shape>(m: &PresheafMorphism<S>) -> Option<Evidence> {
    (0..S::SORTS.len()).find_map(|k| {
        let c = m.comp(k);
        c.collision().map(|(a, b)| {
            Evidence::note(
                "collision",
                format!("{} and {} in sort {} both go to {}", c.dom().get(a), c.dom().get(b), S::SORTS[k], c.cod().get(c.at(a))),
            )
        })
    })
}

/// An element missed by `m`, with its sort.
fn missed_witness<S: Shape>(m: &PresheafMorphism<S>) -> Option<Evidence> {
    (0..S::SORTS.len()).find_map(|k| {
        let c = m.comp(k);
        let hit = c.image_indices(&(0..c.dom().len()).collect::<Vec<_>>());
        (0..c.cod().len())
            .find(|y| hit.binary_search(y).is_err())
            .map(|y| Evidence::note("missed element", format!("{} in sort {}", c.cod().get(y), S::SORTS[k])))
    })
}

/// Compares the two routes, then reports whether the morphism is an iso.
fn iso_report<S: Shape>(law: String, inst: String, mediated: &PresheafMorphism<S>, formula: &PresheafMorphism<S>) -> LawReport {
    let mut evidence = vec![
        Evidence::morphism("frobenius morphism", mediated.to_atom()),
        Evidence::object("domain", mediated.dom().summary()),
        Evidence::object("codomain", mediated.cod().summary()),
    ];
    if mediated != formula {
        let w = Evidence::morphism("componentwise formula disagrees with the mediator", formula.to_atom());
        return LawReport::fails(law, inst, w, evidence);
    }
    evidence.push(Evidence::note("routes", "mediator and componentwise formula agree"));
    match collision_witness(mediated).or_else(|| missed_witness(mediated)) {
        None => LawReport::holds(law, inst, evidence),
        Some(w) => LawReport::fails(law, inst, w, evidence),
    }
}

type SetFunctor = fn(&FiniteSet, &Bounds) -> Result<IncidenceHypergraph>;
type SetFunctorMap = fn(&FiniteFunction, &Bounds) -> Result<IncidenceMorphism>;
type Counit = fn(&IncidenceHypergraph, &Bounds) -> Result<IncidenceMorphism>;

/// The left adjoint, its action on maps, its counit and the sort that the
/// middle functor reads.
fn set_side(name: FrobeniusName) -> Result<(SetFunctor, SetFunctorMap, Counit, usize)> {
    match name {
        FrobeniusName::PhiV => Ok((f::r_v_diamond, f::r_v_diamond_map, f::r_v_diamond_counit, incidence::VERTICES)),
        FrobeniusName::PhiE => Ok((f::r_e_diamond, f::r_e_diamond_map, f::r_e_diamond_counit, incidence::EDGES)),
        FrobeniusName::PhiI => Ok((f::r_i_diamond, f::r_i_diamond_map, f::r_i_diamond_counit, incidence::INCIDENCES)),
        FrobeniusName::PhiUpsilon => Err(Error::Mismatch("phi_upsilon takes a quiver and an incidence hypergraph".into())),
    }
}

/// `L(F(G) × S) → G × L(S)` as the mediator of `ε_G ∘ L(π₁)` and `L(π₂)`.
fn mediated_set_side(name: FrobeniusName, g: &IncidenceHypergraph, s: &FiniteSet, bounds: &Bounds) -> Result<IncidenceMorphism> {
    let (left, left_map, counit, sort) = set_side(name)?;
    let (fgs, proj) = finset::product_set(&[g.set(sort).clone(), s.clone()]);
    debug_assert_eq!(fgs.len(), g.set(sort).len() * s.len());
    let leg0 = counit(g, bounds)?.after(&left_map(&proj[0], bounds)?)?;
    let leg1 = left_map(&proj[1], bounds)?;
    let target = presheaf::product(&[g.clone(), left(s, bounds)?]);
    presheaf::product_mediator(&target, &[leg0, leg1])
}

/// The componentwise formula: the identity on the sort read by the middle
/// functor; for incidences, port and attachment times the identity on the
/// other two sorts.
fn formula_set_side(name: FrobeniusName, g: &IncidenceHypergraph, s: &FiniteSet, bounds: &Bounds) -> Result<IncidenceMorphism> {
    let (left, _, _, sort) = set_side(name)?;
    let (fgs, _) = finset::product_set(&[g.set(sort).clone(), s.clone()]);
    let dom = left(&fgs, bounds)?;
    let cod = presheaf::product(&[g.clone(), left(s, bounds)?]).apex;
    let comps = (0..3)
        .map(|k| {
            FiniteFunction::from_fn(dom.set(k).clone(), cod.set(k).clone(), |a| {
                let t = a.as_tuple().expect("pair atom");
                let x = match (name, k) {
                    (FrobeniusName::PhiI, incidence::VERTICES) => image(g.port(), &t[0]),
                    (FrobeniusName::PhiI, incidence::EDGES) => image(g.att(), &t[0]),
                    _ => t[0].clone(),
                };
                Atom::tuple(vec![x, t[1].clone()])
            })
        })
        .collect::<Result<Vec<_>>>()?;
    PresheafMorphism::new(dom, cod, comps)
}

fn image(f: &FiniteFunction, a: &Atom) -> Atom {
    f.apply(a).expect("element of the domain").clone()
}

/// `Φ_V`, `Φ_E` or `Φ_I` at `(G, S)`. `Φ_V` and `Φ_E` are expected to be
/// isomorphisms; for `Φ_I` a collision is the expected outcome.
pub fn frobenius_set_side(
    name: FrobeniusName,
    g: &IncidenceHypergraph,
    s: &FiniteSet,
    bounds: &Bounds,
) -> Result<(IncidenceMorphism, LawReport)> {
    let mediated = mediated_set_side(name, g, s, bounds)?;
    let formula = formula_set_side(name, g, s, bounds)?;
    let inst = format!("G = {}, S = {}", g.summary(), s);
    let report = if name == FrobeniusName::PhiI {
        let law = "phi_I is not monic".to_owned();
        let mut evidence = vec![Evidence::morphism("frobenius morphism", mediated.to_atom())];
        if mediated != formula {
            let w = Evidence::morphism("componentwise formula disagrees with the mediator", formula.to_atom());
            LawReport::fails(law, inst, w, evidence)
        } else {
            evidence.push(Evidence::note("routes", "mediator and componentwise formula agree"));
            match collision_witness(&mediated) {
                Some(w) => LawReport::witness_found(law, inst, w, evidence),
                None => LawReport::fails(law, inst, Evidence::note("monic", "no two elements are identified"), evidence),
            }
        }
    } else {
        iso_report(format!("{} is an isomorphism", name.name()), inst, &mediated, &formula)
    };
    Ok((mediated, report))
}

/// `Φ: Υ◇(Υ(Q) × G) → Q × Υ◇(G)` as the mediator of `ε_Q ∘ Υ◇(π₁)` and
/// `Υ◇(π₂)`.
fn mediated_upsilon(q: &Quiver, g: &IncidenceHypergraph) -> Result<QuiverMorphism> {
    let uq = incidence::upsilon(q);
    let p = presheaf::product(&[uq, g.clone()]);
    let eps = f::u_diamond_counit(q, &Bounds::default())?;
    let leg0 = eps.after(&incidence::upsilon_diamond_map(&p.legs[0]))?;
    let leg1 = incidence::upsilon_diamond_map(&p.legs[1]);
    let target = presheaf::product(&[q.clone(), incidence::upsilon_diamond(g)]);
    presheaf::product_mediator(&target, &[leg0, leg1])
}

/// `(n,(v,x)) ↦ (v,(n,x))` on vertices and the identity on edges.
fn formula_upsilon(q: &Quiver, g: &IncidenceHypergraph) -> Result<QuiverMorphism> {
    let dom = incidence::upsilon_diamond(&presheaf::product(&[incidence::upsilon(q), g.clone()]).apex);
    let cod = presheaf::product(&[q.clone(), incidence::upsilon_diamond(g)]).apex;
    let fv = FiniteFunction::from_fn(dom.vertices().clone(), cod.vertices().clone(), |a| {
        let t = a.as_tuple().expect("tagged vertex");
        let vx = t[1].as_tuple().expect("pair");
        Atom::tuple(vec![vx[0].clone(), Atom::pair(t[0].clone(), vx[1].clone())])
    })?;
    let fe = FiniteFunction::from_fn(dom.edges().clone(), cod.edges().clone(), Atom::clone)?;
    PresheafMorphism::new(dom, cod, vec![fv, fe])
}

pub fn frobenius_upsilon(q: &Quiver, g: &IncidenceHypergraph) -> Result<(QuiverMorphism, LawReport)> {
    let mediated = mediated_upsilon(q, g)?;
    let formula = formula_upsilon(q, g)?;
    let inst = format!("Q = {}, G = {}", q.summary(), g.summary());
    let report = iso_report("phi_upsilon is an isomorphism".to_owned(), inst, &mediated, &formula);
    Ok((mediated, report))
}

/// The instance at which `Φ_I` is expected to identify two elements.
pub fn phi_i_instance() -> (IncidenceHypergraph, FiniteSet) {
    (incidence::i_star(&FiniteSet::range(2)), FiniteSet::range(2))
}
