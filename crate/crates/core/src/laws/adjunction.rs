//! Adjunctions checked on finite samples: equal hom-set sizes, an explicit
//! bijection by transposition along the unit and counit, and naturality
//! squares for sampled morphisms on both sides.

use std::collections::HashSet;

use super::category::{Category, Hypergraphs, Incidences, Multigraphs, Quivers, Sets};
use super::corpus::{self, Tier};
use super::functors as f;
use super::report::{Evidence, LawReport};
use crate::bounds::{saturating_pow, Bounds};
use crate::error::{Error, Result};
use crate::finset::{Atom, FiniteSet};
use crate::incidence::{EDGES, INCIDENCES, VERTICES};
use crate::quiver::Quiver;
use crate::set_system::{self, SetSystemHypergraph};
use crate::{multigraph, presheaf};

/// A functor given by its object and morphism actions.
pub struct Functor<A: Category, B: Category> {
    pub name: &'static str,
    pub obj: fn(&A::Obj, &Bounds) -> Result<B::Obj>,
    pub mor: fn(&A::Mor, &Bounds) -> Result<B::Mor>,
}

/// `F ⊣ G` with `F: A → B`, unit `X → G(F(X))` and counit `F(G(Y)) → Y`.
/// `lift`, when present, is an independent construction of the transpose
/// `X → G(Y)` of a map `F(X) → Y`.
pub struct Adjunction<A: Category, B: Category> {
    pub left: Functor<A, B>,
    pub right: Functor<B, A>,
    pub unit: fn(&A::Obj, &Bounds) -> Result<A::Mor>,
    pub counit: fn(&B::Obj, &Bounds) -> Result<B::Mor>,
    pub lift: Option<fn(&A::Obj, &B::Mor, &Bounds) -> Result<A::Mor>>,
}

/// Morphisms per object used for naturality squares.
const NATURALITY_MAPS: usize = 3;
/// Maps `F(X) → Y` per pair whose naturality squares are checked.
const NATURALITY_PHIS: usize = 2;

#[derive(Default)]
struct Counts {
    pairs: usize,
    transposed: usize,
    squares: usize,
}

/// Up to `NATURALITY_MAPS` morphisms into each sample from the samples, in
/// sample order.
fn maps_into<C: Category>(xs: &[C::Obj]) -> Vec<Vec<C::Mor>> {
    xs.iter()
        .map(|x| xs.iter().filter_map(|s| C::first_hom(s, x)).take(NATURALITY_MAPS).collect())
        .collect()
}

fn maps_out_of<C: Category>(ys: &[C::Obj]) -> Vec<Vec<C::Mor>> {
    ys.iter()
        .map(|y| ys.iter().filter_map(|t| C::first_hom(y, t)).take(NATURALITY_MAPS).collect())
        .collect()
}

impl<A: Category, B: Category> Adjunction<A, B> {
    pub fn name(&self) -> String {
        format!("{} ⊣ {}", self.left.name, self.right.name)
    }

    /// `G(φ) ∘ η_X`.
    fn transpose(&self, eta: &A::Mor, phi: &B::Mor, bounds: &Bounds) -> Result<A::Mor> {
        A::compose(&(self.right.mor)(phi, bounds)?, eta)
    }

    /// `ε_Y ∘ F(ψ)`.
    fn cotranspose(&self, eps: &B::Mor, psi: &A::Mor, bounds: &Bounds) -> Result<B::Mor> {
        B::compose(eps, &(self.left.mor)(psi, bounds)?)
    }

    fn check(&self, xs: &[A::Obj], ys: &[B::Obj], bounds: &Bounds, counts: &mut Counts) -> Result<Option<Evidence>> {
        let name = self.name();
        let mut units = Vec::with_capacity(xs.len());
        for x in xs {
            let fx = (self.left.obj)(x, bounds)?;
            let eta = (self.unit)(x, bounds)?;
            if A::dom(&eta) != x || *A::cod(&eta) != (self.right.obj)(&fx, bounds)? {
                return Ok(Some(Evidence::morphism(format!("{name}: unit has the wrong type"), A::mor_atom(&eta))));
            }
            units.push((fx, eta));
        }
        let mut counits = Vec::with_capacity(ys.len());
        for y in ys {
            let gy = (self.right.obj)(y, bounds)?;
            let eps = (self.counit)(y, bounds)?;
            if B::cod(&eps) != y || *B::dom(&eps) != (self.left.obj)(&gy, bounds)? {
                return Ok(Some(Evidence::morphism(format!("{name}: counit has the wrong type"), B::mor_atom(&eps))));
            }
            counits.push((gy, eps));
        }
        let into = maps_into::<A>(xs);
        let out_of = maps_out_of::<B>(ys);
        for (i, x) in xs.iter().enumerate() {
            let (fx, eta) = &units[i];
            for (j, y) in ys.iter().enumerate() {
                let (gy, eps) = &counits[j];
                let left = B::homs(fx, y, bounds)?;
                let right = A::homs(x, gy, bounds)?;
                let instance = format!("{name} at {} and {}", A::describe(x), B::describe(y));
                if left.len() != right.len() {
                    return Ok(Some(Evidence::note(
                        "hom-set sizes differ",
                        format!("{instance}: {} versus {}", left.len(), right.len()),
                    )));
                }
                let right_atoms: HashSet<Atom> = right.iter().map(A::mor_atom).collect();
                for phi in &left {
                    let t = self.transpose(eta, phi, bounds)?;
                    if !right_atoms.contains(&A::mor_atom(&t)) || self.cotranspose(eps, &t, bounds)? != *phi {
                        return Ok(Some(Evidence::morphism(format!("{instance}: transpose round trip fails"), B::mor_atom(phi))));
                    }
                    if let Some(lift) = self.lift {
                        if lift(x, phi, bounds)? != t {
                            return Ok(Some(Evidence::morphism(format!("{instance}: direct lift disagrees"), B::mor_atom(phi))));
                        }
                    }
                }
                for psi in &right {
                    if self.transpose(eta, &self.cotranspose(eps, psi, bounds)?, bounds)? != *psi {
                        return Ok(Some(Evidence::morphism(format!("{instance}: cotranspose round trip fails"), A::mor_atom(psi))));
                    }
                }
                counts.pairs += 1;
                counts.transposed += left.len() + right.len();
                for phi in left.iter().take(NATURALITY_PHIS) {
                    let t = self.transpose(eta, phi, bounds)?;
                    for a in &into[i] {
                        let k = xs.iter().position(|s| s == A::dom(a)).expect("sample");
                        let eta_k = &units[k].1;
                        let fa = (self.left.mor)(a, bounds)?;
                        for b in &out_of[j] {
                            let moved = B::compose(b, &B::compose(phi, &fa)?)?;
                            let lhs = self.transpose(eta_k, &moved, bounds)?;
                            let rhs = A::compose(&A::compose(&(self.right.mor)(b, bounds)?, &t)?, a)?;
                            if lhs != rhs {
                                return Ok(Some(Evidence::morphism(format!("{instance}: naturality square fails"), B::mor_atom(phi))));
                            }
                            counts.squares += 1;
                        }
                    }
                }
            }
        }
        Ok(None)
    }
}

/// Sample objects for each category.
#[derive(Debug, Clone)]
pub struct Samples {
    pub sets: Vec<FiniteSet>,
    pub quivers: Vec<Quiver>,
    pub hypergraphs: Vec<SetSystemHypergraph>,
    pub multigraphs: Vec<SetSystemHypergraph>,
    pub incidences: Vec<crate::incidence::IncidenceHypergraph>,
}

impl Samples {
    /// Every object in the tier plus the named constructions on small sets.
    pub fn corpus(tier: Tier) -> Samples {
        let mut quivers = corpus::quivers(tier);
        quivers.extend(corpus::named_quivers());
        let quivers = corpus::dedup_by_iso(quivers, |a, b| presheaf::find_iso(a, b).is_some());
        let mut hypergraphs = corpus::hypergraphs(tier);
        hypergraphs.extend(corpus::named_hypergraphs());
        let hypergraphs = corpus::dedup_by_iso(hypergraphs, |a, b| set_system::find_iso(a, b).is_some());
        let multigraphs = hypergraphs.iter().filter(|g| g.is_multigraph()).cloned().collect();
        let mut incidences = corpus::incidence_hypergraphs(tier);
        incidences.extend(corpus::named_incidence_hypergraphs());
        let incidences = corpus::dedup_by_iso(incidences, |a, b| presheaf::find_iso(a, b).is_some());
        Samples {
            sets: (0..=2).map(FiniteSet::range).collect(),
            quivers,
            hypergraphs,
            multigraphs,
            incidences,
        }
    }

    fn sizes(&self) -> Vec<Evidence> {
        vec![
            Evidence::count("sample sets", self.sets.len()),
            Evidence::count("sample quivers", self.quivers.len()),
            Evidence::count("sample hypergraphs", self.hypergraphs.len()),
            Evidence::count("sample multigraphs", self.multigraphs.len()),
            Evidence::count("sample incidence hypergraphs", self.incidences.len()),
        ]
    }
}

/// Names of the registered adjunctions; triples cover both halves.
pub const ADJUNCTIONS: [&str; 10] = [
    "quiver-vertex",
    "quiver-edge",
    "hypergraph-vertex",
    "hypergraph-edge",
    "deletion",
    "associated-digraph",
    "incidence-vertex",
    "incidence-edge",
    "incidence-incidence",
    "upsilon",
];

macro_rules! functor {
    ($name:expr, $obj:expr, $mor:expr) => {
        Functor {
            name: $name,
            obj: $obj,
            mor: $mor,
        }
    };
}

/// Runs one registered adjunction (both halves of a triple) on the samples.
pub fn check_adjunction(name: &str, samples: &Samples, bounds: &Bounds) -> Result<LawReport> {
    let mut counts = Counts::default();
    let (title, failure) = match name {
        "quiver-vertex" => {
            let a: Adjunction<Sets, Quivers> = Adjunction {
                left: functor!("V→◇", f::q_vertex_diamond, f::q_vertex_diamond_map),
                right: functor!("V→", f::q_vertices, f::q_vertices_map),
                unit: f::q_identity_set,
                counit: f::q_vertex_diamond_counit,
                lift: None,
            };
            let b: Adjunction<Quivers, Sets> = Adjunction {
                left: functor!("V→", f::q_vertices, f::q_vertices_map),
                right: functor!("V→★", f::q_vertex_star, f::q_vertex_star_map),
                unit: f::q_vertex_star_unit,
                counit: f::q_identity_set,
                lift: None,
            };
            let fail = a.check(&samples.sets, &samples.quivers, bounds, &mut counts)?;
            let fail = or_else(fail, || b.check(&samples.quivers, &samples.sets, bounds, &mut counts))?;
            ("V→◇ ⊣ V→ ⊣ V→★", fail)
        }
        "quiver-edge" => {
            let a: Adjunction<Sets, Quivers> = Adjunction {
                left: functor!("E→◇", f::q_edge_diamond, f::q_edge_diamond_map),
                right: functor!("E→", f::q_edges, f::q_edges_map),
                unit: f::q_identity_set,
                counit: f::q_edge_diamond_counit,
                lift: None,
            };
            let b: Adjunction<Quivers, Sets> = Adjunction {
                left: functor!("E→", f::q_edges, f::q_edges_map),
                right: functor!("E→★", f::q_edge_star, f::q_edge_star_map),
                unit: f::q_edge_star_unit,
                counit: f::q_identity_set,
                lift: None,
            };
            let fail = a.check(&samples.sets, &samples.quivers, bounds, &mut counts)?;
            let fail = or_else(fail, || b.check(&samples.quivers, &samples.sets, bounds, &mut counts))?;
            ("E→◇ ⊣ E→ ⊣ E→★", fail)
        }
        "hypergraph-vertex" => {
            let a: Adjunction<Sets, Hypergraphs> = Adjunction {
                left: functor!("V◇", f::h_vertex_diamond, f::h_vertex_diamond_map),
                right: functor!("V", f::h_vertices, f::h_vertices_map),
                unit: f::q_identity_set,
                counit: f::h_vertex_diamond_counit,
                lift: None,
            };
            let b: Adjunction<Hypergraphs, Sets> = Adjunction {
                left: functor!("V", f::h_vertices, f::h_vertices_map),
                right: functor!("V★", f::h_vertex_star, f::h_vertex_star_map),
                unit: f::h_vertex_star_unit,
                counit: f::q_identity_set,
                lift: Some(f::h_vertex_star_lift),
            };
            let fail = a.check(&samples.sets, &samples.hypergraphs, bounds, &mut counts)?;
            let fail = or_else(fail, || b.check(&samples.hypergraphs, &samples.sets, bounds, &mut counts))?;
            ("V◇ ⊣ V ⊣ V★", fail)
        }
        "hypergraph-edge" => {
            let a: Adjunction<Hypergraphs, Sets> = Adjunction {
                left: functor!("E", f::h_edges, f::h_edges_map),
                right: functor!("E★", f::h_edge_star, f::h_edge_star_map),
                unit: f::h_edge_star_unit,
                counit: f::h_edge_star_counit,
                lift: Some(f::h_edge_star_lift),
            };
            ("E ⊣ E★", a.check(&samples.hypergraphs, &samples.sets, bounds, &mut counts)?)
        }
        "deletion" => {
            let a: Adjunction<Multigraphs, Hypergraphs> = Adjunction {
                left: functor!("N", f::m_inclusion, f::m_inclusion_map),
                right: functor!("Del", f::m_del, f::m_del_map),
                unit: f::m_del_unit,
                counit: f::m_del_counit,
                lift: Some(f::m_del_lift),
            };
            ("N ⊣ Del", a.check(&samples.multigraphs, &samples.hypergraphs, bounds, &mut counts)?)
        }
        "associated-digraph" => {
            let a: Adjunction<Quivers, Multigraphs> = Adjunction {
                left: functor!("U", f::m_underlying, f::m_underlying_map),
                right: functor!("D→", f::m_assoc, f::m_assoc_map),
                unit: f::m_assoc_unit,
                counit: f::m_assoc_counit,
                lift: Some(f::m_assoc_lift),
            };
            ("U ⊣ D→", a.check(&samples.quivers, &samples.multigraphs, bounds, &mut counts)?)
        }
        "incidence-vertex" => {
            let a: Adjunction<Sets, Incidences> = Adjunction {
                left: functor!("V̌◇", f::r_v_diamond, f::r_v_diamond_map),
                right: functor!("V̌", f::r_sort::<VERTICES>, f::r_sort_map::<VERTICES>),
                unit: f::r_identity_set,
                counit: f::r_v_diamond_counit,
                lift: None,
            };
            let b: Adjunction<Incidences, Sets> = Adjunction {
                left: functor!("V̌", f::r_sort::<VERTICES>, f::r_sort_map::<VERTICES>),
                right: functor!("V̌★", f::r_v_star, f::r_v_star_map),
                unit: f::r_v_star_unit,
                counit: f::r_identity_set,
                lift: None,
            };
            let fail = a.check(&samples.sets, &samples.incidences, bounds, &mut counts)?;
            let fail = or_else(fail, || b.check(&samples.incidences, &samples.sets, bounds, &mut counts))?;
            ("V̌◇ ⊣ V̌ ⊣ V̌★", fail)
        }
        "incidence-edge" => {
            let a: Adjunction<Sets, Incidences> = Adjunction {
                left: functor!("Ě◇", f::r_e_diamond, f::r_e_diamond_map),
                right: functor!("Ě", f::r_sort::<EDGES>, f::r_sort_map::<EDGES>),
                unit: f::r_identity_set,
                counit: f::r_e_diamond_counit,
                lift: None,
            };
            let b: Adjunction<Incidences, Sets> = Adjunction {
                left: functor!("Ě", f::r_sort::<EDGES>, f::r_sort_map::<EDGES>),
                right: functor!("Ě★", f::r_e_star, f::r_e_star_map),
                unit: f::r_e_star_unit,
                counit: f::r_identity_set,
                lift: None,
            };
            let fail = a.check(&samples.sets, &samples.incidences, bounds, &mut counts)?;
            let fail = or_else(fail, || b.check(&samples.incidences, &samples.sets, bounds, &mut counts))?;
            ("Ě◇ ⊣ Ě ⊣ Ě★", fail)
        }
        "incidence-incidence" => {
            let a: Adjunction<Sets, Incidences> = Adjunction {
                left: functor!("I◇", f::r_i_diamond, f::r_i_diamond_map),
                right: functor!("I", f::r_sort::<INCIDENCES>, f::r_sort_map::<INCIDENCES>),
                unit: f::r_identity_set,
                counit: f::r_i_diamond_counit,
                lift: None,
            };
            let b: Adjunction<Incidences, Sets> = Adjunction {
                left: functor!("I", f::r_sort::<INCIDENCES>, f::r_sort_map::<INCIDENCES>),
                right: functor!("I★", f::r_i_star, f::r_i_star_map),
                unit: f::r_i_star_unit,
                counit: f::r_identity_set,
                lift: None,
            };
            let fail = a.check(&samples.sets, &samples.incidences, bounds, &mut counts)?;
            let fail = or_else(fail, || b.check(&samples.incidences, &samples.sets, bounds, &mut counts))?;
            ("I◇ ⊣ I ⊣ I★", fail)
        }
        "upsilon" => {
            let a: Adjunction<Incidences, Quivers> = Adjunction {
                left: functor!("Υ◇", f::u_diamond, f::u_diamond_map),
                right: functor!("Υ", f::u_obj, f::u_map),
                unit: f::u_diamond_unit,
                counit: f::u_diamond_counit,
                lift: None,
            };
            let b: Adjunction<Quivers, Incidences> = Adjunction {
                left: functor!("Υ", f::u_obj, f::u_map),
                right: functor!("Υ★", f::u_star, f::u_star_map),
                unit: f::u_star_unit,
                counit: f::u_star_counit,
                lift: None,
            };
            let fail = a.check(&samples.incidences, &samples.quivers, bounds, &mut counts)?;
            let fail = or_else(fail, || b.check(&samples.quivers, &samples.incidences, bounds, &mut counts))?;
            ("Υ◇ ⊣ Υ ⊣ Υ★", fail)
        }
        other => return Err(Error::Unknown(format!("adjunction {other}"))),
    };
    let mut evidence = vec![
        Evidence::count("sample pairs", counts.pairs),
        Evidence::count("morphisms transposed", counts.transposed),
        Evidence::count("naturality squares", counts.squares),
    ];
    evidence.extend(samples.sizes());
    Ok(LawReport::from_check(format!("adjunction {title}"), name, failure, evidence))
}

fn or_else(first: Option<Evidence>, rest: impl FnOnce() -> Result<Option<Evidence>>) -> Result<Option<Evidence>> {
    match first {
        Some(w) => Ok(Some(w)),
        None => rest(),
    }
}

/// `|Hom(E→◇(X), Q)| = |E(Q)|^|X|`, both sides counted independently.
pub fn check_edge_diamond_count(sets: &[FiniteSet], quivers: &[Quiver], bounds: &Bounds) -> Result<LawReport> {
    let law = "maps out of the edge diamond count edge tuples";
    let mut checked = 0usize;
    for x in sets {
        let d = crate::quiver::edge_diamond(x);
        for q in quivers {
            let lhs = presheaf::homs(&d, q, bounds)?.len() as u128;
            let rhs = saturating_pow(q.edges().len(), x.len());
            if lhs != rhs {
                let w = Evidence::note("counts differ", format!("{} versus {} at {} and {}", lhs, rhs, x, q.summary()));
                return Ok(LawReport::fails(law, "sample sets and quivers", w, vec![]));
            }
            checked += 1;
        }
    }
    Ok(LawReport::holds(law, "sample sets and quivers", vec![Evidence::count("pairs", checked)]))
}

/// `ζ_X ∘ E(ξ̂) = ξ` for every `ξ: E(G) → X`, with `ξ̂` the lift into the
/// edge star and `ζ_X` its counit.
pub fn check_edge_star_round_trip(sets: &[FiniteSet], hypergraphs: &[SetSystemHypergraph], bounds: &Bounds) -> Result<LawReport> {
    let law = "edge star lift round trip";
    let mut checked = 0usize;
    for x in sets {
        let zeta = set_system::edge_star_counit(x);
        for g in hypergraphs {
            for xi in Sets::homs(g.edges(), x, bounds)? {
                let lifted = set_system::factor_through_edge_star(g, &xi)?;
                if zeta.after(lifted.fe())? != xi {
                    let w = Evidence::morphism("round trip changes the map", xi.to_atom());
                    return Ok(LawReport::fails(law, g.summary(), w, vec![]));
                }
                checked += 1;
            }
        }
    }
    Ok(LawReport::holds(law, "sample sets and hypergraphs", vec![Evidence::count("maps lifted", checked)]))
}

/// `θ_G ∘ U(φ̂) = φ` for every `φ: U(Q) → G`.
pub fn check_assoc_round_trip(quivers: &[Quiver], multigraphs: &[SetSystemHypergraph], bounds: &Bounds) -> Result<LawReport> {
    let law = "associated digraph lift round trip";
    let mut checked = 0usize;
    for g in multigraphs {
        let assoc = multigraph::assoc_digraph(&multigraph::Multigraph::new(g.clone())?);
        for q in quivers {
            let u = multigraph::underlying(q).into_carrier();
            for phi in set_system::homs(&u, g, bounds)? {
                let lifted = multigraph::assoc_factor(q, &phi)?;
                if assoc.theta.after(&multigraph::underlying_map(&lifted))? != phi {
                    let w = Evidence::morphism("round trip changes the map", phi.to_atom());
                    return Ok(LawReport::fails(law, q.summary(), w, vec![]));
                }
                checked += 1;
            }
        }
    }
    Ok(LawReport::holds(law, "sample quivers and multigraphs", vec![Evidence::count("maps lifted", checked)]))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> Samples {
        Samples::corpus(Tier::SMALL)
    }

    #[test]
    fn every_registered_adjunction_holds() {
        let s = small();
        for name in ADJUNCTIONS {
            let r = check_adjunction(name, &s, &Bounds::default()).unwrap();
            assert!(r.passed(), "{}", r.to_json());
        }
    }

    #[test]
    fn unknown_name_is_an_error() {
        assert!(check_adjunction("nope", &small(), &Bounds::default()).is_err());
    }

    #[test]
    fn a_wrong_counit_is_caught() {
        // reversing the set is a well-typed but wrong counit for V→ ⊣ V→★
        let s = small();
        let a: Adjunction<Quivers, Sets> = Adjunction {
            left: functor!("V→", f::q_vertices, f::q_vertices_map),
            right: functor!("V→★", f::q_vertex_star, f::q_vertex_star_map),
            unit: f::q_vertex_star_unit,
            counit: |x, _| crate::finset::FiniteFunction::from_indices(x.clone(), x.clone(), (0..x.len()).rev().collect()),
            lift: None,
        };
        let mut c = Counts::default();
        let fail = a.check(&s.quivers, &s.sets, &Bounds::default(), &mut c).unwrap();
        assert!(fail.is_some());
    }

    #[test]
    fn spot_identities() {
        let s = small();
        let b = Bounds::default();
        assert!(check_edge_diamond_count(&s.sets, &s.quivers, &b).unwrap().passed());
        assert!(check_edge_star_round_trip(&s.sets, &s.hypergraphs, &b).unwrap().passed());
        assert!(check_assoc_round_trip(&s.quivers, &s.multigraphs, &b).unwrap().passed());
    }
}
