//! Built-in reproductions of the counterexamples: each constructs its
//! objects, runs the comparison and reports the witness.

use super::category::{FiniteLimits, Multigraphs};
use super::report::{Evidence, LawReport};
use crate::bounds::Bounds;
use crate::error::{Error, Result};
use crate::finset::{Atom, FiniteFunction, FiniteSet};
use crate::incidence::{self, IncidenceHypergraph};
use crate::multigraph::{self, Multigraph};
use crate::presheaf::{self, PresheafMorphism};
use crate::quiver;
use crate::set_system::{self, HyperMorphism, SetSystemHypergraph};

pub const COUNTEREXAMPLES: [&str; 7] = [
    "topos_fail",
    "p1xp1_product",
    "p1xp1_coequalizer",
    "Ibad_product",
    "Ibad_coequalizer",
    "Fworse",
    "del_not_epi_preserving",
];

pub fn run_counterexample(name: &str) -> Result<LawReport> {
    let b = Bounds::default();
    match name {
        "topos_fail" => topos_fail(&b),
        "p1xp1_product" => p1xp1_product(&b),
        "p1xp1_coequalizer" => p1xp1_coequalizer(),
        "Ibad_product" => ibad_product(&b),
        "Ibad_coequalizer" => ibad_coequalizer(),
        "Fworse" => fworse(&b),
        "del_not_epi_preserving" => del_not_epi_preserving(&b),
        other => Err(Error::Unknown(format!("counterexample {other}"))),
    }
}

/// The two maps `V◇({0}) → P₁` hitting `v` and `w`.
pub fn endpoint_pair() -> (HyperMorphism, HyperMorphism) {
    let p = set_system::p1();
    let d = set_system::vertex_diamond(&FiniteSet::range(1));
    let at = |k: usize| {
        let fv = FiniteFunction::from_indices(d.vertices().clone(), p.vertices().clone(), vec![k]).expect("vertex");
        HyperMorphism::new(d.clone(), p.clone(), fv, FiniteFunction::empty(p.edges())).expect("no edges to check")
    };
    (at(0), at(1))
}

/// `H`: the coequalizer of the endpoint pair, `P₁` with its ends glued.
pub fn glued_path() -> Result<SetSystemHypergraph> {
    let (a, b) = endpoint_pair();
    Ok(set_system::coequalizer(&a, &b)?.apex)
}

fn sizes(label: &str, summary: String) -> Evidence {
    Evidence::object(label, summary)
}

fn verdict(law: &str, instance: &str, witness: Option<Evidence>, evidence: Vec<Evidence>) -> LawReport {
    match witness {
        Some(w) => LawReport::witness_found(law, instance, w, evidence),
        None => LawReport::fails(law, instance, Evidence::note("no witness", "the comparison succeeded"), evidence),
    }
}

fn topos_fail(b: &Bounds) -> Result<LawReport> {
    let p = set_system::p1();
    let (alpha, beta) = endpoint_pair();
    let h = glued_path()?;
    let dom = set_system::product(&[p.clone(), alpha.dom().clone()], b)?;
    let cod = set_system::product(&[p.clone(), p.clone()], b)?;
    let id = HyperMorphism::identity(&p);
    let pa = set_system::product_morphism(&dom, &cod, &[id.clone(), alpha])?;
    let pb = set_system::product_morphism(&dom, &cod, &[id, beta])?;
    let k = set_system::coequalizer(&pa, &pb)?.apex;
    let ph = set_system::product(&[p.clone(), h.clone()], b)?.apex;
    let squared = p.edges().len() * p.edges().len();
    let product_edges = cod.apex.edges().len();
    let evidence = vec![
        sizes("K", k.summary()),
        sizes("P1 x H", ph.summary()),
        Evidence::count("|E(P1)| squared", squared),
        Evidence::count("|E(P1 x P1)|", product_edges),
    ];
    let witness = (set_system::find_iso(&k, &ph).is_none() && squared != product_edges)
        .then(|| Evidence::note("not isomorphic", "K has no isomorphism to P1 x H, and edges of the product are not pairs of edges"));
    Ok(verdict("products do not preserve the coequalizer", "P1 and its glued ends", witness, evidence))
}

fn p1xp1_product(b: &Bounds) -> Result<LawReport> {
    let q = quiver::path1();
    let uq = multigraph::underlying(&presheaf::product(&[q.clone(), q.clone()]).apex).into_carrier();
    let u = multigraph::underlying(&q).into_carrier();
    let mp = Multigraphs::product(&[u.clone(), u], b)?.apex;
    let evidence = vec![sizes("U(P1 x P1)", uq.summary()), sizes("U(P1) x U(P1)", mp.summary())];
    let witness = set_system::find_iso(&uq, &mp)
        .is_none()
        .then(|| Evidence::note("not isomorphic", "the underlying multigraph of the quiver product is not the multigraph product"));
    Ok(verdict("the underlying multigraph functor does not preserve products", "directed 1-path", witness, evidence))
}

fn p1xp1_coequalizer() -> Result<LawReport> {
    let (alpha, beta) = endpoint_pair();
    let da = multigraph::assoc_digraph_map(&alpha)?;
    let db = multigraph::assoc_digraph_map(&beta)?;
    let r = presheaf::coequalizer(&da, &db)?.apex;
    let dh = multigraph::assoc_digraph(&Multigraph::new(glued_path()?)?).obj;
    let evidence = vec![sizes("R", r.summary()), sizes("D(H)", dh.summary())];
    let witness = presheaf::find_iso(&r, &dh)
        .is_none()
        .then(|| Evidence::note("not isomorphic", "R has a loop for each direction of the edge, D(H) only one"));
    Ok(verdict("the associated digraph functor does not preserve coequalizers", "P1 and its glued ends", witness, evidence))
}

fn ibad_product(b: &Bounds) -> Result<LawReport> {
    let p = set_system::p1();
    let lhs = incidence::incidence_forming(&set_system::product(&[p.clone(), p.clone()], b)?.apex);
    let ip = incidence::incidence_forming(&p);
    let rhs = presheaf::product(&[ip.clone(), ip]).apex;
    let evidence = vec![sizes("I(P1 x P1)", lhs.summary()), sizes("I(P1) x I(P1)", rhs.summary())];
    let witness = presheaf::find_iso(&lhs, &rhs)
        .is_none()
        .then(|| Evidence::note("not isomorphic", "incidence forming does not preserve the product"));
    Ok(verdict("incidence forming does not preserve products", "P1", witness, evidence))
}

fn ibad_coequalizer() -> Result<LawReport> {
    let (alpha, beta) = endpoint_pair();
    let ia = incidence::incidence_forming_map(&alpha);
    let ib = incidence::incidence_forming_map(&beta);
    let j = presheaf::coequalizer(&ia, &ib)?.apex;
    let ih = incidence::incidence_forming(&glued_path()?);
    let evidence = vec![sizes("J", j.summary()), sizes("I(H)", ih.summary())];
    let witness = presheaf::find_iso(&j, &ih)
        .is_none()
        .then(|| Evidence::note("not isomorphic", "J keeps both incidences, I(H) has one"));
    Ok(verdict("incidence forming does not preserve coequalizers", "P1 and its glued ends", witness, evidence))
}

/// `G`: vertex `x`, edge `f`, incidence `k` between them. `H`: vertices
/// `v`, `w`, edge `e`, incidences `i` and `j` joining each vertex to `e`.
pub fn fworse_pair() -> Result<(IncidenceHypergraph, IncidenceHypergraph, PresheafMorphism<incidence::IncidenceShape>)> {
    let g = IncidenceHypergraph::from_incidences(&["x"], &["f"], &[("k", "x", "f")])?;
    let h = IncidenceHypergraph::from_incidences(&["v", "w"], &["e"], &[("i", "v", "e"), ("j", "w", "e")])?;
    let map = |d: &FiniteSet, c: &FiniteSet, a: &str, t: &str| {
        FiniteFunction::from_pairs(d.clone(), c.clone(), [(Atom::label(a), Atom::label(t))])
    };
    let phi = PresheafMorphism::new(
        g.clone(),
        h.clone(),
        vec![
            map(g.vertices(), h.vertices(), "x", "v")?,
            map(g.edges(), h.edges(), "f", "e")?,
            map(g.incidences(), h.incidences(), "k", "i")?,
        ],
    )?;
    Ok((g, h, phi))
}

fn fworse(b: &Bounds) -> Result<LawReport> {
    let (g, h, phi) = fworse_pair()?;
    let (fg, fh) = (incidence::forget_incidence(&g), incidence::forget_incidence(&h));
    let below = set_system::homs(&fg, &fh, b)?.len();
    let above = presheaf::homs(&g, &h, b)?.len();
    let evidence = vec![
        Evidence::morphism("phi", phi.to_atom()),
        Evidence::count("incidence hypergraph maps G -> H", above),
        sizes("F(G)", fg.summary()),
        sizes("F(H)", fh.summary()),
    ];
    let witness = (below == 0 && above >= 1).then(|| Evidence::count("hypergraph maps F(G) -> F(H)", below));
    Ok(verdict("forgetting incidences is not functorial", "one incidence against a 2-edge", witness, evidence))
}

fn del_not_epi_preserving(b: &Bounds) -> Result<LawReport> {
    let (e4, e1) = (set_system::e_k(4), set_system::e_k(1));
    let homs = set_system::homs(&e4, &e1, b)?;
    let alpha = match homs.as_slice() {
        [only] => only.clone(),
        _ => return Err(Error::Mismatch(format!("expected one map E4 -> E1, found {}", homs.len()))),
    };
    let del_alpha = multigraph::del_map(&alpha)?;
    let evidence = vec![
        Evidence::morphism("alpha", alpha.to_atom()),
        Evidence::note("alpha is epi", alpha.is_epi().to_string()),
        Evidence::morphism("Del(alpha)", del_alpha.to_atom()),
        Evidence::note("Del(alpha) is epi", del_alpha.is_epi().to_string()),
    ];
    let witness = (alpha.is_epi() && !del_alpha.is_epi())
        .then(|| Evidence::count("edges of Del(E4) hitting the edge of E1", del_alpha.dom().edges().len()));
    Ok(verdict("deletion does not preserve epimorphisms", "single 4-edge onto single 1-edge", witness, evidence))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laws::Verdict;

    #[test]
    fn every_counterexample_has_a_witness() {
        for name in COUNTEREXAMPLES {
            let r = run_counterexample(name).unwrap();
            assert_eq!(r.verdict, Verdict::WitnessFound, "{}", r.to_json());
        }
    }

    fn has_summary(name: &str, summary: &str) -> bool {
        run_counterexample(name).unwrap().to_json().contains(&format!("\"summary\": \"{summary}\""))
    }

    #[test]
    fn frozen_sizes() {
        assert_eq!(glued_path().unwrap().sizes(), vec![1, 1]);
        assert!(has_summary("topos_fail", "2 vertices, 7 edges"));
        assert!(has_summary("topos_fail", "2 vertices, 1 edges"));
        assert!(has_summary("p1xp1_product", "4 vertices, 1 edges"));
        assert!(has_summary("p1xp1_product", "4 vertices, 2 edges"));
        assert!(has_summary("p1xp1_coequalizer", "1 vertices, 2 edges"));
        assert!(has_summary("p1xp1_coequalizer", "1 vertices, 1 edges"));
        assert!(has_summary("Ibad_coequalizer", "1 vertices, 1 edges, 2 incidences"));
        assert!(has_summary("Ibad_coequalizer", "1 vertices, 1 edges, 1 incidences"));
    }

    #[test]
    fn unknown_name() {
        assert!(run_counterexample("nope").is_err());
    }

    #[test]
    fn reports_are_deterministic() {
        for name in COUNTEREXAMPLES {
            assert_eq!(run_counterexample(name).unwrap().to_json(), run_counterexample(name).unwrap().to_json());
        }
    }
}
