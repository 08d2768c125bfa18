//! Randomized invariants checked against brute-force oracles.

use graphcat::incidence::{self, IncidenceHypergraph};
use graphcat::presheaf::{self, Presheaf};
use graphcat::quiver::{self, Quiver};
use graphcat::set_system::{self, SetSystemHypergraph};
use graphcat::{Bounds, FiniteFunction, FiniteSet};
use proptest::prelude::*;

fn tables(n: usize, m: usize) -> Vec<Vec<usize>> {
    (0..n).fold(vec![vec![]], |acc, _| {
        acc.into_iter()
            .flat_map(|t| {
                (0..m).map(move |x| {
                    let mut t = t.clone();
                    t.push(x);
                    t
                })
            })
            .collect()
    })
}

fn quiver_of(n: usize, edges: &[(usize, usize)]) -> Quiver {
    let v = FiniteSet::range(n);
    let e = FiniteSet::range(edges.len());
    let src = FiniteFunction::from_indices(e.clone(), v.clone(), edges.iter().map(|p| p.0).collect()).unwrap();
    let tgt = FiniteFunction::from_indices(e.clone(), v.clone(), edges.iter().map(|p| p.1).collect()).unwrap();
    Quiver::quiver(v, e, src, tgt).unwrap()
}

/// Every pair of functions on vertices and edges that commutes with both
/// source and target.
fn quiver_hom_oracle(a: &Quiver, b: &Quiver) -> usize {
    let pairs = |q: &Quiver| -> Vec<(usize, usize)> { (0..q.edges().len()).map(|e| (q.src().at(e), q.tgt().at(e))).collect() };
    let (ap, bp) = (pairs(a), pairs(b));
    let mut n = 0;
    for fv in tables(a.vertices().len(), b.vertices().len()) {
        let mut per_edge = 1;
        for &(s, t) in &ap {
            per_edge *= bp.iter().filter(|&&(s2, t2)| s2 == fv[s] && t2 == fv[t]).count();
        }
        n += per_edge;
    }
    n
}

fn hyper_of(n: usize, masks: &[u8]) -> SetSystemHypergraph {
    let ends = masks.iter().map(|m| (0..n).filter(|b| m >> b & 1 == 1).collect()).collect();
    SetSystemHypergraph::from_endpoints(FiniteSet::range(n), FiniteSet::range(masks.len()), ends).unwrap()
}

/// Vertex functions times, per edge, the number of target edges whose
/// endpoint set is exactly the image.
fn hyper_hom_oracle(a: &SetSystemHypergraph, b: &SetSystemHypergraph) -> usize {
    let mut n = 0;
    for fv in tables(a.vertices().len(), b.vertices().len()) {
        let mut per_edge = 1;
        for x in 0..a.edges().len() {
            let mut image: Vec<usize> = a.ends(x).iter().map(|&v| fv[v]).collect();
            image.sort_unstable();
            image.dedup();
            per_edge *= (0..b.edges().len()).filter(|&y| b.ends(y) == image.as_slice()).count();
        }
        n += per_edge;
    }
    n
}

fn incidence_of(nv: usize, ne: usize, incs: &[(usize, usize)]) -> IncidenceHypergraph {
    let i = FiniteSet::range(incs.len());
    let port = FiniteFunction::from_indices(i.clone(), FiniteSet::range(nv), incs.iter().map(|p| p.0).collect()).unwrap();
    let att = FiniteFunction::from_indices(i.clone(), FiniteSet::range(ne), incs.iter().map(|p| p.1).collect()).unwrap();
    Presheaf::new(vec![FiniteSet::range(nv), FiniteSet::range(ne), i], vec![port, att]).unwrap()
}

fn incidence_hom_oracle(a: &IncidenceHypergraph, b: &IncidenceHypergraph) -> usize {
    let pairs = |g: &IncidenceHypergraph| -> Vec<(usize, usize)> {
        (0..g.incidences().len()).map(|i| (g.port().at(i), g.att().at(i))).collect()
    };
    let (ap, bp) = (pairs(a), pairs(b));
    let mut n = 0;
    for fv in tables(a.vertices().len(), b.vertices().len()) {
        for fe in tables(a.edges().len(), b.edges().len()) {
            n += ap
                .iter()
                .map(|&(v, e)| bp.iter().filter(|&&p| p == (fv[v], fe[e])).count())
                .product::<usize>();
        }
    }
    n
}

fn arb_quiver(max_v: usize, max_e: usize) -> impl Strategy<Value = Quiver> {
    (1..=max_v).prop_flat_map(move |n| {
        prop::collection::vec((0..n, 0..n), 0..=max_e).prop_map(move |es| quiver_of(n, &es))
    })
}

fn arb_hyper(max_v: usize, max_e: usize) -> impl Strategy<Value = SetSystemHypergraph> {
    (0..=max_v).prop_flat_map(move |n| {
        prop::collection::vec(0u8..(1 << n), 0..=max_e).prop_map(move |ms| hyper_of(n, &ms))
    })
}

fn arb_incidence(max: usize, max_i: usize) -> impl Strategy<Value = IncidenceHypergraph> {
    (1..=max, 1..=max).prop_flat_map(move |(nv, ne)| {
        prop::collection::vec((0..nv, 0..ne), 0..=max_i).prop_map(move |is| incidence_of(nv, ne, &is))
    })
}

/// The relabeling of every sort by reversal.
fn reversed<S: presheaf::Shape>(x: &Presheaf<S>) -> Presheaf<S> {
    let renames: Vec<FiniteFunction> = x
        .sets()
        .iter()
        .map(|s| {
            let n = s.len();
            FiniteFunction::from_indices(s.clone(), s.clone(), (0..n).rev().collect()).unwrap()
        })
        .collect();
    x.relabel(&renames).unwrap().0
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn quiver_hom_count_matches_oracle(a in arb_quiver(3, 3), b in arb_quiver(3, 3)) {
        prop_assert_eq!(presheaf::hom_count(&a, &b), quiver_hom_oracle(&a, &b) as u128);
        prop_assert_eq!(presheaf::homs(&a, &b, &Bounds::default()).unwrap().len(), quiver_hom_oracle(&a, &b));
    }

    #[test]
    fn hyper_hom_count_matches_oracle(a in arb_hyper(3, 3), b in arb_hyper(3, 3)) {
        prop_assert_eq!(set_system::hom_count(&a, &b), hyper_hom_oracle(&a, &b) as u128);
    }

    #[test]
    fn incidence_hom_count_matches_oracle(a in arb_incidence(2, 3), b in arb_incidence(2, 3)) {
        prop_assert_eq!(presheaf::hom_count(&a, &b), incidence_hom_oracle(&a, &b) as u128);
    }

    #[test]
    fn hom_counts_are_relabel_invariant(a in arb_quiver(3, 3), b in arb_quiver(3, 3)) {
        let (ra, rb) = (reversed(&a), reversed(&b));
        prop_assert_eq!(presheaf::hom_count(&a, &b), presheaf::hom_count(&ra, &rb));
        prop_assert!(presheaf::find_iso(&a, &ra).is_some());
    }

    #[test]
    fn quiver_product_sizes(a in arb_quiver(3, 3), b in arb_quiver(3, 3)) {
        let p = presheaf::product(&[a.clone(), b.clone()]);
        prop_assert_eq!(p.apex.sizes(), vec![a.vertices().len() * b.vertices().len(), a.edges().len() * b.edges().len()]);
    }

    #[test]
    fn quiver_currying_counts(q in arb_quiver(2, 2), k in arb_quiver(2, 2), r in arb_quiver(2, 2)) {
        let b = Bounds::default();
        let exp = quiver::exponential(&q, &r, &b).unwrap();
        let prod = presheaf::product(&[q.clone(), k.clone()]).apex;
        prop_assert_eq!(presheaf::hom_count(&prod, &r), presheaf::hom_count(&k, &exp.obj));
        for psi in presheaf::homs(&prod, &r, &b).unwrap() {
            prop_assert_eq!(exp.uncurry(&exp.curry(&k, &psi).unwrap()).unwrap(), psi);
        }
    }

    #[test]
    fn incidence_exponential_incidences_are_homs(g in arb_incidence(2, 2), h in arb_incidence(2, 2)) {
        let exp = incidence::exponential(&g, &h, &Bounds::default()).unwrap();
        prop_assert_eq!(exp.obj.incidences().len(), incidence_hom_oracle(&g, &h));
    }

    #[test]
    fn hyper_product_is_deterministic(a in arb_hyper(2, 2), b in arb_hyper(2, 2)) {
        let bd = Bounds::default();
        let p1 = set_system::product(&[a.clone(), b.clone()], &bd).unwrap();
        let p2 = set_system::product(&[a, b], &bd).unwrap();
        prop_assert_eq!(p1.apex, p2.apex);
    }
}
