//! Every object up to isomorphism below a size limit, in a stable order.
//!
//! Objects are enumerated as multisets of edge (or incidence) shapes and
//! reduced to a canonical form by minimizing over all relabelings of the
//! vertices (and edges, for incidence hypergraphs).

use std::collections::BTreeSet;

use itertools::Itertools;

use crate::finset::FiniteSet;
use crate::incidence::{self, IncidenceHypergraph};
use crate::presheaf::{self, Presheaf};
use crate::quiver::{self, Quiver};
use crate::set_system::{self, SetSystemHypergraph};

/// Size limits for an enumerated corpus.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Tier {
    pub vertices: usize,
    pub edges: usize,
    /// Only used for incidence hypergraphs.
    pub incidences: usize,
}

impl Tier {
    /// The corpus used for checks that quantify over single objects.
    pub const FULL: Tier = Tier {
        vertices: 3,
        edges: 3,
        incidences: 4,
    };
    /// The corpus used for checks that quantify over pairs or triples.
    pub const SMALL: Tier = Tier {
        vertices: 2,
        edges: 2,
        incidences: 2,
    };
}

fn perms(n: usize) -> Vec<Vec<usize>> {
    (0..n).permutations(n).collect()
}

/// Canonical sorted list of `(src, tgt)` pairs.
fn canonical_pairs(pairs: &[(usize, usize)], ps: &[Vec<usize>]) -> Vec<(usize, usize)> {
    ps.iter()
        .map(|p| {
            let mut v: Vec<(usize, usize)> = pairs.iter().map(|&(a, b)| (p[a], p[b])).collect();
            v.sort_unstable();
            v
        })
        .min()
        .unwrap_or_default()
}

fn permute_mask(mask: u64, p: &[usize]) -> u64 {
    (0..p.len()).filter(|&b| mask >> b & 1 == 1).map(|b| 1u64 << p[b]).sum()
}

fn canonical_masks(masks: &[u64], ps: &[Vec<usize>]) -> Vec<u64> {
    ps.iter()
        .map(|p| {
            let mut v: Vec<u64> = masks.iter().map(|&m| permute_mask(m, p)).collect();
            v.sort_unstable();
            v
        })
        .min()
        .unwrap_or_default()
}

/// All quivers up to isomorphism with at most `tier.vertices` vertices and
/// `tier.edges` edges.
pub fn quivers(tier: Tier) -> Vec<Quiver> {
    let mut out = Vec::new();
    for n in 0..=tier.vertices {
        let ps = perms(n);
        let shapes: Vec<(usize, usize)> = (0..n).cartesian_product(0..n).collect();
        for m in 0..=tier.edges {
            if n == 0 && m > 0 {
                continue;
            }
            let mut seen = BTreeSet::new();
            for combo in shapes.iter().copied().combinations_with_replacement(m) {
                seen.insert(canonical_pairs(&combo, &ps));
            }
            for pairs in seen {
                let src = pairs.iter().map(|p| p.0).collect();
                let tgt = pairs.iter().map(|p| p.1).collect();
                out.push(Presheaf::from_tables(vec![FiniteSet::range(n), FiniteSet::range(m)], vec![src, tgt]));
            }
        }
    }
    out
}

fn hyper_family(tier: Tier, admissible: impl Fn(u64) -> bool) -> Vec<SetSystemHypergraph> {
    let mut out = Vec::new();
    for n in 0..=tier.vertices {
        let ps = perms(n);
        let shapes: Vec<u64> = (0..1u64 << n).filter(|&m| admissible(m)).collect();
        for m in 0..=tier.edges {
            let mut seen = BTreeSet::new();
            for combo in shapes.iter().copied().combinations_with_replacement(m) {
                seen.insert(canonical_masks(&combo, &ps));
            }
            for masks in seen {
                let ends = masks
                    .iter()
                    .map(|&mk| (0..n).filter(|&b| mk >> b & 1 == 1).collect())
                    .collect();
                out.push(
                    SetSystemHypergraph::from_endpoints(FiniteSet::range(n), FiniteSet::range(m), ends)
                        .expect("endpoints are vertices"),
                );
            }
        }
    }
    out
}

/// All set-system hypergraphs up to isomorphism within the tier.
pub fn hypergraphs(tier: Tier) -> Vec<SetSystemHypergraph> {
    hyper_family(tier, |_| true)
}

/// All multigraphs up to isomorphism within the tier.
pub fn multigraphs(tier: Tier) -> Vec<SetSystemHypergraph> {
    hyper_family(tier, |m| (1..=2).contains(&m.count_ones()))
}

/// All incidence hypergraphs up to isomorphism within the tier.
pub fn incidence_hypergraphs(tier: Tier) -> Vec<IncidenceHypergraph> {
    let mut out = Vec::new();
    for n in 0..=tier.vertices {
        let pv = perms(n);
        for m in 0..=tier.edges {
            let pe = perms(m);
            let shapes: Vec<(usize, usize)> = (0..n).cartesian_product(0..m).collect();
            let kmax = if shapes.is_empty() { 0 } else { tier.incidences };
            for k in 0..=kmax {
                let mut seen = BTreeSet::new();
                for combo in shapes.iter().copied().combinations_with_replacement(k) {
                    let canon = pv
                        .iter()
                        .cartesian_product(&pe)
                        .map(|(p, q)| {
                            let mut v: Vec<(usize, usize)> = combo.iter().map(|&(a, b)| (p[a], q[b])).collect();
                            v.sort_unstable();
                            v
                        })
                        .min()
                        .unwrap_or_default();
                    seen.insert(canon);
                }
                for pairs in seen {
                    let port = pairs.iter().map(|p| p.0).collect();
                    let att = pairs.iter().map(|p| p.1).collect();
                    out.push(Presheaf::from_tables(
                        vec![FiniteSet::range(n), FiniteSet::range(m), FiniteSet::range(k)],
                        vec![port, att],
                    ));
                }
            }
        }
    }
    out
}

fn labels() -> Vec<FiniteSet> {
    vec![FiniteSet::empty(), FiniteSet::labels(&["a"]), FiniteSet::labels(&["a", "b"])]
}

/// Outputs of the named quiver constructions on small sets.
pub fn named_quivers() -> Vec<Quiver> {
    let mut out = Vec::new();
    for x in labels() {
        for k in quiver::StandardQuiver::ALL {
            out.push(k.build(&x));
        }
    }
    out.push(presheaf::product(&[quiver::path1(), quiver::path1()]).apex);
    dedup_by_iso(out, |a, b| presheaf::find_iso(a, b).is_some())
}

/// Outputs of the named hypergraph constructions on small sets.
pub fn named_hypergraphs() -> Vec<SetSystemHypergraph> {
    let b = crate::bounds::Bounds::default();
    let mut out = Vec::new();
    for x in labels() {
        for k in set_system::StandardHypergraph::ALL {
            out.push(k.build(&x, &b).expect("small sets"));
        }
    }
    out.push(set_system::product(&[set_system::p1(), set_system::p1()], &b).expect("small").apex);
    dedup_by_iso(out, |a, b| set_system::find_iso(a, b).is_some())
}

/// Outputs of the named incidence constructions on small sets.
pub fn named_incidence_hypergraphs() -> Vec<IncidenceHypergraph> {
    let mut out = Vec::new();
    for x in labels() {
        for k in incidence::StandardIncidence::ALL {
            out.push(k.build(&x));
        }
    }
    out.push(incidence::upsilon(&quiver::path1()));
    dedup_by_iso(out, |a, b| presheaf::find_iso(a, b).is_some())
}

/// Keeps the first representative of each isomorphism class.
pub fn dedup_by_iso<T: Clone>(xs: Vec<T>, iso: impl Fn(&T, &T) -> bool) -> Vec<T> {
    let mut out: Vec<T> = Vec::new();
    for x in xs {
        if !out.iter().any(|y| iso(y, &x)) {
            out.push(x);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finset::{self};
    use crate::presheaf::find_iso;

    fn pairwise_distinct<T>(xs: &[T], iso: impl Fn(&T, &T) -> bool) -> bool {
        (0..xs.len()).all(|i| (i + 1..xs.len()).all(|j| !iso(&xs[i], &xs[j])))
    }

    /// Every labelled quiver is isomorphic to exactly one corpus member.
    #[test]
    fn quiver_corpus_covers_every_labelled_quiver() {
        let tier = Tier::SMALL;
        let corpus = quivers(tier);
        assert!(pairwise_distinct(&corpus, |a, b| find_iso(a, b).is_some()));
        let b = crate::bounds::Bounds::default();
        for n in 0..=tier.vertices {
            for m in 0..=tier.edges {
                let (v, e) = (FiniteSet::range(n), FiniteSet::range(m));
                for src in finset::function_tables(&e, &v, &b).unwrap() {
                    for tgt in finset::function_tables(&e, &v, &b).unwrap() {
                        let q: Quiver = Presheaf::from_tables(vec![v.clone(), e.clone()], vec![src.clone(), tgt]);
                        let hits = corpus.iter().filter(|c| find_iso(*c, &q).is_some()).count();
                        assert_eq!(hits, 1);
                    }
                }
            }
        }
    }

    #[test]
    fn corpus_sizes() {
        // one object with no vertices, then loops and arrows on one and two vertices
        assert_eq!(quivers(Tier { vertices: 1, edges: 2, incidences: 0 }).len(), 4);
        // empty; one vertex with or without a loop; two vertices with nothing, a loop or an arrow
        let q = quivers(Tier { vertices: 2, edges: 1, incidences: 0 });
        assert_eq!(q.len(), 1 + 2 + 3);
        let h = hypergraphs(Tier { vertices: 1, edges: 1, incidences: 0 });
        // (0,0) (0,1: empty edge) (1,0) (1,1: empty edge or 1-edge)
        assert_eq!(h.len(), 5);
        let m = multigraphs(Tier { vertices: 2, edges: 1, incidences: 0 });
        // no vertices; one vertex with or without a loop; two vertices with nothing, a loop, or a 2-edge
        assert_eq!(m.len(), 6);
        let r = incidence_hypergraphs(Tier { vertices: 1, edges: 1, incidences: 2 });
        // (0,0) (0,1) (1,0) and (1,1) with 0,1,2 incidences
        assert_eq!(r.len(), 6);
    }

    #[test]
    fn hypergraph_corpus_is_iso_free() {
        let h = hypergraphs(Tier::SMALL);
        assert!(pairwise_distinct(&h, |a, b| set_system::find_iso(a, b).is_some()));
        let r = incidence_hypergraphs(Tier::SMALL);
        assert!(pairwise_distinct(&r, |a, b| find_iso(a, b).is_some()));
    }

    #[test]
    fn deterministic() {
        assert_eq!(quivers(Tier::FULL), quivers(Tier::FULL));
        assert_eq!(hypergraphs(Tier::SMALL), hypergraphs(Tier::SMALL));
    }
}
