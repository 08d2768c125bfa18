//! Finite criteria for special morphisms and objects.

use serde::Serialize;

use super::{HyperMorphism, SetSystemHypergraph};
use crate::bounds::Bounds;
use crate::error::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MorphismFlags {
    pub mono: bool,
    pub epi: bool,
    pub essential_mono: bool,
    pub coessential_epi: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ObjectFlags {
    pub injective: bool,
    pub projective: bool,
    pub multigraph: bool,
}

/// Vertices adjacent to `v`: those sharing some edge with it, `v` included
/// when it lies on any edge.
pub fn neighborhood(g: &SetSystemHypergraph, v: usize) -> Vec<usize> {
    let mut out: Vec<usize> = g
        .all_ends()
        .iter()
        .filter(|s| s.contains(&v))
        .flat_map(|s| s.iter().copied())
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// Vertices lying on no edge.
pub fn isolated_vertices(g: &SetSystemHypergraph) -> Vec<usize> {
    let mut hit = vec![false; g.vertices().len()];
    for s in g.all_ends() {
        for &v in s {
            hit[v] = true;
        }
    }
    (0..hit.len()).filter(|&v| !hit[v]).collect()
}

/// Edges over `s`, as a sorted index list.
fn preimage(g: &SetSystemHypergraph, s: &[usize]) -> Vec<usize> {
    g.edges_over(s)
}

fn is_essential_mono(phi: &HyperMorphism) -> bool {
    let (g, h) = (phi.dom(), phi.cod());
    if !g.vertices().is_empty() && !phi.fv().is_bijective() {
        return false;
    }
    if g.vertices().is_empty() && h.vertices().len() > 1 {
        return false;
    }
    for s in g.edge_sets() {
        let mut img: Vec<usize> = preimage(g, &s).iter().map(|&e| phi.fe().at(e)).collect();
        img.sort_unstable();
        img.dedup();
        if img != preimage(h, &phi.fv().image_indices(&s)) {
            return false;
        }
    }
    let hit: Vec<&[usize]> = (0..g.edges().len()).map(|e| h.ends(phi.fe().at(e))).collect();
    h.edge_sets()
        .iter()
        .filter(|u| !hit.contains(&u.as_slice()))
        .all(|u| preimage(h, u).len() <= 1)
}

fn is_coessential_epi(phi: &HyperMorphism) -> bool {
    if !phi.fe().is_bijective() {
        return false;
    }
    let iso_g = isolated_vertices(phi.dom());
    let iso_h = isolated_vertices(phi.cod());
    if iso_g.iter().any(|&v| iso_h.binary_search(&phi.fv().at(v)).is_err()) {
        return false;
    }
    iso_h
        .iter()
        .all(|&w| iso_g.iter().filter(|&&v| phi.fv().at(v) == w).count() == 1)
}

/// Mono and epi are componentwise injectivity and surjectivity; the
/// essential and coessential flags use their finite characterizations and
/// are only set for monos and epis respectively.
pub fn classify_morphism(phi: &HyperMorphism) -> MorphismFlags {
    let mono = phi.is_mono();
    let epi = phi.is_epi();
    MorphismFlags {
        mono,
        epi,
        essential_mono: mono && is_essential_mono(phi),
        coessential_epi: epi && is_coessential_epi(phi),
    }
}

/// Injective: nonempty and every vertex subset is some edge's endpoint set.
pub fn is_injective_object(g: &SetSystemHypergraph, bounds: &Bounds) -> Result<bool> {
    let n = g.vertices().len();
    bounds.check_powerset("injectivity check", n)?;
    Ok(n > 0 && g.edge_sets().len() == 1usize << n)
}

/// Projective: every edge is empty.
pub fn is_projective_object(g: &SetSystemHypergraph) -> bool {
    g.all_ends().iter().all(|s| s.is_empty())
}

pub fn classify_object(g: &SetSystemHypergraph, bounds: &Bounds) -> Result<ObjectFlags> {
    Ok(ObjectFlags {
        injective: is_injective_object(g, bounds)?,
        projective: is_projective_object(g),
        multigraph: g.is_multigraph(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finset::FiniteSet;
    use crate::set_system::{e_k, homs, p1, terminal, vertex_diamond, vertex_star};

    #[test]
    fn object_flags() {
        let b = Bounds::default();
        let f = |g: &SetSystemHypergraph| classify_object(g, &b).unwrap();
        assert!(f(&vertex_diamond(&FiniteSet::range(2))).projective);
        assert!(f(&e_k(0)).projective);
        assert!(!f(&e_k(1)).projective);
        assert!(f(&vertex_star(&FiniteSet::labels(&["a", "b"]), &b).unwrap()).injective);
        assert!(!f(&p1()).injective);
        assert!(!f(&SetSystemHypergraph::empty()).injective);
        assert!(f(&p1()).multigraph && !f(&terminal()).multigraph);
    }

    #[test]
    fn neighborhoods() {
        let g = SetSystemHypergraph::from_lists(&["a", "b", "c"], &[("e", &["a", "b"])]).unwrap();
        assert_eq!(neighborhood(&g, 0), vec![0, 1]);
        assert_eq!(neighborhood(&g, 2), Vec::<usize>::new());
        assert_eq!(isolated_vertices(&g), vec![2]);
    }

    #[test]
    fn collapse_is_epi_not_mono() {
        let b = Bounds::default();
        let m = &homs(&e_k(4), &e_k(1), &b).unwrap()[0];
        let f = classify_morphism(m);
        assert!(f.epi && !f.mono && f.coessential_epi);
    }

    #[test]
    fn identities_are_essential_and_coessential() {
        for g in [p1(), terminal(), e_k(0), SetSystemHypergraph::empty()] {
            let f = classify_morphism(&HyperMorphism::identity(&g));
            assert!(f.mono && f.epi && f.essential_mono && f.coessential_epi);
        }
    }

    #[test]
    fn essential_needs_unhit_sets_to_be_single() {
        let b = Bounds::default();
        let d = vertex_diamond(&FiniteSet::range(1));
        for m in homs(&d, &e_k(1), &b).unwrap() {
            assert!(classify_morphism(&m).essential_mono);
        }
        let two = SetSystemHypergraph::from_lists(&["0"], &[("e", &["0"]), ("f", &["0"])]).unwrap();
        for m in homs(&d, &two, &b).unwrap() {
            let f = classify_morphism(&m);
            assert!(f.mono && !f.essential_mono);
        }
    }
}
