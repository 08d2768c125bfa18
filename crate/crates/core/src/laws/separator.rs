//! Search for a family member that tells two parallel morphisms apart.

use super::category::Category;
use crate::bounds::Bounds;
use crate::error::Result;
use crate::finset::FiniteSet;
use crate::incidence::{self, IncidenceHypergraph};
use crate::quiver::{self, Quiver};

/// The first `(X, τ)` in family order, then hom order, with
/// `φ∘τ ≠ ψ∘τ`. `None` when the family does not separate the pair, in
/// particular when `φ = ψ`.
pub fn find_separator<C: Category>(
    family: &[C::Obj],
    phi: &C::Mor,
    psi: &C::Mor,
    bounds: &Bounds,
) -> Result<Option<(C::Obj, C::Mor)>> {
    for x in family {
        for tau in C::homs(x, C::dom(phi), bounds)? {
            if C::compose(phi, &tau)? != C::compose(psi, &tau)? {
                return Ok(Some((x.clone(), tau)));
            }
        }
    }
    Ok(None)
}

/// A single vertex and the directed 1-path.
pub fn quiver_generators() -> Vec<Quiver> {
    vec![quiver::vertex_diamond(&FiniteSet::one()), quiver::path1()]
}

/// A single vertex, a single edge, and one incidence joining a vertex to an
/// edge.
pub fn incidence_generators() -> Vec<IncidenceHypergraph> {
    let one = FiniteSet::one();
    vec![incidence::v_diamond(&one), incidence::e_diamond(&one), incidence::i_diamond(&one)]
}

/// Number of distinct parallel pairs among corpus morphisms, and the first
/// pair the family fails to separate.
pub fn separates_all<C: Category>(
    family: &[C::Obj],
    objs: &[C::Obj],
    bounds: &Bounds,
) -> Result<(usize, Option<(C::Mor, C::Mor)>)> {
    let mut pairs = 0;
    for a in objs {
        for b in objs {
            let hs = C::homs(a, b, bounds)?;
            for (i, phi) in hs.iter().enumerate() {
                for psi in &hs[i + 1..] {
                    pairs += 1;
                    if find_separator::<C>(family, phi, psi, bounds)?.is_none() {
                        return Ok((pairs, Some((phi.clone(), psi.clone()))));
                    }
                }
            }
        }
    }
    Ok((pairs, None))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laws::category::{Incidences, Quivers};
    use crate::laws::corpus::{incidence_hypergraphs, quivers, Tier};
    use crate::presheaf::{self, PresheafMorphism};

    #[test]
    fn vertex_difference_is_seen_by_a_vertex() {
        let b = Bounds::default();
        let two = quiver::vertex_diamond(&FiniteSet::labels(&["a", "b"]));
        let hs = presheaf::homs(&quiver::vertex_diamond(&FiniteSet::one()), &two, &b).unwrap();
        let (x, _) = find_separator::<Quivers>(&quiver_generators(), &hs[0], &hs[1], &b).unwrap().unwrap();
        assert_eq!(x, quiver_generators()[0]);
    }

    #[test]
    fn incidence_difference_is_seen_by_an_incidence() {
        let b = Bounds::default();
        let one = FiniteSet::one();
        let target = incidence::i_star(&FiniteSet::range(2));
        let hs = presheaf::homs(&incidence::i_diamond(&one), &target, &b).unwrap();
        assert_eq!(hs.len(), 2);
        let (x, _) = find_separator::<Incidences>(&incidence_generators(), &hs[0], &hs[1], &b).unwrap().unwrap();
        assert_eq!(x, incidence::i_diamond(&one));
    }

    #[test]
    fn equal_pair_has_none() {
        let b = Bounds::default();
        let id = PresheafMorphism::identity(&quiver::path1());
        assert!(find_separator::<Quivers>(&quiver_generators(), &id, &id, &b).unwrap().is_none());
    }

    #[test]
    fn vertices_alone_miss_parallel_loops() {
        let b = Bounds::default();
        let loops = quiver::edge_star(&FiniteSet::range(2));
        let hs = presheaf::homs(&quiver::terminal(), &loops, &b).unwrap();
        assert_eq!(hs.len(), 2);
        let family = &quiver_generators()[..1];
        assert!(find_separator::<Quivers>(family, &hs[0], &hs[1], &b).unwrap().is_none());
    }

    #[test]
    fn generators_separate_small_corpora() {
        let b = Bounds::default();
        let (n, miss) = separates_all::<Quivers>(&quiver_generators(), &quivers(Tier::SMALL), &b).unwrap();
        assert!(n > 0 && miss.is_none());
        let (n, miss) = separates_all::<Incidences>(&incidence_generators(), &incidence_hypergraphs(Tier::SMALL), &b).unwrap();
        assert!(n > 0 && miss.is_none());
    }
}
