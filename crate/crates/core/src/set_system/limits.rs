//! Limits and colimits of set-system hypergraphs with their mediating maps.

use std::collections::HashMap;

use itertools::Itertools;

use super::{terminal, HyperMorphism, SetSystemHypergraph};
use crate::bounds::Bounds;
use crate::error::{Error, Result};
use crate::finset::{self, Atom, FiniteFunction, FiniteSet};

/// An apex with its legs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HyperCone {
    pub apex: SetSystemHypergraph,
    pub legs: Vec<HyperMorphism>,
}

fn check_parallel(f: &HyperMorphism, g: &HyperMorphism) -> Result<()> {
    if f.dom() != g.dom() || f.cod() != g.cod() {
        return Err(Error::NotParallel(format!(
            "{} -> {} versus {} -> {}",
            f.dom().summary(),
            f.cod().summary(),
            g.dom().summary(),
            g.cod().summary()
        )));
    }
    Ok(())
}

/// Edge atom `(A, e⃗)` of a product.
fn product_edge_atom(v: &FiniteSet, a: &[usize], es: Vec<Atom>) -> Atom {
    Atom::pair(v.subset_atom(a.iter().copied()), Atom::tuple(es))
}

/// Vertices are tuples; edges are pairs `(A, e⃗)` where `A` projects onto
/// each component endpoint set. Only subsets of the grid `Π ε(e_λ)` can
/// qualify, so the powerset bound applies to the grid size.
pub fn product(objs: &[SetSystemHypergraph], bounds: &Bounds) -> Result<HyperCone> {
    let (v, vp) = finset::product_set(&objs.iter().map(|g| g.vertices().clone()).collect::<Vec<_>>());
    let (z, ep) = finset::product_set(&objs.iter().map(|g| g.edges().clone()).collect::<Vec<_>>());
    let vindex: HashMap<Vec<usize>, usize> = (0..v.len())
        .map(|x| (vp.iter().map(|p| p.at(x)).collect(), x))
        .collect();
    let mut found: Vec<(Atom, Vec<usize>, Vec<usize>)> = Vec::new();
    for t in 0..z.len() {
        let comps: Vec<usize> = ep.iter().map(|p| p.at(t)).collect();
        let factors: Vec<&[usize]> = objs.iter().zip(&comps).map(|(g, &e)| g.ends(e)).collect();
        let mut grid: Vec<usize> = grid_tuples(&factors).into_iter().map(|k| vindex[&k]).collect();
        grid.sort_unstable();
        bounds.check_powerset("product edge grid", grid.len())?;
        for mask in finset::subset_masks(grid.len()) {
            let a: Vec<usize> = finset::mask_indices(mask).map(|i| grid[i]).collect();
            let covers = objs.iter().enumerate().all(|(l, _)| {
                let mut img: Vec<usize> = a.iter().map(|&x| vp[l].at(x)).collect();
                img.sort_unstable();
                img.dedup();
                img == factors[l]
            });
            if covers {
                let es = objs.iter().zip(&comps).map(|(g, &e)| g.edges().get(e).clone()).collect();
                found.push((product_edge_atom(&v, &a, es), a, comps.clone()));
            }
        }
    }
    let e = FiniteSet::new(found.iter().map(|f| f.0.clone()))?;
    let mut ends = vec![Vec::new(); e.len()];
    let mut legs_e = vec![vec![0; e.len()]; objs.len()];
    for (atom, a, comps) in found {
        let x = e.index_of(&atom).expect("edge");
        ends[x] = a;
        for (l, &c) in comps.iter().enumerate() {
            legs_e[l][x] = c;
        }
    }
    let apex = SetSystemHypergraph::raw(v, e, ends);
    let legs = objs
        .iter()
        .zip(vp)
        .zip(legs_e)
        .map(|((g, p), t)| {
            HyperMorphism::raw(apex.clone(), g.clone(), p, FiniteFunction::raw(apex.edges().clone(), g.edges().clone(), t))
        })
        .collect();
    Ok(HyperCone { apex, legs })
}

/// All index tuples drawn from `factors`; one empty tuple when there are none.
fn grid_tuples(factors: &[&[usize]]) -> Vec<Vec<usize>> {
    if factors.is_empty() {
        return vec![Vec::new()];
    }
    factors.iter().map(|s| s.iter().copied()).multi_cartesian_product().collect()
}

/// The unique map into the product whose composite with each projection is
/// the given leg.
pub fn product_mediator(prod: &HyperCone, legs: &[HyperMorphism]) -> Result<HyperMorphism> {
    if legs.len() != prod.legs.len() {
        return Err(Error::Mismatch(format!(
            "product has {} factors, cone has {} legs",
            prod.legs.len(),
            legs.len()
        )));
    }
    let Some(k) = legs.first().map(|l| l.dom().clone()) else {
        return Ok(to_empty_product(prod, None));
    };
    for (l, (leg, pi)) in legs.iter().zip(&prod.legs).enumerate() {
        if leg.dom() != &k || leg.cod() != pi.cod() {
            return Err(Error::Mismatch(format!("leg {l} does not match the product factor")));
        }
    }
    let v = prod.apex.vertices();
    let fv = FiniteFunction::from_fn(k.vertices().clone(), v.clone(), |a| {
        Atom::tuple(legs.iter().map(|l| l.fv().apply(a).expect("vertex").clone()).collect())
    })?;
    let mut fe = Vec::with_capacity(k.edges().len());
    for x in 0..k.edges().len() {
        let a = fv.image_indices(k.ends(x));
        let es = legs.iter().map(|l| l.fe().cod().get(l.fe().at(x)).clone()).collect();
        let atom = product_edge_atom(v, &a, es);
        fe.push(prod.apex.edges().require(&atom, "the product edges")?);
    }
    Ok(HyperMorphism::raw(
        k.clone(),
        prod.apex.clone(),
        fv,
        FiniteFunction::raw(k.edges().clone(), prod.apex.edges().clone(), fe),
    ))
}

/// Mediator into a product with no factors, from `k` (or the apex itself).
fn to_empty_product(prod: &HyperCone, k: Option<&SetSystemHypergraph>) -> HyperMorphism {
    let k = k.unwrap_or(&prod.apex);
    let p = &prod.apex;
    let fe = (0..k.edges().len())
        .map(|x| {
            let a: Vec<usize> = if k.ends(x).is_empty() { vec![] } else { vec![0] };
            (0..p.edges().len()).find(|&y| p.ends(y) == a.as_slice()).expect("edge")
        })
        .collect();
    HyperMorphism::from_tables(k, p, vec![0; k.vertices().len()], fe)
}

/// The map `Π f_λ` between two products.
pub fn product_morphism(dom: &HyperCone, cod: &HyperCone, fs: &[HyperMorphism]) -> Result<HyperMorphism> {
    if fs.len() != dom.legs.len() || fs.len() != cod.legs.len() {
        return Err(Error::Mismatch("factor count differs".into()));
    }
    if fs.is_empty() {
        return Ok(to_empty_product(cod, Some(&dom.apex)));
    }
    let legs = fs
        .iter()
        .zip(&dom.legs)
        .map(|(f, p)| f.after(p))
        .collect::<Result<Vec<_>>>()?;
    product_mediator(cod, &legs)
}

/// The largest subobject on which `f` and `g` agree.
pub fn equalizer(f: &HyperMorphism, g: &HyperMorphism) -> Result<HyperCone> {
    check_parallel(f, g)?;
    let d = f.dom();
    let keep_v: Vec<usize> = (0..d.vertices().len()).filter(|&x| f.fv().at(x) == g.fv().at(x)).collect();
    let mut new_index = vec![usize::MAX; d.vertices().len()];
    for (i, &x) in keep_v.iter().enumerate() {
        new_index[x] = i;
    }
    let keep_e: Vec<usize> = (0..d.edges().len())
        .filter(|&x| f.fe().at(x) == g.fe().at(x) && d.ends(x).iter().all(|&w| new_index[w] != usize::MAX))
        .collect();
    let ends = keep_e
        .iter()
        .map(|&x| d.ends(x).iter().map(|&w| new_index[w]).collect())
        .collect();
    let (v, iv) = finset::sub_inclusion(d.vertices(), keep_v);
    let (e, ie) = finset::sub_inclusion(d.edges(), keep_e);
    let apex = SetSystemHypergraph::raw(v, e, ends);
    let leg = HyperMorphism::raw(apex.clone(), d.clone(), iv, ie);
    Ok(HyperCone { apex, legs: vec![leg] })
}

/// Factor `h` through the equalizer inclusion.
pub fn equalizer_mediator(eq: &HyperCone, h: &HyperMorphism) -> Result<HyperMorphism> {
    let inc = &eq.legs[0];
    if h.cod() != inc.cod() {
        return Err(Error::Mismatch("map does not land in the equalized object".into()));
    }
    let lift = |f: &FiniteFunction, g: &FiniteFunction, what: &str| -> Result<Vec<usize>> {
        let back: HashMap<usize, usize> = (0..f.dom().len()).map(|i| (f.at(i), i)).collect();
        g.table()
            .iter()
            .enumerate()
            .map(|(x, y)| {
                back.get(y).copied().ok_or_else(|| {
                    Error::Mismatch(format!("{what} {} does not land in the equalizer", g.dom().get(x)))
                })
            })
            .collect()
    };
    let fv = lift(inc.fv(), h.fv(), "vertex")?;
    let fe = lift(inc.fe(), h.fe(), "edge")?;
    Ok(HyperMorphism::from_tables(h.dom(), &eq.apex, fv, fe))
}

/// Pullback of `f: A → C` and `g: B → C` as an equalizer of the composites
/// out of `A × B`. Legs go to `A` and `B`.
pub fn pullback(f: &HyperMorphism, g: &HyperMorphism, bounds: &Bounds) -> Result<HyperCone> {
    if f.cod() != g.cod() {
        return Err(Error::NotParallel("pullback needs a common codomain".into()));
    }
    let prod = product(&[f.dom().clone(), g.dom().clone()], bounds)?;
    let eq = equalizer(&f.after(&prod.legs[0])?, &g.after(&prod.legs[1])?)?;
    let legs = vec![prod.legs[0].after(&eq.legs[0])?, prod.legs[1].after(&eq.legs[0])?];
    Ok(HyperCone { apex: eq.apex, legs })
}

/// Tagged disjoint union.
pub fn coproduct(objs: &[SetSystemHypergraph]) -> HyperCone {
    let (v, iv) = finset::coproduct_set(&objs.iter().map(|g| g.vertices().clone()).collect::<Vec<_>>());
    let (e, ie) = finset::coproduct_set(&objs.iter().map(|g| g.edges().clone()).collect::<Vec<_>>());
    let mut ends = vec![Vec::new(); e.len()];
    for (l, g) in objs.iter().enumerate() {
        for x in 0..g.edges().len() {
            let mut s = iv[l].image_indices(g.ends(x));
            s.sort_unstable();
            ends[ie[l].at(x)] = s;
        }
    }
    let apex = SetSystemHypergraph::raw(v, e, ends);
    let legs = objs
        .iter()
        .zip(iv.into_iter().zip(ie))
        .map(|(g, (fv, fe))| {
            HyperMorphism::raw(
                g.clone(),
                apex.clone(),
                FiniteFunction::raw(g.vertices().clone(), apex.vertices().clone(), fv.table().to_vec()),
                FiniteFunction::raw(g.edges().clone(), apex.edges().clone(), fe.table().to_vec()),
            )
        })
        .collect();
    HyperCone { apex, legs }
}

/// The copairing of `legs` out of the coproduct into `target`.
pub fn coproduct_mediator(
    cop: &HyperCone,
    legs: &[HyperMorphism],
    target: &SetSystemHypergraph,
) -> Result<HyperMorphism> {
    if legs.len() != cop.legs.len() {
        return Err(Error::Mismatch("leg count differs from the coproduct".into()));
    }
    let mut fv = vec![0; cop.apex.vertices().len()];
    let mut fe = vec![0; cop.apex.edges().len()];
    for (l, (leg, inj)) in legs.iter().zip(&cop.legs).enumerate() {
        if leg.dom() != inj.dom() || leg.cod() != target {
            return Err(Error::Mismatch(format!("leg {l} does not match the coproduct summand")));
        }
        for x in 0..leg.fv().dom().len() {
            fv[inj.fv().at(x)] = leg.fv().at(x);
        }
        for x in 0..leg.fe().dom().len() {
            fe[inj.fe().at(x)] = leg.fe().at(x);
        }
    }
    Ok(HyperMorphism::from_tables(&cop.apex, target, fv, fe))
}

/// Quotient of the codomain by the vertex and edge identifications; the
/// endpoint set of a class is the image of any member's endpoint set.
pub fn coequalizer(f: &HyperMorphism, g: &HyperMorphism) -> Result<HyperCone> {
    check_parallel(f, g)?;
    let c = f.cod();
    let (v, qv) = finset::coequalize_set(f.fv(), g.fv())?;
    let (e, qe) = finset::coequalize_set(f.fe(), g.fe())?;
    let mut ends: Vec<Option<Vec<usize>>> = vec![None; e.len()];
    for x in 0..c.edges().len() {
        let mut s = qv.image_indices(c.ends(x));
        s.sort_unstable();
        s.dedup();
        let slot = &mut ends[qe.at(x)];
        match slot {
            None => *slot = Some(s),
            Some(prev) if *prev == s => {}
            Some(_) => {
                return Err(Error::IllDefined(format!(
                    "edges of class {} have different endpoint images",
                    e.get(qe.at(x))
                )))
            }
        }
    }
    let apex = SetSystemHypergraph::raw(v, e, ends.into_iter().map(|s| s.expect("class has a member")).collect());
    let leg = HyperMorphism::raw(
        c.clone(),
        apex.clone(),
        FiniteFunction::raw(c.vertices().clone(), apex.vertices().clone(), qv.table().to_vec()),
        FiniteFunction::raw(c.edges().clone(), apex.edges().clone(), qe.table().to_vec()),
    );
    Ok(HyperCone { apex, legs: vec![leg] })
}

/// Factor `h` (with `h∘f = h∘g`) through the quotient.
pub fn coequalizer_mediator(coeq: &HyperCone, h: &HyperMorphism) -> Result<HyperMorphism> {
    let q = &coeq.legs[0];
    if h.dom() != q.dom() {
        return Err(Error::Mismatch("map does not start at the quotiented object".into()));
    }
    let descend = |qf: &FiniteFunction, hf: &FiniteFunction, what: &str| -> Result<Vec<usize>> {
        let mut out: Vec<Option<usize>> = vec![None; qf.cod().len()];
        for x in 0..qf.dom().len() {
            match out[qf.at(x)] {
                None => out[qf.at(x)] = Some(hf.at(x)),
                Some(y) if y == hf.at(x) => {}
                Some(_) => {
                    return Err(Error::Mismatch(format!(
                        "map is not constant on the {what} class of {}",
                        qf.dom().get(x)
                    )))
                }
            }
        }
        Ok(out.into_iter().map(|y| y.expect("quotient map is onto")).collect())
    };
    let fv = descend(q.fv(), h.fv(), "vertex")?;
    let fe = descend(q.fe(), h.fe(), "edge")?;
    Ok(HyperMorphism::from_tables(&coeq.apex, h.cod(), fv, fe))
}

pub fn initial() -> SetSystemHypergraph {
    SetSystemHypergraph::empty()
}

pub fn from_initial(x: &SetSystemHypergraph) -> HyperMorphism {
    HyperMorphism::from_tables(&initial(), x, vec![], vec![])
}

/// Every vertex goes to the single vertex; empty edges to the 0-edge, the
/// rest to the 1-edge.
pub fn to_terminal(x: &SetSystemHypergraph) -> HyperMorphism {
    let t = terminal();
    let one = FiniteSet::one();
    let zero_edge = t.edges().index_of(&finset::tag(0, one.get(0))).expect("0-edge");
    let one_edge = t.edges().index_of(&finset::tag(1, one.get(0))).expect("1-edge");
    let fe = (0..x.edges().len())
        .map(|e| if x.ends(e).is_empty() { zero_edge } else { one_edge })
        .collect();
    HyperMorphism::from_tables(x, &t, vec![0; x.vertices().len()], fe)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::set_system::{e_k, find_iso, hom_count, homs, p1, vertex_diamond};

    /// Every `(A, e₁, e₂)` with `A ⊆ V₁×V₂` whose projections match.
    fn brute_product_edges(g: &SetSystemHypergraph, h: &SetSystemHypergraph) -> usize {
        let pairs: Vec<(usize, usize)> = (0..g.vertices().len())
            .flat_map(|a| (0..h.vertices().len()).map(move |b| (a, b)))
            .collect();
        let mut count = 0;
        for mask in 0u64..(1 << pairs.len()) {
            let a: Vec<(usize, usize)> = (0..pairs.len()).filter(|i| mask >> i & 1 == 1).map(|i| pairs[i]).collect();
            let mut p1: Vec<usize> = a.iter().map(|p| p.0).collect();
            let mut p2: Vec<usize> = a.iter().map(|p| p.1).collect();
            p1.sort_unstable();
            p1.dedup();
            p2.sort_unstable();
            p2.dedup();
            for x in 0..g.edges().len() {
                for y in 0..h.edges().len() {
                    if g.ends(x) == p1.as_slice() && h.ends(y) == p2.as_slice() {
                        count += 1;
                    }
                }
            }
        }
        count
    }

    #[test]
    fn product_matches_brute_force() {
        let b = Bounds::default();
        let samples = [p1(), e_k(1), e_k(0), terminal(), vertex_diamond(&FiniteSet::range(2))];
        for g in &samples {
            for h in &samples {
                let p = product(&[g.clone(), h.clone()], &b).unwrap();
                assert_eq!(p.apex.edges().len(), brute_product_edges(g, h), "{g} x {h}");
            }
        }
        assert_eq!(product(&[p1(), p1()], &b).unwrap().apex.sizes(), vec![4, 7]);
    }

    #[test]
    fn empty_product_is_terminal() {
        let p = product(&[], &Bounds::default()).unwrap();
        assert!(find_iso(&p.apex, &terminal()).is_some());
        let m = product_mediator(&p, &[]).unwrap();
        assert!(m.is_iso());
    }

    #[test]
    fn product_mediators_are_unique() {
        let b = Bounds::default();
        let p = product(&[p1(), e_k(1)], &b).unwrap();
        for k in [p1(), terminal(), e_k(2)] {
            for l1 in homs(&k, &p1(), &b).unwrap() {
                for l2 in homs(&k, &e_k(1), &b).unwrap() {
                    let m = product_mediator(&p, &[l1.clone(), l2.clone()]).unwrap();
                    HyperMorphism::new(m.dom().clone(), m.cod().clone(), m.fv().clone(), m.fe().clone()).unwrap();
                    let all = homs(&k, &p.apex, &b).unwrap();
                    let good: Vec<_> = all
                        .iter()
                        .filter(|c| p.legs[0].after(c).unwrap() == l1 && p.legs[1].after(c).unwrap() == l2)
                        .collect();
                    assert_eq!(good, vec![&m]);
                }
            }
        }
    }

    #[test]
    fn product_with_terminal_is_unit() {
        let b = Bounds::default();
        for g in [p1(), e_k(3), vertex_diamond(&FiniteSet::range(2))] {
            let p = product(&[g.clone(), terminal()], &b).unwrap();
            assert!(find_iso(&p.apex, &g).is_some());
        }
    }

    #[test]
    fn coequalizer_merges_path_ends() {
        let d = vertex_diamond(&FiniteSet::range(1));
        let p = p1();
        let a = HyperMorphism::from_tables(&d, &p, vec![0], vec![]);
        let b = HyperMorphism::from_tables(&d, &p, vec![1], vec![]);
        let q = coequalizer(&a, &b).unwrap();
        assert_eq!(q.apex.sizes(), vec![1, 1]);
        assert_eq!(q.apex.ends(0), &[0]);
        assert!(matches!(coequalizer(&a, &HyperMorphism::identity(&p)), Err(Error::NotParallel(_))));
    }

    #[test]
    fn coproduct_of_edges_is_terminal() {
        let c = coproduct(&[e_k(1), e_k(0)]);
        assert!(find_iso(&c.apex, &terminal()).is_some());
    }

    #[test]
    fn equalizer_and_pullback() {
        let b = Bounds::default();
        let p = p1();
        let swap = HyperMorphism::from_tables(&p, &p, vec![1, 0], vec![0]);
        let eq = equalizer(&HyperMorphism::identity(&p), &swap).unwrap();
        assert_eq!(eq.apex.sizes(), vec![0, 0]);
        let t = to_terminal(&p);
        let pb = pullback(&t, &t, &b).unwrap();
        let prod = product(&[p.clone(), p.clone()], &b).unwrap();
        assert!(find_iso(&pb.apex, &prod.apex).is_some());
        for h in homs(&p, &p, &b).unwrap() {
            assert!(equalizer_mediator(&eq, &h).is_err());
        }
    }

    #[test]
    fn terminal_maps_unique() {
        for g in [p1(), e_k(0), vertex_diamond(&FiniteSet::range(2))] {
            assert_eq!(hom_count(&g, &terminal()), 1);
            let t = to_terminal(&g);
            HyperMorphism::new(t.dom().clone(), t.cod().clone(), t.fv().clone(), t.fe().clone()).unwrap();
        }
    }
}
