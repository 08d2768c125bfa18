//! Pointwise limits and colimits of presheaves, with their mediating maps.

use std::collections::HashMap;

use super::{Presheaf, PresheafMorphism, Shape};
use crate::error::{Error, Result};
use crate::finset::{self, Atom, FiniteFunction, FiniteSet};

/// A limit or colimit: the apex object with its legs (projections,
/// injections, inclusion or quotient map).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cone<S: Shape> {
    pub apex: Presheaf<S>,
    pub legs: Vec<PresheafMorphism<S>>,
}

/// Maps tuples of factor indices to the index of the product element.
fn tuple_lookup(projections: &[FiniteFunction]) -> HashMap<Vec<usize>, usize> {
    let n = projections.first().map_or(1, |p| p.dom().len());
    (0..n)
        .map(|x| (projections.iter().map(|p| p.at(x)).collect(), x))
        .collect()
}

/// Product of a list of objects; the empty list gives a one-point object.
pub fn product<S: Shape>(objs: &[Presheaf<S>]) -> Cone<S> {
    let top = S::top();
    let per_sort: Vec<(FiniteSet, Vec<FiniteFunction>)> = (0..S::SORTS.len())
        .map(|s| finset::product_set(&objs.iter().map(|o| o.set(s).clone()).collect::<Vec<_>>()))
        .collect();
    let (top_set, top_proj) = &per_sort[top];
    let tables = S::ARROWS
        .iter()
        .enumerate()
        .map(|(a, &(_, b))| {
            let lookup = tuple_lookup(&per_sort[b].1);
            (0..top_set.len())
                .map(|x| {
                    let key: Vec<usize> = objs
                        .iter()
                        .zip(top_proj)
                        .map(|(o, p)| o.arrow(a).at(p.at(x)))
                        .collect();
                    lookup[&key]
                })
                .collect()
        })
        .collect();
    let sets = per_sort.iter().map(|(s, _)| s.clone()).collect();
    let apex = Presheaf::from_tables(sets, tables);
    let legs = objs
        .iter()
        .enumerate()
        .map(|(k, o)| {
            let comps = per_sort.iter().map(|(_, pr)| pr[k].clone()).collect();
            PresheafMorphism::raw(apex.clone(), o.clone(), comps)
        })
        .collect();
    Cone { apex, legs }
}

/// The unique map into a product with the given legs.
pub fn product_mediator<S: Shape>(prod: &Cone<S>, legs: &[PresheafMorphism<S>]) -> Result<PresheafMorphism<S>> {
    if legs.len() != prod.legs.len() {
        return Err(Error::Mismatch(format!(
            "product has {} factors, cone has {} legs",
            prod.legs.len(),
            legs.len()
        )));
    }
    let src = match legs.first() {
        Some(l) => l.dom().clone(),
        None => return Err(Error::Mismatch("empty cone has no source; use the terminal map".into())),
    };
    for (l, p) in legs.iter().zip(&prod.legs) {
        if l.dom() != &src || l.cod() != p.cod() {
            return Err(Error::Mismatch("cone legs do not match the product factors".into()));
        }
    }
    let tables = (0..S::SORTS.len())
        .map(|s| {
            let projections: Vec<FiniteFunction> = prod.legs.iter().map(|p| p.comp(s).clone()).collect();
            let lookup = tuple_lookup(&projections);
            (0..src.set(s).len())
                .map(|x| lookup[&legs.iter().map(|l| l.comp(s).at(x)).collect::<Vec<_>>()])
                .collect()
        })
        .collect();
    Ok(PresheafMorphism::from_tables(&src, &prod.apex, tables))
}

/// `f₁ × ... × fₙ` between constructed products.
pub fn product_morphism<S: Shape>(
    dom: &Cone<S>,
    cod: &Cone<S>,
    fs: &[PresheafMorphism<S>],
) -> Result<PresheafMorphism<S>> {
    let legs = fs
        .iter()
        .zip(&dom.legs)
        .map(|(f, p)| f.after(p))
        .collect::<Result<Vec<_>>>()?;
    product_mediator(cod, &legs)
}

fn check_parallel<S: Shape>(f: &PresheafMorphism<S>, g: &PresheafMorphism<S>) -> Result<()> {
    if f.dom() != g.dom() || f.cod() != g.cod() {
        return Err(Error::NotParallel(format!(
            "{} → {} versus {} → {}",
            f.dom().summary(),
            f.cod().summary(),
            g.dom().summary(),
            g.cod().summary()
        )));
    }
    Ok(())
}

/// Largest subobject of the domain on which `f` and `g` agree.
pub fn equalizer<S: Shape>(f: &PresheafMorphism<S>, g: &PresheafMorphism<S>) -> Result<Cone<S>> {
    check_parallel(f, g)?;
    let dom = f.dom();
    let top = S::top();
    let keeps: Vec<Vec<usize>> = (0..S::SORTS.len())
        .map(|s| {
            (0..dom.set(s).len())
                .filter(|&x| f.comp(s).at(x) == g.comp(s).at(x))
                .collect()
        })
        .collect();
    let tables = S::ARROWS
        .iter()
        .enumerate()
        .map(|(a, &(_, b))| {
            keeps[top]
                .iter()
                .map(|&x| {
                    keeps[b]
                        .binary_search(&dom.arrow(a).at(x))
                        .expect("agreement set is closed under the structure maps")
                })
                .collect()
        })
        .collect();
    let incl: Vec<(FiniteSet, FiniteFunction)> = keeps
        .into_iter()
        .enumerate()
        .map(|(s, k)| finset::sub_inclusion(dom.set(s), k))
        .collect();
    let apex = Presheaf::from_tables(incl.iter().map(|(s, _)| s.clone()).collect(), tables);
    let leg = PresheafMorphism::raw(apex.clone(), dom.clone(), incl.into_iter().map(|(_, i)| i).collect());
    Ok(Cone { apex, legs: vec![leg] })
}

/// Factors a map `h` with `f∘h = g∘h` through the equalizer.
pub fn equalizer_mediator<S: Shape>(eq: &Cone<S>, h: &PresheafMorphism<S>) -> Result<PresheafMorphism<S>> {
    let incl = &eq.legs[0];
    if h.cod() != incl.cod() {
        return Err(Error::Mismatch("map does not land in the equalized object".into()));
    }
    let tables = (0..S::SORTS.len())
        .map(|s| {
            let keep = incl.comp(s).table();
            (0..h.dom().set(s).len())
                .map(|x| {
                    keep.binary_search(&h.comp(s).at(x)).map_err(|_| {
                        Error::Mismatch(format!(
                            "{} {} lands outside the equalizer",
                            S::ELEMENT[s],
                            h.dom().set(s).get(x)
                        ))
                    })
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(PresheafMorphism::from_tables(h.dom(), &eq.apex, tables))
}

/// Pullback of `f: A → C` and `g: B → C`, as the equalizer of `f∘π₁` and `g∘π₂`.
pub fn pullback<S: Shape>(f: &PresheafMorphism<S>, g: &PresheafMorphism<S>) -> Result<Cone<S>> {
    if f.cod() != g.cod() {
        return Err(Error::NotParallel("pullback needs a common codomain".into()));
    }
    let prod = product(&[f.dom().clone(), g.dom().clone()]);
    let eq = equalizer(&f.after(&prod.legs[0])?, &g.after(&prod.legs[1])?)?;
    let legs = vec![prod.legs[0].after(&eq.legs[0])?, prod.legs[1].after(&eq.legs[0])?];
    Ok(Cone { apex: eq.apex, legs })
}

/// Tagged disjoint union; legs are the injections.
pub fn coproduct<S: Shape>(objs: &[Presheaf<S>]) -> Cone<S> {
    let top = S::top();
    let per_sort: Vec<(FiniteSet, Vec<FiniteFunction>)> = (0..S::SORTS.len())
        .map(|s| finset::coproduct_set(&objs.iter().map(|o| o.set(s).clone()).collect::<Vec<_>>()))
        .collect();
    let mut tables = vec![vec![0; per_sort[top].0.len()]; S::ARROWS.len()];
    for (k, o) in objs.iter().enumerate() {
        for x in 0..o.set(top).len() {
            let y = per_sort[top].1[k].at(x);
            for (a, &(_, b)) in S::ARROWS.iter().enumerate() {
                tables[a][y] = per_sort[b].1[k].at(o.arrow(a).at(x));
            }
        }
    }
    let apex = Presheaf::from_tables(per_sort.iter().map(|(s, _)| s.clone()).collect(), tables);
    let legs = objs
        .iter()
        .enumerate()
        .map(|(k, o)| {
            let comps = per_sort.iter().map(|(_, inj)| inj[k].clone()).collect();
            PresheafMorphism::raw(o.clone(), apex.clone(), comps)
        })
        .collect();
    Cone { apex, legs }
}

/// The unique map out of a coproduct with the given legs.
pub fn coproduct_mediator<S: Shape>(
    cop: &Cone<S>,
    legs: &[PresheafMorphism<S>],
    target: &Presheaf<S>,
) -> Result<PresheafMorphism<S>> {
    if legs.len() != cop.legs.len() {
        return Err(Error::Mismatch("cocone has the wrong number of legs".into()));
    }
    let mut tables: Vec<Vec<usize>> = cop.apex.sets().iter().map(|s| vec![0; s.len()]).collect();
    for (l, inj) in legs.iter().zip(&cop.legs) {
        if l.dom() != inj.dom() || l.cod() != target {
            return Err(Error::Mismatch("cocone legs do not match the summands".into()));
        }
        for (s, table) in tables.iter_mut().enumerate() {
            for x in 0..l.dom().set(s).len() {
                table[inj.comp(s).at(x)] = l.comp(s).at(x);
            }
        }
    }
    Ok(PresheafMorphism::from_tables(&cop.apex, target, tables))
}

/// Quotient of the codomain by the least congruence identifying `f` and `g`.
pub fn coequalizer<S: Shape>(f: &PresheafMorphism<S>, g: &PresheafMorphism<S>) -> Result<Cone<S>> {
    check_parallel(f, g)?;
    let cod = f.cod();
    let top = S::top();
    let quots = (0..S::SORTS.len())
        .map(|s| finset::coequalize_set(f.comp(s), g.comp(s)))
        .collect::<Result<Vec<_>>>()?;
    let classes = &quots[top].0;
    let tables = S::ARROWS
        .iter()
        .enumerate()
        .map(|(a, &(_, b))| {
            classes
                .iter()
                .map(|rep| {
                    let x = cod.set(top).index_of(rep).expect("class named by a member");
                    quots[b].1.at(cod.arrow(a).at(x))
                })
                .collect()
        })
        .collect();
    let apex = Presheaf::from_tables(quots.iter().map(|(s, _)| s.clone()).collect(), tables);
    let q = PresheafMorphism::raw(cod.clone(), apex.clone(), quots.into_iter().map(|(_, q)| q).collect());
    Ok(Cone { apex, legs: vec![q] })
}

/// Factors a map `h` with `h∘f = h∘g` through the coequalizer.
pub fn coequalizer_mediator<S: Shape>(coeq: &Cone<S>, h: &PresheafMorphism<S>) -> Result<PresheafMorphism<S>> {
    let q = &coeq.legs[0];
    if h.dom() != q.dom() {
        return Err(Error::Mismatch("map does not start at the quotiented object".into()));
    }
    for s in 0..S::SORTS.len() {
        for x in 0..h.dom().set(s).len() {
            let rep = coeq.apex.set(s).get(q.comp(s).at(x));
            let r = h.dom().set(s).index_of(rep).expect("class named by a member");
            if h.comp(s).at(x) != h.comp(s).at(r) {
                return Err(Error::Mismatch(format!(
                    "map separates {} {} from {rep}",
                    S::ELEMENT[s],
                    h.dom().set(s).get(x)
                )));
            }
        }
    }
    let tables = (0..S::SORTS.len())
        .map(|s| {
            coeq.apex
                .set(s)
                .iter()
                .map(|rep| h.comp(s).at(h.dom().set(s).index_of(rep).expect("member")))
                .collect()
        })
        .collect();
    Ok(PresheafMorphism::from_tables(&coeq.apex, h.cod(), tables))
}

/// The object with every sort a single point `1`.
pub fn terminal<S: Shape>() -> Presheaf<S> {
    Presheaf::from_tables(vec![FiniteSet::one(); S::SORTS.len()], vec![vec![0]; S::ARROWS.len()])
}

/// The unique map into the one-point object.
pub fn to_terminal<S: Shape>(x: &Presheaf<S>) -> PresheafMorphism<S> {
    let t = terminal::<S>();
    let tables = x.sets().iter().map(|s| vec![0; s.len()]).collect();
    PresheafMorphism::from_tables(x, &t, tables)
}

/// The empty object.
pub fn initial<S: Shape>() -> Presheaf<S> {
    Presheaf::empty()
}

/// The unique map out of the empty object.
pub fn from_initial<S: Shape>(x: &Presheaf<S>) -> PresheafMorphism<S> {
    PresheafMorphism::from_tables(&initial(), x, vec![Vec::new(); S::SORTS.len()])
}

/// The atom `1` naming the point of the terminal object.
pub fn point() -> Atom {
    Atom::int(1)
}
