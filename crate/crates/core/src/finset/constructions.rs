//! Products, coproducts, (co)equalizers, power sets and function spaces of
//! finite sets.

use itertools::Itertools;
use petgraph::unionfind::UnionFind;

use super::{Atom, FiniteFunction, FiniteSet};
use crate::bounds::{saturating_pow, Bounds};
use crate::error::{Error, Result};

/// Cartesian product of `xs` as tuple atoms, with the projections.
pub fn product_set(xs: &[FiniteSet]) -> (FiniteSet, Vec<FiniteFunction>) {
    let tuples: Vec<Vec<usize>> = xs
        .iter()
        .map(|x| 0..x.len())
        .multi_cartesian_product()
        .collect();
    // multi_cartesian_product yields nothing for an empty list of factors
    let tuples = if xs.is_empty() { vec![vec![]] } else { tuples };
    let carrier = FiniteSet::collect(tuples.iter().map(|t| tuple_atom(xs, t)));
    let mut tables = vec![vec![0; carrier.len()]; xs.len()];
    for t in &tuples {
        let pos = carrier.index_of(&tuple_atom(xs, t)).expect("tuple is in carrier");
        for (k, &c) in t.iter().enumerate() {
            tables[k][pos] = c;
        }
    }
    let projections = tables
        .into_iter()
        .zip(xs)
        .map(|(tab, x)| FiniteFunction::raw(carrier.clone(), x.clone(), tab))
        .collect();
    (carrier, projections)
}

fn tuple_atom(xs: &[FiniteSet], idx: &[usize]) -> Atom {
    Atom::tuple(idx.iter().zip(xs).map(|(&i, x)| x.get(i).clone()).collect())
}

/// Index-tagged disjoint union `{(i, x) : x ∈ xs[i]}` with its injections.
pub fn coproduct_set(xs: &[FiniteSet]) -> (FiniteSet, Vec<FiniteFunction>) {
    let carrier = FiniteSet::collect(
        xs.iter()
            .enumerate()
            .flat_map(|(i, x)| x.iter().map(move |a| tag(i, a))),
    );
    let injections = xs
        .iter()
        .enumerate()
        .map(|(i, x)| {
            let tab = x
                .iter()
                .map(|a| carrier.index_of(&tag(i, a)).expect("tagged atom is in carrier"))
                .collect();
            FiniteFunction::raw(x.clone(), carrier.clone(), tab)
        })
        .collect();
    (carrier, injections)
}

/// The coproduct tag `(i, a)`.
pub fn tag(i: usize, a: &Atom) -> Atom {
    Atom::pair(Atom::int(i), a.clone())
}

fn check_parallel(f: &FiniteFunction, g: &FiniteFunction) -> Result<()> {
    if f.dom() != g.dom() || f.cod() != g.cod() {
        return Err(Error::NotParallel(format!(
            "{} → {} versus {} → {}",
            f.dom(),
            f.cod(),
            g.dom(),
            g.cod()
        )));
    }
    Ok(())
}

/// Canonical surjection onto the classes of the least equivalence relation
/// identifying `f(x)` with `g(x)`. Each class is named by its least member.
pub fn coequalize_set(f: &FiniteFunction, g: &FiniteFunction) -> Result<(FiniteSet, FiniteFunction)> {
    check_parallel(f, g)?;
    let cod = f.cod();
    let mut uf = UnionFind::<usize>::new(cod.len());
    for i in 0..f.dom().len() {
        uf.union(f.at(i), g.at(i));
    }
    Ok(quotient_by_labels(cod, &uf.into_labeling()))
}

/// Quotient of `x` by the partition with the given class labels.
pub(crate) fn quotient_by_labels(x: &FiniteSet, labels: &[usize]) -> (FiniteSet, FiniteFunction) {
    // least member of each class; `x` is sorted so the first index seen is least
    let mut least = vec![usize::MAX; x.len()];
    for (i, &l) in labels.iter().enumerate() {
        if least[l] == usize::MAX {
            least[l] = i;
        }
    }
    let reps: Vec<usize> = (0..x.len()).filter(|&i| least[labels[i]] == i).collect();
    let classes = FiniteSet::collect(reps.iter().map(|&i| x.get(i).clone()));
    let tab = (0..x.len())
        .map(|i| reps.binary_search(&least[labels[i]]).expect("representative"))
        .collect();
    (classes.clone(), FiniteFunction::raw(x.clone(), classes, tab))
}

/// The subset where `f` and `g` agree, with its inclusion.
pub fn equalize_set(f: &FiniteFunction, g: &FiniteFunction) -> Result<(FiniteSet, FiniteFunction)> {
    check_parallel(f, g)?;
    let keep: Vec<usize> = (0..f.dom().len()).filter(|&i| f.at(i) == g.at(i)).collect();
    Ok(sub_inclusion(f.dom(), keep))
}

/// Subset of `x` on the given sorted indices, with its inclusion.
pub(crate) fn sub_inclusion(x: &FiniteSet, keep: Vec<usize>) -> (FiniteSet, FiniteFunction) {
    let sub = FiniteSet::collect(keep.iter().map(|&i| x.get(i).clone()));
    (sub.clone(), FiniteFunction::raw(sub, x.clone(), keep))
}

/// All subsets of `x` as subset atoms.
pub fn powerset(x: &FiniteSet, bounds: &Bounds) -> Result<FiniteSet> {
    bounds.check_powerset("power set", x.len())?;
    Ok(FiniteSet::collect(
        subset_masks(x.len()).map(|m| x.subset_atom(mask_indices(m))),
    ))
}

pub(crate) fn subset_masks(n: usize) -> impl Iterator<Item = u64> {
    0..(1u64 << n)
}

pub(crate) fn mask_indices(mask: u64) -> impl Iterator<Item = usize> {
    (0..64).filter(move |b| mask >> b & 1 == 1)
}

/// Index tables of every function `x → y`, in lexicographic order of tables.
pub fn function_tables(x: &FiniteSet, y: &FiniteSet, bounds: &Bounds) -> Result<Vec<Vec<usize>>> {
    bounds.check_functions("function space", saturating_pow(y.len(), x.len()))?;
    if x.is_empty() {
        return Ok(vec![vec![]]);
    }
    Ok((0..x.len())
        .map(|_| 0..y.len())
        .multi_cartesian_product()
        .collect())
}

/// Every function `x → y` as a map atom.
pub fn all_functions(x: &FiniteSet, y: &FiniteSet, bounds: &Bounds) -> Result<FiniteSet> {
    Ok(FiniteSet::collect(
        function_tables(x, y, bounds)?
            .into_iter()
            .map(|t| FiniteFunction::raw(x.clone(), y.clone(), t).to_atom()),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(names: &[&str]) -> FiniteSet {
        FiniteSet::labels(names)
    }

    #[test]
    fn product_examples() {
        let (p, pr) = product_set(&[set(&["a", "b"]), set(&["x"])]);
        assert_eq!(p.to_string(), "{(a,x),(b,x)}");
        assert_eq!(pr.len(), 2);
        assert_eq!(pr[0].apply(&Atom::parse("(b,x)").unwrap()).unwrap().text(), "b");
        let (unit, none) = product_set(&[]);
        assert_eq!(unit.to_string(), "{()}");
        assert!(none.is_empty());
        assert_eq!(product_set(&[set(&["v", "w"]), set(&["v", "w"])]).0.len(), 4);
        assert!(product_set(&[set(&["a"]), FiniteSet::empty()]).0.is_empty());
    }

    #[test]
    fn coproduct_examples() {
        assert_eq!(coproduct_set(&[set(&["a"]), set(&["a"])]).0.to_string(), "{(0,a),(1,a)}");
        assert_eq!(coproduct_set(&[FiniteSet::empty(), set(&["x"])]).0.to_string(), "{(1,x)}");
        let (c, inj) = coproduct_set(&[set(&["a", "b"])]);
        assert_eq!(c.to_string(), "{(0,a),(0,b)}");
        assert!(inj[0].is_bijective());
    }

    #[test]
    fn coequalizer_examples() {
        let one = set(&["0"]);
        let vw = set(&["v", "w"]);
        let f = FiniteFunction::constant(&one, &vw, &Atom::label("v")).unwrap();
        let g = FiniteFunction::constant(&one, &vw, &Atom::label("w")).unwrap();
        let (classes, q) = coequalize_set(&f, &g).unwrap();
        assert_eq!(classes.to_string(), "{v}");
        assert_eq!(q.after(&f).unwrap(), q.after(&g).unwrap());
        let (_, q) = coequalize_set(&f, &f).unwrap();
        assert!(q.is_bijective());
        let e = FiniteFunction::empty(&vw);
        assert!(coequalize_set(&e, &e).unwrap().1.is_bijective());
        assert!(coequalize_set(&f, &e).is_err());
    }

    #[test]
    fn powerset_and_bounds() {
        let b = Bounds::default();
        assert_eq!(powerset(&set(&["v"]), &b).unwrap().to_string(), "{{v},{}}");
        assert_eq!(powerset(&FiniteSet::empty(), &b).unwrap().len(), 1);
        assert_eq!(powerset(&set(&["v", "w"]), &b).unwrap().len(), 4);
        let big = FiniteSet::range(17);
        assert!(matches!(powerset(&big, &b), Err(Error::Bound { bound: 16, .. })));
    }

    #[test]
    fn function_space_examples() {
        let b = Bounds::default();
        assert_eq!(all_functions(&set(&["x", "y"]), &set(&["u", "v"]), &b).unwrap().len(), 4);
        assert_eq!(all_functions(&FiniteSet::empty(), &set(&["u"]), &b).unwrap().len(), 1);
        assert_eq!(all_functions(&set(&["x"]), &FiniteSet::empty(), &b).unwrap().len(), 0);
        assert!(all_functions(&FiniteSet::range(13), &FiniteSet::range(2), &b).is_err());
    }

    #[test]
    fn coequalizer_universal_property_by_enumeration() {
        // every h with h∘f = h∘g factors uniquely through q
        let x = FiniteSet::range(2);
        let y = set(&["a", "b", "c", "d"]);
        let f = FiniteFunction::from_indices(x.clone(), y.clone(), vec![0, 1]).unwrap();
        let g = FiniteFunction::from_indices(x.clone(), y.clone(), vec![1, 2]).unwrap();
        let (classes, q) = coequalize_set(&f, &g).unwrap();
        assert_eq!(classes.len(), 2);
        let z = set(&["p", "q", "r"]);
        let b = Bounds::default();
        for h in function_tables(&y, &z, &b).unwrap() {
            let h = FiniteFunction::raw(y.clone(), z.clone(), h);
            let forks = h.after(&f).unwrap() == h.after(&g).unwrap();
            let factors: Vec<_> = function_tables(&classes, &z, &b)
                .unwrap()
                .into_iter()
                .map(|k| FiniteFunction::raw(classes.clone(), z.clone(), k))
                .filter(|k| k.after(&q).unwrap() == h)
                .collect();
            assert_eq!(factors.len(), usize::from(forks));
        }
    }
}
