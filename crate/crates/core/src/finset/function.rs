use std::fmt;
use std::sync::Arc;

use super::{Atom, FiniteSet};
use crate::error::{Error, Result};

/// A total function between finite sets, stored as an index table.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FiniteFunction {
    dom: FiniteSet,
    cod: FiniteSet,
    map: Arc<[usize]>,
}

impl FiniteFunction {
    /// From an index table; `map[i]` is the image of `dom.get(i)`.
    pub fn from_indices(dom: FiniteSet, cod: FiniteSet, map: Vec<usize>) -> Result<FiniteFunction> {
        if map.len() != dom.len() {
            return Err(Error::Mismatch(format!(
                "table has {} entries for a domain of {}",
                map.len(),
                dom.len()
            )));
        }
        if let Some(&bad) = map.iter().find(|&&j| j >= cod.len()) {
            return Err(Error::Mismatch(format!("index {bad} outside codomain {cod}")));
        }
        Ok(FiniteFunction {
            dom,
            cod,
            map: map.into(),
        })
    }

    /// Index-level constructor for internal use where validity is by construction.
    pub(crate) fn raw(dom: FiniteSet, cod: FiniteSet, map: Vec<usize>) -> FiniteFunction {
        debug_assert_eq!(map.len(), dom.len());
        debug_assert!(map.iter().all(|&j| j < cod.len()));
        FiniteFunction {
            dom,
            cod,
            map: map.into(),
        }
    }

    /// From an atom-level rule. Fails if some image is not in `cod`.
    pub fn from_fn(
        dom: FiniteSet,
        cod: FiniteSet,
        mut f: impl FnMut(&Atom) -> Atom,
    ) -> Result<FiniteFunction> {
        let map = dom
            .iter()
            .map(|a| {
                let b = f(a);
                cod.index_of(&b)
                    .ok_or_else(|| Error::not_element(&b, format!("codomain {cod} (image of {a})")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(FiniteFunction::raw(dom, cod, map))
    }

    /// From explicit (argument, image) pairs that must cover `dom` exactly once.
    pub fn from_pairs(
        dom: FiniteSet,
        cod: FiniteSet,
        pairs: impl IntoIterator<Item = (Atom, Atom)>,
    ) -> Result<FiniteFunction> {
        let mut map = vec![usize::MAX; dom.len()];
        for (a, b) in pairs {
            let i = dom.require(&a, "domain")?;
            let j = cod.require(&b, "codomain")?;
            if map[i] != usize::MAX {
                return Err(Error::Duplicate(a.to_string()));
            }
            map[i] = j;
        }
        if let Some(i) = map.iter().position(|&j| j == usize::MAX) {
            return Err(Error::Mismatch(format!("no image given for {}", dom.get(i))));
        }
        Ok(FiniteFunction::raw(dom, cod, map))
    }

    pub fn identity(x: &FiniteSet) -> FiniteFunction {
        FiniteFunction::raw(x.clone(), x.clone(), (0..x.len()).collect())
    }

    /// Constant map onto `target`; fails if `target` is not in `cod`.
    pub fn constant(dom: &FiniteSet, cod: &FiniteSet, target: &Atom) -> Result<FiniteFunction> {
        let j = cod.require(target, "codomain")?;
        Ok(FiniteFunction::raw(dom.clone(), cod.clone(), vec![j; dom.len()]))
    }

    /// The empty function out of the empty set.
    pub fn empty(cod: &FiniteSet) -> FiniteFunction {
        FiniteFunction::raw(FiniteSet::empty(), cod.clone(), Vec::new())
    }

    pub fn dom(&self) -> &FiniteSet {
        &self.dom
    }

    pub fn cod(&self) -> &FiniteSet {
        &self.cod
    }

    pub fn table(&self) -> &[usize] {
        &self.map
    }

    /// Image index of domain index `i`.
    pub fn at(&self, i: usize) -> usize {
        self.map[i]
    }

    pub fn apply(&self, a: &Atom) -> Option<&Atom> {
        self.dom.index_of(a).map(|i| self.cod.get(self.map[i]))
    }

    /// `g.after(f)` is `g ∘ f`.
    pub fn after(&self, f: &FiniteFunction) -> Result<FiniteFunction> {
        if f.cod != self.dom {
            return Err(Error::Mismatch(format!(
                "cannot compose: codomain {} differs from domain {}",
                f.cod, self.dom
            )));
        }
        Ok(FiniteFunction::raw(
            f.dom.clone(),
            self.cod.clone(),
            f.map.iter().map(|&j| self.map[j]).collect(),
        ))
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.cod.len()];
        self.map.iter().all(|&j| !std::mem::replace(&mut seen[j], true))
    }

    pub fn is_surjective(&self) -> bool {
        let mut seen = vec![false; self.cod.len()];
        for &j in self.map.iter() {
            seen[j] = true;
        }
        seen.into_iter().all(|b| b)
    }

    pub fn is_bijective(&self) -> bool {
        self.dom.len() == self.cod.len() && self.is_injective()
    }

    /// First pair of distinct arguments with equal images.
    pub fn collision(&self) -> Option<(usize, usize)> {
        let mut first = vec![usize::MAX; self.cod.len()];
        for (i, &j) in self.map.iter().enumerate() {
            if first[j] != usize::MAX {
                return Some((first[j], i));
            }
            first[j] = i;
        }
        None
    }

    /// Inverse of a bijection.
    pub fn inverse(&self) -> Result<FiniteFunction> {
        if !self.is_bijective() {
            return Err(Error::Mismatch("function is not bijective".into()));
        }
        let mut inv = vec![0; self.cod.len()];
        for (i, &j) in self.map.iter().enumerate() {
            inv[j] = i;
        }
        Ok(FiniteFunction::raw(self.cod.clone(), self.dom.clone(), inv))
    }

    /// Image indices of a set of domain indices, sorted and deduplicated.
    pub fn image_indices(&self, idx: &[usize]) -> Vec<usize> {
        let mut out: Vec<usize> = idx.iter().map(|&i| self.map[i]).collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// The image `{f(x) : x ∈ A}` of a subset atom over the domain.
    pub fn image_of(&self, subset: &Atom) -> Result<Atom> {
        let idx = self.dom.subset_indices(subset, "domain of the function")?;
        Ok(self.cod.subset_atom(self.image_indices(&idx)))
    }

    /// The function as a map atom `[x:f(x),...]`.
    pub fn to_atom(&self) -> Atom {
        Atom::map(
            self.dom
                .iter()
                .zip(self.map.iter())
                .map(|(a, &j)| (a.clone(), self.cod.get(j).clone()))
                .collect(),
        )
        .expect("domain atoms are distinct")
    }

    /// Reads a map atom back as a function `dom → cod`.
    pub fn from_atom(dom: &FiniteSet, cod: &FiniteSet, atom: &Atom) -> Result<FiniteFunction> {
        let entries = atom.as_map().ok_or_else(|| Error::AtomSyntax {
            text: atom.to_string(),
            reason: "expected a function atom".into(),
        })?;
        FiniteFunction::from_pairs(dom.clone(), cod.clone(), entries.iter().cloned())
    }
}

impl fmt::Debug for FiniteFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_atom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(names: &[&str]) -> FiniteSet {
        FiniteSet::labels(names)
    }

    #[test]
    fn composition_and_identity() {
        let x = set(&["a", "b"]);
        let y = set(&["u", "v"]);
        let z = set(&["p"]);
        let f = FiniteFunction::from_fn(x.clone(), y.clone(), |a| {
            Atom::label(if a.text() == "a" { "v" } else { "u" })
        })
        .unwrap();
        let g = FiniteFunction::constant(&y, &z, &Atom::label("p")).unwrap();
        let gf = g.after(&f).unwrap();
        assert_eq!(gf.apply(&Atom::label("a")).unwrap().text(), "p");
        assert_eq!(f.after(&FiniteFunction::identity(&x)).unwrap(), f);
        assert_eq!(FiniteFunction::identity(&y).after(&f).unwrap(), f);
        assert!(f.after(&g).is_err());
        assert!(f.is_bijective());
        assert_eq!(f.inverse().unwrap().after(&f).unwrap(), FiniteFunction::identity(&x));
    }

    #[test]
    fn image_and_atom_round_trip() {
        let x = set(&["v", "w"]);
        let y = set(&["u"]);
        let f = FiniteFunction::constant(&x, &y, &Atom::label("u")).unwrap();
        let all = x.subset_atom([0, 1]);
        assert_eq!(f.image_of(&all).unwrap().text(), "{u}");
        assert_eq!(f.image_of(&Atom::set(vec![])).unwrap().text(), "{}");
        assert_eq!(f.to_atom().text(), "[v:u,w:u]");
        assert_eq!(FiniteFunction::from_atom(&x, &y, &f.to_atom()).unwrap(), f);
        assert_eq!(f.collision(), Some((0, 1)));
    }

    #[test]
    fn from_pairs_requires_totality() {
        let x = set(&["a", "b"]);
        let pairs = vec![(Atom::label("a"), Atom::label("a"))];
        assert!(FiniteFunction::from_pairs(x.clone(), x.clone(), pairs).is_err());
    }
}
