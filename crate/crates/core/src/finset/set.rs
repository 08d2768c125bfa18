use std::fmt;
use std::sync::Arc;

use super::Atom;
use crate::error::{Error, Result};

/// A finite set of atoms kept in canonical (bytewise text) order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FiniteSet {
    elems: Arc<[Atom]>,
}

impl FiniteSet {
    pub fn empty() -> FiniteSet {
        FiniteSet {
            elems: Arc::from(Vec::new()),
        }
    }

    /// Builds a set, rejecting repeated atoms.
    pub fn new(atoms: impl IntoIterator<Item = Atom>) -> Result<FiniteSet> {
        let mut v: Vec<Atom> = atoms.into_iter().collect();
        v.sort();
        if let Some(w) = v.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::Duplicate(w[0].to_string()));
        }
        Ok(FiniteSet { elems: v.into() })
    }

    /// Builds a set, silently merging repeats.
    pub fn collect(atoms: impl IntoIterator<Item = Atom>) -> FiniteSet {
        let mut v: Vec<Atom> = atoms.into_iter().collect();
        v.sort();
        v.dedup();
        FiniteSet { elems: v.into() }
    }

    /// Set of plain symbols; panics on invalid labels.
    pub fn labels(names: &[&str]) -> FiniteSet {
        FiniteSet::collect(names.iter().map(|n| Atom::label(n)))
    }

    /// `{0, 1, ..., n-1}` as integer symbols.
    pub fn range(n: usize) -> FiniteSet {
        FiniteSet::collect((0..n).map(Atom::int))
    }

    /// The one-element set `{1}`.
    pub fn one() -> FiniteSet {
        FiniteSet::collect([Atom::int(1)])
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.elems
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Atom> {
        self.elems.iter()
    }

    pub fn get(&self, i: usize) -> &Atom {
        &self.elems[i]
    }

    pub fn index_of(&self, a: &Atom) -> Option<usize> {
        self.elems.binary_search(a).ok()
    }

    pub fn contains(&self, a: &Atom) -> bool {
        self.index_of(a).is_some()
    }

    /// Index of `a`, or an error naming `context`.
    pub fn require(&self, a: &Atom, context: &str) -> Result<usize> {
        self.index_of(a).ok_or_else(|| Error::not_element(a, context))
    }

    /// Subset atom from element indices.
    pub fn subset_atom(&self, idx: impl IntoIterator<Item = usize>) -> Atom {
        Atom::set(idx.into_iter().map(|i| self.elems[i].clone()).collect())
    }

    /// Element indices of a subset atom, sorted.
    pub fn subset_indices(&self, s: &Atom, context: &str) -> Result<Vec<usize>> {
        let members = s.as_set().ok_or_else(|| Error::AtomSyntax {
            text: s.to_string(),
            reason: "expected a subset atom".into(),
        })?;
        members.iter().map(|m| self.require(m, context)).collect()
    }
}

impl<'a> IntoIterator for &'a FiniteSet {
    type Item = &'a Atom;
    type IntoIter = std::slice::Iter<'a, Atom>;
    fn into_iter(self) -> Self::IntoIter {
        self.elems.iter()
    }
}

impl fmt::Display for FiniteSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, a) in self.elems.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for FiniteSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteSet{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_textual_and_stable() {
        let s = FiniteSet::collect(["b", "a", "(a,b)", "10", "2"].map(|t| Atom::parse(t).unwrap()));
        let texts: Vec<&str> = s.iter().map(Atom::text).collect();
        assert_eq!(texts, ["(a,b)", "10", "2", "a", "b"]);
        assert_eq!(s.index_of(&Atom::label("a")), Some(3));
    }

    #[test]
    fn duplicates_rejected() {
        assert!(FiniteSet::new([Atom::label("x"), Atom::label("x")]).is_err());
        assert_eq!(FiniteSet::collect([Atom::label("x"), Atom::label("x")]).len(), 1);
    }

    #[test]
    fn subset_round_trip() {
        let s = FiniteSet::labels(&["u", "v", "w"]);
        let a = s.subset_atom([2, 0]);
        assert_eq!(a.text(), "{u,w}");
        assert_eq!(s.subset_indices(&a, "s").unwrap(), vec![0, 2]);
        assert!(s.subset_indices(&Atom::parse("{z}").unwrap(), "s").is_err());
    }
}
