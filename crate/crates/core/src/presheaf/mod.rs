//! Finite presheaves on two-level shapes: a *top* sort with arrows into one
//! or more *base* sorts. Quivers (edges over vertices) and incidence
//! hypergraphs (incidences over vertices and edges) are both of this form, so
//! morphisms, hom search and pointwise (co)limits are written once here.

mod limits;

use std::fmt;
use std::hash::Hash;
use std::marker::PhantomData;

pub use limits::{
    coequalizer, coequalizer_mediator, coproduct, coproduct_mediator, equalizer, equalizer_mediator,
    from_initial, initial, point, product, product_mediator, product_morphism, pullback, terminal,
    to_terminal, Cone,
};

use crate::bounds::Bounds;
use crate::error::{Error, Result};
use crate::finset::{Atom, FiniteFunction, FiniteSet};
use crate::search::{KeyKind, Mode, Problem, Solution, Structure};

/// A two-level presheaf shape.
pub trait Shape: Copy + Clone + Default + fmt::Debug + PartialEq + Eq + Hash + Send + Sync + 'static {
    /// Name of the objects, for messages.
    const OBJECT: &'static str;
    /// Sort names; the last one is the top sort.
    const SORTS: &'static [&'static str];
    /// Arrows out of the top sort: (name, index of the target base sort).
    const ARROWS: &'static [(&'static str, usize)];
    /// Singular element names per sort, for messages.
    const ELEMENT: &'static [&'static str];

    fn top() -> usize {
        Self::SORTS.len() - 1
    }
}

/// An object of a presheaf category: one finite set per sort, one function per arrow.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Presheaf<S: Shape> {
    sets: Vec<FiniteSet>,
    arrows: Vec<FiniteFunction>,
    shape: PhantomData<S>,
}

impl<S: Shape> Presheaf<S> {
    pub fn new(sets: Vec<FiniteSet>, arrows: Vec<FiniteFunction>) -> Result<Self> {
        if sets.len() != S::SORTS.len() || arrows.len() != S::ARROWS.len() {
            return Err(Error::Mismatch(format!(
                "{} needs {} sets and {} functions",
                S::OBJECT,
                S::SORTS.len(),
                S::ARROWS.len()
            )));
        }
        let top = S::top();
        for (f, &(name, t)) in arrows.iter().zip(S::ARROWS) {
            if f.dom() != &sets[top] || f.cod() != &sets[t] {
                return Err(Error::Mismatch(format!(
                    "{name} must go from {} to {}",
                    S::SORTS[top],
                    S::SORTS[t]
                )));
            }
        }
        Ok(Self::raw(sets, arrows))
    }

    pub(crate) fn raw(sets: Vec<FiniteSet>, arrows: Vec<FiniteFunction>) -> Self {
        Presheaf {
            sets,
            arrows,
            shape: PhantomData,
        }
    }

    /// Builds from index tables: `tables[a][x]` is the image of top element `x` under arrow `a`.
    pub(crate) fn from_tables(sets: Vec<FiniteSet>, tables: Vec<Vec<usize>>) -> Self {
        let top = S::top();
        let arrows = tables
            .into_iter()
            .zip(S::ARROWS)
            .map(|(t, &(_, b))| FiniteFunction::raw(sets[top].clone(), sets[b].clone(), t))
            .collect();
        Self::raw(sets, arrows)
    }

    /// The object with every sort empty.
    pub fn empty() -> Self {
        Self::from_tables(
            vec![FiniteSet::empty(); S::SORTS.len()],
            vec![Vec::new(); S::ARROWS.len()],
        )
    }

    pub fn set(&self, sort: usize) -> &FiniteSet {
        &self.sets[sort]
    }

    pub fn sets(&self) -> &[FiniteSet] {
        &self.sets
    }

    pub fn arrow(&self, a: usize) -> &FiniteFunction {
        &self.arrows[a]
    }

    pub fn arrows(&self) -> &[FiniteFunction] {
        &self.arrows
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.sets.iter().map(FiniteSet::len).collect()
    }

    /// "2 vertices, 1 edge" style summary.
    pub fn summary(&self) -> String {
        self.sets
            .iter()
            .zip(S::SORTS)
            .map(|(s, name)| format!("{} {}", s.len(), name))
            .collect::<Vec<_>>()
            .join(", ")
    }

    pub(crate) fn structure(&self) -> Structure {
        let top = S::top();
        Structure {
            base: self.sets[..top].iter().map(FiniteSet::len).collect(),
            derived: vec![(0..self.sets[top].len())
                .map(|x| self.arrows.iter().map(|f| f.at(x)).collect())
                .collect()],
        }
    }

    /// Renames every element; `renames[s]` must be a bijection out of sort `s`.
    pub fn relabel(&self, renames: &[FiniteFunction]) -> Result<(Self, PresheafMorphism<S>)> {
        if renames.len() != self.sets.len()
            || renames.iter().zip(&self.sets).any(|(r, s)| r.dom() != s || !r.is_bijective())
        {
            return Err(Error::Mismatch("relabeling must be a bijection on every sort".into()));
        }
        let top = S::top();
        let inv_top = renames[top].inverse()?;
        let sets: Vec<FiniteSet> = renames.iter().map(|r| r.cod().clone()).collect();
        let arrows = self
            .arrows
            .iter()
            .zip(S::ARROWS)
            .map(|(f, &(_, b))| renames[b].after(&f.after(&inv_top)?))
            .collect::<Result<Vec<_>>>()?;
        let obj = Self::raw(sets, arrows);
        let iso = PresheafMorphism::new(self.clone(), obj.clone(), renames.to_vec())?;
        Ok((obj, iso))
    }
}

impl<S: Shape> fmt::Display for Presheaf<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let top = S::top();
        write!(f, "{}(", S::OBJECT)?;
        for (s, set) in self.sets[..top].iter().enumerate() {
            write!(f, "{}={set}; ", S::SORTS[s])?;
        }
        write!(f, "{}={{", S::SORTS[top])?;
        for (x, a) in self.sets[top].iter().enumerate() {
            if x > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}:")?;
            for (k, arr) in self.arrows.iter().enumerate() {
                if k > 0 {
                    f.write_str("->")?;
                }
                write!(f, "{}", arr.cod().get(arr.at(x)))?;
            }
        }
        f.write_str("})")
    }
}

impl<S: Shape> fmt::Debug for Presheaf<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A natural transformation: one function per sort, commuting with every arrow.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PresheafMorphism<S: Shape> {
    dom: Presheaf<S>,
    cod: Presheaf<S>,
    comps: Vec<FiniteFunction>,
}

impl<S: Shape> PresheafMorphism<S> {
    /// Validates carriers and every commuting square.
    pub fn new(dom: Presheaf<S>, cod: Presheaf<S>, comps: Vec<FiniteFunction>) -> Result<Self> {
        if comps.len() != S::SORTS.len() {
            return Err(Error::Mismatch(format!("expected {} component maps", S::SORTS.len())));
        }
        for (s, f) in comps.iter().enumerate() {
            if f.dom() != dom.set(s) || f.cod() != cod.set(s) {
                return Err(Error::NotMorphism(format!(
                    "the {} map must go from {} to {}",
                    S::ELEMENT[s],
                    dom.set(s),
                    cod.set(s)
                )));
            }
        }
        let top = S::top();
        for x in 0..dom.set(top).len() {
            for (a, &(name, b)) in S::ARROWS.iter().enumerate() {
                if cod.arrow(a).at(comps[top].at(x)) != comps[b].at(dom.arrow(a).at(x)) {
                    return Err(Error::NotMorphism(format!(
                        "{} {}: {name} square does not commute",
                        S::ELEMENT[top],
                        dom.set(top).get(x)
                    )));
                }
            }
        }
        Ok(Self::raw(dom, cod, comps))
    }

    pub(crate) fn raw(dom: Presheaf<S>, cod: Presheaf<S>, comps: Vec<FiniteFunction>) -> Self {
        PresheafMorphism { dom, cod, comps }
    }

    pub(crate) fn from_tables(dom: &Presheaf<S>, cod: &Presheaf<S>, tables: Vec<Vec<usize>>) -> Self {
        let comps = tables
            .into_iter()
            .enumerate()
            .map(|(s, t)| FiniteFunction::raw(dom.set(s).clone(), cod.set(s).clone(), t))
            .collect();
        Self::raw(dom.clone(), cod.clone(), comps)
    }

    pub(crate) fn from_solution(dom: &Presheaf<S>, cod: &Presheaf<S>, sol: Solution) -> Self {
        let mut tables = sol.base;
        tables.extend(sol.derived);
        Self::from_tables(dom, cod, tables)
    }

    pub fn identity(x: &Presheaf<S>) -> Self {
        Self::raw(x.clone(), x.clone(), x.sets.iter().map(FiniteFunction::identity).collect())
    }

    pub fn dom(&self) -> &Presheaf<S> {
        &self.dom
    }

    pub fn cod(&self) -> &Presheaf<S> {
        &self.cod
    }

    pub fn comp(&self, sort: usize) -> &FiniteFunction {
        &self.comps[sort]
    }

    pub fn comps(&self) -> &[FiniteFunction] {
        &self.comps
    }

    /// `g.after(f)` is `g ∘ f`.
    pub fn after(&self, f: &Self) -> Result<Self> {
        if f.cod != self.dom {
            return Err(Error::Mismatch(format!(
                "cannot compose: {} is not {}",
                f.cod.summary(),
                self.dom.summary()
            )));
        }
        let comps = self
            .comps
            .iter()
            .zip(&f.comps)
            .map(|(g, f)| g.after(f))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::raw(f.dom.clone(), self.cod.clone(), comps))
    }

    pub fn is_mono(&self) -> bool {
        self.comps.iter().all(FiniteFunction::is_injective)
    }

    pub fn is_epi(&self) -> bool {
        self.comps.iter().all(FiniteFunction::is_surjective)
    }

    pub fn is_iso(&self) -> bool {
        self.comps.iter().all(FiniteFunction::is_bijective)
    }

    pub fn inverse(&self) -> Result<Self> {
        let comps = self
            .comps
            .iter()
            .map(FiniteFunction::inverse)
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::raw(self.cod.clone(), self.dom.clone(), comps))
    }

    /// The morphism as a tuple of function atoms, one per sort.
    pub fn to_atom(&self) -> Atom {
        Atom::tuple(self.comps.iter().map(FiniteFunction::to_atom).collect())
    }

    /// Reads a morphism atom back, validating it.
    pub fn from_atom(dom: &Presheaf<S>, cod: &Presheaf<S>, atom: &Atom) -> Result<Self> {
        let parts = atom
            .as_tuple()
            .filter(|p| p.len() == S::SORTS.len())
            .ok_or_else(|| Error::AtomSyntax {
                text: atom.to_string(),
                reason: format!("expected a {}-tuple of function atoms", S::SORTS.len()),
            })?;
        let comps = parts
            .iter()
            .enumerate()
            .map(|(s, p)| FiniteFunction::from_atom(dom.set(s), cod.set(s), p))
            .collect::<Result<Vec<_>>>()?;
        Self::new(dom.clone(), cod.clone(), comps)
    }
}

impl<S: Shape> fmt::Debug for PresheafMorphism<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_atom())
    }
}

impl<S: Shape> fmt::Display for PresheafMorphism<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_atom())
    }
}

fn key_classes<S: Shape>() -> Vec<usize> {
    S::ARROWS.iter().map(|&(_, b)| b).collect()
}

/// Number of morphisms `a → b`.
pub fn hom_count<S: Shape>(a: &Presheaf<S>, b: &Presheaf<S>) -> u128 {
    let (d, c, k) = (a.structure(), b.structure(), key_classes::<S>());
    Problem::new(&d, &c, KeyKind::Tuple, &k).count(Mode::Hom)
}

/// Every morphism `a → b` in stable order.
pub fn homs<S: Shape>(a: &Presheaf<S>, b: &Presheaf<S>, bounds: &Bounds) -> Result<Vec<PresheafMorphism<S>>> {
    let (d, c, k) = (a.structure(), b.structure(), key_classes::<S>());
    Ok(Problem::new(&d, &c, KeyKind::Tuple, &k)
        .list(bounds.hom)?
        .into_iter()
        .map(|s| PresheafMorphism::from_solution(a, b, s))
        .collect())
}

/// The first morphism `a → b` in stable order.
pub fn first_hom<S: Shape>(a: &Presheaf<S>, b: &Presheaf<S>) -> Option<PresheafMorphism<S>> {
    let (d, c, k) = (a.structure(), b.structure(), key_classes::<S>());
    Problem::new(&d, &c, KeyKind::Tuple, &k)
        .first(Mode::Hom)
        .map(|s| PresheafMorphism::from_solution(a, b, s))
}

/// Some isomorphism `a → b`, if one exists.
pub fn find_iso<S: Shape>(a: &Presheaf<S>, b: &Presheaf<S>) -> Option<PresheafMorphism<S>> {
    let (d, c, k) = (a.structure(), b.structure(), key_classes::<S>());
    Problem::new(&d, &c, KeyKind::Tuple, &k)
        .first(Mode::Iso)
        .map(|s| PresheafMorphism::from_solution(a, b, s))
}

/// Number of isomorphisms `a → b`.
pub fn iso_count<S: Shape>(a: &Presheaf<S>, b: &Presheaf<S>) -> u128 {
    let (d, c, k) = (a.structure(), b.structure(), key_classes::<S>());
    Problem::new(&d, &c, KeyKind::Tuple, &k).count(Mode::Iso)
}
