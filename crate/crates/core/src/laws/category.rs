//! A uniform interface over sets, quivers, set-system hypergraphs,
//! multigraphs and incidence hypergraphs, so that every law is checked by
//! one piece of code.

use std::fmt;

use crate::bounds::{saturating_pow, Bounds};
use crate::error::{Error, Result};
use crate::finset::{self, Atom, FiniteFunction, FiniteSet};
use crate::incidence::{self, IncidenceShape};
use crate::multigraph::{self, Multigraph};
use crate::presheaf::{self, Presheaf, PresheafMorphism, Shape};
use crate::quiver::{self, QuiverShape};
use crate::set_system::{self, HyperMorphism, SetSystemHypergraph};

pub trait Category {
    type Obj: Clone + PartialEq + fmt::Debug;
    type Mor: Clone + PartialEq + fmt::Debug;

    const NAME: &'static str;

    fn dom(m: &Self::Mor) -> &Self::Obj;
    fn cod(m: &Self::Mor) -> &Self::Obj;
    /// `g ∘ f`.
    fn compose(g: &Self::Mor, f: &Self::Mor) -> Result<Self::Mor>;
    fn identity(x: &Self::Obj) -> Self::Mor;
    fn homs(a: &Self::Obj, b: &Self::Obj, bounds: &Bounds) -> Result<Vec<Self::Mor>>;
    fn hom_count(a: &Self::Obj, b: &Self::Obj) -> u128;
    fn first_hom(a: &Self::Obj, b: &Self::Obj) -> Option<Self::Mor>;
    fn find_iso(a: &Self::Obj, b: &Self::Obj) -> Option<Self::Mor>;
    fn is_mono(m: &Self::Mor) -> bool;
    fn is_iso(m: &Self::Mor) -> bool;
    fn mor_atom(m: &Self::Mor) -> Atom;
    fn describe(x: &Self::Obj) -> String;
}

/// A limit or colimit of a diagram: apex plus legs.
#[derive(Debug, Clone, PartialEq)]
pub struct Limit<C: Category> {
    pub apex: C::Obj,
    pub legs: Vec<C::Mor>,
}

pub trait FiniteLimits: Category {
    fn product(objs: &[Self::Obj], bounds: &Bounds) -> Result<Limit<Self>>
    where
        Self: Sized;
    fn product_mediator(p: &Limit<Self>, legs: &[Self::Mor]) -> Result<Self::Mor>
    where
        Self: Sized;
    fn coproduct(objs: &[Self::Obj]) -> Result<Limit<Self>>
    where
        Self: Sized;
    fn coproduct_mediator(c: &Limit<Self>, legs: &[Self::Mor], target: &Self::Obj) -> Result<Self::Mor>
    where
        Self: Sized;
    fn equalizer(f: &Self::Mor, g: &Self::Mor) -> Result<Limit<Self>>
    where
        Self: Sized;
    fn equalizer_mediator(e: &Limit<Self>, h: &Self::Mor) -> Result<Self::Mor>
    where
        Self: Sized;
    fn coequalizer(f: &Self::Mor, g: &Self::Mor) -> Result<Limit<Self>>
    where
        Self: Sized;
    fn coequalizer_mediator(q: &Limit<Self>, h: &Self::Mor) -> Result<Self::Mor>
    where
        Self: Sized;
    fn terminal() -> Self::Obj;
}

/// An exponential object with its currying in both directions.
pub struct Exponential<C: Category> {
    pub obj: C::Obj,
    pub curry: Box<dyn Fn(&C::Obj, &C::Mor) -> Result<C::Mor>>,
    pub uncurry: Box<dyn Fn(&C::Mor) -> Result<C::Mor>>,
}

pub trait CartesianClosed: FiniteLimits + Sized {
    fn exponential(base: &Self::Obj, target: &Self::Obj, bounds: &Bounds) -> Result<Exponential<Self>>;
}

/// Finite sets and functions.
#[derive(Debug, Clone, Copy)]
pub struct Sets;

impl Category for Sets {
    type Obj = FiniteSet;
    type Mor = FiniteFunction;
    const NAME: &'static str = "Set";

    fn dom(m: &FiniteFunction) -> &FiniteSet {
        m.dom()
    }

    fn cod(m: &FiniteFunction) -> &FiniteSet {
        m.cod()
    }

    fn compose(g: &FiniteFunction, f: &FiniteFunction) -> Result<FiniteFunction> {
        g.after(f)
    }

    fn identity(x: &FiniteSet) -> FiniteFunction {
        FiniteFunction::identity(x)
    }

    fn homs(a: &FiniteSet, b: &FiniteSet, bounds: &Bounds) -> Result<Vec<FiniteFunction>> {
        finset::function_tables(a, b, bounds)?
            .into_iter()
            .map(|t| FiniteFunction::from_indices(a.clone(), b.clone(), t))
            .collect()
    }

    fn hom_count(a: &FiniteSet, b: &FiniteSet) -> u128 {
        saturating_pow(b.len(), a.len())
    }

    fn first_hom(a: &FiniteSet, b: &FiniteSet) -> Option<FiniteFunction> {
        (a.is_empty() || !b.is_empty()).then(|| FiniteFunction::raw(a.clone(), b.clone(), vec![0; a.len()]))
    }

    fn find_iso(a: &FiniteSet, b: &FiniteSet) -> Option<FiniteFunction> {
        (a.len() == b.len()).then(|| FiniteFunction::raw(a.clone(), b.clone(), (0..a.len()).collect()))
    }

    fn is_mono(m: &FiniteFunction) -> bool {
        m.is_injective()
    }

    fn is_iso(m: &FiniteFunction) -> bool {
        m.is_bijective()
    }

    fn mor_atom(m: &FiniteFunction) -> Atom {
        m.to_atom()
    }

    fn describe(x: &FiniteSet) -> String {
        x.to_string()
    }
}

/// A presheaf category: quivers or incidence hypergraphs.
#[derive(Debug, Clone, Copy)]
pub struct Presheaves<S: Shape>(std::marker::PhantomData<S>);

pub type Quivers = Presheaves<QuiverShape>;
pub type Incidences = Presheaves<IncidenceShape>;

impl<S: Shape> Category for Presheaves<S> {
    type Obj = Presheaf<S>;
    type Mor = PresheafMorphism<S>;
    const NAME: &'static str = S::OBJECT;

    fn dom(m: &Self::Mor) -> &Self::Obj {
        m.dom()
    }

    fn cod(m: &Self::Mor) -> &Self::Obj {
        m.cod()
    }

    fn compose(g: &Self::Mor, f: &Self::Mor) -> Result<Self::Mor> {
        g.after(f)
    }

    fn identity(x: &Self::Obj) -> Self::Mor {
        PresheafMorphism::identity(x)
    }

    fn homs(a: &Self::Obj, b: &Self::Obj, bounds: &Bounds) -> Result<Vec<Self::Mor>> {
        presheaf::homs(a, b, bounds)
    }

    fn hom_count(a: &Self::Obj, b: &Self::Obj) -> u128 {
        presheaf::hom_count(a, b)
    }

    fn first_hom(a: &Self::Obj, b: &Self::Obj) -> Option<Self::Mor> {
        presheaf::first_hom(a, b)
    }

    fn find_iso(a: &Self::Obj, b: &Self::Obj) -> Option<Self::Mor> {
        presheaf::find_iso(a, b)
    }

    fn is_mono(m: &Self::Mor) -> bool {
        m.is_mono()
    }

    fn is_iso(m: &Self::Mor) -> bool {
        m.is_iso()
    }

    fn mor_atom(m: &Self::Mor) -> Atom {
        m.to_atom()
    }

    fn describe(x: &Self::Obj) -> String {
        x.summary()
    }
}

fn from_cone<S: Shape>(c: presheaf::Cone<S>) -> Limit<Presheaves<S>> {
    Limit {
        apex: c.apex,
        legs: c.legs,
    }
}

fn to_cone<S: Shape>(l: &Limit<Presheaves<S>>) -> presheaf::Cone<S> {
    presheaf::Cone {
        apex: l.apex.clone(),
        legs: l.legs.clone(),
    }
}

impl<S: Shape> FiniteLimits for Presheaves<S> {
    fn product(objs: &[Self::Obj], _bounds: &Bounds) -> Result<Limit<Self>> {
        Ok(from_cone(presheaf::product(objs)))
    }

    fn product_mediator(p: &Limit<Self>, legs: &[Self::Mor]) -> Result<Self::Mor> {
        presheaf::product_mediator(&to_cone(p), legs)
    }

    fn coproduct(objs: &[Self::Obj]) -> Result<Limit<Self>> {
        Ok(from_cone(presheaf::coproduct(objs)))
    }

    fn coproduct_mediator(c: &Limit<Self>, legs: &[Self::Mor], target: &Self::Obj) -> Result<Self::Mor> {
        presheaf::coproduct_mediator(&to_cone(c), legs, target)
    }

    fn equalizer(f: &Self::Mor, g: &Self::Mor) -> Result<Limit<Self>> {
        presheaf::equalizer(f, g).map(from_cone)
    }

    fn equalizer_mediator(e: &Limit<Self>, h: &Self::Mor) -> Result<Self::Mor> {
        presheaf::equalizer_mediator(&to_cone(e), h)
    }

    fn coequalizer(f: &Self::Mor, g: &Self::Mor) -> Result<Limit<Self>> {
        presheaf::coequalizer(f, g).map(from_cone)
    }

    fn coequalizer_mediator(q: &Limit<Self>, h: &Self::Mor) -> Result<Self::Mor> {
        presheaf::coequalizer_mediator(&to_cone(q), h)
    }

    fn terminal() -> Self::Obj {
        presheaf::terminal()
    }
}

impl CartesianClosed for Quivers {
    fn exponential(base: &Self::Obj, target: &Self::Obj, bounds: &Bounds) -> Result<Exponential<Self>> {
        let x = std::rc::Rc::new(quiver::exponential(base, target, bounds)?);
        let (a, b) = (x.clone(), x.clone());
        Ok(Exponential {
            obj: x.obj.clone(),
            curry: Box::new(move |k, psi| a.curry(k, psi)),
            uncurry: Box::new(move |g| b.uncurry(g)),
        })
    }
}

impl CartesianClosed for Incidences {
    fn exponential(base: &Self::Obj, target: &Self::Obj, bounds: &Bounds) -> Result<Exponential<Self>> {
        let x = std::rc::Rc::new(incidence::exponential(base, target, bounds)?);
        let (a, b) = (x.clone(), x.clone());
        Ok(Exponential {
            obj: x.obj.clone(),
            curry: Box::new(move |k, psi| a.curry(k, psi)),
            uncurry: Box::new(move |g| b.uncurry(g)),
        })
    }
}

/// Set-system hypergraphs.
#[derive(Debug, Clone, Copy)]
pub struct Hypergraphs;

impl Category for Hypergraphs {
    type Obj = SetSystemHypergraph;
    type Mor = HyperMorphism;
    const NAME: &'static str = "set-system hypergraph";

    fn dom(m: &HyperMorphism) -> &SetSystemHypergraph {
        m.dom()
    }

    fn cod(m: &HyperMorphism) -> &SetSystemHypergraph {
        m.cod()
    }

    fn compose(g: &HyperMorphism, f: &HyperMorphism) -> Result<HyperMorphism> {
        g.after(f)
    }

    fn identity(x: &SetSystemHypergraph) -> HyperMorphism {
        HyperMorphism::identity(x)
    }

    fn homs(a: &SetSystemHypergraph, b: &SetSystemHypergraph, bounds: &Bounds) -> Result<Vec<HyperMorphism>> {
        set_system::homs(a, b, bounds)
    }

    fn hom_count(a: &SetSystemHypergraph, b: &SetSystemHypergraph) -> u128 {
        set_system::hom_count(a, b)
    }

    fn first_hom(a: &SetSystemHypergraph, b: &SetSystemHypergraph) -> Option<HyperMorphism> {
        set_system::first_hom(a, b)
    }

    fn find_iso(a: &SetSystemHypergraph, b: &SetSystemHypergraph) -> Option<HyperMorphism> {
        set_system::find_iso(a, b)
    }

    fn is_mono(m: &HyperMorphism) -> bool {
        m.is_mono()
    }

    fn is_iso(m: &HyperMorphism) -> bool {
        m.is_iso()
    }

    fn mor_atom(m: &HyperMorphism) -> Atom {
        m.to_atom()
    }

    fn describe(x: &SetSystemHypergraph) -> String {
        x.to_string()
    }
}

fn from_hyper(c: set_system::HyperCone) -> Limit<Hypergraphs> {
    Limit {
        apex: c.apex,
        legs: c.legs,
    }
}

fn to_hyper<C: Category<Obj = SetSystemHypergraph, Mor = HyperMorphism>>(l: &Limit<C>) -> set_system::HyperCone {
    set_system::HyperCone {
        apex: l.apex.clone(),
        legs: l.legs.clone(),
    }
}

impl FiniteLimits for Hypergraphs {
    fn product(objs: &[SetSystemHypergraph], bounds: &Bounds) -> Result<Limit<Self>> {
        set_system::product(objs, bounds).map(from_hyper)
    }

    fn product_mediator(p: &Limit<Self>, legs: &[HyperMorphism]) -> Result<HyperMorphism> {
        set_system::product_mediator(&to_hyper(p), legs)
    }

    fn coproduct(objs: &[SetSystemHypergraph]) -> Result<Limit<Self>> {
        Ok(from_hyper(set_system::coproduct(objs)))
    }

    fn coproduct_mediator(c: &Limit<Self>, legs: &[HyperMorphism], target: &SetSystemHypergraph) -> Result<HyperMorphism> {
        set_system::coproduct_mediator(&to_hyper(c), legs, target)
    }

    fn equalizer(f: &HyperMorphism, g: &HyperMorphism) -> Result<Limit<Self>> {
        set_system::equalizer(f, g).map(from_hyper)
    }

    fn equalizer_mediator(e: &Limit<Self>, h: &HyperMorphism) -> Result<HyperMorphism> {
        set_system::equalizer_mediator(&to_hyper(e), h)
    }

    fn coequalizer(f: &HyperMorphism, g: &HyperMorphism) -> Result<Limit<Self>> {
        set_system::coequalizer(f, g).map(from_hyper)
    }

    fn coequalizer_mediator(q: &Limit<Self>, h: &HyperMorphism) -> Result<HyperMorphism> {
        set_system::coequalizer_mediator(&to_hyper(q), h)
    }

    fn terminal() -> SetSystemHypergraph {
        set_system::terminal()
    }
}

/// Multigraphs, as the full subcategory of set-system hypergraphs whose
/// edges have one or two endpoints. Products and the terminal object are
/// the hypergraph ones with oversized and empty edges deleted.
#[derive(Debug, Clone, Copy)]
pub struct Multigraphs;

fn require_multigraph(g: &SetSystemHypergraph) -> Result<()> {
    Multigraph::new(g.clone()).map(|_| ())
}

impl Category for Multigraphs {
    type Obj = SetSystemHypergraph;
    type Mor = HyperMorphism;
    const NAME: &'static str = "multigraph";

    fn dom(m: &HyperMorphism) -> &SetSystemHypergraph {
        m.dom()
    }

    fn cod(m: &HyperMorphism) -> &SetSystemHypergraph {
        m.cod()
    }

    fn compose(g: &HyperMorphism, f: &HyperMorphism) -> Result<HyperMorphism> {
        g.after(f)
    }

    fn identity(x: &SetSystemHypergraph) -> HyperMorphism {
        HyperMorphism::identity(x)
    }

    fn homs(a: &SetSystemHypergraph, b: &SetSystemHypergraph, bounds: &Bounds) -> Result<Vec<HyperMorphism>> {
        set_system::homs(a, b, bounds)
    }

    fn hom_count(a: &SetSystemHypergraph, b: &SetSystemHypergraph) -> u128 {
        set_system::hom_count(a, b)
    }

    fn first_hom(a: &SetSystemHypergraph, b: &SetSystemHypergraph) -> Option<HyperMorphism> {
        set_system::first_hom(a, b)
    }

    fn find_iso(a: &SetSystemHypergraph, b: &SetSystemHypergraph) -> Option<HyperMorphism> {
        set_system::find_iso(a, b)
    }

    fn is_mono(m: &HyperMorphism) -> bool {
        m.is_mono()
    }

    fn is_iso(m: &HyperMorphism) -> bool {
        m.is_iso()
    }

    fn mor_atom(m: &HyperMorphism) -> Atom {
        m.to_atom()
    }

    fn describe(x: &SetSystemHypergraph) -> String {
        x.to_string()
    }
}

impl FiniteLimits for Multigraphs {
    fn product(objs: &[SetSystemHypergraph], bounds: &Bounds) -> Result<Limit<Self>> {
        for g in objs {
            require_multigraph(g)?;
        }
        let p = set_system::product(objs, bounds)?;
        let d = multigraph::del(&p.apex);
        let legs = p
            .legs
            .iter()
            .map(|l| l.after(&d.inclusion))
            .collect::<Result<Vec<_>>>()?;
        Ok(Limit {
            apex: d.obj.into_carrier(),
            legs,
        })
    }

    fn product_mediator(p: &Limit<Self>, legs: &[HyperMorphism]) -> Result<HyperMorphism> {
        let factors: Vec<SetSystemHypergraph> = p.legs.iter().map(|l| l.cod().clone()).collect();
        let full = set_system::product(&factors, &Bounds::default())?;
        multigraph::del_factor(&set_system::product_mediator(&full, legs)?)
    }

    fn coproduct(objs: &[SetSystemHypergraph]) -> Result<Limit<Self>> {
        for g in objs {
            require_multigraph(g)?;
        }
        let c = set_system::coproduct(objs);
        Ok(Limit {
            apex: c.apex,
            legs: c.legs,
        })
    }

    fn coproduct_mediator(c: &Limit<Self>, legs: &[HyperMorphism], target: &SetSystemHypergraph) -> Result<HyperMorphism> {
        set_system::coproduct_mediator(&to_hyper(c), legs, target)
    }

    fn equalizer(f: &HyperMorphism, g: &HyperMorphism) -> Result<Limit<Self>> {
        require_multigraph(f.dom())?;
        let e = set_system::equalizer(f, g)?;
        require_multigraph(&e.apex)?;
        Ok(Limit {
            apex: e.apex,
            legs: e.legs,
        })
    }

    fn equalizer_mediator(e: &Limit<Self>, h: &HyperMorphism) -> Result<HyperMorphism> {
        set_system::equalizer_mediator(&to_hyper(e), h)
    }

    fn coequalizer(f: &HyperMorphism, g: &HyperMorphism) -> Result<Limit<Self>> {
        require_multigraph(f.cod())?;
        let q = set_system::coequalizer(f, g)?;
        require_multigraph(&q.apex)?;
        Ok(Limit {
            apex: q.apex,
            legs: q.legs,
        })
    }

    fn coequalizer_mediator(q: &Limit<Self>, h: &HyperMorphism) -> Result<HyperMorphism> {
        set_system::coequalizer_mediator(&to_hyper(q), h)
    }

    fn terminal() -> SetSystemHypergraph {
        multigraph::del(&set_system::terminal()).obj.into_carrier()
    }
}

/// The category letter used on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum CategoryName {
    Q,
    H,
    M,
    R,
}

impl CategoryName {
    pub fn parse(s: &str) -> Result<CategoryName> {
        match s {
            "Q" | "q" => Ok(CategoryName::Q),
            "H" | "h" => Ok(CategoryName::H),
            "M" | "m" => Ok(CategoryName::M),
            "R" | "r" => Ok(CategoryName::R),
            other => Err(Error::Unknown(other.to_owned())),
        }
    }
}
