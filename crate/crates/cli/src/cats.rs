//! Bridges between documents and the four categories.

use anyhow::{bail, Result};
use graphcat::laws::category::{Hypergraphs, Incidences, Multigraphs, Quivers};
use graphcat::laws::corpus::{self, Tier};
use graphcat::laws::FiniteLimits;
use graphcat::multigraph::Multigraph;

use crate::document::{Morphism, Object};

pub trait Cat: FiniteLimits + Sized {
    fn obj(x: Object) -> Result<Self::Obj>;
    fn wrap(x: Self::Obj) -> Object;
    fn mor(m: Morphism) -> Result<Self::Mor>;
    fn wrap_mor(m: Self::Mor) -> Morphism;
    /// Probe objects for universal-property checks.
    fn probes() -> Vec<Self::Obj>;
}

fn wrong(expected: &str) -> anyhow::Error {
    anyhow::anyhow!("expected a {expected} document for this category")
}

impl Cat for Quivers {
    fn obj(x: Object) -> Result<Self::Obj> {
        match x {
            Object::Quiver(q) => Ok(q),
            _ => Err(wrong("quiver")),
        }
    }

    fn wrap(x: Self::Obj) -> Object {
        Object::Quiver(x)
    }

    fn mor(m: Morphism) -> Result<Self::Mor> {
        match m {
            Morphism::Quiver(f) => Ok(f),
            _ => Err(wrong("quiver morphism")),
        }
    }

    fn wrap_mor(m: Self::Mor) -> Morphism {
        Morphism::Quiver(m)
    }

    fn probes() -> Vec<Self::Obj> {
        corpus::quivers(Tier::SMALL)
    }
}

impl Cat for Hypergraphs {
    fn obj(x: Object) -> Result<Self::Obj> {
        match x {
            Object::Hypergraph(h) => Ok(h),
            _ => Err(wrong("hypergraph")),
        }
    }

    fn wrap(x: Self::Obj) -> Object {
        Object::Hypergraph(x)
    }

    fn mor(m: Morphism) -> Result<Self::Mor> {
        match m {
            Morphism::Hypergraph(f) => Ok(f),
            _ => Err(wrong("hypergraph morphism")),
        }
    }

    fn wrap_mor(m: Self::Mor) -> Morphism {
        Morphism::Hypergraph(m)
    }

    fn probes() -> Vec<Self::Obj> {
        corpus::hypergraphs(Tier::SMALL)
    }
}

impl Cat for Multigraphs {
    fn obj(x: Object) -> Result<Self::Obj> {
        let h = Hypergraphs::obj(x)?;
        if !h.is_multigraph() {
            bail!("not a multigraph: every edge needs one or two endpoints");
        }
        Ok(Multigraph::new(h)?.into_carrier())
    }

    fn wrap(x: Self::Obj) -> Object {
        Object::Hypergraph(x)
    }

    fn mor(m: Morphism) -> Result<Self::Mor> {
        let f = Hypergraphs::mor(m)?;
        Multigraphs::obj(Object::Hypergraph(f.dom().clone()))?;
        Multigraphs::obj(Object::Hypergraph(f.cod().clone()))?;
        Ok(f)
    }

    fn wrap_mor(m: Self::Mor) -> Morphism {
        Morphism::Hypergraph(m)
    }

    fn probes() -> Vec<Self::Obj> {
        corpus::multigraphs(Tier::SMALL)
    }
}

impl Cat for Incidences {
    fn obj(x: Object) -> Result<Self::Obj> {
        match x {
            Object::Incidence(g) => Ok(g),
            _ => Err(wrong("incidence")),
        }
    }

    fn wrap(x: Self::Obj) -> Object {
        Object::Incidence(x)
    }

    fn mor(m: Morphism) -> Result<Self::Mor> {
        match m {
            Morphism::Incidence(f) => Ok(f),
            _ => Err(wrong("incidence morphism")),
        }
    }

    fn wrap_mor(m: Self::Mor) -> Morphism {
        Morphism::Incidence(m)
    }

    fn probes() -> Vec<Self::Obj> {
        corpus::incidence_hypergraphs(Tier::SMALL)
    }
}
