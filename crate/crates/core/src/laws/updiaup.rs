//! The explicit isomorphisms `Υ◇Υ(Q) ≅ Q × P→₁` and `Υ★Υ(Q) ≅ Q^{P→₁}`,
//! with naturality checked against sampled quiver morphisms.

use super::report::{Evidence, LawReport};
use crate::bounds::Bounds;
use crate::error::Result;
use crate::finset::{self, FiniteFunction};
use crate::incidence::{upsilon, upsilon_diamond, upsilon_diamond_map, upsilon_map, upsilon_star, upsilon_star_map};
use crate::presheaf::{self, Cone, PresheafMorphism};
use crate::quiver::{exponential, pair_lookup, path1, Quiver, QuiverExponential, QuiverMorphism, QuiverShape};

/// Maps per target quiver used for the naturality squares.
const NATURALITY_MAPS: usize = 3;

/// Source and target vertex indices of the single edge of `P→₁`.
fn path_ends() -> (usize, usize) {
    let p = path1();
    (p.src().at(0), p.tgt().at(0))
}

/// `(n, v) ↦ (v, end n)` on vertices and `e ↦ (e, 1)` on edges.
pub fn diamond_iso(q: &Quiver, cone: &Cone<QuiverShape>) -> Result<QuiverMorphism> {
    let dom = upsilon_diamond(&upsilon(q));
    let (s, t) = path_ends();
    let vpair = pair_lookup(cone.legs[0].fv(), cone.legs[1].fv());
    let epair = pair_lookup(cone.legs[0].fe(), cone.legs[1].fe());
    let (_, inj) = finset::coproduct_set(&[q.vertices().clone(), q.vertices().clone()]);
    let mut vt = vec![0; dom.vertices().len()];
    for (n, end) in [s, t].into_iter().enumerate() {
        for v in 0..q.vertices().len() {
            vt[inj[n].at(v)] = vpair[&(v, end)];
        }
    }
    let et = (0..q.edges().len()).map(|e| epair[&(e, 0)]).collect();
    PresheafMorphism::new(
        dom.clone(),
        cone.apex.clone(),
        vec![
            FiniteFunction::from_indices(dom.vertices().clone(), cone.apex.vertices().clone(), vt)?,
            FiniteFunction::from_indices(dom.edges().clone(), cone.apex.edges().clone(), et)?,
        ],
    )
}

/// `(a, b) ↦ (s ↦ a, t ↦ b)` on vertices and `(v, e, w)` to the incidence
/// morphism `Υ(P→₁) → Υ(Q)` with vertex part `(src e, w)`, edge part
/// `(v, tgt e)` and incidence part `e`.
pub fn star_iso(q: &Quiver, exp: &QuiverExponential, bounds: &Bounds) -> Result<QuiverMorphism> {
    let uq = upsilon(q);
    let dom = upsilon_star(&uq, bounds)?;
    let p = path1();
    let up = upsilon(&p);
    let (s, t) = path_ends();
    let ends = |a: usize, b: usize| {
        let mut table = vec![0; 2];
        table[s] = a;
        table[t] = b;
        table
    };
    let qv = q.vertices();
    let (_, vp) = finset::product_set(&[qv.clone(), qv.clone()]);
    let vt = (0..dom.vertices().len())
        .map(|x| {
            let f = FiniteFunction::from_indices(p.vertices().clone(), qv.clone(), ends(vp[0].at(x), vp[1].at(x)))?;
            exp.obj.vertices().require(&f.to_atom(), "the exponential vertices")
        })
        .collect::<Result<Vec<_>>>()?;
    let (_, ep) = finset::product_set(&[qv.clone(), q.edges().clone(), qv.clone()]);
    let et = (0..dom.edges().len())
        .map(|x| {
            let (v, e, w) = (ep[0].at(x), ep[1].at(x), ep[2].at(x));
            let h = PresheafMorphism::new(
                up.clone(),
                uq.clone(),
                vec![
                    FiniteFunction::from_indices(up.vertices().clone(), qv.clone(), ends(q.src().at(e), w))?,
                    FiniteFunction::from_indices(up.edges().clone(), qv.clone(), ends(v, q.tgt().at(e)))?,
                    FiniteFunction::from_indices(up.incidences().clone(), q.edges().clone(), vec![e])?,
                ],
            )?;
            exp.obj.edges().require(&h.to_atom(), "the exponential edges")
        })
        .collect::<Result<Vec<_>>>()?;
    PresheafMorphism::new(
        dom.clone(),
        exp.obj.clone(),
        vec![
            FiniteFunction::from_indices(dom.vertices().clone(), exp.obj.vertices().clone(), vt)?,
            FiniteFunction::from_indices(dom.edges().clone(), exp.obj.edges().clone(), et)?,
        ],
    )
}

struct Side {
    diamond_cone: Cone<QuiverShape>,
    diamond: QuiverMorphism,
    exp: QuiverExponential,
    star: QuiverMorphism,
}

fn side(q: &Quiver, bounds: &Bounds) -> Result<Side> {
    let diamond_cone = presheaf::product(&[q.clone(), path1()]);
    let diamond = diamond_iso(q, &diamond_cone)?;
    let exp = exponential(&path1(), q, bounds)?;
    let star = star_iso(q, &exp, bounds)?;
    Ok(Side {
        diamond_cone,
        diamond,
        exp,
        star,
    })
}

/// The first failing square for `f: Q → Q′`, if any.
fn square(f: &QuiverMorphism, a: &Side, b: &Side, bounds: &Bounds) -> Result<Option<Evidence>> {
    let uf = upsilon_map(f);
    let left = b.diamond.after(&upsilon_diamond_map(&uf))?;
    let fp = presheaf::product_morphism(&a.diamond_cone, &b.diamond_cone, &[f.clone(), PresheafMorphism::identity(&path1())])?;
    if left != fp.after(&a.diamond)? {
        return Ok(Some(Evidence::morphism("diamond square fails for", f.to_atom())));
    }
    let left = b.star.after(&upsilon_star_map(&uf, bounds)?)?;
    let fexp = b.exp.curry(&a.exp.obj, &f.after(&a.exp.eval)?)?;
    if left != fexp.after(&a.star)? {
        return Ok(Some(Evidence::morphism("star square fails for", f.to_atom())));
    }
    Ok(None)
}

/// Builds both isomorphisms for `q` and checks their naturality along up
/// to `NATURALITY_MAPS` morphisms from `q` into the `targets`, plus the
/// identity.
pub fn check_updiaup(q: &Quiver, targets: &[Quiver], bounds: &Bounds) -> Result<LawReport> {
    const LAW: &str = "upsilon diamond and star of upsilon are the product with and exponential by P1";
    let instance = q.summary();
    let a = side(q, bounds)?;
    let mut evidence = vec![
        Evidence::morphism("diamond isomorphism", a.diamond.to_atom()),
        Evidence::morphism("star isomorphism", a.star.to_atom()),
    ];
    for (label, m) in [("diamond map", &a.diamond), ("star map", &a.star)] {
        if !m.is_iso() {
            let w = Evidence::note(format!("{label} is not invertible"), m.to_atom().to_string());
            return Ok(LawReport::fails(LAW, instance, w, evidence));
        }
    }
    let mut maps = vec![PresheafMorphism::identity(q)];
    maps.extend(targets.iter().filter_map(|t| presheaf::first_hom(q, t)).take(NATURALITY_MAPS));
    for f in &maps {
        let b = if f.cod() == q { None } else { Some(side(f.cod(), bounds)?) };
        if let Some(w) = square(f, &a, b.as_ref().unwrap_or(&a), bounds)? {
            return Ok(LawReport::fails(LAW, instance, w, evidence));
        }
    }
    evidence.push(Evidence::count("naturality squares", 2 * maps.len()));
    Ok(LawReport::holds(LAW, instance, evidence))
}
