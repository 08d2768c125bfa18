//! Universal properties checked by enumerating every candidate mediating
//! morphism and counting the ones that satisfy the defining equations.

use std::collections::HashMap;

use itertools::Itertools;

use super::category::{CartesianClosed, Category, FiniteLimits};
use super::report::{Evidence, LawReport};
use crate::bounds::Bounds;
use crate::error::{Error, Result};
use crate::finset::{self, Atom};
use crate::set_system::{self, HyperMorphism, SetSystemHypergraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UniversalKind {
    Product,
    Coproduct,
    Equalizer,
    Coequalizer,
    Exponential,
    Terminal,
    Classifier,
}

impl UniversalKind {
    pub const ALL: [UniversalKind; 7] = [
        UniversalKind::Product,
        UniversalKind::Coproduct,
        UniversalKind::Equalizer,
        UniversalKind::Coequalizer,
        UniversalKind::Exponential,
        UniversalKind::Terminal,
        UniversalKind::Classifier,
    ];

    pub fn name(self) -> &'static str {
        match self {
            UniversalKind::Product => "product",
            UniversalKind::Coproduct => "coproduct",
            UniversalKind::Equalizer => "equalizer",
            UniversalKind::Coequalizer => "coequalizer",
            UniversalKind::Exponential => "exponential",
            UniversalKind::Terminal => "terminal",
            UniversalKind::Classifier => "classifier",
        }
    }

    pub fn parse(s: &str) -> Result<UniversalKind> {
        UniversalKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Unknown(s.to_owned()))
    }
}

/// Cones per probe whose constructed mediator is compared with the
/// enumerated one.
const MEDIATOR_SAMPLES: usize = 64;

/// Totals accumulated over all probes.
#[derive(Default)]
struct Totals {
    probes: usize,
    candidates: usize,
    cones: u128,
    constructed: usize,
}

impl Totals {
    fn evidence(&self) -> Vec<Evidence> {
        vec![
            Evidence::count("probe objects", self.probes),
            Evidence::count("candidate mediators enumerated", self.candidates),
            Evidence::count("cones with a unique mediator", self.cones),
            Evidence::count("constructed mediators compared", self.constructed),
        ]
    }
}

/// Groups every candidate by the cone it induces. A failure is returned when
/// two candidates induce the same cone or when fewer than `expected` cones
/// are reached.
fn tally<C: Category>(
    candidates: &[C::Mor],
    induce: impl Fn(&C::Mor) -> Result<Vec<Atom>>,
    expected: u128,
) -> Result<std::result::Result<HashMap<Vec<Atom>, usize>, Evidence>> {
    let mut seen: HashMap<Vec<Atom>, usize> = HashMap::new();
    for (i, m) in candidates.iter().enumerate() {
        let key = induce(m)?;
        if let Some(&j) = seen.get(&key) {
            return Ok(Err(Evidence::note(
                "two mediators for one cone",
                format!("{} and {}", C::mor_atom(&candidates[j]), C::mor_atom(m)),
            )));
        }
        seen.insert(key, i);
    }
    if seen.len() as u128 != expected {
        return Ok(Err(Evidence::note(
            "cones without a mediator",
            format!("{} cones but only {} are reached", expected, seen.len()),
        )));
    }
    Ok(Ok(seen))
}

fn atoms<C: Category>(ms: &[C::Mor]) -> Vec<Atom> {
    ms.iter().map(C::mor_atom).collect()
}

/// Compares a constructed mediator with the unique enumerated one.
fn compare<C: Category>(found: &HashMap<Vec<Atom>, usize>, candidates: &[C::Mor], key: &[Atom], built: &C::Mor) -> Option<Evidence> {
    match found.get(key) {
        Some(&i) if candidates[i] == *built => None,
        _ => Some(Evidence::morphism("constructed mediator differs from the enumerated one", C::mor_atom(built))),
    }
}

fn instance<C: Category>(what: &str, objs: &[C::Obj]) -> String {
    format!("{} of [{}] in {}", what, objs.iter().map(C::describe).join("; "), C::NAME)
}

/// Every cone over `objs` from each probe factors through the constructed
/// product in exactly one way.
pub fn check_product<C: FiniteLimits>(objs: &[C::Obj], probes: &[C::Obj], bounds: &Bounds) -> Result<LawReport> {
    let law = "universal property of the product";
    let inst = instance::<C>("product", objs);
    let p = C::product(objs, bounds)?;
    let mut t = Totals::default();
    for x in probes {
        let candidates = C::homs(x, &p.apex, bounds)?;
        let per_leg: Vec<Vec<C::Mor>> = objs.iter().map(|a| C::homs(x, a, bounds)).collect::<Result<_>>()?;
        let expected: u128 = per_leg.iter().map(|h| h.len() as u128).product();
        let induce = |h: &C::Mor| -> Result<Vec<Atom>> {
            p.legs.iter().map(|l| C::compose(l, h).map(|m| C::mor_atom(&m))).collect()
        };
        let found = match tally::<C>(&candidates, induce, expected)? {
            Ok(f) => f,
            Err(w) => return Ok(LawReport::fails(law, inst, w, t.evidence())),
        };
        for cone in per_leg.iter().map(|h| h.iter()).multi_cartesian_product().take(MEDIATOR_SAMPLES) {
            let cone: Vec<C::Mor> = cone.into_iter().cloned().collect();
            let built = C::product_mediator(&p, &cone)?;
            if let Some(w) = compare::<C>(&found, &candidates, &atoms::<C>(&cone), &built) {
                return Ok(LawReport::fails(law, inst, w, t.evidence()));
            }
            t.constructed += 1;
        }
        t.probes += 1;
        t.candidates += candidates.len();
        t.cones += expected;
    }
    Ok(LawReport::holds(law, inst, t.evidence()))
}

/// Every cocone from `objs` to each probe factors through the constructed
/// coproduct in exactly one way.
pub fn check_coproduct<C: FiniteLimits>(objs: &[C::Obj], probes: &[C::Obj], bounds: &Bounds) -> Result<LawReport> {
    let law = "universal property of the coproduct";
    let inst = instance::<C>("coproduct", objs);
    let c = C::coproduct(objs)?;
    let mut t = Totals::default();
    for y in probes {
        let candidates = C::homs(&c.apex, y, bounds)?;
        let per_leg: Vec<Vec<C::Mor>> = objs.iter().map(|a| C::homs(a, y, bounds)).collect::<Result<_>>()?;
        let expected: u128 = per_leg.iter().map(|h| h.len() as u128).product();
        let induce = |h: &C::Mor| -> Result<Vec<Atom>> {
            c.legs.iter().map(|l| C::compose(h, l).map(|m| C::mor_atom(&m))).collect()
        };
        let found = match tally::<C>(&candidates, induce, expected)? {
            Ok(f) => f,
            Err(w) => return Ok(LawReport::fails(law, inst, w, t.evidence())),
        };
        for cone in per_leg.iter().map(|h| h.iter()).multi_cartesian_product().take(MEDIATOR_SAMPLES) {
            let cone: Vec<C::Mor> = cone.into_iter().cloned().collect();
            let built = C::coproduct_mediator(&c, &cone, y)?;
            if let Some(w) = compare::<C>(&found, &candidates, &atoms::<C>(&cone), &built) {
                return Ok(LawReport::fails(law, inst, w, t.evidence()));
            }
            t.constructed += 1;
        }
        t.probes += 1;
        t.candidates += candidates.len();
        t.cones += expected;
    }
    Ok(LawReport::holds(law, inst, t.evidence()))
}

fn parallel_instance<C: Category>(what: &str, f: &C::Mor, g: &C::Mor) -> String {
    format!(
        "{} of {} and {} from {} to {} in {}",
        what,
        C::mor_atom(f),
        C::mor_atom(g),
        C::describe(C::dom(f)),
        C::describe(C::cod(f)),
        C::NAME
    )
}

/// Every map from a probe that equalizes `f` and `g` factors through the
/// constructed equalizer in exactly one way.
pub fn check_equalizer<C: FiniteLimits>(f: &C::Mor, g: &C::Mor, probes: &[C::Obj], bounds: &Bounds) -> Result<LawReport> {
    let law = "universal property of the equalizer";
    let inst = parallel_instance::<C>("equalizer", f, g);
    let e = C::equalizer(f, g)?;
    let inc = &e.legs[0];
    let mut t = Totals::default();
    if C::compose(f, inc)? != C::compose(g, inc)? {
        let w = Evidence::morphism("inclusion does not equalize", C::mor_atom(inc));
        return Ok(LawReport::fails(law, inst, w, t.evidence()));
    }
    for x in probes {
        let candidates = C::homs(x, &e.apex, bounds)?;
        let equalizing: Vec<C::Mor> = C::homs(x, C::dom(f), bounds)?
            .into_iter()
            .map(|h| Ok((C::compose(f, &h)? == C::compose(g, &h)?).then_some(h)))
            .filter_map(Result::transpose)
            .collect::<Result<_>>()?;
        let induce = |m: &C::Mor| -> Result<Vec<Atom>> { Ok(vec![C::mor_atom(&C::compose(inc, m)?)]) };
        let found = match tally::<C>(&candidates, induce, equalizing.len() as u128)? {
            Ok(f) => f,
            Err(w) => return Ok(LawReport::fails(law, inst, w, t.evidence())),
        };
        for h in equalizing.iter().take(MEDIATOR_SAMPLES) {
            let built = C::equalizer_mediator(&e, h)?;
            if let Some(w) = compare::<C>(&found, &candidates, &[C::mor_atom(h)], &built) {
                return Ok(LawReport::fails(law, inst, w, t.evidence()));
            }
            t.constructed += 1;
        }
        t.probes += 1;
        t.candidates += candidates.len();
        t.cones += equalizing.len() as u128;
    }
    Ok(LawReport::holds(law, inst, t.evidence()))
}

/// Every map to a probe that coequalizes `f` and `g` factors through the
/// constructed coequalizer in exactly one way.
pub fn check_coequalizer<C: FiniteLimits>(f: &C::Mor, g: &C::Mor, probes: &[C::Obj], bounds: &Bounds) -> Result<LawReport> {
    let law = "universal property of the coequalizer";
    let inst = parallel_instance::<C>("coequalizer", f, g);
    let q = C::coequalizer(f, g)?;
    let quo = &q.legs[0];
    let mut t = Totals::default();
    if C::compose(quo, f)? != C::compose(quo, g)? {
        let w = Evidence::morphism("quotient does not coequalize", C::mor_atom(quo));
        return Ok(LawReport::fails(law, inst, w, t.evidence()));
    }
    for y in probes {
        let candidates = C::homs(&q.apex, y, bounds)?;
        let coequalizing: Vec<C::Mor> = C::homs(C::cod(f), y, bounds)?
            .into_iter()
            .map(|h| Ok((C::compose(&h, f)? == C::compose(&h, g)?).then_some(h)))
            .filter_map(Result::transpose)
            .collect::<Result<_>>()?;
        let induce = |m: &C::Mor| -> Result<Vec<Atom>> { Ok(vec![C::mor_atom(&C::compose(m, quo)?)]) };
        let found = match tally::<C>(&candidates, induce, coequalizing.len() as u128)? {
            Ok(f) => f,
            Err(w) => return Ok(LawReport::fails(law, inst, w, t.evidence())),
        };
        for h in coequalizing.iter().take(MEDIATOR_SAMPLES) {
            let built = C::coequalizer_mediator(&q, h)?;
            if let Some(w) = compare::<C>(&found, &candidates, &[C::mor_atom(h)], &built) {
                return Ok(LawReport::fails(law, inst, w, t.evidence()));
            }
            t.constructed += 1;
        }
        t.probes += 1;
        t.candidates += candidates.len();
        t.cones += coequalizing.len() as u128;
    }
    Ok(LawReport::holds(law, inst, t.evidence()))
}

/// Each probe has exactly one map to the terminal object.
pub fn check_terminal<C: FiniteLimits>(probes: &[C::Obj], bounds: &Bounds) -> Result<LawReport> {
    let law = "universal property of the terminal object";
    let one = C::terminal();
    let inst = format!("terminal object {} in {}", C::describe(&one), C::NAME);
    for x in probes {
        let n = C::homs(x, &one, bounds)?.len();
        if n != 1 {
            let w = Evidence::count(format!("maps from {} to the terminal object", C::describe(x)), n);
            return Ok(LawReport::fails(law, inst, w, vec![]));
        }
    }
    Ok(LawReport::holds(law, inst, vec![Evidence::count("probe objects", probes.len())]))
}

/// For each probe `K`, uncurrying is a bijection `Hom(K, R^Q) → Hom(Q×K, R)`
/// inverse to currying, so every map out of `Q×K` has exactly one transpose.
pub fn check_exponential<C: CartesianClosed>(base: &C::Obj, target: &C::Obj, probes: &[C::Obj], bounds: &Bounds) -> Result<LawReport> {
    let law = "universal property of the exponential";
    let inst = format!("exponential with base {} and target {} in {}", C::describe(base), C::describe(target), C::NAME);
    let exp = C::exponential(base, target, bounds)?;
    let mut t = Totals::default();
    let mut evidence = vec![Evidence::object("exponential", C::describe(&exp.obj))];
    for k in probes {
        let prod = C::product(&[base.clone(), k.clone()], bounds)?;
        let maps = C::homs(&prod.apex, target, bounds)?;
        let candidates = C::homs(k, &exp.obj, bounds)?;
        let induce = |g: &C::Mor| -> Result<Vec<Atom>> { Ok(vec![C::mor_atom(&(exp.uncurry)(g)?)]) };
        let found = match tally::<C>(&candidates, induce, maps.len() as u128)? {
            Ok(f) => f,
            Err(w) => {
                evidence.extend(t.evidence());
                return Ok(LawReport::fails(law, inst, w, evidence));
            }
        };
        for psi in &maps {
            let built = (exp.curry)(k, psi)?;
            if let Some(w) = compare::<C>(&found, &candidates, &[C::mor_atom(psi)], &built) {
                evidence.extend(t.evidence());
                return Ok(LawReport::fails(law, inst, w, evidence));
            }
            t.constructed += 1;
        }
        for g in &candidates {
            if (exp.curry)(k, &(exp.uncurry)(g)?)? != *g {
                evidence.extend(t.evidence());
                let w = Evidence::morphism("currying the uncurried map changes it", C::mor_atom(g));
                return Ok(LawReport::fails(law, inst, w, evidence));
            }
        }
        t.probes += 1;
        t.candidates += candidates.len();
        t.cones += maps.len() as u128;
    }
    evidence.extend(t.evidence());
    Ok(LawReport::holds(law, inst, evidence))
}

/// Vertex and edge images of a mono, which determine it as a subobject.
fn subobject_key(m: &HyperMorphism) -> (Vec<usize>, Vec<usize>) {
    let img = |t: &[usize]| {
        let mut v = t.to_vec();
        v.sort_unstable();
        v
    };
    (img(m.fv().table()), img(m.fe().table()))
}

/// Inclusions of all subobjects of `k`: a vertex subset with a subset of the
/// edges whose endpoints it contains.
pub fn subobjects(k: &SetSystemHypergraph) -> Vec<HyperMorphism> {
    let mut out = Vec::new();
    let nv = k.vertices().len();
    for vmask in 0..1u64 << nv {
        let keep_v: Vec<usize> = (0..nv).filter(|&w| vmask >> w & 1 == 1).collect();
        let allowed: Vec<usize> = (0..k.edges().len())
            .filter(|&e| k.ends(e).iter().all(|&w| vmask >> w & 1 == 1))
            .collect();
        for emask in 0..1u64 << allowed.len() {
            let keep_e: Vec<usize> = (0..allowed.len()).filter(|&b| emask >> b & 1 == 1).map(|b| allowed[b]).collect();
            let v = finset::FiniteSet::collect(keep_v.iter().map(|&w| k.vertices().get(w).clone()));
            let e = finset::FiniteSet::collect(keep_e.iter().map(|&x| k.edges().get(x).clone()));
            let ends = keep_e
                .iter()
                .map(|&x| k.ends(x).iter().map(|&w| keep_v.binary_search(&w).expect("kept")).collect())
                .collect();
            let s = SetSystemHypergraph::from_endpoints(v, e, ends).expect("sub-hypergraph");
            let fv = finset::FiniteFunction::from_indices(s.vertices().clone(), k.vertices().clone(), keep_v.clone())
                .expect("inclusion");
            let fe = finset::FiniteFunction::from_indices(s.edges().clone(), k.edges().clone(), keep_e).expect("inclusion");
            out.push(HyperMorphism::new(s, k.clone(), fv, fe).expect("inclusion is a morphism"));
        }
    }
    out
}

/// Subobjects of `k` keyed by image, each with the maps `k → 1̃` whose
/// pullback of the embedding `1 → 1̃` yields it.
fn classified_subobjects(
    k: &SetSystemHypergraph,
    bounds: &Bounds,
) -> Result<HashMap<(Vec<usize>, Vec<usize>), Vec<HyperMorphism>>> {
    let rep = set_system::partial_morphism_representer(&set_system::terminal(), bounds)?;
    let mut out: HashMap<_, Vec<HyperMorphism>> = HashMap::new();
    for chi in set_system::homs(k, &rep.obj, bounds)? {
        let pb = set_system::pullback(&chi, &rep.embedding, bounds)?;
        out.entry(subobject_key(&pb.legs[0])).or_default().push(chi);
    }
    Ok(out)
}

/// The partial morphism representer of the terminal object classifies
/// subobjects: for every subobject of every given object, the classifying
/// map is the only map whose pullback of the embedding recovers it.
pub fn check_classifier(objs: &[SetSystemHypergraph], bounds: &Bounds) -> Result<LawReport> {
    let law = "subobject classifier";
    let inst = format!("classifier over all subobjects of {} set-system hypergraphs", objs.len());
    let mut monos = 0usize;
    let mut maps = 0usize;
    for k in objs {
        let table = classified_subobjects(k, bounds)?;
        let subs = subobjects(k);
        maps += table.values().map(Vec::len).sum::<usize>();
        for phi in &subs {
            if let Some(w) = classifier_failure(phi, &table, bounds)? {
                return Ok(LawReport::fails(law, inst, w, vec![Evidence::object("object", k.summary())]));
            }
        }
        if table.len() != subs.len() {
            let w = Evidence::count(format!("pullbacks that are not subobjects of {}", k.summary()), table.len().abs_diff(subs.len()));
            return Ok(LawReport::fails(law, inst, w, vec![]));
        }
        monos += subs.len();
    }
    Ok(LawReport::holds(
        law,
        inst,
        vec![
            Evidence::count("subobjects classified", monos),
            Evidence::count("maps into the classifier enumerated", maps),
        ],
    ))
}

/// The same check for one mono.
pub fn check_classifier_mono(phi: &HyperMorphism, bounds: &Bounds) -> Result<LawReport> {
    let law = "subobject classifier";
    let inst = format!("mono {} into {}", phi.to_atom(), phi.cod().summary());
    let table = classified_subobjects(phi.cod(), bounds)?;
    let maps = table.values().map(Vec::len).sum::<usize>();
    let evidence = vec![Evidence::count("maps into the classifier enumerated", maps)];
    Ok(LawReport::from_check(law, inst, classifier_failure(phi, &table, bounds)?, evidence))
}

fn classifier_failure(
    phi: &HyperMorphism,
    table: &HashMap<(Vec<usize>, Vec<usize>), Vec<HyperMorphism>>,
    bounds: &Bounds,
) -> Result<Option<Evidence>> {
    let chi = set_system::classify_partial_morphism(phi, &set_system::to_terminal(phi.dom()), bounds)?;
    Ok(match table.get(&subobject_key(phi)).map(Vec::as_slice) {
        Some([only]) if *only == chi => None,
        Some([only]) => Some(Evidence::morphism("classifying map differs from the recovering one", only.to_atom())),
        Some(many) => Some(Evidence::count(format!("maps recovering {}", phi.to_atom()), many.len())),
        None => Some(Evidence::morphism("no map recovers the subobject", phi.to_atom())),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laws::category::{Hypergraphs, Incidences, Multigraphs, Quivers};
    use crate::laws::corpus::{self, Tier};
    use crate::{incidence, quiver};

    fn b() -> Bounds {
        Bounds::default()
    }

    #[test]
    fn hypergraph_product_of_paths() {
        let p = set_system::p1();
        let probes = corpus::hypergraphs(Tier::SMALL);
        let r = check_product::<Hypergraphs>(&[p.clone(), p], &probes, &b()).unwrap();
        assert!(r.passed(), "{}", r.to_json());
    }

    #[test]
    fn quiver_limits_and_colimits() {
        let probes = corpus::quivers(Tier::SMALL);
        let p = quiver::path1();
        let l = quiver::edge_star(&finset::FiniteSet::range(2));
        assert!(check_product::<Quivers>(&[p.clone(), l.clone()], &probes, &b()).unwrap().passed());
        assert!(check_coproduct::<Quivers>(&[p.clone(), l.clone()], &probes, &b()).unwrap().passed());
        assert!(check_terminal::<Quivers>(&probes, &b()).unwrap().passed());
        let homs = crate::presheaf::homs(&p, &l, &b()).unwrap();
        for f in &homs {
            for g in &homs {
                assert!(check_equalizer::<Quivers>(f, g, &probes, &b()).unwrap().passed());
                assert!(check_coequalizer::<Quivers>(f, g, &probes, &b()).unwrap().passed());
            }
        }
    }

    #[test]
    fn multigraph_product_is_the_deleted_one() {
        let p = set_system::p1();
        let probes = corpus::multigraphs(Tier::SMALL);
        let r = check_product::<Multigraphs>(&[p.clone(), p], &probes, &b()).unwrap();
        assert!(r.passed(), "{}", r.to_json());
        assert!(check_terminal::<Multigraphs>(&probes, &b()).unwrap().passed());
    }

    #[test]
    fn incidence_exponential_of_the_two_cycle() {
        let u = incidence::upsilon(&quiver::path1());
        let probes = corpus::incidence_hypergraphs(Tier { vertices: 1, edges: 1, incidences: 2 });
        let r = check_exponential::<Incidences>(&u, &u, &probes, &b()).unwrap();
        assert!(r.passed(), "{}", r.to_json());
    }

    #[test]
    fn classifier_on_small_hypergraphs() {
        let r = check_classifier(&corpus::hypergraphs(Tier::SMALL), &b()).unwrap();
        assert!(r.passed(), "{}", r.to_json());
    }

    #[test]
    fn a_wrong_apex_is_caught() {
        // the coproduct apex offered as a product has too many maps into it
        let p = set_system::p1();
        let c = set_system::coproduct(&[p.clone(), p.clone()]);
        let fake_legs = vec![
            set_system::first_hom(&c.apex, &p).unwrap(),
            set_system::first_hom(&c.apex, &p).unwrap(),
        ];
        let cands = set_system::homs(&p, &c.apex, &b()).unwrap();
        let induce = |h: &HyperMorphism| -> Result<Vec<Atom>> {
            fake_legs.iter().map(|l| l.after(h).map(|m| m.to_atom())).collect()
        };
        let expected = set_system::hom_count(&p, &p).pow(2);
        assert!(tally::<Hypergraphs>(&cands, induce, expected).unwrap().is_err());
    }
}
