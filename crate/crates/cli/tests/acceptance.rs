//! Acceptance run: one PASS or FAIL line per criterion.

use std::process::{Command, ExitCode};
use std::time::Instant;

use graphcat::incidence;
use graphcat::laws::adjunction::{self, Samples, ADJUNCTIONS};
use graphcat::laws::category::{Hypergraphs, Incidences, Quivers};
use graphcat::laws::corpus::{self, Tier};
use graphcat::laws::counterexamples::{run_counterexample, COUNTEREXAMPLES};
use graphcat::laws::frobenius::{self, FrobeniusName};
use graphcat::laws::universal::{self, check_classifier, check_classifier_mono, check_exponential};
use graphcat::laws::updiaup::check_updiaup;
use graphcat::laws::{FiniteLimits, LawReport, Verdict};
use graphcat::multigraph::{self, Multigraph};
use graphcat::presheaf::{self, PresheafMorphism};
use graphcat::quiver::{self, Quiver};
use graphcat::set_system::{self, SetSystemHypergraph};
use graphcat::{Bounds, FiniteSet};

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn holds(r: graphcat::Result<LawReport>) -> Result<LawReport, String> {
    let r = r.map_err(|e| e.to_string())?;
    ensure(r.verdict == Verdict::Holds, || r.to_json())?;
    Ok(r)
}

fn b() -> Bounds {
    Bounds::default()
}

fn quiver_product() -> Outcome {
    let p = quiver::path1();
    let prod = presheaf::product(&[p.clone(), p]).apex;
    let sizes = (prod.vertices().len(), prod.edges().len());
    ensure(sizes == (4, 1), || format!("got {sizes:?}"))?;
    Ok("P1 x P1 has 4 vertices and 1 edge".into())
}

fn quiver_exponential() -> Outcome {
    let p = quiver::path1();
    let exp = quiver::exponential(&p, &p, &b()).map_err(|e| e.to_string())?;
    let sizes = (exp.obj.vertices().len(), exp.obj.edges().len());
    ensure(sizes == (4, 4), || format!("got {sizes:?}"))?;
    let listed = Quiver::from_edges(
        &["f1", "f2", "f3", "f4"],
        &[("a", "f1", "f2"), ("b", "f1", "f4"), ("c", "f2", "f4"), ("d", "f2", "f2")],
    )
    .map_err(|e| e.to_string())?;
    ensure(presheaf::find_iso(&exp.obj, &listed).is_some(), || format!("{} is not the listed edge set", exp.obj.summary()))?;
    let classical = quiver::classical_exponential(&p, &p, &b()).map_err(|e| e.to_string())?;
    ensure(presheaf::find_iso(&exp.obj, &classical).is_some(), || {
        format!("classical exponential {} differs", classical.summary())
    })?;
    Ok("4 vertices, 4 edges, iso to the listed quiver and to the classical exponential".into())
}

fn currying() -> Outcome {
    let qs = corpus::quivers(Tier::SMALL);
    let targets = corpus::quivers(Tier::FULL);
    let mut n = 0;
    for q in &qs {
        for r in &targets {
            holds(check_exponential::<Quivers>(q, r, &qs, &b()))?;
            n += qs.len();
        }
    }
    let gs = corpus::incidence_hypergraphs(Tier::SMALL);
    let mut m = 0;
    for g in &gs {
        for h in &gs {
            holds(check_exponential::<Incidences>(g, h, &gs, &b()))?;
            m += gs.len();
        }
    }
    Ok(format!("{n} quiver triples, {m} incidence triples"))
}

/// Edges of a binary product in set-system hypergraphs: a subset of
/// `V × V'` together with an edge of each factor, whose two projections are
/// the endpoint sets of those edges.
fn hyper_product_edge_oracle(a: &SetSystemHypergraph, c: &SetSystemHypergraph) -> usize {
    let (na, nc) = (a.vertices().len(), c.vertices().len());
    let cells = na * nc;
    let mut n = 0;
    for mask in 0u64..1 << cells {
        let mut left = vec![false; na];
        let mut right = vec![false; nc];
        for x in 0..cells {
            if mask >> x & 1 == 1 {
                left[x / nc] = true;
                right[x % nc] = true;
            }
        }
        let to_set = |flags: &[bool]| -> Vec<usize> { (0..flags.len()).filter(|&i| flags[i]).collect() };
        let (l, r) = (to_set(&left), to_set(&right));
        for e in 0..a.edges().len() {
            for f in 0..c.edges().len() {
                if a.ends(e) == l.as_slice() && c.ends(f) == r.as_slice() {
                    n += 1;
                }
            }
        }
    }
    n
}

fn hypergraph_product() -> Outcome {
    let p = set_system::p1();
    let expected = hyper_product_edge_oracle(&p, &p);
    let prod = Hypergraphs::product(&[p.clone(), p], &b()).map_err(|e| e.to_string())?.apex;
    ensure(prod.edges().len() == expected, || format!("{} edges, oracle says {expected}", prod.edges().len()))?;
    let del = multigraph::del(&prod).obj.into_carrier();
    ensure(del.edges().len() == 2, || format!("Del has {} edges", del.edges().len()))?;
    let full = corpus::hypergraphs(Tier::FULL);
    for x in &full {
        for y in &full {
            let got = Hypergraphs::product(&[x.clone(), y.clone()], &b()).map_err(|e| e.to_string())?.apex.edges().len();
            let want = hyper_product_edge_oracle(x, y);
            ensure(got == want, || format!("{} x {}: {got} edges, oracle says {want}", x.summary(), y.summary()))?;
        }
    }
    Ok(format!("{expected} edges (oracle), Del keeps 2; {} corpus pairs agree", full.len() * full.len()))
}

fn counterexamples() -> Outcome {
    for name in COUNTEREXAMPLES {
        let r = run_counterexample(name).map_err(|e| e.to_string())?;
        ensure(r.verdict == Verdict::WitnessFound, || format!("{name}: {}", r.to_json()))?;
    }
    Ok(format!("{} witnesses", COUNTEREXAMPLES.len()))
}

fn updiaup() -> Outcome {
    let targets = corpus::quivers(Tier::SMALL);
    let qs = corpus::quivers(Tier::FULL);
    for q in &qs {
        holds(check_updiaup(q, &targets, &b()))?;
    }
    Ok(format!("{} quivers", qs.len()))
}

fn incidence_exponential() -> Outcome {
    let gs = corpus::incidence_hypergraphs(Tier::FULL);
    let mut pairs = 0;
    for g in &gs {
        for h in &gs {
            let exp = incidence::exponential(g, h, &b()).map_err(|e| e.to_string())?;
            let homs = presheaf::homs(g, h, &b()).map_err(|e| e.to_string())?;
            let atoms: Vec<_> = homs.iter().map(PresheafMorphism::to_atom).collect();
            let inc = exp.obj.incidences();
            ensure(inc.len() == homs.len(), || format!("{} versus {} homs for {} and {}", inc.len(), homs.len(), g.summary(), h.summary()))?;
            ensure(atoms.iter().all(|a| inc.contains(a)), || format!("incidence atoms differ for {} and {}", g.summary(), h.summary()))?;
            for (i, m) in exp.incidence_maps.iter().enumerate() {
                ensure(&m.to_atom() == inc.get(i), || format!("incidence {} carries another map", inc.get(i)))?;
            }
            pairs += 1;
        }
    }
    let u = incidence::upsilon(&quiver::path1());
    let self_exp = incidence::exponential(&u, &u, &b()).map_err(|e| e.to_string())?;
    let n = self_exp.obj.incidences().len();
    ensure(n == 4, || format!("Υ(P1) self-exponential has {n} incidences"))?;
    Ok(format!("{pairs} pairs agree; Υ(P1)^Υ(P1) has 4 incidences"))
}

fn classifier() -> Outcome {
    let hs = corpus::hypergraphs(Tier::FULL);
    holds(check_classifier(&hs, &b()))?;
    let mut monos = 0;
    for a in &hs {
        for k in &hs {
            for m in set_system::homs(a, k, &b()).map_err(|e| e.to_string())? {
                if m.is_mono() {
                    holds(check_classifier_mono(&m, &b()))?;
                    monos += 1;
                }
            }
        }
    }
    Ok(format!("all subobjects of {} objects, {monos} monos between them", hs.len()))
}

fn adjunctions() -> Outcome {
    let s = Samples::corpus(Tier::SMALL);
    for name in ADJUNCTIONS {
        holds(adjunction::check_adjunction(name, &s, &b()))?;
    }
    holds(adjunction::check_edge_diamond_count(&s.sets, &s.quivers, &b()))?;
    holds(adjunction::check_edge_star_round_trip(&s.sets, &s.hypergraphs, &b()))?;
    holds(adjunction::check_assoc_round_trip(&s.quivers, &s.multigraphs, &b()))?;
    Ok(format!("{} adjunctions and 3 spot identities", ADJUNCTIONS.len()))
}

fn frobenius() -> Outcome {
    let gs = corpus::incidence_hypergraphs(Tier::FULL);
    let sets = [FiniteSet::empty(), FiniteSet::one(), FiniteSet::range(2)];
    for g in &gs {
        for s in &sets {
            for name in [FrobeniusName::PhiV, FrobeniusName::PhiE] {
                let (m, r) = frobenius::frobenius_set_side(name, g, s, &b()).map_err(|e| e.to_string())?;
                ensure(r.verdict == Verdict::Holds && m.is_iso(), || r.to_json())?;
            }
        }
    }
    for q in &corpus::quivers(Tier::SMALL) {
        for g in &gs {
            let (m, r) = frobenius::frobenius_upsilon(q, g).map_err(|e| e.to_string())?;
            ensure(r.verdict == Verdict::Holds && m.is_iso(), || r.to_json())?;
        }
    }
    let (g, s) = frobenius::phi_i_instance();
    let (m, r) = frobenius::frobenius_set_side(FrobeniusName::PhiI, &g, &s, &b()).map_err(|e| e.to_string())?;
    ensure(r.verdict == Verdict::WitnessFound && !m.is_mono(), || r.to_json())?;
    ensure(frobenius::collision_witness(&m).is_some(), || "no collision witness".into())?;
    Ok("phi_V, phi_E, phi_upsilon invertible; phi_I collides at (I★([2]), [2])".into())
}

/// An epi is coessential when no proper subobject of its domain still maps
/// onto the codomain.
fn coessential_oracle(phi: &set_system::HyperMorphism) -> bool {
    phi.is_epi()
        && universal::subobjects(phi.dom())
            .iter()
            .all(|m| m.is_iso() || !phi.after(m).expect("composable").is_epi())
}

/// Projective exactly when every epi onto it from a larger corpus splits.
fn projective_oracle(p: &SetSystemHypergraph, sources: &[SetSystemHypergraph]) -> Result<bool, String> {
    for a in sources {
        for q in set_system::homs(a, p, &b()).map_err(|e| e.to_string())? {
            if !q.is_epi() {
                continue;
            }
            let splits = set_system::homs(p, a, &b())
                .map_err(|e| e.to_string())?
                .iter()
                .any(|s| q.after(s).map(|c| c == set_system::HyperMorphism::identity(p)).unwrap_or(false));
            if !splits {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn projective_cover() -> Outcome {
    let ms = corpus::multigraphs(Tier::FULL);
    for g in &ms {
        let m = Multigraph::new(g.clone()).map_err(|e| e.to_string())?;
        let cover = multigraph::projective_cover(&m);
        let flags = set_system::classify_morphism(&cover);
        ensure(flags.coessential_epi, || format!("cover of {} is not coessential", g.summary()))?;
        ensure(coessential_oracle(&cover), || format!("oracle rejects the cover of {}", g.summary()))?;
        ensure(multigraph::is_projective_multigraph(&multigraph::explosion(&m)), || {
            format!("explosion of {} is not projective", g.summary())
        })?;
    }
    let small = corpus::hypergraphs(Tier::SMALL);
    let sources = corpus::hypergraphs(Tier::FULL);
    for p in &small {
        let flag = set_system::is_projective_object(p);
        let empty_edges = (0..p.edges().len()).all(|e| p.ends(e).is_empty());
        ensure(flag == empty_edges, || format!("flag disagrees with empty edges on {}", p.summary()))?;
        let lifted = projective_oracle(p, &sources)?;
        ensure(flag == lifted, || format!("flag {flag} but lifting oracle {lifted} on {}", p.summary()))?;
    }
    Ok(format!("{} multigraph covers; {} hypergraph flags match the lifting oracle", ms.len(), small.len()))
}

fn fixture(name: &str) -> String {
    format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn determinism() -> Outcome {
    let (p, lp, i2, a, c) = (fixture("p1.json"), fixture("loop.json"), fixture("i_star2.json"), fixture("alpha.json"), fixture("beta.json"));
    let h = fixture("h_p1.json");
    let runs: Vec<Vec<&str>> = vec![
        vec!["-c", "Q", "make", "path1"],
        vec!["-c", "H", "make", "vertex_star", "--set", "a,b"],
        vec!["limit", "product", &p, &p],
        vec!["limit", "product", &h, &h],
        vec!["-c", "M", "limit", "product", &h, &h],
        vec!["limit", "terminal", "-c", "R"],
        vec!["colimit", "coproduct", &p, &lp],
        vec!["colimit", "coequalizer", &a, &c],
        vec!["limit", "equalizer", &a, &c],
        vec!["exponential", &p, &p],
        vec!["exponential", &i2, &i2],
        vec!["functor", "upsilon-star", &i2],
        vec!["functor", "projective-cover", &h],
        vec!["hom", "--list", &p, &lp],
        vec!["iso", &p, &p],
        vec!["check", "law", "product", &p, &p],
        vec!["check", "counterexample", "topos_fail"],
        vec!["check", "adjunction", "upsilon"],
        vec!["check", "frobenius", "phi_I"],
        vec!["check", "updiaup", &p],
        vec!["dot", "--view", "bipartite", &h],
    ];
    for args in &runs {
        let go = || Command::new(env!("CARGO_BIN_EXE_graphcat")).args(args).output().map_err(|e| e.to_string());
        let (x, y) = (go()?, go()?);
        ensure(x.status.success(), || format!("{args:?} failed: {}", String::from_utf8_lossy(&x.stderr)))?;
        ensure(x.stdout == y.stdout && x.status.code() == y.status.code(), || format!("{args:?} differs between runs"))?;
    }
    Ok(format!("{} commands byte-identical across two runs", runs.len()))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 12] = [
        ("quiver product P1 x P1", quiver_product),
        ("quiver exponential P1^P1", quiver_exponential),
        ("currying bijections", currying),
        ("hypergraph product oracle", hypergraph_product),
        ("counterexamples", counterexamples),
        ("upsilon diamond and star of upsilon", updiaup),
        ("incidence exponential incidences", incidence_exponential),
        ("subobject classifier", classifier),
        ("adjunction registry", adjunctions),
        ("frobenius verdicts", frobenius),
        ("multigraph projective cover", projective_cover),
        ("determinism", determinism),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} ({secs:.1}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why} ({secs:.1}s)", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
