//! `graphcat`: build, transform, compare and check finite graph-like objects.
//!
//! Exit status: 0 on success or a passing check, 1 on a failing check or a
//! missing isomorphism, 2 on usage, document or bound errors.

mod cats;
mod document;
mod dot;

use std::io::Read;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use graphcat::incidence::{self, StandardIncidence};
use graphcat::laws::adjunction::{check_adjunction, Samples, ADJUNCTIONS};
use graphcat::laws::category::{CartesianClosed, Hypergraphs, Incidences, Multigraphs, Quivers};
use graphcat::laws::corpus::{self, Tier};
use graphcat::laws::counterexamples::{run_counterexample, COUNTEREXAMPLES};
use graphcat::laws::frobenius::{frobenius_set_side, frobenius_upsilon, phi_i_instance, FrobeniusName};
use graphcat::laws::universal::{self, UniversalKind};
use graphcat::laws::updiaup::check_updiaup;
use graphcat::laws::{CategoryName, Evidence, LawReport};
use graphcat::multigraph::{self, Multigraph};
use graphcat::quiver::StandardQuiver;
use graphcat::set_system::StandardHypergraph;
use graphcat::{Atom, Bounds, FiniteSet};

use cats::Cat;
use document::{Document, Morphism, Object};

#[derive(Parser)]
#[command(name = "graphcat", version, about = "Finite quivers, hypergraphs, multigraphs and incidence hypergraphs")]
struct Cli {
    /// Category: Q quivers, H set-system hypergraphs, M multigraphs, R incidence hypergraphs.
    /// Inferred from the input documents when omitted.
    #[arg(short = 'c', long = "category", global = true, value_parser = parse_category)]
    category: Option<CategoryName>,
    /// One limit for function spaces, hom listings and power sets (power sets up to log2 N elements).
    #[arg(long, global = true)]
    bound: Option<u128>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a standard object on a set of atoms.
    Make {
        name: String,
        /// Comma-separated atoms; defaults to {1}.
        #[arg(long, value_delimiter = ',')]
        set: Vec<String>,
    },
    /// Apply a functor to an object or morphism document.
    Functor { name: FunctorName, input: String },
    /// Product, equalizer or terminal object.
    Limit { kind: LimitKind, inputs: Vec<String> },
    /// Coproduct or coequalizer.
    Colimit { kind: ColimitKind, inputs: Vec<String> },
    /// Exponential `target^base` of quivers or incidence hypergraphs.
    Exponential { base: String, target: String },
    /// Count (and optionally list) the morphisms between two objects.
    Hom {
        dom: String,
        cod: String,
        #[arg(long)]
        list: bool,
    },
    /// Find an isomorphism between two objects.
    Iso { a: String, b: String },
    /// Run a check and print its report.
    Check {
        #[command(subcommand)]
        check: Check,
    },
    /// Render an object as Graphviz DOT.
    Dot {
        input: String,
        #[arg(long, value_enum, default_value = "plain")]
        view: dot::View,
    },
}

#[derive(Subcommand)]
enum Check {
    /// Universal property by enumeration of mediating morphisms.
    Law { kind: String, inputs: Vec<String> },
    /// One of the built-in counterexamples.
    Counterexample { name: String },
    /// A registered adjunction over the sample corpus.
    Adjunction {
        name: String,
        #[arg(long, value_enum, default_value = "small")]
        tier: TierName,
    },
    /// Frobenius morphism: phi_V, phi_E, phi_I or phi_upsilon.
    Frobenius {
        name: String,
        inputs: Vec<String>,
        #[arg(long, value_delimiter = ',')]
        set: Vec<String>,
    },
    /// The diamond and star isomorphisms of a quiver, with naturality.
    Updiaup { input: String },
}

#[derive(Clone, Copy, ValueEnum)]
enum TierName {
    Small,
    Full,
}

#[derive(Clone, Copy, ValueEnum)]
enum LimitKind {
    Product,
    Equalizer,
    Terminal,
}

#[derive(Clone, Copy, ValueEnum)]
enum ColimitKind {
    Coproduct,
    Coequalizer,
}

#[derive(Clone, Copy, ValueEnum)]
#[value(rename_all = "kebab-case")]
enum FunctorName {
    /// Q → R: edges become incidences.
    Upsilon,
    /// R → Q: bipartite incidence digraph.
    UpsilonDiamond,
    /// R → Q: looped incidence-matrix quiver.
    UpsilonStar,
    /// H → R.
    IncidenceForming,
    /// R → H, objects only.
    ForgetIncidence,
    /// H → M: delete edges with no or more than two endpoints.
    Del,
    /// Q → M.
    Underlying,
    /// M → Q.
    AssocDigraph,
    /// M → M.
    Explosion,
    /// M → M, the covering morphism.
    ProjectiveCover,
}

fn parse_category(s: &str) -> Result<CategoryName, String> {
    CategoryName::parse(s).map_err(|e| e.to_string())
}

enum Output {
    Text(String),
    Report(LawReport),
    /// A document with a non-zero exit (an isomorphism that was not found).
    Failed(LawReport),
}

fn doc_output(d: Document) -> Output {
    Output::Text(document::to_text(&d))
}

struct Ctx {
    category: Option<CategoryName>,
    bounds: Bounds,
}

fn read_doc(path: &str) -> Result<Document> {
    let text = if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).context("reading standard input")?;
        s
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {path}"))?
    };
    document::parse(&text).with_context(|| format!("in {path}"))
}

fn read_object(path: &str) -> Result<Object> {
    read_doc(path)?.to_object().with_context(|| format!("in {path}"))
}

fn read_morphism(path: &str) -> Result<Morphism> {
    read_doc(path)?.to_morphism().with_context(|| format!("in {path}"))
}

fn kind_category(d: &Document) -> Option<CategoryName> {
    match d {
        Document::Quiver(_) => Some(CategoryName::Q),
        Document::Hypergraph(_) => Some(CategoryName::H),
        Document::Incidence(_) => Some(CategoryName::R),
        Document::Morphism(m) => kind_category(&m.dom),
        Document::Report(_) => None,
    }
}

impl Ctx {
    /// The `-c` category, or the one implied by the first input.
    fn category(&self, inputs: &[String]) -> Result<CategoryName> {
        if let Some(c) = self.category {
            return Ok(c);
        }
        let first = inputs.first().ok_or_else(|| anyhow!("the category must be given with -c"))?;
        kind_category(&read_doc(first)?).ok_or_else(|| anyhow!("cannot infer a category from {first}"))
    }
}

macro_rules! with_cat {
    ($cat:expr, $c:ident => $body:expr) => {
        match $cat {
            CategoryName::Q => {
                type $c = Quivers;
                $body
            }
            CategoryName::H => {
                type $c = Hypergraphs;
                $body
            }
            CategoryName::M => {
                type $c = Multigraphs;
                $body
            }
            CategoryName::R => {
                type $c = Incidences;
                $body
            }
        }
    };
}

fn objects<C: Cat>(inputs: &[String]) -> Result<Vec<C::Obj>> {
    inputs.iter().map(|p| C::obj(read_object(p)?).with_context(|| format!("in {p}"))).collect()
}

fn pair<C: Cat>(inputs: &[String]) -> Result<(C::Mor, C::Mor)> {
    let [f, g] = inputs else {
        bail!("expected two morphism documents");
    };
    Ok((C::mor(read_morphism(f)?)?, C::mor(read_morphism(g)?)?))
}

fn limit<C: Cat>(kind: LimitKind, inputs: &[String], b: &Bounds) -> Result<Output> {
    let apex = match kind {
        LimitKind::Product => C::product(&objects::<C>(inputs)?, b)?.apex,
        LimitKind::Equalizer => {
            let (f, g) = pair::<C>(inputs)?;
            C::equalizer(&f, &g)?.apex
        }
        LimitKind::Terminal => C::terminal(),
    };
    Ok(doc_output(Document::from_object(&C::wrap(apex))))
}

fn colimit<C: Cat>(kind: ColimitKind, inputs: &[String]) -> Result<Output> {
    let apex = match kind {
        ColimitKind::Coproduct => C::coproduct(&objects::<C>(inputs)?)?.apex,
        ColimitKind::Coequalizer => {
            let (f, g) = pair::<C>(inputs)?;
            C::coequalizer(&f, &g)?.apex
        }
    };
    Ok(doc_output(Document::from_object(&C::wrap(apex))))
}

fn exponential<C: Cat + CartesianClosed>(base: &str, target: &str, b: &Bounds) -> Result<Output> {
    let (x, y) = (C::obj(read_object(base)?)?, C::obj(read_object(target)?)?);
    Ok(doc_output(Document::from_object(&C::wrap(C::exponential(&x, &y, b)?.obj))))
}

fn hom<C: Cat>(dom: &str, cod: &str, list: bool, b: &Bounds) -> Result<Output> {
    let (x, y) = (C::obj(read_object(dom)?)?, C::obj(read_object(cod)?)?);
    let mut evidence = vec![Evidence::count("morphisms", C::hom_count(&x, &y))];
    if list {
        evidence.extend(C::homs(&x, &y, b)?.iter().map(|m| Evidence::morphism("morphism", C::mor_atom(m))));
    }
    let inst = format!("{} to {} in {}", C::describe(&x), C::describe(&y), C::NAME);
    Ok(Output::Report(LawReport::holds("hom-set", inst, evidence)))
}

fn iso<C: Cat>(a: &str, b: &str) -> Result<Output> {
    let (x, y) = (C::obj(read_object(a)?)?, C::obj(read_object(b)?)?);
    match C::find_iso(&x, &y) {
        Some(m) => Ok(doc_output(Document::from_morphism(&C::wrap_mor(m)))),
        None => {
            let inst = format!("{} and {} in {}", C::describe(&x), C::describe(&y), C::NAME);
            let w = Evidence::note("no isomorphism", "exhaustive search found none");
            Ok(Output::Failed(LawReport::fails("isomorphic", inst, w, vec![])))
        }
    }
}

fn universal_law<C: Cat>(kind: UniversalKind, inputs: &[String], b: &Bounds) -> Result<LawReport> {
    let probes = C::probes();
    Ok(match kind {
        UniversalKind::Product => universal::check_product::<C>(&objects::<C>(inputs)?, &probes, b)?,
        UniversalKind::Coproduct => universal::check_coproduct::<C>(&objects::<C>(inputs)?, &probes, b)?,
        UniversalKind::Equalizer => {
            let (f, g) = pair::<C>(inputs)?;
            universal::check_equalizer::<C>(&f, &g, &probes, b)?
        }
        UniversalKind::Coequalizer => {
            let (f, g) = pair::<C>(inputs)?;
            universal::check_coequalizer::<C>(&f, &g, &probes, b)?
        }
        UniversalKind::Terminal => universal::check_terminal::<C>(&probes, b)?,
        UniversalKind::Exponential | UniversalKind::Classifier => unreachable!("handled by the caller"),
    })
}

fn exponential_law<C: Cat + CartesianClosed>(inputs: &[String], b: &Bounds) -> Result<LawReport> {
    let [base, target] = inputs else {
        bail!("expected a base and a target document");
    };
    let (x, y) = (C::obj(read_object(base)?)?, C::obj(read_object(target)?)?);
    Ok(universal::check_exponential::<C>(&x, &y, &C::probes(), b)?)
}

fn atom_set(items: &[String]) -> Result<FiniteSet> {
    if items.is_empty() {
        return Ok(FiniteSet::one());
    }
    let atoms = items.iter().map(|t| Atom::parse(t)).collect::<graphcat::Result<Vec<_>>>()?;
    Ok(FiniteSet::new(atoms)?)
}

/// Adds the accepted names to an unknown-name error.
fn known<T>(r: graphcat::Result<T>, names: impl IntoIterator<Item = &'static str>) -> Result<T> {
    r.map_err(|e| match e {
        graphcat::Error::Unknown(_) => anyhow!("{e}; expected one of: {}", names.into_iter().collect::<Vec<_>>().join(", ")),
        other => other.into(),
    })
}

fn quiver_kind(name: &str) -> Result<StandardQuiver> {
    known(StandardQuiver::parse(name), StandardQuiver::ALL.map(StandardQuiver::name))
}

fn hypergraph_kind(name: &str) -> Result<StandardHypergraph> {
    known(StandardHypergraph::parse(name), StandardHypergraph::ALL.map(StandardHypergraph::name))
}

fn make(cat: CategoryName, name: &str, set: &[String], b: &Bounds) -> Result<Output> {
    let x = atom_set(set)?;
    let obj = match cat {
        CategoryName::Q => Object::Quiver(quiver_kind(name)?.build(&x)),
        CategoryName::H => Object::Hypergraph(hypergraph_kind(name)?.build(&x, b)?),
        CategoryName::M => Object::Hypergraph(Multigraphs::obj(Object::Hypergraph(hypergraph_kind(name)?.build(&x, b)?))?),
        CategoryName::R => Object::Incidence(known(StandardIncidence::parse(name), StandardIncidence::ALL.map(StandardIncidence::name))?.build(&x)),
    };
    Ok(doc_output(Document::from_object(&obj)))
}

fn functor(name: FunctorName, input: &str, b: &Bounds) -> Result<Output> {
    let doc = read_doc(input)?;
    if let Document::Morphism(_) = doc {
        let m = doc.to_morphism()?;
        let out = match (name, m) {
            (FunctorName::Upsilon, Morphism::Quiver(f)) => Morphism::Incidence(incidence::upsilon_map(&f)),
            (FunctorName::UpsilonDiamond, Morphism::Incidence(f)) => Morphism::Quiver(incidence::upsilon_diamond_map(&f)),
            (FunctorName::UpsilonStar, Morphism::Incidence(f)) => Morphism::Quiver(incidence::upsilon_star_map(&f, b)?),
            (FunctorName::IncidenceForming, Morphism::Hypergraph(f)) => Morphism::Incidence(incidence::incidence_forming_map(&f)),
            (FunctorName::Del, Morphism::Hypergraph(f)) => Morphism::Hypergraph(multigraph::del_map(&f)?),
            (FunctorName::Underlying, Morphism::Quiver(f)) => Morphism::Hypergraph(multigraph::underlying_map(&f)),
            (FunctorName::AssocDigraph, Morphism::Hypergraph(f)) => Morphism::Quiver(multigraph::assoc_digraph_map(&f)?),
            (FunctorName::ForgetIncidence, _) => bail!("forgetting incidences has no action on morphisms"),
            _ => bail!("this functor does not apply to a morphism of that kind"),
        };
        return Ok(doc_output(Document::from_morphism(&out)));
    }
    let x = doc.to_object()?;
    let out = match (name, x) {
        (FunctorName::Upsilon, Object::Quiver(q)) => Object::Incidence(incidence::upsilon(&q)),
        (FunctorName::UpsilonDiamond, Object::Incidence(g)) => Object::Quiver(incidence::upsilon_diamond(&g)),
        (FunctorName::UpsilonStar, Object::Incidence(g)) => Object::Quiver(incidence::upsilon_star(&g, b)?),
        (FunctorName::IncidenceForming, Object::Hypergraph(h)) => Object::Incidence(incidence::incidence_forming(&h)),
        (FunctorName::ForgetIncidence, Object::Incidence(g)) => Object::Hypergraph(incidence::forget_incidence(&g)),
        (FunctorName::Del, Object::Hypergraph(h)) => Object::Hypergraph(multigraph::del(&h).obj.into_carrier()),
        (FunctorName::Underlying, Object::Quiver(q)) => Object::Hypergraph(multigraph::underlying(&q).into_carrier()),
        (FunctorName::AssocDigraph, Object::Hypergraph(h)) => Object::Quiver(multigraph::assoc_digraph(&Multigraph::new(h)?).obj),
        (FunctorName::Explosion, Object::Hypergraph(h)) => Object::Hypergraph(multigraph::explosion(&Multigraph::new(h)?).into_carrier()),
        (FunctorName::ProjectiveCover, Object::Hypergraph(h)) => {
            let p = multigraph::projective_cover(&Multigraph::new(h)?);
            return Ok(doc_output(Document::from_morphism(&Morphism::Hypergraph(p))));
        }
        _ => bail!("this functor does not apply to an object of that kind"),
    };
    Ok(doc_output(Document::from_object(&out)))
}

fn check(ctx: &Ctx, c: &Check) -> Result<LawReport> {
    let b = &ctx.bounds;
    match c {
        Check::Law { kind, inputs } => {
            let kind = known(UniversalKind::parse(kind), UniversalKind::ALL.map(UniversalKind::name))?;
            match kind {
                UniversalKind::Classifier => match inputs.as_slice() {
                    [] => Ok(universal::check_classifier(&corpus::hypergraphs(Tier::SMALL), b)?),
                    [phi] => Ok(universal::check_classifier_mono(&Hypergraphs::mor(read_morphism(phi)?)?, b)?),
                    _ => bail!("the classifier check takes at most one mono"),
                },
                UniversalKind::Exponential => match ctx.category(inputs)? {
                    CategoryName::Q => exponential_law::<Quivers>(inputs, b),
                    CategoryName::R => exponential_law::<Incidences>(inputs, b),
                    other => bail!("category {other:?} has no exponentials"),
                },
                _ => with_cat!(ctx.category(inputs)?, C => universal_law::<C>(kind, inputs, b)),
            }
        }
        Check::Counterexample { name } => known(run_counterexample(name), COUNTEREXAMPLES),
        Check::Adjunction { name, tier } => {
            let tier = match tier {
                TierName::Small => Tier::SMALL,
                TierName::Full => Tier::FULL,
            };
            known(check_adjunction(name, &Samples::corpus(tier), b), ADJUNCTIONS)
        }
        Check::Frobenius { name, inputs, set } => {
            let name = known(FrobeniusName::parse(name), FrobeniusName::ALL.map(FrobeniusName::name))?;
            match (name, inputs.as_slice()) {
                (FrobeniusName::PhiUpsilon, [q, g]) => {
                    let q = Quivers::obj(read_object(q)?)?;
                    let g = Incidences::obj(read_object(g)?)?;
                    Ok(frobenius_upsilon(&q, &g)?.1)
                }
                (FrobeniusName::PhiUpsilon, _) => bail!("phi_upsilon takes a quiver and an incidence hypergraph"),
                (_, []) if name == FrobeniusName::PhiI => {
                    let (g, s) = phi_i_instance();
                    Ok(frobenius_set_side(name, &g, &s, b)?.1)
                }
                (_, [g]) => {
                    let g = Incidences::obj(read_object(g)?)?;
                    Ok(frobenius_set_side(name, &g, &atom_set(set)?, b)?.1)
                }
                _ => bail!("expected one incidence hypergraph and --set"),
            }
        }
        Check::Updiaup { input } => {
            let q = Quivers::obj(read_object(input)?)?;
            Ok(check_updiaup(&q, &corpus::quivers(Tier::SMALL), b)?)
        }
    }
}

fn run(cli: &Cli) -> Result<Output> {
    let ctx = Ctx {
        category: cli.category,
        bounds: cli.bound.map(Bounds::uniform).unwrap_or_default(),
    };
    let b = &ctx.bounds;
    match &cli.command {
        Command::Make { name, set } => {
            let cat = ctx.category.ok_or_else(|| anyhow!("make needs a category, given with -c"))?;
            make(cat, name, set, b)
        }
        Command::Functor { name, input } => functor(*name, input, b),
        Command::Limit { kind, inputs } => {
            let cat = match kind {
                LimitKind::Terminal => ctx.category.ok_or_else(|| anyhow!("the terminal object needs -c"))?,
                _ => ctx.category(inputs)?,
            };
            with_cat!(cat, C => limit::<C>(*kind, inputs, b))
        }
        Command::Colimit { kind, inputs } => with_cat!(ctx.category(inputs)?, C => colimit::<C>(*kind, inputs)),
        Command::Exponential { base, target } => match ctx.category(std::slice::from_ref(base))? {
            CategoryName::Q => exponential::<Quivers>(base, target, b),
            CategoryName::R => exponential::<Incidences>(base, target, b),
            other => bail!("category {other:?} has no exponentials"),
        },
        Command::Hom { dom, cod, list } => with_cat!(ctx.category(std::slice::from_ref(dom))?, C => hom::<C>(dom, cod, *list, b)),
        Command::Iso { a, b: other } => with_cat!(ctx.category(std::slice::from_ref(a))?, C => iso::<C>(a, other)),
        Command::Check { check: c } => Ok(Output::Report(check(&ctx, c)?)),
        Command::Dot { input, view } => Ok(Output::Text(dot::emit(&read_object(input)?, *view, b)?)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Output::Text(s)) => {
            print!("{s}");
            ExitCode::SUCCESS
        }
        Ok(Output::Report(r)) => {
            let passed = r.passed();
            print!("{}", document::to_text(&Document::Report(r)));
            if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Ok(Output::Failed(r)) => {
            print!("{}", document::to_text(&Document::Report(r)));
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
