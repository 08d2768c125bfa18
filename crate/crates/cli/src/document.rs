//! JSON interchange documents for objects, morphisms and reports.
//!
//! ```text
//! {"kind": "quiver",     "vertices": [..], "edges": [..], "endpoints": {"e": ["src", "tgt"]}}
//! {"kind": "hypergraph", "vertices": [..], "edges": [..], "endpoints": {"e": ["v", "w", ..]}}
//! {"kind": "incidence",  "vertices": [..], "edges": [..], "incidences": {"i": ["v", "e"]}}
//! {"kind": "morphism",   "dom": {..}, "cod": {..}, "vertices": {..}, "edges": {..}, "incidences": {..}}
//! {"kind": "report",     "law_name": .., "instance_description": .., "verdict": .., "evidence": [..]}
//! ```
//!
//! Every element is written as its atom text. Sets are stored in canonical
//! atom order, so serializing a parsed document reproduces it exactly.

use std::collections::BTreeMap;

use anyhow::{anyhow, bail, Context, Result};
use graphcat::incidence::{IncidenceHypergraph, IncidenceMorphism};
use graphcat::laws::LawReport;
use graphcat::presheaf::{Presheaf, PresheafMorphism};
use graphcat::quiver::{Quiver, QuiverMorphism};
use graphcat::set_system::{HyperMorphism, SetSystemHypergraph};
use graphcat::{Atom, FiniteFunction, FiniteSet};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Document {
    Quiver(QuiverDoc),
    Hypergraph(HypergraphDoc),
    Incidence(IncidenceDoc),
    Morphism(MorphismDoc),
    Report(LawReport),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuiverDoc {
    pub vertices: Vec<String>,
    pub edges: Vec<String>,
    /// Source and target of each edge.
    pub endpoints: BTreeMap<String, [String; 2]>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HypergraphDoc {
    pub vertices: Vec<String>,
    pub edges: Vec<String>,
    pub endpoints: BTreeMap<String, Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IncidenceDoc {
    pub vertices: Vec<String>,
    pub edges: Vec<String>,
    /// Port vertex and attaching edge of each incidence.
    pub incidences: BTreeMap<String, [String; 2]>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismDoc {
    pub dom: Box<Document>,
    pub cod: Box<Document>,
    pub vertices: BTreeMap<String, String>,
    pub edges: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub incidences: Option<BTreeMap<String, String>>,
}

/// A validated object.
#[derive(Debug, Clone, PartialEq)]
pub enum Object {
    Quiver(Quiver),
    Hypergraph(SetSystemHypergraph),
    Incidence(IncidenceHypergraph),
}

/// A validated morphism.
#[derive(Debug, Clone, PartialEq)]
pub enum Morphism {
    Quiver(QuiverMorphism),
    Hypergraph(HyperMorphism),
    Incidence(IncidenceMorphism),
}

pub fn parse(text: &str) -> Result<Document> {
    serde_json::from_str(text).context("malformed document")
}

pub fn to_text(doc: &Document) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents always serialize");
    s.push('\n');
    s
}

fn atom(text: &str, field: &str) -> Result<Atom> {
    Atom::parse(text).with_context(|| format!("field `{field}`"))
}

fn set(items: &[String], field: &str) -> Result<FiniteSet> {
    let atoms = items.iter().map(|t| atom(t, field)).collect::<Result<Vec<_>>>()?;
    FiniteSet::new(atoms).with_context(|| format!("field `{field}`"))
}

fn texts(s: &FiniteSet) -> Vec<String> {
    s.iter().map(|a| a.text().to_owned()).collect()
}

/// The value for each element of `keys`, requiring the map to cover them
/// exactly.
fn covering<'a, T>(map: &'a BTreeMap<String, T>, keys: &FiniteSet, field: &str) -> Result<Vec<&'a T>> {
    let mut by_atom: BTreeMap<Atom, &T> = BTreeMap::new();
    for (k, v) in map {
        let a = atom(k, field)?;
        if !keys.contains(&a) {
            bail!("field `{field}`: {a} is not a listed element");
        }
        if by_atom.insert(a.clone(), v).is_some() {
            bail!("field `{field}`: {a} appears twice");
        }
    }
    keys.iter()
        .map(|k| by_atom.get(k).copied().ok_or_else(|| anyhow!("field `{field}`: no entry for {k}")))
        .collect()
}

/// The function `dom → cod` whose value at `x` is `pick(entry for x)`.
fn function<T>(
    map: &BTreeMap<String, T>,
    dom: &FiniteSet,
    cod: &FiniteSet,
    field: &str,
    pick: impl Fn(&T) -> &str,
) -> Result<FiniteFunction> {
    let values = covering(map, dom, field)?;
    let pairs = dom
        .iter()
        .zip(values)
        .map(|(k, v)| {
            let b = atom(pick(v), &format!("{field}.{k}"))?;
            if !cod.contains(&b) {
                bail!("field `{field}.{k}`: {b} is not an element of {cod}");
            }
            Ok((k.clone(), b))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(FiniteFunction::from_pairs(dom.clone(), cod.clone(), pairs)?)
}

impl QuiverDoc {
    pub fn from_quiver(q: &Quiver) -> QuiverDoc {
        let endpoints = q
            .edges()
            .iter()
            .enumerate()
            .map(|(e, a)| {
                let ends = [q.src().at(e), q.tgt().at(e)].map(|v| q.vertices().get(v).text().to_owned());
                (a.text().to_owned(), ends)
            })
            .collect();
        QuiverDoc {
            vertices: texts(q.vertices()),
            edges: texts(q.edges()),
            endpoints,
        }
    }

    pub fn to_quiver(&self) -> Result<Quiver> {
        let v = set(&self.vertices, "vertices")?;
        let e = set(&self.edges, "edges")?;
        let src = function(&self.endpoints, &e, &v, "endpoints", |p| &p[0])?;
        let tgt = function(&self.endpoints, &e, &v, "endpoints", |p| &p[1])?;
        Ok(Quiver::quiver(v, e, src, tgt)?)
    }
}

impl HypergraphDoc {
    pub fn from_hypergraph(h: &SetSystemHypergraph) -> HypergraphDoc {
        let endpoints = h
            .edges()
            .iter()
            .enumerate()
            .map(|(e, a)| {
                let ends = h.ends(e).iter().map(|&v| h.vertices().get(v).text().to_owned()).collect();
                (a.text().to_owned(), ends)
            })
            .collect();
        HypergraphDoc {
            vertices: texts(h.vertices()),
            edges: texts(h.edges()),
            endpoints,
        }
    }

    pub fn to_hypergraph(&self) -> Result<SetSystemHypergraph> {
        let v = set(&self.vertices, "vertices")?;
        let e = set(&self.edges, "edges")?;
        let lists = covering(&self.endpoints, &e, "endpoints")?;
        let ends = e
            .iter()
            .zip(lists)
            .map(|(name, list)| {
                let field = format!("endpoints.{name}");
                let mut idx = list
                    .iter()
                    .map(|t| {
                        let a = atom(t, &field)?;
                        v.index_of(&a).ok_or_else(|| anyhow!("field `{field}`: {a} is not a listed vertex"))
                    })
                    .collect::<Result<Vec<_>>>()?;
                idx.sort_unstable();
                if idx.windows(2).any(|w| w[0] == w[1]) {
                    bail!("field `{field}`: a vertex is repeated");
                }
                Ok(idx)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(SetSystemHypergraph::from_endpoints(v, e, ends)?)
    }
}

impl IncidenceDoc {
    pub fn from_incidence(g: &IncidenceHypergraph) -> IncidenceDoc {
        let incidences = g
            .incidences()
            .iter()
            .enumerate()
            .map(|(i, a)| {
                let pair = [
                    g.vertices().get(g.port().at(i)).text().to_owned(),
                    g.edges().get(g.att().at(i)).text().to_owned(),
                ];
                (a.text().to_owned(), pair)
            })
            .collect();
        IncidenceDoc {
            vertices: texts(g.vertices()),
            edges: texts(g.edges()),
            incidences,
        }
    }

    pub fn to_incidence(&self) -> Result<IncidenceHypergraph> {
        let v = set(&self.vertices, "vertices")?;
        let e = set(&self.edges, "edges")?;
        let keys = self.incidences.keys().map(|k| atom(k, "incidences")).collect::<Result<Vec<_>>>()?;
        let i = FiniteSet::new(keys).context("field `incidences`")?;
        let port = function(&self.incidences, &i, &v, "incidences", |p| &p[0])?;
        let att = function(&self.incidences, &i, &e, "incidences", |p| &p[1])?;
        Ok(Presheaf::new(vec![v, e, i], vec![port, att])?)
    }
}

fn component(f: &FiniteFunction) -> BTreeMap<String, String> {
    (0..f.dom().len())
        .map(|x| (f.dom().get(x).text().to_owned(), f.cod().get(f.at(x)).text().to_owned()))
        .collect()
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::Quiver(_) => "quiver",
            Document::Hypergraph(_) => "hypergraph",
            Document::Incidence(_) => "incidence",
            Document::Morphism(_) => "morphism",
            Document::Report(_) => "report",
        }
    }

    pub fn from_object(x: &Object) -> Document {
        match x {
            Object::Quiver(q) => Document::Quiver(QuiverDoc::from_quiver(q)),
            Object::Hypergraph(h) => Document::Hypergraph(HypergraphDoc::from_hypergraph(h)),
            Object::Incidence(g) => Document::Incidence(IncidenceDoc::from_incidence(g)),
        }
    }

    pub fn from_morphism(m: &Morphism) -> Document {
        let (dom, cod, comps): (Object, Object, Vec<&FiniteFunction>) = match m {
            Morphism::Quiver(f) => (Object::Quiver(f.dom().clone()), Object::Quiver(f.cod().clone()), f.comps().iter().collect()),
            Morphism::Hypergraph(f) => (Object::Hypergraph(f.dom().clone()), Object::Hypergraph(f.cod().clone()), vec![f.fv(), f.fe()]),
            Morphism::Incidence(f) => (Object::Incidence(f.dom().clone()), Object::Incidence(f.cod().clone()), f.comps().iter().collect()),
        };
        Document::Morphism(MorphismDoc {
            dom: Box::new(Document::from_object(&dom)),
            cod: Box::new(Document::from_object(&cod)),
            vertices: component(comps[0]),
            edges: component(comps[1]),
            incidences: comps.get(2).map(|f| component(f)),
        })
    }

    pub fn to_object(&self) -> Result<Object> {
        match self {
            Document::Quiver(d) => Ok(Object::Quiver(d.to_quiver()?)),
            Document::Hypergraph(d) => Ok(Object::Hypergraph(d.to_hypergraph()?)),
            Document::Incidence(d) => Ok(Object::Incidence(d.to_incidence()?)),
            other => bail!("expected an object document, found kind `{}`", other.kind()),
        }
    }

    /// Builds the morphism and checks every commuting square.
    pub fn to_morphism(&self) -> Result<Morphism> {
        let Document::Morphism(m) = self else {
            bail!("expected a morphism document, found kind `{}`", self.kind());
        };
        let dom = m.dom.to_object().context("field `dom`")?;
        let cod = m.cod.to_object().context("field `cod`")?;
        let comp = |field: &str, map: &BTreeMap<String, String>, d: &FiniteSet, c: &FiniteSet| {
            function(map, d, c, field, |s| s.as_str())
        };
        let no_incidences = |kind: &str| -> Result<()> {
            if m.incidences.is_some() {
                bail!("field `incidences`: a {kind} morphism has no incidence map");
            }
            Ok(())
        };
        Ok(match (dom, cod) {
            (Object::Quiver(a), Object::Quiver(b)) => {
                no_incidences("quiver")?;
                let fv = comp("vertices", &m.vertices, a.vertices(), b.vertices())?;
                let fe = comp("edges", &m.edges, a.edges(), b.edges())?;
                Morphism::Quiver(PresheafMorphism::new(a, b, vec![fv, fe])?)
            }
            (Object::Hypergraph(a), Object::Hypergraph(b)) => {
                no_incidences("hypergraph")?;
                let fv = comp("vertices", &m.vertices, a.vertices(), b.vertices())?;
                let fe = comp("edges", &m.edges, a.edges(), b.edges())?;
                Morphism::Hypergraph(HyperMorphism::new(a, b, fv, fe)?)
            }
            (Object::Incidence(a), Object::Incidence(b)) => {
                let map = m.incidences.as_ref().ok_or_else(|| anyhow!("field `incidences` is required"))?;
                let fv = comp("vertices", &m.vertices, a.vertices(), b.vertices())?;
                let fe = comp("edges", &m.edges, a.edges(), b.edges())?;
                let fi = comp("incidences", map, a.incidences(), b.incidences())?;
                Morphism::Incidence(PresheafMorphism::new(a, b, vec![fv, fe, fi])?)
            }
            _ => bail!("fields `dom` and `cod` must have the same kind"),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use graphcat::{incidence, quiver, set_system};

    fn round_trip(doc: &Document) {
        let text = to_text(doc);
        assert_eq!(&parse(&text).unwrap(), doc);
        assert_eq!(to_text(&parse(&text).unwrap()), text);
    }

    #[test]
    fn objects_round_trip() {
        let p = quiver::path1();
        let d = Document::from_object(&Object::Quiver(p.clone()));
        round_trip(&d);
        assert_eq!(d.to_object().unwrap(), Object::Quiver(p));
        let h = set_system::p1();
        let d = Document::from_object(&Object::Hypergraph(h.clone()));
        round_trip(&d);
        assert_eq!(d.to_object().unwrap(), Object::Hypergraph(h));
        let g = incidence::i_star(&FiniteSet::range(2));
        let d = Document::from_object(&Object::Incidence(g.clone()));
        round_trip(&d);
        assert_eq!(d.to_object().unwrap(), Object::Incidence(g));
    }

    #[test]
    fn morphisms_round_trip() {
        let g = incidence::i_star(&FiniteSet::range(2));
        let f = graphcat::presheaf::first_hom(&g, &incidence::terminal()).unwrap();
        let d = Document::from_morphism(&Morphism::Incidence(f.clone()));
        round_trip(&d);
        assert_eq!(d.to_morphism().unwrap(), Morphism::Incidence(f));
    }

    #[test]
    fn unknown_fields_are_rejected() {
        let text = r#"{"kind":"quiver","vertices":[],"edges":[],"endpoints":{},"colour":"red"}"#;
        let err = format!("{:#}", parse(text).unwrap_err());
        assert!(err.contains("colour"), "{err}");
    }

    #[test]
    fn unknown_vertex_is_named() {
        let text = r#"{"kind":"hypergraph","vertices":["a"],"edges":["e"],"endpoints":{"e":["a","z"]}}"#;
        let err = format!("{:#}", parse(text).unwrap().to_object().unwrap_err());
        assert!(err.contains("endpoints.e") && err.contains('z'), "{err}");
    }

    #[test]
    fn broken_square_names_the_incidence() {
        let text = r#"{"kind":"morphism",
            "dom":{"kind":"incidence","vertices":["x"],"edges":["f"],"incidences":{"k":["x","f"]}},
            "cod":{"kind":"incidence","vertices":["v","w"],"edges":["e"],"incidences":{"i":["v","e"]}},
            "vertices":{"x":"w"},"edges":{"f":"e"},"incidences":{"k":"i"}}"#;
        let err = format!("{:#}", parse(text).unwrap().to_morphism().unwrap_err());
        assert!(err.contains("incidence k"), "{err}");
    }
}
