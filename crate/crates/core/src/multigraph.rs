//! Multigraphs as set-system hypergraphs with one or two endpoints per edge,
//! and the functors linking them to hypergraphs and quivers.

use std::ops::Deref;

use crate::bounds::Bounds;
use crate::error::{Error, Result};
use crate::finset::{self, Atom, FiniteFunction, FiniteSet};
use crate::presheaf::{Presheaf, PresheafMorphism};
use crate::quiver::{edge_diamond, vertex_diamond, Quiver, QuiverMorphism};
use crate::set_system::{self, HyperMorphism, SetSystemHypergraph};

/// A set-system hypergraph whose edges all have one or two endpoints.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Multigraph(SetSystemHypergraph);

impl Multigraph {
    pub fn new(g: SetSystemHypergraph) -> Result<Multigraph> {
        if let Some(e) = (0..g.edges().len()).find(|&e| !(1..=2).contains(&g.ends(e).len())) {
            return Err(Error::NotMultigraph(format!(
                "edge {} has {} endpoints",
                g.edges().get(e),
                g.ends(e).len()
            )));
        }
        Ok(Multigraph(g))
    }

    pub fn carrier(&self) -> &SetSystemHypergraph {
        &self.0
    }

    pub fn into_carrier(self) -> SetSystemHypergraph {
        self.0
    }
}

impl Deref for Multigraph {
    type Target = SetSystemHypergraph;

    fn deref(&self) -> &SetSystemHypergraph {
        &self.0
    }
}

/// `Del(H)` with its inclusion into `H`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Deletion {
    pub obj: Multigraph,
    pub inclusion: HyperMorphism,
}

/// Keeps the edges with one or two endpoints.
pub fn del(h: &SetSystemHypergraph) -> Deletion {
    let keep: Vec<usize> = (0..h.edges().len()).filter(|&e| (1..=2).contains(&h.ends(e).len())).collect();
    let ends = keep.iter().map(|&e| h.ends(e).to_vec()).collect();
    let (e, inc) = finset::sub_inclusion(h.edges(), keep);
    let obj = SetSystemHypergraph::raw(h.vertices().clone(), e, ends);
    let inclusion = HyperMorphism::raw(obj.clone(), h.clone(), FiniteFunction::identity(h.vertices()), inc);
    Deletion {
        obj: Multigraph(obj),
        inclusion,
    }
}

/// The unique `φ̂: G → Del(H)` with `j ∘ φ̂ = φ`, for `G` a multigraph.
pub fn del_factor(phi: &HyperMorphism) -> Result<HyperMorphism> {
    Multigraph::new(phi.dom().clone())?;
    let d = del(phi.cod());
    let back: Vec<Option<usize>> = {
        let mut b = vec![None; phi.cod().edges().len()];
        for x in 0..d.obj.edges().len() {
            b[d.inclusion.fe().at(x)] = Some(x);
        }
        b
    };
    let fe = (0..phi.dom().edges().len())
        .map(|e| back[phi.fe().at(e)].expect("edges of a multigraph land on kept edges"))
        .collect();
    Ok(HyperMorphism::from_tables(phi.dom(), &d.obj, phi.fv().table().to_vec(), fe))
}

/// `Del` on a morphism: `Del(φ) = (φ ∘ j)^`.
pub fn del_map(phi: &HyperMorphism) -> Result<HyperMorphism> {
    del_factor(&phi.after(&del(phi.dom()).inclusion)?)
}

/// `U(Q)`: each edge keeps the set `{src, tgt}`.
pub fn underlying(q: &Quiver) -> Multigraph {
    let ends = (0..q.edges().len())
        .map(|e| {
            let (s, t) = (q.src().at(e), q.tgt().at(e));
            if s == t {
                vec![s]
            } else {
                vec![s.min(t), s.max(t)]
            }
        })
        .collect();
    Multigraph(SetSystemHypergraph::raw(q.vertices().clone(), q.edges().clone(), ends))
}

/// `U` on a morphism: the same component maps.
pub fn underlying_map(f: &QuiverMorphism) -> HyperMorphism {
    HyperMorphism::raw(
        underlying(f.dom()).into_carrier(),
        underlying(f.cod()).into_carrier(),
        f.fv().clone(),
        f.fe().clone(),
    )
}

/// `D(G)` with `θ: U(D(G)) → G`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AssociatedDigraph {
    pub obj: Quiver,
    pub theta: HyperMorphism,
}

/// A 2-edge `e` over `{v,w}` becomes the two edges `(e,v,w)` and `(e,w,v)`;
/// a 1-edge over `{v}` becomes the loop `(e,v,v)`.
pub fn assoc_digraph(g: &Multigraph) -> AssociatedDigraph {
    let mut found: Vec<(Atom, usize, usize, usize)> = Vec::new();
    for e in 0..g.edges().len() {
        let s = g.ends(e);
        let orders: Vec<(usize, usize)> = match *s {
            [v] => vec![(v, v)],
            [v, w] => vec![(v, w), (w, v)],
            _ => unreachable!("multigraph edges have one or two endpoints"),
        };
        for (v, w) in orders {
            let atom = Atom::tuple(vec![
                g.edges().get(e).clone(),
                g.vertices().get(v).clone(),
                g.vertices().get(w).clone(),
            ]);
            found.push((atom, e, v, w));
        }
    }
    let edges = FiniteSet::collect(found.iter().map(|f| f.0.clone()));
    let mut src = vec![0; edges.len()];
    let mut tgt = vec![0; edges.len()];
    let mut forget = vec![0; edges.len()];
    for (a, e, v, w) in found {
        let x = edges.index_of(&a).expect("edge");
        src[x] = v;
        tgt[x] = w;
        forget[x] = e;
    }
    let obj: Quiver = Presheaf::from_tables(vec![g.vertices().clone(), edges], vec![src, tgt]);
    let theta = HyperMorphism::from_tables(
        &underlying(&obj),
        g,
        (0..g.vertices().len()).collect(),
        forget,
    );
    AssociatedDigraph { obj, theta }
}

/// `D` on a morphism of multigraphs: `(e,v,w) ↦ (φe, φv, φw)`.
pub fn assoc_digraph_map(phi: &HyperMorphism) -> Result<QuiverMorphism> {
    let dom = assoc_digraph(&Multigraph::new(phi.dom().clone())?);
    let cod = assoc_digraph(&Multigraph::new(phi.cod().clone())?);
    let fe = FiniteFunction::from_fn(dom.obj.edges().clone(), cod.obj.edges().clone(), |a| {
        let t = a.as_tuple().expect("triple");
        Atom::tuple(vec![
            phi.fe().apply(&t[0]).expect("edge").clone(),
            phi.fv().apply(&t[1]).expect("vertex").clone(),
            phi.fv().apply(&t[2]).expect("vertex").clone(),
        ])
    })?;
    Ok(PresheafMorphism::raw(dom.obj, cod.obj, vec![phi.fv().clone(), fe]))
}

/// The unique `φ̂: Q → D(G)` with `θ ∘ U(φ̂) = φ`.
pub fn assoc_factor(q: &Quiver, phi: &HyperMorphism) -> Result<QuiverMorphism> {
    if phi.dom() != underlying(q).carrier() {
        return Err(Error::Mismatch("the map does not start at the underlying multigraph".into()));
    }
    let g = Multigraph::new(phi.cod().clone())?;
    let d = assoc_digraph(&g);
    let fe = (0..q.edges().len())
        .map(|e| {
            let atom = Atom::tuple(vec![
                g.edges().get(phi.fe().at(e)).clone(),
                g.vertices().get(phi.fv().at(q.src().at(e))).clone(),
                g.vertices().get(phi.fv().at(q.tgt().at(e))).clone(),
            ]);
            d.obj.edges().require(&atom, "the associated digraph edges")
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(PresheafMorphism::from_tables(q, &d.obj, vec![phi.fv().table().to_vec(), fe]))
}

/// The quiver `V◇(isol G) ∐ E◇(E G)` whose underlying multigraph is the
/// explosion.
fn exploded_quiver(g: &Multigraph) -> Quiver {
    let isol = set_system::isolated_vertices(g);
    let iso_set = FiniteSet::collect(isol.iter().map(|&v| g.vertices().get(v).clone()));
    crate::presheaf::coproduct(&[vertex_diamond(&iso_set), edge_diamond(g.edges())]).apex
}

/// Isolated vertices plus one fresh 1-path per edge.
pub fn explosion(g: &Multigraph) -> Multigraph {
    underlying(&exploded_quiver(g))
}

/// The covering map `X(G) → G`: isolated vertices map to themselves and the
/// 1-path for edge `e` runs from its least endpoint to its greatest one.
pub fn projective_cover(g: &Multigraph) -> HyperMorphism {
    let c = exploded_quiver(g);
    let x = underlying(&c);
    let fv = FiniteFunction::from_fn(x.vertices().clone(), g.vertices().clone(), |a| {
        let t = a.as_tuple().expect("tagged vertex");
        match t[0].text() {
            "0" => t[1].clone(),
            _ => {
                let inner = t[1].as_tuple().expect("tagged path vertex");
                let e = g.edges().index_of(&inner[1]).expect("edge");
                let s = g.ends(e);
                let end = if inner[0].text() == "0" { s[0] } else { s[s.len() - 1] };
                g.vertices().get(end).clone()
            }
        }
    })
    .expect("vertex images lie in the multigraph");
    let fe = FiniteFunction::from_fn(x.edges().clone(), g.edges().clone(), |a| {
        a.as_tuple().expect("tagged edge")[1].clone()
    })
    .expect("edge images lie in the multigraph");
    HyperMorphism::raw(x.into_carrier(), g.carrier().clone(), fv, fe)
}

/// The injective envelope and partial morphism representer of a multigraph,
/// each obtained by deleting oversized edges from the hypergraph version.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultigraphEnvelopes {
    pub injective_envelope: Multigraph,
    pub envelope_embedding: HyperMorphism,
    pub partial_morphism_representer: Multigraph,
    pub representer_embedding: HyperMorphism,
}

pub fn m_envelopes(g: &Multigraph, bounds: &Bounds) -> Result<MultigraphEnvelopes> {
    let load = set_system::loading(g, bounds)?;
    let rep = set_system::partial_morphism_representer(g, bounds)?;
    let envelope_embedding = del_factor(&load.embedding)?;
    let representer_embedding = del_factor(&rep.embedding)?;
    Ok(MultigraphEnvelopes {
        injective_envelope: Multigraph(envelope_embedding.cod().clone()),
        envelope_embedding,
        partial_morphism_representer: Multigraph(representer_embedding.cod().clone()),
        representer_embedding,
    })
}

/// Projective in multigraphs: isomorphic to an explosion, i.e. every edge
/// is a 2-edge whose endpoints lie on no other edge.
pub fn is_projective_multigraph(g: &Multigraph) -> bool {
    let mut degree = vec![0usize; g.vertices().len()];
    for s in g.all_ends() {
        for &v in s {
            degree[v] += 1;
        }
    }
    g.all_ends().iter().all(|s| s.len() == 2 && s.iter().all(|&v| degree[v] == 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presheaf;
    use crate::quiver::{path1, terminal as loop1};
    use crate::set_system::{classify_morphism, e_k, find_iso, homs, p1, product};

    #[test]
    fn deletion_examples() {
        let b = Bounds::default();
        assert_eq!(del(&e_k(4)).obj.sizes(), vec![4, 0]);
        assert_eq!(del(&e_k(1)).obj.carrier(), &e_k(1));
        let p = product(&[p1(), p1()], &b).unwrap();
        assert_eq!(del(&p.apex).obj.sizes(), vec![4, 2]);
        let alpha = &homs(&e_k(4), &e_k(1), &b).unwrap()[0];
        assert!(alpha.is_epi());
        assert!(!del_map(alpha).unwrap().is_epi());
    }

    #[test]
    fn del_factor_is_unique() {
        let b = Bounds::default();
        let h = e_k(3);
        for g in [p1(), e_k(1)] {
            for phi in homs(&g, &h, &b).unwrap() {
                let hat = del_factor(&phi).unwrap();
                let j = del(&h).inclusion;
                let hits: Vec<_> = homs(&g, del(&h).obj.carrier(), &b)
                    .unwrap()
                    .into_iter()
                    .filter(|c| j.after(c).unwrap() == phi)
                    .collect();
                assert_eq!(hits, vec![hat]);
            }
        }
    }

    #[test]
    fn underlying_examples() {
        assert!(find_iso(underlying(&path1()).carrier(), &p1()).is_some());
        assert_eq!(underlying(&loop1()).ends(0), &[0]);
        let pp = presheaf::product(&[path1(), path1()]);
        assert_eq!(underlying(&pp.apex).sizes(), vec![4, 1]);
    }

    #[test]
    fn associated_digraph_examples() {
        let d = assoc_digraph(&Multigraph::new(p1()).unwrap());
        assert_eq!(d.obj.sizes(), vec![2, 2]);
        assert_eq!(d.obj.edges().get(0).text(), "(1,v,w)");
        let u = underlying(&d.obj);
        assert_eq!(u.sizes(), vec![2, 2]);
        assert_eq!(u.ends(0), u.ends(1));
        let d = assoc_digraph(&Multigraph::new(e_k(1)).unwrap());
        assert_eq!(d.obj.sizes(), vec![1, 1]);
        assert!(d.theta.fe().is_surjective());
        HyperMorphism::new(d.theta.dom().clone(), d.theta.cod().clone(), d.theta.fv().clone(), d.theta.fe().clone())
            .unwrap();
    }

    #[test]
    fn assoc_factor_is_unique() {
        let b = Bounds::default();
        let g = Multigraph::new(p1()).unwrap();
        let d = assoc_digraph(&g);
        for q in [path1(), loop1()] {
            for phi in homs(underlying(&q).carrier(), &g, &b).unwrap() {
                let hat = assoc_factor(&q, &phi).unwrap();
                let hits: Vec<_> = presheaf::homs(&q, &d.obj, &b)
                    .unwrap()
                    .into_iter()
                    .filter(|c| d.theta.after(&underlying_map(c)).unwrap() == phi)
                    .collect();
                assert_eq!(hits, vec![hat]);
            }
        }
    }

    #[test]
    fn explosion_and_cover() {
        let g = Multigraph::new(SetSystemHypergraph::from_lists(&["u", "v", "w"], &[("e", &["v", "w"])]).unwrap()).unwrap();
        let x = explosion(&g);
        assert_eq!(x.sizes(), vec![3, 1]);
        assert!(is_projective_multigraph(&x));
        let p = projective_cover(&g);
        HyperMorphism::new(p.dom().clone(), p.cod().clone(), p.fv().clone(), p.fe().clone()).unwrap();
        let f = classify_morphism(&p);
        assert!(f.epi && f.coessential_epi);
        let l = Multigraph::new(e_k(1)).unwrap();
        let p = projective_cover(&l);
        assert_eq!(p.dom().sizes(), vec![2, 1]);
        assert!(classify_morphism(&p).coessential_epi);
        let empty_edges = Multigraph::new(set_system::vertex_diamond(&FiniteSet::range(2))).unwrap();
        assert!(find_iso(&explosion(&empty_edges), &empty_edges).is_some());
    }

    #[test]
    fn envelopes() {
        let b = Bounds::default();
        let m = m_envelopes(&Multigraph::new(p1()).unwrap(), &b).unwrap();
        assert_eq!(m.injective_envelope.sizes(), vec![2, 3]);
        let single = Multigraph::new(set_system::vertex_diamond(&FiniteSet::range(1))).unwrap();
        let m = m_envelopes(&single, &b).unwrap();
        assert_eq!(m.injective_envelope.sizes(), vec![1, 1]);
    }

    #[test]
    fn multigraph_rejects_big_edges() {
        assert!(matches!(Multigraph::new(e_k(3)), Err(Error::NotMultigraph(_))));
        assert!(Multigraph::new(e_k(0)).is_err());
    }
}
