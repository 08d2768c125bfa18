//! Backtracking homomorphism search shared by every category.
//!
//! A structure is described by *base* elements (vertices, and for incidence
//! hypergraphs also edges) and *derived* elements (edges or incidences) whose
//! images are pinned down by the images of a key of base elements. A
//! homomorphism assigns every base element first; each derived element may
//! then go to any codomain element carrying the image key. Keys are either
//! positional tuples (presheaves) or sets (set-system hypergraphs).

use std::collections::HashMap;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum KeyKind {
    /// Position `p` of a key refers to base class `key_classes[p]`.
    Tuple,
    /// Keys are sets of base class 0 elements, compared after sorting.
    Set,
}

/// One side of a search: class sizes and the keys of derived elements.
#[derive(Debug, Clone)]
pub(crate) struct Structure {
    pub base: Vec<usize>,
    /// `derived[c][x]` is the key of derived element `x` in class `c`.
    pub derived: Vec<Vec<Vec<usize>>>,
}

/// A homomorphism as index tables per class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Solution {
    pub base: Vec<Vec<usize>>,
    pub derived: Vec<Vec<usize>>,
}

pub(crate) struct Problem<'a> {
    dom: &'a Structure,
    cod: &'a Structure,
    kind: KeyKind,
    key_classes: &'a [usize],
    base_offset: Vec<usize>,
    nbase: usize,
    derived_offset: Vec<usize>,
    /// per derived class: codomain key → codomain elements with that key
    index: Vec<HashMap<Vec<usize>, Vec<usize>>>,
    /// flattened dom derived: (class, deps as global base vars)
    dvars: Vec<(usize, Vec<usize>)>,
    /// derived vars to check once base var `i` is assigned (`i + 1`; slot 0 = no deps)
    trigger: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Mode {
    Hom,
    Iso,
}

impl<'a> Problem<'a> {
    pub fn new(dom: &'a Structure, cod: &'a Structure, kind: KeyKind, key_classes: &'a [usize]) -> Self {
        let mut base_offset = Vec::with_capacity(dom.base.len());
        let mut nbase = 0;
        for &n in &dom.base {
            base_offset.push(nbase);
            nbase += n;
        }
        let mut derived_offset = Vec::new();
        let mut dvars = Vec::new();
        for (c, elems) in dom.derived.iter().enumerate() {
            derived_offset.push(dvars.len());
            for key in elems {
                let deps: Vec<usize> = key
                    .iter()
                    .enumerate()
                    .map(|(p, &x)| base_offset[class_of(kind, key_classes, p)] + x)
                    .collect();
                dvars.push((c, deps));
            }
        }
        let mut trigger = vec![Vec::new(); nbase + 1];
        for (d, (_, deps)) in dvars.iter().enumerate() {
            let slot = deps.iter().max().map_or(0, |&m| m + 1);
            trigger[slot].push(d);
        }
        let index = cod
            .derived
            .iter()
            .map(|elems| {
                let mut m: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
                for (y, key) in elems.iter().enumerate() {
                    m.entry(normalize(kind, key.clone())).or_default().push(y);
                }
                m
            })
            .collect();
        Problem {
            dom,
            cod,
            kind,
            key_classes,
            base_offset,
            nbase,
            derived_offset,
            index,
            dvars,
            trigger,
        }
    }

    fn shapes_agree(&self) -> bool {
        self.dom.base.len() == self.cod.base.len() && self.dom.derived.len() == self.cod.derived.len()
    }

    /// Number of homomorphisms (or isomorphisms).
    pub fn count(&self, mode: Mode) -> u128 {
        if !self.shapes_agree() {
            return 0;
        }
        let mut total = 0u128;
        self.run(mode, &mut |cands| {
            total = total.saturating_add(leaf_count(mode, cands));
            true
        });
        total
    }

    /// All homomorphisms in lexicographic order, failing past `limit`.
    pub fn list(&self, limit: u128) -> Result<Vec<Solution>> {
        let mut out = Vec::new();
        let mut over = false;
        if self.shapes_agree() {
            self.run(Mode::Hom, &mut |cands| {
                for_each_choice(cands, &mut |choice| {
                    if out.len() as u128 >= limit {
                        over = true;
                        return false;
                    }
                    out.push(self.solution(choice));
                    true
                })
            });
        }
        if over {
            let needed = self.count(Mode::Hom);
            return Err(Error::Bound {
                what: "hom-set listing",
                needed,
                bound: limit,
            });
        }
        Ok(out)
    }

    /// The first homomorphism (or isomorphism) in lexicographic order.
    pub fn first(&self, mode: Mode) -> Option<Solution> {
        if !self.shapes_agree() {
            return None;
        }
        let mut found = None;
        self.run(mode, &mut |cands| {
            let choice: Vec<(usize, usize)> = match mode {
                Mode::Hom => cands.iter().map(|(a, c)| (*a, c[0])).collect(),
                Mode::Iso => iso_choice(cands),
            };
            found = Some(self.solution(&choice));
            false
        });
        found
    }

    fn solution(&self, choice: &[(usize, usize)]) -> Solution {
        let base_vals = &choice[..self.nbase];
        let base = self
            .base_offset
            .iter()
            .zip(&self.dom.base)
            .map(|(&o, &n)| base_vals[o..o + n].iter().map(|x| x.1).collect())
            .collect();
        let dvals = &choice[self.nbase..];
        let derived = self
            .dom
            .derived
            .iter()
            .enumerate()
            .map(|(c, elems)| {
                let o = self.derived_offset[c];
                dvals[o..o + elems.len()].iter().map(|x| x.1).collect()
            })
            .collect();
        Solution { base, derived }
    }

    fn class_of_var(&self, v: usize) -> (usize, usize) {
        let c = self.base_offset.partition_point(|&o| o <= v) - 1;
        (c, v - self.base_offset[c])
    }

    /// Depth-first search over base assignments; at each consistent leaf the
    /// callback receives, per dom var (base then derived), a pair whose second
    /// component is the candidate list (singleton for base vars). Returning
    /// `false` stops the search.
    fn run(&self, mode: Mode, leaf: &mut dyn FnMut(&[(usize, &[usize])]) -> bool) {
        if mode == Mode::Iso {
            if self.dom.base != self.cod.base
                || self.dom.derived.iter().map(Vec::len).ne(self.cod.derived.iter().map(Vec::len))
            {
                return;
            }
        }
        let sigs = (mode == Mode::Iso).then(|| (self.signatures(self.dom), self.signatures(self.cod)));
        let mut st = State {
            assign: vec![0; self.nbase],
            used: self.cod.base.iter().map(|&n| vec![false; n]).collect(),
            cands: vec![&[][..]; self.dvars.len()],
            values: (0..self.nbase).collect(),
        };
        if !self.fire(0, &mut st) {
            return;
        }
        self.dfs(0, mode, sigs.as_ref(), &mut st, leaf);
    }

    fn fire<'s>(&'s self, slot: usize, st: &mut State<'s>) -> bool {
        for &d in &self.trigger[slot] {
            let (c, deps) = &self.dvars[d];
            let key = normalize(self.kind, deps.iter().map(|&v| st.assign[v]).collect());
            match self.index[*c].get(&key) {
                Some(list) => st.cands[d] = list,
                None => return false,
            }
        }
        true
    }

    fn dfs<'s>(
        &'s self,
        v: usize,
        mode: Mode,
        sigs: Option<&(Vec<Vec<Sig>>, Vec<Vec<Sig>>)>,
        st: &mut State<'s>,
        leaf: &mut dyn FnMut(&[(usize, &[usize])]) -> bool,
    ) -> bool {
        if v == self.nbase {
            let pairs: Vec<(usize, &[usize])> = st
                .values
                .iter()
                .map(|&i| (i, std::slice::from_ref(&st.assign[i])))
                .chain(st.cands.iter().enumerate().map(|(d, c)| (self.nbase + d, *c)))
                .collect();
            if mode == Mode::Iso && !self.iso_leaf_ok(&pairs[self.nbase..]) {
                return true;
            }
            return leaf(&pairs);
        }
        let (c, local) = self.class_of_var(v);
        for y in 0..self.cod.base[c] {
            if mode == Mode::Iso {
                let (ds, cs) = sigs.expect("signatures in iso mode");
                if st.used[c][y] || ds[c][local] != cs[c][y] {
                    continue;
                }
            }
            st.assign[v] = y;
            if !self.fire(v + 1, st) {
                continue;
            }
            if mode == Mode::Iso {
                st.used[c][y] = true;
            }
            let go_on = self.dfs(v + 1, mode, sigs, st, leaf);
            if mode == Mode::Iso {
                st.used[c][y] = false;
            }
            if !go_on {
                return false;
            }
        }
        true
    }

    /// With a bijective base map, derived elements can be matched bijectively
    /// iff every image key is hit by as many dom elements as cod elements carry it.
    fn iso_leaf_ok(&self, derived: &[(usize, &[usize])]) -> bool {
        let mut hits: HashMap<(usize, *const usize), usize> = HashMap::new();
        for (d, (_, list)) in derived.iter().enumerate() {
            *hits.entry((self.dvars[d].0, list.as_ptr())).or_default() += 1;
        }
        derived
            .iter()
            .enumerate()
            .all(|(d, (_, list))| hits[&(self.dvars[d].0, list.as_ptr())] == list.len())
    }

    fn signatures(&self, s: &Structure) -> Vec<Vec<Sig>> {
        let mut sig: Vec<Vec<Sig>> = s.base.iter().map(|&n| vec![Vec::new(); n]).collect();
        for (c, elems) in s.derived.iter().enumerate() {
            for key in elems {
                let distinct = normalize(self.kind, key.clone()).len();
                for (p, &x) in key.iter().enumerate() {
                    let bc = class_of(self.kind, self.key_classes, p);
                    let role = if self.kind == KeyKind::Set { 0 } else { p };
                    let mult = key.iter().filter(|&&z| z == x).count();
                    sig[bc][x].push((c, role, distinct, mult));
                }
            }
        }
        for per_class in &mut sig {
            for s in per_class.iter_mut() {
                s.sort_unstable();
            }
        }
        sig
    }
}

type Sig = Vec<(usize, usize, usize, usize)>;

struct State<'s> {
    assign: Vec<usize>,
    used: Vec<Vec<bool>>,
    cands: Vec<&'s [usize]>,
    values: Vec<usize>,
}

fn class_of(kind: KeyKind, key_classes: &[usize], p: usize) -> usize {
    match kind {
        KeyKind::Tuple => key_classes[p],
        KeyKind::Set => 0,
    }
}

fn normalize(kind: KeyKind, mut key: Vec<usize>) -> Vec<usize> {
    if kind == KeyKind::Set {
        key.sort_unstable();
        key.dedup();
    }
    key
}

fn leaf_count(mode: Mode, cands: &[(usize, &[usize])]) -> u128 {
    match mode {
        Mode::Hom => cands
            .iter()
            .fold(1u128, |acc, (_, c)| acc.saturating_mul(c.len() as u128)),
        Mode::Iso => {
            // each group of derived elements sharing a candidate list is matched
            // by any permutation; only count each list once
            let mut seen: Vec<*const usize> = Vec::new();
            let mut acc = 1u128;
            for (_, c) in cands {
                if c.len() > 1 && !seen.contains(&c.as_ptr()) {
                    seen.push(c.as_ptr());
                    acc = acc.saturating_mul((1..=c.len() as u128).product());
                }
            }
            acc
        }
    }
}

fn iso_choice(cands: &[(usize, &[usize])]) -> Vec<(usize, usize)> {
    let mut next: HashMap<*const usize, usize> = HashMap::new();
    cands
        .iter()
        .map(|(a, c)| {
            let k = next.entry(c.as_ptr()).or_default();
            let y = c[*k];
            if c.len() > 1 {
                *k += 1;
            }
            (*a, y)
        })
        .collect()
}

/// Visits every choice of one candidate per variable, lexicographically.
fn for_each_choice(cands: &[(usize, &[usize])], f: &mut dyn FnMut(&[(usize, usize)]) -> bool) -> bool {
    let mut pos = vec![0usize; cands.len()];
    if cands.iter().any(|(_, c)| c.is_empty()) {
        return true;
    }
    let mut choice: Vec<(usize, usize)> = cands.iter().map(|(a, c)| (*a, c[0])).collect();
    loop {
        if !f(&choice) {
            return false;
        }
        let mut k = cands.len();
        loop {
            if k == 0 {
                return true;
            }
            k -= 1;
            pos[k] += 1;
            if pos[k] < cands[k].1.len() {
                choice[k].1 = cands[k].1[pos[k]];
                break;
            }
            pos[k] = 0;
            choice[k].1 = cands[k].1[0];
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quiver(n: usize, edges: &[(usize, usize)]) -> Structure {
        Structure {
            base: vec![n],
            derived: vec![edges.iter().map(|&(s, t)| vec![s, t]).collect()],
        }
    }

    const QK: [usize; 2] = [0, 0];

    /// Independent oracle: try every vertex table and every edge table.
    fn brute(d: &Structure, c: &Structure) -> u128 {
        let (nv, mv) = (d.base[0], c.base[0]);
        let (de, ce) = (&d.derived[0], &c.derived[0]);
        let mut total = 0;
        for fv in 0..mv.pow(nv as u32) {
            let v = |x: usize| fv / mv.pow(x as u32) % mv;
            for fe in 0..ce.len().pow(de.len() as u32) {
                let e = |x: usize| fe / ce.len().pow(x as u32) % ce.len();
                if (0..de.len()).all(|x| ce[e(x)] == vec![v(de[x][0]), v(de[x][1])]) {
                    total += 1;
                }
            }
        }
        total
    }

    #[test]
    fn counts_match_brute_force() {
        let path = quiver(2, &[(0, 1)]);
        let loop1 = quiver(1, &[(0, 0)]);
        let complete2 = quiver(2, &[(0, 0), (0, 1), (1, 0), (1, 1)]);
        let hom = |a, b| Problem::new(a, b, KeyKind::Tuple, &QK).count(Mode::Hom);
        assert_eq!(hom(&path, &loop1), 1);
        assert_eq!(hom(&loop1, &path), 0);
        assert_eq!(hom(&path, &complete2), 4);
        let two_paths = quiver(3, &[(0, 1), (1, 2)]);
        let square = quiver(2, &[(0, 1), (1, 0), (1, 1), (1, 1)]);
        for (d, c) in [(&two_paths, &complete2), (&two_paths, &square), (&square, &square)] {
            assert_eq!(hom(d, c), brute(d, c));
        }
    }

    #[test]
    fn listing_is_lexicographic_and_complete() {
        let path = quiver(2, &[(0, 1)]);
        let cod = quiver(2, &[(0, 1), (0, 1), (1, 1)]);
        let sols = Problem::new(&path, &cod, KeyKind::Tuple, &QK).list(100).unwrap();
        let tables: Vec<(Vec<usize>, Vec<usize>)> = sols
            .iter()
            .map(|s| (s.base[0].clone(), s.derived[0].clone()))
            .collect();
        assert_eq!(
            tables,
            vec![(vec![0, 1], vec![0]), (vec![0, 1], vec![1]), (vec![1, 1], vec![2])]
        );
        assert!(Problem::new(&path, &cod, KeyKind::Tuple, &QK).list(2).is_err());
    }

    #[test]
    fn iso_search() {
        let a = quiver(2, &[(0, 1), (1, 1)]);
        let b = quiver(2, &[(0, 0), (1, 0)]);
        let c = quiver(2, &[(0, 1), (0, 0)]);
        let p = Problem::new(&a, &b, KeyKind::Tuple, &QK);
        let iso = p.first(Mode::Iso).unwrap();
        assert_eq!(iso.base[0], vec![1, 0]);
        assert_eq!(iso.derived[0], vec![1, 0]);
        assert!(Problem::new(&a, &c, KeyKind::Tuple, &QK).first(Mode::Iso).is_none());
        let par = quiver(2, &[(0, 1), (0, 1)]);
        assert_eq!(Problem::new(&par, &par, KeyKind::Tuple, &QK).count(Mode::Iso), 2);
    }

    #[test]
    fn set_keys_ignore_order_and_repeats() {
        let edge = Structure {
            base: vec![2],
            derived: vec![vec![vec![0, 1]]],
        };
        let point = Structure {
            base: vec![1],
            derived: vec![vec![vec![0]]],
        };
        let p = Problem::new(&edge, &point, KeyKind::Set, &[]);
        assert_eq!(p.count(Mode::Hom), 1);
        let empty_edge = Structure {
            base: vec![0],
            derived: vec![vec![vec![]]],
        };
        assert_eq!(Problem::new(&empty_edge, &point, KeyKind::Set, &[]).count(Mode::Hom), 0);
    }
}
