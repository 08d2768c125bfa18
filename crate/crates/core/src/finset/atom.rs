//! Atoms: the elements of every finite carrier.
//!
//! An atom is either a plain symbol or one of three compound forms produced by
//! constructions:
//!
//! ```text
//! symbol  := any run of characters other than ( ) { } [ ] , : " \ and whitespace
//! tuple   := "(" [atom ("," atom)*] ")"
//! set     := "{" [atom ("," atom)*] "}"          members sorted, no repeats
//! map     := "[" [atom ":" atom ("," ...)*] "]"  keys sorted, no repeats
//! ```
//!
//! Equality, ordering and hashing all go through the canonical text, so two
//! atoms are equal exactly when they print the same.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::error::{Error, Result};

#[derive(Clone)]
pub struct Atom(Arc<Inner>);

struct Inner {
    text: Box<str>,
    node: Node,
}

/// Structural view of an atom.
#[derive(Debug)]
pub enum Node {
    Symbol,
    Tuple(Vec<Atom>),
    Set(Vec<Atom>),
    Map(Vec<(Atom, Atom)>),
}

fn reserved(c: char) -> bool {
    matches!(c, '(' | ')' | '{' | '}' | '[' | ']' | ',' | ':' | '"' | '\\') || c.is_whitespace()
}

impl Atom {
    fn from_parts(text: String, node: Node) -> Atom {
        Atom(Arc::new(Inner {
            text: text.into_boxed_str(),
            node,
        }))
    }

    /// A plain symbol. Fails on empty names or reserved characters.
    pub fn symbol(name: &str) -> Result<Atom> {
        if name.is_empty() {
            return Err(Error::AtomSyntax {
                text: name.into(),
                reason: "empty symbol".into(),
            });
        }
        if let Some(c) = name.chars().find(|&c| reserved(c)) {
            return Err(Error::AtomSyntax {
                text: name.into(),
                reason: format!("reserved character {c:?} in symbol"),
            });
        }
        Ok(Atom::from_parts(name.to_owned(), Node::Symbol))
    }

    /// Symbol for a literal label known to be valid. Panics otherwise.
    pub fn label(name: &str) -> Atom {
        Atom::symbol(name).unwrap_or_else(|e| panic!("{e}"))
    }

    pub fn int(n: usize) -> Atom {
        Atom::from_parts(n.to_string(), Node::Symbol)
    }

    pub fn tuple(items: Vec<Atom>) -> Atom {
        let mut text = String::with_capacity(2 + items.iter().map(|a| a.len() + 1).sum::<usize>());
        text.push('(');
        for (i, a) in items.iter().enumerate() {
            if i > 0 {
                text.push(',');
            }
            text.push_str(a.text());
        }
        text.push(')');
        Atom::from_parts(text, Node::Tuple(items))
    }

    pub fn pair(a: Atom, b: Atom) -> Atom {
        Atom::tuple(vec![a, b])
    }

    /// Subset atom; members are sorted and deduplicated.
    pub fn set(mut items: Vec<Atom>) -> Atom {
        items.sort();
        items.dedup();
        let mut text = String::from("{");
        for (i, a) in items.iter().enumerate() {
            if i > 0 {
                text.push(',');
            }
            text.push_str(a.text());
        }
        text.push('}');
        Atom::from_parts(text, Node::Set(items))
    }

    /// Function atom. Keys must be distinct.
    pub fn map(mut entries: Vec<(Atom, Atom)>) -> Result<Atom> {
        entries.sort_by(|x, y| x.0.cmp(&y.0));
        if let Some(w) = entries.windows(2).find(|w| w[0].0 == w[1].0) {
            return Err(Error::Duplicate(w[0].0.to_string()));
        }
        let mut text = String::from("[");
        for (i, (k, v)) in entries.iter().enumerate() {
            if i > 0 {
                text.push(',');
            }
            text.push_str(k.text());
            text.push(':');
            text.push_str(v.text());
        }
        text.push(']');
        Ok(Atom::from_parts(text, Node::Map(entries)))
    }

    pub fn text(&self) -> &str {
        &self.0.text
    }

    pub fn len(&self) -> usize {
        self.0.text.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn node(&self) -> &Node {
        &self.0.node
    }

    pub fn as_tuple(&self) -> Option<&[Atom]> {
        match &self.0.node {
            Node::Tuple(items) => Some(items),
            _ => None,
        }
    }

    pub fn as_set(&self) -> Option<&[Atom]> {
        match &self.0.node {
            Node::Set(items) => Some(items),
            _ => None,
        }
    }

    pub fn as_map(&self) -> Option<&[(Atom, Atom)]> {
        match &self.0.node {
            Node::Map(entries) => Some(entries),
            _ => None,
        }
    }

    /// Looks up `key` in a function atom.
    pub fn lookup(&self, key: &Atom) -> Option<&Atom> {
        let entries = self.as_map()?;
        entries
            .binary_search_by(|(k, _)| k.cmp(key))
            .ok()
            .map(|i| &entries[i].1)
    }

    /// Parses canonical or non-canonical text; the result is canonical.
    pub fn parse(text: &str) -> Result<Atom> {
        let mut p = Parser { src: text, pos: 0 };
        let atom = p.atom()?;
        p.skip_ws();
        if p.pos != text.len() {
            return Err(p.err("trailing characters"));
        }
        Ok(atom)
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, reason: &str) -> Error {
        Error::AtomSyntax {
            text: self.src.to_owned(),
            reason: format!("{reason} at byte {}", self.pos),
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn eat(&mut self, want: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(want) {
            self.pos += want.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, want: char) -> Result<()> {
        if self.eat(want) {
            Ok(())
        } else {
            Err(self.err(&format!("expected {want:?}")))
        }
    }

    fn list(&mut self, close: char) -> Result<Vec<Atom>> {
        let mut items = Vec::new();
        if self.eat(close) {
            return Ok(items);
        }
        loop {
            items.push(self.atom()?);
            if self.eat(close) {
                return Ok(items);
            }
            self.expect(',')?;
        }
    }

    fn atom(&mut self) -> Result<Atom> {
        self.skip_ws();
        match self.peek() {
            None => Err(self.err("unexpected end of input")),
            Some('(') => {
                self.pos += 1;
                Ok(Atom::tuple(self.list(')')?))
            }
            Some('{') => {
                self.pos += 1;
                let items = self.list('}')?;
                let n = items.len();
                let set = Atom::set(items);
                if set.as_set().map_or(0, <[Atom]>::len) != n {
                    return Err(self.err("repeated set member"));
                }
                Ok(set)
            }
            Some('[') => {
                self.pos += 1;
                let mut entries = Vec::new();
                if !self.eat(']') {
                    loop {
                        let k = self.atom()?;
                        self.expect(':')?;
                        let v = self.atom()?;
                        entries.push((k, v));
                        if self.eat(']') {
                            break;
                        }
                        self.expect(',')?;
                    }
                }
                Atom::map(entries)
            }
            Some(c) if reserved(c) => Err(self.err(&format!("unexpected {c:?}"))),
            Some(_) => {
                let start = self.pos;
                while let Some(c) = self.peek() {
                    if reserved(c) {
                        break;
                    }
                    self.pos += c.len_utf8();
                }
                Atom::symbol(&self.src[start..self.pos])
            }
        }
    }
}

impl PartialEq for Atom {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.text == other.0.text
    }
}

impl Eq for Atom {}

impl PartialOrd for Atom {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Atom {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.text.as_bytes().cmp(other.0.text.as_bytes())
    }
}

impl Hash for Atom {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.text.hash(state);
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.text)
    }
}

impl fmt::Debug for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Atom({})", self.0.text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compound_text_is_canonical() {
        let a = Atom::label("a");
        let b = Atom::label("b");
        assert_eq!(Atom::pair(a.clone(), b.clone()).text(), "(a,b)");
        assert_eq!(Atom::set(vec![b.clone(), a.clone(), b.clone()]).text(), "{a,b}");
        assert_eq!(Atom::tuple(vec![]).text(), "()");
        let m = Atom::map(vec![(b.clone(), a.clone()), (a.clone(), a.clone())]).unwrap();
        assert_eq!(m.text(), "[a:a,b:a]");
        assert_eq!(m.lookup(&b), Some(&a));
    }

    #[test]
    fn parse_round_trips_and_canonicalizes() {
        for text in ["x", "(a,(b,c))", "{}", "{a,{b}}", "[x:u,y:v]", "([a:b],[],[c:(d,e)])"] {
            assert_eq!(Atom::parse(text).unwrap().text(), text);
        }
        assert_eq!(Atom::parse(" { b , a } ").unwrap().text(), "{a,b}");
        assert_eq!(Atom::parse("[y:1, x:2]").unwrap().text(), "[x:2,y:1]");
    }

    #[test]
    fn parse_rejects_malformed_text() {
        for text in ["", "(a", "a b", "{a,a}", "[a:1,a:2]", "(a,)", "a)", "\"q\""] {
            assert!(Atom::parse(text).is_err(), "{text:?} should fail");
        }
        assert!(Atom::symbol("a,b").is_err());
    }

    #[test]
    fn structure_is_recoverable() {
        let t = Atom::parse("({v,w},(e,e))").unwrap();
        let parts = t.as_tuple().unwrap();
        assert_eq!(parts[0].as_set().unwrap().len(), 2);
        assert_eq!(parts[1].as_tuple().unwrap()[1].text(), "e");
    }
}
