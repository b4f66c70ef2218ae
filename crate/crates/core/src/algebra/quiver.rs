use std::collections::{BTreeMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactla::Field;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Arrow {
    pub name: String,
    #[serde(rename = "from")]
    pub source: String,
    #[serde(rename = "to")]
    pub target: String,
}

/// Finite quiver. Arrows compose left to right: `a*b` means "first `a`, then `b`".
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "QuiverRepr", into = "QuiverRepr")]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
    // (source, target) as vertex indices
    ends: Vec<(usize, usize)>,
}

#[derive(Serialize, Deserialize)]
struct QuiverRepr {
    vertices: Vec<String>,
    #[serde(default)]
    arrows: Vec<Arrow>,
}

impl TryFrom<QuiverRepr> for Quiver {
    type Error = Error;
    fn try_from(r: QuiverRepr) -> Result<Self> {
        Quiver::new(r.vertices, r.arrows)
    }
}

impl From<Quiver> for QuiverRepr {
    fn from(q: Quiver) -> Self {
        QuiverRepr { vertices: q.vertices, arrows: q.arrows }
    }
}

impl Quiver {
    pub fn new(vertices: Vec<String>, arrows: Vec<Arrow>) -> Result<Self> {
        let mut seen = HashSet::new();
        for v in &vertices {
            if !seen.insert(v.as_str()) {
                return Err(Error::InvalidQuiver(format!("duplicate vertex `{v}`")));
            }
        }
        let index = |v: &str| vertices.iter().position(|x| x == v);
        let mut names = HashSet::new();
        let mut ends = Vec::with_capacity(arrows.len());
        for a in &arrows {
            if !is_ident(&a.name) {
                return Err(Error::InvalidQuiver(format!("arrow name `{}` is not an identifier", a.name)));
            }
            if !names.insert(a.name.as_str()) {
                return Err(Error::InvalidQuiver(format!("duplicate arrow `{}`", a.name)));
            }
            let s = index(&a.source)
                .ok_or_else(|| Error::InvalidQuiver(format!("arrow `{}` starts at unknown vertex `{}`", a.name, a.source)))?;
            let t = index(&a.target)
                .ok_or_else(|| Error::InvalidQuiver(format!("arrow `{}` ends at unknown vertex `{}`", a.name, a.target)))?;
            ends.push((s, t));
        }
        Ok(Quiver { vertices, arrows, ends })
    }

    /// Shorthand: `arrows` given as `(name, source, target)` triples.
    pub fn from_triples(vertices: &[&str], arrows: &[(&str, &str, &str)]) -> Result<Self> {
        Quiver::new(
            vertices.iter().map(|s| s.to_string()).collect(),
            arrows
                .iter()
                .map(|&(n, s, t)| Arrow { name: n.into(), source: s.into(), target: t.into() })
                .collect(),
        )
    }

    /// Linearly oriented A_n: `1 -a1-> 2 -a2-> ... -> n`.
    pub fn linear_a(n: usize) -> Self {
        let vertices: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
        let arrows = (1..n)
            .map(|i| Arrow { name: format!("a{i}"), source: i.to_string(), target: (i + 1).to_string() })
            .collect();
        Quiver::new(vertices, arrows).expect("linear quiver is valid")
    }

    /// One vertex with a single loop `x`.
    pub fn one_loop() -> Self {
        Quiver::from_triples(&["1"], &[("x", "1", "1")]).expect("loop quiver is valid")
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_arrows(&self) -> usize {
        self.arrows.len()
    }

    pub fn source(&self, a: usize) -> usize {
        self.ends[a].0
    }

    pub fn target(&self, a: usize) -> usize {
        self.ends[a].1
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    /// Same vertices, every arrow reversed (the quiver of the opposite algebra).
    pub fn reversed(&self) -> Quiver {
        Quiver {
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| Arrow { name: a.name.clone(), source: a.target.clone(), target: a.source.clone() })
                .collect(),
            ends: self.ends.iter().map(|&(s, t)| (t, s)).collect(),
        }
    }

    /// `(source, target)` of a nonempty composable word, or `None`.
    pub fn word_ends(&self, word: &[usize]) -> Option<(usize, usize)> {
        let (&first, rest) = word.split_first()?;
        let mut t = self.target(first);
        for &a in rest {
            if self.source(a) != t {
                return None;
            }
            t = self.target(a);
        }
        Some((self.source(first), t))
    }

    pub fn word_name(&self, word: &[usize]) -> String {
        word.iter().map(|&a| self.arrows[a].name.as_str()).collect::<Vec<_>>().join("*")
    }
}

fn is_ident(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// A linear combination of parallel paths of length at least two.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationExpr {
    /// `(coefficient, arrow indices)`, words sorted, coefficients nonzero.
    pub terms: Vec<(u32, Vec<usize>)>,
}

impl RelationExpr {
    /// Common `(source, target)` of the terms; `None` for the zero relation.
    pub fn ends(&self, q: &Quiver) -> Option<(usize, usize)> {
        self.terms.first().and_then(|(_, w)| q.word_ends(w))
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(u64),
    Ident(String),
    Star,
    Plus,
    Minus,
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '*' => {
                out.push((i, Tok::Star));
                i += 1
            }
            '+' => {
                out.push((i, Tok::Plus));
                i += 1
            }
            '-' => {
                out.push((i, Tok::Minus));
                i += 1
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n = text[start..i]
                    .parse::<u64>()
                    .map_err(|_| Error::Syntax { pos: start, msg: "integer too large".into() })?;
                out.push((start, Tok::Int(n)));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start, Tok::Ident(text[start..i].to_string())));
            }
            _ => return Err(Error::Syntax { pos: i, msg: format!("unexpected character `{c}`") }),
        }
    }
    Ok(out)
}

/// Parses `rel := term (('+'|'-') term)*`, `term := [int '*'] word`,
/// `word := arrow ('*' arrow)*`; a leading sign is allowed.
///
/// Equal words are merged and zero terms dropped. Every word must be a
/// composable path of length at least two and all words must be parallel.
pub fn parse_relation(text: &str, q: &Quiver, field: Field) -> Result<RelationExpr> {
    let toks = lex(text)?;
    let end = text.len();
    let mut pos = 0usize;
    let at = |k: usize| toks.get(k).map_or(end, |t| t.0);
    let mut raw: Vec<(u32, Vec<usize>, usize)> = Vec::new();
    let mut sign_neg = false;
    match toks.first() {
        Some((_, Tok::Minus)) => {
            sign_neg = true;
            pos = 1;
        }
        Some((_, Tok::Plus)) => pos = 1,
        None => return Err(Error::Syntax { pos: 0, msg: "empty relation".into() }),
        _ => {}
    }
    loop {
        let term_pos = at(pos);
        let mut coeff = 1u64;
        if let Some((_, Tok::Int(n))) = toks.get(pos) {
            coeff = *n;
            pos += 1;
            match toks.get(pos) {
                Some((_, Tok::Star)) => pos += 1,
                _ => return Err(Error::Syntax { pos: at(pos), msg: "expected `*` after coefficient".into() }),
            }
        }
        let mut word = Vec::new();
        loop {
            match toks.get(pos) {
                Some((p, Tok::Ident(name))) => {
                    let a = q
                        .arrow_index(name)
                        .ok_or_else(|| Error::Syntax { pos: *p, msg: format!("unknown arrow `{name}`") })?;
                    word.push(a);
                    pos += 1;
                }
                _ => return Err(Error::Syntax { pos: at(pos), msg: "expected an arrow name".into() }),
            }
            match toks.get(pos) {
                Some((_, Tok::Star)) => pos += 1,
                _ => break,
            }
        }
        let mut c = field.from_u64(coeff);
        if sign_neg {
            c = field.neg(c);
        }
        raw.push((c, word, term_pos));
        match toks.get(pos) {
            None => break,
            Some((_, Tok::Plus)) => sign_neg = false,
            Some((_, Tok::Minus)) => sign_neg = true,
            Some((p, _)) => return Err(Error::Syntax { pos: *p, msg: "expected `+`, `-` or end of input".into() }),
        }
        pos += 1;
    }

    let mut ends: Option<((usize, usize), String)> = None;
    for (_, w, _) in &raw {
        let name = q.word_name(w);
        let e = q.word_ends(w).ok_or_else(|| Error::NonComposable(name.clone()))?;
        match &ends {
            None => ends = Some((e, name)),
            Some((e0, n0)) if *e0 != e => return Err(Error::NonParallel(n0.clone(), name)),
            _ => {}
        }
    }
    if let Some((_, w, _)) = raw.iter().find(|(_, w, _)| w.len() < 2) {
        return Err(Error::NotAdmissible(q.word_name(w), w.len()));
    }
    let mut merged: BTreeMap<Vec<usize>, u32> = BTreeMap::new();
    for (c, w, _) in raw {
        let slot = merged.entry(w).or_insert(0);
        *slot = field.add(*slot, c);
    }
    let terms = merged.into_iter().filter(|(_, c)| *c != 0).map(|(w, c)| (c, w)).collect();
    Ok(RelationExpr { terms })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square() -> Quiver {
        Quiver::from_triples(
            &["1", "2", "3", "4"],
            &[("a", "1", "2"), ("b", "2", "4"), ("c", "1", "3"), ("d", "3", "4")],
        )
        .unwrap()
    }

    #[test]
    fn single_word() {
        let q = Quiver::linear_a(3);
        let r = parse_relation("a1*a2", &q, Field::default()).unwrap();
        assert_eq!(r.terms, vec![(1, vec![0, 1])]);
    }

    #[test]
    fn commutativity_with_coefficient() {
        let f = Field::default();
        let r = parse_relation("a*b - 2*c*d", &square(), f).unwrap();
        let coeffs: Vec<u32> = r.terms.iter().map(|t| t.0).collect();
        assert_eq!(coeffs, vec![1, f.characteristic() - 2]);
    }

    #[test]
    fn leading_sign_and_merging() {
        let f = Field::new(7).unwrap();
        let r = parse_relation("-a*b + 3*a*b", &square(), f).unwrap();
        assert_eq!(r.terms, vec![(2, vec![0, 1])]);
        let z = parse_relation("a*b - a*b", &square(), f).unwrap();
        assert!(z.terms.is_empty());
    }

    #[test]
    fn errors() {
        let q = Quiver::from_triples(&["1", "2", "3"], &[("a", "1", "2"), ("b", "2", "3")]).unwrap();
        let f = Field::default();
        assert!(matches!(parse_relation("a + b", &q, f), Err(Error::NonParallel(..))));
        assert!(matches!(parse_relation("a", &q, f), Err(Error::NotAdmissible(_, 1))));
        assert!(matches!(parse_relation("b*a", &q, f), Err(Error::NonComposable(_))));
        assert!(matches!(parse_relation("a*b +", &q, f), Err(Error::Syntax { pos: 5, .. })));
        assert!(matches!(parse_relation("a*$", &q, f), Err(Error::Syntax { pos: 2, .. })));
        assert!(matches!(parse_relation("a*z", &q, f), Err(Error::Syntax { pos: 2, .. })));
        assert!(matches!(parse_relation("2 a*b", &q, f), Err(Error::Syntax { pos: 2, .. })));
    }

    #[test]
    fn non_parallel_on_paths() {
        let q = Quiver::from_triples(
            &["1", "2", "3", "4"],
            &[("a", "1", "2"), ("b", "2", "3"), ("c", "2", "3"), ("d", "3", "4")],
        )
        .unwrap();
        let f = Field::default();
        assert!(parse_relation("a*b - a*c", &q, f).is_ok());
        assert!(matches!(parse_relation("a*b + b*d", &q, f), Err(Error::NonParallel(..))));
    }

    #[test]
    fn invalid_quivers() {
        assert!(Quiver::from_triples(&["1", "1"], &[]).is_err());
        assert!(Quiver::from_triples(&["1"], &[("a", "1", "2")]).is_err());
        assert!(Quiver::from_triples(&["1"], &[("a", "1", "1"), ("a", "1", "1")]).is_err());
    }
}
