//! Finitely presented groups.
//!
//! Presentation grammar:
//!
//! ```text
//! presentation := '<' [gens] ['|' [relation {',' relation}]] '>'
//! gens         := name {',' name}
//! relation     := word ['=' word]
//! word         := '1' | factor {['*'] factor}
//! factor       := atom ['^' ['-'] digits]
//! atom         := name | '(' word ')' | '[' word ',' word ']'
//! ```
//!
//! Names start with a letter and continue with letters, digits, `_` or `'`.
//! Juxtaposed names are split by longest match against the declared
//! generators, so `<a,b | abAB>` is not valid but `<a,b | ab a^-1 b^-1>` is.
//! `[u,v]` is `u^-1 v^-1 u v`; `u = v` is the relator `u v^-1`.

mod coset;
mod homcount;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::{AbelianPresentation, FinAbGroup, FiniteGroup};

pub use coset::{coset_table, finite_quotient, finite_quotient_with, todd_coxeter, CosetResult, CosetTable, FiniteQuotient};
pub use homcount::{hom_count, hom_count_with, hom_profile, hom_profile_with, HomCountProfile, ProfileEntry};

/// A word in signed 1-based generator letters: `k` is generator `k-1`,
/// `-k` its inverse.
pub type Word = Vec<i32>;

/// Cancels adjacent inverse pairs.
pub fn free_reduce(w: &[i32]) -> Word {
    let mut out: Word = Vec::with_capacity(w.len());
    for &x in w {
        if out.last() == Some(&-x) {
            out.pop();
        } else {
            out.push(x);
        }
    }
    out
}

/// Free and cyclic reduction.
pub fn cyclic_reduce(w: &[i32]) -> Word {
    let mut v = free_reduce(w);
    while v.len() >= 2 && v[0] == -v[v.len() - 1] {
        v.pop();
        v.remove(0);
    }
    v
}

pub fn invert(w: &[i32]) -> Word {
    w.iter().rev().map(|&x| -x).collect()
}

/// `w^k` for any integer `k`.
pub fn power(w: &[i32], k: i64) -> Word {
    let base = if k < 0 { invert(w) } else { w.to_vec() };
    let mut out = Vec::new();
    for _ in 0..k.unsigned_abs() {
        out.extend_from_slice(&base);
    }
    free_reduce(&out)
}

/// `u^-1 v^-1 u v`.
pub fn commutator(u: &[i32], v: &[i32]) -> Word {
    let mut w = invert(u);
    w.extend(invert(v));
    w.extend_from_slice(u);
    w.extend_from_slice(v);
    free_reduce(&w)
}

pub fn letter(gen: usize) -> i32 {
    gen as i32 + 1
}

/// Renumbers letters so generator `k` becomes generator `k + offset`.
pub fn shift(w: &[i32], offset: usize) -> Word {
    w.iter().map(|&x| x.signum() * (x.abs() + offset as i32)).collect()
}

/// Relators presenting `g` on `g.generators()`: one per Cayley-graph edge
/// outside the shortlex spanning tree. Also returns each element's
/// normal-form word.
pub fn cayley_relators(g: &FiniteGroup) -> (Vec<Word>, Vec<Word>) {
    let words: Vec<Word> = g.words().into_iter().map(|w| w.into_iter().map(letter).collect()).collect();
    let mut rels = Vec::new();
    for x in g.elements() {
        for (s, &gen) in g.generators().iter().enumerate() {
            let mut r = words[x].clone();
            r.push(letter(s));
            r.extend(invert(&words[g.mul(x, gen)]));
            let r = cyclic_reduce(&r);
            if !r.is_empty() && !rels.contains(&r) {
                rels.push(r);
            }
        }
    }
    (rels, words)
}

/// A presentation of a finite group on its generators, named `prefix1..`.
pub fn presentation_of(g: &FiniteGroup, prefix: &str) -> GroupPresentation {
    let names = (1..=g.generators().len()).map(|i| format!("{prefix}{i}")).collect();
    GroupPresentation::new(names, cayley_relators(g).0).expect("generated letters are in range")
}

/// Generators and relators; relators are freely reduced, nonempty and
/// pairwise distinct.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupPresentation {
    gens: Vec<String>,
    relators: Vec<Word>,
}

impl GroupPresentation {
    pub fn new(gens: Vec<String>, relators: Vec<Word>) -> crate::Result<Self> {
        let k = gens.len() as i32;
        for (i, name) in gens.iter().enumerate() {
            if !valid_name(name) {
                return Err(crate::Error::invalid(format!("{name:?} is not a valid generator name")));
            }
            if gens[..i].contains(name) {
                return Err(crate::Error::invalid(format!("generator {name:?} declared twice")));
            }
        }
        let mut out: Vec<Word> = Vec::new();
        for r in relators {
            if let Some(&x) = r.iter().find(|&&x| x == 0 || x.abs() > k) {
                return Err(crate::Error::invalid(format!("letter {x} does not name a generator")));
            }
            let r = free_reduce(&r);
            if !r.is_empty() && !out.contains(&r) {
                out.push(r);
            }
        }
        Ok(GroupPresentation { gens, relators: out })
    }

    /// Generators named `x1..xk`.
    pub fn with_default_names(k: usize, relators: Vec<Word>) -> crate::Result<Self> {
        Self::new((1..=k).map(|i| format!("x{i}")).collect(), relators)
    }

    pub fn trivial() -> Self {
        GroupPresentation { gens: vec![], relators: vec![] }
    }

    pub fn generators(&self) -> &[String] {
        &self.gens
    }

    pub fn num_generators(&self) -> usize {
        self.gens.len()
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    /// `(free rank, torsion)` of the abelianization.
    pub fn abelianization(&self) -> (usize, FinAbGroup) {
        let k = self.gens.len();
        let rows: Vec<Vec<i64>> = self
            .relators
            .iter()
            .map(|r| {
                let mut row = vec![0i64; k];
                for &x in r {
                    row[x.unsigned_abs() as usize - 1] += x.signum() as i64;
                }
                row
            })
            .collect();
        let pres = AbelianPresentation::new(k, &rows);
        (pres.free_rank(), pres.torsion())
    }

    pub fn format_word(&self, w: &[i32]) -> String {
        if w.is_empty() {
            return "1".into();
        }
        let mut parts = Vec::new();
        let mut i = 0;
        while i < w.len() {
            let x = w[i];
            let mut j = i;
            while j < w.len() && w[j] == x {
                j += 1;
            }
            let run = (j - i) as i64 * x.signum() as i64;
            let name = &self.gens[x.unsigned_abs() as usize - 1];
            parts.push(if run == 1 { name.clone() } else { format!("{name}^{run}") });
            i = j;
        }
        parts.join("*")
    }
}

impl fmt::Display for GroupPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rels: Vec<String> = self.relators.iter().map(|r| self.format_word(r)).collect();
        write!(f, "<{} | {}>", self.gens.join(", "), rels.join(", "))
    }
}

fn valid_name(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '\'')
}

/// A syntax error with the byte offset where it was detected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub position: usize,
    pub expected: Vec<String>,
    pub found: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at offset {}: expected {}, found {}", self.position, self.expected.join(" or "), self.found)
    }
}

impl std::error::Error for ParseError {}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    gens: Vec<String>,
}

type PResult<T> = std::result::Result<T, ParseError>;

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.peek_raw() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek_raw(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.peek_raw()
    }

    fn error(&mut self, expected: &[&str]) -> ParseError {
        self.skip_ws();
        let found = match self.peek_raw() {
            Some(c) => format!("{c:?}"),
            None => "end of input".into(),
        };
        ParseError { position: self.pos, expected: expected.iter().map(|s| s.to_string()).collect(), found }
    }

    fn expect(&mut self, c: char) -> PResult<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&[&format!("'{c}'")]))
        }
    }

    fn name(&mut self) -> PResult<String> {
        self.skip_ws();
        let rest = &self.src[self.pos..];
        let len = rest
            .char_indices()
            .take_while(|&(i, c)| {
                if i == 0 {
                    c.is_ascii_alphabetic()
                } else {
                    c.is_ascii_alphanumeric() || c == '_' || c == '\''
                }
            })
            .count();
        if len == 0 {
            return Err(self.error(&["generator name"]));
        }
        self.pos += len;
        Ok(rest[..len].to_string())
    }

    /// Longest declared generator that prefixes the input.
    fn generator(&mut self) -> PResult<i32> {
        self.skip_ws();
        let rest = &self.src[self.pos..];
        let best = self
            .gens
            .iter()
            .enumerate()
            .filter(|(_, g)| rest.starts_with(g.as_str()))
            .max_by_key(|(_, g)| g.len());
        match best {
            Some((i, g)) => {
                self.pos += g.len();
                Ok(letter(i))
            }
            None => {
                let expected: Vec<String> = self.gens.iter().map(|g| format!("'{g}'")).collect();
                let refs: Vec<&str> = expected.iter().map(String::as_str).collect();
                Err(self.error(&refs))
            }
        }
    }

    fn integer(&mut self) -> PResult<i64> {
        self.skip_ws();
        let start = self.pos;
        if self.peek_raw() == Some('-') {
            self.pos += 1;
        }
        let digits = self.src[self.pos..].chars().take_while(|c| c.is_ascii_digit()).count();
        if digits == 0 {
            self.pos = start;
            return Err(self.error(&["integer"]));
        }
        self.pos += digits;
        self.src[start..self.pos].parse().map_err(|_| ParseError {
            position: start,
            expected: vec!["integer in range".into()],
            found: self.src[start..self.pos].to_string(),
        })
    }

    fn atom(&mut self) -> PResult<Word> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let w = self.word()?;
                self.expect(')')?;
                Ok(w)
            }
            Some('[') => {
                self.pos += 1;
                let u = self.word()?;
                self.expect(',')?;
                let v = self.word()?;
                self.expect(']')?;
                Ok(commutator(&u, &v))
            }
            Some(c) if c.is_ascii_alphabetic() => Ok(vec![self.generator()?]),
            _ => Err(self.error(&["generator", "'('", "'['"])),
        }
    }

    fn factor(&mut self) -> PResult<Word> {
        let a = self.atom()?;
        if self.peek() == Some('^') {
            self.pos += 1;
            let k = self.integer()?;
            return Ok(power(&a, k));
        }
        Ok(a)
    }

    fn starts_factor(&mut self) -> bool {
        matches!(self.peek(), Some(c) if c == '(' || c == '[' || c.is_ascii_alphabetic())
    }

    fn word(&mut self) -> PResult<Word> {
        if self.peek() == Some('1') {
            self.pos += 1;
            return Ok(vec![]);
        }
        let mut w = self.factor()?;
        loop {
            if self.peek() == Some('*') {
                self.pos += 1;
                w.extend(self.factor()?);
            } else if self.starts_factor() {
                w.extend(self.factor()?);
            } else {
                break;
            }
        }
        Ok(free_reduce(&w))
    }

    fn relation(&mut self) -> PResult<Word> {
        let lhs = self.word()?;
        if self.peek() == Some('=') {
            self.pos += 1;
            let rhs = self.word()?;
            let mut w = lhs;
            w.extend(invert(&rhs));
            return Ok(free_reduce(&w));
        }
        Ok(lhs)
    }

    fn presentation(&mut self) -> PResult<GroupPresentation> {
        self.expect('<')?;
        if !matches!(self.peek(), Some('|') | Some('>')) {
            loop {
                let at = self.pos;
                let name = self.name()?;
                if self.gens.contains(&name) {
                    return Err(ParseError { position: at, expected: vec!["new generator name".into()], found: name });
                }
                self.gens.push(name);
                if self.peek() == Some(',') {
                    self.pos += 1;
                } else {
                    break;
                }
            }
        }
        let mut relators = Vec::new();
        if self.peek() == Some('|') {
            self.pos += 1;
            if self.peek() != Some('>') {
                loop {
                    relators.push(self.relation()?);
                    if self.peek() == Some(',') {
                        self.pos += 1;
                    } else {
                        break;
                    }
                }
            }
        }
        match self.peek() {
            Some('>') => self.pos += 1,
            _ => return Err(self.error(&["','", "'|'", "'>'"])),
        }
        if self.peek().is_some() {
            return Err(self.error(&["end of input"]));
        }
        Ok(GroupPresentation::new(self.gens.clone(), relators).expect("parser produces valid letters"))
    }
}

pub fn parse_presentation(text: &str) -> std::result::Result<GroupPresentation, ParseError> {
    Parser { src: text, pos: 0, gens: Vec::new() }.presentation()
}

impl std::str::FromStr for GroupPresentation {
    type Err = ParseError;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        parse_presentation(s)
    }
}
