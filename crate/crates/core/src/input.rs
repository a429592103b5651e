//! The sectioned input file shared by the command line tools.
//!
//! ```text
//! # comment
//! ring z < y < x
//! J: x^2, x*y, y^2
//! G:
//!   x^2 : x^2 - y*z
//! query: x^3
//! I: x^2 - y*z, x*y, y^2
//! ```
//!
//! `ring` lists the variables from smallest to largest (`>` may be used to
//! list them from largest to smallest instead). `J:` and `I:` take comma
//! separated lists that may continue on the following lines. Generators of
//! `J` without a `G:` line get zero tails.

use crate::coeff::Rational;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::marked::{MarkedPolynomial, MarkedSet};
use crate::parse::{parse_polynomial_at, parse_term_at};
use crate::poly::Polynomial;
use crate::ring::Ring;
use crate::term::Term;

#[derive(Clone, Debug)]
pub struct InputFile {
    pub ring: Ring,
    pub ideal: Option<MonomialIdeal>,
    /// `HEAD : POLY` lines in file order.
    pub marked: Vec<MarkedPolynomial<Rational>>,
    pub queries: Vec<Polynomial<Rational>>,
    pub generators: Vec<Polynomial<Rational>>,
}

#[derive(Clone, Copy, PartialEq)]
enum Section {
    None,
    J,
    G,
    I,
}

/// One comma separated item with the column of its first character.
fn split_items(s: &str, col0: usize) -> Vec<(&str, usize)> {
    let mut out = Vec::new();
    let mut start = 0;
    for (i, c) in s.char_indices().chain(std::iter::once((s.len(), ','))) {
        if c == ',' {
            let item = &s[start..i];
            let lead = item.len() - item.trim_start().len();
            if !item.trim().is_empty() {
                out.push((item.trim(), col0 + s[..start + lead].chars().count()));
            }
            start = i + 1;
        }
    }
    out
}

fn parse_ring(rest: &str, line: usize, col0: usize) -> Result<Ring> {
    let (sep, ascending) = if rest.contains('>') { ('>', false) } else { ('<', true) };
    if rest.contains('<') && rest.contains('>') {
        return Err(Error::parse(line, col0 + 1, "mixed `<` and `>` in ring declaration"));
    }
    let mut names: Vec<String> = rest
        .split(sep)
        .map(|s| s.trim().to_string())
        .collect();
    if names.iter().any(String::is_empty) {
        return Err(Error::parse(line, col0 + 1, "empty variable name in ring declaration"));
    }
    if !ascending {
        names.reverse();
    }
    Ring::new(names).map_err(|e| Error::parse(line, col0 + 1, e.to_string()))
}

/// Parses the whole file.
pub fn parse_input(text: &str) -> Result<InputFile> {
    let mut ring: Option<Ring> = None;
    let mut j_items: Vec<(String, usize, usize)> = Vec::new();
    let mut saw_j = false;
    let mut marked = Vec::new();
    let mut queries = Vec::new();
    let mut generators = Vec::new();
    let mut section = Section::None;

    let need_ring = |ring: &Option<Ring>, line: usize| -> Result<Ring> {
        ring.clone()
            .ok_or_else(|| Error::parse(line, 1, "the `ring` line must come first"))
    };

    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let content = raw.split('#').next().unwrap();
        let trimmed = content.trim_start();
        if trimmed.trim().is_empty() {
            continue;
        }
        let indent = content.len() - trimmed.len();
        if let Some(rest) = trimmed.strip_prefix("ring ") {
            if ring.is_some() {
                return Err(Error::parse(line, indent + 1, "duplicate ring declaration"));
            }
            ring = Some(parse_ring(rest, line, indent + 5)?);
            section = Section::None;
        } else if let Some(rest) = trimmed.strip_prefix("J:") {
            need_ring(&ring, line)?;
            saw_j = true;
            section = Section::J;
            for (item, col) in split_items(rest, indent + 2) {
                j_items.push((item.to_string(), line, col));
            }
        } else if let Some(rest) = trimmed.strip_prefix("G:") {
            need_ring(&ring, line)?;
            if !rest.trim().is_empty() {
                return Err(Error::parse(line, indent + 3, "`G:` entries go on the following lines"));
            }
            section = Section::G;
        } else if let Some(rest) = trimmed.strip_prefix("query:") {
            let r = need_ring(&ring, line)?;
            queries.push(parse_polynomial_at(&r, rest, line, indent + 6)?);
            section = Section::None;
        } else if let Some(rest) = trimmed.strip_prefix("I:") {
            let r = need_ring(&ring, line)?;
            section = Section::I;
            for (item, col) in split_items(rest, indent + 2) {
                generators.push(parse_polynomial_at(&r, item, line, col)?);
            }
        } else {
            let r = need_ring(&ring, line)?;
            match section {
                Section::J => {
                    for (item, col) in split_items(content, 0) {
                        j_items.push((item.to_string(), line, col));
                    }
                }
                Section::I => {
                    for (item, col) in split_items(content, 0) {
                        generators.push(parse_polynomial_at(&r, item, line, col)?);
                    }
                }
                Section::G => {
                    let Some((head, poly)) = content.split_once(':') else {
                        return Err(Error::parse(line, indent + 1, "expected `HEAD : POLYNOMIAL`"));
                    };
                    let head_col = indent;
                    let h = parse_term_at(&r, head.trim(), line, head_col)?;
                    let p = parse_polynomial_at(&r, poly, line, head.chars().count() + 1)?;
                    let f = MarkedPolynomial::new(h, p)
                        .map_err(|e| Error::parse(line, indent + 1, e.to_string()))?;
                    marked.push(f);
                }
                Section::None => {
                    return Err(Error::parse(line, indent + 1, "line outside of any section"));
                }
            }
        }
    }

    let ring = ring.ok_or_else(|| Error::parse(1, 1, "missing `ring` declaration"))?;
    let ideal = if saw_j {
        let mut terms: Vec<Term> = Vec::new();
        for (item, line, col) in &j_items {
            terms.push(parse_term_at(&ring, item, *line, *col)?);
        }
        Some(MonomialIdeal::new(ring.clone(), terms)?)
    } else {
        None
    };
    Ok(InputFile {
        ring,
        ideal,
        marked,
        queries,
        generators,
    })
}

impl InputFile {
    pub fn require_ideal(&self) -> Result<&MonomialIdeal> {
        self.ideal
            .as_ref()
            .ok_or_else(|| Error::InvalidIdeal("the input has no `J:` section".into()))
    }

    /// The marked set of the `G:` section over `J`; generators without a
    /// line keep zero tails.
    pub fn marked_set(&self) -> Result<MarkedSet<Rational>> {
        let ideal = self.require_ideal()?.clone();
        let mut elements = self.marked.clone();
        for b in ideal.basis() {
            if !elements.iter().any(|f| f.head() == b) {
                elements.push(MarkedPolynomial::new(b.clone(), Polynomial::from_term(b.clone()))?);
            }
        }
        MarkedSet::new(ideal, elements)
    }
}
