//! Explicit parameter names: lines `NAME SIGN HEAD TAIL`.

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::parse::{format_term, parse_term_at};
use crate::ring::Ring;
use crate::term::Term;

use super::{ParameterLabel, ParameterRing};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamingEntry {
    pub name: String,
    pub sign: i8,
    pub head: Term,
    pub tail: Term,
}

/// Parameter names in file order; the file order becomes the parameter order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamingMap {
    pub entries: Vec<NamingEntry>,
}

pub fn parse_naming_map(ring: &Ring, text: &str) -> Result<NamingMap> {
    let mut entries = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let content = raw.split('#').next().unwrap();
        if content.trim().is_empty() {
            continue;
        }
        let mut fields = Vec::new();
        let mut start = None;
        for (i, c) in content.char_indices().chain(std::iter::once((content.len(), ' '))) {
            match (c.is_whitespace(), start) {
                (false, None) => start = Some(i),
                (true, Some(s)) => {
                    fields.push((&content[s..i], content[..s].chars().count()));
                    start = None;
                }
                _ => {}
            }
        }
        if fields.len() != 4 {
            return Err(Error::parse(line, 1, "expected `NAME SIGN HEAD TAIL`"));
        }
        let name = fields[0].0.to_string();
        if !crate::ring::is_identifier(&name) {
            return Err(Error::parse(line, 1, format!("invalid parameter name `{name}`")));
        }
        let sign = match fields[1].0 {
            "+" => 1,
            "-" => -1,
            other => {
                return Err(Error::parse(
                    line,
                    fields[1].1 + 1,
                    format!("sign must be `+` or `-`, found `{other}`"),
                ))
            }
        };
        let head = parse_term_at(ring, fields[2].0, line, fields[2].1)?;
        let tail = parse_term_at(ring, fields[3].0, line, fields[3].1)?;
        entries.push(NamingEntry { name, sign, head, tail });
    }
    Ok(NamingMap { entries })
}

impl NamingMap {
    /// Orders `labels` by the map; every label must be named exactly once.
    pub(crate) fn apply(&self, ideal: &MonomialIdeal, labels: Vec<ParameterLabel>) -> Result<ParameterRing> {
        let r = ideal.ring();
        let mut used = vec![false; labels.len()];
        let mut out = ParameterRing {
            labels: Vec::new(),
            names: Vec::new(),
            signs: Vec::new(),
        };
        for e in &self.entries {
            if out.names.contains(&e.name) {
                return Err(Error::InvalidIdeal(format!("parameter `{}` named twice", e.name)));
            }
            let k = labels
                .iter()
                .position(|l| l.head == e.head && l.tail == e.tail)
                .ok_or_else(|| {
                    Error::InvalidIdeal(format!(
                        "parameter `{}` does not match a generator and sous-escalier term: {} -> {}",
                        e.name,
                        format_term(r, &e.head),
                        format_term(r, &e.tail)
                    ))
                })?;
            if used[k] {
                return Err(Error::InvalidIdeal(format!(
                    "coefficient {} -> {} named twice",
                    format_term(r, &e.head),
                    format_term(r, &e.tail)
                )));
            }
            used[k] = true;
            out.labels.push(labels[k].clone());
            out.names.push(e.name.clone());
            out.signs.push(e.sign);
        }
        if let Some(k) = used.iter().position(|u| !u) {
            return Err(Error::InvalidIdeal(format!(
                "no name for the coefficient {} -> {}",
                format_term(r, &labels[k].head),
                format_term(r, &labels[k].tail)
            )));
        }
        Ok(out)
    }
}
