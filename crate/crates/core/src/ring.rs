use std::sync::Arc;

use crate::error::{Error, Result};
use crate::term::{terms_of_degree, Term};

/// A polynomial ring `K[x_0, ..., x_n]` with named variables, listed from the
/// smallest (`x_0`) to the largest (`x_n`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ring {
    names: Arc<[String]>,
}

impl Ring {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::InvalidIdeal("ring needs at least one variable".into()));
        }
        for (i, a) in names.iter().enumerate() {
            if !is_identifier(a) {
                return Err(Error::parse(1, 1, format!("invalid variable name `{a}`")));
            }
            if names[..i].contains(a) {
                return Err(Error::parse(1, 1, format!("duplicate variable name `{a}`")));
            }
        }
        Ok(Ring {
            names: names.into(),
        })
    }

    /// Ring `K[z, y, x]` with `z < y < x`, used throughout the examples.
    pub fn xyz() -> Self {
        Ring::new(["z", "y", "x"]).unwrap()
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, var: usize) -> &str {
        &self.names[var]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn one(&self) -> Term {
        Term::one(self.nvars())
    }

    pub fn var(&self, index: usize) -> Term {
        Term::var(self.nvars(), index)
    }

    pub fn terms_of_degree(&self, m: u32) -> Vec<Term> {
        terms_of_degree(self.nvars(), m)
    }

    pub fn check(&self, t: &Term) -> Result<()> {
        if t.nvars() != self.nvars() {
            return Err(Error::RingMismatch {
                expected: self.nvars(),
                found: t.nvars(),
            });
        }
        Ok(())
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}
