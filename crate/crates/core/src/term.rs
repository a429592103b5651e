//! Terms (monomials without coefficient) and term orders.
//!
//! Exponents are stored by variable position, position 0 being the smallest
//! variable. The natural `Ord` on [`Term`] is the degree reverse
//! lexicographic order, so ordered maps keyed by terms iterate in ascending
//! degrevlex order.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct Term {
    exps: Vec<u32>,
}

impl Term {
    pub fn new(exps: Vec<u32>) -> Self {
        Term { exps }
    }

    pub fn one(nvars: usize) -> Self {
        Term {
            exps: vec![0; nvars],
        }
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[index] = 1;
        Term { exps }
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn exponent(&self, var: usize) -> u32 {
        self.exps[var]
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    fn check_ring(&self, other: &Term) -> Result<()> {
        if self.exps.len() != other.exps.len() {
            return Err(Error::RingMismatch {
                expected: self.exps.len(),
                found: other.exps.len(),
            });
        }
        Ok(())
    }

    pub fn checked_mul(&self, other: &Term) -> Result<Term> {
        self.check_ring(other)?;
        Ok(self.mul(other))
    }

    /// Panics if the terms live in rings of different size; see
    /// [`Term::checked_mul`].
    pub fn mul(&self, other: &Term) -> Term {
        assert_eq!(self.exps.len(), other.exps.len(), "ring mismatch");
        Term {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn mul_var(&self, var: usize) -> Term {
        let mut exps = self.exps.clone();
        exps[var] += 1;
        Term { exps }
    }

    pub fn divides(&self, other: &Term) -> bool {
        self.exps.len() == other.exps.len()
            && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, defined only when `self` divides `other`.
    pub fn quotient_of(&self, other: &Term) -> Result<Term> {
        self.check_ring(other)?;
        if !self.divides(other) {
            return Err(Error::NotDivisible(
                format!("{:?}", self.exps),
                format!("{:?}", other.exps),
            ));
        }
        Ok(Term {
            exps: other.exps.iter().zip(&self.exps).map(|(b, a)| b - a).collect(),
        })
    }

    /// `self / var`; `None` when the variable does not divide.
    pub fn div_var(&self, var: usize) -> Option<Term> {
        if self.exps[var] == 0 {
            return None;
        }
        let mut exps = self.exps.clone();
        exps[var] -= 1;
        Some(Term { exps })
    }

    pub fn checked_lcm(&self, other: &Term) -> Result<Term> {
        self.check_ring(other)?;
        Ok(self.lcm(other))
    }

    pub fn lcm(&self, other: &Term) -> Term {
        assert_eq!(self.exps.len(), other.exps.len(), "ring mismatch");
        Term {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    pub fn is_coprime(&self, other: &Term) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Index of the smallest variable dividing the term.
    pub fn min_var(&self) -> Result<usize> {
        self.exps.iter().position(|&e| e > 0).ok_or(Error::UnitTerm)
    }

    /// Index of the largest variable dividing the term.
    pub fn max_var(&self) -> Result<usize> {
        self.exps.iter().rposition(|&e| e > 0).ok_or(Error::UnitTerm)
    }

    /// Variable indices with multiplicity, ascending.
    pub fn vars_ascending(&self) -> Vec<usize> {
        self.exps
            .iter()
            .enumerate()
            .flat_map(|(i, &e)| std::iter::repeat_n(i, e as usize))
            .collect()
    }

    /// `a > b` iff `|a| > |b|`, or equal degree and the first nonzero entry
    /// of `a - b`, scanning from the smallest variable, is negative.
    pub fn cmp_drl(&self, other: &Term) -> Ordering {
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        for (a, b) in self.exps.iter().zip(&other.exps) {
            if a != b {
                return b.cmp(a);
            }
        }
        Ordering::Equal
    }

    /// Pure lexicographic order, largest variable compared first.
    pub fn cmp_lex(&self, other: &Term) -> Ordering {
        for (a, b) in self.exps.iter().rev().zip(other.exps.iter().rev()) {
            if a != b {
                return a.cmp(b);
            }
        }
        Ordering::Equal
    }
}

impl Ord for Term {
    fn cmp(&self, other: &Self) -> Ordering {
        self.exps
            .len()
            .cmp(&other.exps.len())
            .then_with(|| self.cmp_drl(other))
    }
}

impl PartialOrd for Term {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Term order used for head comparisons and Gröbner computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub enum TermOrder {
    #[default]
    DegRevLex,
    Lex,
}

impl TermOrder {
    pub fn cmp(self, a: &Term, b: &Term) -> Ordering {
        match self {
            TermOrder::DegRevLex => a.cmp_drl(b),
            TermOrder::Lex => a.cmp_lex(b),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            TermOrder::DegRevLex => "drl",
            TermOrder::Lex => "lex",
        }
    }
}

impl std::str::FromStr for TermOrder {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "drl" | "degrevlex" | "grevlex" => Ok(TermOrder::DegRevLex),
            "lex" => Ok(TermOrder::Lex),
            other => Err(format!("unknown term order `{other}` (expected drl or lex)")),
        }
    }
}

/// All terms of degree `m` in `nvars` variables, sorted descending by degrevlex.
pub fn terms_of_degree(nvars: usize, m: u32) -> Vec<Term> {
    fn fill(prefix: &mut Vec<u32>, nvars: usize, left: u32, out: &mut Vec<Term>) {
        if prefix.len() + 1 == nvars {
            prefix.push(left);
            out.push(Term::new(prefix.clone()));
            prefix.pop();
            return;
        }
        for e in 0..=left {
            prefix.push(e);
            fill(prefix, nvars, left - e, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if nvars == 0 {
        if m == 0 {
            out.push(Term::new(Vec::new()));
        }
        return out;
    }
    fill(&mut Vec::with_capacity(nvars), nvars, m, &mut out);
    out.sort_by(|a, b| b.cmp_drl(a));
    out
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(e: &[u32]) -> Term {
        Term::new(e.to_vec())
    }

    // K[z, y, x]: position 0 = z, 1 = y, 2 = x.
    #[test]
    fn multiplication_and_division() {
        let one = Term::one(3);
        assert_eq!(t(&[1, 2, 3]).mul(&one), t(&[1, 2, 3]));
        assert_eq!(t(&[1, 0]).mul(&t(&[0, 1])), t(&[1, 1]));
        // xy * yz = x y^2 z
        assert_eq!(t(&[0, 1, 1]).mul(&t(&[1, 1, 0])), t(&[1, 2, 1]));
        assert!(t(&[1, 0]).checked_mul(&t(&[1, 0, 0])).is_err());

        assert!(one.divides(&t(&[3, 1, 0])));
        // xy | x^2 y^2 z, quotient xyz
        let xy = t(&[0, 1, 1]);
        assert_eq!(xy.quotient_of(&t(&[1, 2, 2])).unwrap(), t(&[1, 1, 1]));
        // z^2 does not divide xyz
        assert!(!t(&[2, 0, 0]).divides(&t(&[1, 1, 1])));
        assert!(t(&[2, 0, 0]).quotient_of(&t(&[1, 1, 1])).is_err());
    }

    #[test]
    fn lcm_examples() {
        let a = t(&[1, 2, 0]);
        assert_eq!(a.lcm(&a), a);
        // lcm(x^2, xy) = x^2 y
        assert_eq!(t(&[0, 0, 2]).lcm(&t(&[0, 1, 1])), t(&[0, 1, 2]));
        // lcm(xy, z^2) = x y z^2
        assert_eq!(t(&[0, 1, 1]).lcm(&t(&[2, 0, 0])), t(&[2, 1, 1]));
    }

    #[test]
    fn min_and_max_variable() {
        assert_eq!(t(&[0, 0, 2]).min_var().unwrap(), 2);
        assert_eq!(t(&[0, 0, 2]).max_var().unwrap(), 2);
        assert_eq!(t(&[1, 0, 3]).min_var().unwrap(), 0);
        assert_eq!(t(&[1, 0, 3]).max_var().unwrap(), 2);
        // x y^2 z with z < y < x: min is z
        assert_eq!(t(&[1, 2, 1]).min_var().unwrap(), 0);
        assert_eq!(Term::one(3).min_var(), Err(Error::UnitTerm));
        assert_eq!(Term::one(3).max_var(), Err(Error::UnitTerm));
    }

    #[test]
    fn drl_examples() {
        let a = t(&[1, 1, 0]);
        assert_eq!(a.cmp_drl(&a), Ordering::Equal);
        // x_1 > x_0
        assert_eq!(t(&[0, 1]).cmp_drl(&t(&[1, 0])), Ordering::Greater);
        // degree 2 in K[x0, x1, x2]
        let expected = vec![
            t(&[0, 0, 2]),
            t(&[0, 1, 1]),
            t(&[0, 2, 0]),
            t(&[1, 0, 1]),
            t(&[1, 1, 0]),
            t(&[2, 0, 0]),
        ];
        assert_eq!(terms_of_degree(3, 2), expected);
    }

    #[test]
    fn drl_brute_force_transitivity() {
        let terms: Vec<Term> = (0..=3).flat_map(|m| terms_of_degree(3, m)).collect();
        for a in &terms {
            for b in &terms {
                assert_eq!(a.cmp_drl(b), b.cmp_drl(a).reverse());
                for c in &terms {
                    if a.cmp_drl(b) == Ordering::Greater && b.cmp_drl(c) == Ordering::Greater {
                        assert_eq!(a.cmp_drl(c), Ordering::Greater);
                    }
                }
            }
        }
    }

    #[test]
    fn term_counts_match_binomials() {
        for n in 1..5usize {
            for m in 0..6u32 {
                assert_eq!(
                    terms_of_degree(n, m).len() as u64,
                    binomial(m as u64 + n as u64 - 1, n as u64 - 1)
                );
            }
        }
    }

    #[test]
    fn lex_compares_largest_variable_first() {
        // in K[z,y,x], lex with x > y > z: x z > y^2
        assert_eq!(t(&[1, 0, 1]).cmp_lex(&t(&[0, 2, 0])), Ordering::Greater);
        assert_eq!(t(&[1, 0, 1]).cmp_drl(&t(&[0, 2, 0])), Ordering::Less);
    }
}
