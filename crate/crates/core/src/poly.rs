//! Sparse multivariate polynomials over an exact coefficient ring.

use std::collections::btree_map::{self, BTreeMap};
use std::ops::{Add, Mul, Neg, Sub};

use crate::coeff::Coefficient;
use crate::error::{Error, Result};
use crate::term::{Term, TermOrder};

/// Map term -> nonzero coefficient. Keys iterate ascending in degrevlex, so
/// the canonical (descending) form is the reversed iteration.
#[derive(Clone, PartialEq, Debug)]
pub struct Polynomial<C> {
    nvars: usize,
    terms: BTreeMap<Term, C>,
}

impl<C: Coefficient> Polynomial<C> {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: C) -> Self {
        Self::monomial(c, Term::one(nvars))
    }

    pub fn monomial(c: C, t: Term) -> Self {
        let mut p = Polynomial::zero(t.nvars());
        if !c.is_zero() {
            p.terms.insert(t, c);
        }
        p
    }

    pub fn from_term(t: Term) -> Self {
        Self::monomial(C::one(), t)
    }

    /// Sums repeated terms and drops zeros.
    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (C, Term)>) -> Result<Self> {
        let mut p = Polynomial::zero(nvars);
        for (c, t) in terms {
            if t.nvars() != nvars {
                return Err(Error::RingMismatch {
                    expected: nvars,
                    found: t.nvars(),
                });
            }
            p.add_term(t, &c);
        }
        Ok(p)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, t: &Term) -> Option<&C> {
        self.terms.get(t)
    }

    pub fn contains(&self, t: &Term) -> bool {
        self.terms.contains_key(t)
    }

    /// Ascending degrevlex.
    pub fn iter(&self) -> btree_map::Iter<'_, Term, C> {
        self.terms.iter()
    }

    /// Descending degrevlex (the canonical printing order).
    pub fn iter_desc(&self) -> impl Iterator<Item = (&Term, &C)> {
        self.terms.iter().rev()
    }

    pub fn support(&self) -> impl Iterator<Item = &Term> {
        self.terms.keys()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Term, C)> {
        self.terms.into_iter()
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.terms.keys().map(Term::degree).max()
    }

    /// Degree of a nonzero homogeneous polynomial.
    pub fn homogeneous_degree(&self) -> Result<Option<u32>> {
        let mut deg = None;
        for t in self.terms.keys() {
            match deg {
                None => deg = Some(t.degree()),
                Some(d) if d != t.degree() => return Err(Error::NotHomogeneous),
                _ => {}
            }
        }
        Ok(deg)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.homogeneous_degree().is_ok()
    }

    pub fn leading(&self, order: TermOrder) -> Option<(&Term, &C)> {
        match order {
            TermOrder::DegRevLex => self.terms.iter().next_back(),
            _ => self.terms.iter().max_by(|a, b| order.cmp(a.0, b.0)),
        }
    }

    pub fn leading_term(&self, order: TermOrder) -> Option<&Term> {
        self.leading(order).map(|(t, _)| t)
    }

    pub fn remove(&mut self, t: &Term) -> Option<C> {
        self.terms.remove(t)
    }

    /// `self += c * t`.
    pub fn add_term(&mut self, t: Term, c: &C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(t) {
            btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            btree_map::Entry::Occupied(mut o) => {
                o.get_mut().add_assign_ref(c);
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// `self -= a * t * other`. The hot loop of every reduction.
    pub fn sub_scaled(&mut self, a: &C, t: &Term, other: &Polynomial<C>) {
        assert_eq!(self.nvars, other.nvars, "ring mismatch");
        for (s, c) in &other.terms {
            let term = if t.is_one() { s.clone() } else { s.mul(t) };
            match self.terms.entry(term) {
                btree_map::Entry::Vacant(v) => {
                    let mut z = C::zero();
                    z.sub_mul_assign(a, c);
                    if !z.is_zero() {
                        v.insert(z);
                    }
                }
                btree_map::Entry::Occupied(mut o) => {
                    o.get_mut().sub_mul_assign(a, c);
                    if o.get().is_zero() {
                        o.remove();
                    }
                }
            }
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (t, c) in &other.terms {
            out.add_term(t.clone(), c);
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (t, c) in &other.terms {
            out.add_term(t.clone(), &c.neg_ref());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = Polynomial::zero(self.nvars);
        for (t, c) in &self.terms {
            for (s, d) in &other.terms {
                out.add_term(t.mul(s), &c.mul_ref(d));
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        self.map_coeffs(|a| a.mul_ref(c))
    }

    pub fn mul_term(&self, t: &Term) -> Self {
        assert_eq!(self.nvars, t.nvars(), "ring mismatch");
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(s, c)| (s.mul(t), c.clone())).collect(),
        }
    }

    pub fn checked_mul_term(&self, t: &Term) -> Result<Self> {
        if t.nvars() != self.nvars {
            return Err(Error::RingMismatch {
                expected: self.nvars,
                found: t.nvars(),
            });
        }
        Ok(self.mul_term(t))
    }

    /// Applies `f` to every coefficient, dropping results that vanish.
    pub fn map_coeffs<D: Coefficient>(&self, mut f: impl FnMut(&C) -> D) -> Polynomial<D> {
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter_map(|(t, c)| {
                    let d = f(c);
                    (!d.is_zero()).then(|| (t.clone(), d))
                })
                .collect(),
        }
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::RingMismatch {
                expected: self.nvars,
                found: other.nvars,
            });
        }
        Ok(())
    }
}

impl<C: Coefficient> Add for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn add(self, rhs: Self) -> Polynomial<C> {
        self.checked_add(rhs).expect("ring mismatch")
    }
}

impl<C: Coefficient> Sub for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn sub(self, rhs: Self) -> Polynomial<C> {
        self.checked_sub(rhs).expect("ring mismatch")
    }
}

impl<C: Coefficient> Mul for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn mul(self, rhs: Self) -> Polynomial<C> {
        self.checked_mul(rhs).expect("ring mismatch")
    }
}

impl<C: Coefficient> Neg for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn neg(self) -> Polynomial<C> {
        self.map_coeffs(|c| c.neg_ref())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{rat, Rational};
    use crate::parse::parse_polynomial;
    use crate::ring::Ring;

    fn p(s: &str) -> Polynomial<Rational> {
        parse_polynomial(&Ring::xyz(), s).unwrap()
    }

    #[test]
    fn addition_identities() {
        let a = p("x^2 - y*z");
        assert_eq!(&a + &Polynomial::zero(3), a);
        assert_eq!(&a + &p("y*z"), p("x^2"));
        assert!((&a - &a).is_zero());
    }

    #[test]
    fn term_multiplication() {
        let z = Term::new(vec![1, 0, 0]);
        assert_eq!(p("x*y + y*z").mul_term(&z), p("x*y*z + y*z^2"));
        assert!(p("x").checked_mul_term(&Term::one(2)).is_err());
        assert!(p("x").checked_add(&Polynomial::zero(2)).is_err());
    }

    #[test]
    fn sub_scaled_cancels() {
        let mut h = p("x^3");
        let f = p("x^2 - y*z");
        h.sub_scaled(&rat(1), &Term::new(vec![0, 0, 1]), &f);
        assert_eq!(h, p("x*y*z"));
    }

    #[test]
    fn homogeneity() {
        assert_eq!(p("x^2 + y*z").homogeneous_degree().unwrap(), Some(2));
        assert!(p("x^2 + z").homogeneous_degree().is_err());
        assert_eq!(Polynomial::<Rational>::zero(3).homogeneous_degree().unwrap(), None);
    }

    #[test]
    fn leading_terms() {
        let f = p("x*z + y^2");
        assert_eq!(f.leading_term(TermOrder::DegRevLex), Some(&Term::new(vec![0, 2, 0])));
        assert_eq!(f.leading_term(TermOrder::Lex), Some(&Term::new(vec![1, 0, 1])));
    }
}
