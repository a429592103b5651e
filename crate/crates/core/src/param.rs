//! Polynomials in the parameters `C` of a generic marked set, used as the
//! coefficient ring of parametric reductions.

use std::collections::btree_map::{self, BTreeMap};

use num_traits::{One, Zero};

use crate::coeff::{self, Rational};
use crate::poly::Polynomial;
use crate::term::Term;

/// Sparse monomial in the parameters: `(index, exponent)` sorted by index.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct ParamMonomial(Vec<(u32, u32)>);

impl ParamMonomial {
    pub fn one() -> Self {
        ParamMonomial(Vec::new())
    }

    pub fn var(index: usize) -> Self {
        ParamMonomial(vec![(index as u32, 1)])
    }

    pub fn from_pairs(mut pairs: Vec<(u32, u32)>) -> Self {
        pairs.retain(|&(_, e)| e > 0);
        pairs.sort_unstable();
        let mut merged: Vec<(u32, u32)> = Vec::with_capacity(pairs.len());
        for (v, e) in pairs {
            match merged.last_mut() {
                Some((w, f)) if *w == v => *f += e,
                _ => merged.push((v, e)),
            }
        }
        ParamMonomial(merged)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn factors(&self) -> &[(u32, u32)] {
        &self.0
    }

    pub fn mul(&self, other: &ParamMonomial) -> ParamMonomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        ParamMonomial(out)
    }

    /// Single variable index, if the monomial is exactly one parameter.
    pub fn as_var(&self) -> Option<usize> {
        match self.0.as_slice() {
            [(v, 1)] => Some(*v as usize),
            _ => None,
        }
    }

    pub fn contains_any(&self, vars: &[bool]) -> bool {
        self.0.iter().any(|&(v, _)| vars[v as usize])
    }

    /// Graded order used for printing: higher degree first, then by exponents.
    pub fn cmp_graded(&self, other: &Self) -> std::cmp::Ordering {
        other
            .degree()
            .cmp(&self.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

#[derive(Clone, PartialEq, Debug, Default)]
pub struct ParamPoly {
    terms: BTreeMap<ParamMonomial, Rational>,
}

impl ParamPoly {
    pub fn var(index: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(ParamMonomial::var(index), Rational::one());
        ParamPoly { terms }
    }

    pub fn constant(q: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !q.is_zero() {
            terms.insert(ParamMonomial::one(), q);
        }
        ParamPoly { terms }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (ParamMonomial, Rational)>) -> Self {
        let mut p = ParamPoly::default();
        for (m, q) in terms {
            p.add_monomial(m, &q);
        }
        p
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> btree_map::Iter<'_, ParamMonomial, Rational> {
        self.terms.iter()
    }

    /// Monomials sorted by [`ParamMonomial::cmp_graded`].
    pub fn sorted_terms(&self) -> Vec<(&ParamMonomial, &Rational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| a.0.cmp_graded(b.0));
        v
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(ParamMonomial::degree).max()
    }

    pub fn constant_term(&self) -> Rational {
        self.terms
            .get(&ParamMonomial::one())
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Coefficients of the degree-one part, by parameter index.
    pub fn linear_part(&self) -> Vec<(usize, Rational)> {
        self.terms
            .iter()
            .filter_map(|(m, q)| m.as_var().map(|v| (v, q.clone())))
            .collect()
    }

    pub fn add_monomial(&mut self, m: ParamMonomial, q: &Rational) {
        if q.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            btree_map::Entry::Vacant(v) => {
                v.insert(q.clone());
            }
            btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += q;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn eval(&self, point: &[Rational]) -> Rational {
        let mut acc = Rational::zero();
        for (m, q) in &self.terms {
            let mut v = q.clone();
            for &(i, e) in m.factors() {
                for _ in 0..e {
                    v *= &point[i as usize];
                }
            }
            acc += v;
        }
        acc
    }

    /// Sets every parameter flagged in `killed` to zero.
    pub fn kill(&self, killed: &[bool]) -> ParamPoly {
        ParamPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| !m.contains_any(killed))
                .map(|(m, q)| (m.clone(), q.clone()))
                .collect(),
        }
    }

    /// Dense representation over `nparams` variables, for the Gröbner oracle.
    pub fn to_polynomial(&self, nparams: usize) -> Polynomial<Rational> {
        let terms = self.terms.iter().map(|(m, q)| {
            let mut exps = vec![0u32; nparams];
            for &(i, e) in m.factors() {
                exps[i as usize] = e;
            }
            (q.clone(), Term::new(exps))
        });
        Polynomial::from_terms(nparams, terms).expect("consistent ring")
    }

    pub fn from_polynomial(p: &Polynomial<Rational>) -> ParamPoly {
        ParamPoly::from_terms(p.iter().map(|(t, q)| {
            let pairs = t
                .exponents()
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| (i as u32, e))
                .collect();
            (ParamMonomial(pairs), q.clone())
        }))
    }
}

impl coeff::Coefficient for ParamPoly {
    fn zero() -> Self {
        ParamPoly::default()
    }
    fn one() -> Self {
        ParamPoly::constant(<Rational as One>::one())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn is_one(&self) -> bool {
        self.terms.len() == 1 && One::is_one(&self.constant_term())
    }
    fn from_rational(q: &Rational) -> Self {
        ParamPoly::constant(q.clone())
    }
    fn add_assign_ref(&mut self, other: &Self) {
        for (m, q) in &other.terms {
            self.add_monomial(m.clone(), q);
        }
    }
    fn sub_assign_ref(&mut self, other: &Self) {
        for (m, q) in &other.terms {
            self.add_monomial(m.clone(), &-q);
        }
    }
    fn mul_ref(&self, other: &Self) -> Self {
        let mut out = ParamPoly::default();
        for (m, q) in &self.terms {
            for (n, r) in &other.terms {
                out.add_monomial(m.mul(n), &(q * r));
            }
        }
        out
    }
    fn neg_ref(&self) -> Self {
        ParamPoly {
            terms: self.terms.iter().map(|(m, q)| (m.clone(), -q)).collect(),
        }
    }

    fn sub_mul_assign(&mut self, a: &Self, b: &Self) {
        for (n, r) in &b.terms {
            for (m, q) in &a.terms {
                let mono = if n.is_one() { m.clone() } else { m.mul(n) };
                self.add_monomial(mono, &-(q * r));
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{rat, Coefficient};

    #[test]
    fn monomial_product_merges() {
        let a = ParamMonomial::from_pairs(vec![(3, 1), (1, 2)]);
        let b = ParamMonomial::from_pairs(vec![(1, 1), (5, 1)]);
        assert_eq!(a.mul(&b).factors(), &[(1, 3), (3, 1), (5, 1)]);
        assert_eq!(a.mul(&b).degree(), 5);
    }

    #[test]
    fn ring_operations_and_evaluation() {
        // (c0 + 2) * (c0 - c1)
        let c0 = ParamPoly::var(0);
        let c1 = ParamPoly::var(1);
        let mut a = c0.clone();
        a.add_assign_ref(&ParamPoly::constant(rat(2)));
        let mut b = c0.clone();
        b.sub_assign_ref(&c1);
        let prod = a.mul_ref(&b);
        assert_eq!(prod.len(), 4);
        assert_eq!(prod.eval(&[rat(3), rat(5)]), rat((3 + 2) * (3 - 5)));

        let mut acc = ParamPoly::zero();
        acc.sub_mul_assign(&a, &b);
        assert_eq!(acc, prod.neg_ref());
        assert_eq!(prod.linear_part(), vec![(0, rat(2)), (1, rat(-2))]);
        let mut minus_two_c1 = ParamPoly::default();
        minus_two_c1.add_monomial(ParamMonomial::var(1), &rat(-2));
        assert_eq!(prod.kill(&[true, false]), minus_two_c1);
    }

    #[test]
    fn dense_round_trip() {
        let mut p = ParamPoly::var(2).mul_ref(&ParamPoly::var(0));
        p.add_assign_ref(&ParamPoly::constant(rat(7)));
        assert_eq!(ParamPoly::from_polynomial(&p.to_polynomial(4)), p);
    }
}
