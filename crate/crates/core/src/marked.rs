//! Marked polynomials and J-marked sets.

use std::fmt;

use crate::coeff::Coefficient;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::parse::format_term;
use crate::poly::Polynomial;
use crate::ring::Ring;
use crate::term::Term;

/// A polynomial with a designated head term of coefficient 1.
#[derive(Clone, Debug, PartialEq)]
pub struct MarkedPolynomial<C> {
    head: Term,
    poly: Polynomial<C>,
}

impl<C: Coefficient> MarkedPolynomial<C> {
    pub fn new(head: Term, poly: Polynomial<C>) -> Result<Self> {
        match poly.coeff(&head) {
            Some(c) if c.is_one() => Ok(MarkedPolynomial { head, poly }),
            Some(_) => Err(Error::InvalidMarkedSet(
                "head term must have coefficient 1".into(),
            )),
            None => Err(Error::InvalidMarkedSet(
                "head term does not occur in the polynomial".into(),
            )),
        }
    }

    /// `head + Σ c t` over the given tail.
    pub fn from_tail(head: Term, tail: impl IntoIterator<Item = (C, Term)>) -> Result<Self> {
        let mut poly = Polynomial::from_term(head.clone());
        for (c, t) in tail {
            if t == head {
                return Err(Error::InvalidMarkedSet("tail repeats the head term".into()));
            }
            poly.add_term(t, &c);
        }
        MarkedPolynomial::new(head, poly)
    }

    pub fn head(&self) -> &Term {
        &self.head
    }

    pub fn poly(&self) -> &Polynomial<C> {
        &self.poly
    }

    pub fn tail(&self) -> impl Iterator<Item = (&Term, &C)> {
        self.poly.iter_desc().filter(move |(t, _)| **t != self.head)
    }
}

/// A broken J-marked set invariant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    HeadNotInBasis(String),
    DuplicateHead(String),
    MissingGenerator(String),
    TailInIdeal { head: String, term: String },
    NotHomogeneous { head: String, term: String },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::HeadNotInBasis(h) => write!(f, "head {h} is not a minimal generator of J"),
            Violation::DuplicateHead(h) => write!(f, "head {h} occurs more than once"),
            Violation::MissingGenerator(h) => write!(f, "no marked polynomial has head {h}"),
            Violation::TailInIdeal { head, term } => {
                write!(f, "tail term {term} of the polynomial with head {head} lies in J")
            }
            Violation::NotHomogeneous { head, term } => {
                write!(f, "term {term} of the polynomial with head {head} has the wrong degree")
            }
        }
    }
}

/// Checks every J-marked set invariant and reports all failures.
pub fn validate_marked_set<C: Coefficient>(
    ideal: &MonomialIdeal,
    elements: &[MarkedPolynomial<C>],
) -> Vec<Violation> {
    let ring = ideal.ring();
    let name = |t: &Term| format_term(ring, t);
    let mut out = Vec::new();
    let mut seen = vec![false; ideal.len()];
    for f in elements {
        match ideal.generator_index(f.head()) {
            None => out.push(Violation::HeadNotInBasis(name(f.head()))),
            Some(i) if seen[i] => out.push(Violation::DuplicateHead(name(f.head()))),
            Some(i) => seen[i] = true,
        }
        let d = f.head().degree();
        for (t, _) in f.tail() {
            if t.degree() != d {
                out.push(Violation::NotHomogeneous {
                    head: name(f.head()),
                    term: name(t),
                });
            } else if ideal.contains(t) {
                out.push(Violation::TailInIdeal {
                    head: name(f.head()),
                    term: name(t),
                });
            }
        }
    }
    for (i, b) in ideal.basis().iter().enumerate() {
        if !seen[i] {
            out.push(Violation::MissingGenerator(name(b)));
        }
    }
    out
}

/// A J-marked set: one marked polynomial per minimal generator of `J`,
/// stored in the order of [`MonomialIdeal::basis`].
#[derive(Clone, Debug, PartialEq)]
pub struct MarkedSet<C> {
    ideal: MonomialIdeal,
    elements: Vec<MarkedPolynomial<C>>,
}

impl<C: Coefficient> MarkedSet<C> {
    pub fn new(ideal: MonomialIdeal, elements: Vec<MarkedPolynomial<C>>) -> Result<Self> {
        let violations = validate_marked_set(&ideal, &elements);
        if !violations.is_empty() {
            let msg = violations
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join("; ");
            return Err(Error::InvalidMarkedSet(msg));
        }
        let mut slots: Vec<Option<MarkedPolynomial<C>>> = vec![None; ideal.len()];
        for f in elements {
            let i = ideal.generator_index(f.head()).unwrap();
            slots[i] = Some(f);
        }
        Ok(MarkedSet {
            ideal,
            elements: slots.into_iter().map(Option::unwrap).collect(),
        })
    }

    /// The marked set `B_J` itself (all tails zero).
    pub fn monomial(ideal: MonomialIdeal) -> Self {
        let elements = ideal
            .basis()
            .iter()
            .map(|b| MarkedPolynomial::new(b.clone(), Polynomial::from_term(b.clone())).unwrap())
            .collect();
        MarkedSet { ideal, elements }
    }

    pub fn ideal(&self) -> &MonomialIdeal {
        &self.ideal
    }

    pub fn ring(&self) -> &Ring {
        self.ideal.ring()
    }

    pub fn elements(&self) -> &[MarkedPolynomial<C>] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn get(&self, index: usize) -> &MarkedPolynomial<C> {
        &self.elements[index]
    }

    pub fn by_head(&self, head: &Term) -> Option<&MarkedPolynomial<C>> {
        self.ideal.generator_index(head).map(|i| &self.elements[i])
    }

    pub fn polynomials(&self) -> Vec<Polynomial<C>> {
        self.elements.iter().map(|f| f.poly().clone()).collect()
    }

    /// Maps coefficients into another ring; the result is again a marked set
    /// because heads keep coefficient 1 and tails keep their support or shrink.
    pub fn map_coeffs<D: Coefficient>(&self, mut f: impl FnMut(&C) -> D) -> MarkedSet<D> {
        let elements = self
            .elements
            .iter()
            .map(|e| {
                let mut poly = Polynomial::from_term(e.head().clone());
                for (t, c) in e.tail() {
                    poly.add_term(t.clone(), &f(c));
                }
                MarkedPolynomial {
                    head: e.head().clone(),
                    poly,
                }
            })
            .collect();
        MarkedSet {
            ideal: self.ideal.clone(),
            elements,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::Rational;
    use crate::parse::{parse_polynomial, parse_term};

    fn setup(gens: &[&str], polys: &[(&str, &str)]) -> (MonomialIdeal, Vec<MarkedPolynomial<Rational>>) {
        let r = Ring::xyz();
        let j = MonomialIdeal::new(r.clone(), gens.iter().map(|g| parse_term(&r, g).unwrap())).unwrap();
        let elems = polys
            .iter()
            .map(|(h, p)| {
                MarkedPolynomial::new(parse_term(&r, h).unwrap(), parse_polynomial(&r, p).unwrap())
                    .unwrap()
            })
            .collect();
        (j, elems)
    }

    #[test]
    fn monomial_set_is_valid() {
        let (j, _) = setup(&["x*y", "z^2"], &[]);
        let g = MarkedSet::<Rational>::monomial(j.clone());
        assert!(validate_marked_set(&j, g.elements()).is_empty());
    }

    #[test]
    fn line_example_is_a_marked_set() {
        let (j, e) = setup(&["x*y", "z^2"], &[("x*y", "x*y + y*z"), ("z^2", "z^2 + x*z")]);
        assert!(MarkedSet::new(j, e).is_ok());
    }

    #[test]
    fn tail_in_ideal_is_reported() {
        let (j, e) = setup(&["x*y", "z^2"], &[("x*y", "x*y"), ("z^2", "z^2 + x*y")]);
        let v = validate_marked_set(&j, &e);
        assert_eq!(
            v,
            vec![Violation::TailInIdeal {
                head: "z^2".into(),
                term: "x*y".into()
            }]
        );
        assert!(MarkedSet::new(j, e).is_err());
    }

    #[test]
    fn structural_violations() {
        let (j, e) = setup(&["x*y", "z^2"], &[("x*y", "x*y + z"), ("x*y", "x*y")]);
        let v = validate_marked_set(&j, &e);
        assert!(v.contains(&Violation::DuplicateHead("x*y".into())));
        assert!(v.contains(&Violation::MissingGenerator("z^2".into())));
        assert!(v.iter().any(|x| matches!(x, Violation::NotHomogeneous { .. })));

        let r = Ring::xyz();
        let head = parse_term(&r, "x^2").unwrap();
        assert!(MarkedPolynomial::new(head.clone(), parse_polynomial(&r, "2*x^2").unwrap()).is_err());
        assert!(MarkedPolynomial::new(head, parse_polynomial(&r, "y^2").unwrap()).is_err());
    }
}
