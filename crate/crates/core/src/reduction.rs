//! Degree-wise reduction lists `V_m` and the single-pass normal form.
//!
//! `V_m` holds one multiple `x^δ f_α` of the marked set for every term of
//! `J_m`. It is built from `V_{m-1}` by multiplying each entry with every
//! variable not larger than the minimal variable of its head, so each
//! multiplier satisfies `max(x^δ) <= min(x^α)`. Entries are kept sorted
//! descending by [`cmp_vm`]; one pass over the list in that order reduces
//! any homogeneous polynomial to a J-normal form.

use std::cmp::Ordering;
use std::collections::HashMap;

use crate::coeff::Coefficient;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::marked::MarkedSet;
use crate::poly::Polynomial;
use crate::term::{Term, TermOrder};

/// An element `x^δ f_α` of `W_m`, identified by multiplier and generator index.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WElement {
    pub multiplier: Term,
    pub generator: usize,
}

impl WElement {
    pub fn head(&self, ideal: &MonomialIdeal) -> Term {
        self.multiplier.mul(&ideal.basis()[self.generator])
    }

    pub fn degree(&self, ideal: &MonomialIdeal) -> u32 {
        self.multiplier.degree() + ideal.basis()[self.generator].degree()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ReductionEntry<C> {
    pub head: Term,
    pub multiplier: Term,
    pub generator: usize,
    pub poly: Polynomial<C>,
}

impl<C> ReductionEntry<C> {
    pub fn element(&self) -> WElement {
        WElement {
            multiplier: self.multiplier.clone(),
            generator: self.generator,
        }
    }
}

/// Order on `V_m`: generators compare by head under `order`; every proper
/// multiple beats every generator; `x_i g ⪰ x_j g'` iff `x_i > x_j`, or
/// `x_i = x_j` and `g ⪰ g'` in `V_{m-1}`.
///
/// Unfolding the recursion, the multiplier variables of an entry are read in
/// ascending order (each step peels off the minimal variable of the head).
pub fn cmp_vm(
    ideal: &MonomialIdeal,
    order: TermOrder,
    a: &WElement,
    b: &WElement,
) -> Result<Ordering> {
    let (da, db) = (a.degree(ideal), b.degree(ideal));
    if da != db {
        return Err(Error::DegreeMismatch {
            expected: da,
            found: db,
        });
    }
    Ok(cmp_vm_unchecked(ideal, order, a, b))
}

fn cmp_vm_unchecked(ideal: &MonomialIdeal, order: TermOrder, a: &WElement, b: &WElement) -> Ordering {
    cmp_multipliers(&a.multiplier, &b.multiplier)
        .then_with(|| order.cmp(&ideal.basis()[a.generator], &ideal.basis()[b.generator]))
}

/// Ascending variable sequences compared lexicographically, a proper prefix
/// being smaller. On terms of equal degree this is degrevlex.
fn cmp_multipliers(a: &Term, b: &Term) -> Ordering {
    let sa = a.vars_ascending();
    let sb = b.vars_ascending();
    for (i, j) in sa.iter().zip(&sb) {
        if i != j {
            return i.cmp(j);
        }
    }
    sa.len().cmp(&sb.len())
}

/// Order on `W_m`: multipliers by degrevlex, ties broken by head under `order`.
///
/// Multipliers of different degrees (generators of different degrees) are
/// compared without the degree step, by their ascending variable sequences.
/// This is the comparison that makes each `V_m` entry the minimum of its
/// head class and makes the order extend the one on `V_m`; a degree-first
/// comparison fails both for `J = (x^2, xy, y^3)`, where `y^2 f_xy` is the
/// `V_4` entry for `xy^3` but `x f_y3` has the smaller multiplier.
pub fn cmp_wm(
    ideal: &MonomialIdeal,
    order: TermOrder,
    a: &WElement,
    b: &WElement,
) -> Result<Ordering> {
    let (da, db) = (a.degree(ideal), b.degree(ideal));
    if da != db {
        return Err(Error::DegreeMismatch {
            expected: da,
            found: db,
        });
    }
    Ok(cmp_multipliers(&a.multiplier, &b.multiplier).then_with(|| {
        order.cmp(&ideal.basis()[a.generator], &ideal.basis()[b.generator])
    }))
}

/// All elements of `W_m` whose head is `head`.
pub fn w_class(ideal: &MonomialIdeal, head: &Term) -> Vec<WElement> {
    ideal
        .basis()
        .iter()
        .enumerate()
        .filter(|(_, b)| b.divides(head))
        .map(|(i, b)| WElement {
            multiplier: b.quotient_of(head).unwrap(),
            generator: i,
        })
        .collect()
}

/// All of `W_m`.
pub fn w_elements(ideal: &MonomialIdeal, m: u32) -> Vec<WElement> {
    let n = ideal.ring().nvars();
    let mut out = Vec::new();
    for (i, b) in ideal.basis().iter().enumerate() {
        if b.degree() > m {
            continue;
        }
        for t in crate::term::terms_of_degree(n, m - b.degree()) {
            out.push(WElement {
                multiplier: t,
                generator: i,
            });
        }
    }
    out
}

/// `V_m`, sorted strictly descending by [`cmp_vm`].
#[derive(Clone, Debug)]
pub struct ReductionList<C> {
    degree: u32,
    entries: Vec<ReductionEntry<C>>,
    by_head: HashMap<Term, usize>,
}

impl<C: Coefficient> ReductionList<C> {
    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn entries(&self) -> &[ReductionEntry<C>] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entry_for(&self, head: &Term) -> Option<&ReductionEntry<C>> {
        self.by_head.get(head).map(|&i| &self.entries[i])
    }

    pub fn position_of(&self, head: &Term) -> Option<usize> {
        self.by_head.get(head).copied()
    }
}

/// One reduction step `c * x^γ * f_α`.
#[derive(Clone, Debug, PartialEq)]
pub struct CertificateStep<C> {
    pub coefficient: C,
    pub multiplier: Term,
    pub generator: usize,
}

/// `input = residual + Σ c x^γ f_α` with `Supp(residual) ⊆ N(J)`.
#[derive(Clone, Debug, PartialEq)]
pub struct ReductionCertificate<C> {
    pub input: Polynomial<C>,
    pub residual: Polynomial<C>,
    pub steps: Vec<CertificateStep<C>>,
}

impl<C: Coefficient> ReductionCertificate<C> {
    /// Re-checks the identity and the support condition exactly.
    pub fn verify(&self, marked: &MarkedSet<C>) -> bool {
        let mut acc = self.residual.clone();
        for s in &self.steps {
            let neg = s.coefficient.neg_ref();
            acc.sub_scaled(&neg, &s.multiplier, marked.get(s.generator).poly());
        }
        acc == self.input && self.residual.support().all(|t| !marked.ideal().contains(t))
    }
}

/// A marked set over a strongly stable ideal together with its cached
/// reduction lists `V_{α_J}, ..., V_s`.
#[derive(Clone, Debug)]
pub struct Reducer<C> {
    marked: MarkedSet<C>,
    order: TermOrder,
    lists: Vec<ReductionList<C>>,
}

impl<C: Coefficient> Reducer<C> {
    /// Refuses non strongly stable ideals.
    pub fn new(marked: MarkedSet<C>, order: TermOrder) -> Result<Self> {
        marked.ideal().require_strongly_stable()?;
        let mut r = Reducer {
            marked,
            order,
            lists: Vec::new(),
        };
        let alpha = r.initial_degree();
        r.ensure_degree(alpha)?;
        Ok(r)
    }

    pub fn marked(&self) -> &MarkedSet<C> {
        &self.marked
    }

    pub fn ideal(&self) -> &MonomialIdeal {
        self.marked.ideal()
    }

    pub fn order(&self) -> TermOrder {
        self.order
    }

    pub fn initial_degree(&self) -> u32 {
        self.marked.ideal().initial_degree()
    }

    pub fn max_built_degree(&self) -> u32 {
        self.initial_degree() + self.lists.len() as u32 - 1
    }

    /// Extends the cache so that `V_m` exists for every `m <= s`.
    pub fn ensure_degree(&mut self, s: u32) -> Result<()> {
        let alpha = self.initial_degree();
        if s < alpha {
            return Err(Error::BelowInitialDegree {
                requested: s,
                initial: alpha,
            });
        }
        while self.lists.is_empty() || self.max_built_degree() < s {
            let m = alpha + self.lists.len() as u32;
            let list = self.construct(m);
            self.lists.push(list);
        }
        Ok(())
    }

    pub fn list(&self, m: u32) -> Option<&ReductionList<C>> {
        let alpha = self.initial_degree();
        if m < alpha {
            return None;
        }
        self.lists.get((m - alpha) as usize)
    }

    fn construct(&self, m: u32) -> ReductionList<C> {
        let ideal = self.marked.ideal();
        let mut entries: Vec<ReductionEntry<C>> = ideal
            .generators_of_degree(m)
            .map(|(i, b)| ReductionEntry {
                head: b.clone(),
                multiplier: Term::one(b.nvars()),
                generator: i,
                poly: self.marked.get(i).poly().clone(),
            })
            .collect();
        if m > self.initial_degree() {
            let prev = &self.lists[(m - 1 - self.initial_degree()) as usize];
            for e in &prev.entries {
                let min = e.head.min_var().expect("heads have positive degree");
                for var in 0..=min {
                    let x = Term::var(e.head.nvars(), var);
                    entries.push(ReductionEntry {
                        head: e.head.mul(&x),
                        multiplier: e.multiplier.mul(&x),
                        generator: e.generator,
                        poly: e.poly.mul_term(&x),
                    });
                }
            }
        }
        entries.sort_by(|a, b| cmp_vm_unchecked(ideal, self.order, &b.element(), &a.element()));
        let by_head = entries
            .iter()
            .enumerate()
            .map(|(i, e)| (e.head.clone(), i))
            .collect();
        ReductionList {
            degree: m,
            entries,
            by_head,
        }
    }

    /// The V_m-reduction of a homogeneous polynomial, with certificate.
    /// `V_m` must already be built (see [`Reducer::ensure_degree`]).
    pub fn normal_form_in(&self, h: &Polynomial<C>) -> Result<ReductionCertificate<C>> {
        if h.nvars() != self.marked.ring().nvars() {
            return Err(Error::RingMismatch {
                expected: self.marked.ring().nvars(),
                found: h.nvars(),
            });
        }
        let Some(m) = h.homogeneous_degree()? else {
            return Ok(ReductionCertificate {
                input: h.clone(),
                residual: h.clone(),
                steps: Vec::new(),
            });
        };
        if m < self.initial_degree() {
            return Ok(ReductionCertificate {
                input: h.clone(),
                residual: h.clone(),
                steps: Vec::new(),
            });
        }
        let list = self.list(m).ok_or(Error::DegreeMismatch {
            expected: self.max_built_degree(),
            found: m,
        })?;
        Ok(reduce_with_list(h, list))
    }

    /// Like [`Reducer::normal_form_in`], building `V_m` on demand.
    pub fn normal_form(&mut self, h: &Polynomial<C>) -> Result<ReductionCertificate<C>> {
        if let Some(m) = h.homogeneous_degree()? {
            if m >= self.initial_degree() {
                self.ensure_degree(m)?;
            }
        }
        self.normal_form_in(h)
    }
}

/// Single pass over `V_m` in descending order, subtracting at each entry the
/// current coefficient of its head times the entry.
pub fn reduce_with_list<C: Coefficient>(
    h: &Polynomial<C>,
    list: &ReductionList<C>,
) -> ReductionCertificate<C> {
    let mut residual = h.clone();
    let mut steps = Vec::new();
    let one = Term::one(h.nvars());
    for e in &list.entries {
        let Some(a) = residual.coeff(&e.head).cloned() else {
            continue;
        };
        residual.sub_scaled(&a, &one, &e.poly);
        steps.push(CertificateStep {
            coefficient: a,
            multiplier: e.multiplier.clone(),
            generator: e.generator,
        });
    }
    ReductionCertificate {
        input: h.clone(),
        residual,
        steps,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::Rational;
    use crate::marked::MarkedPolynomial;
    use crate::parse::{parse_polynomial, parse_term};
    use crate::ring::Ring;

    fn t(s: &str) -> Term {
        parse_term(&Ring::xyz(), s).unwrap()
    }

    fn marked(gens: &[&str], polys: &[&str]) -> MarkedSet<Rational> {
        let r = Ring::xyz();
        let j = MonomialIdeal::new(r.clone(), gens.iter().map(|g| t(g))).unwrap();
        let elems = gens
            .iter()
            .zip(polys)
            .map(|(h, p)| MarkedPolynomial::new(t(h), parse_polynomial(&r, p).unwrap()).unwrap())
            .collect();
        MarkedSet::new(j, elems).unwrap()
    }

    #[test]
    fn initial_degree_list_is_the_marked_set() {
        let g = marked(&["x^2", "x*y", "y^2"], &["x^2 - y*z", "x*y", "y^2"]);
        let r = Reducer::new(g, TermOrder::DegRevLex).unwrap();
        let v2 = r.list(2).unwrap();
        let heads: Vec<Term> = v2.entries().iter().map(|e| e.head.clone()).collect();
        assert_eq!(heads, vec![t("x^2"), t("x*y"), t("y^2")]);
    }

    #[test]
    fn degree_three_list_order() {
        let g = marked(&["x^2", "x*y", "y^2"], &["x^2 - y*z", "x*y", "y^2"]);
        let mut r = Reducer::new(g, TermOrder::DegRevLex).unwrap();
        r.ensure_degree(3).unwrap();
        let v3 = r.list(3).unwrap();
        let got: Vec<(Term, Term)> = v3
            .entries()
            .iter()
            .map(|e| (e.multiplier.clone(), r.ideal().basis()[e.generator].clone()))
            .collect();
        let expected = vec![
            (t("x"), t("x^2")),
            (t("y"), t("x^2")),
            (t("y"), t("x*y")),
            (t("y"), t("y^2")),
            (t("z"), t("x^2")),
            (t("z"), t("x*y")),
            (t("z"), t("y^2")),
        ];
        assert_eq!(got, expected);
    }

    #[test]
    fn comparators_reject_mixed_degrees() {
        let g = marked(&["x^2", "x*y", "y^2"], &["x^2", "x*y", "y^2"]);
        let j = g.ideal();
        let a = WElement { multiplier: t("x"), generator: 0 };
        let b = WElement { multiplier: Term::one(3), generator: 1 };
        assert!(cmp_vm(j, TermOrder::DegRevLex, &a, &b).is_err());
        assert!(cmp_wm(j, TermOrder::DegRevLex, &a, &b).is_err());
        let c = WElement { multiplier: Term::one(3), generator: 0 };
        assert_eq!(cmp_wm(j, TermOrder::DegRevLex, &c, &b).unwrap(), Ordering::Greater);
        let y = WElement { multiplier: t("y"), generator: 0 };
        let z = WElement { multiplier: t("z"), generator: 0 };
        assert_eq!(cmp_wm(j, TermOrder::DegRevLex, &y, &z).unwrap(), Ordering::Greater);
        assert_eq!(cmp_vm(j, TermOrder::DegRevLex, &a, &z).unwrap(), Ordering::Greater);
    }

    #[test]
    fn v_entry_is_the_class_minimum_across_generator_degrees() {
        let g = MarkedSet::<Rational>::monomial(
            MonomialIdeal::new(Ring::xyz(), ["x^2", "x*y", "y^3"].map(t)).unwrap(),
        );
        let j = g.ideal().clone();
        let mut r = Reducer::new(g, TermOrder::DegRevLex).unwrap();
        r.ensure_degree(4).unwrap();
        let head = t("x*y^3");
        let entry = r.list(4).unwrap().entry_for(&head).unwrap().element();
        assert_eq!((entry.multiplier.clone(), j.basis()[entry.generator].clone()), (t("y^2"), t("x*y")));
        for w in w_class(&j, &head) {
            assert_ne!(cmp_wm(&j, TermOrder::DegRevLex, &w, &entry).unwrap(), Ordering::Less);
        }
    }

    #[test]
    fn normal_form_of_x_cubed() {
        let r = Ring::xyz();
        let g = marked(&["x^2", "x*y", "y^2"], &["x^2 - y*z", "x*y", "y^2"]);
        let mut red = Reducer::new(g.clone(), TermOrder::DegRevLex).unwrap();
        let cert = red.normal_form(&parse_polynomial(&r, "x^3").unwrap()).unwrap();
        assert!(cert.residual.is_zero());
        let used: Vec<(Term, usize)> = cert
            .steps
            .iter()
            .map(|s| (s.multiplier.clone(), s.generator))
            .collect();
        assert_eq!(used, vec![(t("x"), 0), (t("z"), 1)]);
        assert!(cert.verify(&g));
    }

    #[test]
    fn sous_escalier_input_is_untouched() {
        let r = Ring::xyz();
        let g = marked(&["x^2", "x*y", "y^2"], &["x^2 - y*z", "x*y", "y^2"]);
        let mut red = Reducer::new(g, TermOrder::DegRevLex).unwrap();
        let h = parse_polynomial(&r, "x*z^2 - 3*z^3").unwrap();
        let cert = red.normal_form(&h).unwrap();
        assert_eq!(cert.residual, h);
        assert!(cert.steps.is_empty());
        assert!(red.normal_form(&parse_polynomial(&r, "x + z^2").unwrap()).is_err());
    }

    #[test]
    fn refuses_non_strongly_stable() {
        let g = marked(&["x*y", "z^2"], &["x*y + y*z", "z^2 + x*z"]);
        match Reducer::new(g, TermOrder::DegRevLex) {
            Err(Error::NotStronglyStable(v)) => assert_eq!(v.result, t("x^2")),
            other => panic!("unexpected {other:?}"),
        }
    }
}
