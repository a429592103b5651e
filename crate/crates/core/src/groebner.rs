//! A classical Buchberger engine over the rationals, used as an independent
//! oracle, and the extraction of marked bases from explicit ideals.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashSet};

use num_traits::{One, Zero};

use crate::coeff::Rational;
use crate::criterion::{buchberger_check, w_matrix, PairMode, RankEntry};
use crate::error::Result;
use crate::ideal::MonomialIdeal;
use crate::linalg::rref;
use crate::marked::{MarkedPolynomial, MarkedSet};
use crate::poly::Polynomial;
use crate::reduction::Reducer;
use crate::term::{terms_of_degree, Term, TermOrder};

/// Terms sorted strictly descending by the working order.
#[derive(Clone, Debug, PartialEq)]
struct Sorted {
    terms: Vec<(Term, Rational)>,
}

impl Sorted {
    fn new(p: &Polynomial<Rational>, order: TermOrder) -> Self {
        let mut terms: Vec<(Term, Rational)> = p.iter().map(|(t, c)| (t.clone(), c.clone())).collect();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        Sorted { terms }
    }

    fn lead(&self) -> Option<&Term> {
        self.terms.first().map(|(t, _)| t)
    }

    fn make_monic(&mut self) {
        if let Some((_, c)) = self.terms.first() {
            if !c.is_one() {
                let inv = Rational::one() / c;
                for (_, d) in self.terms.iter_mut() {
                    *d *= &inv;
                }
            }
        }
    }

    /// `self - c * t * g`, merging two descending lists.
    fn sub_mul(&self, c: &Rational, t: &Term, g: &Sorted, order: TermOrder) -> Sorted {
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = g.terms.iter().map(|(s, d)| (s.mul(t), d * c)).peekable();
        loop {
            let ord = match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => Ordering::Greater,
                (None, Some(_)) => Ordering::Less,
                (Some(x), Some(y)) => order.cmp(&x.0, &y.0),
            };
            match ord {
                Ordering::Greater => out.push(a.next().unwrap().clone()),
                Ordering::Less => {
                    let (s, d) = b.next().unwrap();
                    out.push((s, -d));
                }
                Ordering::Equal => {
                    let (s, x) = a.next().unwrap();
                    let (_, y) = b.next().unwrap();
                    let v = x - y;
                    if !v.is_zero() {
                        out.push((s.clone(), v));
                    }
                }
            }
        }
        Sorted { terms: out }
    }

    fn to_polynomial(&self, nvars: usize) -> Polynomial<Rational> {
        Polynomial::from_terms(nvars, self.terms.iter().map(|(t, c)| (c.clone(), t.clone()))).unwrap()
    }
}

/// Full reduction of `h` by monic polynomials.
fn reduce(h: Sorted, basis: &[Sorted], order: TermOrder) -> Sorted {
    let mut done = Vec::new();
    let mut h = h;
    while let Some((lead, c)) = h.terms.first().cloned() {
        match basis.iter().find(|g| g.lead().unwrap().divides(&lead)) {
            Some(g) => {
                let t = g.lead().unwrap().quotient_of(&lead).unwrap();
                h = h.sub_mul(&c, &t, g, order);
            }
            None => {
                done.push(h.terms.remove(0));
            }
        }
    }
    Sorted { terms: done }
}

/// A reduced Gröbner basis: monic, interreduced, sorted descending by leading term.
#[derive(Clone, Debug, PartialEq)]
pub struct GroebnerBasis {
    nvars: usize,
    order: TermOrder,
    polys: Vec<Sorted>,
}

impl GroebnerBasis {
    pub fn order(&self) -> TermOrder {
        self.order
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn polynomials(&self) -> Vec<Polynomial<Rational>> {
        self.polys.iter().map(|p| p.to_polynomial(self.nvars)).collect()
    }

    pub fn leading_terms(&self) -> Vec<Term> {
        self.polys.iter().map(|p| p.lead().unwrap().clone()).collect()
    }

    pub fn normal_form(&self, h: &Polynomial<Rational>) -> Polynomial<Rational> {
        reduce(Sorted::new(h, self.order), &self.polys, self.order).to_polynomial(self.nvars)
    }

    pub fn contains(&self, h: &Polynomial<Rational>) -> bool {
        reduce(Sorted::new(h, self.order), &self.polys, self.order).terms.is_empty()
    }

    /// `dim_K (S/I)_m`, valid for homogeneous ideals.
    pub fn hilbert_function(&self, m: u32) -> usize {
        let lts = self.leading_terms();
        terms_of_degree(self.nvars, m)
            .iter()
            .filter(|t| !lts.iter().any(|l| l.divides(t)))
            .count()
    }
}

/// Buchberger's algorithm with the product and chain criteria, selecting
/// the pair with the smallest lcm first. The zero ideal gives an empty basis.
pub fn groebner(nvars: usize, gens: &[Polynomial<Rational>], order: TermOrder) -> GroebnerBasis {
    let mut basis: Vec<Sorted> = Vec::new();
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    let mut live: HashSet<(usize, usize)> = HashSet::new();

    let add = |p: Sorted, basis: &mut Vec<Sorted>, pairs: &mut Vec<(usize, usize)>, live: &mut HashSet<(usize, usize)>| {
        let k = basis.len();
        basis.push(p);
        for i in 0..k {
            pairs.push((i, k));
            live.insert((i, k));
        }
    };

    for g in gens {
        let r = reduce(Sorted::new(g, order), &basis, order);
        if !r.terms.is_empty() {
            let mut r = r;
            r.make_monic();
            add(r, &mut basis, &mut pairs, &mut live);
        }
    }

    while !pairs.is_empty() {
        let (pos, _) = pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                let la = basis[a.0].lead().unwrap().lcm(basis[a.1].lead().unwrap());
                let lb = basis[b.0].lead().unwrap().lcm(basis[b.1].lead().unwrap());
                order.cmp(&la, &lb).then(a.cmp(b))
            })
            .unwrap();
        let (i, j) = pairs.swap_remove(pos);
        live.remove(&(i, j));
        let (li, lj) = (basis[i].lead().unwrap().clone(), basis[j].lead().unwrap().clone());
        if li.is_coprime(&lj) {
            continue;
        }
        let lcm = li.lcm(&lj);
        let key = |a: usize, b: usize| (a.min(b), a.max(b));
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].lead().unwrap().divides(&lcm)
                && !live.contains(&key(i, k))
                && !live.contains(&key(j, k))
        });
        if chain {
            continue;
        }
        let ti = li.quotient_of(&lcm).unwrap();
        let s = Sorted {
            terms: basis[i].terms.iter().map(|(t, c)| (t.mul(&ti), c.clone())).collect(),
        };
        let s = s.sub_mul(&Rational::one(), &lj.quotient_of(&lcm).unwrap(), &basis[j], order);
        let mut r = reduce(s, &basis, order);
        if !r.terms.is_empty() {
            r.make_monic();
            add(r, &mut basis, &mut pairs, &mut live);
        }
    }

    // Keep minimal leading terms, then interreduce.
    let mut minimal: Vec<Sorted> = Vec::new();
    for (k, p) in basis.iter().enumerate() {
        let l = p.lead().unwrap();
        let redundant = basis.iter().enumerate().any(|(q, o)| {
            q != k && o.lead().unwrap().divides(l) && (o.lead().unwrap() != l || q < k)
        });
        if !redundant {
            minimal.push(p.clone());
        }
    }
    let mut reduced = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others: Vec<Sorted> = minimal
            .iter()
            .enumerate()
            .filter(|(q, _)| *q != k)
            .map(|(_, p)| p.clone())
            .collect();
        let head = Sorted {
            terms: vec![minimal[k].terms[0].clone()],
        };
        let tail = Sorted {
            terms: minimal[k].terms[1..].to_vec(),
        };
        let mut terms = head.terms;
        terms.extend(reduce(tail, &others, order).terms);
        reduced.push(Sorted { terms });
    }
    reduced.sort_by(|a, b| order.cmp(b.lead().unwrap(), a.lead().unwrap()));
    GroebnerBasis {
        nvars,
        order,
        polys: reduced,
    }
}

pub fn gb_normal_form(h: &Polynomial<Rational>, gb: &GroebnerBasis) -> Polynomial<Rational> {
    gb.normal_form(h)
}

pub fn gb_member(h: &Polynomial<Rational>, gb: &GroebnerBasis) -> bool {
    gb.contains(h)
}

/// Equality of two ideals by mutual membership of generators.
pub fn ideal_equal(nvars: usize, a: &[Polynomial<Rational>], b: &[Polynomial<Rational>]) -> bool {
    let ga = groebner(nvars, a, TermOrder::DegRevLex);
    let gb = groebner(nvars, b, TermOrder::DegRevLex);
    b.iter().all(|p| ga.contains(p)) && a.iter().all(|p| gb.contains(p))
}

/// `dim_K (S/I)_m` for a homogeneous ideal, from the leading terms of its basis.
pub fn hilbert_function_of_ideal(nvars: usize, gens: &[Polynomial<Rational>], m: u32) -> usize {
    groebner(nvars, gens, TermOrder::DegRevLex).hilbert_function(m)
}

/// How an attempt to find a J-marked basis of an ideal ended.
#[derive(Clone, Debug)]
pub enum Extraction {
    /// The ideal has this J-marked basis.
    Basis(MarkedSet<Rational>),
    /// Some `x^α` in `B_J` has no expression modulo `I` over the sous-escalier.
    NotSpanning { degree: u32, head: Term },
    /// `I` contains a nonzero polynomial supported on the sous-escalier.
    NotFree { degree: u32, relation: Polynomial<Rational> },
    /// The extracted marked set fails the Buchberger-like criterion.
    NotABasis(MarkedSet<Rational>),
    /// The extracted marked set is a basis of a smaller ideal.
    GeneratesLess(MarkedSet<Rational>),
}

impl Extraction {
    pub fn is_basis(&self) -> bool {
        matches!(self, Extraction::Basis(_))
    }

    pub fn marked(&self) -> Option<&MarkedSet<Rational>> {
        match self {
            Extraction::Basis(g) | Extraction::NotABasis(g) | Extraction::GeneratesLess(g) => Some(g),
            _ => None,
        }
    }
}

fn homogeneous_parts(gens: &[Polynomial<Rational>]) -> Result<Vec<(u32, &Polynomial<Rational>)>> {
    gens.iter()
        .filter(|g| !g.is_zero())
        .map(|g| Ok((g.homogeneous_degree()?.unwrap(), g)))
        .collect()
}

/// `I_d` row reduced with the columns of `J_d` first. Returns the columns and the echelon form.
fn degree_piece(
    ideal: &MonomialIdeal,
    gens: &[(u32, &Polynomial<Rational>)],
    d: u32,
) -> (Vec<Term>, usize, crate::linalg::Echelon) {
    let n = ideal.ring().nvars();
    let mut cols = ideal.terms_in_degree(d);
    let n_j = cols.len();
    cols.extend(ideal.sous_escalier(d).terms);
    let index: std::collections::HashMap<&Term, usize> = cols.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let mut rows = Vec::new();
    for &(e, g) in gens {
        if e > d {
            continue;
        }
        for t in terms_of_degree(n, d - e) {
            let mut row = vec![Rational::zero(); cols.len()];
            for (s, c) in g.iter() {
                row[index[&s.mul(&t)]] = c.clone();
            }
            rows.push(row);
        }
    }
    let e = rref(rows, cols.len());
    (cols, n_j, e)
}

/// One marked polynomial per generator of `J`, read off `I_d` by linear algebra.
fn extract(ideal: &MonomialIdeal, gens: &[(u32, &Polynomial<Rational>)]) -> std::result::Result<MarkedSet<Rational>, Extraction> {
    let n = ideal.ring().nvars();
    let mut degrees: Vec<u32> = ideal.basis().iter().map(Term::degree).collect();
    degrees.sort();
    degrees.dedup();
    let mut elements = Vec::new();
    for d in degrees {
        let (cols, n_j, e) = degree_piece(ideal, gens, d);
        if let Some(k) = e.pivots.iter().position(|&p| p >= n_j) {
            let relation = Polynomial::from_terms(
                n,
                e.rows[k]
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(i, c)| (c.clone(), cols[i].clone())),
            )
            .unwrap();
            return Err(Extraction::NotFree { degree: d, relation });
        }
        for (_, b) in ideal.generators_of_degree(d) {
            let col = cols.iter().position(|t| t == b).unwrap();
            let Some(k) = e.pivots.iter().position(|&p| p == col) else {
                return Err(Extraction::NotSpanning {
                    degree: d,
                    head: b.clone(),
                });
            };
            let row = &e.rows[k];
            if (0..n_j).any(|i| i != col && !row[i].is_zero()) {
                return Err(Extraction::NotSpanning {
                    degree: d,
                    head: cols[(0..n_j).find(|&i| i != col && !row[i].is_zero()).unwrap()].clone(),
                });
            }
            let poly = Polynomial::from_terms(
                n,
                row.iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(i, c)| (c.clone(), cols[i].clone())),
            )
            .unwrap();
            elements.push(MarkedPolynomial::new(b.clone(), poly).unwrap());
        }
    }
    Ok(MarkedSet::new(ideal.clone(), elements).unwrap())
}

/// The J-marked basis of the homogeneous ideal generated by `gens`, if any.
pub fn marked_basis_from_ideal(gens: &[Polynomial<Rational>], ideal: &MonomialIdeal) -> Result<Extraction> {
    ideal.require_strongly_stable()?;
    let n = ideal.ring().nvars();
    let parts = homogeneous_parts(gens)?;
    let g = match extract(ideal, &parts) {
        Ok(g) => g,
        Err(e) => return Ok(e),
    };
    let mut reducer = Reducer::new(g.clone(), TermOrder::DegRevLex)?;
    if !buchberger_check(&mut reducer, PairMode::Minimal, None)?.is_basis() {
        return Ok(Extraction::NotABasis(g));
    }
    if !ideal_equal(n, &g.polynomials(), gens) {
        return Ok(Extraction::GeneratesLess(g));
    }
    Ok(Extraction::Basis(g))
}

/// Whether `I = (gens)` lies in the marked family of `J`; on success the
/// outcome carries the J-marked basis of `I` as witness.
pub fn family_membership(gens: &[Polynomial<Rational>], ideal: &MonomialIdeal) -> Result<Extraction> {
    marked_basis_from_ideal(gens, ideal)
}

/// Extraction without the strong stability requirement, for diagnostics.
#[derive(Clone, Debug)]
pub struct RelaxedExtraction {
    pub outcome: std::result::Result<MarkedSet<Rational>, Extraction>,
    /// Whether the extracted set generates the whole ideal.
    pub generates: bool,
    /// `rank W_m` against `dim J_m`; equality everywhere is necessary for a basis.
    pub ranks: Vec<RankEntry>,
}

impl RelaxedExtraction {
    pub fn is_basis(&self) -> bool {
        self.outcome.is_ok() && self.generates && self.ranks.iter().all(|e| e.rank == e.dim_j)
    }
}

pub fn relaxed_extraction(gens: &[Polynomial<Rational>], ideal: &MonomialIdeal, max_degree: u32) -> Result<RelaxedExtraction> {
    let n = ideal.ring().nvars();
    let parts = homogeneous_parts(gens)?;
    let outcome = extract(ideal, &parts);
    let (generates, ranks) = match &outcome {
        Ok(g) => {
            let ranks = (ideal.initial_degree()..=max_degree)
                .map(|m| {
                    let (cols, rows) = w_matrix(g, m);
                    RankEntry {
                        degree: m,
                        rank: rref(rows, cols.len()).rank(),
                        dim_j: ideal.dim_in_degree(m),
                    }
                })
                .collect();
            (ideal_equal(n, &g.polynomials(), gens), ranks)
        }
        Err(_) => (false, Vec::new()),
    };
    Ok(RelaxedExtraction {
        outcome,
        generates,
        ranks,
    })
}

/// Splits a polynomial into homogeneous components.
pub fn homogeneous_components(h: &Polynomial<Rational>) -> BTreeMap<u32, Polynomial<Rational>> {
    let mut parts: BTreeMap<u32, Polynomial<Rational>> = BTreeMap::new();
    for (t, c) in h.iter() {
        parts
            .entry(t.degree())
            .or_insert_with(|| Polynomial::zero(h.nvars()))
            .add_term(t.clone(), c);
    }
    parts
}
