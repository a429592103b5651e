//! S-polynomials, the Buchberger-like basis criterion, the rank oracle,
//! syzygy lifting and ideal membership.

use std::cmp::Ordering;
use std::str::FromStr;

use rayon::prelude::*;

use crate::coeff::{Coefficient, Rational};
use crate::error::{Error, Result};
use crate::ideal::{GeneratorPair, MonomialIdeal};
use crate::linalg::rref;
use crate::marked::MarkedSet;
use crate::poly::Polynomial;
use crate::reduction::{cmp_wm, w_elements, ReductionCertificate, Reducer, WElement};
use crate::term::{terms_of_degree, Term, TermOrder};

/// `x^β f_α - x^β' f_α'` where both multiples have head `lcm(x^α, x^α')`.
#[derive(Clone, Debug, PartialEq)]
pub struct SPolynomial<C> {
    pub pair: GeneratorPair,
    pub left: WElement,
    pub right: WElement,
    pub poly: Polynomial<C>,
}

pub fn s_polynomial<C: Coefficient>(g: &MarkedSet<C>, first: usize, second: usize) -> SPolynomial<C> {
    let basis = g.ideal().basis();
    let lcm = basis[first].lcm(&basis[second]);
    let bl = basis[first].quotient_of(&lcm).unwrap();
    let br = basis[second].quotient_of(&lcm).unwrap();
    let mut poly = g.get(first).poly().mul_term(&bl);
    poly.sub_scaled(&C::one(), &br, g.get(second).poly());
    SPolynomial {
        pair: GeneratorPair { first, second, lcm },
        left: WElement { multiplier: bl, generator: first },
        right: WElement { multiplier: br, generator: second },
        poly,
    }
}

/// Whether `x^δ f_α` belongs to `V_m`: `δ = 0` or `max(x^δ) <= min(x^α)`.
pub fn is_v_multiple(multiplier: &Term, head: &Term) -> bool {
    match multiplier.max_var() {
        Err(_) => true,
        Ok(mx) => mx <= head.min_var().expect("heads have positive degree"),
    }
}

/// Pairs whose S-polynomial has at least one side in `V`. Their monomial
/// syzygies contain the Eliahou-Kervaire generators, so they generate the
/// syzygies of a strongly stable ideal.
pub fn minimal_pairs(ideal: &MonomialIdeal) -> Vec<GeneratorPair> {
    let b = ideal.basis();
    ideal
        .all_pairs()
        .into_iter()
        .filter(|p| {
            let l = b[p.first].quotient_of(&p.lcm).unwrap();
            let r = b[p.second].quotient_of(&p.lcm).unwrap();
            is_v_multiple(&l, &b[p.first]) || is_v_multiple(&r, &b[p.second])
        })
        .collect()
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum PairMode {
    All,
    #[default]
    Minimal,
}

impl PairMode {
    pub fn pairs(self, ideal: &MonomialIdeal) -> Vec<GeneratorPair> {
        match self {
            PairMode::All => ideal.all_pairs(),
            PairMode::Minimal => minimal_pairs(ideal),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            PairMode::All => "all",
            PairMode::Minimal => "minimal",
        }
    }
}

impl FromStr for PairMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all" => Ok(PairMode::All),
            "minimal" => Ok(PairMode::Minimal),
            _ => Err(Error::InvalidIdeal(format!("unknown pair mode `{s}`"))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct PairReduction<C> {
    pub spoly: SPolynomial<C>,
    pub certificate: ReductionCertificate<C>,
}

impl<C: Coefficient> PairReduction<C> {
    pub fn reduces_to_zero(&self) -> bool {
        self.certificate.residual.is_zero()
    }
}

#[derive(Clone, Debug)]
pub struct BasisCheck<C> {
    pub mode: PairMode,
    /// Pairs whose lcm degree exceeds this bound were not examined.
    pub degree_bound: u32,
    pub skipped: usize,
    pub reductions: Vec<PairReduction<C>>,
}

impl<C: Coefficient> BasisCheck<C> {
    pub fn is_basis(&self) -> bool {
        self.skipped == 0 && self.reductions.iter().all(PairReduction::reduces_to_zero)
    }

    pub fn failures(&self) -> impl Iterator<Item = &PairReduction<C>> {
        self.reductions.iter().filter(|r| !r.reduces_to_zero())
    }
}

/// Reduces every selected S-polynomial by its `V_m`. Pairs are reduced in
/// parallel; the result order is the pair order.
pub fn buchberger_check<C: Coefficient>(
    reducer: &mut Reducer<C>,
    mode: PairMode,
    max_degree: Option<u32>,
) -> Result<BasisCheck<C>> {
    let pairs = mode.pairs(reducer.ideal());
    let natural = pairs.iter().map(GeneratorPair::degree).max();
    let bound = match (natural, max_degree) {
        (Some(d), Some(cap)) => d.min(cap),
        (Some(d), None) => d,
        (None, _) => reducer.initial_degree(),
    };
    let (kept, dropped): (Vec<_>, Vec<_>) = pairs.into_iter().partition(|p| p.degree() <= bound);
    if bound >= reducer.initial_degree() {
        reducer.ensure_degree(bound)?;
    }
    let r: &Reducer<C> = reducer;
    let reductions = kept
        .par_iter()
        .map(|p| {
            let spoly = s_polynomial(r.marked(), p.first, p.second);
            let certificate = r.normal_form_in(&spoly.poly)?;
            Ok(PairReduction { spoly, certificate })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(BasisCheck {
        mode,
        degree_bound: bound,
        skipped: dropped.len(),
        reductions,
    })
}

/// The rows of `W_m` over the degree-`m` monomial basis, columns descending by degrevlex.
pub fn w_matrix(g: &MarkedSet<Rational>, m: u32) -> (Vec<Term>, Vec<Vec<Rational>>) {
    let cols = terms_of_degree(g.ring().nvars(), m);
    let index: std::collections::HashMap<&Term, usize> =
        cols.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let rows = w_elements(g.ideal(), m)
        .into_iter()
        .map(|w| {
            let mut row = vec![<Rational as Coefficient>::zero(); cols.len()];
            for (t, c) in g.get(w.generator).poly().iter() {
                row[index[&t.mul(&w.multiplier)]] = c.clone();
            }
            row
        })
        .collect();
    (cols, rows)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankEntry {
    pub degree: u32,
    pub rank: usize,
    pub dim_j: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankCheck {
    pub entries: Vec<RankEntry>,
}

impl RankCheck {
    pub fn is_basis(&self) -> bool {
        self.entries.iter().all(|e| e.rank == e.dim_j)
    }
}

/// Independent oracle: `dim (G)_m == dim J_m` for every `m <= m_0`, by
/// exact row reduction of all of `W_m`.
pub fn basis_check_by_rank(g: &MarkedSet<Rational>, max_degree: Option<u32>) -> Result<RankCheck> {
    let ideal = g.ideal();
    ideal.require_strongly_stable()?;
    let m0 = max_degree.unwrap_or_else(|| ideal.syzygy_degree_bound(false));
    let entries = (ideal.initial_degree()..=m0)
        .into_par_iter()
        .map(|m| {
            let (cols, rows) = w_matrix(g, m);
            RankEntry {
                degree: m,
                rank: rref(rows, cols.len()).rank(),
                dim_j: ideal.dim_in_degree(m),
            }
        })
        .collect();
    Ok(RankCheck { entries })
}

/// Polynomials of `(G)_m` supported on the sous-escalier, as a reduced
/// basis. Works for any marked set, strongly stable or not.
pub fn sous_escalier_relations(g: &MarkedSet<Rational>, m: u32) -> Vec<Polynomial<Rational>> {
    let ideal = g.ideal();
    let (cols, rows) = w_matrix(g, m);
    // Put the J columns first so pivots there are eliminated before N(J).
    let order: Vec<usize> = (0..cols.len())
        .filter(|&i| ideal.contains(&cols[i]))
        .chain((0..cols.len()).filter(|&i| !ideal.contains(&cols[i])))
        .collect();
    let permuted: Vec<Vec<Rational>> = rows
        .into_iter()
        .map(|r| order.iter().map(|&i| r[i].clone()).collect())
        .collect();
    let n_j = cols.iter().filter(|t| ideal.contains(t)).count();
    let e = rref(permuted, cols.len());
    e.rows
        .iter()
        .zip(&e.pivots)
        .filter(|(_, &p)| p >= n_j)
        .map(|(row, _)| {
            let terms = row
                .iter()
                .enumerate()
                .filter(|(_, c)| !Coefficient::is_zero(*c))
                .map(|(k, c)| (c.clone(), cols[order[k]].clone()));
            Polynomial::from_terms(g.ring().nvars(), terms).unwrap()
        })
        .collect()
}

/// A tuple `(h_1, ..., h_t)` of homogeneous polynomials, one per generator.
#[derive(Clone, Debug, PartialEq)]
pub struct Syzygy<C> {
    pub components: Vec<Polynomial<C>>,
}

impl<C: Coefficient> Syzygy<C> {
    /// `Σ h_i f_i`.
    pub fn evaluate(&self, g: &MarkedSet<C>) -> Polynomial<C> {
        let mut acc = Polynomial::zero(g.ring().nvars());
        for (h, f) in self.components.iter().zip(g.elements()) {
            for (t, c) in h.iter() {
                acc.sub_scaled(&c.neg_ref(), t, f.poly());
            }
        }
        acc
    }

    /// `H_max`: the largest `x^β f_i` under the `W_m` order with `x^β` in
    /// the support of `h_i`.
    pub fn max_element(&self, ideal: &MonomialIdeal, order: TermOrder) -> Option<WElement> {
        let mut best: Option<WElement> = None;
        for (i, h) in self.components.iter().enumerate() {
            for t in h.support() {
                let w = WElement { multiplier: t.clone(), generator: i };
                let better = match &best {
                    None => true,
                    Some(b) => cmp_wm(ideal, order, &w, b).ok() == Some(Ordering::Greater),
                };
                if better {
                    best = Some(w);
                }
            }
        }
        best
    }

    /// `H^+`: the terms `c x^β e_i` with `x^β x^{α_i} = Ht(H)`.
    pub fn head_part(&self, ideal: &MonomialIdeal, order: TermOrder) -> Syzygy<C> {
        let n = ideal.ring().nvars();
        let Some(top) = self.max_element(ideal, order) else {
            return Syzygy { components: self.components.clone() };
        };
        let eta = top.head(ideal);
        let components = self
            .components
            .iter()
            .zip(ideal.basis())
            .map(|(h, b)| match b.quotient_of(&eta) {
                Ok(beta) => match h.coeff(&beta) {
                    Some(c) => Polynomial::monomial(c.clone(), beta),
                    None => Polynomial::zero(n),
                },
                Err(_) => Polynomial::zero(n),
            })
            .collect();
        Syzygy { components }
    }
}

/// The monomial syzygy `x^β e_α - x^β' e_α'` of a pair.
pub fn pair_syzygy<C: Coefficient>(ideal: &MonomialIdeal, pair: &GeneratorPair) -> Syzygy<C> {
    let n = ideal.ring().nvars();
    let b = ideal.basis();
    let mut components = vec![Polynomial::zero(n); b.len()];
    components[pair.first].add_term(b[pair.first].quotient_of(&pair.lcm).unwrap(), &C::one());
    components[pair.second].add_term(
        b[pair.second].quotient_of(&pair.lcm).unwrap(),
        &C::one().neg_ref(),
    );
    Syzygy { components }
}

/// Lifts the monomial syzygy of `pair` to a syzygy of `G` using the
/// certificate of its S-polynomial. Fails when the residual is nonzero.
pub fn lift_syzygy<C: Coefficient>(reducer: &mut Reducer<C>, pair: &GeneratorPair) -> Result<Syzygy<C>> {
    let sp = s_polynomial(reducer.marked(), pair.first, pair.second);
    let cert = reducer.normal_form(&sp.poly)?;
    if !cert.residual.is_zero() {
        return Err(Error::NonzeroResidual(format!(
            "S-polynomial of generators {} and {} does not reduce to 0",
            pair.first, pair.second
        )));
    }
    let mut h = pair_syzygy::<C>(reducer.ideal(), pair);
    for s in &cert.steps {
        h.components[s.generator].add_term(s.multiplier.clone(), &s.coefficient.neg_ref());
    }
    Ok(h)
}

/// Membership in `(G)` for a marked basis: the normal form vanishes.
/// Inhomogeneous input is tested component by component.
pub fn ideal_membership<C: Coefficient>(reducer: &mut Reducer<C>, h: &Polynomial<C>) -> Result<bool> {
    let mut parts: std::collections::BTreeMap<u32, Polynomial<C>> = Default::default();
    for (t, c) in h.iter() {
        parts
            .entry(t.degree())
            .or_insert_with(|| Polynomial::zero(h.nvars()))
            .add_term(t.clone(), c);
    }
    for p in parts.values() {
        if !reducer.normal_form(p)?.residual.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}
