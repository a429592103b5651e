//! Monomial ideals: minimal basis, membership, sous-escalier, Hilbert
//! function, strong stability and monomial syzygy data.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::parse::format_term;
use crate::ring::Ring;
use crate::term::{binomial, Term};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialIdeal {
    ring: Ring,
    /// Minimal generators, sorted descending by degrevlex.
    basis: Vec<Term>,
}

/// An elementary move `b / x_i * x_j` (with `x_i < x_j`) leaving the ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilityViolation {
    pub generator: Term,
    pub from_var: usize,
    pub to_var: usize,
    pub result: Term,
    pub description: String,
}

impl fmt::Display for StabilityViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.description)
    }
}

/// Terms of degree `m` outside `J`, descending by degrevlex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SousEscalierSlice {
    pub degree: u32,
    pub terms: Vec<Term>,
}

/// A pair of generators (indices into the basis) with the lcm of their heads.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorPair {
    pub first: usize,
    pub second: usize,
    pub lcm: Term,
}

impl GeneratorPair {
    pub fn degree(&self) -> u32 {
        self.lcm.degree()
    }
}

impl MonomialIdeal {
    /// Builds the ideal generated by `gens`, keeping only minimal generators.
    /// The zero ideal and the unit ideal are rejected.
    pub fn new(ring: Ring, gens: impl IntoIterator<Item = Term>) -> Result<Self> {
        let gens: BTreeSet<Term> = gens.into_iter().collect();
        for g in &gens {
            ring.check(g)?;
        }
        if gens.is_empty() {
            return Err(Error::InvalidIdeal("the zero ideal is not allowed".into()));
        }
        if gens.iter().any(Term::is_one) {
            return Err(Error::InvalidIdeal("the unit ideal is not allowed".into()));
        }
        let mut basis: Vec<Term> = gens
            .iter()
            .filter(|g| !gens.iter().any(|h| h != *g && h.divides(g)))
            .cloned()
            .collect();
        basis.sort_by(|a, b| b.cmp_drl(a));
        Ok(MonomialIdeal { ring, basis })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn basis(&self) -> &[Term] {
        &self.basis
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn generator_index(&self, t: &Term) -> Option<usize> {
        self.basis.iter().position(|b| b == t)
    }

    pub fn contains(&self, t: &Term) -> bool {
        self.basis.iter().any(|b| b.divides(t))
    }

    pub fn initial_degree(&self) -> u32 {
        self.basis.iter().map(Term::degree).min().unwrap()
    }

    pub fn max_generator_degree(&self) -> u32 {
        self.basis.iter().map(Term::degree).max().unwrap()
    }

    /// Generators of degree `m`, in basis order.
    pub fn generators_of_degree(&self, m: u32) -> impl Iterator<Item = (usize, &Term)> {
        self.basis
            .iter()
            .enumerate()
            .filter(move |(_, b)| b.degree() == m)
    }

    /// `J_m`: terms of degree `m` in the ideal, descending by degrevlex.
    pub fn terms_in_degree(&self, m: u32) -> Vec<Term> {
        self.ring
            .terms_of_degree(m)
            .into_iter()
            .filter(|t| self.contains(t))
            .collect()
    }

    pub fn sous_escalier(&self, m: u32) -> SousEscalierSlice {
        SousEscalierSlice {
            degree: m,
            terms: self
                .ring
                .terms_of_degree(m)
                .into_iter()
                .filter(|t| !self.contains(t))
                .collect(),
        }
    }

    pub fn dim_in_degree(&self, m: u32) -> usize {
        self.terms_in_degree(m).len()
    }

    /// `dim_K (S/J)_m`.
    pub fn hilbert_function(&self, m: u32) -> usize {
        let total = binomial(m as u64 + self.ring.nvars() as u64 - 1, self.ring.nvars() as u64 - 1);
        total as usize - self.dim_in_degree(m)
    }

    /// First elementary move on a generator that leaves the ideal, if any.
    pub fn stability_violation(&self) -> Option<StabilityViolation> {
        let n = self.ring.nvars();
        for b in &self.basis {
            for i in 0..n {
                if b.exponent(i) == 0 {
                    continue;
                }
                for j in i + 1..n {
                    let moved = b.div_var(i).unwrap().mul_var(j);
                    if !self.contains(&moved) {
                        let description = format!(
                            "move {} -> {} (replacing {} by {}) leaves J",
                            format_term(&self.ring, b),
                            format_term(&self.ring, &moved),
                            self.ring.name(i),
                            self.ring.name(j),
                        );
                        return Some(StabilityViolation {
                            generator: b.clone(),
                            from_var: i,
                            to_var: j,
                            result: moved,
                            description,
                        });
                    }
                }
            }
        }
        None
    }

    /// Checking the generators suffices: a move applied to `t * b` either
    /// acts on `b` or on the cofactor, and both stay in the ideal.
    pub fn is_strongly_stable(&self) -> bool {
        self.stability_violation().is_none()
    }

    pub fn require_strongly_stable(&self) -> Result<()> {
        match self.stability_violation() {
            Some(v) => Err(Error::NotStronglyStable(v)),
            None => Ok(()),
        }
    }

    /// Smallest strongly stable ideal containing `terms`.
    pub fn borel_closure(ring: Ring, terms: impl IntoIterator<Item = Term>) -> Result<Self> {
        let n = ring.nvars();
        let mut seen: BTreeSet<Term> = BTreeSet::new();
        let mut stack: Vec<Term> = terms.into_iter().collect();
        while let Some(t) = stack.pop() {
            ring.check(&t)?;
            if !seen.insert(t.clone()) {
                continue;
            }
            for i in 0..n {
                if t.exponent(i) == 0 {
                    continue;
                }
                for j in i + 1..n {
                    let moved = t.div_var(i).unwrap().mul_var(j);
                    if !seen.contains(&moved) {
                        stack.push(moved);
                    }
                }
            }
        }
        MonomialIdeal::new(ring, seen)
    }

    /// Every pair of distinct generators with the degree of its lcm.
    pub fn all_pairs(&self) -> Vec<GeneratorPair> {
        let mut out = Vec::new();
        for i in 0..self.basis.len() {
            for j in i + 1..self.basis.len() {
                out.push(GeneratorPair {
                    first: i,
                    second: j,
                    lcm: self.basis[i].lcm(&self.basis[j]),
                });
            }
        }
        out
    }

    /// Pairs whose monomial syzygies still generate after dropping `(a, b)`
    /// whenever a third generator `c` divides `lcm(a, b)` with both
    /// `lcm(a, c)` and `lcm(b, c)` proper divisors of it.
    pub fn syzygy_generating_pairs(&self) -> Vec<GeneratorPair> {
        self.all_pairs()
            .into_iter()
            .filter(|p| {
                !self.basis.iter().enumerate().any(|(k, c)| {
                    k != p.first
                        && k != p.second
                        && c.divides(&p.lcm)
                        && self.basis[p.first].lcm(c) != p.lcm
                        && self.basis[p.second].lcm(c) != p.lcm
                })
            })
            .collect()
    }

    /// `m_0`: the largest degree among the generators and the lcms of the
    /// chosen syzygy pairs. With `refined = false` all pairs are used.
    pub fn syzygy_degree_bound(&self, refined: bool) -> u32 {
        let pairs = if refined {
            self.syzygy_generating_pairs()
        } else {
            self.all_pairs()
        };
        pairs
            .iter()
            .map(GeneratorPair::degree)
            .chain(std::iter::once(self.max_generator_degree()))
            .max()
            .unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_term;

    fn ideal(gens: &[&str]) -> MonomialIdeal {
        let r = Ring::xyz();
        MonomialIdeal::new(r.clone(), gens.iter().map(|g| parse_term(&r, g).unwrap())).unwrap()
    }

    fn t(s: &str) -> Term {
        parse_term(&Ring::xyz(), s).unwrap()
    }

    #[test]
    fn membership() {
        let j = ideal(&["x*y", "z^2"]);
        assert!(j.basis().iter().all(|b| j.contains(b)));
        assert!(j.contains(&t("x*y*z")));
        assert!(!j.contains(&t("y^2*z")));
    }

    #[test]
    fn construction_rejects_degenerate_ideals() {
        let r = Ring::xyz();
        assert!(MonomialIdeal::new(r.clone(), []).is_err());
        assert!(MonomialIdeal::new(r.clone(), [Term::one(3)]).is_err());
        let j = ideal(&["x^2", "x^3", "x^2*y"]);
        assert_eq!(j.basis(), &[t("x^2")]);
    }

    #[test]
    fn sous_escalier_examples() {
        let j = ideal(&["x*y", "z^2"]);
        assert_eq!(j.sous_escalier(0).terms, vec![Term::one(3)]);
        let s3 = j.sous_escalier(3);
        assert_eq!(s3.terms, vec![t("x^3"), t("y^3"), t("x^2*z"), t("y^2*z")]);
        let k = ideal(&["x^2", "x*y", "x*z", "y^2"]);
        let hf: Vec<usize> = (0..4).map(|m| k.hilbert_function(m)).collect();
        assert_eq!(hf, vec![1, 3, 2, 2]);
    }

    #[test]
    fn initial_degrees() {
        assert_eq!(ideal(&["x*y", "z^2"]).initial_degree(), 2);
        assert_eq!(ideal(&["x^2"]).initial_degree(), 2);
    }

    #[test]
    fn strong_stability() {
        let j = ideal(&["x*y", "z^2"]);
        let v = j.stability_violation().unwrap();
        assert_eq!(v.generator, t("x*y"));
        assert_eq!(v.result, t("x^2"));
        assert!(v.description.contains("x*y -> x^2"));
        assert!(ideal(&["x^2", "x*y", "x*z", "y^2"]).is_strongly_stable());
        assert!(ideal(&["x^4", "x^3*y", "x^2*y^2", "x*y^3", "x^3*z", "x^2*y*z", "x*y^2*z", "y^5"])
            .is_strongly_stable());
    }

    #[test]
    fn borel_closures() {
        let r = Ring::xyz();
        let k = ideal(&["x^2", "x*y", "x*z", "y^2"]);
        assert_eq!(MonomialIdeal::borel_closure(r.clone(), k.basis().to_vec()).unwrap(), k);
        assert_eq!(
            MonomialIdeal::borel_closure(r.clone(), [t("x*y")]).unwrap(),
            ideal(&["x^2", "x*y"])
        );
        assert_eq!(
            MonomialIdeal::borel_closure(r, [t("z^2")]).unwrap(),
            ideal(&["x^2", "x*y", "x*z", "y^2", "y*z", "z^2"])
        );
    }

    #[test]
    fn syzygy_pair_degrees() {
        let single = ideal(&["x^2"]);
        assert!(single.all_pairs().is_empty());
        assert_eq!(single.syzygy_degree_bound(false), 2);

        let j = ideal(&["x^2", "x*y", "y^2"]);
        let mut degs: Vec<u32> = j.all_pairs().iter().map(GeneratorPair::degree).collect();
        degs.sort();
        assert_eq!(degs, vec![3, 3, 4]);
        assert_eq!(j.syzygy_degree_bound(false), 4);
        let refined: Vec<(Term, Term)> = j
            .syzygy_generating_pairs()
            .iter()
            .map(|p| (j.basis()[p.first].clone(), j.basis()[p.second].clone()))
            .collect();
        assert_eq!(refined, vec![(t("x^2"), t("x*y")), (t("x*y"), t("y^2"))]);
        assert_eq!(j.syzygy_degree_bound(true), 3);
    }
}
