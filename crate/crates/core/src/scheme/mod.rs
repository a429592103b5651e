//! The marked scheme: a generic marked set over parameters `C`, the ideal of
//! conditions for it to be a basis, its `Z^{n+1}`-grading, tangent space at
//! the origin and sections by term orders.

mod json;
mod minors;
mod naming;

pub use json::{SchemeIdealJson, SchemeGeneratorJson};
pub use minors::{matrix_a, minors_ideal, MatrixA, MinorMode, MinorOptions};
pub use naming::{parse_naming_map, NamingEntry, NamingMap};

use crate::coeff::{Coefficient, Rational};
use crate::criterion::{buchberger_check, PairMode};
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::linalg::{rref, Echelon};
use crate::marked::{MarkedPolynomial, MarkedSet};
use crate::param::{ParamMonomial, ParamPoly};
use crate::parse::format_term;
use crate::poly::Polynomial;
use crate::reduction::Reducer;
use crate::term::{Term, TermOrder};

/// Parameter `C_{αγ}`: the coefficient of the tail term `γ` in the generic
/// polynomial with head `α`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParameterLabel {
    pub generator: usize,
    pub head: Term,
    pub tail: Term,
}

/// The parameters of a generic marked set with their printed names.
///
/// The generic polynomial with head `α` is `x^α + Σ s_k c_k x^γ`. With the
/// default naming `s_k = -1`, so that `c_k = C_{αγ}` in `F_α = x^α - Σ C x^γ`.
#[derive(Clone, Debug, PartialEq)]
pub struct ParameterRing {
    pub labels: Vec<ParameterLabel>,
    pub names: Vec<String>,
    pub signs: Vec<i8>,
}

impl ParameterRing {
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn index_of_label(&self, head: &Term, tail: &Term) -> Option<usize> {
        self.labels
            .iter()
            .position(|l| &l.head == head && &l.tail == tail)
    }

    /// `λ(c_k) = α - γ`.
    pub fn lambda(&self, k: usize) -> Vec<i64> {
        let l = &self.labels[k];
        l.head
            .exponents()
            .iter()
            .zip(l.tail.exponents())
            .map(|(&a, &g)| a as i64 - g as i64)
            .collect()
    }

    pub fn lambda_degree(&self, m: &ParamMonomial) -> Vec<i64> {
        let n = self.labels.first().map_or(0, |l| l.head.nvars());
        let mut out = vec![0i64; n];
        for &(k, e) in m.factors() {
            for (o, d) in out.iter_mut().zip(self.lambda(k as usize)) {
                *o += d * e as i64;
            }
        }
        out
    }

    /// A point with the given named values and zero elsewhere.
    pub fn point(&self, values: &[(&str, Rational)]) -> Result<Vec<Rational>> {
        let mut p = vec![<Rational as Coefficient>::zero(); self.len()];
        for (name, v) in values {
            let k = self
                .index_of(name)
                .ok_or_else(|| Error::InvalidIdeal(format!("unknown parameter `{name}`")))?;
            p[k] = v.clone();
        }
        Ok(p)
    }
}

#[derive(Clone, Debug)]
pub struct GenericMarkedSet {
    pub params: ParameterRing,
    pub set: MarkedSet<ParamPoly>,
}

impl GenericMarkedSet {
    pub fn ideal(&self) -> &MonomialIdeal {
        self.set.ideal()
    }

    /// The marked set obtained by substituting rational values.
    pub fn specialize(&self, point: &[Rational]) -> MarkedSet<Rational> {
        self.set.map_coeffs(|c| c.eval(point))
    }
}

/// One parameter per generator and same-degree sous-escalier term.
/// Without a naming map parameters follow the generator order and, inside
/// a generator, tails descending by degrevlex.
pub fn build_generic_set(ideal: &MonomialIdeal, naming: Option<&NamingMap>) -> Result<GenericMarkedSet> {
    ideal.require_strongly_stable()?;
    let mut labels = Vec::new();
    for (i, b) in ideal.basis().iter().enumerate() {
        for g in ideal.sous_escalier(b.degree()).terms {
            labels.push(ParameterLabel {
                generator: i,
                head: b.clone(),
                tail: g,
            });
        }
    }
    let params = match naming {
        None => ParameterRing {
            names: (1..=labels.len()).map(|k| format!("c{k}")).collect(),
            signs: vec![-1; labels.len()],
            labels,
        },
        Some(map) => map.apply(ideal, labels)?,
    };
    let n = ideal.ring().nvars();
    let mut polys: Vec<Polynomial<ParamPoly>> = ideal
        .basis()
        .iter()
        .map(|b| Polynomial::from_term(b.clone()))
        .collect();
    for (k, l) in params.labels.iter().enumerate() {
        let mut c = ParamPoly::default();
        c.add_monomial(ParamMonomial::var(k), &crate::coeff::rat(params.signs[k] as i64));
        polys[l.generator].add_term(l.tail.clone(), &c);
    }
    let elements = ideal
        .basis()
        .iter()
        .zip(polys)
        .map(|(b, p)| {
            debug_assert_eq!(p.nvars(), n);
            MarkedPolynomial::new(b.clone(), p)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(GenericMarkedSet {
        params,
        set: MarkedSet::new(ideal.clone(), elements)?,
    })
}

/// Where a scheme generator came from: an S-pair and a sous-escalier term.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Provenance {
    pub first: Term,
    pub second: Term,
    pub monomial: Term,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SchemeGenerator {
    pub poly: ParamPoly,
    pub lambda: Vec<i64>,
    pub provenance: Provenance,
}

impl SchemeGenerator {
    pub fn is_homogeneous(&self, params: &ParameterRing) -> bool {
        self.poly
            .iter()
            .all(|(m, _)| params.lambda_degree(m) == self.lambda)
    }
}

#[derive(Clone, Debug)]
pub struct SchemeIdeal {
    pub params: ParameterRing,
    pub mode: PairMode,
    pub generators: Vec<SchemeGenerator>,
}

impl SchemeIdeal {
    pub fn polys(&self) -> Vec<ParamPoly> {
        self.generators.iter().map(|g| g.poly.clone()).collect()
    }

    /// Whether every generator vanishes at `point`.
    pub fn vanishes_at(&self, point: &[Rational]) -> bool {
        self.generators
            .iter()
            .all(|g| Coefficient::is_zero(&g.poly.eval(point)))
    }
}

/// Coefficients of the reduced S-polynomials of the generic marked set.
/// `PairMode::Minimal` gives `𝔯'`; `PairMode::All` uses every pair.
pub fn scheme_ideal(generic: &GenericMarkedSet, mode: PairMode, order: TermOrder) -> Result<SchemeIdeal> {
    let mut reducer = Reducer::new(generic.set.clone(), order)?;
    let check = buchberger_check(&mut reducer, mode, None)?;
    let basis = generic.ideal().basis();
    let mut generators = Vec::new();
    for r in &check.reductions {
        for (t, c) in r.certificate.residual.iter_desc() {
            let lambda = c
                .iter()
                .next()
                .map(|(m, _)| generic.params.lambda_degree(m))
                .unwrap_or_default();
            generators.push(SchemeGenerator {
                poly: c.clone(),
                lambda,
                provenance: Provenance {
                    first: basis[r.spoly.pair.first].clone(),
                    second: basis[r.spoly.pair.second].clone(),
                    monomial: t.clone(),
                },
            });
        }
    }
    Ok(SchemeIdeal {
        params: generic.params.clone(),
        mode,
        generators,
    })
}

/// Whether every generator is homogeneous for the grading `λ(C_{αγ}) = α - γ`.
pub fn homogeneity_check(ideal: &SchemeIdeal) -> bool {
    ideal.generators.iter().all(|g| g.is_homogeneous(&ideal.params))
}

/// Zariski tangent space at the origin: the span of the linear parts.
#[derive(Clone, Debug)]
pub struct TangentSpace {
    pub nparams: usize,
    pub forms: Echelon,
}

impl TangentSpace {
    pub fn rank(&self) -> usize {
        self.forms.rank()
    }

    pub fn dimension(&self) -> usize {
        self.nparams - self.rank()
    }

    /// Whether the linear form `Σ a_k c_k` vanishes on the tangent space.
    pub fn contains(&self, form: &[(usize, Rational)]) -> bool {
        let mut v = vec![<Rational as Coefficient>::zero(); self.nparams];
        for (k, a) in form {
            v[*k] += a;
        }
        self.forms.contains(&v)
    }
}

pub fn tangent_space_of(nparams: usize, polys: &[ParamPoly]) -> TangentSpace {
    let rows = polys
        .iter()
        .map(|p| {
            let mut row = vec![<Rational as Coefficient>::zero(); nparams];
            for (k, a) in p.linear_part() {
                row[k] = a;
            }
            row
        })
        .filter(|r| r.iter().any(|a| !Coefficient::is_zero(a)))
        .collect();
    TangentSpace {
        nparams,
        forms: rref(rows, nparams),
    }
}

pub fn tangent_space(ideal: &SchemeIdeal) -> TangentSpace {
    tangent_space_of(ideal.params.len(), &ideal.polys())
}

/// The section by `C_{αγ} = 0` for every `x^α ≺ x^γ`.
#[derive(Clone, Debug)]
pub struct StratumSection {
    pub order: TermOrder,
    pub killed: Vec<usize>,
    pub generators: Vec<ParamPoly>,
}

pub fn killed_parameters(params: &ParameterRing, order: TermOrder) -> Vec<usize> {
    params
        .labels
        .iter()
        .enumerate()
        .filter(|(_, l)| order.cmp(&l.head, &l.tail).is_lt())
        .map(|(k, _)| k)
        .collect()
}

pub fn stratum_section(ideal: &SchemeIdeal, order: TermOrder) -> StratumSection {
    let killed = killed_parameters(&ideal.params, order);
    let mut mask = vec![false; ideal.params.len()];
    for &k in &killed {
        mask[k] = true;
    }
    let generators = ideal
        .generators
        .iter()
        .map(|g| g.poly.kill(&mask))
        .filter(|p| !p.is_empty())
        .collect();
    StratumSection {
        order,
        killed,
        generators,
    }
}

/// Terms `a` in `J_m` and `b, c` in `N(J)_m` with `a^2 = b c`. Any term
/// order ranking `a` above both `b` and `c` would give `a^2 > b c`, so such
/// a triple shows `J_m` is a segment for no term order.
pub fn non_segment_witness(ideal: &MonomialIdeal, m: u32) -> Option<(Term, Term, Term)> {
    let outside = ideal.sous_escalier(m).terms;
    for a in ideal.terms_in_degree(m) {
        let sq = a.mul(&a);
        for (i, b) in outside.iter().enumerate() {
            for c in &outside[i..] {
                if b.mul(c) == sq {
                    return Some((a, b.clone(), c.clone()));
                }
            }
        }
    }
    None
}

pub fn describe_label(ideal: &MonomialIdeal, l: &ParameterLabel) -> String {
    let r = ideal.ring();
    format!("{} -> {}", format_term(r, &l.head), format_term(r, &l.tail))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::rat;
    use crate::parse::parse_term;
    use crate::ring::Ring;

    fn ideal(names: &[&str], gens: &[&str]) -> MonomialIdeal {
        let r = Ring::new(names.iter().copied()).unwrap();
        MonomialIdeal::new(r.clone(), gens.iter().map(|g| parse_term(&r, g).unwrap())).unwrap()
    }

    #[test]
    fn generic_set_sizes() {
        let g = build_generic_set(&ideal(&["y", "x"], &["x^2"]), None).unwrap();
        assert_eq!(g.params.len(), 2);
        let g = build_generic_set(&ideal(&["z", "y", "x"], &["x^2", "x*y", "y^2"]), None).unwrap();
        assert_eq!(g.params.len(), 9);
        assert!(build_generic_set(&ideal(&["z", "y", "x"], &["x*y", "z^2"]), None).is_err());
    }

    #[test]
    fn lambda_of_a_parameter() {
        let j = ideal(&["z", "y", "x"], &["x^2", "x*y", "y^2"]);
        let g = build_generic_set(&j, None).unwrap();
        let r = j.ring();
        let k = g
            .params
            .index_of_label(&parse_term(r, "x^2").unwrap(), &parse_term(r, "x*z").unwrap())
            .unwrap();
        assert_eq!(g.params.lambda(k), vec![-1, 0, 1]);
        assert_eq!(g.params.lambda_degree(&ParamMonomial::one()), vec![0, 0, 0]);
    }

    #[test]
    fn single_generator_has_no_conditions() {
        let g = build_generic_set(&ideal(&["z", "y", "x"], &["x^2"]), None).unwrap();
        let s = scheme_ideal(&g, PairMode::All, TermOrder::DegRevLex).unwrap();
        assert!(s.generators.is_empty());
        assert_eq!(tangent_space(&s).dimension(), 5);
    }

    #[test]
    fn small_scheme_is_homogeneous_and_contains_known_points() {
        let j = ideal(&["z", "y", "x"], &["x^2", "x*y", "y^2"]);
        let g = build_generic_set(&j, None).unwrap();
        let s = scheme_ideal(&g, PairMode::Minimal, TermOrder::DegRevLex).unwrap();
        assert!(!s.generators.is_empty());
        assert!(homogeneity_check(&s));
        // x^2 - yz, xy, y^2 is a basis: c(x^2 -> yz) = 1.
        let r = j.ring();
        let k = g
            .params
            .index_of_label(&parse_term(r, "x^2").unwrap(), &parse_term(r, "y*z").unwrap())
            .unwrap();
        let mut p = vec![rat(0); g.params.len()];
        p[k] = rat(1);
        assert!(s.vanishes_at(&p));
        // xy - z^2 is not.
        let k = g
            .params
            .index_of_label(&parse_term(r, "x*y").unwrap(), &parse_term(r, "z^2").unwrap())
            .unwrap();
        let mut p = vec![rat(0); g.params.len()];
        p[k] = rat(1);
        assert!(!s.vanishes_at(&p));
    }

    #[test]
    fn lex_kills_a_parameter_with_a_larger_tail() {
        let j = ideal(&["z", "y", "x"], &["x^2", "x*y", "y^2"]);
        let g = build_generic_set(&j, None).unwrap();
        let r = j.ring();
        let k = g
            .params
            .index_of_label(&parse_term(r, "y^2").unwrap(), &parse_term(r, "x*z").unwrap())
            .unwrap();
        assert!(killed_parameters(&g.params, TermOrder::Lex).contains(&k));
        assert!(killed_parameters(&g.params, TermOrder::DegRevLex).is_empty());
    }

    #[test]
    fn segment_obstruction() {
        let j = ideal(
            &["z", "y", "x"],
            &["x^4", "x^3*y", "x^2*y^2", "x*y^3", "x^3*z", "x^2*y*z", "x*y^2*z", "y^5"],
        );
        let r = j.ring();
        let (a, b, c) = non_segment_witness(&j, 4).unwrap();
        assert_eq!(a, parse_term(r, "x*y^2*z").unwrap());
        assert_eq!(b.mul(&c), parse_term(r, "x^2*y^4*z^2").unwrap());
        assert!(non_segment_witness(&ideal(&["z", "y", "x"], &["x^2", "x*y", "y^2"]), 2).is_none());
    }
}
