//! Seeded random inputs shared by the integration tests.
#![allow(dead_code)]

use jmarked::coeff::ratio;
use jmarked::groebner::{marked_basis_from_ideal, Extraction};
use jmarked::term::terms_of_degree;
use jmarked::{MarkedPolynomial, MarkedSet, MonomialIdeal, Polynomial, Rational, Ring, Term};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn ring(n: usize) -> Ring {
    let names = ["w", "z", "y", "x"];
    Ring::new(names[4 - n..].iter().copied()).unwrap()
}

pub fn small_rational(rng: &mut impl Rng) -> Rational {
    let mut n = 0;
    while n == 0 {
        n = rng.gen_range(-4..=4);
    }
    ratio(n, rng.gen_range(1..=3))
}

pub fn random_term(rng: &mut impl Rng, n: usize, d: u32) -> Term {
    let mut exps = vec![0u32; n];
    for _ in 0..d {
        exps[rng.gen_range(0..n)] += 1;
    }
    Term::new(exps)
}

/// Borel closure of one to three random terms of degree at most `max_deg`.
pub fn random_stable_ideal(rng: &mut impl Rng, n: usize, max_deg: u32) -> MonomialIdeal {
    let k = rng.gen_range(1..=3);
    let terms: Vec<Term> = (0..k)
        .map(|_| {
            let d = rng.gen_range(2.min(max_deg)..=max_deg);
            random_term(rng, n, d)
        })
        .collect();
    MonomialIdeal::borel_closure(ring(n), terms).unwrap()
}

/// Each term of degree `d` present with probability `density`.
pub fn random_homogeneous(rng: &mut impl Rng, n: usize, d: u32, density: f64) -> Polynomial<Rational> {
    let mut terms = Vec::new();
    for t in terms_of_degree(n, d) {
        if rng.gen_bool(density) {
            terms.push((small_rational(rng), t));
        }
    }
    Polynomial::from_terms(n, terms).unwrap()
}

/// A marked set over `ideal` with random tails; usually not a basis.
pub fn random_marked_set(rng: &mut impl Rng, ideal: &MonomialIdeal, density: f64) -> MarkedSet<Rational> {
    let elements = ideal
        .basis()
        .iter()
        .map(|b| {
            let mut tail = Vec::new();
            for t in ideal.sous_escalier(b.degree()).terms {
                if rng.gen_bool(density) {
                    tail.push((small_rational(rng), t));
                }
            }
            MarkedPolynomial::from_tail(b.clone(), tail).unwrap()
        })
        .collect();
    MarkedSet::new(ideal.clone(), elements).unwrap()
}

fn linear_images(rng: &mut impl Rng, n: usize) -> Vec<Polynomial<Rational>> {
    (0..n)
        .map(|i| {
            let mut p = Polynomial::from_term(Term::var(n, i));
            for j in 0..n {
                if j != i && rng.gen_bool(0.6) {
                    let c = *[-1i64, 1, 2].choose(rng).unwrap();
                    p.add_term(Term::var(n, j), &ratio(c, 1));
                }
            }
            p
        })
        .collect()
}

fn substitute(t: &Term, images: &[Polynomial<Rational>]) -> Polynomial<Rational> {
    let n = t.nvars();
    let mut acc = Polynomial::constant(n, ratio(1, 1));
    for (i, &e) in t.exponents().iter().enumerate() {
        for _ in 0..e {
            acc = acc.checked_mul(&images[i]).unwrap();
        }
    }
    acc
}

/// The J-marked basis of `g(J)` for a random linear change of coordinates
/// `g`, when `g` is generic enough for one to exist.
pub fn random_basis(rng: &mut impl Rng, ideal: &MonomialIdeal) -> Option<MarkedSet<Rational>> {
    for _ in 0..4 {
        let images = linear_images(rng, ideal.ring().nvars());
        let gens: Vec<Polynomial<Rational>> = ideal.basis().iter().map(|b| substitute(b, &images)).collect();
        if let Extraction::Basis(g) = marked_basis_from_ideal(&gens, ideal).unwrap() {
            return Some(g);
        }
    }
    None
}

/// `count` marked sets over random strongly stable ideals in two or three
/// variables with generators of degree at most four: even slots hold
/// verified bases, odd slots random tails.
pub fn corpus(seed: u64, count: usize) -> Vec<MarkedSet<Rational>> {
    let mut rng = rng(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let n = rng.gen_range(2..=3);
        let ideal = random_stable_ideal(&mut rng, n, 4);
        if out.len() % 2 == 0 {
            if let Some(g) = random_basis(&mut rng, &ideal) {
                out.push(g);
            }
        } else {
            let density = rng.gen_range(0.2..0.8);
            out.push(random_marked_set(&mut rng, &ideal, density));
        }
    }
    out
}

/// `Σ h_i f_i` with random homogeneous `h_i`, of degree `d`.
pub fn random_combination(rng: &mut impl Rng, g: &MarkedSet<Rational>, d: u32) -> Polynomial<Rational> {
    let n = g.ring().nvars();
    let mut acc = Polynomial::zero(n);
    for f in g.elements() {
        let e = f.head().degree();
        if e > d || !rng.gen_bool(0.7) {
            continue;
        }
        let h = random_homogeneous(rng, n, d - e, 0.4);
        acc = acc.checked_add(&h.checked_mul(f.poly()).unwrap()).unwrap();
    }
    acc
}
