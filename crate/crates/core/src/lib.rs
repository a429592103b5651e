//! Marked bases over strongly stable monomial ideals.
//!
//! A J-marked set attaches to every minimal generator of a strongly stable
//! monomial ideal `J` a homogeneous polynomial whose other terms avoid `J`.
//! This crate computes normal forms against such sets, decides whether they
//! are bases by a Buchberger-like criterion, lifts syzygies, and builds the
//! equations of the parameter scheme of all J-marked bases.

pub mod coeff;
pub mod criterion;
pub mod error;
pub mod groebner;
pub mod ideal;
pub mod input;
pub mod linalg;
pub mod marked;
pub mod param;
pub mod parse;
pub mod poly;
pub mod reduction;
pub mod ring;
pub mod scheme;
pub mod term;

pub use coeff::{Coefficient, Rational};
pub use criterion::{
    basis_check_by_rank, buchberger_check, ideal_membership, lift_syzygy, minimal_pairs,
    s_polynomial, BasisCheck, PairMode, RankCheck, SPolynomial, Syzygy,
};
pub use error::{Error, Result};
pub use input::{parse_input, InputFile};
pub use ideal::{GeneratorPair, MonomialIdeal, SousEscalierSlice, StabilityViolation};
pub use marked::{MarkedPolynomial, MarkedSet, Violation};
pub use param::{ParamMonomial, ParamPoly};
pub use poly::Polynomial;
pub use reduction::{
    cmp_vm, cmp_wm, ReductionCertificate, ReductionEntry, ReductionList, Reducer, WElement,
};
pub use ring::Ring;
pub use term::{Term, TermOrder};
