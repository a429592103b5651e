//! Serializable view of a scheme ideal.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::coeff::format_rational;
use crate::ideal::MonomialIdeal;
use crate::parse::format_term;

use super::SchemeIdeal;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParameterJson {
    pub name: String,
    pub sign: String,
    pub head: String,
    pub tail: String,
    pub lambda: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialJson {
    pub coefficient: String,
    pub exponents: BTreeMap<String, u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProvenanceJson {
    pub pair: [String; 2],
    pub monomial: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchemeGeneratorJson {
    pub monomials: Vec<MonomialJson>,
    pub lambda: Vec<i64>,
    pub provenance: ProvenanceJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchemeIdealJson {
    pub pairs: String,
    pub parameters: Vec<ParameterJson>,
    pub generators: Vec<SchemeGeneratorJson>,
}

impl SchemeIdealJson {
    pub fn new(ideal: &MonomialIdeal, s: &SchemeIdeal) -> Self {
        let r = ideal.ring();
        let p = &s.params;
        let parameters = (0..p.len())
            .map(|k| ParameterJson {
                name: p.names[k].clone(),
                sign: if p.signs[k] > 0 { "+".into() } else { "-".into() },
                head: format_term(r, &p.labels[k].head),
                tail: format_term(r, &p.labels[k].tail),
                lambda: p.lambda(k),
            })
            .collect();
        let generators = s
            .generators
            .iter()
            .map(|g| SchemeGeneratorJson {
                monomials: g
                    .poly
                    .sorted_terms()
                    .into_iter()
                    .map(|(m, q)| MonomialJson {
                        coefficient: format_rational(q),
                        exponents: m
                            .factors()
                            .iter()
                            .map(|&(k, e)| (p.names[k as usize].clone(), e))
                            .collect(),
                    })
                    .collect(),
                lambda: g.lambda.clone(),
                provenance: ProvenanceJson {
                    pair: [
                        format_term(r, &g.provenance.first),
                        format_term(r, &g.provenance.second),
                    ],
                    monomial: format_term(r, &g.provenance.monomial),
                },
            })
            .collect();
        SchemeIdealJson {
            pairs: s.mode.name().into(),
            parameters,
            generators,
        }
    }
}
