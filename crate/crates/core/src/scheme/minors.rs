//! The coefficient matrices `A_m` of the generic marked set and the ideal
//! generated by their minors of order `dim J_m + 1`.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::coeff::Coefficient;
use crate::criterion::is_v_multiple;
use crate::error::{Error, Result};
use crate::param::ParamPoly;
use crate::reduction::{w_elements, WElement};
use crate::term::{terms_of_degree, Term};

use super::GenericMarkedSet;

/// Rows are all of `W_m`, columns all terms of degree `m` (descending).
#[derive(Clone, Debug)]
pub struct MatrixA {
    pub degree: u32,
    pub rows: Vec<WElement>,
    pub columns: Vec<Term>,
    pub entries: Vec<Vec<ParamPoly>>,
}

pub fn matrix_a(generic: &GenericMarkedSet, m: u32) -> MatrixA {
    let ideal = generic.ideal();
    let columns = terms_of_degree(ideal.ring().nvars(), m);
    let index: HashMap<&Term, usize> = columns.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let rows = w_elements(ideal, m);
    let entries = rows
        .iter()
        .map(|w| {
            let mut row = vec![ParamPoly::default(); columns.len()];
            for (t, c) in generic.set.get(w.generator).poly().iter() {
                row[index[&t.mul(&w.multiplier)]] = c.clone();
            }
            row
        })
        .collect();
    MatrixA {
        degree: m,
        rows,
        columns,
        entries,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MinorMode {
    /// Minors bordering the unitriangular block of `V_m` rows and `J_m` columns.
    Bordered,
    /// Every minor of order `dim J_m + 1`.
    Full,
}

#[derive(Clone, Copy, Debug)]
pub struct MinorOptions {
    pub mode: MinorMode,
    /// Largest minor order allowed.
    pub max_order: usize,
    /// Largest number of minors per degree in full mode.
    pub max_minors: u64,
}

impl Default for MinorOptions {
    fn default() -> Self {
        MinorOptions {
            mode: MinorMode::Bordered,
            max_order: 24,
            max_minors: 200_000,
        }
    }
}

/// Determinant by expansion along rows, memoized on the set of used columns.
pub fn determinant(m: &[Vec<ParamPoly>]) -> ParamPoly {
    let k = m.len();
    assert!(k <= 32, "determinant order too large");
    let mut layer: HashMap<u32, ParamPoly> = HashMap::new();
    layer.insert(0, ParamPoly::constant(crate::coeff::rat(1)));
    for row in m {
        let mut next: HashMap<u32, ParamPoly> = HashMap::new();
        for (mask, acc) in &layer {
            for (j, e) in row.iter().enumerate() {
                if e.is_empty() || mask & (1 << j) != 0 {
                    continue;
                }
                let inversions = (mask >> (j + 1)).count_ones();
                let mut term = acc.mul_ref(e);
                if inversions % 2 == 1 {
                    term = term.neg_ref();
                }
                let slot = next.entry(mask | (1 << j)).or_default();
                slot.add_assign_ref(&term);
            }
        }
        next.retain(|_, p| !p.is_empty());
        layer = next;
        if layer.is_empty() {
            return ParamPoly::default();
        }
    }
    layer.remove(&((1u64 << k) as u32).wrapping_sub(1)).unwrap_or_default()
}

fn submatrix(a: &MatrixA, rows: &[usize], cols: &[usize]) -> Vec<Vec<ParamPoly>> {
    rows.iter()
        .map(|&r| cols.iter().map(|&c| a.entries[r][c].clone()).collect())
        .collect()
}

fn choose(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// A nonzero minor with the rows and columns it uses.
#[derive(Clone, Debug)]
pub struct Minor {
    pub degree: u32,
    pub rows: Vec<usize>,
    pub columns: Vec<usize>,
    pub poly: ParamPoly,
}

/// Nonzero minors of order `dim J_m + 1` of `A_m` for each requested degree.
pub fn minors_ideal(
    generic: &GenericMarkedSet,
    degrees: impl IntoIterator<Item = u32>,
    options: MinorOptions,
) -> Result<Vec<Minor>> {
    let ideal = generic.ideal();
    let mut out = Vec::new();
    for m in degrees {
        if m < ideal.initial_degree() {
            continue;
        }
        let a = matrix_a(generic, m);
        let dim_j = ideal.dim_in_degree(m);
        let order = dim_j + 1;
        if order > a.rows.len() || order > a.columns.len() {
            continue;
        }
        if order > options.max_order {
            return Err(Error::SizeLimit(format!(
                "minors of order {order} in degree {m} exceed the limit {}",
                options.max_order
            )));
        }
        let j_cols: Vec<usize> = (0..a.columns.len()).filter(|&c| ideal.contains(&a.columns[c])).collect();
        let n_cols: Vec<usize> = (0..a.columns.len()).filter(|&c| !ideal.contains(&a.columns[c])).collect();
        let tasks: Vec<(Vec<usize>, Vec<usize>)> = match options.mode {
            MinorMode::Bordered => {
                let basis = ideal.basis();
                let (v_rows, extra): (Vec<usize>, Vec<usize>) = (0..a.rows.len())
                    .partition(|&r| is_v_multiple(&a.rows[r].multiplier, &basis[a.rows[r].generator]));
                debug_assert_eq!(v_rows.len(), dim_j);
                let mut t = Vec::new();
                for &r in &extra {
                    for &c in &n_cols {
                        let mut rows = v_rows.clone();
                        rows.push(r);
                        let mut cols = j_cols.clone();
                        cols.push(c);
                        t.push((rows, cols));
                    }
                }
                t
            }
            MinorMode::Full => {
                let count = choose(a.rows.len() as u64, order as u64)
                    .saturating_mul(choose(a.columns.len() as u64, order as u64));
                if count > options.max_minors {
                    return Err(Error::SizeLimit(format!(
                        "{count} minors in degree {m} exceed the limit {}",
                        options.max_minors
                    )));
                }
                let rs = combinations(a.rows.len(), order);
                let cs = combinations(a.columns.len(), order);
                rs.iter()
                    .flat_map(|r| cs.iter().map(move |c| (r.clone(), c.clone())))
                    .collect()
            }
        };
        let minors: Vec<Minor> = tasks
            .into_par_iter()
            .map(|(rows, cols)| {
                let poly = determinant(&submatrix(&a, &rows, &cols));
                Minor {
                    degree: m,
                    rows,
                    columns: cols,
                    poly,
                }
            })
            .filter(|mi| !mi.poly.is_empty())
            .collect();
        out.extend(minors);
    }
    Ok(out)
}
