use std::fmt;

use super::{buchberger, GroebnerBasis, GroebnerError, Ideal, MonomialOrder};
use crate::polyalg::Monomial;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum QuotientDim {
    Finite(u64),
    Infinite,
}

impl fmt::Display for QuotientDim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QuotientDim::Finite(n) => write!(f, "{}", n),
            QuotientDim::Infinite => f.write_str("infinite"),
        }
    }
}

/// Krull dimension of the affine zero set of `ideal`, or `-1` when it is empty.
///
/// This is the size of the largest variable subset `S` such that no leading
/// monomial of the Groebner basis is supported inside `S`.
pub fn ideal_dimension(ideal: &Ideal, order: &MonomialOrder) -> Result<i64, GroebnerError> {
    Ok(basis_dimension(&buchberger(ideal, order)?))
}

/// Dimension read off the leading monomials of a Groebner basis; `-1` for the unit ideal.
pub fn basis_dimension(gb: &GroebnerBasis) -> i64 {
    if gb.is_unit() {
        return -1;
    }
    let n = gb.vars().len();
    let masks: Vec<u64> = gb
        .leading_monomials()
        .iter()
        .map(|m| m.support().fold(0u64, |acc, i| acc | (1 << i)))
        .collect();
    assert!(n < 64, "dimension search limited to 63 variables");
    let mut best = 0;
    for subset in 0u64..(1u64 << n) {
        let size = subset.count_ones() as i64;
        if size > best && masks.iter().all(|&m| m & !subset != 0) {
            best = size;
        }
    }
    best
}

/// Dimension of `k[x]/ideal` as a vector space.
pub fn quotient_dimension(ideal: &Ideal, order: &MonomialOrder) -> Result<QuotientDim, GroebnerError> {
    let gb = buchberger(ideal, order)?;
    Ok(match standard_monomials(&gb) {
        Some(ms) => QuotientDim::Finite(ms.len() as u64),
        None => QuotientDim::Infinite,
    })
}

/// Monomials outside the leading-term ideal, or `None` when there are infinitely many.
pub fn standard_monomials(gb: &GroebnerBasis) -> Option<Vec<Monomial>> {
    let n = gb.vars().len();
    if gb.is_unit() {
        return Some(Vec::new());
    }
    let lms = gb.leading_monomials();
    let mut bounds = Vec::with_capacity(n);
    for v in 0..n {
        let pure = lms
            .iter()
            .filter(|m| m.support().all(|i| i == v))
            .map(|m| m.exponents()[v])
            .min()?;
        bounds.push(pure);
    }
    let mut out = Vec::new();
    let mut exps = vec![0u32; n];
    walk(0, &mut exps, &bounds, lms, &mut out);
    Some(out)
}

fn walk(v: usize, exps: &mut Vec<u32>, bounds: &[u32], lms: &[Monomial], out: &mut Vec<Monomial>) {
    if v == exps.len() {
        let m = Monomial::new(exps.clone());
        if !lms.iter().any(|l| l.divides(&m)) {
            out.push(m);
        }
        return;
    }
    for e in 0..bounds[v] {
        exps[v] = e;
        // prune: if the partial monomial is already divisible, every extension is too
        let partial = Monomial::new(exps.iter().enumerate().map(|(i, &x)| if i <= v { x } else { 0 }).collect());
        if lms.iter().any(|l| l.divides(&partial)) {
            break;
        }
        walk(v + 1, exps, bounds, lms, out);
    }
    exps[v] = 0;
}
