//! Oracles shared by the Groebner and acceptance suites.
#![allow(dead_code)]

use detsing::grobner::{normal_form, s_polynomial, GroebnerBasis, Ideal};
use detsing::polyalg::{Monomial, Polynomial, Rational};
use num_traits::Zero;

/// Buchberger's criterion: every S-polynomial reduces to zero.
pub fn all_spolys_reduce(gb: &GroebnerBasis) -> bool {
    let g = gb.polynomials();
    (0..g.len()).all(|i| (i + 1..g.len()).all(|j| normal_form(&s_polynomial(&g[i], &g[j], gb.order()), gb).is_zero()))
}

pub fn monomials_up_to(n: usize, deg: u32) -> Vec<Monomial> {
    fn go(n: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if cur.len() == n {
            out.push(Monomial::new(cur.clone()));
            return;
        }
        for e in 0..=left {
            cur.push(e);
            go(n, left - e, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, deg, &mut Vec::new(), &mut out);
    out
}

pub fn rank(mut rows: Vec<Vec<Rational>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        let pivot = rows[r][c].clone();
        let prow = rows[r].clone();
        for row in rows.iter_mut().skip(r + 1) {
            if row[c].is_zero() {
                continue;
            }
            let f = &row[c] / &pivot;
            for k in c..ncols {
                row[k] -= &f * &prow[k];
            }
        }
        r += 1;
    }
    r
}

/// `dim R_{<=D} - rank(span of m*g with deg <= D)` for two large truncation
/// degrees, which must agree. This counts solutions at infinity too, so it is
/// only used on ideals whose leading forms have no common projective zero.
pub fn macaulay_quotient_dim(i: &Ideal) -> u64 {
    let n = i.vars().len();
    let maxdeg = i.generators().iter().filter_map(Polynomial::total_degree).max().unwrap_or(0);
    let mut prev = None;
    for d in maxdeg + 5..maxdeg + 7 {
        let cols = monomials_up_to(n, d);
        let index = |m: &Monomial| cols.iter().position(|c| c == m).unwrap();
        let mut rows = Vec::new();
        for g in i.generators() {
            let gd = g.total_degree().unwrap();
            for m in monomials_up_to(n, d - gd) {
                let mut row = vec![Rational::zero(); cols.len()];
                for (tm, tc) in g.terms() {
                    row[index(&tm.mul(&m))] = tc.clone();
                }
                rows.push(row);
            }
        }
        let q = (cols.len() - rank(rows)) as u64;
        if prev == Some(q) {
            return q;
        }
        prev = Some(q);
    }
    panic!("truncated quotient dimension not stable at the chosen degrees");
}
