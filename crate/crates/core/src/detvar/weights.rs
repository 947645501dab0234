//! Positive weight vectors making a set of polynomials weighted-homogeneous.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::polyalg::{Polynomial, Rational};

/// Finds integer weights `w_i >= 1`, one per variable of the shared list, such
/// that every polynomial is weighted-homogeneous. Variables listed in `ignore`
/// get weight zero and must not occur.
pub fn positive_weights(polys: &[Polynomial], ignore: &[usize]) -> Option<Vec<u64>> {
    let n = polys.first()?.nvars();
    let active: Vec<usize> = (0..n).filter(|i| !ignore.contains(i)).collect();
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for f in polys {
        let mut terms = f.terms();
        let Some((first, _)) = terms.next() else { continue };
        for (m, _) in terms {
            let row: Vec<Rational> = active
                .iter()
                .map(|&v| Rational::from_integer(BigInt::from(m.exponents()[v]) - BigInt::from(first.exponents()[v])))
                .collect();
            if ignore.iter().any(|&v| m.exponents()[v] != first.exponents()[v]) {
                return None;
            }
            if !rows.contains(&row) {
                rows.push(row);
            }
        }
    }
    let u = feasible_shift(&rows, active.len())?;
    // w = 1 + u, scaled to integers
    let w: Vec<Rational> = u.into_iter().map(|x| x + Rational::one()).collect();
    let lcm = w.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = w.iter().map(|x| (x * Rational::from_integer(lcm.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    let mut out = vec![0u64; n];
    for (k, &v) in active.iter().enumerate() {
        out[v] = u64::try_from(&ints[k] / &g).ok()?;
    }
    Some(out)
}

/// Solves `D (1 + u) = 0` with `u >= 0` by phase-one simplex (Bland's rule).
fn feasible_shift(d: &[Vec<Rational>], n: usize) -> Option<Vec<Rational>> {
    if d.is_empty() {
        return Some(vec![Rational::zero(); n]);
    }
    let m = d.len();
    // tableau rows: [A | I_art | b], with b >= 0
    let width = n + m + 1;
    let mut t: Vec<Vec<Rational>> = Vec::with_capacity(m + 1);
    for (i, row) in d.iter().enumerate() {
        let mut b: Rational = -row.iter().fold(Rational::zero(), |acc, x| acc + x);
        let mut r: Vec<Rational> = row.clone();
        let flip = b.is_negative();
        if flip {
            r.iter_mut().for_each(|x| *x = -x.clone());
            b = -b;
        }
        r.extend((0..m).map(|k| if k == i { Rational::one() } else { Rational::zero() }));
        r.push(b);
        t.push(r);
    }
    // objective: minimise the sum of artificials, expressed in reduced costs
    let mut obj = vec![Rational::zero(); width];
    for row in &t {
        for j in 0..n {
            obj[j] -= &row[j];
        }
        obj[width - 1] -= &row[width - 1];
    }
    t.push(obj);
    let mut basis: Vec<usize> = (n..n + m).collect();
    loop {
        let cost = &t[m];
        let Some(enter) = (0..n + m).find(|&j| cost[j].is_negative()) else { break };
        let mut leave: Option<(usize, Rational)> = None;
        for i in 0..m {
            if t[i][enter].is_positive() {
                let ratio = &t[i][width - 1] / &t[i][enter];
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        let (pr, _) = leave?;
        let piv = t[pr][enter].clone();
        t[pr].iter_mut().for_each(|x| *x /= &piv);
        let prow = t[pr].clone();
        for (i, row) in t.iter_mut().enumerate() {
            if i != pr && !row[enter].is_zero() {
                let f = row[enter].clone();
                for j in 0..width {
                    row[j] -= &f * &prow[j];
                }
            }
        }
        basis[pr] = enter;
    }
    if !t[m][width - 1].is_zero() {
        return None;
    }
    let mut u = vec![Rational::zero(); n];
    for (i, &b) in basis.iter().enumerate() {
        if b < n {
            u[b] = t[i][width - 1].clone();
        }
    }
    Some(u)
}
