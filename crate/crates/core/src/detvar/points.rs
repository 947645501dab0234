//! Rational points of zero-dimensional ideals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::grobner::{buchberger_with_budget, GroebnerError, DEFAULT_SPAIR_BUDGET, Ideal, MonomialOrder, OrderKind};
use crate::polyalg::{Polynomial, Rational};

/// Rational points found, and whether they exhaust the (complex) zero set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointSet {
    pub points: Vec<Vec<Rational>>,
    pub complete: bool,
}

/// Enumerates the rational zeros of `ideal` in the variables `free`; every
/// other variable must already be absent from the generators. Coordinates of
/// absent variables are filled from `fixed`.
pub fn rational_points(ideal: &Ideal, free: &[usize], fixed: &[Rational]) -> Result<PointSet, GroebnerError> {
    rational_points_with_budget(ideal, free, fixed, DEFAULT_SPAIR_BUDGET)
}

/// As [`rational_points`], with an S-pair budget for each Groebner basis computed.
pub fn rational_points_with_budget(
    ideal: &Ideal,
    free: &[usize],
    fixed: &[Rational],
    budget: usize,
) -> Result<PointSet, GroebnerError> {
    let mut out = PointSet { points: Vec::new(), complete: true };
    let mut coords: Vec<Rational> = fixed.to_vec();
    solve(ideal, free, &mut coords, &mut out, budget)?;
    out.points.sort();
    Ok(out)
}

fn solve(ideal: &Ideal, free: &[usize], coords: &mut Vec<Rational>, out: &mut PointSet, budget: usize) -> Result<(), GroebnerError> {
    let n = ideal.vars().len();
    let gb = buchberger_with_budget(ideal, &MonomialOrder::grevlex(n), budget)?;
    if gb.is_unit() {
        return Ok(());
    }
    let Some((&v, rest)) = free.split_last() else {
        // no variables left and the ideal is not the unit ideal: it is zero
        out.points.push(coords.clone());
        return Ok(());
    };
    let mut priority: Vec<usize> = (0..n).filter(|&i| i != v).collect();
    priority.push(v);
    let lex = MonomialOrder::with_priority(OrderKind::Lex, priority).expect("permutation");
    let gb = buchberger_with_budget(ideal, &lex, budget)?;
    let Some(g) = gb.polynomials().iter().find(|p| p.terms().all(|(m, _)| m.support().all(|i| i == v))) else {
        // positive-dimensional in this coordinate
        out.complete = false;
        return Ok(());
    };
    let uni = univariate(g, v);
    let sq = squarefree(&uni);
    let roots = rational_roots(&sq);
    if roots.len() + 1 < sq.len() {
        out.complete = false;
    }
    for a in roots {
        let sub = Ideal::new(ideal.vars(), ideal.generators().iter().map(|f| f.substitute(v, &a)));
        coords[v] = a;
        solve(&sub, rest, coords, out, budget)?;
    }
    coords[v] = Rational::zero();
    Ok(())
}

/// Coefficients in ascending degree of a polynomial in the single variable `v`.
fn univariate(f: &Polynomial, v: usize) -> Vec<Rational> {
    let deg = f.terms().map(|(m, _)| m.exponents()[v] as usize).max().unwrap_or(0);
    let mut c = vec![Rational::zero(); deg + 1];
    for (m, a) in f.terms() {
        c[m.exponents()[v] as usize] += a;
    }
    c
}

fn trim(mut a: Vec<Rational>) -> Vec<Rational> {
    while a.len() > 1 && a.last().is_some_and(Zero::is_zero) {
        a.pop();
    }
    a
}

fn rem(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut r = a.to_vec();
    let lb = b.last().expect("nonzero divisor").clone();
    while r.len() >= b.len() && !(r.len() == 1 && r[0].is_zero()) {
        let shift = r.len() - b.len();
        let f = r.last().unwrap() / &lb;
        for (i, bi) in b.iter().enumerate() {
            r[shift + i] -= &f * bi;
        }
        r.pop();
        if r.is_empty() {
            r.push(Rational::zero());
        }
        r = trim(r);
    }
    r
}

fn div(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut r = a.to_vec();
    let lb = b.last().unwrap().clone();
    let mut q = vec![Rational::zero(); a.len().saturating_sub(b.len()) + 1];
    while r.len() >= b.len() && !(r.len() == 1 && r[0].is_zero()) {
        let shift = r.len() - b.len();
        let f = r.last().unwrap() / &lb;
        for (i, bi) in b.iter().enumerate() {
            r[shift + i] -= &f * bi;
        }
        q[shift] = f;
        r.pop();
        if r.is_empty() {
            break;
        }
    }
    trim(q)
}

fn gcd(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
    while !(b.len() == 1 && b[0].is_zero()) {
        let r = rem(&a, &b);
        a = b;
        b = r;
    }
    a
}

/// `f / gcd(f, f')`, coefficients ascending.
fn squarefree(f: &[Rational]) -> Vec<Rational> {
    let f = trim(f.to_vec());
    if f.len() <= 2 {
        return f;
    }
    let df: Vec<Rational> = f.iter().enumerate().skip(1).map(|(i, c)| c * Rational::from_integer(i.into())).collect();
    div(&f, &gcd(&f, &df))
}

fn eval(f: &[Rational], x: &Rational) -> Rational {
    f.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut out = Vec::new();
    let root = n.sqrt();
    let mut d = BigInt::one();
    while d <= root {
        if (&n % &d).is_zero() {
            out.push(d.clone());
            let e = &n / &d;
            if e != d {
                out.push(e);
            }
        }
        d += 1;
    }
    out
}

/// Distinct rational roots by the rational root test, ascending.
fn rational_roots(f: &[Rational]) -> Vec<Rational> {
    let f = trim(f.to_vec());
    if f.len() <= 1 {
        return Vec::new();
    }
    let lcm = f.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = f.iter().map(|c| (c * Rational::from_integer(lcm.clone())).to_integer()).collect();
    let low = ints.iter().position(|c| !c.is_zero()).unwrap();
    let mut roots = Vec::new();
    if low > 0 {
        roots.push(Rational::zero());
    }
    let core = &ints[low..];
    if core.len() > 1 {
        let ps = divisors(&core[0]);
        let qs = divisors(core.last().unwrap());
        let coeffs: Vec<Rational> = core.iter().cloned().map(Rational::from_integer).collect();
        for p in &ps {
            for q in &qs {
                for s in [1, -1] {
                    let x = Rational::new(p * s, q.clone());
                    if !roots.contains(&x) && eval(&coeffs, &x).is_zero() {
                        roots.push(x);
                    }
                }
            }
        }
    }
    roots.sort();
    roots
}
