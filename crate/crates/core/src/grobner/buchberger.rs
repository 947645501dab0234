use std::cmp::Ordering;
use std::collections::BTreeSet;

use num_traits::{One, Zero};

use super::{GroebnerBasis, GroebnerError, Ideal, MonomialOrder};
use crate::polyalg::{Monomial, Polynomial, Rational, Vars};

/// Default cap on the number of S-pairs a single run may process.
pub const DEFAULT_SPAIR_BUDGET: usize = 100_000;

/// Terms sorted in descending order under a fixed [`MonomialOrder`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Sorted(Vec<(Monomial, Rational)>);

impl Sorted {
    pub(crate) fn from_poly(f: &Polynomial, order: &MonomialOrder) -> Self {
        let mut t: Vec<(Monomial, Rational)> = f.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
        t.sort_by(|a, b| order.cmp(&b.0, &a.0));
        Sorted(t)
    }

    pub(crate) fn to_poly(&self, vars: &Vars) -> Polynomial {
        Polynomial::from_terms(vars, self.0.iter().cloned())
    }

    pub(crate) fn lm(&self) -> &Monomial {
        &self.0[0].0
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn monic(mut self) -> Self {
        if let Some((_, c)) = self.0.first() {
            let inv = c.recip();
            for (_, a) in &mut self.0 {
                *a *= &inv;
            }
        }
        self
    }

    /// `self - c * m * g`, merging in order.
    fn sub_scaled(&self, c: &Rational, m: &Monomial, g: &Sorted, order: &MonomialOrder) -> Sorted {
        let mut out = Vec::with_capacity(self.0.len() + g.0.len());
        let mut a = self.0.iter().peekable();
        let mut b = g.0.iter().map(|(gm, gc)| (gm.mul(m), gc * c)).peekable();
        loop {
            let ord = match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => Ordering::Greater,
                (None, Some(_)) => Ordering::Less,
                (Some(x), Some(y)) => order.cmp(&x.0, &y.0),
            };
            match ord {
                Ordering::Greater => out.push(a.next().unwrap().clone()),
                Ordering::Less => {
                    let (m, c) = b.next().unwrap();
                    out.push((m, -c));
                }
                Ordering::Equal => {
                    let (m, c1) = a.next().unwrap().clone();
                    let (_, c2) = b.next().unwrap();
                    let d = c1 - c2;
                    if !d.is_zero() {
                        out.push((m, d));
                    }
                }
            }
        }
        Sorted(out)
    }
}

/// Full reduction of `f` by `basis`; the first divisor in enumeration order is used.
pub(crate) fn reduce(f: Sorted, basis: &[Sorted], order: &MonomialOrder) -> Sorted {
    let mut p = f;
    let mut rem: Vec<(Monomial, Rational)> = Vec::new();
    while !p.is_zero() {
        let (lm, lc) = p.0[0].clone();
        match basis.iter().find(|g| g.lm().divides(&lm)) {
            Some(g) => {
                let q = g.lm().quotient_of(&lm).expect("divisor checked");
                let c = &lc / &g.0[0].1;
                p = p.sub_scaled(&c, &q, g, order);
            }
            None => {
                rem.push((lm, lc));
                p.0.remove(0);
            }
        }
    }
    Sorted(rem)
}

fn s_poly(f: &Sorted, g: &Sorted, order: &MonomialOrder) -> Sorted {
    let l = f.lm().lcm(g.lm());
    let uf = f.lm().quotient_of(&l).unwrap();
    let ug = g.lm().quotient_of(&l).unwrap();
    let zero = Sorted(Vec::new());
    let a = zero.sub_scaled(&(-f.0[0].1.recip()), &uf, f, order);
    a.sub_scaled(&g.0[0].1.recip(), &ug, g, order)
}

/// S-polynomial of two nonzero polynomials under `order`.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial, order: &MonomialOrder) -> Polynomial {
    assert!(!f.is_zero() && !g.is_zero(), "S-polynomial of zero");
    s_poly(&Sorted::from_poly(f, order), &Sorted::from_poly(g, order), order).to_poly(f.vars())
}

/// Reduced Groebner basis with the default S-pair budget.
pub fn buchberger(ideal: &Ideal, order: &MonomialOrder) -> Result<GroebnerBasis, GroebnerError> {
    buchberger_with_budget(ideal, order, DEFAULT_SPAIR_BUDGET)
}

/// Reduced Groebner basis.
///
/// Pairs are processed by the normal strategy: smallest total degree of the
/// lcm of leading monomials first, ties broken by creation order. Pairs with
/// coprime leading monomials are skipped.
pub fn buchberger_with_budget(
    ideal: &Ideal,
    order: &MonomialOrder,
    budget: usize,
) -> Result<GroebnerBasis, GroebnerError> {
    assert_eq!(order.nvars(), ideal.vars().len(), "order arity does not match ideal");
    let mut g: Vec<Sorted> = Vec::new();
    for f in ideal.generators() {
        let r = reduce(Sorted::from_poly(f, order), &g, order);
        if !r.is_zero() {
            g.push(r.monic());
        }
    }
    // (lcm degree, sequence number, i, j)
    let mut pairs: BTreeSet<(u32, u64, usize, usize)> = BTreeSet::new();
    let mut seq = 0u64;
    let mut add_pairs = |g: &[Sorted], j: usize, pairs: &mut BTreeSet<_>| {
        for i in 0..j {
            if g[i].lm().is_coprime(g[j].lm()) {
                continue;
            }
            pairs.insert((g[i].lm().lcm(g[j].lm()).degree(), seq, i, j));
            seq += 1;
        }
    };
    for j in 0..g.len() {
        add_pairs(&g, j, &mut pairs);
    }
    let mut processed = 0usize;
    while let Some((_, _, i, j)) = pairs.pop_first() {
        processed += 1;
        if processed > budget {
            return Err(GroebnerError::SPairBudget { limit: budget });
        }
        let h = reduce(s_poly(&g[i], &g[j], order), &g, order);
        if h.is_zero() {
            continue;
        }
        let h = h.monic();
        if h.lm().is_one() {
            g = vec![h];
            pairs.clear();
            break;
        }
        g.push(h);
        add_pairs(&g, g.len() - 1, &mut pairs);
    }
    Ok(GroebnerBasis::from_sorted(ideal.vars(), order, interreduce(g, order)))
}

fn interreduce(g: Vec<Sorted>, order: &MonomialOrder) -> Vec<Sorted> {
    // minimal basis: drop elements whose leading monomial is divisible by another's
    let mut minimal: Vec<Sorted> = Vec::new();
    for (k, f) in g.iter().enumerate() {
        let redundant = g.iter().enumerate().any(|(l, h)| {
            l != k && h.lm().divides(f.lm()) && (h.lm() != f.lm() || l < k)
        });
        if !redundant {
            minimal.push(f.clone());
        }
    }
    let mut out = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others: Vec<Sorted> =
            minimal.iter().enumerate().filter(|(l, _)| *l != k).map(|(_, h)| h.clone()).collect();
        let r = reduce(minimal[k].clone(), &others, order).monic();
        debug_assert!(!r.is_zero() && r.0[0].1.is_one());
        out.push(r);
    }
    out.sort_by(|a, b| order.cmp(a.lm(), b.lm()));
    out
}
