use std::cmp::Ordering;

use crate::polyalg::{Monomial, Polynomial, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrderKind {
    GrevLex,
    Lex,
    GrLex,
}

/// A monomial order together with a variable priority.
///
/// `priority[0]` is the most significant variable. The identity permutation
/// gives the usual `x0 > x1 > ...` convention.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    kind: OrderKind,
    priority: Vec<usize>,
}

impl MonomialOrder {
    pub fn new(kind: OrderKind, nvars: usize) -> Self {
        MonomialOrder { kind, priority: (0..nvars).collect() }
    }

    pub fn grevlex(nvars: usize) -> Self {
        Self::new(OrderKind::GrevLex, nvars)
    }

    pub fn lex(nvars: usize) -> Self {
        Self::new(OrderKind::Lex, nvars)
    }

    pub fn grlex(nvars: usize) -> Self {
        Self::new(OrderKind::GrLex, nvars)
    }

    /// Returns `None` unless `priority` is a permutation of `0..priority.len()`.
    pub fn with_priority(kind: OrderKind, priority: Vec<usize>) -> Option<Self> {
        let mut seen = vec![false; priority.len()];
        for &p in &priority {
            if p >= seen.len() || std::mem::replace(&mut seen[p], true) {
                return None;
            }
        }
        Some(MonomialOrder { kind, priority })
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn priority(&self) -> &[usize] {
        &self.priority
    }

    pub fn nvars(&self) -> usize {
        self.priority.len()
    }

    fn lex_cmp(&self, a: &[u32], b: &[u32]) -> Ordering {
        for &v in &self.priority {
            match a[v].cmp(&b[v]) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        Ordering::Equal
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (ea, eb) = (a.exponents(), b.exponents());
        match self.kind {
            OrderKind::Lex => self.lex_cmp(ea, eb),
            OrderKind::GrLex => a.degree().cmp(&b.degree()).then_with(|| self.lex_cmp(ea, eb)),
            OrderKind::GrevLex => a.degree().cmp(&b.degree()).then_with(|| {
                for &v in self.priority.iter().rev() {
                    if ea[v] != eb[v] {
                        return eb[v].cmp(&ea[v]);
                    }
                }
                Ordering::Equal
            }),
        }
    }

    /// Leading monomial and coefficient of `f` under this order.
    pub fn leading_term<'a>(&self, f: &'a Polynomial) -> Option<(&'a Monomial, &'a Rational)> {
        f.terms().max_by(|x, y| self.cmp(x.0, y.0))
    }
}
