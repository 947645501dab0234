//! Groebner bases over the rationals.
//!
//! Provides Buchberger's algorithm, normal forms (ideal membership), the Krull
//! dimension of an affine zero set and the vector-space dimension of a
//! zero-dimensional quotient algebra.

mod buchberger;
mod dimension;
mod order;

pub use buchberger::{buchberger, buchberger_with_budget, s_polynomial, DEFAULT_SPAIR_BUDGET};
pub use dimension::{basis_dimension, ideal_dimension, quotient_dimension, standard_monomials, QuotientDim};
pub use order::{MonomialOrder, OrderKind};

use thiserror::Error;

use crate::polyalg::{Monomial, Polynomial, Vars};
use buchberger::{reduce, Sorted};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroebnerError {
    #[error("S-pair budget of {limit} exceeded")]
    SPairBudget { limit: usize },
}

/// Ideal of a polynomial ring, given by generators over one variable list.
///
/// Zero generators are dropped, so the zero ideal has no generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ideal {
    vars: Vars,
    generators: Vec<Polynomial>,
}

impl Ideal {
    pub fn new(vars: &Vars, generators: impl IntoIterator<Item = Polynomial>) -> Self {
        let generators: Vec<Polynomial> = generators.into_iter().filter(|g| !g.is_zero()).collect();
        assert!(generators.iter().all(|g| g.vars() == vars), "generators over different variable lists");
        Ideal { vars: vars.clone(), generators }
    }

    pub fn zero(vars: &Vars) -> Self {
        Ideal { vars: vars.clone(), generators: Vec::new() }
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    /// Ideal generated by the union of both generator lists.
    pub fn sum(&self, other: &Ideal) -> Ideal {
        Ideal::new(&self.vars, self.generators.iter().chain(&other.generators).cloned())
    }
}

/// Reduced, monic Groebner basis sorted by increasing leading monomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    order: MonomialOrder,
    vars: Vars,
    basis: Vec<Polynomial>,
    leading: Vec<Monomial>,
    sorted: Vec<Sorted>,
}

impl GroebnerBasis {
    fn from_sorted(vars: &Vars, order: &MonomialOrder, sorted: Vec<Sorted>) -> Self {
        GroebnerBasis {
            order: order.clone(),
            vars: vars.clone(),
            basis: sorted.iter().map(|s| s.to_poly(vars)).collect(),
            leading: sorted.iter().map(|s| s.lm().clone()).collect(),
            sorted,
        }
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn polynomials(&self) -> &[Polynomial] {
        &self.basis
    }

    pub fn leading_monomials(&self) -> &[Monomial] {
        &self.leading
    }

    /// True when the ideal is the whole ring.
    pub fn is_unit(&self) -> bool {
        self.leading.iter().any(Monomial::is_one)
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        normal_form(f, self).is_zero()
    }
}

/// Remainder of complete multivariate division of `f` by `g`.
pub fn normal_form(f: &Polynomial, g: &GroebnerBasis) -> Polynomial {
    assert!(f.vars() == g.vars(), "polynomial and basis over different variable lists");
    reduce(Sorted::from_poly(f, &g.order), &g.sorted, &g.order).to_poly(&g.vars)
}
