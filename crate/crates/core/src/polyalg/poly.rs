use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use super::{Monomial, PolyError, Rational};

/// Shared, ordered variable list.
pub type Vars = Arc<[String]>;

/// Sparse polynomial with exact rational coefficients.
///
/// No zero coefficient is ever stored; the zero polynomial has no terms.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    vars: Vars,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(vars: &Vars) -> Self {
        Polynomial { vars: vars.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(vars: &Vars, c: Rational) -> Self {
        let mut p = Self::zero(vars);
        p.add_term(Monomial::one(vars.len()), c);
        p
    }

    pub fn one(vars: &Vars) -> Self {
        Self::constant(vars, Rational::one())
    }

    pub fn var(vars: &Vars, index: usize) -> Self {
        Self::monomial(vars, Monomial::var(vars.len(), index), Rational::one())
    }

    pub fn monomial(vars: &Vars, m: Monomial, c: Rational) -> Self {
        assert_eq!(m.nvars(), vars.len(), "monomial arity does not match variable list");
        let mut p = Self::zero(vars);
        p.add_term(m, c);
        p
    }

    pub fn from_terms(vars: &Vars, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = Self::zero(vars);
        for (m, c) in terms {
            assert_eq!(m.nvars(), vars.len(), "monomial arity does not match variable list");
            p.add_term(m, c);
        }
        p
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in descending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Leading term under the storage (graded reverse lexicographic) order.
    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    /// Total degree, `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            Some(d) => degs.all(|e| e == d),
            None => true,
        }
    }

    pub fn same_vars(&self, other: &Polynomial) -> bool {
        Arc::ptr_eq(&self.vars, &other.vars) || self.vars == other.vars
    }

    fn check_vars(&self, other: &Polynomial) {
        assert!(self.same_vars(other), "polynomials over different variable lists");
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        Polynomial {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    /// Multiplies by the term `c * m`.
    pub fn mul_term(&self, m: &Monomial, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        Polynomial {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(k, a)| (k.mul(m), a * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Self::one(&self.vars);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Divides so the leading coefficient becomes one.
    pub fn monic(&self) -> Polynomial {
        match self.leading_term() {
            Some((_, c)) => self.scale(&c.recip()),
            None => self.clone(),
        }
    }

    pub fn evaluate(&self, point: &[Rational]) -> Result<Rational, PolyError> {
        if point.len() != self.nvars() {
            return Err(PolyError::LengthMismatch { expected: self.nvars(), got: point.len() });
        }
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (x, &e) in point.iter().zip(m.exponents()) {
                if e > 0 {
                    v *= num_traits::pow(x.clone(), e as usize);
                }
            }
            acc += v;
        }
        Ok(acc)
    }

    pub fn partial_derivative(&self, var: usize) -> Result<Polynomial, PolyError> {
        if var >= self.nvars() {
            return Err(PolyError::VarIndex { index: var, count: self.nvars() });
        }
        let mut out = Self::zero(&self.vars);
        for (m, c) in &self.terms {
            let e = m.exponents()[var];
            if e == 0 {
                continue;
            }
            let mut exps = m.exponents().to_vec();
            exps[var] -= 1;
            out.add_term(Monomial::new(exps), c * Rational::from_integer(e.into()));
        }
        Ok(out)
    }

    /// Substitutes `value` for variable `var`; the variable list is unchanged.
    pub fn substitute(&self, var: usize, value: &Rational) -> Polynomial {
        let mut out = Self::zero(&self.vars);
        for (m, c) in &self.terms {
            let mut exps = m.exponents().to_vec();
            let e = std::mem::replace(&mut exps[var], 0);
            out.add_term(Monomial::new(exps), c * num_traits::pow(value.clone(), e as usize));
        }
        out
    }

    /// Replaces `x_var` by `x_var + shift`.
    pub fn translate(&self, var: usize, shift: &Rational) -> Polynomial {
        if shift.is_zero() {
            return self.clone();
        }
        let lin = &Self::var(&self.vars, var) + &Self::constant(&self.vars, shift.clone());
        let mut out = Self::zero(&self.vars);
        for (m, c) in &self.terms {
            let mut exps = m.exponents().to_vec();
            let e = std::mem::replace(&mut exps[var], 0);
            let rest = Self::monomial(&self.vars, Monomial::new(exps), c.clone());
            out = &out + &(&rest * &lin.pow(e));
        }
        out
    }

    /// Rewrites the polynomial over `vars`, mapping variable `i` to `map[i]`.
    /// Variables mapped to `None` must not occur.
    pub fn remap(&self, vars: &Vars, map: &[Option<usize>]) -> Polynomial {
        let mut out = Self::zero(vars);
        for (m, c) in &self.terms {
            let mut exps = vec![0; vars.len()];
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    let j = map[i].expect("remap drops a variable that occurs");
                    exps[j] += e;
                }
            }
            out.add_term(Monomial::new(exps), c.clone());
        }
        out
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    pub fn exact_div(&self, d: &Polynomial) -> Option<Polynomial> {
        self.check_vars(d);
        let (dm, dc) = d.leading_term()?;
        let mut rem = self.clone();
        let mut q = Self::zero(&self.vars);
        while let Some((m, c)) = rem.leading_term() {
            let qm = dm.quotient_of(m)?;
            let qc = c / dc;
            rem = &rem - &d.mul_term(&qm, &qc);
            q.add_term(qm, qc);
        }
        Some(q)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let a = c.abs();
            if m.is_one() {
                write!(f, "{}", a)?;
            } else {
                if !a.is_one() {
                    write!(f, "{}*", a)?;
                }
                m.fmt_with(&self.vars, f)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({})", self)
    }
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.check_vars(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.check_vars(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.check_vars(rhs);
        let mut out = Polynomial::zero(&self.vars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-Rational::one())
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::{parse_polynomial, rat};

    fn vars(names: &[&str]) -> Vars {
        names.iter().map(|s| s.to_string()).collect()
    }

    fn p(s: &str, v: &Vars) -> Polynomial {
        parse_polynomial(s, v).unwrap()
    }

    #[test]
    fn evaluate_examples() {
        let v = vars(&["x0", "x1", "x2", "x3", "x4"]);
        let f = p("x0*x2 - x1^2", &v);
        let e = |pt: [i64; 5]| f.evaluate(&pt.map(rat)).unwrap();
        assert_eq!(e([1, 0, 0, 0, 0]), rat(0));
        assert_eq!(e([0, 1, 0, 0, 0]), rat(-1));
        let g = p("3*x0^2 + x4 - 7", &v);
        assert_eq!(g.evaluate(&[0, 0, 0, 0, 0].map(rat)).unwrap(), rat(-7));
        assert_eq!(
            f.evaluate(&[rat(1)]),
            Err(PolyError::LengthMismatch { expected: 5, got: 1 })
        );
    }

    #[test]
    fn partial_derivative_examples() {
        let v = vars(&["x0", "x1", "x2"]);
        assert_eq!(p("x1^2", &v).partial_derivative(1).unwrap(), p("2*x1", &v));
        assert!(p("17", &v).partial_derivative(0).unwrap().is_zero());
        assert_eq!(p("x0*x2 - x1^2", &v).partial_derivative(0).unwrap(), p("x2", &v));
        assert!(matches!(
            p("x0", &v).partial_derivative(3),
            Err(PolyError::VarIndex { index: 3, count: 3 })
        ));
    }

    #[test]
    fn display_is_descending_grevlex() {
        let v = vars(&["x0", "x1", "x2"]);
        assert_eq!(p("x0*x2 - x1^2", &v).to_string(), "-x1^2 + x0*x2");
        assert_eq!(p("1/2*x0 - 3", &v).to_string(), "1/2*x0 - 3");
        assert_eq!(p("0", &v).to_string(), "0");
    }

    #[test]
    fn exact_division() {
        let v = vars(&["x", "y"]);
        let f = p("x^2 - y^2", &v);
        assert_eq!(f.exact_div(&p("x - y", &v)), Some(p("x + y", &v)));
        assert_eq!(f.exact_div(&p("x + 2", &v)), None);
        assert!(p("0", &v).exact_div(&p("x", &v)).unwrap().is_zero());
    }

    #[test]
    fn substitute_and_translate() {
        let v = vars(&["x", "y"]);
        let f = p("x^2*y + y", &v);
        assert_eq!(f.substitute(0, &rat(2)), p("5*y", &v));
        assert_eq!(p("x^2", &v).translate(0, &rat(1)), p("x^2 + 2*x + 1", &v));
    }

    #[test]
    fn pow_and_homogeneity() {
        let v = vars(&["x", "y"]);
        assert_eq!(p("x + y", &v).pow(3), p("x^3 + 3*x^2*y + 3*x*y^2 + y^3", &v));
        assert!(p("x*y - y^2", &v).is_homogeneous());
        assert!(!p("x*y - y", &v).is_homogeneous());
        assert_eq!(p("x*y - y", &v).total_degree(), Some(2));
        assert_eq!(p("0", &v).total_degree(), None);
    }
}
