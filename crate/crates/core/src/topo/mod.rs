//! Euler characteristics of CW complexes, sphere bouquets and determinantal
//! Milnor fibres, plus the polar-multiplicity identities for codimension-2
//! germs of dimension 2 and 3.

use thiserror::Error;

use crate::detvar::{expected_codimension, is_smoothable};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TopoError {
    #[error("unsupported: {0}")]
    Unsupported(String),
}

/// Cell counts indexed by dimension.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CWDescriptor {
    pub cell_counts: Vec<u64>,
}

pub fn chi_cw(c: &CWDescriptor) -> i64 {
    c.cell_counts
        .iter()
        .enumerate()
        .map(|(i, &n)| if i % 2 == 0 { n as i64 } else { -(n as i64) })
        .sum()
}

/// Wedge of spheres; an empty bouquet is a point.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BouquetDescriptor {
    pub sphere_dimensions: Vec<u32>,
}

impl BouquetDescriptor {
    pub fn new(sphere_dimensions: Vec<u32>) -> Self {
        assert!(sphere_dimensions.iter().all(|&k| k > 0), "sphere dimensions are positive");
        BouquetDescriptor { sphere_dimensions }
    }

    /// `count` spheres of dimension `k`.
    pub fn spheres(k: u32, count: usize) -> Self {
        Self::new(vec![k; count])
    }

    /// One 0-cell, one k-cell per sphere.
    pub fn cw_model(&self) -> CWDescriptor {
        let top = self.sphere_dimensions.iter().copied().max().unwrap_or(0) as usize;
        let mut cells = vec![0u64; top + 1];
        cells[0] = 1;
        for &k in &self.sphere_dimensions {
            cells[k as usize] += 1;
        }
        CWDescriptor { cell_counts: cells }
    }
}

pub fn chi_bouquet(b: &BouquetDescriptor) -> i64 {
    1 + b.sphere_dimensions.iter().map(|&k| if k % 2 == 0 { 1 } else { -1 }).sum::<i64>()
}

/// Invariants of a determinantal germ defined by an `n x p` matrix with rank
/// bound `t` in `C^r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MilnorData {
    pub d: usize,
    pub mu: u64,
    pub b2: Option<u64>,
    /// Polar multiplicity `m_d`.
    pub m_d: Option<u64>,
    /// Milnor number of the generic hyperplane slice.
    pub mu_slice: Option<u64>,
    pub n: usize,
    pub p: usize,
    pub t: usize,
    pub r: usize,
}

impl MilnorData {
    /// Codimension-2 germ cut out by the maximal minors of a `2 x 3` matrix in `C^(d+2)`.
    pub fn codim2(d: usize, mu: u64) -> Self {
        MilnorData { d, mu, b2: None, m_d: None, mu_slice: None, n: 2, p: 3, t: 2, r: d + 2 }
    }

    pub fn with_polar(mut self, m_d: u64, mu_slice: u64) -> Self {
        self.m_d = Some(m_d);
        self.mu_slice = Some(mu_slice);
        self
    }

    pub fn with_b2(mut self, b2: u64) -> Self {
        self.b2 = Some(b2);
        self
    }

    fn is_codim2_smoothable(&self) -> bool {
        self.t <= self.n.min(self.p)
            && expected_codimension(self.n, self.p, self.t) == 2
            && self.r == self.d + 2
            && is_smoothable(self.n, self.p, self.t, self.r)
    }
}

/// `chi` of the smoothing from its bouquet type: `1 + mu` for surfaces,
/// `2 - mu` for threefolds.
pub fn chi_smoothing(m: &MilnorData) -> Result<i64, TopoError> {
    if m.d != 2 && m.d != 3 {
        return Err(TopoError::Unsupported(format!("no bouquet formula in dimension {}", m.d)));
    }
    if !m.is_codim2_smoothable() {
        return Err(TopoError::Unsupported("germ is not a smoothable codimension-2 germ".into()));
    }
    if 2 * m.n.max(m.p) <= m.r {
        return Err(TopoError::Unsupported(format!("2p > r fails for p = {}, r = {}", m.n.max(m.p), m.r)));
    }
    let mu = m.mu as i64;
    Ok(if m.d == 2 { 1 + mu } else { 2 - mu })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LeGreuel {
    Holds,
    Violated { lhs: i64, rhs: i64 },
    InsufficientData,
}

/// Checks `m_2 = mu_slice + mu` (d = 2) or `m_3 = mu_slice + mu + b2` (d = 3).
/// `b2` defaults to 1 only for smoothable codimension-2 threefolds.
pub fn le_greuel_check(m: &MilnorData) -> LeGreuel {
    let (Some(m_d), Some(slice)) = (m.m_d, m.mu_slice) else {
        return LeGreuel::InsufficientData;
    };
    let b2 = match m.d {
        2 => 0,
        3 => match m.b2 {
            Some(b) => b,
            None if m.is_codim2_smoothable() => 1,
            None => return LeGreuel::InsufficientData,
        },
        _ => return LeGreuel::InsufficientData,
    };
    let (lhs, rhs) = (m_d as i64, (slice + m.mu + b2) as i64);
    if lhs == rhs {
        LeGreuel::Holds
    } else {
        LeGreuel::Violated { lhs, rhs }
    }
}

/// `chi(X) = chi(X') + l` for `X'` the complement of `l` points.
pub fn chi_additive(total_chi_x_prime: i64, l: u64) -> i64 {
    total_chi_x_prime + l as i64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cw_counts() {
        assert_eq!(chi_cw(&CWDescriptor { cell_counts: vec![1, 0, 1] }), 2);
        assert_eq!(chi_cw(&CWDescriptor { cell_counts: vec![1] }), 1);
        // projective cone over a rational curve: the vertex, plus the curve's
        // cells each thickened by a complex line
        let curve = [1u64, 0, 1];
        let mut cells = vec![1u64, 0, 0, 0, 0];
        for (i, c) in curve.iter().enumerate() {
            cells[i + 2] += c;
        }
        assert_eq!(chi_cw(&CWDescriptor { cell_counts: cells }), 3);
    }

    #[test]
    fn bouquets() {
        for s in 0..5 {
            assert_eq!(chi_bouquet(&BouquetDescriptor::spheres(2, s + 1)), s as i64 + 2);
            let mut dims = vec![2];
            dims.extend(std::iter::repeat(3).take(s));
            assert_eq!(chi_bouquet(&BouquetDescriptor::new(dims)), 2 - s as i64);
        }
        assert_eq!(chi_bouquet(&BouquetDescriptor::default()), 1);
    }

    #[test]
    fn smoothing_euler_characteristic() {
        assert_eq!(chi_smoothing(&MilnorData::codim2(2, 1)), Ok(2));
        assert_eq!(chi_smoothing(&MilnorData::codim2(3, 0)), Ok(2));
        assert_eq!(chi_smoothing(&MilnorData::codim2(2, 4)), Ok(5));
        assert!(chi_smoothing(&MilnorData::codim2(4, 1)).is_err());
        // codimension 3
        let m = MilnorData { n: 2, p: 4, ..MilnorData::codim2(2, 1) };
        assert!(chi_smoothing(&m).is_err());
    }

    #[test]
    fn polar_identities() {
        assert_eq!(le_greuel_check(&MilnorData::codim2(2, 1).with_polar(5, 4)), LeGreuel::Holds);
        assert_eq!(le_greuel_check(&MilnorData::codim2(3, 1).with_polar(3, 1)), LeGreuel::Holds);
        assert_eq!(
            le_greuel_check(&MilnorData::codim2(2, 1).with_polar(0, 1)),
            LeGreuel::Violated { lhs: 0, rhs: 2 }
        );
        assert_eq!(le_greuel_check(&MilnorData::codim2(2, 1)), LeGreuel::InsufficientData);
        // b2 has no default outside the smoothable codimension-2 threefold case
        let m = MilnorData { r: 6, ..MilnorData::codim2(3, 1).with_polar(3, 1) };
        assert_eq!(le_greuel_check(&m), LeGreuel::InsufficientData);
        assert_eq!(le_greuel_check(&m.with_b2(1)), LeGreuel::Holds);
    }

    #[test]
    fn additivity() {
        assert_eq!(chi_additive(2, 1), 3);
        assert_eq!(chi_additive(7, 0), 7);
        assert_eq!(chi_additive(-4, 3), -1);
    }
}
