//! Determinantal varieties `{x : rank F(x) < t}` and their classification.
//!
//! A model is an `n x p` polynomial matrix `F`, a rank bound `t` and an
//! ambient space, either affine `r`-space (r variables) or projective
//! `r`-space (r + 1 homogeneous variables). All symbolic dimension work uses
//! global Groebner bases; local statements about a singular point are only
//! trusted when the chart ideal at that point is weighted-homogeneous.

mod classify;
mod points;
mod weights;

pub use classify::{chart_ideal, classify, classify_with_budget, GermClassification, LocalSupport};
pub use points::{rational_points, rational_points_with_budget, PointSet};
pub use weights::positive_weights;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::grobner::{GroebnerError, Ideal};
use crate::polyalg::{PolyError, PolyMatrix, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DetVarError {
    #[error("rank bound t = {t} outside 1..={max}")]
    RankBound { t: usize, max: usize },
    #[error("{kind} {dim}-space needs {expected} variables, matrix has {got}")]
    VariableCount { kind: &'static str, dim: usize, expected: usize, got: usize },
    #[error("projective model needs homogeneous entries of one common degree")]
    NotHomogeneous,
    #[error("point has {got} coordinates, expected {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("the zero vector is not a projective point")]
    ZeroPoint,
    #[error("malformed projective point `{0}`")]
    BadPoint(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Ambient {
    Affine(usize),
    Projective(usize),
}

impl Ambient {
    pub fn dim(self) -> usize {
        match self {
            Ambient::Affine(r) | Ambient::Projective(r) => r,
        }
    }

    pub fn is_projective(self) -> bool {
        matches!(self, Ambient::Projective(_))
    }

    fn nvars(self) -> usize {
        match self {
            Ambient::Affine(r) => r,
            Ambient::Projective(r) => r + 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeterminantalModel {
    matrix: PolyMatrix,
    t: usize,
    ambient: Ambient,
}

impl DeterminantalModel {
    pub fn new(matrix: PolyMatrix, t: usize, ambient: Ambient) -> Result<Self, DetVarError> {
        let max = matrix.rows().min(matrix.cols());
        if t == 0 || t > max {
            return Err(DetVarError::RankBound { t, max });
        }
        let got = matrix.vars().len();
        if got != ambient.nvars() {
            let kind = if ambient.is_projective() { "projective" } else { "affine" };
            return Err(DetVarError::VariableCount { kind, dim: ambient.dim(), expected: ambient.nvars(), got });
        }
        if ambient.is_projective() {
            let mut degree = None;
            for e in matrix.entries().iter().filter(|e| !e.is_zero()) {
                if !e.is_homogeneous() {
                    return Err(DetVarError::NotHomogeneous);
                }
                let d = e.total_degree();
                if degree.is_some() && degree != d {
                    return Err(DetVarError::NotHomogeneous);
                }
                degree = d;
            }
        }
        Ok(DeterminantalModel { matrix, t, ambient })
    }

    pub fn matrix(&self) -> &PolyMatrix {
        &self.matrix
    }

    pub fn rows(&self) -> usize {
        self.matrix.rows()
    }

    pub fn cols(&self) -> usize {
        self.matrix.cols()
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn ambient(&self) -> Ambient {
        self.ambient
    }

    /// `(n - t + 1)(p - t + 1)`.
    pub fn expected_codimension(&self) -> usize {
        expected_codimension(self.rows(), self.cols(), self.t)
    }

    /// Dimension of the local germ's ambient space (the affine chart in projective mode).
    pub fn germ_ambient_dim(&self) -> usize {
        self.ambient.dim()
    }

    /// Ideal of all `size x size` minors, in canonical enumeration order.
    pub fn minors_ideal(&self, size: usize) -> Result<Ideal, DetVarError> {
        Ok(Ideal::new(self.matrix.vars(), self.matrix.minors(size)?))
    }

    pub fn rank_at(&self, point: &[Rational]) -> Result<usize, DetVarError> {
        let expected = self.ambient.nvars();
        if point.len() != expected {
            return Err(DetVarError::DimensionMismatch { expected, got: point.len() });
        }
        if self.ambient.is_projective() && point.iter().all(Zero::is_zero) {
            return Err(DetVarError::ZeroPoint);
        }
        Ok(self.matrix.rank_at_point(point)?)
    }

    /// Position of `point` in the rank stratification. Transversality of `F`
    /// to the stratum is not checked.
    pub fn point_status(&self, point: &[Rational]) -> Result<PointStatus, DetVarError> {
        let rank = self.rank_at(point)?;
        Ok(if rank >= self.t {
            PointStatus::Outside { rank }
        } else if rank + 2 <= self.t {
            PointStatus::EssentialSingular { rank }
        } else {
            PointStatus::SmoothStratum { rank }
        })
    }
}

/// Generic determinantal codimension `(n - t + 1)(p - t + 1)`.
pub fn expected_codimension(n: usize, p: usize, t: usize) -> usize {
    (n + 1 - t) * (p + 1 - t)
}

/// `(n - t + 2)(p - t + 2)`: an essential smoothing is smooth iff the germ's
/// ambient dimension is strictly below this.
pub fn smoothability_bound(n: usize, p: usize, t: usize) -> usize {
    (n + 2 - t) * (p + 2 - t)
}

pub fn is_smoothable(n: usize, p: usize, t: usize, ambient_dim: usize) -> bool {
    ambient_dim < smoothability_bound(n, p, t)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PointStatus {
    Outside { rank: usize },
    SmoothStratum { rank: usize },
    EssentialSingular { rank: usize },
}

impl PointStatus {
    pub fn on_variety(self) -> bool {
        !matches!(self, PointStatus::Outside { .. })
    }

    pub fn label(self) -> &'static str {
        match self {
            PointStatus::Outside { .. } => "outside",
            PointStatus::SmoothStratum { .. } => "smooth_stratum",
            PointStatus::EssentialSingular { .. } => "essential_singular",
        }
    }
}

/// Projective point with integer coordinates, normalised so the gcd is one
/// and the first nonzero entry is positive. Written `[a:b:...:c]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjectivePoint(Vec<BigInt>);

impl ProjectivePoint {
    pub fn from_integers(coords: Vec<BigInt>) -> Result<Self, DetVarError> {
        let g = coords.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if g.is_zero() {
            return Err(DetVarError::ZeroPoint);
        }
        let first_negative = coords.iter().find(|c| !c.is_zero()).is_some_and(|c| c.is_negative());
        let g = if first_negative { -g } else { g };
        Ok(ProjectivePoint(coords.into_iter().map(|c| c / &g).collect()))
    }

    pub fn from_rationals(coords: &[Rational]) -> Result<Self, DetVarError> {
        let lcm = coords.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let lcm = Rational::from_integer(lcm);
        Self::from_integers(coords.iter().map(|c| (c * &lcm).to_integer()).collect())
    }

    /// The coordinate point `e_j` of projective `(len - 1)`-space.
    pub fn coordinate(len: usize, j: usize) -> Self {
        ProjectivePoint((0..len).map(|i| BigInt::from((i == j) as u8)).collect())
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn to_rationals(&self) -> Vec<Rational> {
        self.0.iter().cloned().map(Rational::from_integer).collect()
    }

    /// Index `j` when this is the coordinate point `e_j`.
    pub fn coordinate_index(&self) -> Option<usize> {
        let mut nz = self.0.iter().enumerate().filter(|(_, c)| !c.is_zero());
        let (j, c) = nz.next()?;
        (nz.next().is_none() && c.is_one()).then_some(j)
    }

    /// Lowest index with a nonzero coordinate; the affine chart used for this point.
    pub fn chart(&self) -> usize {
        self.0.iter().position(|c| !c.is_zero()).expect("normalised points are nonzero")
    }
}

impl fmt::Display for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(":")?;
            }
            write!(f, "{}", c)?;
        }
        f.write_str("]")
    }
}

impl FromStr for ProjectivePoint {
    type Err = DetVarError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || DetVarError::BadPoint(s.to_string());
        let inner = s.trim().strip_prefix('[').and_then(|x| x.strip_suffix(']')).ok_or_else(bad)?;
        let coords = inner
            .split(':')
            .map(|c| c.trim().parse::<BigInt>().map_err(|_| bad()))
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_integers(coords)
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::polyalg::{parse_polynomial, rat, Polynomial, Vars};

    pub(crate) fn twisted_cubic() -> DeterminantalModel {
        let v: Vars = (0..5).map(|i| format!("x{}", i)).collect();
        let grid = [["x0", "x1", "x2"], ["x1", "x2", "x3"]]
            .iter()
            .map(|r| r.iter().map(|s| parse_polynomial(s, &v).unwrap()).collect())
            .collect();
        DeterminantalModel::new(PolyMatrix::new(&v, grid).unwrap(), 2, Ambient::Projective(4)).unwrap()
    }

    fn e(j: usize) -> Vec<Rational> {
        (0..5).map(|i| rat((i == j) as i64)).collect()
    }

    #[test]
    fn point_statuses() {
        let m = twisted_cubic();
        assert_eq!(m.point_status(&e(4)).unwrap(), PointStatus::EssentialSingular { rank: 0 });
        assert_eq!(m.point_status(&e(0)).unwrap(), PointStatus::SmoothStratum { rank: 1 });
        assert_eq!(m.point_status(&e(1)).unwrap(), PointStatus::Outside { rank: 2 });
        assert!(matches!(m.point_status(&[rat(1)]), Err(DetVarError::DimensionMismatch { expected: 5, got: 1 })));
        assert!(matches!(m.point_status(&vec![rat(0); 5]), Err(DetVarError::ZeroPoint)));
    }

    #[test]
    fn minors_ideals() {
        let m = twisted_cubic();
        assert_eq!(m.minors_ideal(2).unwrap().generators().len(), 3);
        let v = m.matrix().vars().clone();
        let lower = m.minors_ideal(1).unwrap();
        let want: Vec<Polynomial> = (0..4).map(|i| Polynomial::var(&v, i)).collect();
        let got = lower.generators().to_vec();
        assert_eq!(got, [&want[..3], &want[1..]].concat());
        assert!(m.minors_ideal(3).is_err());
    }

    #[test]
    fn constructor_guards() {
        let v: Vars = vec!["x".to_string(), "y".to_string()].into();
        let p = |s: &str| parse_polynomial(s, &v).unwrap();
        let mat = PolyMatrix::new(&v, vec![vec![p("x"), p("y^2")]]).unwrap();
        assert_eq!(
            DeterminantalModel::new(mat.clone(), 1, Ambient::Projective(1)),
            Err(DetVarError::NotHomogeneous)
        );
        assert!(DeterminantalModel::new(mat.clone(), 1, Ambient::Affine(2)).is_ok());
        assert!(matches!(DeterminantalModel::new(mat.clone(), 2, Ambient::Affine(2)), Err(DetVarError::RankBound { .. })));
        assert!(matches!(
            DeterminantalModel::new(mat, 1, Ambient::Affine(3)),
            Err(DetVarError::VariableCount { expected: 3, got: 2, .. })
        ));
    }

    #[test]
    fn projective_points_normalise() {
        let p: ProjectivePoint = "[0:-2:4:0]".parse().unwrap();
        assert_eq!(p.to_string(), "[0:1:-2:0]");
        assert_eq!(p.chart(), 1);
        assert!("[0:0]".parse::<ProjectivePoint>().is_err());
        assert!("0:1".parse::<ProjectivePoint>().is_err());
        assert!("[a:1]".parse::<ProjectivePoint>().is_err());
        let q = ProjectivePoint::from_rationals(&[Rational::new(1.into(), 2.into()), rat(0), rat(-3)]).unwrap();
        assert_eq!(q.to_string(), "[1:0:-6]");
        assert_eq!(ProjectivePoint::coordinate(5, 4).to_string(), "[0:0:0:0:1]");
        assert_eq!("[0:0:0:0:7]".parse::<ProjectivePoint>().unwrap().coordinate_index(), Some(4));
        assert_eq!(q.coordinate_index(), None);
    }

    #[test]
    fn closed_forms() {
        assert_eq!(expected_codimension(2, 3, 2), 2);
        assert_eq!(smoothability_bound(2, 3, 2), 6);
        assert!(is_smoothable(2, 3, 2, 4));
        assert!(!is_smoothable(2, 3, 2, 6));
    }
}
