//! Index formulas for 1-forms on determinantal varieties: radial and PHN
//! index conversions, per-point defects, the global index identity and its
//! one-unknown solver, and indices of torus-induced forms.

mod forms;
mod ledger;

pub use forms::{cstar_fixed_points, cstar_smooth_index, smooth_zero_index, OneFormSpec};
pub use ledger::{global_identity, IdentityOutcome, IndexLedger, LedgerEntry, Role, Unknown};

use thiserror::Error;

use crate::detvar::{DetVarError, ProjectivePoint};
use crate::grobner::GroebnerError;
use crate::polyalg::PolyError;
use crate::topo::{chi_smoothing, MilnorData};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IndexError {
    #[error("records mix matrix types {0:?} and {1:?}")]
    MixedTypes((usize, usize, usize), (usize, usize, usize)),
    #[error("records disagree on the germ dimension ({0} vs {1})")]
    InconsistentDimension(usize, usize),
    #[error("more than one unknown: {}", .0.join(", "))]
    TooManyUnknowns(Vec<String>),
    #[error("{field} missing at {point}")]
    Missing { field: &'static str, point: ProjectivePoint },
    #[error("inconsistent data at {point}: {msg}")]
    Inconsistent { point: ProjectivePoint, msg: String },
    #[error("conflicting indices {first} and {second} at {point}")]
    ConflictingIndex { point: ProjectivePoint, first: i64, second: i64 },
    #[error("singular point {0} has no ledger entry")]
    MissingEntry(ProjectivePoint),
    #[error("variety singularity {0} has no record")]
    MissingRecord(ProjectivePoint),
    #[error("duplicate record for {0}")]
    DuplicateRecord(ProjectivePoint),
    #[error("identity forces mu = {value} < 0 at {point}")]
    NegativeMilnorNumber { point: ProjectivePoint, value: i64 },
    #[error("{0}")]
    Precondition(String),
    #[error("torus weights must be pairwise distinct")]
    RepeatedWeights,
    #[error("expected {expected} weights, got {got}")]
    WeightCount { expected: usize, got: usize },
    #[error("torus actions need a projective model")]
    AffineUnsupported,
    #[error("{0} is not a coordinate point")]
    NotCoordinatePoint(ProjectivePoint),
    #[error("{0} is not a smooth point of the variety")]
    NotSmoothPoint(ProjectivePoint),
    #[error("form has {got} coefficients for {expected} chart variables")]
    CoefficientCount { expected: usize, got: usize },
    #[error("coefficient ideal is not weighted-homogeneous")]
    NotQuasiHomogeneous,
    #[error("zero of the form at the origin is not isolated")]
    NonIsolatedZero,
    #[error("form does not vanish at the origin")]
    NotAZero,
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    DetVar(#[from] DetVarError),
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
}

/// Data attached to one singular point of the variety.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SingularPointRecord {
    pub point: ProjectivePoint,
    pub n: usize,
    pub p: usize,
    pub t: usize,
    /// Germ dimension.
    pub d: usize,
    /// Dimension of the germ's ambient chart.
    pub germ_ambient: usize,
    pub smoothable: bool,
    pub mu: Option<u64>,
    pub chi_smoothing: Option<i64>,
    /// Euler characteristic of the rank `t - 1` stratum of the essential smoothing.
    pub chi_lower_stratum: Option<i64>,
}

impl SingularPointRecord {
    pub fn matrix_type(&self) -> (usize, usize, usize) {
        (self.n, self.p, self.t)
    }

    fn milnor(&self, mu: u64) -> MilnorData {
        MilnorData { d: self.d, mu, b2: None, m_d: None, mu_slice: None, n: self.n, p: self.p, t: self.t, r: self.germ_ambient }
    }

    /// True when the smoothing's Euler characteristic follows from `mu`.
    pub fn mu_determines_chi(&self) -> bool {
        self.smoothable && chi_smoothing(&self.milnor(0)).is_ok()
    }

    /// `chi` of the smoothing, given directly or derived from `mu`.
    pub fn resolve_chi_smoothing(&self) -> Result<i64, IndexError> {
        let derived = match self.mu {
            Some(mu) if self.mu_determines_chi() => Some(chi_smoothing(&self.milnor(mu)).expect("checked")),
            _ => None,
        };
        match (self.chi_smoothing, derived) {
            (Some(c), Some(e)) if c != e => Err(IndexError::Inconsistent {
                point: self.point.clone(),
                msg: format!("chi_smoothing = {} but mu gives {}", c, e),
            }),
            (Some(c), _) | (None, Some(c)) => Ok(c),
            (None, None) => Err(IndexError::Missing { field: "chi_smoothing", point: self.point.clone() }),
        }
    }

    /// `chi` of the smoothing as `c0 + c1 * mu`.
    fn chi_in_mu(&self) -> Option<(i64, i64)> {
        if !self.mu_determines_chi() {
            return None;
        }
        let c0 = chi_smoothing(&self.milnor(0)).ok()?;
        let c1 = chi_smoothing(&self.milnor(1)).ok()? - c0;
        Some((c0, c1))
    }
}

fn sign(k: usize) -> i64 {
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Radial components: the inner indices at the `s` zeros of the perturbed form.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RadialDecomposition {
    pub inner_indices: Vec<i64>,
}

impl RadialDecomposition {
    pub fn s(&self) -> usize {
        self.inner_indices.len()
    }
}

pub fn radial_from_decomposition(dec: &RadialDecomposition) -> i64 {
    1 + dec.inner_indices.iter().sum::<i64>()
}

/// PHN index at a smoothable point from the radial index.
pub fn phn_from_radial(rad: i64, d: usize, chi_smoothing: i64) -> i64 {
    rad + sign(d) * (chi_smoothing - 1)
}

/// PHN index at a nonsmoothable point, including the lower-stratum correction.
pub fn phn_from_radial_nonsmoothable(rad: i64, rec: &SingularPointRecord) -> Result<i64, IndexError> {
    if rec.smoothable {
        return Err(IndexError::Precondition(format!("{} is smoothable", rec.point)));
    }
    Ok(phn_from_radial(rad, rec.d, rec.resolve_chi_smoothing()?) + lower_correction(rec)?)
}

fn lower_correction(rec: &SingularPointRecord) -> Result<i64, IndexError> {
    let lower = rec
        .chi_lower_stratum
        .ok_or_else(|| IndexError::Missing { field: "chi_lower_stratum", point: rec.point.clone() })?;
    Ok(sign(rec.n + rec.p + 1) * (rec.p + 1 - rec.t) as i64 * lower)
}

/// Contribution of one singular point to the right-hand side of the global identity.
pub fn defect(rec: &SingularPointRecord) -> Result<i64, IndexError> {
    let base = 1 + sign(rec.d) * (rec.resolve_chi_smoothing()? - 1);
    if rec.smoothable {
        Ok(base)
    } else {
        Ok(base + lower_correction(rec)?)
    }
}
