use std::fmt;

use super::{defect, IndexError, SingularPointRecord};
use crate::detvar::ProjectivePoint;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Role {
    VarietySingularity,
    FormSingularity,
}

impl Role {
    pub fn label(self) -> &'static str {
        match self {
            Role::VarietySingularity => "variety_singularity",
            Role::FormSingularity => "form_singularity_smooth_point",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LedgerEntry {
    pub point: ProjectivePoint,
    pub role: Role,
    pub index: Option<i64>,
}

/// Singular points of a 1-form with their indices, and `chi(X)`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct IndexLedger {
    entries: Vec<LedgerEntry>,
    pub chi_x: Option<i64>,
}

impl IndexLedger {
    pub fn new(chi_x: Option<i64>) -> Self {
        IndexLedger { entries: Vec::new(), chi_x }
    }

    pub fn entries(&self) -> &[LedgerEntry] {
        &self.entries
    }

    pub fn entry(&self, point: &ProjectivePoint) -> Option<&LedgerEntry> {
        self.entries.iter().find(|e| &e.point == point)
    }

    /// Adds a point. A point already present is merged: a variety singularity
    /// absorbs a form singularity, and two known indices must agree.
    pub fn insert(&mut self, point: ProjectivePoint, role: Role, index: Option<i64>) -> Result<(), IndexError> {
        let Some(e) = self.entries.iter_mut().find(|e| e.point == point) else {
            self.entries.push(LedgerEntry { point, role, index });
            return Ok(());
        };
        if role == Role::VarietySingularity {
            e.role = role;
        }
        match (e.index, index) {
            (Some(a), Some(b)) if a != b => {
                return Err(IndexError::ConflictingIndex { point, first: a, second: b });
            }
            (None, Some(b)) => e.index = Some(b),
            _ => {}
        }
        Ok(())
    }

    /// Marks the index at `point` unknown; false if the point is absent.
    pub fn forget_index(&mut self, point: &ProjectivePoint) -> bool {
        match self.entries.iter_mut().find(|e| &e.point == point) {
            Some(e) => {
                e.index = None;
                true
            }
            None => false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Unknown {
    Index(ProjectivePoint),
    ChiX,
    Mu(ProjectivePoint),
}

impl fmt::Display for Unknown {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Unknown::Index(p) => write!(f, "index@{}", p),
            Unknown::ChiX => f.write_str("chi_X"),
            Unknown::Mu(p) => write!(f, "mu@{}", p),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IdentityOutcome {
    Verified { lhs: i64, rhs: i64 },
    Violated { lhs: i64, rhs: i64 },
    Solved { unknown: Unknown, value: i64 },
}

/// `constant + coeff * x` in the single unknown.
#[derive(Clone, Copy, Default)]
struct Lin {
    constant: i64,
    coeff: i64,
}

impl Lin {
    fn known(c: i64) -> Self {
        Lin { constant: c, coeff: 0 }
    }

    fn add(self, o: Lin) -> Lin {
        Lin { constant: self.constant + o.constant, coeff: self.coeff + o.coeff }
    }
}

/// `sum of indices = chi(X) + sum of defects`. With no unknowns the identity is
/// checked; with exactly one (an index, `chi(X)` or a Milnor number) it is solved.
pub fn global_identity(ledger: &IndexLedger, records: &[SingularPointRecord]) -> Result<IdentityOutcome, IndexError> {
    if let Some(first) = records.first() {
        for r in records {
            if r.matrix_type() != first.matrix_type() {
                return Err(IndexError::MixedTypes(first.matrix_type(), r.matrix_type()));
            }
            if r.d != first.d {
                return Err(IndexError::InconsistentDimension(first.d, r.d));
            }
        }
    }
    for (k, r) in records.iter().enumerate() {
        if records[..k].iter().any(|q| q.point == r.point) {
            return Err(IndexError::DuplicateRecord(r.point.clone()));
        }
        match ledger.entry(&r.point) {
            Some(e) if e.role == Role::VarietySingularity => {}
            _ => return Err(IndexError::MissingEntry(r.point.clone())),
        }
    }
    for e in ledger.entries() {
        if e.role == Role::VarietySingularity && !records.iter().any(|r| r.point == e.point) {
            return Err(IndexError::MissingRecord(e.point.clone()));
        }
    }

    let mut unknowns = Vec::new();
    let mut lhs = Lin::default();
    for e in ledger.entries() {
        match e.index {
            Some(i) => lhs = lhs.add(Lin::known(i)),
            None => {
                unknowns.push(Unknown::Index(e.point.clone()));
                lhs = lhs.add(Lin { constant: 0, coeff: 1 });
            }
        }
    }
    let mut rhs = match ledger.chi_x {
        Some(c) => Lin::known(c),
        None => {
            unknowns.push(Unknown::ChiX);
            Lin { constant: 0, coeff: 1 }
        }
    };
    for r in records {
        let term = if r.mu.is_none() && r.chi_smoothing.is_none() && r.smoothable {
            match r.chi_in_mu() {
                Some((c0, c1)) => {
                    unknowns.push(Unknown::Mu(r.point.clone()));
                    // 1 + (-1)^d (c0 + c1 mu - 1)
                    let s = if r.d % 2 == 0 { 1 } else { -1 };
                    Lin { constant: 1 + s * (c0 - 1), coeff: s * c1 }
                }
                None => Lin::known(defect(r)?),
            }
        } else {
            Lin::known(defect(r)?)
        };
        rhs = rhs.add(term);
    }

    match unknowns.len() {
        0 => {
            let (l, r) = (lhs.constant, rhs.constant);
            Ok(if l == r { IdentityOutcome::Verified { lhs: l, rhs: r } } else { IdentityOutcome::Violated { lhs: l, rhs: r } })
        }
        1 => {
            let unknown = unknowns.pop().unwrap();
            let a = lhs.coeff - rhs.coeff;
            let c = lhs.constant - rhs.constant;
            assert!(a == 1 || a == -1, "identity terms enter with coefficient +-1");
            let value = -c * a;
            if let Unknown::Mu(point) = &unknown {
                if value < 0 {
                    return Err(IndexError::NegativeMilnorNumber { point: point.clone(), value });
                }
            }
            Ok(IdentityOutcome::Solved { unknown, value })
        }
        _ => Err(IndexError::TooManyUnknowns(unknowns.iter().map(ToString::to_string).collect())),
    }
}
