use num_traits::{One, Zero};

use super::{is_smoothable, smoothability_bound, DetVarError, DeterminantalModel, ProjectivePoint};
use super::points::rational_points_with_budget;
use super::weights::positive_weights;
use crate::grobner::{basis_dimension, buchberger_with_budget, Ideal, MonomialOrder, DEFAULT_SPAIR_BUDGET};
use crate::polyalg::{Polynomial, Rational};

/// Whether local (germ-level) symbolic computations can be trusted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LocalSupport {
    /// Every singular point has a weighted-homogeneous chart ideal; the
    /// weights (one per variable, zero for the dehomogenised one) are listed
    /// in singular-point order.
    Supported { weights: Vec<Vec<u64>> },
    Unsupported(String),
}

impl LocalSupport {
    pub fn is_supported(&self) -> bool {
        matches!(self, LocalSupport::Supported { .. })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GermClassification {
    pub expected_codimension: usize,
    /// `None` when the variety is empty.
    pub codimension: Option<usize>,
    pub dim: Option<usize>,
    pub empty: bool,
    pub determinantal: bool,
    /// Dimension of the singular locus (projective dimension in projective mode), -1 if empty.
    pub singular_locus_dim: i64,
    pub isolated_singularity: bool,
    pub germ_ambient_dim: usize,
    pub smoothability_bound: usize,
    pub smoothable: bool,
    /// Rational singular points; projective points are normalised integer representatives.
    pub singular_points: Vec<Vec<Rational>>,
    /// False when some singular point could not be found over the rationals.
    pub singular_points_complete: bool,
    pub local_support: LocalSupport,
}

impl GermClassification {
    pub fn projective_points(&self) -> Vec<ProjectivePoint> {
        self.singular_points
            .iter()
            .map(|p| ProjectivePoint::from_rationals(p).expect("singular points are nonzero"))
            .collect()
    }
}

pub fn classify(model: &DeterminantalModel) -> Result<GermClassification, DetVarError> {
    classify_with_budget(model, DEFAULT_SPAIR_BUDGET)
}

/// As [`classify`], with an S-pair budget for each Groebner basis computed.
pub fn classify_with_budget(model: &DeterminantalModel, budget: usize) -> Result<GermClassification, DetVarError> {
    let nvars = model.matrix().vars().len();
    let order = MonomialOrder::grevlex(nvars);
    let projective = model.ambient().is_projective();
    // affine cone dimension -> dimension of the variety itself
    let shift = |cone: i64| if projective { cone - 1 } else { cone };
    let dimension = |i: &Ideal| -> Result<i64, DetVarError> { Ok(basis_dimension(&buchberger_with_budget(i, &order, budget)?)) };

    let variety = model.minors_ideal(model.t())?;
    let var_dim = shift(dimension(&variety)?);
    let empty = var_dim < 0;
    let dim = (!empty).then_some(var_dim as usize);
    let codimension = dim.map(|d| model.ambient().dim() - d);
    let expected = model.expected_codimension();

    let locus = if model.t() == 1 || empty {
        None
    } else {
        Some(variety.sum(&model.minors_ideal(model.t() - 1)?))
    };
    let singular_locus_dim = match &locus {
        Some(j) => shift(dimension(j)?).max(-1),
        None => -1,
    };
    let isolated = singular_locus_dim <= 0;

    let mut points = Vec::new();
    let mut complete = true;
    if let (Some(j), 0) = (&locus, singular_locus_dim) {
        if projective {
            for chart in 0..nvars {
                let mut fixed = vec![Rational::zero(); nvars];
                fixed[chart] = Rational::one();
                let gens = j.generators().iter().map(|g| {
                    (0..=chart).fold(g.clone(), |acc, k| acc.substitute(k, &fixed[k]))
                });
                let found = rational_points_with_budget(&Ideal::new(j.vars(), gens), &((chart + 1)..nvars).collect::<Vec<_>>(), &fixed, budget)?;
                complete &= found.complete;
                for p in found.points {
                    points.push(ProjectivePoint::from_rationals(&p)?.to_rationals());
                }
            }
        } else {
            let found = rational_points_with_budget(j, &(0..nvars).collect::<Vec<_>>(), &vec![Rational::zero(); nvars], budget)?;
            complete = found.complete;
            points = found.points;
        }
    }

    let local_support = if !isolated {
        LocalSupport::Unsupported("singular locus is not isolated".into())
    } else if !complete {
        LocalSupport::Unsupported("singular points are not all rational".into())
    } else {
        let mut weights = Vec::new();
        let mut failure = None;
        for p in &points {
            let (polys, ignore) = chart_ideal(&variety, p, projective);
            match positive_weights(&polys, &ignore) {
                Some(w) => weights.push(w),
                None => {
                    let label = if projective {
                        ProjectivePoint::from_rationals(p)?.to_string()
                    } else {
                        format!("({})", p.iter().map(ToString::to_string).collect::<Vec<_>>().join(", "))
                    };
                    failure = Some(format!("chart ideal at {} is not weighted-homogeneous", label));
                    break;
                }
            }
        }
        match failure {
            Some(msg) => LocalSupport::Unsupported(msg),
            None => LocalSupport::Supported { weights },
        }
    };

    let (n, p, t) = (model.rows(), model.cols(), model.t());
    Ok(GermClassification {
        expected_codimension: expected,
        codimension,
        dim,
        empty,
        determinantal: codimension == Some(expected),
        singular_locus_dim,
        isolated_singularity: isolated,
        germ_ambient_dim: model.germ_ambient_dim(),
        smoothability_bound: smoothability_bound(n, p, t),
        smoothable: is_smoothable(n, p, t, model.germ_ambient_dim()),
        singular_points: points,
        singular_points_complete: complete,
        local_support,
    })
}

/// Generators of `ideal` in the affine chart around `point`, translated so the
/// point sits at the origin, plus the dehomogenised variable (if any).
pub fn chart_ideal(ideal: &Ideal, point: &[Rational], projective: bool) -> (Vec<Polynomial>, Vec<usize>) {
    let mut coords = point.to_vec();
    let mut ignore = Vec::new();
    let mut gens: Vec<Polynomial> = ideal.generators().to_vec();
    if projective {
        let c = coords.iter().position(|x| !x.is_zero()).expect("nonzero projective point");
        let scale = coords[c].clone();
        coords.iter_mut().for_each(|x| *x /= &scale);
        gens = gens.iter().map(|g| g.substitute(c, &Rational::one())).collect();
        ignore.push(c);
    }
    for (i, a) in coords.iter().enumerate() {
        if !ignore.contains(&i) {
            gens = gens.iter().map(|g| g.translate(i, a)).collect();
        }
    }
    (gens.into_iter().filter(|g| !g.is_zero()).collect(), ignore)
}
