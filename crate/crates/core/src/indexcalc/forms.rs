use num_traits::Zero;

use super::IndexError;
use crate::detvar::{positive_weights, DeterminantalModel, PointStatus, ProjectivePoint};
use crate::grobner::{quotient_dimension, Ideal, MonomialOrder, QuotientDim};
use crate::polyalg::{Polynomial, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OneFormSpec {
    /// Form induced by the torus action with these weights on the homogeneous coordinates.
    Cstar(Vec<i64>),
    /// Coefficients `a_i` of `sum a_i dx_i`, one per chart variable.
    Explicit(Vec<Polynomial>),
}

/// Index of an isolated zero at the origin of a form on a smooth chart: the
/// dimension of the local algebra of its coefficients.
pub fn smooth_zero_index(coefficients: &[Polynomial]) -> Result<u64, IndexError> {
    let Some(first) = coefficients.first() else {
        return Err(IndexError::CoefficientCount { expected: 0, got: 0 });
    };
    let n = first.nvars();
    if coefficients.len() != n {
        return Err(IndexError::CoefficientCount { expected: n, got: coefficients.len() });
    }
    let origin = vec![Rational::zero(); n];
    for c in coefficients {
        if !c.evaluate(&origin)?.is_zero() {
            return Err(IndexError::NotAZero);
        }
    }
    if positive_weights(coefficients, &[]).is_none() {
        return Err(IndexError::NotQuasiHomogeneous);
    }
    let ideal = Ideal::new(first.vars(), coefficients.iter().cloned());
    match quotient_dimension(&ideal, &MonomialOrder::grevlex(n))? {
        QuotientDim::Finite(k) => Ok(k),
        QuotientDim::Infinite => Err(IndexError::NonIsolatedZero),
    }
}

fn check_weights(model: &DeterminantalModel, weights: &[i64]) -> Result<(), IndexError> {
    if !model.ambient().is_projective() {
        return Err(IndexError::AffineUnsupported);
    }
    let expected = model.ambient().dim() + 1;
    if weights.len() != expected {
        return Err(IndexError::WeightCount { expected, got: weights.len() });
    }
    let mut sorted = weights.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(IndexError::RepeatedWeights);
    }
    Ok(())
}

/// Coordinate points lying on the variety; with distinct weights these are the
/// zeros of the induced form.
pub fn cstar_fixed_points(
    model: &DeterminantalModel,
    weights: &[i64],
) -> Result<Vec<(ProjectivePoint, PointStatus)>, IndexError> {
    check_weights(model, weights)?;
    let len = weights.len();
    let mut out = Vec::new();
    for j in 0..len {
        let e = ProjectivePoint::coordinate(len, j);
        let status = model.point_status(&e.to_rationals())?;
        if status.on_variety() {
            out.push((e, status));
        }
    }
    Ok(out)
}

/// Index 1 at a smooth coordinate fixed point: the chart weights `w_i - w_j`
/// are all nonzero, so the zero is nondegenerate.
pub fn cstar_smooth_index(point: &ProjectivePoint, weights: &[i64], model: &DeterminantalModel) -> Result<i64, IndexError> {
    check_weights(model, weights)?;
    if point.coordinate_index().is_none() {
        return Err(IndexError::NotCoordinatePoint(point.clone()));
    }
    match model.point_status(&point.to_rationals())? {
        PointStatus::SmoothStratum { .. } => Ok(1),
        _ => Err(IndexError::NotSmoothPoint(point.clone())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::detvar::tests::twisted_cubic;
    use crate::polyalg::{parse_polynomial, Vars};

    fn coeffs(names: &[&str], cs: &[&str]) -> Vec<Polynomial> {
        let v: Vars = names.iter().map(|s| s.to_string()).collect();
        cs.iter().map(|s| parse_polynomial(s, &v).unwrap()).collect()
    }

    #[test]
    fn smooth_zero_indices() {
        assert_eq!(smooth_zero_index(&coeffs(&["x", "y"], &["x", "y"])), Ok(1));
        assert_eq!(smooth_zero_index(&coeffs(&["x", "y"], &["x^2", "y^3"])), Ok(6));
        assert_eq!(smooth_zero_index(&coeffs(&["x", "y", "z"], &["x", "y", "z"])), Ok(1));
        assert_eq!(smooth_zero_index(&coeffs(&["x", "y"], &["x^2", "x*y"])), Err(IndexError::NonIsolatedZero));
        assert_eq!(smooth_zero_index(&coeffs(&["x", "y"], &["x + 1", "y"])), Err(IndexError::NotAZero));
        assert_eq!(
            smooth_zero_index(&coeffs(&["x", "y"], &["x + y^2 + x^3", "y"])),
            Err(IndexError::NotQuasiHomogeneous)
        );
        assert!(matches!(smooth_zero_index(&coeffs(&["x", "y"], &["x"])), Err(IndexError::CoefficientCount { .. })));
    }

    #[test]
    fn twisted_cubic_fixed_points() {
        let m = twisted_cubic();
        let w = [0, 1, 2, 3, 4];
        let fixed: Vec<(String, &str)> = cstar_fixed_points(&m, &w)
            .unwrap()
            .into_iter()
            .map(|(p, s)| (p.to_string(), s.label()))
            .collect();
        assert_eq!(
            fixed,
            [
                ("[1:0:0:0:0]".to_string(), "smooth_stratum"),
                ("[0:0:0:1:0]".to_string(), "smooth_stratum"),
                ("[0:0:0:0:1]".to_string(), "essential_singular"),
            ]
        );
        assert_eq!(cstar_fixed_points(&m, &[0, 0, 1, 2, 3]), Err(IndexError::RepeatedWeights));
        assert!(matches!(cstar_fixed_points(&m, &[0, 1]), Err(IndexError::WeightCount { .. })));
    }

    #[test]
    fn smooth_fixed_point_index() {
        let m = twisted_cubic();
        let w = [0, 1, 2, 3, 4];
        assert_eq!(cstar_smooth_index(&ProjectivePoint::coordinate(5, 0), &w, &m), Ok(1));
        assert_eq!(cstar_smooth_index(&ProjectivePoint::coordinate(5, 3), &w, &m), Ok(1));
        assert!(matches!(
            cstar_smooth_index(&ProjectivePoint::coordinate(5, 4), &w, &m),
            Err(IndexError::NotSmoothPoint(_))
        ));
        assert!(matches!(
            cstar_smooth_index(&"[1:1:1:1:1]".parse().unwrap(), &w, &m),
            Err(IndexError::NotCoordinatePoint(_))
        ));
    }
}
