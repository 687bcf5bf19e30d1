//! Logarithmic quadrature grid for integrals against dt/t.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::space::Field;

/// Geometric node grid with log-trapezoid weights, so that
/// ∫ φ(t) dt/t ≈ Σ_j ω_j φ(t_j) and Σ_j ω_j = ln(t_max/t_min).
///
/// Diagonal (per-eigenvalue) integrals are evaluated in closed form
/// elsewhere; this grid is for genuinely bilinear or nonlinear integrands
/// such as paraproduct slices.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ScaleGrid {
    pub t_min: f64,
    pub t_max: f64,
    pub points_per_decade: usize,
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl ScaleGrid {
    pub fn new(t_min: f64, t_max: f64, points_per_decade: usize) -> Result<Self> {
        if !(t_min > 0.0) || !(t_max > t_min) {
            return Err(Error::InvalidParam(format!(
                "scale grid needs 0 < t_min < t_max, got [{t_min}, {t_max}]"
            )));
        }
        if points_per_decade == 0 {
            return Err(Error::InvalidParam("points_per_decade must be >= 1".into()));
        }
        let decades = (t_max / t_min).log10();
        let segments = ((points_per_decade as f64 * decades).ceil() as usize).max(1);
        let lo = t_min.ln();
        let hi = t_max.ln();
        let du = (hi - lo) / segments as f64;
        let nodes: Vec<f64> = (0..=segments)
            .map(|j| (lo + du * j as f64).exp())
            .collect();
        let mut weights = vec![du; segments + 1];
        weights[0] *= 0.5;
        weights[segments] *= 0.5;
        Ok(ScaleGrid { t_min, t_max, points_per_decade, nodes, weights })
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn log_span(&self) -> f64 {
        (self.t_max / self.t_min).ln()
    }

    /// Σ_j ω_j φ(t_j) for a field-valued integrand, in fixed node order.
    pub fn integrate(&self, mut slice: impl FnMut(f64) -> Field) -> Result<Field> {
        let mut acc: Option<Field> = None;
        for (&t, &w) in self.nodes.iter().zip(&self.weights) {
            let v = slice(t);
            if !v.is_finite() {
                return Err(Error::NonFinite("scale integrand"));
            }
            match &mut acc {
                None => {
                    let mut first = v;
                    for x in first.as_mut_slice() {
                        *x *= w;
                    }
                    acc = Some(first);
                }
                Some(a) => a.axpy(w, &v),
            }
        }
        acc.ok_or(Error::NonFinite("empty scale grid"))
    }

    pub fn integrate_scalar(&self, mut slice: impl FnMut(f64) -> f64) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&t, &w)| w * slice(t))
            .sum()
    }
}
