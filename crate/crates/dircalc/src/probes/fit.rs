//! Least-squares fitting helpers shared by the probes.

/// Ordinary least squares y = a·x + b on (x, y) pairs.
/// Returns (slope, intercept, max absolute residual).
pub fn linear_fit(points: &[(f64, f64)]) -> (f64, f64, f64) {
    let n = points.len() as f64;
    if points.is_empty() {
        return (0.0, 0.0, 0.0);
    }
    if points.len() == 1 {
        return (0.0, points[0].1, 0.0);
    }
    let sx: f64 = points.iter().map(|p| p.0).sum();
    let sy: f64 = points.iter().map(|p| p.1).sum();
    let sxx: f64 = points.iter().map(|p| p.0 * p.0).sum();
    let sxy: f64 = points.iter().map(|p| p.0 * p.1).sum();
    let det = n * sxx - sx * sx;
    if det.abs() < 1e-300 {
        // Degenerate abscissa: report the mean level with zero slope.
        let b = sy / n;
        let res = points.iter().map(|p| (p.1 - b).abs()).fold(0.0, f64::max);
        return (0.0, b, res);
    }
    let a = (n * sxy - sx * sy) / det;
    let b = (sy - a * sx) / n;
    let res = points
        .iter()
        .map(|p| (p.1 - a * p.0 - b).abs())
        .fold(0.0, f64::max);
    (a, b, res)
}

/// Coefficient of determination R² for a linear fit.
pub fn r_squared(points: &[(f64, f64)], slope: f64, intercept: f64) -> f64 {
    if points.len() < 2 {
        return 1.0;
    }
    let mean_y: f64 = points.iter().map(|p| p.1).sum::<f64>() / points.len() as f64;
    let ss_tot: f64 = points.iter().map(|p| (p.1 - mean_y).powi(2)).sum();
    let ss_res: f64 = points
        .iter()
        .map(|p| (p.1 - slope * p.0 - intercept).powi(2))
        .sum();
    if ss_tot <= 0.0 {
        return 1.0;
    }
    1.0 - ss_res / ss_tot
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recovers_exact_line() {
        let pts: Vec<(f64, f64)> = (0..10).map(|i| (i as f64, 3.0 * i as f64 - 1.0)).collect();
        let (a, b, res) = linear_fit(&pts);
        assert!((a - 3.0).abs() < 1e-12);
        assert!((b + 1.0).abs() < 1e-12);
        assert!(res < 1e-12);
        assert!((r_squared(&pts, a, b) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn degenerate_inputs() {
        assert_eq!(linear_fit(&[]), (0.0, 0.0, 0.0));
        let (a, b, _) = linear_fit(&[(2.0, 5.0)]);
        assert_eq!((a, b), (0.0, 5.0));
    }
}
