//! Small statistical helpers for the experiment harness.

/// Wilson score interval at 95% confidence.
///
/// Preferred over the normal approximation because sweep points routinely sit
/// at 0/30 or 30/30, where the Wald interval collapses to a point.
pub fn wilson95(successes: usize, trials: usize) -> (f64, f64) {
    if trials == 0 {
        return (0.0, 1.0);
    }
    let z = 1.959_963_984_540_054_f64;
    let n = trials as f64;
    let p = successes as f64 / n;
    let z2 = z * z;
    let denom = 1.0 + z2 / n;
    let center = (p + z2 / (2.0 * n)) / denom;
    let half = (z / denom) * (p * (1.0 - p) / n + z2 / (4.0 * n * n)).sqrt();
    ((center - half).max(0.0), (center + half).min(1.0))
}

/// First crossing of 1/2 on a (budget, fraction) curve, linearly
/// interpolated between the bracketing budgets. A curve that starts at or
/// above 1/2 yields its first budget; a curve that never reaches 1/2 yields
/// None.
pub fn first_half_crossing(points: &[(f64, f64)]) -> Option<f64> {
    for (i, &(r, f)) in points.iter().enumerate() {
        if f >= 0.5 {
            if i == 0 {
                return Some(r);
            }
            let (r0, f0) = points[i - 1];
            return Some(r0 + (0.5 - f0) * (r - r0) / (f - f0));
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wilson_basic_shape() {
        let (lo, hi) = wilson95(15, 30);
        assert!(lo < 0.5 && 0.5 < hi);
        assert!(lo > 0.3 && hi < 0.7);
    }

    #[test]
    fn wilson_extremes_stay_in_unit_interval() {
        let (lo, hi) = wilson95(0, 30);
        assert_eq!(lo, 0.0);
        assert!(hi > 0.0 && hi < 0.2);
        let (lo, hi) = wilson95(30, 30);
        assert!(lo > 0.8 && lo < 1.0);
        assert!((1.0 - 1e-12..=1.0).contains(&hi));
    }

    #[test]
    fn wilson_empty_is_vacuous() {
        assert_eq!(wilson95(0, 0), (0.0, 1.0));
    }

    #[test]
    fn crossing_interpolates() {
        let pts = [(100.0, 0.0), (110.0, 0.4), (120.0, 1.0)];
        let r = first_half_crossing(&pts).unwrap();
        assert!((r - (110.0 + 0.1 * 10.0 / 0.6)).abs() < 1e-12);
    }

    #[test]
    fn crossing_at_first_point_returns_it() {
        assert_eq!(first_half_crossing(&[(60.0, 0.7), (80.0, 1.0)]), Some(60.0));
    }

    #[test]
    fn no_crossing_returns_none() {
        assert_eq!(first_half_crossing(&[(60.0, 0.1), (80.0, 0.49)]), None);
    }

    #[test]
    fn exact_half_counts_as_crossing() {
        let pts = [(10.0, 0.2), (20.0, 0.5)];
        assert_eq!(first_half_crossing(&pts), Some(20.0));
    }
}
