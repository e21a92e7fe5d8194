//! Closed forms of the strong-disorder limit
//! `I_p^≤(x) = p² Σ_{y≥1} (1-p)^y ⌊(y+1)/β(x)⌋`.

use std::f64::consts::PI;

use crate::error::{check_probability, Error, Result};
use crate::ids::energy::{beta, RationalEnergy};

/// Value of a truncated series together with a rigorous bound on the
/// discarded tail.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesValue {
    pub value: f64,
    pub tail_bound: f64,
    /// Last index `y` included in the sum.
    pub y_max: u64,
}

/// Exact finite-sum form at `x = 4 sin²(πa/(2b))`:
///
/// ```text
/// p² / (1 - q^b) · (a q^b / p + Σ_{r=0}^{b-1} q^r ⌊a(r+1)/b⌋),   q = 1 - p.
/// ```
///
/// The floors are integer divisions, so the value is right at the jump.
pub fn ids_closed_finite(p: f64, e: &RationalEnergy) -> Result<f64> {
    check_probability(p)?;
    let (a, b) = (e.a(), e.b());
    let q = 1.0 - p;
    let log_q = (-p).ln_1p();
    let qb = (b as f64 * log_q).exp();
    let one_minus_qb = -(b as f64 * log_q).exp_m1();
    let mut qr = 1.0;
    let mut sum = 0.0;
    for r in 0..b {
        sum += qr * ((a * (r + 1)) / b) as f64;
        qr *= q;
    }
    Ok(p * p / one_minus_qb * (a as f64 * qb / p + sum))
}

/// Absolute slack applied before flooring `(y+1)/β`. Rational energies are
/// exactly the jump points, and a rounded `β` can otherwise land just below
/// an integer ratio.
const JUMP_SNAP: f64 = 1e-9;

fn truncation_index(p: f64, tol: f64) -> u64 {
    let y = ((tol * p * p).ln() / (-p).ln_1p()).ceil();
    if y.is_finite() && y >= 1.0 {
        y as u64
    } else {
        1
    }
}

/// `p² q^{Y+1} ((Y + 1 + c)/p + q/p²) = p² Σ_{y>Y} q^y (y + c)`.
fn geometric_tail(p: f64, y_max: u64, c: f64) -> f64 {
    let q = 1.0 - p;
    let qy = ((y_max + 1) as f64 * (-p).ln_1p()).exp();
    p * p * qy * ((y_max as f64 + 1.0 + c) / p + q / (p * p))
}

fn check_tol(tol: f64) -> Result<()> {
    if tol > 0.0 {
        Ok(())
    } else {
        Err(Error::Parameter(format!("tolerance must be positive, got {tol}")))
    }
}

/// The series as a function of `β` directly, for any `β ≥ 1`.
pub fn ids_series_from_beta(p: f64, beta_x: f64, tol: f64) -> Result<SeriesValue> {
    check_probability(p)?;
    check_tol(tol)?;
    if beta_x.is_nan() || beta_x < 1.0 {
        return Err(Error::Domain(format!("beta must be at least 1, got {beta_x}")));
    }
    let q = 1.0 - p;
    let y_max = truncation_index(p, tol);
    let mut qy = 1.0;
    let mut sum = 0.0;
    for y in 1..=y_max {
        qy *= q;
        let k = ((y + 1) as f64 / beta_x + JUMP_SNAP).floor();
        sum += qy * k;
    }
    Ok(SeriesValue {
        value: p * p * sum,
        // ⌊(y+1)/β⌋ ≤ y + 1
        tail_bound: geometric_tail(p, y_max, 1.0),
        y_max,
    })
}

/// Truncated series for `I_p^≤(x)`, `0 < x < 4`. Terms stop at
/// `Y = ⌈log(tol p²) / log(1-p)⌉`.
pub fn ids_closed_series(p: f64, x: f64, tol: f64) -> Result<SeriesValue> {
    let b = beta(x)?;
    ids_series_from_beta(p, b, tol)
}

/// Upper bound `p² Σ (1-p)^y (⌈(y+1)/β(x) + 4/(π(ζ-4))⌉ - 1)` on the IDS,
/// valid for `ζ ≥ 8`.
pub fn ids_upper_bound_series(p: f64, x: f64, zeta: f64, tol: f64) -> Result<SeriesValue> {
    check_probability(p)?;
    check_tol(tol)?;
    if zeta.is_nan() || zeta < 8.0 {
        return Err(Error::Domain(format!("upper bound needs zeta >= 8, got {zeta}")));
    }
    let b = beta(x)?;
    let shift = 4.0 / (PI * (zeta - 4.0));
    let q = 1.0 - p;
    let y_max = truncation_index(p, tol);
    let mut qy = 1.0;
    let mut sum = 0.0;
    for y in 1..=y_max {
        qy *= q;
        let k = ((y + 1) as f64 / b + shift).ceil() - 1.0;
        sum += qy * k;
    }
    Ok(SeriesValue {
        value: p * p * sum,
        // ⌈(y+1)/β + c⌉ - 1 < y + 1 + c < y + 2
        tail_bound: geometric_tail(p, y_max, 2.0),
        y_max,
    })
}

/// The jump points of the truncated series: all `4 sin²(πk/(2(y+1)))` with
/// `1 ≤ k ≤ y ≤ y_max`, sorted and deduplicated.
pub fn series_jump_points(y_max: u64) -> Vec<RationalEnergy> {
    let mut pts: Vec<_> = (1..=y_max)
        .flat_map(|y| (1..=y).map(move |k| RationalEnergy::new(k, y + 1).expect("k < y + 1")))
        .collect();
    pts.sort_by(RationalEnergy::cmp_value);
    pts.dedup_by(|x, y| x.a() == y.a() && x.b() == y.b());
    pts
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn re(a: u64, b: u64) -> RationalEnergy {
        RationalEnergy::new(a, b).unwrap()
    }

    #[test]
    fn finite_sum_half_band() {
        // a=1, b=2 reduces to (1-p)/(2-p)
        let v = ids_closed_finite(0.3, &re(1, 2)).unwrap();
        assert_abs_diff_eq!(v, 0.7 / 1.7, epsilon = 1e-15);
        assert_abs_diff_eq!(v, 0.411_764_7, epsilon = 1e-7);
    }

    #[test]
    fn finite_sum_vanishes_for_full_potential() {
        for (a, b) in [(1, 2), (2, 3), (3, 7), (11, 12)] {
            assert!(ids_closed_finite(1.0 - 1e-6, &re(a, b)).unwrap() <= 1e-5);
        }
    }

    #[test]
    fn finite_sum_matches_series_at_one() {
        let f = ids_closed_finite(0.3, &re(1, 3)).unwrap();
        let s = ids_closed_series(0.3, 1.0, 1e-14).unwrap();
        assert!((f - s.value).abs() <= 1e-12);
        let s2 = ids_closed_series(0.3, 2.0, 1e-14).unwrap();
        assert_abs_diff_eq!(s2.value, 0.7 / 1.7, epsilon = 1e-12);
    }

    #[test]
    fn finite_sum_rejects_bad_p() {
        assert!(ids_closed_finite(0.0, &re(1, 2)).is_err());
        assert!(ids_closed_finite(1.0, &re(1, 2)).is_err());
    }

    #[test]
    fn series_small_energy() {
        let v = ids_closed_series(0.3, 1e-6, 1e-14).unwrap().value;
        let w = ids_closed_series(0.3, 1e-7, 1e-14).unwrap().value;
        assert!(v <= 1e-3);
        assert!(w <= v);
    }

    #[test]
    fn series_near_top_of_band() {
        // left limit at x → 4 is 1 - p; the formal sum at β = 1 is (1-p)(1+p)
        let below = ids_closed_series(0.3, 4.0 - 1e-9, 1e-14).unwrap().value;
        assert_abs_diff_eq!(below, 0.7, epsilon = 1e-6);
        let at_one = ids_series_from_beta(0.3, 1.0, 1e-14).unwrap().value;
        assert_abs_diff_eq!(at_one, 0.91, epsilon = 1e-12);
        assert!(at_one > 0.7);
    }

    #[test]
    fn series_errors() {
        assert!(matches!(ids_closed_series(0.3, 0.0, 1e-12), Err(Error::Domain(_))));
        assert!(matches!(ids_closed_series(0.3, 4.0, 1e-12), Err(Error::Domain(_))));
        assert!(matches!(ids_closed_series(0.3, 1.0, 0.0), Err(Error::Parameter(_))));
        assert!(ids_upper_bound_series(0.3, 1.0, 7.0, 1e-12).is_err());
    }

    #[test]
    fn tail_bound_is_small_and_rigorous() {
        for p in [0.1, 0.5, 0.9] {
            let s = ids_closed_series(p, 3.3, 1e-14).unwrap();
            assert!(s.tail_bound < 1e-11, "p={p}: tail {}", s.tail_bound);
            // doubling the truncation moves the value by less than the bound
            let longer = ids_closed_series(p, 3.3, 1e-28).unwrap();
            assert!(longer.value - s.value <= s.tail_bound + 1e-15);
        }
    }

    #[test]
    fn upper_bound_dominates_closed_form() {
        for zeta in [8.0, 12.0, 40.0] {
            for x in [0.2, 1.0, 1.234, 2.0, 3.7] {
                let lo = ids_closed_series(0.4, x, 1e-14).unwrap().value;
                let hi = ids_upper_bound_series(0.4, x, zeta, 1e-14).unwrap().value;
                assert!(hi >= lo - 1e-15, "zeta={zeta}, x={x}");
            }
        }
    }

    #[test]
    fn jump_points_are_dirichlet_eigenvalues() {
        let pts = series_jump_points(4);
        let pairs: Vec<_> = pts.iter().map(|e| (e.a(), e.b())).collect();
        assert_eq!(
            pairs,
            vec![(1, 5), (1, 4), (1, 3), (2, 5), (1, 2), (3, 5), (2, 3), (3, 4), (4, 5)]
        );
    }
}
