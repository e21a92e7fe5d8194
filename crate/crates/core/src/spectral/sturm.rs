//! Sturm-sequence counting and bisection for symmetric tridiagonal matrices.
//!
//! `count_below(T, x)` is the number of negative pivots in the LDLᵀ
//! factorization of `T - xI`, which by Sylvester's law of inertia equals the
//! number of eigenvalues strictly below `x`. One pass, no allocation.

use crate::error::{Error, Result};
use crate::model::SymTridiagonal;

/// Lanes processed together by [`count_below_many`]. The pivot recurrence is
/// latency bound, so independent energies are interleaved.
const LANES: usize = 8;

#[inline(always)]
fn guard(d: f64, e2: f64) -> f64 {
    f64::EPSILON * (1.0 + d.abs() + e2)
}

/// Pivots smaller than the guard are pushed away from zero keeping their
/// sign; an exact zero counts as positive, which keeps the count strict.
#[inline(always)]
fn safeguard(q: f64, g: f64) -> f64 {
    if q.abs() < g {
        if q < 0.0 {
            -g
        } else {
            g
        }
    } else {
        q
    }
}

/// Number of eigenvalues of `t` strictly less than `x`.
pub fn count_below(t: &SymTridiagonal, x: f64) -> usize {
    let d = t.diag();
    let e = t.offdiag();
    if d.is_empty() {
        return 0;
    }
    let mut q = d[0] - x;
    let mut count = usize::from(q < 0.0);
    for i in 1..d.len() {
        let e2 = e[i - 1] * e[i - 1];
        let prev = safeguard(q, guard(d[i - 1], e2));
        q = (d[i] - x) - e2 / prev;
        count += usize::from(q < 0.0);
    }
    count
}

/// [`count_below`] for many energies, sharing one sweep over the matrix per
/// block of energies.
pub fn count_below_many(t: &SymTridiagonal, xs: &[f64]) -> Vec<usize> {
    let d = t.diag();
    let e = t.offdiag();
    let mut out = Vec::with_capacity(xs.len());
    if d.is_empty() {
        out.resize(xs.len(), 0);
        return out;
    }
    for chunk in xs.chunks(LANES) {
        let mut x = [0.0f64; LANES];
        x[..chunk.len()].copy_from_slice(chunk);
        let mut q = [0.0f64; LANES];
        let mut count = [0usize; LANES];
        for l in 0..LANES {
            q[l] = d[0] - x[l];
            count[l] = usize::from(q[l] < 0.0);
        }
        for i in 1..d.len() {
            let e2 = e[i - 1] * e[i - 1];
            let g = guard(d[i - 1], e2);
            let di = d[i];
            for l in 0..LANES {
                let prev = safeguard(q[l], g);
                q[l] = (di - x[l]) - e2 / prev;
                count[l] += usize::from(q[l] < 0.0);
            }
        }
        out.extend_from_slice(&count[..chunk.len()]);
    }
    out
}

/// Eigenvalues `λ_{k_lo} ≤ … ≤ λ_{k_hi}` (1-based, inclusive), each located
/// by bisection on [`count_below`] to a bracket of width at most `tol`
/// (or the floating-point resolution of the bracket, if coarser).
pub fn eigenvalues_bisection(t: &SymTridiagonal, k_lo: usize, k_hi: usize, tol: f64) -> Result<Vec<f64>> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::Parameter(format!(
            "bisection tolerance must be positive, got {tol}"
        )));
    }
    let n = t.dim();
    if k_lo < 1 || k_lo > n {
        return Err(Error::Index { index: k_lo, len: n });
    }
    if k_hi < k_lo || k_hi > n {
        return Err(Error::Index { index: k_hi, len: n });
    }
    let (glo, ghi) = t.gershgorin_bounds();
    let mut out = Vec::with_capacity(k_hi - k_lo + 1);
    let mut floor = glo;
    for k in k_lo..=k_hi {
        let mut lo = floor;
        let mut hi = ghi;
        while hi - lo > tol {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            if count_below(t, mid) >= k {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        let lambda = 0.5 * (lo + hi);
        out.push(lambda);
        floor = lo;
    }
    Ok(out)
}

/// Full spectrum by bisection, ascending.
pub fn all_eigenvalues(t: &SymTridiagonal, tol: f64) -> Result<Vec<f64>> {
    if t.dim() == 0 {
        return Ok(Vec::new());
    }
    eigenvalues_bisection(t, 1, t.dim(), tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn laplacian_small_counts() {
        let l2 = SymTridiagonal::laplacian(2);
        assert_eq!(count_below(&l2, 1.5), 1);
        assert_eq!(count_below(&l2, 0.5), 0);
        assert_eq!(count_below(&l2, 3.5), 2);
        let l3 = SymTridiagonal::laplacian(3);
        assert_eq!(count_below(&l3, 2.5), 2);
    }

    #[test]
    fn count_is_strict_at_exact_eigenvalues() {
        // zero pivots on the way: 2 is an eigenvalue of -Δ_1 and -Δ_3
        assert_eq!(count_below(&SymTridiagonal::laplacian(1), 2.0), 0);
        assert_eq!(count_below(&SymTridiagonal::laplacian(3), 2.0), 1);
    }

    #[test]
    fn empty_matrix_counts_zero() {
        let t = SymTridiagonal::default();
        assert_eq!(count_below(&t, 10.0), 0);
        assert_eq!(count_below_many(&t, &[1.0, 2.0]), vec![0, 0]);
    }

    #[test]
    fn batched_counts_match_scalar() {
        let t = SymTridiagonal::new(
            vec![2.0, 9.0, 2.0, 2.0, 9.0, 2.0, 2.0, 2.0, 9.0, 9.0, 2.0],
            vec![-1.0, -1.0, -1.0, 0.0, -1.0, -1.0, -1.0, -1.0, -1.0, -1.0],
        )
        .unwrap();
        let xs: Vec<f64> = (0..37).map(|i| -0.7 + 0.33 * i as f64).collect();
        let batched = count_below_many(&t, &xs);
        for (x, c) in xs.iter().zip(batched) {
            assert_eq!(c, count_below(&t, *x), "x = {x}");
        }
    }

    #[test]
    fn bisection_small_examples() {
        let one = eigenvalues_bisection(&SymTridiagonal::laplacian(1), 1, 1, 1e-13).unwrap();
        assert_abs_diff_eq!(one[0], 2.0, epsilon = 1e-12);

        let two = all_eigenvalues(&SymTridiagonal::edge_perturbed_laplacian(0, 3.0), 1e-13).unwrap();
        assert_abs_diff_eq!(two[0], 4.0, epsilon = 1e-12);
        assert_abs_diff_eq!(two[1], 6.0, epsilon = 1e-12);

        let s17 = 17f64.sqrt();
        let three = all_eigenvalues(&SymTridiagonal::edge_perturbed_laplacian(1, 3.0), 1e-13).unwrap();
        assert_abs_diff_eq!(three[0], (7.0 - s17) / 2.0, epsilon = 1e-12);
        assert_abs_diff_eq!(three[1], 5.0, epsilon = 1e-12);
        assert_abs_diff_eq!(three[2], (7.0 + s17) / 2.0, epsilon = 1e-12);
    }

    #[test]
    fn bisection_parameter_errors() {
        let t = SymTridiagonal::laplacian(3);
        assert!(matches!(eigenvalues_bisection(&t, 1, 3, 0.0), Err(Error::Parameter(_))));
        assert!(matches!(
            eigenvalues_bisection(&t, 0, 3, 1e-9),
            Err(Error::Index { .. })
        ));
        assert!(matches!(
            eigenvalues_bisection(&t, 2, 4, 1e-9),
            Err(Error::Index { .. })
        ));
        assert!(matches!(
            eigenvalues_bisection(&t, 3, 2, 1e-9),
            Err(Error::Index { .. })
        ));
    }

    #[test]
    fn bisection_respects_tolerance_sub_range() {
        let t = SymTridiagonal::laplacian(9);
        let ev = eigenvalues_bisection(&t, 3, 5, 1e-6).unwrap();
        for (i, lambda) in ev.iter().enumerate() {
            let k = (i + 3) as f64;
            let exact = 4.0 * (std::f64::consts::PI * k / 20.0).sin().powi(2);
            assert!((lambda - exact).abs() <= 1e-6);
        }
    }

    #[test]
    fn direct_sum_counts_add() {
        let a = SymTridiagonal::laplacian(4);
        let b = SymTridiagonal::edge_perturbed_laplacian(3, 5.0);
        let sum = SymTridiagonal::direct_sum([&a, &b]);
        for x in [0.3, 1.1, 2.7, 3.9, 6.4, 8.2] {
            assert_eq!(count_below(&sum, x), count_below(&a, x) + count_below(&b, x));
        }
    }
}
