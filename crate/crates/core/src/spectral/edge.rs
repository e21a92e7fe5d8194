//! Eigenvalues of the corner-perturbed Laplacian `-Δ_{n+2} + t A_{n+2}`,
//! where `A_{n+2}` has ones in the two corner diagonal entries.
//!
//! For `t ≥ 3` the matrix has exactly `n` eigenvalues in `(0, 4)`. Writing
//! `μ = 4 sin²(θ/2)`, they are the solutions of
//!
//! ```text
//! (n + 1) θ + arctan f_t(θ) = π k,   k = 1..n,
//! f_t(θ) = 2 (t + cos θ) sin θ / (t² + 2t cos θ + cos 2θ),
//! ```
//!
//! which [`solve_mu`] finds by bisection.

use std::f64::consts::{FRAC_PI_2, PI};

use crate::error::{Error, Result};
use crate::model::SymTridiagonal;
use crate::spectral::chebyshev::chebyshev_u_pair;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EdgePerturbedSpec {
    n: usize,
    t: f64,
}

impl EdgePerturbedSpec {
    /// `n` is the interior size (matrix dimension `n + 2`); requires `t ≥ 3`.
    pub fn new(n: usize, t: f64) -> Result<Self> {
        if t.is_nan() || t < 3.0 {
            return Err(Error::Domain(format!(
                "corner perturbation must satisfy t >= 3, got {t}"
            )));
        }
        Ok(Self { n, t })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn t(&self) -> f64 {
        self.t
    }

    pub fn dim(&self) -> usize {
        self.n + 2
    }

    pub fn matrix(&self) -> SymTridiagonal {
        SymTridiagonal::edge_perturbed_laplacian(self.n, self.t)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThetaSolution {
    pub k: usize,
    pub theta: f64,
    /// `4 sin²(θ/2)`.
    pub mu: f64,
    /// `|(n+1)θ + arctan f_t(θ) - πk|` at the returned `θ`.
    pub residual: f64,
}

/// `det(-Δ_{n+2} + t A_{n+2} - x)`, evaluated as
/// `(-1)^n [(t² - 1) U_n(x') - 2(t - x') U_{n+1}(x')]` with `x' = (x - 2)/2`.
pub fn charpoly_edge(spec: &EdgePerturbedSpec, x: f64) -> f64 {
    let xp = 0.5 * (x - 2.0);
    let t = spec.t;
    let (un, un1) = chebyshev_u_pair(spec.n, xp);
    let val = (t * t - 1.0) * un - 2.0 * (t - xp) * un1;
    if spec.n.is_multiple_of(2) {
        val
    } else {
        -val
    }
}

#[inline]
fn f_t_unchecked(theta: f64, t: f64) -> f64 {
    let (s, c) = theta.sin_cos();
    2.0 * (t + c) * s / (t * t + 2.0 * t * c + (2.0 * theta).cos())
}

/// `f_t(θ)` on the open interval `(0, π)`, `t ≥ 3`. Takes values in
/// `(0, 2/(t-1)]`.
pub fn f_t(theta: f64, t: f64) -> Result<f64> {
    if !(theta > 0.0 && theta < PI) {
        return Err(Error::Domain(format!("theta must lie in (0, pi), got {theta}")));
    }
    if t.is_nan() || t < 3.0 {
        return Err(Error::Domain(format!("f_t needs t >= 3, got {t}")));
    }
    Ok(f_t_unchecked(theta, t))
}

/// Uniform bound `sup_θ f_t(θ) ≤ 2 / (t - 1)`.
pub fn f_t_sup_bound(t: f64) -> f64 {
    2.0 / (t - 1.0)
}

/// Lower bound `4 sin²((π / (2(n+1))) (k - 2/(π(t-1))))` on `μ_{k,n+2}(t)`.
pub fn mu_lower_bound(n: usize, k: usize, t: f64) -> f64 {
    let arg = PI / (2.0 * (n + 1) as f64) * (k as f64 - 2.0 / (PI * (t - 1.0)));
    let s = arg.sin();
    4.0 * s * s
}

/// Solves for the `k`-th eigenvalue below 4 of `-Δ_{n+2} + t A_{n+2}`.
///
/// `g(θ) = (n+1)θ + arctan f_t(θ) - πk` is strictly increasing and changes
/// sign on `[(πk - π/2)/(n+1), πk/(n+1)]` because `arctan f_t ∈ (0, π/2)`.
/// Bisection stops once `|g| ≤ tol` or the bracket can no longer shrink.
pub fn solve_mu(spec: &EdgePerturbedSpec, k: usize, tol: f64) -> Result<ThetaSolution> {
    let n = spec.n;
    if k < 1 || k > n {
        return Err(Error::Index { index: k, len: n });
    }
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::Parameter(format!("tolerance must be positive, got {tol}")));
    }
    let t = spec.t;
    let m = (n + 1) as f64;
    let target = PI * k as f64;
    let g = |theta: f64| m * theta + f_t_unchecked(theta, t).atan() - target;

    let mut lo = (target - FRAC_PI_2) / m;
    let mut hi = target / m;
    let (glo, ghi) = (g(lo), g(hi));
    if !(glo < 0.0 && ghi > 0.0) {
        return Err(Error::Internal(format!(
            "secular bracket does not straddle zero: g({lo}) = {glo}, g({hi}) = {ghi}"
        )));
    }

    let mut theta = 0.5 * (lo + hi);
    let mut gval = g(theta);
    while gval.abs() > tol {
        if gval < 0.0 {
            lo = theta;
        } else {
            hi = theta;
        }
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        theta = mid;
        gval = g(theta);
    }
    debug_assert!(
        theta >= PI / (n + 3) as f64 - 1e-12 && theta <= PI * n as f64 / m + 1e-12,
        "theta {theta} outside [pi/(n+3), pi n/(n+1)]"
    );
    let s = (0.5 * theta).sin();
    Ok(ThetaSolution {
        k,
        theta,
        mu: 4.0 * s * s,
        residual: gval.abs(),
    })
}

/// All `n` eigenvalues of `-Δ_{n+2} + t A_{n+2}` that lie in `(0, 4)`.
pub fn solve_all_mu(spec: &EdgePerturbedSpec, tol: f64) -> Result<Vec<ThetaSolution>> {
    (1..=spec.n).map(|k| solve_mu(spec, k, tol)).collect()
}
