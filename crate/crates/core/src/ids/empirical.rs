//! Monte Carlo estimates of the IDS by eigenvalue counting on `[1, L]`.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::model::{build_hamiltonian, sample_potential, DisorderParameters};
use crate::spectral::count_below_many;

/// Smallest matrix dimension accepted by [`ids_empirical`].
pub const MIN_MATRIX_DIM: usize = 1000;

#[derive(Debug, Clone, PartialEq)]
pub struct IdsEstimate {
    pub x: f64,
    /// Mean over seeds of `#{λ(H_L) < x} / L`.
    pub estimate: f64,
    pub matrix_dim: usize,
    pub num_seeds: usize,
    /// Sample standard deviation over seeds divided by `√num_seeds`;
    /// zero for a single seed.
    pub std_error: f64,
}

/// Seeds `base, base + 1, …, base + count - 1`.
pub fn seed_range(base: u64, count: usize) -> Vec<u64> {
    (0..count as u64).map(|i| base.wrapping_add(i)).collect()
}

/// Counts eigenvalues of `H = -Δ_L + ζV` below each energy, one potential per
/// seed, and averages the per-site fractions over seeds.
///
/// Work is `O(L · |energies| · |seeds|)`. Seeds are processed in parallel and
/// aggregated in seed order, so results do not depend on scheduling.
pub fn ids_empirical(
    p: f64,
    zeta: f64,
    energies: &[f64],
    matrix_dim: usize,
    seeds: &[u64],
) -> Result<Vec<IdsEstimate>> {
    DisorderParameters::new(zeta, p)?;
    if energies.is_empty() {
        return Err(Error::Parameter("at least one energy is required".into()));
    }
    if seeds.is_empty() {
        return Err(Error::Parameter("at least one seed is required".into()));
    }
    if matrix_dim < MIN_MATRIX_DIM {
        return Err(Error::Parameter(format!(
            "matrix dimension must be at least {MIN_MATRIX_DIM}, got {matrix_dim}"
        )));
    }
    if let Some(x) = energies.iter().find(|x| !x.is_finite()) {
        return Err(Error::Parameter(format!("energies must be finite, got {x}")));
    }

    let per_seed: Vec<Vec<usize>> = seeds
        .par_iter()
        .map(|&seed| {
            let v = sample_potential(p, matrix_dim, seed)?;
            let h = build_hamiltonian(&v, zeta);
            Ok(count_below_many(&h, energies))
        })
        .collect::<Result<_>>()?;

    let l = matrix_dim as f64;
    let m = seeds.len() as f64;
    Ok(energies
        .iter()
        .enumerate()
        .map(|(j, &x)| {
            let mean = per_seed.iter().map(|c| c[j] as f64 / l).sum::<f64>() / m;
            let std_error = if seeds.len() > 1 {
                let ss: f64 = per_seed.iter().map(|c| (c[j] as f64 / l - mean).powi(2)).sum();
                (ss / (m - 1.0)).sqrt() / m.sqrt()
            } else {
                0.0
            };
            IdsEstimate {
                x,
                estimate: mean,
                matrix_dim,
                num_seeds: seeds.len(),
                std_error,
            }
        })
        .collect())
}

/// `(1 - p, 4 + ζ - x)`: the parameters at which
/// `I_{p,ζ}(x) = 1 - I_{1-p,ζ}(4 + ζ - x)`.
pub fn symmetry_dual(p: f64, zeta: f64, x: f64) -> (f64, f64) {
    (1.0 - p, 4.0 + zeta - x)
}
