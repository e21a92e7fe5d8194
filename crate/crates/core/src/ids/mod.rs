//! Integrated density of states: closed forms, bounds and Monte Carlo.

pub mod closed;
pub mod empirical;
pub mod energy;

pub use closed::{
    ids_closed_finite, ids_closed_series, ids_series_from_beta, ids_upper_bound_series, series_jump_points, SeriesValue,
};
pub use empirical::{ids_empirical, seed_range, symmetry_dual, IdsEstimate, MIN_MATRIX_DIM};
pub use energy::{
    beta, enumerate_rn, n_of_zeta, zeta_critical_bound, BoundRule, CriticalBound, RationalEnergy, DEFAULT_B_MAX,
};
