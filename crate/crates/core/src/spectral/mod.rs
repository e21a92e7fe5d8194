//! Spectral machinery for symmetric tridiagonal operators.

pub mod chebyshev;
pub mod edge;
pub mod sturm;

pub use chebyshev::{chebyshev_u, chebyshev_u_pair, dirichlet_eigenvalue};
pub use edge::{
    charpoly_edge, f_t, f_t_sup_bound, mu_lower_bound, solve_all_mu, solve_mu, EdgePerturbedSpec, ThetaSolution,
};
pub use sturm::{all_eigenvalues, count_below, count_below_many, eigenvalues_bisection};
