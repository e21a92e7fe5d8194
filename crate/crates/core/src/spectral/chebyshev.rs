//! Chebyshev polynomials of the second kind and the closed-form spectrum of
//! the Dirichlet Laplacian.

use std::f64::consts::PI;

use crate::error::{Error, Result};

/// `U_n(x)` by the forward recurrence `U_{m+1} = 2x U_m - U_{m-1}`,
/// `U_0 = 1`, `U_1 = 2x`.
pub fn chebyshev_u(n: usize, x: f64) -> f64 {
    let (mut prev, mut cur) = (1.0, 2.0 * x);
    if n == 0 {
        return prev;
    }
    for _ in 1..n {
        let next = 2.0 * x * cur - prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// `(U_n(x), U_{n+1}(x))` from a single recurrence sweep.
pub fn chebyshev_u_pair(n: usize, x: f64) -> (f64, f64) {
    let (mut prev, mut cur) = (1.0, 2.0 * x);
    for _ in 0..n {
        let next = 2.0 * x * cur - prev;
        prev = cur;
        cur = next;
    }
    (prev, cur)
}

/// `λ_k(-Δ_n) = 4 sin²(πk / (2(n+1)))`, `1 ≤ k ≤ n`.
pub fn dirichlet_eigenvalue(n: usize, k: usize) -> Result<f64> {
    if k < 1 || k > n {
        return Err(Error::Index { index: k, len: n });
    }
    let s = (PI * k as f64 / (2.0 * (n + 1) as f64)).sin();
    Ok(4.0 * s * s)
}
