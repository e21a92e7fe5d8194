//! Rational energies `4 sin²(πa/(2b))`, the map `β`, critical-disorder
//! bounds and the sets `R_n`.

use std::cmp::Ordering;
use std::f64::consts::PI;

use crate::error::{Error, Result};

/// `β(x) = π / (2 arcsin(√x / 2))` for `0 < x < 4`.
pub fn beta(x: f64) -> Result<f64> {
    if !(x > 0.0 && x < 4.0) {
        return Err(Error::Domain(format!("beta is defined on (0, 4), got {x}")));
    }
    Ok(PI / (2.0 * (0.5 * x.sqrt()).asin()))
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// `β⁻¹(b/a) = 4 sin²(πa/(2b))`, carried as the reduced pair `(a, b)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RationalEnergy {
    a: u64,
    b: u64,
    value: f64,
}

impl RationalEnergy {
    /// Reduces `(a, b)` by their gcd. Requires `1 ≤ a < b`.
    pub fn new(a: u64, b: u64) -> Result<Self> {
        if a == 0 || a >= b {
            return Err(Error::Domain(format!(
                "rational energy needs 1 <= a < b, got a={a}, b={b}"
            )));
        }
        let g = gcd(a, b);
        let (a, b) = (a / g, b / g);
        let s = (PI * a as f64 / (2.0 * b as f64)).sin();
        Ok(Self {
            a,
            b,
            value: 4.0 * s * s,
        })
    }

    pub fn a(&self) -> u64 {
        self.a
    }

    pub fn b(&self) -> u64 {
        self.b
    }

    pub fn value(&self) -> f64 {
        self.value
    }

    /// Exact ordering by `a/b`, which orders the energies.
    pub fn cmp_value(&self, other: &Self) -> Ordering {
        (u128::from(self.a) * u128::from(other.b)).cmp(&(u128::from(other.a) * u128::from(self.b)))
    }
}

/// Which estimate produced a [`CriticalBound`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundRule {
    /// `max(8, 4b/π + 4)`.
    General,
    /// `a = 1`: bound 4.
    UnitNumerator,
    /// `a = b - 1`: bound equal to the energy itself.
    AdjacentNumerator,
}

/// Upper bound on the critical disorder `ζ_c(x)` at a rational energy.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CriticalBound {
    pub energy: RationalEnergy,
    pub bound: f64,
    pub rule: BoundRule,
}

/// The smallest applicable bound among the general one and the two
/// special-family ones.
pub fn zeta_critical_bound(e: &RationalEnergy) -> CriticalBound {
    let mut best = (f64::max(8.0, 4.0 * e.b as f64 / PI + 4.0), BoundRule::General);
    if e.a == 1 && 4.0 < best.0 {
        best = (4.0, BoundRule::UnitNumerator);
    }
    if e.a + 1 == e.b && e.value < best.0 {
        best = (e.value, BoundRule::AdjacentNumerator);
    }
    CriticalBound {
        energy: *e,
        bound: best.0,
        rule: best.1,
    }
}

/// Absolute slack when flooring `π(ζ - 4)/4`, so that `ζ = 4n/π + 4` maps
/// back to `n` despite rounding.
const N_OF_ZETA_SNAP: f64 = 1e-9;

/// `n(ζ) = ⌊π(ζ - 4)/4⌋` for `ζ ≥ 8`.
pub fn n_of_zeta(zeta: f64) -> Result<usize> {
    if zeta.is_nan() || zeta < 8.0 {
        return Err(Error::Domain(format!("n(zeta) needs zeta >= 8, got {zeta}")));
    }
    Ok((PI * (zeta - 4.0) / 4.0 + N_OF_ZETA_SNAP).floor() as usize)
}

/// Default cutoff for the two infinite families of `R_n`.
pub const DEFAULT_B_MAX: u64 = 60;

/// `{(a,b): a < b ≤ n} ∪ {(1,b): 2 ≤ b ≤ b_max} ∪ {(b-1,b): 2 ≤ b ≤ b_max}`,
/// reduced, deduplicated and sorted by energy.
pub fn enumerate_rn(n: u64, b_max: u64) -> Vec<RationalEnergy> {
    let mut out = Vec::new();
    for b in 2..=n {
        for a in 1..b {
            if gcd(a, b) == 1 {
                out.push(RationalEnergy::new(a, b).expect("a < b"));
            }
        }
    }
    for b in 2..=b_max {
        out.push(RationalEnergy::new(1, b).expect("1 < b"));
        out.push(RationalEnergy::new(b - 1, b).expect("b - 1 < b"));
    }
    out.sort_by(RationalEnergy::cmp_value);
    out.dedup_by(|x, y| x.a == y.a && x.b == y.b);
    out
}
