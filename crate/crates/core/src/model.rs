//! Bernoulli potentials and the operators built from them.
//!
//! Every operator in the crate is a [`SymTridiagonal`]. Direct sums are
//! encoded by zero off-diagonal entries between blocks, so one counting
//! kernel handles the Hamiltonian and both comparison operators.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{check_probability, Error, Result};

/// Parameters that produced a sampled potential.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SampleSource {
    pub p: f64,
    pub seed: u64,
}

/// A finite 0/1 potential `V(1..=len)`.
#[derive(Debug, Clone, PartialEq)]
pub struct PotentialRealization {
    values: Vec<u8>,
    source: Option<SampleSource>,
}

impl PotentialRealization {
    /// Wraps a hand-written potential. Every entry must be 0 or 1.
    pub fn from_values(values: Vec<u8>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::Parameter("potential must have at least one site".into()));
        }
        if let Some(bad) = values.iter().find(|&&v| v > 1) {
            return Err(Error::Parameter(format!(
                "potential values must be 0 or 1, found {bad}"
            )));
        }
        Ok(Self { values, source: None })
    }

    pub fn values(&self) -> &[u8] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `(p, seed)` when the realization came from [`sample_potential`].
    pub fn source(&self) -> Option<SampleSource> {
        self.source
    }

    pub fn count_ones(&self) -> usize {
        self.values.iter().filter(|&&v| v == 1).count()
    }

    pub fn mean(&self) -> f64 {
        self.count_ones() as f64 / self.len() as f64
    }

    /// The potential `1 - V`, which is Bernoulli(1 - p) when `V` is Bernoulli(p).
    pub fn complement(&self) -> Self {
        Self {
            values: self.values.iter().map(|&v| 1 - v).collect(),
            source: self.source.map(|s| SampleSource {
                p: 1.0 - s.p,
                seed: s.seed,
            }),
        }
    }

    /// The prefix ending at the last site with `V = 1`, i.e. the window
    /// `[1, L_n]`. `None` for the all-zero potential.
    pub fn truncated_at_last_one(&self) -> Option<Self> {
        let last = self.values.iter().rposition(|&v| v == 1)?;
        Some(Self {
            values: self.values[..=last].to_vec(),
            source: self.source,
        })
    }
}

/// Draws `length` i.i.d. Bernoulli(p) sites from a ChaCha8 stream seeded by `seed`.
pub fn sample_potential(p: f64, length: usize, seed: u64) -> Result<PotentialRealization> {
    check_probability(p)?;
    if length == 0 {
        return Err(Error::Parameter("length must be at least 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let values = (0..length).map(|_| u8::from(rng.random_bool(p))).collect();
    Ok(PotentialRealization {
        values,
        source: Some(SampleSource { p, seed }),
    })
}

/// Positions `L_k` of the ones (1-based) and the run lengths `Y_k` of zeros
/// preceding each of them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GapDecomposition {
    positions: Vec<usize>,
    gaps: Vec<usize>,
}

impl GapDecomposition {
    /// Builds a decomposition from gap lengths alone; positions follow from
    /// `L_1 = Y_1 + 1`, `L_{k+1} = L_k + Y_{k+1} + 1`.
    pub fn from_gaps(gaps: Vec<usize>) -> Result<Self> {
        if gaps.is_empty() {
            return Err(Error::EmptyDecomposition);
        }
        let positions = gaps
            .iter()
            .scan(0usize, |pos, &y| {
                *pos += y + 1;
                Some(*pos)
            })
            .collect();
        Ok(Self { positions, gaps })
    }

    pub fn positions(&self) -> &[usize] {
        &self.positions
    }

    pub fn gaps(&self) -> &[usize] {
        &self.gaps
    }

    /// Number of ones, `n`.
    pub fn num_ones(&self) -> usize {
        self.gaps.len()
    }

    /// `L_n`, the position of the last one.
    pub fn window_len(&self) -> usize {
        *self.positions.last().expect("decomposition is never empty")
    }

    /// The potential on `[1, L_n]` described by this decomposition.
    pub fn reconstruct(&self) -> Vec<u8> {
        let mut v = Vec::with_capacity(self.window_len());
        for &y in &self.gaps {
            v.extend(std::iter::repeat_n(0u8, y));
            v.push(1);
        }
        v
    }
}

/// Splits a potential into its ones and the zero runs between them.
/// Zeros after the last one are ignored.
pub fn gap_decomposition(v: &PotentialRealization) -> Result<GapDecomposition> {
    let mut positions = Vec::new();
    let mut gaps = Vec::new();
    let mut run = 0usize;
    for (j, &bit) in v.values().iter().enumerate() {
        if bit == 1 {
            positions.push(j + 1);
            gaps.push(run);
            run = 0;
        } else {
            run += 1;
        }
    }
    if positions.is_empty() {
        return Err(Error::EmptyDecomposition);
    }
    Ok(GapDecomposition { positions, gaps })
}

/// Symmetric tridiagonal matrix stored as its diagonal and first off-diagonal.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct SymTridiagonal {
    diag: Vec<f64>,
    offdiag: Vec<f64>,
}

impl SymTridiagonal {
    pub fn new(diag: Vec<f64>, offdiag: Vec<f64>) -> Result<Self> {
        let expected = diag.len().saturating_sub(1);
        if offdiag.len() != expected {
            return Err(Error::Parameter(format!(
                "off-diagonal must have {expected} entries for dimension {}, got {}",
                diag.len(),
                offdiag.len()
            )));
        }
        Ok(Self { diag, offdiag })
    }

    /// The Dirichlet Laplacian `-Δ_n`: diagonal 2, off-diagonal -1.
    pub fn laplacian(n: usize) -> Self {
        Self {
            diag: vec![2.0; n],
            offdiag: vec![-1.0; n.saturating_sub(1)],
        }
    }

    /// `-Δ_{n+2} + t A_{n+2}`: the Laplacian with `t` added to both corners.
    pub fn edge_perturbed_laplacian(n: usize, t: f64) -> Self {
        let mut m = Self::laplacian(n + 2);
        m.diag[0] += t;
        m.diag[n + 1] += t;
        m
    }

    /// Block-diagonal direct sum, joined by zero couplings.
    pub fn direct_sum<'a, I>(blocks: I) -> Self
    where
        I: IntoIterator<Item = &'a SymTridiagonal>,
    {
        let mut out = Self::default();
        for block in blocks {
            out.append_block(block);
        }
        out
    }

    fn append_block(&mut self, block: &SymTridiagonal) {
        if block.dim() == 0 {
            return;
        }
        if self.dim() > 0 {
            self.offdiag.push(0.0);
        }
        self.diag.extend_from_slice(&block.diag);
        self.offdiag.extend_from_slice(&block.offdiag);
    }

    pub fn dim(&self) -> usize {
        self.diag.len()
    }

    pub fn diag(&self) -> &[f64] {
        &self.diag
    }

    pub fn offdiag(&self) -> &[f64] {
        &self.offdiag
    }

    /// Deletes every row and column whose index `i` (0-based) satisfies
    /// `remove(i)`. The result is again tridiagonal because deleted rows only
    /// separate entries that were never coupled.
    pub fn principal_submatrix<F: Fn(usize) -> bool>(&self, remove: F) -> Self {
        let mut diag = Vec::with_capacity(self.dim());
        let mut offdiag = Vec::with_capacity(self.dim());
        let mut prev_kept: Option<usize> = None;
        for i in 0..self.dim() {
            if remove(i) {
                continue;
            }
            if let Some(j) = prev_kept {
                offdiag.push(if j + 1 == i { self.offdiag[j] } else { 0.0 });
            }
            diag.push(self.diag[i]);
            prev_kept = Some(i);
        }
        Self { diag, offdiag }
    }

    /// `[min(d) - 2 max|e|, max(d) + 2 max|e|]`, which contains the spectrum.
    pub fn gershgorin_bounds(&self) -> (f64, f64) {
        let emax = self.offdiag.iter().fold(0.0f64, |m, e| m.max(e.abs()));
        let dmin = self.diag.iter().copied().fold(f64::INFINITY, f64::min);
        let dmax = self.diag.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        (dmin - 2.0 * emax, dmax + 2.0 * emax)
    }

    /// `α T + β I`.
    pub fn affine(&self, alpha: f64, beta: f64) -> Self {
        Self {
            diag: self.diag.iter().map(|d| alpha * d + beta).collect(),
            offdiag: self.offdiag.iter().map(|e| alpha * e).collect(),
        }
    }
}

/// Disorder strength and Bernoulli parameter.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DisorderParameters {
    zeta: f64,
    p: f64,
}

impl DisorderParameters {
    pub fn new(zeta: f64, p: f64) -> Result<Self> {
        check_probability(p)?;
        if !(zeta > 0.0 && zeta.is_finite()) {
            return Err(Error::Parameter(format!("zeta must be positive, got {zeta}")));
        }
        Ok(Self { zeta, p })
    }

    pub fn zeta(&self) -> f64 {
        self.zeta
    }

    pub fn p(&self) -> f64 {
        self.p
    }
}

/// `H = -Δ_L + ζ V` with Dirichlet truncation at both ends.
pub fn build_hamiltonian(v: &PotentialRealization, zeta: f64) -> SymTridiagonal {
    let diag = v.values().iter().map(|&b| 2.0 + zeta * f64::from(b)).collect();
    SymTridiagonal {
        diag,
        offdiag: vec![-1.0; v.len() - 1],
    }
}

/// `⊕_i -Δ_{Y_i}` over the nonzero gaps: the matrix left after deleting every
/// site with `V = 1` from the Hamiltonian on `[1, L_n]`.
pub fn build_lower_comparison(g: &GapDecomposition) -> Result<SymTridiagonal> {
    let blocks: Vec<_> = g
        .gaps()
        .iter()
        .filter(|&&y| y > 0)
        .map(|&y| SymTridiagonal::laplacian(y))
        .collect();
    if blocks.is_empty() {
        return Err(Error::EmptyOperator);
    }
    Ok(SymTridiagonal::direct_sum(&blocks))
}

/// The decoupled operator of the upper bracketing bound.
#[derive(Debug, Clone, PartialEq)]
pub struct UpperComparison {
    /// `⊕_{i=2..n} (-Δ_{Y_i+2} + t A_{Y_i+2})` with `t = ζ/2 - 1`.
    pub matrix: SymTridiagonal,
    /// Corner perturbation `t`.
    pub t: f64,
    /// Dimension `Y_1 + 2` of the boundary term that the matrix omits.
    pub boundary_dim: usize,
}

/// Assembles the blocks `-Δ_{Y_i+2} + (ζ/2 - 1) A_{Y_i+2}` for `i ≥ 2`.
///
/// The boundary term is never built; only its dimension is reported, which
/// is all the counting bound `#{λ(H) < x} ≤ #{λ(upper) < x} + Y_1 + 2` needs.
pub fn build_upper_comparison(g: &GapDecomposition, zeta: f64) -> Result<UpperComparison> {
    if zeta.is_nan() || zeta < 8.0 {
        return Err(Error::Domain(format!("upper comparison needs zeta >= 8, got {zeta}")));
    }
    if g.num_ones() < 2 {
        return Err(Error::InsufficientBlocks(g.num_ones()));
    }
    let t = zeta / 2.0 - 1.0;
    let blocks: Vec<_> = g.gaps()[1..]
        .iter()
        .map(|&y| SymTridiagonal::edge_perturbed_laplacian(y, t))
        .collect();
    Ok(UpperComparison {
        matrix: SymTridiagonal::direct_sum(&blocks),
        t,
        boundary_dim: g.gaps()[0] + 2,
    })
}
