//! Truncated Fock-space matrices for sharp and fuzzy ladder operators,
//! number operators and Hamiltonians, fuzzy vacua and Fock states, and a
//! deterministic Hermitian eigensolver front end.
//!
//! Operator identities on a truncated space hold on an *interior block*: the
//! trailing rows and columns carry truncation artifacts, so identities are
//! asserted on the leading (N-m)×(N-m) block with a margin m matching the
//! ladder order of the expression (m = 2 for a single commutator).

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use thiserror::Error;

use crate::branch;
use crate::moments::FuzzyCoefficients;

/// Default truncation dimension.
pub const DEFAULT_DIM: usize = 64;
/// Default bound on the vacuum truncation tail |α_{N-1}|² + |α_{N-2}|².
pub const DEFAULT_TAIL_TOL: f64 = 1e-12;

#[derive(Debug, Error)]
pub enum FockError {
    #[error("dimension {0} too small (need at least 3)")]
    DimTooSmall(usize),
    #[error("frequency ratio must be nonzero")]
    ZeroRatio,
    #[error("frequency ratio must be positive (got {0})")]
    NonPositiveRatio(f64),
    #[error("commutation function C = {0:.3e} is numerically degenerate")]
    DegenerateC(f64),
    #[error("vacuum series does not converge: |v/u| = {0} >= 1")]
    NonConvergentSeries(f64),
    #[error("truncation tail {tail:.3e} exceeds {tail_tol:.3e}; suggest dim >= {suggested}")]
    TailTooFat {
        tail: f64,
        tail_tol: f64,
        suggested: usize,
    },
    #[error("state of excitation {n} does not fit in dimension {dim}")]
    TruncationOverflow { n: usize, dim: usize },
    #[error("matrix is not Hermitian (max deviation {0:.3e})")]
    NotHermitian(f64),
    #[error("dimension mismatch: {0} vs {1}")]
    DimMismatch(usize, usize),
    #[error("requested {count} levels, but only {max} are interior-converged at dim {dim}")]
    CountTooLarge { count: usize, max: usize, dim: usize },
    #[error("zero vector cannot be normalized")]
    ZeroVector,
    #[error("non-finite parameter in Hamiltonian spec")]
    NonFiniteHamiltonian,
}

/// â in the sharp Fock basis: √n on the first superdiagonal.
fn annihilator(dim: usize) -> DMatrix<Complex64> {
    let mut a = DMatrix::zeros(dim, dim);
    for n in 1..dim {
        a[(n - 1, n)] = Complex64::new((n as f64).sqrt(), 0.0);
    }
    a
}

/// Sharp ladder pair with the canonical quadratures (ℏ = m = ω = 1).
#[derive(Debug, Clone)]
pub struct SharpLadder {
    dim: usize,
    a: DMatrix<Complex64>,
    a_dag: DMatrix<Complex64>,
}

impl SharpLadder {
    pub fn new(dim: usize) -> Result<Self, FockError> {
        if dim < 3 {
            return Err(FockError::DimTooSmall(dim));
        }
        let a = annihilator(dim);
        let a_dag = a.adjoint();
        Ok(SharpLadder { dim, a, a_dag })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn a(&self) -> &DMatrix<Complex64> {
        &self.a
    }

    pub fn a_dag(&self) -> &DMatrix<Complex64> {
        &self.a_dag
    }

    /// q̂ = (â + â†)/√2.
    pub fn position(&self) -> DMatrix<Complex64> {
        (&self.a + &self.a_dag) * Complex64::new(1.0 / 2.0_f64.sqrt(), 0.0)
    }

    /// p̂ = i(â† - â)/√2.
    pub fn momentum(&self) -> DMatrix<Complex64> {
        (&self.a_dag - &self.a) * Complex64::new(0.0, 1.0 / 2.0_f64.sqrt())
    }
}

/// Convenience constructor mirroring the subcommand naming.
pub fn sharp_ladder(dim: usize) -> Result<SharpLadder, FockError> {
    SharpLadder::new(dim)
}

/// ½(√r - 1/√r): the commutator [â_ω, â_ω′] as a function of r = ω′/ω.
pub fn cross_commutator_value(r: f64) -> Result<f64, FockError> {
    if !r.is_finite() || r <= 0.0 {
        return Err(FockError::NonPositiveRatio(r));
    }
    Ok(0.5 * (r.sqrt() - 1.0 / r.sqrt()))
}

/// Annihilator of frequency ω′ = r·ω expressed in the ω Fock basis:
///
/// ```text
/// â_{rω} = (1/√r)·[â + ((r-1)/2)(â† + â)].
/// ```
///
/// Negative r is allowed (annihilation turns into creation); 1/√r then picks
/// up the branch factor -i.
pub fn annihilator_at_frequency(dim: usize, r: f64) -> Result<DMatrix<Complex64>, FockError> {
    if r == 0.0 || !r.is_finite() {
        return Err(FockError::ZeroRatio);
    }
    let sl = SharpLadder::new(dim)?;
    let x_half = Complex64::new(0.5 * (r - 1.0), 0.0);
    let sum = &sl.a + &sl.a_dag;
    let inner = &sl.a + sum * x_half;
    Ok(inner * branch::inv_sqrt_real(r))
}

/// Sharp and fuzzy ladder matrices sharing one truncation.
#[derive(Debug, Clone)]
pub struct LadderSet {
    dim: usize,
    a_sharp: DMatrix<Complex64>,
    a_sharp_dag: DMatrix<Complex64>,
    a_fuzzy: DMatrix<Complex64>,
    a_fuzzy_dag: DMatrix<Complex64>,
    coeffs: FuzzyCoefficients,
    hbar_omega: f64,
}

impl LadderSet {
    pub fn new(dim: usize, coeffs: FuzzyCoefficients) -> Result<Self, FockError> {
        if dim < 3 {
            return Err(FockError::DimTooSmall(dim));
        }
        let a_sharp = annihilator(dim);
        let a_sharp_dag = a_sharp.adjoint();
        let a_fuzzy = &a_sharp * coeffs.u + &a_sharp_dag * coeffs.v;
        let a_fuzzy_dag = a_fuzzy.adjoint();
        Ok(LadderSet {
            dim,
            a_sharp,
            a_sharp_dag,
            a_fuzzy,
            a_fuzzy_dag,
            coeffs,
            hbar_omega: 1.0,
        })
    }

    pub fn with_hbar_omega(mut self, hbar_omega: f64) -> Self {
        self.hbar_omega = hbar_omega;
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn a_sharp(&self) -> &DMatrix<Complex64> {
        &self.a_sharp
    }

    pub fn a_sharp_dag(&self) -> &DMatrix<Complex64> {
        &self.a_sharp_dag
    }

    pub fn a_fuzzy(&self) -> &DMatrix<Complex64> {
        &self.a_fuzzy
    }

    pub fn a_fuzzy_dag(&self) -> &DMatrix<Complex64> {
        &self.a_fuzzy_dag
    }

    pub fn coeffs(&self) -> &FuzzyCoefficients {
        &self.coeffs
    }

    pub fn hbar_omega(&self) -> f64 {
        self.hbar_omega
    }

    /// N̄ = C⁻¹·a̅†a̅, the operator whose spectrum counts fuzzy excitations.
    pub fn number_operator(&self) -> Result<DMatrix<Complex64>, FockError> {
        let c = self.coeffs.c;
        if c.abs() <= 1e-12 {
            return Err(FockError::DegenerateC(c));
        }
        Ok(&self.a_fuzzy_dag * &self.a_fuzzy * Complex64::new(1.0 / c, 0.0))
    }

    /// Oscillator Hamiltonian, sharp or fuzzy, with an optional linear drive:
    ///
    /// ```text
    /// H  = ℏω(â†â + 1/2)   - λ(â† + â)
    /// H̄  = ℏω(a̅†a̅ + C/2)  - λ(a̅† + a̅)
    /// ```
    pub fn hamiltonian(&self, hspec: &HamiltonianSpec) -> Result<DMatrix<Complex64>, FockError> {
        if !(hspec.hbar_omega.is_finite() && hspec.drive.is_finite()) || hspec.hbar_omega <= 0.0 {
            return Err(FockError::NonFiniteHamiltonian);
        }
        let id = DMatrix::<Complex64>::identity(self.dim, self.dim);
        let hw = Complex64::new(hspec.hbar_omega, 0.0);
        let lam = Complex64::new(hspec.drive, 0.0);
        let h = if hspec.fuzzy {
            let quad =
                &self.a_fuzzy_dag * &self.a_fuzzy + id * Complex64::new(0.5 * self.coeffs.c, 0.0);
            let lin = &self.a_fuzzy_dag + &self.a_fuzzy;
            quad * hw - lin * lam
        } else {
            let quad = &self.a_sharp_dag * &self.a_sharp + id * Complex64::new(0.5, 0.0);
            let lin = &self.a_sharp_dag + &self.a_sharp;
            quad * hw - lin * lam
        };
        Ok(h)
    }
}

/// Builds the fuzzy ladder matrices for given coefficients.
pub fn fuzzy_ladder(dim: usize, coeffs: FuzzyCoefficients) -> Result<LadderSet, FockError> {
    LadderSet::new(dim, coeffs)
}

/// Oscillator Hamiltonian parameters. `drive` is the strength λ of the
/// linear term -λ(a† + a).
#[derive(Debug, Clone, Copy)]
pub struct HamiltonianSpec {
    pub hbar_omega: f64,
    pub drive: f64,
    pub fuzzy: bool,
}

impl Default for HamiltonianSpec {
    fn default() -> Self {
        HamiltonianSpec {
            hbar_omega: 1.0,
            drive: 0.0,
            fuzzy: true,
        }
    }
}

/// A normalized state vector over the sharp Fock basis |0⟩..|N-1⟩.
#[derive(Debug, Clone)]
pub struct FockVector {
    dim: usize,
    coeffs: DVector<Complex64>,
    label: String,
}

impl FockVector {
    /// Normalizes the given coefficients; errors on the zero vector.
    pub fn new(coeffs: DVector<Complex64>, label: impl Into<String>) -> Result<Self, FockError> {
        let norm = coeffs.norm();
        if norm == 0.0 || !norm.is_finite() {
            return Err(FockError::ZeroVector);
        }
        Ok(FockVector {
            dim: coeffs.len(),
            coeffs: coeffs / Complex64::new(norm, 0.0),
            label: label.into(),
        })
    }

    /// The sharp basis state |n⟩.
    pub fn basis_state(dim: usize, n: usize) -> Result<Self, FockError> {
        if n >= dim {
            return Err(FockError::TruncationOverflow { n, dim });
        }
        let mut c = DVector::zeros(dim);
        c[n] = Complex64::new(1.0, 0.0);
        FockVector::new(c, format!("|{n}>"))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn coeffs(&self) -> &DVector<Complex64> {
        &self.coeffs
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// Truncation tail |α_{N-1}|² + |α_{N-2}|².
    pub fn tail(&self) -> f64 {
        self.coeffs[self.dim - 1].norm_sqr() + self.coeffs[self.dim - 2].norm_sqr()
    }

    /// ⟨self|other⟩.
    pub fn overlap(&self, other: &FockVector) -> Result<Complex64, FockError> {
        if self.dim != other.dim {
            return Err(FockError::DimMismatch(self.dim, other.dim));
        }
        Ok(self.coeffs.dotc(&other.coeffs))
    }
}

/// Per-coefficient ratio α_{2k}/α₀ of the fuzzy vacuum from the product
/// formula
///
/// ```text
/// α_{2k}/α₀ = (-v/u)^k · √(∏_{ℓ=1}^{k} (2ℓ-1)/(2ℓ)),
/// ```
///
/// the closed-form counterpart of the two-term recursion used by
/// [`fuzzy_vacuum`].
pub fn vacuum_amplitude_ratio(coeffs: &FuzzyCoefficients, k: usize) -> Complex64 {
    let r = -coeffs.v / coeffs.u;
    let mut prod = 1.0_f64;
    for l in 1..=k {
        prod *= (2.0 * l as f64 - 1.0) / (2.0 * l as f64);
    }
    r.powu(k as u32) * prod.sqrt()
}

/// Dimension that brings the vacuum tail below `tail_tol`, from the
/// geometric decay ρ = |v/u| of the coefficient ratios.
pub fn suggested_dim(coeffs: &FuzzyCoefficients, tail_tol: f64) -> usize {
    let rho = coeffs.decay_ratio();
    if rho <= 0.0 {
        return 8;
    }
    if rho >= 1.0 {
        return usize::MAX;
    }
    let k = (tail_tol.ln() / rho.ln()).ceil().max(1.0) as usize;
    2 * k + 8
}

/// Solves a̅|0̄⟩ = 0 on the truncated basis by the two-term recursion
/// u·α_{n+1}√(n+1) + v·α_{n-1}√n = 0 with α₁ = 0; odd coefficients vanish
/// identically and the global phase is fixed by α₀ > 0.
pub fn fuzzy_vacuum(
    coeffs: &FuzzyCoefficients,
    dim: usize,
    tail_tol: f64,
) -> Result<FockVector, FockError> {
    if dim < 3 {
        return Err(FockError::DimTooSmall(dim));
    }
    let rho = coeffs.decay_ratio();
    if !rho.is_finite() || rho >= 1.0 {
        return Err(FockError::NonConvergentSeries(rho));
    }
    let ratio = -coeffs.v / coeffs.u;
    let mut c = DVector::<Complex64>::zeros(dim);
    c[0] = Complex64::new(1.0, 0.0);
    let mut k = 1usize;
    while 2 * k < dim {
        let n = 2 * k;
        c[n] = c[n - 2] * ratio * ((n as f64 - 1.0) / n as f64).sqrt();
        k += 1;
    }
    let v = FockVector::new(c, "fuzzy vacuum")?;
    let tail = v.tail();
    if tail > tail_tol {
        return Err(FockError::TailTooFat {
            tail,
            tail_tol,
            suggested: suggested_dim(coeffs, tail_tol),
        });
    }
    Ok(v)
}

/// |n̄⟩ = normalize((a̅†)ⁿ |0̄⟩).
pub fn fuzzy_fock_state(
    n: usize,
    vac: &FockVector,
    ls: &LadderSet,
) -> Result<FockVector, FockError> {
    if vac.dim() != ls.dim() {
        return Err(FockError::DimMismatch(vac.dim(), ls.dim()));
    }
    if 2 * n + 4 > ls.dim() {
        return Err(FockError::TruncationOverflow { n, dim: ls.dim() });
    }
    let mut v = vac.coeffs().clone();
    for _ in 0..n {
        v = ls.a_fuzzy_dag() * v;
    }
    FockVector::new(v, format!("fuzzy |{n}>"))
}

fn hermiticity_deviation(h: &DMatrix<Complex64>) -> f64 {
    let adj = h.adjoint();
    (h - adj).iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// Eigenvalues and eigenvectors of a Hermitian matrix, ascending, with
/// deterministic tie-breaking (even-parity-dominant vectors first) and a
/// fixed phase convention (largest component real positive).
pub fn eigen_system(h: &DMatrix<Complex64>) -> Result<(Vec<f64>, DMatrix<Complex64>), FockError> {
    let dev = hermiticity_deviation(h);
    if dev > 1e-10 {
        return Err(FockError::NotHermitian(dev));
    }
    let es = h.clone().symmetric_eigen();
    let n = h.nrows();
    let parity_score = |col: usize| -> f64 {
        let mut even = 0.0;
        let mut odd = 0.0;
        for i in 0..n {
            let w = es.eigenvectors[(i, col)].norm_sqr();
            if i % 2 == 0 {
                even += w;
            } else {
                odd += w;
            }
        }
        even - odd
    };
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| {
        let (vi, vj) = (es.eigenvalues[i], es.eigenvalues[j]);
        if (vi - vj).abs() < 1e-12 {
            parity_score(j)
                .partial_cmp(&parity_score(i))
                .unwrap_or(std::cmp::Ordering::Equal)
        } else {
            vi.partial_cmp(&vj).unwrap()
        }
    });
    let values: Vec<f64> = order.iter().map(|&i| es.eigenvalues[i]).collect();
    let mut vectors = DMatrix::<Complex64>::zeros(n, n);
    for (dst, &src) in order.iter().enumerate() {
        let mut best = 0;
        for i in 0..n {
            if es.eigenvectors[(i, src)].norm() > es.eigenvectors[(best, src)].norm() {
                best = i;
            }
        }
        let pivot = es.eigenvectors[(best, src)];
        let phase = if pivot.norm() > 0.0 {
            pivot.conj() / Complex64::new(pivot.norm(), 0.0)
        } else {
            Complex64::new(1.0, 0.0)
        };
        for i in 0..n {
            vectors[(i, dst)] = es.eigenvectors[(i, src)] * phase;
        }
    }
    Ok((values, vectors))
}

/// The `count` lowest eigenvalues of a Hermitian matrix — only levels deep
/// inside the truncation window (count ≤ dim/2) count as converged.
pub fn spectrum(h: &DMatrix<Complex64>, count: usize) -> Result<Vec<f64>, FockError> {
    let dim = h.nrows();
    if count > dim / 2 {
        return Err(FockError::CountTooLarge {
            count,
            max: dim / 2,
            dim,
        });
    }
    let (values, _) = eigen_system(h)?;
    Ok(values.into_iter().take(count).collect())
}

/// [A, B] = AB - BA.
pub fn commutator(a: &DMatrix<Complex64>, b: &DMatrix<Complex64>) -> DMatrix<Complex64> {
    a * b - b * a
}

/// Leading (N-margin)×(N-margin) block.
pub fn interior(m: &DMatrix<Complex64>, margin: usize) -> DMatrix<Complex64> {
    let k = m.nrows().saturating_sub(margin);
    m.view((0, 0), (k, k)).clone_owned()
}

/// Largest entry magnitude.
pub fn max_abs(m: &DMatrix<Complex64>) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// Max entry deviation of the interior block of `m` from `scale`·Identity.
pub fn interior_deviation_from_scaled_identity(
    m: &DMatrix<Complex64>,
    scale: Complex64,
    margin: usize,
) -> f64 {
    let k = m.nrows().saturating_sub(margin);
    let mut worst = 0.0f64;
    for i in 0..k {
        for j in 0..k {
            let want = if i == j {
                scale
            } else {
                Complex64::new(0.0, 0.0)
            };
            worst = worst.max((m[(i, j)] - want).norm());
        }
    }
    worst
}

/// Max entry deviation between interior blocks of two matrices.
pub fn interior_deviation(a: &DMatrix<Complex64>, b: &DMatrix<Complex64>, margin: usize) -> f64 {
    let k = a.nrows().saturating_sub(margin);
    let mut worst = 0.0f64;
    for i in 0..k {
        for j in 0..k {
            worst = worst.max((a[(i, j)] - b[(i, j)]).norm());
        }
    }
    worst
}
