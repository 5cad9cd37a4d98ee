//! Linear-unitary and antilinear-antiunitary transformations of operators,
//! with invariance verdicts for Hamiltonians.
//!
//! A linear-unitary (LU) transform acts as A ↦ U·A·U†. An antiunitary (AA)
//! transform conjugates the operand entrywise first: A ↦ U·conj(A)·U†. Time
//! reversal is represented by plain conjugation in the sharp Fock basis
//! (whose position wavefunctions are real), parity by the diagonal matrix
//! (-1)ⁿ.

use nalgebra::DMatrix;
use num_complex::Complex64;
use thiserror::Error;

use crate::fock;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TransformKind {
    LinearUnitary,
    Antiunitary,
}

#[derive(Debug, Error)]
pub enum SymmetryError {
    #[error("transform matrix is not unitary (max deviation {0:.3e})")]
    NotUnitary(f64),
    #[error("transform matrix must be square")]
    NotSquare,
    #[error("dimension mismatch: transform is {0}, operand is {1}")]
    DimMismatch(usize, usize),
    #[error("tolerance must be positive")]
    NonPositiveTolerance,
}

/// A symmetry operation: a unitary matrix plus the linear/antilinear flag.
#[derive(Debug, Clone)]
pub struct SymmetryTransform {
    kind: TransformKind,
    matrix: DMatrix<Complex64>,
}

impl SymmetryTransform {
    pub fn new(kind: TransformKind, matrix: DMatrix<Complex64>) -> Result<Self, SymmetryError> {
        if matrix.nrows() != matrix.ncols() {
            return Err(SymmetryError::NotSquare);
        }
        let n = matrix.nrows();
        let gram = &matrix.adjoint() * &matrix;
        let dev = fock::interior_deviation_from_scaled_identity(&gram, Complex64::new(1.0, 0.0), 0);
        if dev > 1e-10 {
            return Err(SymmetryError::NotUnitary(dev));
        }
        let _ = n;
        Ok(SymmetryTransform { kind, matrix })
    }

    pub fn kind(&self) -> TransformKind {
        self.kind
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }
}

/// Parity: diag((-1)ⁿ), linear and unitary.
pub fn parity_transform(dim: usize) -> SymmetryTransform {
    let mut m = DMatrix::<Complex64>::zeros(dim, dim);
    for n in 0..dim {
        m[(n, n)] = Complex64::new(if n % 2 == 0 { 1.0 } else { -1.0 }, 0.0);
    }
    SymmetryTransform {
        kind: TransformKind::LinearUnitary,
        matrix: m,
    }
}

/// Time reversal (reversal of motion): entrywise conjugation in the sharp
/// Fock basis, i.e. the antiunitary transform with the identity matrix.
pub fn time_reversal_transform(dim: usize) -> SymmetryTransform {
    SymmetryTransform {
        kind: TransformKind::Antiunitary,
        matrix: DMatrix::identity(dim, dim),
    }
}

/// Applies the transform: U·A·U† (LU) or U·conj(A)·U† (AA).
pub fn transform_operator(
    t: &SymmetryTransform,
    a: &DMatrix<Complex64>,
) -> Result<DMatrix<Complex64>, SymmetryError> {
    if t.dim() != a.nrows() || a.nrows() != a.ncols() {
        return Err(SymmetryError::DimMismatch(t.dim(), a.nrows()));
    }
    let operand = match t.kind {
        TransformKind::LinearUnitary => a.clone(),
        TransformKind::Antiunitary => a.map(|z| z.conj()),
    };
    Ok(&t.matrix * operand * t.matrix.adjoint())
}

/// Invariance verdict for a Hamiltonian under a transform.
#[derive(Debug, Clone, Copy)]
pub struct SymmetryVerdict {
    pub invariant: bool,
    /// spectral norm of 𝒪H𝒪⁻¹ - H on the interior block
    pub deviation: f64,
    pub tolerance: f64,
}

/// Spectral norm (largest singular value) via the largest eigenvalue of A†A.
fn spectral_norm(m: &DMatrix<Complex64>) -> f64 {
    let gram = m.adjoint() * m;
    let eigs = gram.symmetric_eigen().eigenvalues;
    eigs.iter().cloned().fold(0.0f64, f64::max).max(0.0).sqrt()
}

/// Compares H with its transform on the interior block (margin 2) in the
/// spectral norm.
pub fn invariance_verdict(
    t: &SymmetryTransform,
    h: &DMatrix<Complex64>,
    tol: f64,
) -> Result<SymmetryVerdict, SymmetryError> {
    if tol <= 0.0 {
        return Err(SymmetryError::NonPositiveTolerance);
    }
    let transformed = transform_operator(t, h)?;
    let diff = fock::interior(&(&transformed - h), 2);
    let deviation = spectral_norm(&diff);
    Ok(SymmetryVerdict {
        invariant: deviation <= tol,
        deviation,
        tolerance: tol,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distributions::DistributionSpec;
    use crate::fock::{fuzzy_ladder, HamiltonianSpec};
    use crate::moments;

    fn ladder(spec: &DistributionSpec, dim: usize) -> crate::fock::LadderSet {
        fuzzy_ladder(dim, moments::coefficients(spec, 1e-10).unwrap()).unwrap()
    }

    #[test]
    fn parity_matrix_alternates_signs() {
        let p = parity_transform(4);
        let d: Vec<f64> = (0..4).map(|i| p.matrix()[(i, i)].re).collect();
        assert_eq!(d, vec![1.0, -1.0, 1.0, -1.0]);
        assert_eq!(p.kind(), TransformKind::LinearUnitary);
    }

    #[test]
    fn parity_flips_ladder_operators_exactly() {
        let dim = 24;
        let p = parity_transform(dim);
        let sl = crate::fock::SharpLadder::new(dim).unwrap();
        let flipped = transform_operator(&p, sl.a()).unwrap();
        let want = sl.a() * Complex64::new(-1.0, 0.0);
        assert!(fock::max_abs(&(&flipped - &want)) == 0.0);

        // the fuzzy annihilator inherits the eigenfactor α = -1 verbatim
        let ls = ladder(&DistributionSpec::lorentzian(0.4).unwrap(), dim);
        let flipped = transform_operator(&p, ls.a_fuzzy()).unwrap();
        let want = ls.a_fuzzy() * Complex64::new(-1.0, 0.0);
        assert!(fock::max_abs(&(&flipped - &want)) < 1e-15);
    }

    #[test]
    fn lu_inheritance_for_scaled_eigenoperators() {
        // 𝒪â𝒪⁻¹ = α·â with α real forces 𝒪a̅𝒪⁻¹ = α·a̅
        let dim = 32;
        let p = parity_transform(dim);
        for spec in [
            DistributionSpec::lorentzian(0.7).unwrap(),
            DistributionSpec::uniform(1.5).unwrap(),
            DistributionSpec::gaussian(0.3).unwrap(),
        ] {
            let ls = ladder(&spec, dim);
            let lhs = transform_operator(&p, ls.a_fuzzy()).unwrap();
            let rhs = ls.a_fuzzy() * Complex64::new(-1.0, 0.0);
            assert!(fock::max_abs(&(&lhs - &rhs)) < 1e-10);
        }
    }

    #[test]
    fn time_reversal_is_conjugation() {
        let dim = 16;
        let t = time_reversal_transform(dim);
        assert_eq!(t.kind(), TransformKind::Antiunitary);
        let sl = crate::fock::SharpLadder::new(dim).unwrap();
        // real matrix: unchanged
        let back = transform_operator(&t, sl.a()).unwrap();
        assert!(fock::max_abs(&(&back - sl.a())) == 0.0);
        // antilinearity: i·â ↦ -i·â
        let ia = sl.a() * Complex64::new(0.0, 1.0);
        let back = transform_operator(&t, &ia).unwrap();
        let want = sl.a() * Complex64::new(0.0, -1.0);
        assert!(fock::max_abs(&(&back - &want)) == 0.0);
        // real fuzzy coefficients (uniform, ζ ≤ 1) leave a̅ unchanged
        let ls = ladder(&DistributionSpec::uniform(0.5).unwrap(), dim);
        let back = transform_operator(&t, ls.a_fuzzy()).unwrap();
        assert!(fock::max_abs(&(&back - ls.a_fuzzy())) < 1e-15);
    }

    #[test]
    fn parity_invariance_of_fuzzy_hamiltonians() {
        for spec in [
            DistributionSpec::lorentzian(0.3).unwrap(),
            DistributionSpec::uniform(0.5).unwrap(),
            DistributionSpec::gaussian(0.5).unwrap(),
        ] {
            let ls = ladder(&spec, 32);
            let h = ls.hamiltonian(&HamiltonianSpec::default()).unwrap();
            let p = parity_transform(32);
            let verdict = invariance_verdict(&p, &h, 1e-10).unwrap();
            assert!(verdict.invariant, "{:?}: {}", spec.kind(), verdict.deviation);
            assert!(verdict.deviation < 1e-12);
        }
        // independent of kind and width across a small test matrix
        for zeta in [0.1, 0.5, 1.0, 2.0] {
            for spec in [
                DistributionSpec::lorentzian(zeta).unwrap(),
                DistributionSpec::uniform(zeta).unwrap(),
                DistributionSpec::gaussian(zeta).unwrap(),
            ] {
                let ls = ladder(&spec, 24);
                let h = ls.hamiltonian(&HamiltonianSpec::default()).unwrap();
                let verdict = invariance_verdict(&parity_transform(24), &h, 1e-10).unwrap();
                assert!(verdict.invariant);
            }
        }
        let delta = fuzzy_ladder(24, crate::moments::FuzzyCoefficients::sharp()).unwrap();
        let h = delta.hamiltonian(&HamiltonianSpec::default()).unwrap();
        let verdict = invariance_verdict(&parity_transform(24), &h, 1e-10).unwrap();
        assert!(verdict.invariant);
    }

    #[test]
    fn driven_sharp_hamiltonian_is_time_reversal_invariant() {
        let ls = fuzzy_ladder(32, crate::moments::FuzzyCoefficients::sharp()).unwrap();
        let h = ls
            .hamiltonian(&HamiltonianSpec {
                drive: 1.0,
                fuzzy: false,
                ..Default::default()
            })
            .unwrap();
        let t = time_reversal_transform(32);
        let verdict = invariance_verdict(&t, &h, 1e-8).unwrap();
        assert!(verdict.invariant, "deviation {}", verdict.deviation);
    }

    #[test]
    fn complex_coefficients_break_time_reversal() {
        let dim = 32;
        let t = time_reversal_transform(dim);
        let hspec = HamiltonianSpec {
            drive: 1.0,
            ..Default::default()
        };
        // complex I₀, I₁: broken
        let ls = ladder(&DistributionSpec::lorentzian(0.3).unwrap(), dim);
        let h = ls.hamiltonian(&hspec).unwrap();
        let transformed = transform_operator(&t, &h).unwrap();
        let dev = spectral_norm(&fock::interior(&(&transformed - &h), 2));
        assert!(dev > 0.01, "deviation {dev}");
        let verdict = invariance_verdict(&t, &h, 1e-8).unwrap();
        assert!(!verdict.invariant);
        // real I₀, I₁ (uniform ζ ≤ 1): preserved
        let ls = ladder(&DistributionSpec::uniform(0.5).unwrap(), dim);
        let h = ls.hamiltonian(&hspec).unwrap();
        let verdict = invariance_verdict(&t, &h, 1e-8).unwrap();
        assert!(verdict.invariant, "deviation {}", verdict.deviation);
    }

    #[test]
    fn lu_transform_preserves_hermiticity() {
        let ls = ladder(&DistributionSpec::lorentzian(0.5).unwrap(), 16);
        let h = ls.hamiltonian(&HamiltonianSpec::default()).unwrap();
        let p = parity_transform(16);
        let th = transform_operator(&p, &h).unwrap();
        let dev = fock::max_abs(&(&th.adjoint() - &th));
        assert!(dev < 1e-12);
    }

    #[test]
    fn constructor_rejects_non_unitary_matrices() {
        let mut m = DMatrix::<Complex64>::identity(4, 4);
        m[(0, 0)] = Complex64::new(2.0, 0.0);
        assert!(matches!(
            SymmetryTransform::new(TransformKind::LinearUnitary, m),
            Err(SymmetryError::NotUnitary(_))
        ));
        let rect = DMatrix::<Complex64>::zeros(3, 4);
        assert!(matches!(
            SymmetryTransform::new(TransformKind::LinearUnitary, rect),
            Err(SymmetryError::NotSquare)
        ));
    }

    #[test]
    fn verdict_validates_inputs() {
        let p = parity_transform(8);
        let h = DMatrix::<Complex64>::identity(8, 8);
        assert!(invariance_verdict(&p, &h, 0.0).is_err());
        let small = DMatrix::<Complex64>::identity(4, 4);
        assert!(matches!(
            transform_operator(&p, &small),
            Err(SymmetryError::DimMismatch(8, 4))
        ));
    }
}
