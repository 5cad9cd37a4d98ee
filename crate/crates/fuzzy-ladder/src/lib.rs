//! Frequency-averaged ("fuzzy") ladder operators.
//!
//! A sharp annihilation operator removes an exact quantum of energy from a
//! harmonic system. Averaging the frequency-dependent annihilator over a
//! normalized width distribution produces a *fuzzy* operator
//!
//! ```text
//! a̅ = u·â + v·â†,   [a̅, a̅†] = C ≤ 1 (sub-bosonic in the supported cases),
//! ```
//!
//! where the coefficients come from a pair of moment integrals of the
//! distribution against `1/√(1+x)`. This crate evaluates those moments by
//! three routes (residue formula, distribution-specific antiderivatives, and
//! branch-aware adaptive quadrature), builds the deformed operators on
//! truncated Fock spaces, and explores their consequences: fuzzy vacua and
//! Fock states, position densities, displacement operators and coherent
//! states, symmetry verdicts, and nonlinear dispersion relations.
//!
//! Units are dimensionless throughout: ℏ = m = ω = 1, widths enter through
//! ζ = Γ/2ω, and the square-root branch is fixed by √(-1) = +i (cut along
//! the negative imaginary axis).
//!
//! Entry points:
//! - [`distributions::DistributionSpec`] — the width distribution f′(x).
//! - [`moments`] — moment integrals I₀, I₁ and the commutation function C.
//! - [`fock`] — truncated operator matrices, vacua, spectra.
//! - [`states`] — wavefunctions, displacements, coherent states.
//! - [`symmetry`] — linear-unitary / antiunitary invariance verdicts.
//! - [`dispersion`] — width laws Γ(ω) and single-excitation energies.
//!
//! The `fuzzy-ladder` binary exposes the same functionality as subcommands;
//! see the crate examples for library usage.

pub mod branch;
pub mod cli;
pub mod dispersion;
pub mod distributions;
pub mod fock;
pub mod moments;
pub mod quadrature;
pub mod states;
pub mod symmetry;
pub mod verify;

pub use distributions::{DistributionSpec, Kind};
pub use fock::{FockVector, HamiltonianSpec, LadderSet, SharpLadder};
pub use moments::{FuzzyCoefficients, MomentPair};
