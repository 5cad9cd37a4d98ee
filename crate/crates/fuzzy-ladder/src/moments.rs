//! Moment integrals of a width distribution against the deformation kernel,
//!
//! ```text
//! I_k = ∫ x^k f′(x) / √(1+x) dx,   k = 0, 1,
//! ```
//!
//! where `1/√(1+x)` is evaluated as `-i/√|1+x|` for x < -1 (the branch with
//! √(-1) = +i). Three routes are provided:
//!
//! - [`moments_analytic`]: exact constants for the delta kind, the residue
//!   evaluation for the Lorentzian (single upper-half-plane pole at 1 + iζ),
//!   and exact antiderivatives for the uniform kind;
//! - [`moments_quadrature`]: branch-aware adaptive quadrature for any
//!   non-delta kind, with the endpoint singularity at x = -1 removed by the
//!   substitutions t = √(1+x) (above) and s = √(-1-x) (below);
//! - [`moments`]: dispatch that prefers the analytic route when one exists.
//!
//! From a moment pair, [`commutation_function`] forms the fuzzy coefficients
//! u = I₀ + I₁/2, v = I₁/2 and the commutation function
//! C = |I₀|² + Re(I₀·I₁*) = |u|² - |v|².

use num_complex::Complex64;
use thiserror::Error;

use crate::branch;
use crate::distributions::{DistError, DistributionSpec, Kind};
use crate::quadrature::{self, QuadError};

/// Default relative tolerance of the quadrature route.
pub const DEFAULT_REL_TOL: f64 = 1e-10;
/// Accepted range for user-supplied relative tolerances.
pub const REL_TOL_MIN: f64 = 1e-13;
pub const REL_TOL_MAX: f64 = 1e-3;
/// Absolute floor added to every error target.
pub const ABS_FLOOR: f64 = 1e-14;

/// How a moment pair was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    ExactDelta,
    Residue,
    ClosedForm,
    Quadrature,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::ExactDelta => "exact_delta",
            Method::Residue => "residue",
            Method::ClosedForm => "closed_form",
            Method::Quadrature => "quadrature",
        }
    }
}

/// The pair (I₀, I₁) with provenance and an error estimate.
#[derive(Debug, Clone, Copy)]
pub struct MomentPair {
    pub i0: Complex64,
    pub i1: Complex64,
    pub method: Method,
    pub est_error: f64,
}

/// Coefficients of the fuzzy annihilator a̅ = u·â + v·â† and the value of
/// [a̅, a̅†].
#[derive(Debug, Clone, Copy)]
pub struct FuzzyCoefficients {
    pub u: Complex64,
    pub v: Complex64,
    pub c: f64,
}

impl FuzzyCoefficients {
    /// Sharp (canonical) coefficients: u = 1, v = 0, C = 1.
    pub fn sharp() -> Self {
        FuzzyCoefficients {
            u: Complex64::new(1.0, 0.0),
            v: Complex64::new(0.0, 0.0),
            c: 1.0,
        }
    }

    /// Geometric decay ratio |v/u| of the vacuum recursion.
    pub fn decay_ratio(&self) -> f64 {
        (self.v / self.u).norm()
    }

    /// The supported distribution shapes satisfy 0 < C ≤ 1 ("sub-bosonic").
    /// A value outside that range is reported, not rejected.
    pub fn sub_bosonic_anomaly(&self) -> Option<String> {
        if self.c <= 0.0 {
            Some(format!("commutation function C = {} is not positive", self.c))
        } else if self.c > 1.0 + 1e-12 {
            Some(format!(
                "commutation function C = {} exceeds 1 (super-bosonic)",
                self.c
            ))
        } else {
            None
        }
    }
}

/// Large-R / small-ε exponents of g_k on arcs, per k.
#[derive(Debug, Clone, Copy)]
pub struct ArcExponents {
    pub alpha: [f64; 2],
    pub beta: [f64; 2],
}

/// An upper-half-plane pole of g_k(z)/√z and its residues (one per k).
#[derive(Debug, Clone, Copy)]
pub struct Pole {
    pub location: Complex64,
    pub residue_over_sqrt: [Complex64; 2],
}

/// Whether the residue route applies to a distribution kind.
#[derive(Debug, Clone)]
pub struct Prop1Report {
    pub kind: Kind,
    /// condition (i): g_k analytic on the closed upper half plane except for
    /// finitely many poles strictly above the real line
    pub analytic_on_real_line: bool,
    /// condition (ii): arc exponents, when condition (i) gives them meaning
    pub decay: Option<ArcExponents>,
    pub poles: Vec<Pole>,
    pub conditions_met: bool,
}

#[derive(Debug, Error)]
pub enum MomentsError {
    #[error("no analytic moment route for kind {0}")]
    UnsupportedAnalyticKind(Kind),
    #[error("relative tolerance {0:e} outside [{REL_TOL_MIN:e}, {REL_TOL_MAX:e}]")]
    InvalidTolerance(f64),
    #[error("quadrature did not converge (achieved {achieved:.3e}); values still usable")]
    QuadratureNonConvergence { pair: MomentPair, achieved: f64 },
    #[error("delta kind has no quadrature route; use the analytic route")]
    DeltaHasNoQuadrature,
    #[error("non-finite moment input")]
    NonFinite,
    #[error("residue analysis applies to lorentzian/uniform/gaussian only, not {0}")]
    UnsupportedProp1Kind(Kind),
    #[error(transparent)]
    Distribution(#[from] DistError),
}

/// Analytic (residue or closed-form) moments for the kinds that admit them.
pub fn moments_analytic(spec: &DistributionSpec) -> Result<MomentPair, MomentsError> {
    match spec.kind() {
        Kind::Delta => Ok(MomentPair {
            i0: Complex64::new(1.0, 0.0),
            i1: Complex64::new(0.0, 0.0),
            method: Method::ExactDelta,
            est_error: 0.0,
        }),
        Kind::Lorentzian => {
            // single pole of g_k at 1 + iζ; the contour gives
            // I_k = (iζ)^k / √(1 + iζ)
            let zeta = spec.zeta();
            let root = branch::sqrt(Complex64::new(1.0, zeta));
            let i0 = 1.0 / root;
            let i1 = Complex64::new(0.0, zeta) / root;
            Ok(MomentPair {
                i0,
                i1,
                method: Method::Residue,
                est_error: 0.0,
            })
        }
        Kind::Uniform => {
            // antiderivatives of x^k/√(1+x) over [-ζ, ζ] with density 1/(2ζ);
            // for ζ > 1 the stretch x ∈ [-ζ, -1) contributes -i times a real
            // integral on the chosen branch
            let z = spec.zeta();
            let (i0, i1) = if z <= 1.0 {
                let sp = (1.0 + z).sqrt();
                let sm = (1.0 - z).sqrt();
                (
                    Complex64::new((sp - sm) / z, 0.0),
                    Complex64::new(((z - 2.0) * sp + (z + 2.0) * sm) / (3.0 * z), 0.0),
                )
            } else {
                let sp = (1.0 + z).sqrt();
                let sm = (z - 1.0).sqrt();
                (
                    Complex64::new(sp / z, -sm / z),
                    Complex64::new((z - 2.0) * sp / (3.0 * z), (z + 2.0) * sm / (3.0 * z)),
                )
            };
            Ok(MomentPair {
                i0,
                i1,
                method: Method::ClosedForm,
                est_error: 0.0,
            })
        }
        kind => Err(MomentsError::UnsupportedAnalyticKind(kind)),
    }
}

/// Definitional moments by adaptive quadrature.
///
/// The real part integrates over x > -1 with t = √(1+x); the contribution
/// from x < -1 is purely imaginary with the factor -i and s = √(-1-x). Both
/// substitutions cancel the endpoint singularity exactly, so every piece the
/// engine sees is smooth.
pub fn moments_quadrature(
    spec: &DistributionSpec,
    rel_tol: f64,
) -> Result<MomentPair, MomentsError> {
    if spec.kind() == Kind::Delta {
        return Err(MomentsError::DeltaHasNoQuadrature);
    }
    if !(REL_TOL_MIN..=REL_TOL_MAX).contains(&rel_tol) {
        return Err(MomentsError::InvalidTolerance(rel_tol));
    }

    let support = spec.support();
    let cuts = spec.breakpoints();
    let max_iv = 4000;

    let mut est_error = [0.0_f64; 2];
    let mut values = [Complex64::new(0.0, 0.0); 2];
    let mut achieved_on_failure: Option<f64> = None;

    for k in 0..2u8 {
        // ---- real piece: x > -1, x = t² - 1 ----
        let upper = |t: f64, spec: &DistributionSpec| -> f64 {
            let x = t * t - 1.0;
            let d = spec.density(x).unwrap_or(0.0);
            if k == 0 {
                2.0 * d
            } else {
                2.0 * x * d
            }
        };
        // ---- imaginary piece: x < -1, x = -1 - s² ----
        let lower = |s: f64, spec: &DistributionSpec| -> f64 {
            let x = -1.0 - s * s;
            let d = spec.density(x).unwrap_or(0.0);
            if k == 0 {
                2.0 * d
            } else {
                2.0 * x * d
            }
        };

        let t_cuts: Vec<f64> = cuts
            .iter()
            .filter(|&&x| x > -1.0)
            .map(|&x| (1.0 + x).sqrt())
            .collect();
        let s_cuts: Vec<f64> = cuts
            .iter()
            .filter(|&&x| x < -1.0)
            .map(|&x| (-1.0 - x).sqrt())
            .collect();

        let (re_res, im_res) = match support {
            Some((lo, hi)) => {
                let re = if hi > -1.0 {
                    let t_lo = if lo <= -1.0 { 0.0 } else { (1.0 + lo).sqrt() };
                    let t_hi = (1.0 + hi).sqrt();
                    let pieces = quadrature::pieces_between(t_lo, t_hi, &t_cuts);
                    let s = spec.clone();
                    Some(quadrature::integrate(
                        move |t| upper(t, &s),
                        &pieces,
                        rel_tol,
                        ABS_FLOOR,
                        max_iv,
                    ))
                } else {
                    None
                };
                let im = if lo < -1.0 {
                    let s_hi = (-1.0 - lo).sqrt();
                    let s_lo = if hi >= -1.0 { 0.0 } else { (-1.0 - hi).sqrt() };
                    let pieces = quadrature::pieces_between(s_lo, s_hi, &s_cuts);
                    let s = spec.clone();
                    Some(quadrature::integrate(
                        move |v| lower(v, &s),
                        &pieces,
                        rel_tol,
                        ABS_FLOOR,
                        max_iv,
                    ))
                } else {
                    None
                };
                (re, im)
            }
            None => {
                let t_edge = t_cuts.iter().cloned().fold(2.0_f64, f64::max);
                let near = quadrature::pieces_between(0.0, t_edge, &t_cuts);
                let s1 = spec.clone();
                let s2 = spec.clone();
                let re = quadrature::integrate(
                    move |t| upper(t, &s1),
                    &near,
                    rel_tol,
                    ABS_FLOOR,
                    max_iv,
                )
                .and_then(|head| {
                    let tail = quadrature::integrate_semi_infinite(
                        move |t| upper(t, &s2),
                        t_edge,
                        &[t_edge + 2.0, t_edge + 14.0],
                        rel_tol,
                        ABS_FLOOR,
                        max_iv,
                    )?;
                    Ok(quadrature::QuadResult {
                        value: head.value + tail.value,
                        abs_error: head.abs_error + tail.abs_error,
                        intervals: head.intervals + tail.intervals,
                    })
                });

                let s_edge = s_cuts.iter().cloned().fold(2.0_f64, f64::max);
                let near = quadrature::pieces_between(0.0, s_edge, &s_cuts);
                let s3 = spec.clone();
                let s4 = spec.clone();
                let im = quadrature::integrate(
                    move |v| lower(v, &s3),
                    &near,
                    rel_tol,
                    ABS_FLOOR,
                    max_iv,
                )
                .and_then(|head| {
                    let tail = quadrature::integrate_semi_infinite(
                        move |v| lower(v, &s4),
                        s_edge,
                        &[s_edge + 2.0, s_edge + 14.0],
                        rel_tol,
                        ABS_FLOOR,
                        max_iv,
                    )?;
                    Ok(quadrature::QuadResult {
                        value: head.value + tail.value,
                        abs_error: head.abs_error + tail.abs_error,
                        intervals: head.intervals + tail.intervals,
                    })
                });
                (Some(re), Some(im))
            }
        };

        let mut take = |res: Option<Result<quadrature::QuadResult, QuadError>>| -> (f64, f64) {
            match res {
                None => (0.0, 0.0),
                Some(Ok(r)) => (r.value, r.abs_error),
                Some(Err(QuadError::NonConvergence {
                    value, achieved, ..
                })) => {
                    let worst = achieved_on_failure.get_or_insert(0.0);
                    *worst = worst.max(achieved);
                    (value, achieved)
                }
                Some(Err(QuadError::EmptyDomain)) => (0.0, 0.0),
            }
        };

        let (re_val, re_err) = take(re_res);
        let (im_val, im_err) = take(im_res);
        // the x < -1 stretch carries the factor -i
        values[k as usize] = Complex64::new(re_val, -im_val);
        est_error[k as usize] = re_err + im_err;
    }

    let pair = MomentPair {
        i0: values[0],
        i1: values[1],
        method: Method::Quadrature,
        est_error: est_error[0].max(est_error[1]),
    };
    if let Some(achieved) = achieved_on_failure {
        return Err(MomentsError::QuadratureNonConvergence { pair, achieved });
    }
    Ok(pair)
}

/// Preferred route per kind: analytic when available, otherwise quadrature.
pub fn moments(spec: &DistributionSpec, rel_tol: f64) -> Result<MomentPair, MomentsError> {
    match spec.kind() {
        Kind::Delta | Kind::Lorentzian | Kind::Uniform => moments_analytic(spec),
        _ => moments_quadrature(spec, rel_tol),
    }
}

/// Fuzzy coefficients and the commutation function from a moment pair.
pub fn commutation_function(m: &MomentPair) -> Result<FuzzyCoefficients, MomentsError> {
    if !(m.i0.is_finite() && m.i1.is_finite()) {
        return Err(MomentsError::NonFinite);
    }
    let u = m.i0 + 0.5 * m.i1;
    let v = 0.5 * m.i1;
    let c = m.i0.norm_sqr() + (m.i0 * m.i1.conj()).re;
    debug_assert!((c - (u.norm_sqr() - v.norm_sqr())).abs() < 1e-12 * (1.0 + c.abs()));
    Ok(FuzzyCoefficients { u, v, c })
}

/// Convenience: moments then coefficients.
pub fn coefficients(spec: &DistributionSpec, rel_tol: f64) -> Result<FuzzyCoefficients, MomentsError> {
    commutation_function(&moments(spec, rel_tol)?)
}

/// Checks conditions (i)/(ii) of the residue route for a distribution kind.
pub fn prop1_check(spec: &DistributionSpec) -> Result<Prop1Report, MomentsError> {
    let kind = spec.kind();
    match kind {
        Kind::Lorentzian => {
            let zeta = spec.zeta();
            let location = Complex64::new(1.0, zeta);
            let root = branch::sqrt(location);
            let two_pi_i = Complex64::new(0.0, 2.0 * std::f64::consts::PI);
            let res0 = 1.0 / root / two_pi_i;
            let res1 = Complex64::new(0.0, zeta) / root / two_pi_i;
            Ok(Prop1Report {
                kind,
                analytic_on_real_line: true,
                // g₀ ~ R⁻², g₁ ~ R⁻¹ on the big arc; both ~ ε⁰ at the origin
                decay: Some(ArcExponents {
                    alpha: [-2.0, -1.0],
                    beta: [0.0, 0.0],
                }),
                poles: vec![Pole {
                    location,
                    residue_over_sqrt: [res0, res1],
                }],
                conditions_met: true,
            })
        }
        Kind::Uniform => Ok(Prop1Report {
            kind,
            // compact support forces kinks on the real line, so there is no
            // analytic continuation to test the arcs against
            analytic_on_real_line: false,
            decay: None,
            poles: Vec::new(),
            conditions_met: false,
        }),
        Kind::Gaussian => Ok(Prop1Report {
            kind,
            analytic_on_real_line: true,
            // entire, but exp(-z²/2ζ²) blows up on the arc near θ = π/2
            decay: Some(ArcExponents {
                alpha: [f64::INFINITY, f64::INFINITY],
                beta: [0.0, 0.0],
            }),
            poles: Vec::new(),
            conditions_met: false,
        }),
        other => Err(MomentsError::UnsupportedProp1Kind(other)),
    }
}

/// ln|g₀(z)| for the gaussian kind, usable where the density itself
/// overflows. Demonstrates the arc growth that disqualifies the residue
/// route.
pub fn gaussian_log_abs_g0(zeta: f64, z: Complex64) -> f64 {
    let w = z - Complex64::new(1.0, 0.0);
    let expo = -(w * w) / (2.0 * zeta * zeta);
    expo.re - (zeta * (2.0 * std::f64::consts::PI).sqrt()).ln()
}

/// Published closed form of [a̅, a̅†] for the Lorentzian kind.
pub fn lorentzian_c_published(zeta: f64) -> f64 {
    1.0 / (1.0 + zeta * zeta).sqrt()
}

/// Published closed form of [a̅, a̅†] for the uniform kind. The definitional
/// integrals give a different value (see [`compare_with_published`]); both
/// are reported, neither is silently preferred.
pub fn uniform_c_published(zeta: f64) -> f64 {
    if zeta <= 1.0 {
        (2.0 / 3.0) * (2.0 + ((1.0 - zeta * zeta).sqrt() - 1.0) / (zeta * zeta))
    } else {
        2.0 / (3.0 * zeta)
    }
}

/// Side-by-side comparison of the definitional commutation function with the
/// published closed form, where one exists.
#[derive(Debug, Clone, Copy)]
pub struct PublishedComparison {
    pub definitional: f64,
    pub published: f64,
    pub discrepancy: f64,
    pub flagged: bool,
}

pub fn compare_with_published(
    spec: &DistributionSpec,
    coeffs: &FuzzyCoefficients,
) -> Option<PublishedComparison> {
    let published = match spec.kind() {
        Kind::Lorentzian => lorentzian_c_published(spec.zeta()),
        Kind::Uniform => uniform_c_published(spec.zeta()),
        _ => return None,
    };
    let discrepancy = (coeffs.c - published).abs();
    Some(PublishedComparison {
        definitional: coeffs.c,
        published,
        discrepancy,
        flagged: discrepancy > 1e-6 * published.abs().max(1.0),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distributions::DistributionSpec;
    use approx::{assert_abs_diff_eq, assert_relative_eq};

    fn lorentzian_expected(zeta: f64) -> (Complex64, Complex64) {
        // independent polar evaluation: 1/√(1+iζ) = (1+ζ²)^(-1/4)·e^(-i·atan(ζ)/2)
        let r = (1.0 + zeta * zeta).powf(-0.25);
        let phi = -0.5 * zeta.atan();
        let i0 = Complex64::from_polar(r, phi);
        (i0, Complex64::new(0.0, zeta) * i0)
    }

    #[test]
    fn delta_moments_are_exact() {
        let m = moments_analytic(&DistributionSpec::delta()).unwrap();
        assert_eq!(m.i0, Complex64::new(1.0, 0.0));
        assert_eq!(m.i1, Complex64::new(0.0, 0.0));
        assert_eq!(m.method, Method::ExactDelta);
        let c = commutation_function(&m).unwrap();
        assert_eq!(c.c, 1.0);
        assert!(matches!(
            moments_quadrature(&DistributionSpec::delta(), 1e-10),
            Err(MomentsError::DeltaHasNoQuadrature)
        ));
    }

    #[test]
    fn lorentzian_residue_values() {
        let m = moments_analytic(&DistributionSpec::lorentzian(0.3).unwrap()).unwrap();
        assert_eq!(m.method, Method::Residue);
        assert_abs_diff_eq!(m.i0.re, 0.968312314773, epsilon = 1e-10);
        assert_abs_diff_eq!(m.i0.im, -0.142118071618, epsilon = 1e-10);
        assert_abs_diff_eq!(m.i1.re, 0.0426354214853, epsilon = 1e-10);
        assert_abs_diff_eq!(m.i1.im, 0.290493694432, epsilon = 1e-10);
        // polar-form oracle across a width sweep
        for zeta in [0.05, 0.3, 1.0, 4.0] {
            let m = moments_analytic(&DistributionSpec::lorentzian(zeta).unwrap()).unwrap();
            let (i0, i1) = lorentzian_expected(zeta);
            assert!((m.i0 - i0).norm() < 1e-14);
            assert!((m.i1 - i1).norm() < 1e-14);
        }
        // ζ = 1 lands on 2^(-1/4)·e^(-iπ/8)
        let m = moments_analytic(&DistributionSpec::lorentzian(1.0).unwrap()).unwrap();
        let want = Complex64::from_polar(2.0_f64.powf(-0.25), -std::f64::consts::PI / 8.0);
        assert_abs_diff_eq!(m.i0.re, want.re, epsilon = 1e-12);
        assert_abs_diff_eq!(m.i0.im, want.im, epsilon = 1e-12);
    }

    #[test]
    fn uniform_closed_forms() {
        let m = moments_analytic(&DistributionSpec::uniform(0.5).unwrap()).unwrap();
        assert_abs_diff_eq!(m.i0.re, 1.035276180410083, epsilon = 1e-12);
        assert_eq!(m.i0.im, 0.0);
        assert_abs_diff_eq!(m.i1.re, -0.046233569414, epsilon = 1e-10);
        assert_eq!(m.i1.im, 0.0);
        // ζ > 1 grows a purely imaginary contribution
        let m = moments_analytic(&DistributionSpec::uniform(2.0).unwrap()).unwrap();
        assert_abs_diff_eq!(m.i0.re, 0.75_f64.sqrt(), epsilon = 1e-12);
        assert_abs_diff_eq!(m.i0.im, -0.5, epsilon = 1e-12);
        assert_abs_diff_eq!(m.i1.re, 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(m.i1.im, 2.0 / 3.0, epsilon = 1e-12);
    }

    #[test]
    fn commutation_identity_and_values() {
        for spec in [
            DistributionSpec::lorentzian(0.3).unwrap(),
            DistributionSpec::lorentzian(2.0).unwrap(),
            DistributionSpec::uniform(0.5).unwrap(),
            DistributionSpec::uniform(2.0).unwrap(),
        ] {
            let m = moments_analytic(&spec).unwrap();
            let fc = commutation_function(&m).unwrap();
            let via_uv = fc.u.norm_sqr() - fc.v.norm_sqr();
            assert_abs_diff_eq!(fc.c, via_uv, epsilon = 1e-12);
        }
        let fc = commutation_function(
            &moments_analytic(&DistributionSpec::lorentzian(0.3).unwrap()).unwrap(),
        )
        .unwrap();
        assert_abs_diff_eq!(fc.c, 0.957826285221, epsilon = 1e-10);
    }

    #[test]
    fn lorentzian_c_matches_published_for_all_zeta() {
        for zeta in [0.01, 0.1, 0.3, 0.5, 1.0, 2.0, 5.0, 20.0] {
            let fc = commutation_function(
                &moments_analytic(&DistributionSpec::lorentzian(zeta).unwrap()).unwrap(),
            )
            .unwrap();
            assert_abs_diff_eq!(fc.c, lorentzian_c_published(zeta), epsilon = 1e-10);
        }
    }

    #[test]
    fn lorentzian_i0_i1_cross_term_is_purely_imaginary() {
        for zeta in [0.1, 0.5, 1.0, 3.0] {
            let m = moments_analytic(&DistributionSpec::lorentzian(zeta).unwrap()).unwrap();
            assert!((m.i0 * m.i1.conj()).re.abs() < 1e-10);
        }
    }

    #[test]
    fn quadrature_agrees_with_residue_route() {
        for zeta in [0.01, 0.1, 0.3, 0.5, 1.0, 2.0, 5.0] {
            let spec = DistributionSpec::lorentzian(zeta).unwrap();
            let exact = moments_analytic(&spec).unwrap();
            let quad = moments_quadrature(&spec, 1e-10).unwrap();
            let tol = 1e-6_f64.max(10.0 * quad.est_error);
            assert_abs_diff_eq!(quad.i0.re, exact.i0.re, epsilon = tol);
            assert_abs_diff_eq!(quad.i0.im, exact.i0.im, epsilon = tol);
            assert_abs_diff_eq!(quad.i1.re, exact.i1.re, epsilon = tol);
            assert_abs_diff_eq!(quad.i1.im, exact.i1.im, epsilon = tol);
        }
    }

    #[test]
    fn quadrature_agrees_with_uniform_antiderivatives() {
        for zeta in [0.1, 0.5, 0.9, 1.0, 1.5, 3.0] {
            let spec = DistributionSpec::uniform(zeta).unwrap();
            let exact = moments_analytic(&spec).unwrap();
            let quad = moments_quadrature(&spec, 1e-10).unwrap();
            assert_abs_diff_eq!(quad.i0.re, exact.i0.re, epsilon = 1e-8);
            assert_abs_diff_eq!(quad.i0.im, exact.i0.im, epsilon = 1e-8);
            assert_abs_diff_eq!(quad.i1.re, exact.i1.re, epsilon = 1e-8);
            assert_abs_diff_eq!(quad.i1.im, exact.i1.im, epsilon = 1e-8);
        }
    }

    #[test]
    fn gaussian_quadrature_self_consistency() {
        // oracle: an independent run at a tenth of the tolerance
        let spec = DistributionSpec::gaussian(0.2).unwrap();
        let coarse = moments_quadrature(&spec, 1e-9).unwrap();
        let fine = moments_quadrature(&spec, 1e-10).unwrap();
        assert_abs_diff_eq!(coarse.i0.re, fine.i0.re, epsilon = 1e-8);
        assert_abs_diff_eq!(coarse.i0.im, fine.i0.im, epsilon = 1e-8);
        assert_abs_diff_eq!(coarse.i1.re, fine.i1.re, epsilon = 1e-8);
        assert_abs_diff_eq!(coarse.i1.im, fine.i1.im, epsilon = 1e-8);
        // frozen external reference (30-digit arithmetic)
        assert_abs_diff_eq!(fine.i0.re, 1.01661437070931, epsilon = 1e-9);
        assert_abs_diff_eq!(fine.i0.im, -2.59860912930722e-6, epsilon = 1e-9);
        assert_abs_diff_eq!(fine.i1.re, -0.0218265533495226, epsilon = 1e-9);
        assert_abs_diff_eq!(fine.i1.im, 2.64786775345739e-6, epsilon = 1e-9);
    }

    #[test]
    fn tabulated_moments_are_finite_and_plausible() {
        let spec =
            DistributionSpec::tabulated(vec![(-1.0, 0.0), (0.0, 1.0), (1.0, 0.0)]).unwrap();
        let m = moments(&spec, 1e-10).unwrap();
        assert_eq!(m.method, Method::Quadrature);
        assert!(m.i0.re > 0.9 && m.i0.re < 1.2);
        let fc = commutation_function(&m).unwrap();
        assert!(fc.c.is_finite());
    }

    #[test]
    fn small_zeta_limit() {
        // first-order smallness at ζ ≤ 1e-3
        for (spec, zeta) in [
            (DistributionSpec::lorentzian(1e-3).unwrap(), 1e-3),
            (DistributionSpec::uniform(1e-3).unwrap(), 1e-3),
            (DistributionSpec::gaussian(1e-3).unwrap(), 1e-3),
        ] {
            let m = moments(&spec, 1e-10).unwrap();
            let small = (m.i0 - Complex64::new(1.0, 0.0)).norm() + m.i1.norm();
            assert!(small < 5.0 * zeta, "kind {:?}: {}", spec.kind(), small);
        }
        // needle-width distributions still resolve
        let m = moments_quadrature(&DistributionSpec::gaussian(1e-6).unwrap(), 1e-10).unwrap();
        assert_abs_diff_eq!(m.i0.re, 1.0, epsilon = 1e-4);
        assert!(m.i1.norm() < 1e-4);
        for spec in [
            DistributionSpec::lorentzian(1e-6).unwrap(),
            DistributionSpec::uniform(1e-6).unwrap(),
        ] {
            let m = moments(&spec, 1e-10).unwrap();
            assert!((m.i0 - Complex64::new(1.0, 0.0)).norm() + m.i1.norm() < 1e-4);
        }
    }

    #[test]
    fn large_zeta_commutator_decay() {
        let fc = commutation_function(
            &moments_analytic(&DistributionSpec::lorentzian(1e3).unwrap()).unwrap(),
        )
        .unwrap();
        assert!((fc.c * 1e3 - 1.0).abs() < 0.01);
    }

    #[test]
    fn tolerance_validation() {
        let spec = DistributionSpec::gaussian(0.2).unwrap();
        assert!(matches!(
            moments_quadrature(&spec, 1e-2),
            Err(MomentsError::InvalidTolerance(_))
        ));
        assert!(matches!(
            moments_quadrature(&spec, 1e-14),
            Err(MomentsError::InvalidTolerance(_))
        ));
    }

    #[test]
    fn prop1_lorentzian() {
        let r = prop1_check(&DistributionSpec::lorentzian(0.7).unwrap()).unwrap();
        assert!(r.conditions_met);
        assert!(r.analytic_on_real_line);
        let d = r.decay.unwrap();
        assert_eq!(d.alpha, [-2.0, -1.0]);
        assert_eq!(d.beta, [0.0, 0.0]);
        assert_eq!(r.poles.len(), 1);
        assert_eq!(r.poles[0].location, Complex64::new(1.0, 0.7));
        // 2πi Σ Res g_k/√z must reproduce the analytic moments
        let m = moments_analytic(&DistributionSpec::lorentzian(0.7).unwrap()).unwrap();
        let two_pi_i = Complex64::new(0.0, 2.0 * std::f64::consts::PI);
        let i0 = two_pi_i * r.poles[0].residue_over_sqrt[0];
        let i1 = two_pi_i * r.poles[0].residue_over_sqrt[1];
        assert_abs_diff_eq!(i0.re, m.i0.re, epsilon = 1e-14);
        assert_abs_diff_eq!(i0.im, m.i0.im, epsilon = 1e-14);
        assert_abs_diff_eq!(i1.re, m.i1.re, epsilon = 1e-14);
        assert_abs_diff_eq!(i1.im, m.i1.im, epsilon = 1e-14);
    }

    #[test]
    fn prop1_uniform_and_gaussian_fail_conditions() {
        let r = prop1_check(&DistributionSpec::uniform(0.5).unwrap()).unwrap();
        assert!(!r.conditions_met);
        assert!(!r.analytic_on_real_line);

        let r = prop1_check(&DistributionSpec::gaussian(0.2).unwrap()).unwrap();
        assert!(!r.conditions_met);
        assert!(r.analytic_on_real_line);
        // |g₀| at R = 10 on the vertical axis dwarfs any power bound R^α
        let log_mag = gaussian_log_abs_g0(0.2, Complex64::new(0.0, 10.0));
        let power_bound = 100.0 * 10.0_f64.ln();
        assert!(log_mag > power_bound);

        assert!(matches!(
            prop1_check(&DistributionSpec::delta()),
            Err(MomentsError::UnsupportedProp1Kind(Kind::Delta))
        ));
    }

    #[test]
    fn published_comparison_flags_uniform_but_not_lorentzian() {
        let spec = DistributionSpec::uniform(2.0).unwrap();
        let fc = coefficients(&spec, 1e-10).unwrap();
        let cmp = compare_with_published(&spec, &fc).unwrap();
        assert_relative_eq!(cmp.published, 1.0 / 3.0, epsilon = 1e-12);
        assert_relative_eq!(cmp.definitional, 2.0 / 3.0, epsilon = 1e-10);
        assert!(cmp.flagged);

        let spec = DistributionSpec::lorentzian(0.4).unwrap();
        let fc = coefficients(&spec, 1e-10).unwrap();
        let cmp = compare_with_published(&spec, &fc).unwrap();
        assert!(!cmp.flagged);

        assert!(compare_with_published(
            &DistributionSpec::gaussian(0.2).unwrap(),
            &FuzzyCoefficients::sharp()
        )
        .is_none());
    }

    #[test]
    fn uniform_definitional_c_exceeds_one_at_small_zeta() {
        // the sub-bosonic bound fails on the definitional route; this is the
        // reported anomaly, not a bug
        let fc = coefficients(&DistributionSpec::uniform(0.5).unwrap(), 1e-10).unwrap();
        assert_abs_diff_eq!(fc.c, 1.02393225657, epsilon = 1e-9);
        assert!(fc.sub_bosonic_anomaly().is_some());
        let fc = coefficients(&DistributionSpec::lorentzian(0.5).unwrap(), 1e-10).unwrap();
        assert!(fc.sub_bosonic_anomaly().is_none());
    }
}
