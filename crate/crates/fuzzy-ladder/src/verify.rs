//! The verification suite: every reproducibility criterion as a runnable
//! check with its tolerance pinned in code. The `verify` subcommand and the
//! `acceptance` integration test both dispatch through [`run_criterion`].

use num_complex::Complex64;

use crate::distributions::DistributionSpec;
use crate::fock::{self, HamiltonianSpec, LadderSet};
use crate::moments;
use crate::states::{self, Grid};
use crate::symmetry;
use crate::{dispersion, Kind};

/// Outcome of one criterion.
#[derive(Debug, Clone)]
pub struct CriterionResult {
    pub id: usize,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl CriterionResult {
    pub fn line(&self) -> String {
        format!(
            "criterion {:>2} {:<36} {} — {}",
            self.id,
            self.name,
            if self.passed { "PASS" } else { "FAIL" },
            self.detail
        )
    }
}

pub const CRITERIA_COUNT: usize = 11;

const NAMES: [&str; CRITERIA_COUNT] = [
    "lorentzian-commutation-function",
    "residue-route-embodiment",
    "uniform-moments-and-published-c",
    "deformed-commutator-matrix",
    "fuzzy-vacuum",
    "fuzzy-spectrum",
    "density-reproduction",
    "displacement-covariance",
    "symmetry-verdicts",
    "dispersion-envelopes",
    "degenerate-delta-limit",
];

/// Criteria ids composing a named suite.
pub fn suite_ids(name: &str) -> Option<Vec<usize>> {
    match name {
        "all" => Some((1..=CRITERIA_COUNT).collect()),
        "moments" => Some(vec![1, 2, 3]),
        "fock" => Some(vec![4, 5, 6, 11]),
        "states" => Some(vec![7, 8]),
        "symmetry" => Some(vec![9]),
        "dispersion" => Some(vec![10]),
        _ => None,
    }
}

pub fn run_suite(ids: &[usize]) -> Vec<CriterionResult> {
    ids.iter().map(|&id| run_criterion(id)).collect()
}

pub fn run_criterion(id: usize) -> CriterionResult {
    let (passed, detail) = match id {
        1 => c1_lorentzian_commutation(),
        2 => c2_residue_embodiment(),
        3 => c3_uniform_moments(),
        4 => c4_commutator_matrix(),
        5 => c5_fuzzy_vacuum(),
        6 => c6_fuzzy_spectrum(),
        7 => c7_densities(),
        8 => c8_displacement_covariance(),
        9 => c9_symmetry_verdicts(),
        10 => c10_dispersion_envelopes(),
        11 => c11_delta_limit(),
        _ => (false, format!("unknown criterion id {id}")),
    };
    CriterionResult {
        id,
        name: NAMES[(id - 1).min(CRITERIA_COUNT - 1)],
        passed,
        detail,
    }
}

const ZETA_GRID: [f64; 6] = [0.1, 0.3, 0.5, 1.0, 2.0, 5.0];

fn c1_lorentzian_commutation() -> (bool, String) {
    let mut fails = Vec::new();
    for &zeta in &ZETA_GRID {
        let spec = match DistributionSpec::lorentzian(zeta) {
            Ok(s) => s,
            Err(e) => {
                fails.push(format!("zeta={zeta}: {e}"));
                continue;
            }
        };
        let want = moments::lorentzian_c_published(zeta);
        match moments::moments_analytic(&spec).and_then(|m| moments::commutation_function(&m)) {
            Ok(fc) => {
                let err = (fc.c - want).abs();
                if err > 1e-10 {
                    fails.push(format!("zeta={zeta}: analytic C off by {err:.2e}"));
                }
            }
            Err(e) => fails.push(format!("zeta={zeta}: {e}")),
        }
        match moments::moments_quadrature(&spec, 1e-10)
            .and_then(|m| moments::commutation_function(&m))
        {
            Ok(fc) => {
                let err = (fc.c - want).abs();
                if err > 1e-6 {
                    fails.push(format!("zeta={zeta}: quadrature C off by {err:.2e}"));
                }
            }
            Err(e) => fails.push(format!("zeta={zeta}: quadrature {e}")),
        }
    }
    summarize(fails, || {
        format!(
            "analytic C = 1/sqrt(1+zeta^2) to 1e-10 and quadrature C to 1e-6 on zeta grid {ZETA_GRID:?}"
        )
    })
}

fn c2_residue_embodiment() -> (bool, String) {
    let mut fails = Vec::new();
    for &zeta in &ZETA_GRID {
        let spec = DistributionSpec::lorentzian(zeta).expect("zeta grid is positive");
        let exact = match moments::moments_analytic(&spec) {
            Ok(m) => m,
            Err(e) => {
                fails.push(format!("zeta={zeta}: {e}"));
                continue;
            }
        };
        match moments::moments_quadrature(&spec, 1e-10) {
            Ok(quad) => {
                for (label, a, b) in [
                    ("Re I0", exact.i0.re, quad.i0.re),
                    ("Im I0", exact.i0.im, quad.i0.im),
                    ("Re I1", exact.i1.re, quad.i1.re),
                    ("Im I1", exact.i1.im, quad.i1.im),
                ] {
                    if (a - b).abs() > 1e-6 {
                        fails.push(format!("zeta={zeta}: {label} differs by {:.2e}", (a - b).abs()));
                    }
                }
            }
            Err(e) => fails.push(format!("zeta={zeta}: quadrature {e}")),
        }
        match moments::prop1_check(&spec) {
            Ok(report) => {
                if !report.conditions_met {
                    fails.push(format!("zeta={zeta}: conditions not met"));
                }
                match report.decay {
                    Some(d) if d.alpha == [-2.0, -1.0] && d.beta == [0.0, 0.0] => {}
                    other => fails.push(format!("zeta={zeta}: bad arc exponents {other:?}")),
                }
                if report.poles.len() != 1
                    || report.poles[0].location != Complex64::new(1.0, zeta)
                {
                    fails.push(format!("zeta={zeta}: pole set wrong"));
                }
            }
            Err(e) => fails.push(format!("zeta={zeta}: {e}")),
        }
    }
    summarize(fails, || {
        "residue and quadrature routes agree to 1e-6; alpha in {-2,-1}, beta = 0, single pole 1 + i*zeta".to_string()
    })
}

fn c3_uniform_moments() -> (bool, String) {
    let mut fails = Vec::new();
    let mut flagged = Vec::new();
    for zeta in [0.1, 0.5, 0.9, 1.5, 3.0] {
        let spec = DistributionSpec::uniform(zeta).expect("positive zeta");
        let exact = match moments::moments_analytic(&spec) {
            Ok(m) => m,
            Err(e) => {
                fails.push(format!("zeta={zeta}: {e}"));
                continue;
            }
        };
        match moments::moments_quadrature(&spec, 1e-10) {
            Ok(quad) => {
                for (label, a, b) in [
                    ("Re I0", exact.i0.re, quad.i0.re),
                    ("Im I0", exact.i0.im, quad.i0.im),
                    ("Re I1", exact.i1.re, quad.i1.re),
                    ("Im I1", exact.i1.im, quad.i1.im),
                ] {
                    if (a - b).abs() > 1e-8 {
                        fails.push(format!("zeta={zeta}: {label} differs by {:.2e}", (a - b).abs()));
                    }
                }
            }
            Err(e) => fails.push(format!("zeta={zeta}: quadrature {e}")),
        }
        // published closed form is reported, never asserted
        if let Ok(fc) = moments::commutation_function(&exact) {
            if let Some(cmp) = moments::compare_with_published(&spec, &fc) {
                if cmp.flagged {
                    flagged.push(format!(
                        "zeta={zeta}: definitional {:.6} vs published {:.6}",
                        cmp.definitional, cmp.published
                    ));
                }
            }
        }
    }
    if !fails.is_empty() {
        return (false, fails.join("; "));
    }
    let note = if flagged.is_empty() {
        "no discrepancy against the published closed form".to_string()
    } else {
        format!("routes agree to 1e-8; published-value discrepancy flagged: {}", flagged.join(", "))
    };
    (true, note)
}

fn c4_commutator_matrix() -> (bool, String) {
    let mut fails = Vec::new();
    let specs: Vec<(String, DistributionSpec)> = vec![
        ("lorentzian".into(), DistributionSpec::lorentzian(0.5).unwrap()),
        ("uniform".into(), DistributionSpec::uniform(0.5).unwrap()),
        ("gaussian".into(), DistributionSpec::gaussian(0.5).unwrap()),
        (
            "tabulated".into(),
            // piecewise-linear table reproducing the uniform density of
            // half-width 0.5
            DistributionSpec::tabulated(vec![(-0.5, 1.0), (0.5, 1.0)]).unwrap(),
        ),
    ];
    for (name, spec) in specs {
        match moments::coefficients(&spec, 1e-10) {
            Ok(fc) => match LadderSet::new(64, fc) {
                Ok(ls) => {
                    let comm = fock::commutator(ls.a_fuzzy(), ls.a_fuzzy_dag());
                    let dev = fock::interior_deviation_from_scaled_identity(
                        &comm,
                        Complex64::new(fc.c, 0.0),
                        2,
                    );
                    if dev > 1e-8 {
                        fails.push(format!("{name}: interior deviation {dev:.2e}"));
                    }
                }
                Err(e) => fails.push(format!("{name}: {e}")),
            },
            Err(e) => fails.push(format!("{name}: {e}")),
        }
    }
    summarize(fails, || {
        "interior [abar, abar_dag] = C*I to 1e-8 at dim 64 for all four kinds at width 0.5".to_string()
    })
}

fn c5_fuzzy_vacuum() -> (bool, String) {
    let zeta = 0.3;
    let mut fails = Vec::new();
    let fc = moments::coefficients(&DistributionSpec::lorentzian(zeta).unwrap(), 1e-10).unwrap();
    match fock::fuzzy_vacuum(&fc, 64, 1e-12) {
        Ok(vac) => {
            let overlap = vac.coeffs()[0].norm_sqr();
            let want = 2.0 / (zeta * zeta + 4.0).sqrt();
            if (overlap - want).abs() > 1e-8 {
                fails.push(format!("ground-state weight off by {:.2e}", (overlap - want).abs()));
            }
            let ls = LadderSet::new(64, fc).unwrap();
            let residual = (ls.a_fuzzy() * vac.coeffs()).norm();
            if residual > 1e-8 {
                fails.push(format!("vacuum residual {residual:.2e}"));
            }
            let a0 = vac.coeffs()[0];
            for k in 0..31 {
                let want = fock::vacuum_amplitude_ratio(&fc, k) * a0;
                let got = vac.coeffs()[2 * k];
                if (got - want).norm() > 1e-12 * want.norm().max(1e-300) {
                    fails.push(format!("recursion vs product formula at k={k}"));
                    break;
                }
            }
            if (0..64).step_by(2).any(|n| n + 1 < 64 && vac.coeffs()[n + 1].norm() != 0.0) {
                fails.push("odd coefficients not identically zero".into());
            }
        }
        Err(e) => fails.push(format!("vacuum construction: {e}")),
    }
    summarize(fails, || {
        "overlap = 2/sqrt(zeta^2+4) to 1e-8, residual < 1e-8, recursion = product formula to 1e-12, odd coefficients zero".to_string()
    })
}

fn c6_fuzzy_spectrum() -> (bool, String) {
    let mut fails = Vec::new();
    let fc = moments::coefficients(&DistributionSpec::lorentzian(0.3).unwrap(), 1e-10).unwrap();
    let ls = LadderSet::new(96, fc).unwrap();
    let h = ls.hamiltonian(&HamiltonianSpec::default()).unwrap();
    match fock::spectrum(&h, 8) {
        Ok(levels) => {
            for (n, e) in levels.iter().enumerate() {
                let want = fc.c * (n as f64 + 0.5);
                if (e - want).abs() > 1e-6 {
                    fails.push(format!("level {n} off by {:.2e}", (e - want).abs()));
                }
            }
            for w in levels.windows(2) {
                if ((w[1] - w[0]) - fc.c).abs() > 1e-6 {
                    fails.push(format!("gap {:.8} differs from C", w[1] - w[0]));
                    break;
                }
            }
        }
        Err(e) => fails.push(format!("{e}")),
    }
    summarize(fails, || {
        "8 lowest levels equal C*(n+1/2) to 1e-6 with uniform spacing C at dim 96".to_string()
    })
}

fn c7_densities() -> (bool, String) {
    let mut fails = Vec::new();
    let grid = Grid::default_position();
    let fc = moments::coefficients(&DistributionSpec::lorentzian(0.3).unwrap(), 1e-10).unwrap();
    let ls = LadderSet::new(64, fc).unwrap();
    let vac = fock::fuzzy_vacuum(&fc, 64, 1e-12).unwrap();
    let one = fock::fuzzy_fock_state(1, &vac, &ls).unwrap();
    for (name, state) in [("n=0", &vac), ("n=1", &one)] {
        match states::position_density(state, &grid) {
            Ok(rho) => {
                let mass = states::trapezoid(&grid, &rho);
                if (mass - 1.0).abs() > 1e-6 {
                    fails.push(format!("{name}: normalization off by {:.2e}", (mass - 1.0).abs()));
                }
                let n = rho.len();
                let parity_dev = (0..n)
                    .map(|i| (rho[i] - rho[n - 1 - i]).abs())
                    .fold(0.0f64, f64::max);
                if parity_dev > 1e-10 {
                    fails.push(format!("{name}: parity deviation {parity_dev:.2e}"));
                }
            }
            Err(e) => fails.push(format!("{name}: {e}")),
        }
    }
    // visibility clause: the fuzzy n=0 density is required to deviate from
    // the sharp gaussian by 1e-3 in sup-norm
    let rho_fuzzy = states::position_density(&vac, &grid).unwrap();
    let sup: f64 = grid
        .points()
        .iter()
        .zip(&rho_fuzzy)
        .map(|(x, r)| (r - (-x * x).exp() / std::f64::consts::PI.sqrt()).abs())
        .fold(0.0, f64::max);
    if sup < 1e-3 {
        fails.push(format!(
            "fuzzy n=0 density cannot separate from the sharp gaussian: sup-norm gap {sup:.2e}. \
             For this kind I1/I0 = i*zeta exactly, so the vacuum wavefunction is the phase-chirped \
             gaussian exp(-(1+i*zeta)*xi^2/2) whose modulus is undeformed for every zeta; the \
             requested 1e-3 separation contradicts the closed-form vacuum"
        ));
    }
    summarize(fails, || {
        "densities normalized to 1e-6, even/odd parity to 1e-10, deformation sup-norm visible"
            .to_string()
    })
}

fn c8_displacement_covariance() -> (bool, String) {
    let mut fails = Vec::new();
    let fc = moments::coefficients(&DistributionSpec::lorentzian(0.3).unwrap(), 1e-10).unwrap();
    let ls = LadderSet::new(64, fc).unwrap();
    for z in [
        Complex64::new(1.0, 0.0),
        Complex64::new(0.0, 1.0),
        Complex64::new(1.0, 1.0),
    ] {
        match states::fuzzy_displacement_matrix(&ls, z) {
            Ok(d) => {
                let moved = &d.adjoint() * ls.a_fuzzy() * &d;
                let shift = &moved - ls.a_fuzzy();
                // displacement identities hold on the leading dim/2 block
                let dev = fock::interior_deviation_from_scaled_identity(
                    &shift,
                    Complex64::new(fc.c, 0.0) * z,
                    32,
                );
                if dev > 1e-6 {
                    fails.push(format!("z={z}: covariance deviation {dev:.2e}"));
                }
            }
            Err(e) => fails.push(format!("z={z}: {e}")),
        }
        let arg = states::rescale_displacement(z, &fc);
        let want = fc.u * z - fc.v * z.conj();
        if (arg.z_rescaled - want).norm() > 1e-12 {
            fails.push(format!("z={z}: rescaling identity violated"));
        }
    }
    summarize(fails, || {
        "interior D_dag*abar*D - abar = C*z*I to 1e-6 and rescaling identity to 1e-12".to_string()
    })
}

fn c9_symmetry_verdicts() -> (bool, String) {
    let mut fails = Vec::new();
    let dim = 32;
    // parity invariance of the undriven fuzzy Hamiltonian, every kind
    let kinds: Vec<(String, moments::FuzzyCoefficients)> = vec![
        ("delta".into(), moments::FuzzyCoefficients::sharp()),
        (
            "lorentzian".into(),
            moments::coefficients(&DistributionSpec::lorentzian(0.5).unwrap(), 1e-10).unwrap(),
        ),
        (
            "uniform".into(),
            moments::coefficients(&DistributionSpec::uniform(0.5).unwrap(), 1e-10).unwrap(),
        ),
        (
            "gaussian".into(),
            moments::coefficients(&DistributionSpec::gaussian(0.5).unwrap(), 1e-10).unwrap(),
        ),
    ];
    for (name, fc) in kinds {
        let ls = LadderSet::new(dim, fc).unwrap();
        let h = ls.hamiltonian(&HamiltonianSpec::default()).unwrap();
        match symmetry::invariance_verdict(&symmetry::parity_transform(dim), &h, 1e-12) {
            Ok(v) => {
                if !v.invariant {
                    fails.push(format!("{name}: parity deviation {:.2e}", v.deviation));
                }
            }
            Err(e) => fails.push(format!("{name}: {e}")),
        }
    }
    // time reversal on the driven Hamiltonian
    let drive = HamiltonianSpec {
        drive: 1.0,
        ..Default::default()
    };
    let t = symmetry::time_reversal_transform(dim);
    let fc = moments::coefficients(&DistributionSpec::lorentzian(0.3).unwrap(), 1e-10).unwrap();
    let h = LadderSet::new(dim, fc).unwrap().hamiltonian(&drive).unwrap();
    match symmetry::invariance_verdict(&t, &h, 1e-8) {
        Ok(v) => {
            if v.invariant || v.deviation <= 1e-2 {
                fails.push(format!(
                    "lorentzian drive should break time reversal (deviation {:.2e})",
                    v.deviation
                ));
            }
        }
        Err(e) => fails.push(format!("lorentzian verdict: {e}")),
    }
    let fc = moments::coefficients(&DistributionSpec::uniform(0.5).unwrap(), 1e-10).unwrap();
    let h = LadderSet::new(dim, fc).unwrap().hamiltonian(&drive).unwrap();
    match symmetry::invariance_verdict(&t, &h, 1e-8) {
        Ok(v) => {
            if !v.invariant {
                fails.push(format!(
                    "uniform drive should preserve time reversal (deviation {:.2e})",
                    v.deviation
                ));
            }
        }
        Err(e) => fails.push(format!("uniform verdict: {e}")),
    }
    summarize(fails, || {
        "parity exact for all kinds; time reversal broken for complex coefficients, preserved for real ones".to_string()
    })
}

fn c10_dispersion_envelopes() -> (bool, String) {
    let mut fails = Vec::new();
    let grid: Vec<f64> = (1..=1000).map(|i| 0.01 * i as f64).collect();
    // mu = 1: exactly linear
    let m = dispersion::GammaModel::new(1.0, 1.0, 1.0, Kind::Lorentzian).unwrap();
    let slope = 1.0 / 1.25_f64.sqrt();
    for &w in &grid {
        let e = dispersion::excitation_energy(&m, w).unwrap();
        if (e - slope * w).abs() > 1e-12 {
            fails.push(format!("mu=1 not linear at w={w}"));
            break;
        }
    }
    // mu = 2, g = 2: saturating closed form
    let m = dispersion::GammaModel::new(2.0, 2.0, 1.0, Kind::Lorentzian).unwrap();
    for &w in &grid {
        let e = dispersion::excitation_energy(&m, w).unwrap();
        let want = w / (1.0 + w * w).sqrt();
        if (e - want).abs() > 1e-12 {
            fails.push(format!("mu=2 off closed form at w={w}"));
            break;
        }
    }
    // intermediate exponents stay inside the envelopes pointwise
    for mu in [1.25, 1.5, 1.75] {
        let m = dispersion::GammaModel::new(0.005, mu, 1.0, Kind::Lorentzian).unwrap();
        for &w in &grid {
            let e = dispersion::excitation_energy(&m, w).unwrap();
            let upper = w;
            let lower = w / (1.0 + w * w).sqrt();
            if !(e <= upper + 1e-12 && e >= lower - 1e-12) {
                fails.push(format!("mu={mu}: escapes envelopes at w={w}"));
                break;
            }
        }
    }
    summarize(fails, || {
        "mu=1 linear, mu=2 matches w/sqrt(1+w^2) to 1e-12, intermediate exponents stay between envelopes".to_string()
    })
}

fn c11_delta_limit() -> (bool, String) {
    let mut fails = Vec::new();
    let spec = DistributionSpec::delta();
    let m = moments::moments_analytic(&spec).unwrap();
    let fc = moments::commutation_function(&m).unwrap();
    if fc.c != 1.0 {
        fails.push(format!("C = {} instead of exactly 1", fc.c));
    }
    let ls = LadderSet::new(32, fc).unwrap();
    if fock::max_abs(&(ls.a_fuzzy() - ls.a_sharp())) != 0.0 {
        fails.push("fuzzy annihilator differs from the sharp one".into());
    }
    let h = ls.hamiltonian(&HamiltonianSpec::default()).unwrap();
    match fock::spectrum(&h, 10) {
        Ok(levels) => {
            for (n, e) in levels.iter().enumerate() {
                if (e - (n as f64 + 0.5)).abs() > 1e-10 {
                    fails.push(format!("level {n} off by {:.2e}", (e - (n as f64 + 0.5)).abs()));
                }
            }
        }
        Err(e) => fails.push(format!("{e}")),
    }
    let z = Complex64::new(0.7, -0.4);
    let arg = states::rescale_displacement(z, &fc);
    if arg.z_rescaled != z {
        fails.push("rescaled displacement differs from z".into());
    }
    match fock::fuzzy_vacuum(&fc, 16, 1e-12) {
        Ok(vac) => {
            if vac.coeffs()[0] != Complex64::new(1.0, 0.0)
                || vac.coeffs().iter().skip(1).any(|c| c.norm() != 0.0)
            {
                fails.push("vacuum is not exactly |0>".into());
            }
            let ls16 = LadderSet::new(16, fc).unwrap();
            for n in 0..4 {
                let state = fock::fuzzy_fock_state(n, &vac, &ls16).unwrap();
                let sharp = fock::FockVector::basis_state(16, n).unwrap();
                let f = state.overlap(&sharp).unwrap().norm_sqr();
                if (f - 1.0).abs() > 1e-12 {
                    fails.push(format!("fuzzy |{n}> deviates from sharp |{n}>"));
                }
            }
        }
        Err(e) => fails.push(format!("{e}")),
    }
    summarize(fails, || {
        "delta kind: C = 1 and abar = a exactly, spectrum n+1/2 to 1e-10, rescaling and vacuum exact".to_string()
    })
}

fn summarize(fails: Vec<String>, ok: impl FnOnce() -> String) -> (bool, String) {
    if fails.is_empty() {
        (true, ok())
    } else {
        (false, fails.join("; "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suites_cover_all_criteria_once() {
        let all = suite_ids("all").unwrap();
        assert_eq!(all.len(), CRITERIA_COUNT);
        let mut from_parts: Vec<usize> = ["moments", "fock", "states", "symmetry", "dispersion"]
            .iter()
            .flat_map(|s| suite_ids(s).unwrap())
            .collect();
        from_parts.sort_unstable();
        assert_eq!(from_parts, all);
        assert!(suite_ids("nonsense").is_none());
    }

    #[test]
    fn unknown_criterion_fails_gracefully() {
        let r = run_criterion(99);
        assert!(!r.passed);
    }
}
