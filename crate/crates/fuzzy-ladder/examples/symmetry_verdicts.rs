//! Invariance verdicts: parity survives the deformation for every kind,
//! while time reversal on the driven oscillator breaks exactly when the
//! moment coefficients turn complex.
//!
//! Run: cargo run -p fuzzy-ladder --example symmetry_verdicts

use fuzzy_ladder::distributions::DistributionSpec;
use fuzzy_ladder::fock::{HamiltonianSpec, LadderSet};
use fuzzy_ladder::moments::{self, FuzzyCoefficients};
use fuzzy_ladder::symmetry::{invariance_verdict, parity_transform, time_reversal_transform};

fn main() {
    let dim = 32;
    let kinds: Vec<(&str, FuzzyCoefficients)> = vec![
        ("delta", FuzzyCoefficients::sharp()),
        (
            "lorentzian 0.3",
            moments::coefficients(&DistributionSpec::lorentzian(0.3).unwrap(), 1e-10).unwrap(),
        ),
        (
            "uniform 0.5",
            moments::coefficients(&DistributionSpec::uniform(0.5).unwrap(), 1e-10).unwrap(),
        ),
        (
            "gaussian 0.5",
            moments::coefficients(&DistributionSpec::gaussian(0.5).unwrap(), 1e-10).unwrap(),
        ),
    ];

    println!("{:<16} {:>22} {:>22}", "kind", "parity (undriven)", "time reversal (driven)");
    for (label, fc) in kinds {
        let ls = LadderSet::new(dim, fc).unwrap();
        let undriven = ls.hamiltonian(&HamiltonianSpec::default()).unwrap();
        let driven = ls
            .hamiltonian(&HamiltonianSpec {
                drive: 1.0,
                ..Default::default()
            })
            .unwrap();
        let p = invariance_verdict(&parity_transform(dim), &undriven, 1e-10).unwrap();
        let t = invariance_verdict(&time_reversal_transform(dim), &driven, 1e-8).unwrap();
        println!(
            "{label:<16} {:>10} ({:.1e}) {:>10} ({:.1e})",
            if p.invariant { "invariant" } else { "broken" },
            p.deviation,
            if t.invariant { "invariant" } else { "broken" },
            t.deviation,
        );
    }

    println!();
    println!("complex moment coefficients are what breaks reversal of motion:");
    for zeta in [0.1, 0.3, 1.0] {
        let fc = moments::coefficients(&DistributionSpec::lorentzian(zeta).unwrap(), 1e-10).unwrap();
        println!(
            "  lorentzian zeta={zeta:<4} Im(u) = {:+.4e}, Im(v) = {:+.4e}",
            fc.u.im, fc.v.im
        );
    }
}
