//! Spectra of sharp and fuzzy oscillator Hamiltonians: the fuzzy ladder
//! compresses the level spacing from 1 to C while the eigenstates keep
//! definite parity.
//!
//! Run: cargo run -p fuzzy-ladder --example spectrum

use fuzzy_ladder::distributions::DistributionSpec;
use fuzzy_ladder::fock::{eigen_system, spectrum, HamiltonianSpec, LadderSet};
use fuzzy_ladder::moments::{self, FuzzyCoefficients};

fn main() {
    let dim = 96;
    let sharp = LadderSet::new(dim, FuzzyCoefficients::sharp()).unwrap();
    let h_sharp = sharp
        .hamiltonian(&HamiltonianSpec {
            fuzzy: false,
            ..Default::default()
        })
        .unwrap();

    let fc = moments::coefficients(&DistributionSpec::lorentzian(0.3).unwrap(), 1e-10).unwrap();
    let fuzzy = LadderSet::new(dim, fc).unwrap();
    let h_fuzzy = fuzzy.hamiltonian(&HamiltonianSpec::default()).unwrap();

    let sharp_levels = spectrum(&h_sharp, 8).unwrap();
    let fuzzy_levels = spectrum(&h_fuzzy, 8).unwrap();

    println!("lorentzian zeta = 0.3: C = {:.9}", fc.c);
    println!("{:>3} {:>12} {:>12} {:>12}", "n", "sharp", "fuzzy", "C*(n+1/2)");
    for n in 0..8 {
        println!(
            "{n:>3} {:>12.8} {:>12.8} {:>12.8}",
            sharp_levels[n],
            fuzzy_levels[n],
            fc.c * (n as f64 + 0.5)
        );
    }

    let gaps: Vec<f64> = fuzzy_levels.windows(2).map(|w| w[1] - w[0]).collect();
    println!("\nfuzzy level spacing: {:?}", gaps.iter().map(|g| format!("{g:.8}")).collect::<Vec<_>>());

    // parity content of the lowest eigenvectors
    let (_, vecs) = eigen_system(&h_fuzzy).unwrap();
    println!("\nparity weight (even - odd) of the lowest eigenvectors:");
    for col in 0..6 {
        let mut even = 0.0;
        let mut odd = 0.0;
        for i in 0..dim {
            let w = vecs[(i, col)].norm_sqr();
            if i % 2 == 0 {
                even += w;
            } else {
                odd += w;
            }
        }
        println!("  state {col}: {:+.12}", even - odd);
    }
}
