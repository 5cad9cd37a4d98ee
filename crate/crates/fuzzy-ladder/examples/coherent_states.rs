//! Fuzzy displacements and the two coherent-state constructions: the
//! displaced vacuum D̂(𝔷)|0̄⟩ versus the weighted sum over fuzzy Fock states.
//! The two coincide in the sharp limit and separate once the coefficients
//! deform.
//!
//! Run: cargo run -p fuzzy-ladder --example coherent_states

use fuzzy_ladder::distributions::DistributionSpec;
use fuzzy_ladder::fock::{interior_deviation_from_scaled_identity, LadderSet};
use fuzzy_ladder::moments::{self, FuzzyCoefficients};
use fuzzy_ladder::states::{
    coherent_displaced, coherent_sum, fidelity, fuzzy_displacement_matrix, rescale_displacement,
};
use num_complex::Complex64;

fn main() {
    let dim = 64;
    let z = Complex64::new(1.0, 0.0);

    // sharp limit: both constructions give the textbook coherent state
    let sharp = FuzzyCoefficients::sharp();
    let d = coherent_displaced(z, &sharp, dim).unwrap();
    let s = coherent_sum(z, &sharp, dim).unwrap();
    println!("delta kind, z = 1: fidelity(displaced, summed) = {:.12}", fidelity(&d, &s).unwrap());

    println!();
    for (label, spec) in [
        ("lorentzian zeta=0.3", DistributionSpec::lorentzian(0.3).unwrap()),
        ("lorentzian zeta=0.5", DistributionSpec::lorentzian(0.5).unwrap()),
        ("uniform    zeta=0.5", DistributionSpec::uniform(0.5).unwrap()),
    ] {
        let fc = moments::coefficients(&spec, 1e-10).unwrap();
        let arg = rescale_displacement(z, &fc);
        let displaced = coherent_displaced(z, &fc, dim).unwrap();
        let summed = coherent_sum(z, &fc, dim).unwrap();
        let mean_n: f64 = displaced
            .coeffs()
            .iter()
            .enumerate()
            .map(|(n, c)| n as f64 * c.norm_sqr())
            .sum();
        println!("{label}");
        println!("  rescaled z              = {:+.6} {:+.6}i", arg.z_rescaled.re, arg.z_rescaled.im);
        println!("  <n> of displaced state  = {mean_n:.6}");
        println!(
            "  fidelity displaced/sum  = {:.9}",
            fidelity(&displaced, &summed).unwrap()
        );
        println!();
    }

    // the deformed displacement still shifts abar by C*z
    let fc = moments::coefficients(&DistributionSpec::lorentzian(0.3).unwrap(), 1e-10).unwrap();
    let ls = LadderSet::new(dim, fc).unwrap();
    println!("covariance D_dag abar D - abar = C*z on the leading dim/2 block:");
    for z in [Complex64::new(1.0, 0.0), Complex64::new(0.0, 1.0), Complex64::new(1.0, 1.0)] {
        let d = fuzzy_displacement_matrix(&ls, z).unwrap();
        let moved = &d.adjoint() * ls.a_fuzzy() * &d;
        let shift = &moved - ls.a_fuzzy();
        let dev = interior_deviation_from_scaled_identity(&shift, Complex64::new(fc.c, 0.0) * z, 32);
        println!("  z = {z}: deviation = {dev:.2e}");
    }
}
