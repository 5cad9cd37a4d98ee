//! Position densities of sharp and fuzzy eigenstates.
//!
//! For the Lorentzian kind the fuzzy vacuum is a phase-chirped gaussian
//! (I1/I0 = i*zeta exactly), so its density coincides with the sharp one to
//! machine precision — the deformation hides entirely in the phase. The
//! uniform kind has real I1/I0 and genuinely reshapes the density.
//!
//! Run: cargo run -p fuzzy-ladder --example wavefunctions

use fuzzy_ladder::distributions::DistributionSpec;
use fuzzy_ladder::fock::{fuzzy_fock_state, fuzzy_vacuum, FockVector, LadderSet};
use fuzzy_ladder::moments;
use fuzzy_ladder::states::{position_density, trapezoid, Grid};

fn sup_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

fn main() {
    let dim = 64;
    let grid = Grid::default_position();
    let sharp_vac = FockVector::basis_state(dim, 0).unwrap();
    let rho_sharp = position_density(&sharp_vac, &grid).unwrap();

    for (label, spec) in [
        ("lorentzian zeta=0.3", DistributionSpec::lorentzian(0.3).unwrap()),
        ("uniform    zeta=0.5", DistributionSpec::uniform(0.5).unwrap()),
    ] {
        let fc = moments::coefficients(&spec, 1e-10).unwrap();
        let ls = LadderSet::new(dim, fc).unwrap();
        let vac = fuzzy_vacuum(&fc, dim, 1e-12).unwrap();
        let rho0 = position_density(&vac, &grid).unwrap();
        let one = fuzzy_fock_state(1, &vac, &ls).unwrap();
        let rho1 = position_density(&one, &grid).unwrap();

        println!("{label}");
        println!("  n=0 density mass        = {:.9}", trapezoid(&grid, &rho0));
        println!("  n=1 density mass        = {:.9}", trapezoid(&grid, &rho1));
        println!("  n=0 density at xi=0     = {:.9}", rho0[grid.len() / 2]);
        println!("  n=1 density at xi=0     = {:.3e}", rho1[grid.len() / 2]);
        println!("  sup |fuzzy0 - sharp0|   = {:.3e}", sup_diff(&rho0, &rho_sharp));
        let parity = (0..grid.len())
            .map(|i| (rho0[i] - rho0[grid.len() - 1 - i]).abs())
            .fold(0.0f64, f64::max);
        println!("  parity asymmetry        = {parity:.3e}");
        println!();
    }

    // a compact table of the uniform-kind deformation
    let fc = moments::coefficients(&DistributionSpec::uniform(0.5).unwrap(), 1e-10).unwrap();
    let vac = fuzzy_vacuum(&fc, dim, 1e-12).unwrap();
    let rho0 = position_density(&vac, &grid).unwrap();
    println!("{:>6} {:>12} {:>12}", "xi", "sharp", "uniform-fuzzy");
    for &xi in &[0.0, 0.5, 1.0, 1.5, 2.0] {
        let idx = ((xi + 5.0) / 10.0 * (grid.len() - 1) as f64).round() as usize;
        println!("{xi:>6.1} {:>12.8} {:>12.8}", rho_sharp[idx], rho0[idx]);
    }
}
