//! The deformed commutation relation as a matrix identity: the interior
//! block of [a̅, a̅†] equals C·I, and cross-frequency sharp annihilators obey
//! [â_ω, â_ω′] = ½(√r - 1/√r).
//!
//! Run: cargo run -p fuzzy-ladder --example deformed_commutator

use fuzzy_ladder::distributions::DistributionSpec;
use fuzzy_ladder::fock::{
    annihilator_at_frequency, commutator, cross_commutator_value, interior_deviation_from_scaled_identity,
    LadderSet, SharpLadder,
};
use fuzzy_ladder::moments;
use num_complex::Complex64;

fn main() {
    let dim = 64;
    println!("interior block of [abar, abar_dag] against C*I at dim {dim}:");
    for (label, spec) in [
        ("lorentzian zeta=0.5", DistributionSpec::lorentzian(0.5).unwrap()),
        ("uniform    zeta=0.5", DistributionSpec::uniform(0.5).unwrap()),
        ("gaussian   zeta=0.5", DistributionSpec::gaussian(0.5).unwrap()),
    ] {
        let fc = moments::coefficients(&spec, 1e-10).unwrap();
        let ls = LadderSet::new(dim, fc).unwrap();
        let comm = commutator(ls.a_fuzzy(), ls.a_fuzzy_dag());
        let dev = interior_deviation_from_scaled_identity(&comm, Complex64::new(fc.c, 0.0), 2);
        println!("  {label}   C = {:.9}   max deviation = {:.2e}", fc.c, dev);
    }

    println!();
    println!("cross-frequency commutators [a_w, a_rw] (interior block vs formula):");
    let sl = SharpLadder::new(32).unwrap();
    for r in [0.25, 1.0, 4.0, 9.0] {
        let value = cross_commutator_value(r).unwrap();
        let m = annihilator_at_frequency(32, r).unwrap();
        let comm = commutator(sl.a(), &m);
        let dev = interior_deviation_from_scaled_identity(&comm, Complex64::new(value, 0.0), 2);
        println!("  r = {r:<5} value = {value:+.4}   matrix residual = {dev:.2e}");
    }

    // negative frequency turns annihilation into creation: a_{-w} = i a_dag
    let m = annihilator_at_frequency(32, -1.0).unwrap();
    let want = sl.a_dag() * Complex64::new(0.0, 1.0);
    let dev = (0..32)
        .flat_map(|i| (0..32).map(move |j| (i, j)))
        .map(|(i, j)| (m[(i, j)] - want[(i, j)]).norm())
        .fold(0.0f64, f64::max);
    println!();
    println!("a at r = -1 equals i*a_dag: max entry difference = {dev:.2e}");
}
