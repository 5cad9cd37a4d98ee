//! The fuzzy vacuum |0̄⟩ over the sharp Fock basis: coefficient decay,
//! overlap with the sharp vacuum, and the a̅|0̄⟩ residual versus truncation.
//!
//! Run: cargo run -p fuzzy-ladder --example fuzzy_vacuum

use fuzzy_ladder::distributions::DistributionSpec;
use fuzzy_ladder::fock::{fuzzy_vacuum, suggested_dim, LadderSet};
use fuzzy_ladder::moments;

fn main() {
    let zeta = 0.3;
    let spec = DistributionSpec::lorentzian(zeta).unwrap();
    let fc = moments::coefficients(&spec, 1e-10).unwrap();
    let dim = 64;
    let vac = fuzzy_vacuum(&fc, dim, 1e-12).unwrap();

    println!("lorentzian zeta = {zeta}, dim = {dim}");
    println!("decay ratio |v/u|          = {:.6}", fc.decay_ratio());
    println!("suggested dim for 1e-12    = {}", suggested_dim(&fc, 1e-12));
    println!(
        "|<0|0bar>|^2               = {:.9}  (closed form {:.9})",
        vac.coeffs()[0].norm_sqr(),
        2.0 / (zeta * zeta + 4.0).sqrt()
    );
    println!("truncation tail            = {:.3e}", vac.tail());
    println!();
    println!("leading even coefficients (odd ones vanish identically):");
    for k in 0..6 {
        let c = vac.coeffs()[2 * k];
        println!("  alpha_{:<2} = {:+.8} {:+.8}i   |alpha| = {:.3e}", 2 * k, c.re, c.im, c.norm());
    }

    println!();
    println!("residual ||abar |0bar>|| as the truncation grows:");
    for dim in [16, 32, 64, 128] {
        let vac = fuzzy_vacuum(&fc, dim, 1.0).unwrap();
        let ls = LadderSet::new(dim, fc).unwrap();
        let r = (ls.a_fuzzy() * vac.coeffs()).norm();
        println!("  dim {dim:>3}: {r:.3e}");
    }

    // a wide distribution needs a bigger basis; the error is actionable
    let wide = moments::coefficients(&DistributionSpec::lorentzian(5.0).unwrap(), 1e-10).unwrap();
    match fuzzy_vacuum(&wide, 16, 1e-12) {
        Err(e) => println!("\nzeta = 5 at dim 16: {e}"),
        Ok(_) => unreachable!("tail cannot fit at dim 16"),
    }
}
