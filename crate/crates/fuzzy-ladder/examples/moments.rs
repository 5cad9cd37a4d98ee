//! Moment integrals I0, I1 and the commutation function C for each
//! distribution kind, with the analytic and quadrature routes side by side.
//!
//! Run: cargo run -p fuzzy-ladder --example moments

use fuzzy_ladder::distributions::DistributionSpec;
use fuzzy_ladder::moments;

fn show(label: &str, spec: &DistributionSpec) {
    let pair = moments::moments(spec, 1e-10).unwrap();
    let fc = moments::commutation_function(&pair).unwrap();
    println!("{label:<22} method={:<11} I0 = {:+.6} {:+.6}i", pair.method.as_str(), pair.i0.re, pair.i0.im);
    println!("{:<22} {:<18} I1 = {:+.6} {:+.6}i", "", "", pair.i1.re, pair.i1.im);
    println!("{:<22} {:<18} C  = {:.9}", "", "", fc.c);
    if let Some(cmp) = moments::compare_with_published(spec, &fc) {
        println!(
            "{:<22} {:<18} published closed form: {:.9} (discrepancy {:.2e}{})",
            "",
            "",
            cmp.published,
            cmp.discrepancy,
            if cmp.flagged { ", flagged" } else { "" }
        );
    }
    if let Some(anomaly) = fc.sub_bosonic_anomaly() {
        println!("{:<22} {:<18} note: {anomaly}", "", "");
    }
    println!();
}

fn main() {
    show("delta", &DistributionSpec::delta());
    show("lorentzian zeta=0.3", &DistributionSpec::lorentzian(0.3).unwrap());
    show("lorentzian zeta=2.0", &DistributionSpec::lorentzian(2.0).unwrap());
    show("uniform zeta=0.5", &DistributionSpec::uniform(0.5).unwrap());
    show("uniform zeta=2.0", &DistributionSpec::uniform(2.0).unwrap());
    show("gaussian zeta=0.2", &DistributionSpec::gaussian(0.2).unwrap());
    let triangle =
        DistributionSpec::tabulated(vec![(-1.0, 0.0), (0.0, 1.0), (1.0, 0.0)]).unwrap();
    show("tabulated triangle", &triangle);

    // quadrature agrees with the residue route wherever both apply
    println!("residue vs quadrature for the lorentzian kind:");
    for zeta in [0.1, 0.5, 1.0, 2.0] {
        let spec = DistributionSpec::lorentzian(zeta).unwrap();
        let exact = moments::moments_analytic(&spec).unwrap();
        let quad = moments::moments_quadrature(&spec, 1e-10).unwrap();
        println!(
            "  zeta={zeta:<4} |I0_res - I0_quad| = {:.2e}   |I1_res - I1_quad| = {:.2e}",
            (exact.i0 - quad.i0).norm(),
            (exact.i1 - quad.i1).norm()
        );
    }
}
