use fuzzy_ladder::*;
use fuzzy_ladder::states::Grid;

fn main() {
    let fc = moments::coefficients(&DistributionSpec::lorentzian(0.3).unwrap(), 1e-10).unwrap();
    println!("u={} v={} c={}", fc.u, fc.v, fc.c);
    let vac = fock::fuzzy_vacuum(&fc, 64, 1e-12).unwrap();
    println!("a0={} a2={} a4={}", vac.coeffs()[0], vac.coeffs()[2], vac.coeffs()[4]);
    let grid = Grid::default_position();
    let rho = states::position_density(&vac, &grid).unwrap();
    let sup: f64 = grid.points().iter().zip(&rho)
        .map(|(x, r)| (r - (-x * x).exp() / std::f64::consts::PI.sqrt()).abs())
        .fold(0.0, f64::max);
    println!("sup dev from gaussian = {sup:.6e}");
    println!("rho[500] (xi=0) = {}, gaussian(0) = {}", rho[500], 1.0/std::f64::consts::PI.sqrt());
}
