//! Complex square root on the branch with cut along the negative imaginary
//! axis, i.e. arguments taken in [-π/2, 3π/2).
//!
//! With this choice √(-1) = +i and 1/√(-1) = -i, so for r > 0
//!
//! ```text
//! √(-r) = +i·√r,    1/√(-r) = -i/√r.
//! ```
//!
//! For arguments in the closed right/upper half-planes the result coincides
//! with the principal root. Every complex root in this crate goes through
//! [`sqrt`] or [`inv_sqrt_real`].

use std::f64::consts::{FRAC_PI_2, PI};

use num_complex::Complex64;

/// Square root of `z` with the cut along the negative imaginary axis.
pub fn sqrt(z: Complex64) -> Complex64 {
    let mut theta = z.arg();
    if theta < -FRAC_PI_2 {
        theta += 2.0 * PI;
    }
    Complex64::from_polar(z.norm().sqrt(), 0.5 * theta)
}

/// `1/√r` for real `r ≠ 0` on the same branch: `-i/√|r|` when `r < 0`.
pub fn inv_sqrt_real(r: f64) -> Complex64 {
    if r >= 0.0 {
        Complex64::new(1.0 / r.sqrt(), 0.0)
    } else {
        Complex64::new(0.0, -1.0 / (-r).sqrt())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn principal_on_right_half_plane() {
        let z = Complex64::new(1.0, 0.3);
        let r = sqrt(z);
        assert_relative_eq!((r * r).re, z.re, epsilon = 1e-15);
        assert_relative_eq!((r * r).im, z.im, epsilon = 1e-15);
        assert!(r.re > 0.0);
    }

    #[test]
    fn sqrt_of_minus_one_is_plus_i() {
        let r = sqrt(Complex64::new(-1.0, 0.0));
        assert_relative_eq!(r.re, 0.0, epsilon = 1e-15);
        assert_relative_eq!(r.im, 1.0, epsilon = 1e-15);
    }

    #[test]
    fn negative_reals_map_to_positive_imaginary_axis() {
        for r in [0.5, 1.0, 4.0, 100.0] {
            let s = sqrt(Complex64::new(-r, 0.0));
            assert_relative_eq!(s.re, 0.0, epsilon = 1e-14);
            assert_relative_eq!(s.im, r.sqrt(), epsilon = 1e-14);
        }
    }

    #[test]
    fn inv_sqrt_real_branch() {
        let w = inv_sqrt_real(-4.0);
        assert_relative_eq!(w.re, 0.0, epsilon = 1e-15);
        assert_relative_eq!(w.im, -0.5, epsilon = 1e-15);
        let p = inv_sqrt_real(4.0);
        assert_relative_eq!(p.re, 0.5, epsilon = 1e-15);
        assert_relative_eq!(p.im, 0.0, epsilon = 1e-15);
    }

    #[test]
    fn continuous_approaching_cut_from_fourth_quadrant() {
        // just right of the cut: arg close to -π/2
        let z = Complex64::new(1e-9, -1.0);
        let r = sqrt(z);
        // e^{-iπ/4} direction
        assert!(r.re > 0.0 && r.im < 0.0);
        // just left of the cut picks the other sheet
        let z = Complex64::new(-1e-9, -1.0);
        let r = sqrt(z);
        assert!(r.re < 0.0 && r.im > 0.0);
    }
}
