//! Normalized frequency-width distributions in dimensionless form.
//!
//! A width distribution f(Δω) with characteristic width Γ enters all
//! calculations through its dimensionless density f′(x) = ω·f(Δω), x = Δω/ω,
//! parametrized by ζ = Γ/2ω. The supported shapes:
//!
//! | kind       | f′(x)                                   |
//! |------------|------------------------------------------|
//! | delta      | symbolic δ(x); no pointwise density      |
//! | lorentzian | (1/π)·ζ/(x² + ζ²)                        |
//! | uniform    | 1/(2ζ) on [-ζ, ζ], else 0                |
//! | gaussian   | exp(-x²/2ζ²)/(ζ√(2π)), ζ read as σ       |
//! | tabulated  | linear interpolation of (x, f) samples   |
//!
//! The delta kind is handled symbolically upstream (its moments are exact
//! constants), so asking it for a density is an error.

use std::f64::consts::PI;
use std::fmt;
use std::path::Path;
use std::str::FromStr;

use thiserror::Error;

use crate::quadrature;

/// Distribution shape selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Kind {
    Delta,
    Lorentzian,
    Uniform,
    Gaussian,
    Tabulated,
}

impl Kind {
    pub fn as_str(&self) -> &'static str {
        match self {
            Kind::Delta => "delta",
            Kind::Lorentzian => "lorentzian",
            Kind::Uniform => "uniform",
            Kind::Gaussian => "gaussian",
            Kind::Tabulated => "tabulated",
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Kind {
    type Err = DistError;

    fn from_str(s: &str) -> Result<Self, DistError> {
        match s {
            "delta" => Ok(Kind::Delta),
            "lorentzian" => Ok(Kind::Lorentzian),
            "uniform" => Ok(Kind::Uniform),
            "gaussian" => Ok(Kind::Gaussian),
            "tabulated" => Ok(Kind::Tabulated),
            other => Err(DistError::UnknownKind(other.to_string())),
        }
    }
}

#[derive(Debug, Error)]
pub enum DistError {
    #[error("unknown distribution kind `{0}`")]
    UnknownKind(String),
    #[error("{0} distribution requires zeta > 0 (got {1})")]
    NonPositiveZeta(Kind, f64),
    #[error("delta distribution takes zeta = 0 (got {0})")]
    DeltaNonZeroZeta(f64),
    #[error("non-finite parameter in distribution spec")]
    NonFinite,
    #[error("delta distribution has no pointwise density")]
    DeltaHasNoDensity,
    #[error("tabulated distribution needs at least two points")]
    TableTooShort,
    #[error("table x values must be strictly increasing (row {0})")]
    TableNotIncreasing(usize),
    #[error("table densities must be nonnegative (row {0})")]
    TableNegativeDensity(usize),
    #[error("tabulated CSV: {0}")]
    TableCsv(String),
    #[error("io error reading table: {0}")]
    TableIo(#[from] std::io::Error),
    #[error(transparent)]
    Quadrature(#[from] quadrature::QuadError),
}

/// A validated width distribution.
///
/// Construction checks the invariants (ζ > 0 for smooth kinds, strictly
/// increasing table abscissae, nonnegative densities); evaluation is pure and
/// the value is freely shareable across threads.
#[derive(Debug, Clone)]
pub struct DistributionSpec {
    kind: Kind,
    zeta: f64,
    table: Option<Vec<(f64, f64)>>,
    warnings: Vec<String>,
}

impl DistributionSpec {
    pub fn delta() -> Self {
        DistributionSpec {
            kind: Kind::Delta,
            zeta: 0.0,
            table: None,
            warnings: Vec::new(),
        }
    }

    pub fn lorentzian(zeta: f64) -> Result<Self, DistError> {
        Self::smooth(Kind::Lorentzian, zeta)
    }

    pub fn uniform(zeta: f64) -> Result<Self, DistError> {
        Self::smooth(Kind::Uniform, zeta)
    }

    /// `zeta` is reinterpreted as the standard deviation σ of x = Δω/ω.
    pub fn gaussian(zeta: f64) -> Result<Self, DistError> {
        Self::smooth(Kind::Gaussian, zeta)
    }

    fn smooth(kind: Kind, zeta: f64) -> Result<Self, DistError> {
        if !zeta.is_finite() {
            return Err(DistError::NonFinite);
        }
        if zeta <= 0.0 {
            return Err(DistError::NonPositiveZeta(kind, zeta));
        }
        Ok(DistributionSpec {
            kind,
            zeta,
            table: None,
            warnings: Vec::new(),
        })
    }

    /// Build from a physical width: ζ = Γ/(2ω).
    pub fn from_width(kind: Kind, gamma: f64, omega: f64) -> Result<Self, DistError> {
        if !(gamma.is_finite() && omega.is_finite()) || omega <= 0.0 || gamma < 0.0 {
            return Err(DistError::NonFinite);
        }
        let zeta = gamma / (2.0 * omega);
        match kind {
            Kind::Delta => {
                if zeta != 0.0 {
                    return Err(DistError::DeltaNonZeroZeta(zeta));
                }
                Ok(Self::delta())
            }
            Kind::Tabulated => Err(DistError::TableTooShort),
            _ => Self::smooth(kind, zeta),
        }
    }

    /// Piecewise-linear density from `(x, f)` samples; compactly supported on
    /// the table range. Asymmetric or off-center tables are accepted with a
    /// warning rather than rejected.
    pub fn tabulated(points: Vec<(f64, f64)>) -> Result<Self, DistError> {
        if points.len() < 2 {
            return Err(DistError::TableTooShort);
        }
        for (i, &(x, f)) in points.iter().enumerate() {
            if !(x.is_finite() && f.is_finite()) {
                return Err(DistError::NonFinite);
            }
            if i > 0 && x <= points[i - 1].0 {
                return Err(DistError::TableNotIncreasing(i));
            }
            if f < 0.0 {
                return Err(DistError::TableNegativeDensity(i));
            }
        }
        let mut spec = DistributionSpec {
            kind: Kind::Tabulated,
            zeta: table_rms_width(&points),
            table: Some(points),
            warnings: Vec::new(),
        };
        spec.collect_table_warnings();
        Ok(spec)
    }

    /// Read a tabulated distribution from a two-column CSV (header row, `.`
    /// decimal separator, strictly increasing x).
    pub fn tabulated_from_csv(path: &Path) -> Result<Self, DistError> {
        let text = std::fs::read_to_string(path)?;
        Self::tabulated_from_csv_str(&text)
    }

    pub fn tabulated_from_csv_str(text: &str) -> Result<Self, DistError> {
        let mut lines = text.lines();
        let header = lines
            .next()
            .ok_or_else(|| DistError::TableCsv("empty file".to_string()))?;
        if header.split(',').count() != 2 {
            return Err(DistError::TableCsv(format!(
                "expected a two-column header, got `{header}`"
            )));
        }
        let mut points = Vec::new();
        for (lineno, line) in lines.enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let mut cols = line.split(',');
            let x = cols
                .next()
                .and_then(|s| s.trim().parse::<f64>().ok())
                .ok_or_else(|| DistError::TableCsv(format!("bad x on line {}", lineno + 2)))?;
            let f = cols
                .next()
                .and_then(|s| s.trim().parse::<f64>().ok())
                .ok_or_else(|| DistError::TableCsv(format!("bad f on line {}", lineno + 2)))?;
            if cols.next().is_some() {
                return Err(DistError::TableCsv(format!(
                    "more than two columns on line {}",
                    lineno + 2
                )));
            }
            points.push((x, f));
        }
        Self::tabulated(points)
    }

    fn collect_table_warnings(&mut self) {
        let table = self.table.as_ref().expect("tabulated spec");
        let peak = table.iter().map(|&(_, f)| f).fold(0.0f64, f64::max);
        if peak <= 0.0 {
            self.warnings.push("table density is identically zero".to_string());
            return;
        }
        let at_zero = self.density(0.0).unwrap_or(0.0);
        if at_zero < peak * (1.0 - 1e-9) {
            self.warnings
                .push("table density is not peaked at x = 0".to_string());
        }
        let asym = table
            .iter()
            .map(|&(x, f)| (f - self.density(-x).unwrap_or(0.0)).abs())
            .fold(0.0f64, f64::max);
        if asym > 1e-9 * peak {
            self.warnings
                .push("table density is not symmetric about x = 0".to_string());
        }
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    /// Dimensionless width ζ (for tabulated kinds, the RMS width of the table).
    pub fn zeta(&self) -> f64 {
        self.zeta
    }

    pub fn table(&self) -> Option<&[(f64, f64)]> {
        self.table.as_deref()
    }

    /// Construction warnings (only tabulated kinds produce any).
    pub fn warnings(&self) -> &[String] {
        &self.warnings
    }

    /// Dimensionless density f′(x). Errors for the delta kind.
    pub fn density(&self, x: f64) -> Result<f64, DistError> {
        match self.kind {
            Kind::Delta => Err(DistError::DeltaHasNoDensity),
            Kind::Lorentzian => {
                let z = self.zeta;
                Ok(z / (PI * (x * x + z * z)))
            }
            Kind::Uniform => {
                if x.abs() <= self.zeta {
                    Ok(1.0 / (2.0 * self.zeta))
                } else {
                    Ok(0.0)
                }
            }
            Kind::Gaussian => {
                let s = self.zeta;
                Ok((-x * x / (2.0 * s * s)).exp() / (s * (2.0 * PI).sqrt()))
            }
            Kind::Tabulated => {
                let t = self.table.as_ref().expect("tabulated spec");
                let n = t.len();
                if x < t[0].0 || x > t[n - 1].0 {
                    return Ok(0.0);
                }
                let idx = match t.binary_search_by(|&(xi, _)| xi.partial_cmp(&x).unwrap()) {
                    Ok(i) => return Ok(t[i].1),
                    Err(i) => i,
                };
                let (x0, f0) = t[idx - 1];
                let (x1, f1) = t[idx];
                Ok(f0 + (f1 - f0) * (x - x0) / (x1 - x0))
            }
        }
    }

    /// g_k(x) = (x-1)^k · f′(x-1), the shifted integrand of the moment
    /// integrals.
    pub fn shifted_integrand(&self, k: u8, x: f64) -> Result<f64, DistError> {
        debug_assert!(k <= 1);
        let d = self.density(x - 1.0)?;
        Ok(if k == 0 { d } else { (x - 1.0) * d })
    }

    /// Compact support of f′ in x, when one exists.
    pub fn support(&self) -> Option<(f64, f64)> {
        match self.kind {
            Kind::Uniform => Some((-self.zeta, self.zeta)),
            Kind::Tabulated => {
                let t = self.table.as_ref().expect("tabulated spec");
                Some((t[0].0, t[t.len() - 1].0))
            }
            _ => None,
        }
    }

    /// Interior structure points of f′ (support edges, table nodes, peak
    /// scale). Quadrature seeds its subdivision here so narrow peaks are not
    /// missed.
    pub fn breakpoints(&self) -> Vec<f64> {
        match self.kind {
            Kind::Delta => Vec::new(),
            Kind::Uniform => vec![-self.zeta, 0.0, self.zeta],
            Kind::Tabulated => {
                let t = self.table.as_ref().expect("tabulated spec");
                t.iter().map(|&(x, _)| x).collect()
            }
            _ => {
                let z = self.zeta;
                let mut cuts = vec![0.0];
                for m in [1.0, 4.0, 16.0, 64.0] {
                    cuts.push(-m * z);
                    cuts.push(m * z);
                }
                cuts.sort_by(|a, b| a.partial_cmp(b).unwrap());
                cuts
            }
        }
    }

    /// |∫ f′(x) dx − 1| computed with the adaptive quadrature engine.
    pub fn normalization_residual(&self) -> Result<f64, DistError> {
        if self.kind == Kind::Delta {
            return Err(DistError::DeltaHasNoDensity);
        }
        let spec = self.clone();
        let f = move |x: f64| spec.density(x).unwrap_or(0.0);
        let total = match self.support() {
            Some((lo, hi)) => {
                let pieces = quadrature::pieces_between(lo, hi, &self.breakpoints());
                quadrature::integrate(f, &pieces, 1e-12, 1e-15, 4000)?.value
            }
            None => {
                let cuts = self.breakpoints();
                let near: Vec<(f64, f64)> =
                    quadrature::pieces_between(-1.0, 1.0, &cuts);
                let g = f.clone();
                let right =
                    quadrature::integrate_semi_infinite(f, 1.0, &[4.0, 16.0, 256.0], 1e-12, 1e-15, 4000)?;
                let left = quadrature::integrate_semi_infinite(
                    move |x| g(-x),
                    1.0,
                    &[4.0, 16.0, 256.0],
                    1e-12,
                    1e-15,
                    4000,
                )?;
                let spec2 = self.clone();
                let center = quadrature::integrate(
                    move |x| spec2.density(x).unwrap_or(0.0),
                    &near,
                    1e-12,
                    1e-15,
                    4000,
                )?;
                center.value + right.value + left.value
            }
        };
        Ok((total - 1.0).abs())
    }
}

fn table_rms_width(points: &[(f64, f64)]) -> f64 {
    // trapezoid moments of the piecewise-linear density
    let mut mass = 0.0;
    let mut second = 0.0;
    for w in points.windows(2) {
        let (x0, f0) = w[0];
        let (x1, f1) = w[1];
        let h = x1 - x0;
        mass += 0.5 * (f0 + f1) * h;
        second += 0.5 * (f0 * x0 * x0 + f1 * x1 * x1) * h;
    }
    if mass > 0.0 {
        (second / mass).max(0.0).sqrt()
    } else {
        0.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn lorentzian_density_at_zero() {
        let d = DistributionSpec::lorentzian(0.5).unwrap();
        assert_relative_eq!(d.density(0.0).unwrap(), 1.0 / (PI * 0.5), epsilon = 1e-12);
    }

    #[test]
    fn uniform_density_inside_and_outside() {
        let d = DistributionSpec::uniform(0.5).unwrap();
        assert_relative_eq!(d.density(0.0).unwrap(), 1.0, epsilon = 1e-15);
        assert_eq!(d.density(0.7).unwrap(), 0.0);
        assert_relative_eq!(d.density(0.5).unwrap(), 1.0, epsilon = 1e-15);
    }

    #[test]
    fn gaussian_density_normalization_constant() {
        let d = DistributionSpec::gaussian(0.2).unwrap();
        assert_relative_eq!(
            d.density(0.0).unwrap(),
            1.0 / (0.2 * (2.0 * PI).sqrt()),
            epsilon = 1e-12
        );
    }

    #[test]
    fn delta_has_no_density() {
        let d = DistributionSpec::delta();
        assert!(matches!(d.density(0.0), Err(DistError::DeltaHasNoDensity)));
        assert!(matches!(
            d.normalization_residual(),
            Err(DistError::DeltaHasNoDensity)
        ));
    }

    #[test]
    fn zeta_must_be_positive_for_smooth_kinds() {
        assert!(DistributionSpec::lorentzian(0.0).is_err());
        assert!(DistributionSpec::uniform(-1.0).is_err());
        assert!(DistributionSpec::gaussian(f64::NAN).is_err());
    }

    #[test]
    fn from_width_computes_zeta() {
        let d = DistributionSpec::from_width(Kind::Lorentzian, 0.6, 1.0).unwrap();
        assert_relative_eq!(d.zeta(), 0.3, epsilon = 1e-15);
        let d = DistributionSpec::from_width(Kind::Delta, 0.0, 2.0).unwrap();
        assert_eq!(d.kind(), Kind::Delta);
    }

    #[test]
    fn shifted_integrand_values() {
        let d = DistributionSpec::lorentzian(0.5).unwrap();
        // g0(1) = f'(0)
        assert_relative_eq!(
            d.shifted_integrand(0, 1.0).unwrap(),
            1.0 / (PI * 0.5),
            epsilon = 1e-12
        );
        // (x-1) factor kills g1 at x = 1
        assert_eq!(d.shifted_integrand(1, 1.0).unwrap(), 0.0);
        let u = DistributionSpec::uniform(0.5).unwrap();
        assert_relative_eq!(u.shifted_integrand(1, 1.4).unwrap(), 0.4, epsilon = 1e-12);
    }

    #[test]
    fn normalization_residuals() {
        let lor = DistributionSpec::lorentzian(0.3).unwrap();
        assert!(lor.normalization_residual().unwrap() < 1e-8);
        let uni = DistributionSpec::uniform(2.0).unwrap();
        assert!(uni.normalization_residual().unwrap() < 1e-12);
        let gau = DistributionSpec::gaussian(0.7).unwrap();
        assert!(gau.normalization_residual().unwrap() < 1e-8);
        // non-normalized table reports a residual instead of failing
        let tab = DistributionSpec::tabulated(vec![(-1.0, 0.0), (0.0, 3.0), (1.0, 0.0)]).unwrap();
        let r = tab.normalization_residual().unwrap();
        assert_relative_eq!(r, 2.0, epsilon = 1e-10);
    }

    #[test]
    fn densities_are_symmetric_and_peaked_at_zero() {
        let grid: Vec<f64> = (0..200).map(|i| -3.0 + 0.03 * i as f64).collect();
        for spec in [
            DistributionSpec::lorentzian(0.4).unwrap(),
            DistributionSpec::uniform(0.8).unwrap(),
            DistributionSpec::gaussian(0.25).unwrap(),
        ] {
            let peak = spec.density(0.0).unwrap();
            for &x in &grid {
                let f = spec.density(x).unwrap();
                assert_relative_eq!(f, spec.density(-x).unwrap(), epsilon = 1e-13);
                assert!(f <= peak + 1e-13);
            }
        }
    }

    #[test]
    fn lorentzian_tail_lifts_with_width() {
        for (x, pairs) in [(1.0, (0.2, 0.6)), (2.5, (0.5, 2.0))] {
            let (za, zb) = pairs;
            let fa = DistributionSpec::lorentzian(za).unwrap().density(x).unwrap();
            let fb = DistributionSpec::lorentzian(zb).unwrap().density(x).unwrap();
            assert!(zb < x && fa < fb, "tail at {x} should grow from ζ={za} to ζ={zb}");
        }
    }

    #[test]
    fn tabulated_interpolates_linearly() {
        let t = DistributionSpec::tabulated(vec![(-1.0, 0.0), (0.0, 1.0), (1.0, 0.0)]).unwrap();
        assert_relative_eq!(t.density(0.5).unwrap(), 0.5, epsilon = 1e-15);
        assert_relative_eq!(t.density(-0.25).unwrap(), 0.75, epsilon = 1e-15);
        assert_eq!(t.density(1.5).unwrap(), 0.0);
        assert!(t.warnings().is_empty());
    }

    #[test]
    fn tabulated_rejects_bad_tables() {
        assert!(matches!(
            DistributionSpec::tabulated(vec![(0.0, 1.0)]),
            Err(DistError::TableTooShort)
        ));
        assert!(matches!(
            DistributionSpec::tabulated(vec![(0.0, 1.0), (0.0, 2.0)]),
            Err(DistError::TableNotIncreasing(1))
        ));
        assert!(matches!(
            DistributionSpec::tabulated(vec![(0.0, 1.0), (1.0, -0.1)]),
            Err(DistError::TableNegativeDensity(1))
        ));
    }

    #[test]
    fn asymmetric_table_warns_but_is_accepted() {
        let t =
            DistributionSpec::tabulated(vec![(-0.5, 0.2), (0.0, 1.0), (2.0, 0.0)]).unwrap();
        assert!(!t.warnings().is_empty());
    }

    #[test]
    fn csv_round_trip_and_errors() {
        let t = DistributionSpec::tabulated_from_csv_str("x,f\n-1.0,0.0\n0.0,1.0\n1.0,0.0\n")
            .unwrap();
        assert_eq!(t.table().unwrap().len(), 3);
        assert!(DistributionSpec::tabulated_from_csv_str("").is_err());
        assert!(DistributionSpec::tabulated_from_csv_str("x\n1.0\n").is_err());
        assert!(DistributionSpec::tabulated_from_csv_str("x,f\n0.0,oops\n").is_err());
    }

    #[test]
    fn shifted_integrand_normalization_is_preserved() {
        // g0 integrates to 1: the x -> x-1 shift does not change mass
        let spec = DistributionSpec::gaussian(0.3).unwrap();
        let s = spec.clone();
        let pieces = quadrature::pieces_between(-4.0, 6.0, &[0.5, 1.0, 1.5]);
        let r = quadrature::integrate(
            move |x| s.shifted_integrand(0, x).unwrap(),
            &pieces,
            1e-12,
            1e-15,
            4000,
        )
        .unwrap();
        assert_relative_eq!(r.value, 1.0, epsilon = 1e-8);
    }
}
