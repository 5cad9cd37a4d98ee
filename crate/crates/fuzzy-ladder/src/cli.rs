//! Command-level API behind the `fuzzy-ladder` binary: configuration,
//! payload construction, and deterministic CSV/JSON emission.
//!
//! Payloads are plain strings so they can be tested byte-for-byte. Floats
//! are serialized with 17 significant digits (`{:.16e}`), which round-trips
//! f64 losslessly; complex numbers appear as two-element arrays [re, im].
//!
//! Exit codes: 0 success, 1 invalid configuration (single-line diagnostic),
//! 2 quadrature non-convergence (payload still emitted with an error
//! annotation), 3 verification suite with failed criteria.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::str::FromStr;

use num_complex::Complex64;
use serde::Deserialize;

use crate::distributions::{DistributionSpec, Kind};
use crate::fock::{self, HamiltonianSpec, LadderSet};
use crate::moments::{self, MomentsError};
use crate::states::{self, Grid};
use crate::{dispersion, verify};

/// 17-significant-digit float formatting (lossless for f64).
pub fn fmt_float(x: f64) -> String {
    format!("{x:.16e}")
}

/// Minimal deterministic JSON document builder.
#[derive(Debug, Clone)]
pub enum Json {
    Null,
    Bool(bool),
    Int(i64),
    Float(f64),
    Str(String),
    Arr(Vec<Json>),
    Obj(Vec<(&'static str, Json)>),
}

impl Json {
    pub fn complex(z: Complex64) -> Json {
        Json::Arr(vec![Json::Float(z.re), Json::Float(z.im)])
    }

    fn write(&self, out: &mut String) {
        match self {
            Json::Null => out.push_str("null"),
            Json::Bool(b) => out.push_str(if *b { "true" } else { "false" }),
            Json::Int(i) => {
                let _ = write!(out, "{i}");
            }
            Json::Float(x) => out.push_str(&fmt_float(*x)),
            Json::Str(s) => {
                out.push('"');
                for ch in s.chars() {
                    match ch {
                        '"' => out.push_str("\\\""),
                        '\\' => out.push_str("\\\\"),
                        '\n' => out.push_str("\\n"),
                        c if (c as u32) < 0x20 => {
                            let _ = write!(out, "\\u{:04x}", c as u32);
                        }
                        c => out.push(c),
                    }
                }
                out.push('"');
            }
            Json::Arr(items) => {
                out.push('[');
                for (i, item) in items.iter().enumerate() {
                    if i > 0 {
                        out.push(',');
                    }
                    item.write(out);
                }
                out.push(']');
            }
            Json::Obj(fields) => {
                out.push('{');
                for (i, (k, v)) in fields.iter().enumerate() {
                    if i > 0 {
                        out.push(',');
                    }
                    let _ = write!(out, "\"{k}\":");
                    v.write(out);
                }
                out.push('}');
            }
        }
    }

    /// Renders the document with a trailing newline.
    pub fn render(&self) -> String {
        let mut s = String::new();
        self.write(&mut s);
        s.push('\n');
        s
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Csv,
    Json,
}

impl FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            other => Err(format!("unknown format `{other}` (expected csv or json)")),
        }
    }
}

/// An `A:B:N` evaluation-grid request.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub start: f64,
    pub stop: f64,
    pub n: usize,
}

impl GridSpec {
    pub fn points(&self) -> Vec<f64> {
        if self.n == 1 {
            return vec![self.start];
        }
        let step = (self.stop - self.start) / (self.n - 1) as f64;
        (0..self.n).map(|i| self.start + step * i as f64).collect()
    }
}

impl FromStr for GridSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let parts: Vec<&str> = s.split(':').collect();
        if parts.len() != 3 {
            return Err(format!("grid `{s}` is not of the form A:B:N"));
        }
        let start: f64 = parts[0].parse().map_err(|_| format!("bad grid start `{}`", parts[0]))?;
        let stop: f64 = parts[1].parse().map_err(|_| format!("bad grid stop `{}`", parts[1]))?;
        let n: usize = parts[2].parse().map_err(|_| format!("bad grid count `{}`", parts[2]))?;
        if n < 2 || stop <= start || !start.is_finite() || !stop.is_finite() {
            return Err(format!("grid `{s}` must have stop > start and N >= 2"));
        }
        Ok(GridSpec { start, stop, n })
    }
}

/// Parses `re` or `re,im` into a complex number.
pub fn parse_complex(s: &str) -> Result<Complex64, String> {
    let parts: Vec<&str> = s.split(',').collect();
    match parts.len() {
        1 => parts[0]
            .trim()
            .parse::<f64>()
            .map(|re| Complex64::new(re, 0.0))
            .map_err(|_| format!("bad complex `{s}`")),
        2 => {
            let re: f64 = parts[0].trim().parse().map_err(|_| format!("bad complex `{s}`"))?;
            let im: f64 = parts[1].trim().parse().map_err(|_| format!("bad complex `{s}`"))?;
            Ok(Complex64::new(re, im))
        }
        _ => Err(format!("bad complex `{s}` (expected re or re,im)")),
    }
}

/// Parses `g,mu,c`.
pub fn parse_gamma_model(s: &str) -> Result<(f64, f64, f64), String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 3 {
        return Err(format!("gamma model `{s}` is not of the form g,mu,c"));
    }
    let vals: Result<Vec<f64>, _> = parts.iter().map(|p| p.trim().parse::<f64>()).collect();
    let vals = vals.map_err(|_| format!("bad gamma model `{s}`"))?;
    Ok((vals[0], vals[1], vals[2]))
}

/// Fully resolved run configuration (defaults, then config file, then flags).
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub dist: Kind,
    pub zeta: f64,
    pub table: Option<PathBuf>,
    pub dim: usize,
    pub rel_tol: f64,
    pub tail_tol: f64,
    pub format: Option<OutputFormat>,
    pub out: Option<PathBuf>,
    pub compare_paper: bool,
    pub parallel: bool,
    /// always true: there is no randomness anywhere in the pipeline
    pub deterministic: bool,
    pub n: usize,
    pub levels: usize,
    pub z: Complex64,
    pub ratio: f64,
    pub grid: GridSpec,
    pub omega_grid: GridSpec,
    pub gamma_model: (f64, f64, f64),
    pub suite: String,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            dist: Kind::Lorentzian,
            zeta: 0.3,
            table: None,
            dim: fock::DEFAULT_DIM,
            rel_tol: moments::DEFAULT_REL_TOL,
            tail_tol: fock::DEFAULT_TAIL_TOL,
            format: None,
            out: None,
            compare_paper: false,
            parallel: false,
            deterministic: true,
            n: 0,
            levels: 8,
            z: Complex64::new(1.0, 0.0),
            ratio: 4.0,
            grid: GridSpec {
                start: -5.0,
                stop: 5.0,
                n: 1001,
            },
            omega_grid: GridSpec {
                start: 0.1,
                stop: 10.0,
                n: 100,
            },
            gamma_model: (1.0, 2.0, 1.0),
            suite: "all".to_string(),
        }
    }
}

/// Optional JSON configuration file carrying the same keys as the flags;
/// explicit flags override whatever the file sets.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    pub dist: Option<String>,
    pub zeta: Option<f64>,
    pub table: Option<PathBuf>,
    pub dim: Option<usize>,
    pub rel_tol: Option<f64>,
    pub tail_tol: Option<f64>,
    pub format: Option<String>,
    pub out: Option<PathBuf>,
    pub compare_paper: Option<bool>,
    pub parallel: Option<bool>,
    pub deterministic: Option<bool>,
    pub n: Option<usize>,
    pub levels: Option<usize>,
    pub z: Option<String>,
    pub ratio: Option<f64>,
    pub grid: Option<String>,
    pub omega_grid: Option<String>,
    pub gamma_model: Option<String>,
    pub suite: Option<String>,
}

impl ConfigFile {
    pub fn load(path: &std::path::Path) -> Result<Self, String> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| format!("cannot read config {}: {e}", path.display()))?;
        serde_json::from_str(&text).map_err(|e| format!("bad config {}: {e}", path.display()))
    }

    pub fn apply(&self, cfg: &mut RunConfig) -> Result<(), String> {
        if let Some(d) = &self.dist {
            cfg.dist = d.parse().map_err(|e| format!("{e}"))?;
        }
        if let Some(z) = self.zeta {
            cfg.zeta = z;
        }
        if let Some(t) = &self.table {
            cfg.table = Some(t.clone());
        }
        if let Some(d) = self.dim {
            cfg.dim = d;
        }
        if let Some(r) = self.rel_tol {
            cfg.rel_tol = r;
        }
        if let Some(t) = self.tail_tol {
            cfg.tail_tol = t;
        }
        if let Some(f) = &self.format {
            cfg.format = Some(f.parse()?);
        }
        if let Some(o) = &self.out {
            cfg.out = Some(o.clone());
        }
        if let Some(c) = self.compare_paper {
            cfg.compare_paper = c;
        }
        if let Some(p) = self.parallel {
            cfg.parallel = p;
        }
        if let Some(d) = self.deterministic {
            cfg.deterministic = d;
        }
        if let Some(n) = self.n {
            cfg.n = n;
        }
        if let Some(l) = self.levels {
            cfg.levels = l;
        }
        if let Some(z) = &self.z {
            cfg.z = parse_complex(z)?;
        }
        if let Some(r) = self.ratio {
            cfg.ratio = r;
        }
        if let Some(g) = &self.grid {
            cfg.grid = g.parse()?;
        }
        if let Some(g) = &self.omega_grid {
            cfg.omega_grid = g.parse()?;
        }
        if let Some(g) = &self.gamma_model {
            cfg.gamma_model = parse_gamma_model(g)?;
        }
        if let Some(s) = &self.suite {
            cfg.suite = s.clone();
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Moments,
    Commutator,
    Vacuum,
    Spectrum,
    Wavefunction,
    Coherent,
    Dispersion,
    Verify,
}

/// What a command produced: the payload text and the process exit code.
/// Diagnostics (exit code 1) go to stderr instead of the payload stream.
#[derive(Debug, Clone)]
pub struct CmdOutput {
    pub exit_code: i32,
    pub payload: String,
    pub diagnostic: Option<String>,
}

impl CmdOutput {
    fn ok(payload: String) -> Self {
        CmdOutput {
            exit_code: 0,
            payload,
            diagnostic: None,
        }
    }

    fn invalid(msg: String) -> Self {
        CmdOutput {
            exit_code: 1,
            payload: String::new(),
            diagnostic: Some(msg),
        }
    }
}

fn validate(cfg: &RunConfig, cmd: Command) -> Result<(), String> {
    if !cfg.deterministic {
        return Err("deterministic flag cannot be disabled: the pipeline is seedless".into());
    }
    if cfg.dist == Kind::Delta {
        if cfg.zeta != 0.0 {
            return Err(format!("delta distribution takes zeta = 0, got {}", cfg.zeta));
        }
    } else if !(cfg.zeta.is_finite() && cfg.zeta > 0.0) && cfg.dist != Kind::Tabulated {
        return Err(format!("zeta must be positive for {}, got {}", cfg.dist, cfg.zeta));
    }
    if cfg.dist == Kind::Tabulated && cfg.table.is_none() {
        return Err("tabulated distribution needs --table PATH".into());
    }
    if cfg.dim < 3 {
        return Err(format!("dim must be at least 3, got {}", cfg.dim));
    }
    if !(moments::REL_TOL_MIN..=moments::REL_TOL_MAX).contains(&cfg.rel_tol) {
        return Err(format!(
            "rel tol {:e} outside [{:e}, {:e}]",
            cfg.rel_tol,
            moments::REL_TOL_MIN,
            moments::REL_TOL_MAX
        ));
    }
    if !cfg.tail_tol.is_finite() || cfg.tail_tol <= 0.0 {
        return Err(format!("tail tol must be positive, got {}", cfg.tail_tol));
    }
    if cmd == Command::Spectrum && cfg.levels > cfg.dim / 2 {
        return Err(format!(
            "levels {} exceeds dim/2 = {} (not interior-converged)",
            cfg.levels,
            cfg.dim / 2
        ));
    }
    if cmd == Command::Verify && verify::suite_ids(&cfg.suite).is_none() {
        return Err(format!(
            "unknown suite `{}` (expected all, moments, fock, states, symmetry, dispersion)",
            cfg.suite
        ));
    }
    Ok(())
}

fn build_spec(cfg: &RunConfig) -> Result<DistributionSpec, String> {
    match cfg.dist {
        Kind::Delta => Ok(DistributionSpec::delta()),
        Kind::Lorentzian => DistributionSpec::lorentzian(cfg.zeta).map_err(|e| e.to_string()),
        Kind::Uniform => DistributionSpec::uniform(cfg.zeta).map_err(|e| e.to_string()),
        Kind::Gaussian => DistributionSpec::gaussian(cfg.zeta).map_err(|e| e.to_string()),
        Kind::Tabulated => {
            let path = cfg.table.as_ref().ok_or("tabulated needs --table")?;
            DistributionSpec::tabulated_from_csv(path).map_err(|e| e.to_string())
        }
    }
}

/// Dispatch a subcommand on a resolved configuration.
pub fn run(cmd: Command, cfg: &RunConfig) -> CmdOutput {
    if let Err(msg) = validate(cfg, cmd) {
        return CmdOutput::invalid(msg);
    }
    match cmd {
        Command::Moments => cmd_moments(cfg),
        Command::Commutator => cmd_commutator(cfg),
        Command::Vacuum => cmd_vacuum(cfg),
        Command::Spectrum => cmd_spectrum(cfg),
        Command::Wavefunction => cmd_wavefunction(cfg),
        Command::Coherent => cmd_coherent(cfg),
        Command::Dispersion => cmd_dispersion(cfg),
        Command::Verify => cmd_verify(cfg),
    }
}

fn spec_fields(cfg: &RunConfig, spec: &DistributionSpec) -> Vec<(&'static str, Json)> {
    let mut fields = vec![
        ("dist", Json::Str(spec.kind().to_string())),
        ("zeta", Json::Float(spec.zeta())),
    ];
    if !spec.warnings().is_empty() {
        fields.push((
            "warnings",
            Json::Arr(spec.warnings().iter().map(|w| Json::Str(w.clone())).collect()),
        ));
    }
    let _ = cfg;
    fields
}

fn cmd_moments(cfg: &RunConfig) -> CmdOutput {
    let spec = match build_spec(cfg) {
        Ok(s) => s,
        Err(e) => return CmdOutput::invalid(e),
    };
    let (pair, exit_code, note) = match moments::moments(&spec, cfg.rel_tol) {
        Ok(p) => (p, 0, None),
        Err(MomentsError::QuadratureNonConvergence { pair, achieved }) => (
            pair,
            2,
            Some(format!("quadrature non-convergence: achieved error {achieved:.3e}")),
        ),
        Err(e) => return CmdOutput::invalid(e.to_string()),
    };
    let fc = match moments::commutation_function(&pair) {
        Ok(fc) => fc,
        Err(e) => return CmdOutput::invalid(e.to_string()),
    };

    let mut fields = spec_fields(cfg, &spec);
    fields.extend([
        ("I0", Json::complex(pair.i0)),
        ("I1", Json::complex(pair.i1)),
        ("u", Json::complex(fc.u)),
        ("v", Json::complex(fc.v)),
        ("C", Json::Float(fc.c)),
        ("method", Json::Str(pair.method.as_str().to_string())),
        ("est_error", Json::Float(pair.est_error)),
    ]);
    match fc.sub_bosonic_anomaly() {
        Some(a) => fields.push(("anomaly", Json::Str(a))),
        None => fields.push(("anomaly", Json::Null)),
    }
    if cfg.compare_paper {
        if let Some(cmp) = moments::compare_with_published(&spec, &fc) {
            let key = match spec.kind() {
                Kind::Uniform => "paper_eq20",
                _ => "paper_eq19",
            };
            fields.push((key, Json::Float(cmp.published)));
            fields.push(("discrepancy", Json::Float(cmp.discrepancy)));
            fields.push(("flagged", Json::Bool(cmp.flagged)));
        }
    }
    if let Some(note) = &note {
        fields.push(("error", Json::Str(note.clone())));
    }

    let payload = match cfg.format.unwrap_or(OutputFormat::Json) {
        OutputFormat::Json => Json::Obj(fields).render(),
        OutputFormat::Csv => {
            let mut s = String::from("quantity,re,im\n");
            let _ = writeln!(s, "I0,{},{}", fmt_float(pair.i0.re), fmt_float(pair.i0.im));
            let _ = writeln!(s, "I1,{},{}", fmt_float(pair.i1.re), fmt_float(pair.i1.im));
            let _ = writeln!(s, "u,{},{}", fmt_float(fc.u.re), fmt_float(fc.u.im));
            let _ = writeln!(s, "v,{},{}", fmt_float(fc.v.re), fmt_float(fc.v.im));
            let _ = writeln!(s, "C,{},{}", fmt_float(fc.c), fmt_float(0.0));
            s
        }
    };
    CmdOutput {
        exit_code,
        payload,
        diagnostic: note,
    }
}

fn cmd_commutator(cfg: &RunConfig) -> CmdOutput {
    let value = match fock::cross_commutator_value(cfg.ratio) {
        Ok(v) => v,
        Err(e) => return CmdOutput::invalid(e.to_string()),
    };
    // matrix residual: interior deviation of [a, a_{r w}] from value*I
    let residual = match fock::annihilator_at_frequency(cfg.dim, cfg.ratio) {
        Ok(m) => {
            let sl = fock::SharpLadder::new(cfg.dim).expect("dim validated");
            let comm = fock::commutator(sl.a(), &m);
            fock::interior_deviation_from_scaled_identity(&comm, Complex64::new(value, 0.0), 2)
        }
        Err(e) => return CmdOutput::invalid(e.to_string()),
    };
    let fields = vec![
        ("ratio", Json::Float(cfg.ratio)),
        ("value", Json::Float(value)),
        ("dim", Json::Int(cfg.dim as i64)),
        ("matrix_residual", Json::Float(residual)),
    ];
    let payload = match cfg.format.unwrap_or(OutputFormat::Json) {
        OutputFormat::Json => Json::Obj(fields).render(),
        OutputFormat::Csv => format!(
            "ratio,value\n{},{}\n",
            fmt_float(cfg.ratio),
            fmt_float(value)
        ),
    };
    CmdOutput::ok(payload)
}

fn coefficients_for(cfg: &RunConfig) -> Result<(DistributionSpec, moments::FuzzyCoefficients), String> {
    let spec = build_spec(cfg)?;
    let fc = moments::coefficients(&spec, cfg.rel_tol).map_err(|e| e.to_string())?;
    Ok((spec, fc))
}

fn cmd_vacuum(cfg: &RunConfig) -> CmdOutput {
    let (spec, fc) = match coefficients_for(cfg) {
        Ok(v) => v,
        Err(e) => return CmdOutput::invalid(e),
    };
    let vac = match fock::fuzzy_vacuum(&fc, cfg.dim, cfg.tail_tol) {
        Ok(v) => v,
        Err(e) => return CmdOutput::invalid(e.to_string()),
    };
    let payload = match cfg.format.unwrap_or(OutputFormat::Json) {
        OutputFormat::Json => {
            let mut fields = spec_fields(cfg, &spec);
            fields.extend([
                ("dim", Json::Int(cfg.dim as i64)),
                ("a0_sq", Json::Float(vac.coeffs()[0].norm_sqr())),
                ("tail", Json::Float(vac.tail())),
                ("decay_ratio", Json::Float(fc.decay_ratio())),
                (
                    "coeffs",
                    Json::Arr(vac.coeffs().iter().map(|&c| Json::complex(c)).collect()),
                ),
            ]);
            Json::Obj(fields).render()
        }
        OutputFormat::Csv => {
            let mut s = String::from("n,re,im\n");
            for (n, c) in vac.coeffs().iter().enumerate() {
                let _ = writeln!(s, "{n},{},{}", fmt_float(c.re), fmt_float(c.im));
            }
            s
        }
    };
    CmdOutput::ok(payload)
}

fn cmd_spectrum(cfg: &RunConfig) -> CmdOutput {
    let (spec, fc) = match coefficients_for(cfg) {
        Ok(v) => v,
        Err(e) => return CmdOutput::invalid(e),
    };
    let ls = match LadderSet::new(cfg.dim, fc) {
        Ok(l) => l,
        Err(e) => return CmdOutput::invalid(e.to_string()),
    };
    let h = match ls.hamiltonian(&HamiltonianSpec::default()) {
        Ok(h) => h,
        Err(e) => return CmdOutput::invalid(e.to_string()),
    };
    let levels = match fock::spectrum(&h, cfg.levels) {
        Ok(l) => l,
        Err(e) => return CmdOutput::invalid(e.to_string()),
    };
    let payload = match cfg.format.unwrap_or(OutputFormat::Json) {
        OutputFormat::Json => {
            let mut fields = spec_fields(cfg, &spec);
            fields.extend([
                ("dim", Json::Int(cfg.dim as i64)),
                ("C", Json::Float(fc.c)),
                (
                    "levels",
                    Json::Arr(levels.iter().map(|&e| Json::Float(e)).collect()),
                ),
            ]);
            Json::Obj(fields).render()
        }
        OutputFormat::Csv => {
            let mut s = String::from("n,energy\n");
            for (n, e) in levels.iter().enumerate() {
                let _ = writeln!(s, "{n},{}", fmt_float(*e));
            }
            s
        }
    };
    CmdOutput::ok(payload)
}

fn cmd_wavefunction(cfg: &RunConfig) -> CmdOutput {
    let (spec, fc) = match coefficients_for(cfg) {
        Ok(v) => v,
        Err(e) => return CmdOutput::invalid(e),
    };
    let grid = match Grid::uniform(cfg.grid.start, cfg.grid.stop, cfg.grid.n) {
        Ok(g) => g,
        Err(e) => return CmdOutput::invalid(e.to_string()),
    };
    let vac = match fock::fuzzy_vacuum(&fc, cfg.dim, cfg.tail_tol) {
        Ok(v) => v,
        Err(e) => return CmdOutput::invalid(e.to_string()),
    };
    let state = if cfg.n == 0 {
        vac
    } else {
        let ls = match LadderSet::new(cfg.dim, fc) {
            Ok(l) => l,
            Err(e) => return CmdOutput::invalid(e.to_string()),
        };
        match fock::fuzzy_fock_state(cfg.n, &vac, &ls) {
            Ok(s) => s,
            Err(e) => return CmdOutput::invalid(e.to_string()),
        }
    };
    let density = match states::position_density(&state, &grid) {
        Ok(d) => d,
        Err(e) => return CmdOutput::invalid(e.to_string()),
    };
    let payload = match cfg.format.unwrap_or(OutputFormat::Csv) {
        OutputFormat::Csv => {
            let mut s = String::from("xi,density\n");
            for (x, rho) in grid.points().iter().zip(&density) {
                let _ = writeln!(s, "{},{}", fmt_float(*x), fmt_float(*rho));
            }
            s
        }
        OutputFormat::Json => {
            let mut fields = spec_fields(cfg, &spec);
            fields.extend([
                ("n", Json::Int(cfg.n as i64)),
                ("dim", Json::Int(cfg.dim as i64)),
                (
                    "data",
                    Json::Arr(
                        grid.points()
                            .iter()
                            .zip(&density)
                            .map(|(x, rho)| Json::Arr(vec![Json::Float(*x), Json::Float(*rho)]))
                            .collect(),
                    ),
                ),
            ]);
            Json::Obj(fields).render()
        }
    };
    CmdOutput::ok(payload)
}

fn cmd_coherent(cfg: &RunConfig) -> CmdOutput {
    let (spec, fc) = match coefficients_for(cfg) {
        Ok(v) => v,
        Err(e) => return CmdOutput::invalid(e),
    };
    let displaced = match states::coherent_displaced(cfg.z, &fc, cfg.dim) {
        Ok(s) => s,
        Err(e) => return CmdOutput::invalid(e.to_string()),
    };
    let summed = match states::coherent_sum(cfg.z, &fc, cfg.dim) {
        Ok(s) => s,
        Err(e) => return CmdOutput::invalid(e.to_string()),
    };
    let fid = states::fidelity(&displaced, &summed).expect("same dim");
    let arg = states::rescale_displacement(cfg.z, &fc);
    let payload = match cfg.format.unwrap_or(OutputFormat::Json) {
        OutputFormat::Json => {
            let mut fields = spec_fields(cfg, &spec);
            fields.extend([
                ("dim", Json::Int(cfg.dim as i64)),
                ("z", Json::complex(cfg.z)),
                ("z_rescaled", Json::complex(arg.z_rescaled)),
                (
                    "displaced",
                    Json::Arr(displaced.coeffs().iter().map(|&c| Json::complex(c)).collect()),
                ),
                (
                    "summed",
                    Json::Arr(summed.coeffs().iter().map(|&c| Json::complex(c)).collect()),
                ),
                ("fidelity_displaced_vs_summed", Json::Float(fid)),
            ]);
            Json::Obj(fields).render()
        }
        OutputFormat::Csv => {
            let mut s = String::from("n,re,im\n");
            for (n, c) in displaced.coeffs().iter().enumerate() {
                let _ = writeln!(s, "{n},{},{}", fmt_float(c.re), fmt_float(c.im));
            }
            s
        }
    };
    CmdOutput::ok(payload)
}

fn cmd_dispersion(cfg: &RunConfig) -> CmdOutput {
    let (g, mu, c) = cfg.gamma_model;
    let kind = match cfg.dist {
        Kind::Lorentzian | Kind::Uniform => cfg.dist,
        // the width-law machinery is defined for the two closed-form kinds
        _ => Kind::Lorentzian,
    };
    let model = match dispersion::GammaModel::new(g, mu, c, kind) {
        Ok(m) => m,
        Err(e) => return CmdOutput::invalid(e.to_string()),
    };
    let grid = cfg.omega_grid.points();
    let curve = if cfg.parallel {
        dispersion::dispersion_curve_parallel(&model, &grid)
    } else {
        dispersion::dispersion_curve(&model, &grid)
    };
    let curve = match curve {
        Ok(c) => c,
        Err(e) => return CmdOutput::invalid(e.to_string()),
    };
    let report = match dispersion::constraint_report(&model, &grid) {
        Ok(r) => r,
        Err(e) => return CmdOutput::invalid(e.to_string()),
    };
    let payload = match cfg.format.unwrap_or(OutputFormat::Csv) {
        OutputFormat::Csv => {
            let mut s = String::from("omega,energy\n");
            for (w, e) in &curve {
                let _ = writeln!(s, "{},{}", fmt_float(*w), fmt_float(*e));
            }
            s
        }
        OutputFormat::Json => {
            let mut fields = vec![
                ("kind", Json::Str(kind.to_string())),
                ("g", Json::Float(g)),
                ("mu", Json::Float(mu)),
                ("c", Json::Float(c)),
                (
                    "curve",
                    Json::Arr(
                        curve
                            .iter()
                            .map(|(w, e)| Json::Arr(vec![Json::Float(*w), Json::Float(*e)]))
                            .collect(),
                    ),
                ),
                (
                    "constraints",
                    Json::Obj(vec![
                        ("finite_zero_limit", Json::Bool(report.finite_zero_limit)),
                        (
                            "small_omega_energy_limit",
                            Json::Float(report.small_omega_energy_limit),
                        ),
                        (
                            "large_omega_exponent_ok",
                            Json::Bool(report.large_omega_exponent_ok),
                        ),
                        ("monotonic_on_grid", Json::Bool(report.monotonic_on_grid)),
                        (
                            "width_bound_violations",
                            Json::Arr(
                                report
                                    .width_bound_violations
                                    .iter()
                                    .map(|&w| Json::Float(w))
                                    .collect(),
                            ),
                        ),
                    ]),
                ),
            ];
            if cfg.compare_paper && kind == Kind::Uniform {
                fields.push((
                    "paper_eq20_curve",
                    Json::Arr(
                        grid.iter()
                            .map(|&w| {
                                let zeta = dispersion::zeta_of(&model, w).unwrap_or(f64::NAN);
                                Json::Arr(vec![
                                    Json::Float(w),
                                    Json::Float(moments::uniform_c_published(zeta) * w),
                                ])
                            })
                            .collect(),
                    ),
                ));
            }
            Json::Obj(fields).render()
        }
    };
    CmdOutput::ok(payload)
}

fn cmd_verify(cfg: &RunConfig) -> CmdOutput {
    let ids = verify::suite_ids(&cfg.suite).expect("suite validated");
    let results = verify::run_suite(&ids);
    let failed: Vec<&verify::CriterionResult> = results.iter().filter(|r| !r.passed).collect();
    let payload = match cfg.format.unwrap_or(OutputFormat::Json) {
        OutputFormat::Json => Json::Obj(vec![
            ("suite", Json::Str(cfg.suite.clone())),
            (
                "criteria",
                Json::Arr(
                    results
                        .iter()
                        .map(|r| {
                            Json::Obj(vec![
                                ("id", Json::Int(r.id as i64)),
                                ("name", Json::Str(r.name.to_string())),
                                ("passed", Json::Bool(r.passed)),
                                ("detail", Json::Str(r.detail.clone())),
                            ])
                        })
                        .collect(),
                ),
            ),
            ("passed", Json::Bool(failed.is_empty())),
        ])
        .render(),
        OutputFormat::Csv => {
            let mut s = String::from("id,name,passed\n");
            for r in &results {
                let _ = writeln!(s, "{},{},{}", r.id, r.name, r.passed);
            }
            s
        }
    };
    // the line-per-criterion report always goes to the payload header side
    let mut lines = String::new();
    for r in &results {
        let _ = writeln!(lines, "{}", r.line());
    }
    let payload = format!("{lines}{payload}");
    if failed.is_empty() {
        CmdOutput::ok(payload)
    } else {
        CmdOutput {
            exit_code: 3,
            payload,
            diagnostic: Some(format!(
                "failed criteria: {}",
                failed
                    .iter()
                    .map(|r| r.id.to_string())
                    .collect::<Vec<_>>()
                    .join(", ")
            )),
        }
    }
}
