//! Thin command-line front end: argument parsing and output routing only.
//! All computation lives in the library (`fuzzy_ladder::cli::run`).

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use fuzzy_ladder::cli::{self, Command, ConfigFile, RunConfig};

#[derive(Parser)]
#[command(
    name = "fuzzy-ladder",
    about = "Frequency-averaged (fuzzy) ladder operators: moments, deformed commutators, \
             Fock-space numerics, coherent states, and dispersion relations",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Args, Default)]
struct Common {
    /// Width distribution kind
    #[arg(long, value_parser = ["delta", "lorentzian", "uniform", "gaussian", "tabulated"])]
    dist: Option<String>,
    /// Dimensionless width ζ = Γ/2ω (σ for gaussian)
    #[arg(long, allow_hyphen_values = true)]
    zeta: Option<f64>,
    /// CSV table (header `x,f`) for --dist tabulated
    #[arg(long)]
    table: Option<PathBuf>,
    /// Fock-space truncation dimension
    #[arg(long)]
    dim: Option<usize>,
    /// Relative tolerance of the quadrature route
    #[arg(long = "rel-tol", allow_hyphen_values = true)]
    rel_tol: Option<f64>,
    /// Bound on the vacuum truncation tail
    #[arg(long = "tail-tol", allow_hyphen_values = true)]
    tail_tol: Option<f64>,
    /// Output format (per-command default otherwise)
    #[arg(long, value_parser = ["csv", "json"])]
    format: Option<String>,
    /// Write the payload to a file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
    /// Include the published closed-form value and its discrepancy
    #[arg(long = "compare-paper", default_value_t = false)]
    compare_paper: bool,
    /// Evaluate grid sweeps in parallel (output order unchanged)
    #[arg(long, default_value_t = false)]
    parallel: bool,
    /// Optional JSON config file with the same keys; flags override it
    #[arg(long)]
    config: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Moment integrals I0, I1 and the commutation function C
    Moments {
        #[command(flatten)]
        common: Common,
    },
    /// Cross-frequency commutator value ½(√r - 1/√r) and its matrix residual
    Commutator {
        #[command(flatten)]
        common: Common,
        /// Frequency ratio r = ω'/ω
        #[arg(long, allow_hyphen_values = true)]
        ratio: Option<f64>,
    },
    /// Fuzzy vacuum coefficients over the sharp Fock basis
    Vacuum {
        #[command(flatten)]
        common: Common,
    },
    /// Lowest eigenvalues of the fuzzy oscillator Hamiltonian
    Spectrum {
        #[command(flatten)]
        common: Common,
        /// Number of levels to report (must be ≤ dim/2)
        #[arg(long)]
        levels: Option<usize>,
    },
    /// Position-space probability density of a fuzzy eigenstate
    Wavefunction {
        #[command(flatten)]
        common: Common,
        /// Excitation number n
        #[arg(long)]
        n: Option<usize>,
        /// Position grid A:B:N
        #[arg(long, allow_hyphen_values = true)]
        grid: Option<String>,
    },
    /// Fuzzy coherent states (displaced and summed constructions)
    Coherent {
        #[command(flatten)]
        common: Common,
        /// Displacement z as `re` or `re,im`
        #[arg(long, allow_hyphen_values = true)]
        z: Option<String>,
    },
    /// Single-excitation energy curve ΔĒ(ω) for a width law Γ(ω) = g·ω^μ
    Dispersion {
        #[command(flatten)]
        common: Common,
        /// Width law as `g,mu,c`
        #[arg(long = "gamma-model", allow_hyphen_values = true)]
        gamma_model: Option<String>,
        /// Frequency grid A:B:N
        #[arg(long = "omega-grid", allow_hyphen_values = true)]
        omega_grid: Option<String>,
    },
    /// Run the verification suite (one line per criterion)
    Verify {
        #[command(flatten)]
        common: Common,
        /// all, moments, fock, states, symmetry, or dispersion
        #[arg(long)]
        suite: Option<String>,
    },
}

fn resolve(
    common: &Common,
    mut extra: impl FnMut(&mut RunConfig) -> Result<(), String>,
) -> Result<RunConfig, String> {
    let mut cfg = RunConfig::default();
    if let Some(path) = &common.config {
        ConfigFile::load(path)?.apply(&mut cfg)?;
    }
    if let Some(d) = &common.dist {
        cfg.dist = d.parse().map_err(|e| format!("{e}"))?;
        if cfg.dist == fuzzy_ladder::Kind::Delta && common.zeta.is_none() {
            cfg.zeta = 0.0;
        }
    }
    if let Some(z) = common.zeta {
        cfg.zeta = z;
    }
    if let Some(t) = &common.table {
        cfg.table = Some(t.clone());
    }
    if let Some(d) = common.dim {
        cfg.dim = d;
    }
    if let Some(r) = common.rel_tol {
        cfg.rel_tol = r;
    }
    if let Some(t) = common.tail_tol {
        cfg.tail_tol = t;
    }
    if let Some(f) = &common.format {
        cfg.format = Some(f.parse()?);
    }
    if let Some(o) = &common.out {
        cfg.out = Some(o.clone());
    }
    if common.compare_paper {
        cfg.compare_paper = true;
    }
    if common.parallel {
        cfg.parallel = true;
    }
    extra(&mut cfg)?;
    Ok(cfg)
}

fn main() -> ExitCode {
    let args = Cli::parse();
    let built = match &args.command {
        Cmd::Moments { common } => resolve(common, |_| Ok(())).map(|c| (Command::Moments, c)),
        Cmd::Commutator { common, ratio } => resolve(common, |cfg| {
            if let Some(r) = ratio {
                cfg.ratio = *r;
            }
            Ok(())
        })
        .map(|c| (Command::Commutator, c)),
        Cmd::Vacuum { common } => resolve(common, |_| Ok(())).map(|c| (Command::Vacuum, c)),
        Cmd::Spectrum { common, levels } => resolve(common, |cfg| {
            if let Some(l) = levels {
                cfg.levels = *l;
            }
            Ok(())
        })
        .map(|c| (Command::Spectrum, c)),
        Cmd::Wavefunction { common, n, grid } => resolve(common, |cfg| {
            if let Some(n) = n {
                cfg.n = *n;
            }
            if let Some(g) = grid {
                cfg.grid = g.parse()?;
            }
            Ok(())
        })
        .map(|c| (Command::Wavefunction, c)),
        Cmd::Coherent { common, z } => resolve(common, |cfg| {
            if let Some(z) = z {
                cfg.z = cli::parse_complex(z)?;
            }
            Ok(())
        })
        .map(|c| (Command::Coherent, c)),
        Cmd::Dispersion {
            common,
            gamma_model,
            omega_grid,
        } => resolve(common, |cfg| {
            if let Some(g) = gamma_model {
                cfg.gamma_model = cli::parse_gamma_model(g)?;
            }
            if let Some(g) = omega_grid {
                cfg.omega_grid = g.parse()?;
            }
            Ok(())
        })
        .map(|c| (Command::Dispersion, c)),
        Cmd::Verify { common, suite } => resolve(common, |cfg| {
            if let Some(s) = suite {
                cfg.suite = s.clone();
            }
            Ok(())
        })
        .map(|c| (Command::Verify, c)),
    };
    let (command, cfg) = match built {
        Ok(pair) => pair,
        Err(msg) => {
            eprintln!("fuzzy-ladder: {msg}");
            return ExitCode::from(1);
        }
    };

    let out = cli::run(command, &cfg);
    if let Some(diag) = &out.diagnostic {
        eprintln!("fuzzy-ladder: {diag}");
    }
    if !out.payload.is_empty() {
        match &cfg.out {
            Some(path) => {
                if let Err(e) = std::fs::write(path, &out.payload) {
                    eprintln!("fuzzy-ladder: cannot write {}: {e}", path.display());
                    return ExitCode::from(1);
                }
            }
            None => print!("{}", out.payload),
        }
    }
    ExitCode::from(out.exit_code as u8)
}
