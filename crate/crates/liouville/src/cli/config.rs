//! JSON run configuration and its resolution against command-line flags.

use liouville_core::reduction::DEFAULT_B_TARGET;
use liouville_core::spectrum::{EigenLabel, Sign};
use liouville_core::{step1_solve, GeneratorId, LiouvillianCoeffs, ModelPreset, Step};
use serde::Deserialize;
use std::path::PathBuf;

use super::CliError;
use crate::verify::DEFAULT_BASIS_N;

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoefficientsConfig {
    pub h: [f64; 3],
    pub gamma: f64,
    pub g: [f64; 3],
}

/// Preset parameters; which ones are required depends on the model.
#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PresetConfig {
    pub omega0: Option<f64>,
    pub omega0_prime: Option<f64>,
    pub gamma: Option<f64>,
    pub b: Option<f64>,
    pub b_cl: Option<f64>,
    pub b_hpz: Option<f64>,
    pub d: Option<f64>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LabelConfig {
    pub m: i64,
    pub n: i64,
    #[serde(default = "plus")]
    pub sign: String,
}

fn plus() -> String {
    "+".into()
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridConfig {
    pub q_min: f64,
    pub q_max: f64,
    pub r_min: f64,
    pub r_max: f64,
    pub steps: usize,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StepConfig {
    pub generator: String,
    pub param: f64,
}

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub model: Option<String>,
    pub coefficients: Option<CoefficientsConfig>,
    pub preset: Option<PresetConfig>,
    pub m_max: Option<u32>,
    pub basis_n: Option<usize>,
    pub n_q: Option<usize>,
    pub n_r: Option<usize>,
    pub tol: Option<f64>,
    pub eig_tol: Option<f64>,
    pub out: Option<PathBuf>,
    pub b_target: Option<f64>,
    pub label: Option<LabelConfig>,
    pub grid: Option<GridConfig>,
    pub t_max: Option<f64>,
    pub t_steps: Option<usize>,
    pub steps: Option<Vec<StepConfig>>,
}

impl RunConfig {
    pub fn from_json(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Config(format!("invalid config: {e}")))
    }
}

/// Flags that override configuration values.
#[derive(Debug, Clone, Default)]
pub struct Overrides {
    pub preset: Option<String>,
    pub m_max: Option<u32>,
    pub basis_n: Option<usize>,
    pub tol: Option<f64>,
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum ModelSpec {
    Generic(LiouvillianCoeffs),
    Preset(ModelPreset),
}

impl ModelSpec {
    pub fn name(&self) -> &'static str {
        match self {
            ModelSpec::Generic(_) => "generic",
            ModelSpec::Preset(p) => p.name(),
        }
    }

    pub fn coefficients(&self) -> LiouvillianCoeffs {
        match self {
            ModelSpec::Generic(c) => *c,
            ModelSpec::Preset(p) => p.coefficients(),
        }
    }

    /// Renormalized frequency `½√(h0² − h1² − h2²)`, with the damping checks.
    pub fn omega0(&self) -> Result<f64, CliError> {
        match self {
            ModelSpec::Generic(c) => Ok(step1_solve(&c.h)?.omega0),
            ModelSpec::Preset(p) => Ok(p.omega0()?),
        }
    }

    pub fn gamma(&self) -> f64 {
        self.coefficients().gamma
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Grid {
    pub q_min: f64,
    pub q_max: f64,
    pub r_min: f64,
    pub r_max: f64,
    pub steps: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Resolved {
    pub model: ModelSpec,
    pub m_max: u32,
    pub n_q: usize,
    pub n_r: usize,
    pub tol: f64,
    /// Tolerance for eigenvalue matching and the left/right pairing.
    pub eig_tol: f64,
    pub out: PathBuf,
    pub b_target: f64,
    pub label: Option<EigenLabel>,
    pub grid: Option<Grid>,
    pub t_max: Option<f64>,
    pub t_steps: usize,
    pub steps: Option<Vec<Step>>,
}

pub const DEFAULT_M_MAX: u32 = 2;
pub const DEFAULT_TOL: f64 = 1e-8;
pub const DEFAULT_EIG_TOL: f64 = 1e-6;
pub const DEFAULT_T_STEPS: usize = 101;

fn finite(name: &str, x: f64) -> Result<f64, CliError> {
    if x.is_finite() {
        Ok(x)
    } else {
        Err(CliError::Config(format!("{name} must be finite")))
    }
}

fn require(name: &str, x: Option<f64>, default: f64, use_defaults: bool) -> Result<f64, CliError> {
    match x {
        Some(v) => finite(name, v),
        None if use_defaults => Ok(default),
        None => Err(CliError::Config(format!("preset parameter {name} is missing"))),
    }
}

fn preset_from(name: &str, p: Option<&PresetConfig>) -> Result<ModelPreset, CliError> {
    // Without a preset block the model's desk defaults are used.
    let defaults = p.is_none();
    let empty = PresetConfig::default();
    let p = p.unwrap_or(&empty);
    let model = match name {
        "kl" => ModelPreset::Kl {
            omega0: require("omega0", p.omega0, 1.0, defaults)?,
            gamma: require("gamma", p.gamma, 0.3, defaults)?,
            b: require("b", p.b, 1.0, defaults)?,
        },
        "cl" => ModelPreset::Cl {
            omega0_prime: require("omega0_prime", p.omega0_prime, 1.0, defaults)?,
            gamma: require("gamma", p.gamma, 0.6, defaults)?,
            b_cl: require("b_cl", p.b_cl, 1.0, defaults)?,
        },
        "hpz" => ModelPreset::Hpz {
            omega0_prime: require("omega0_prime", p.omega0_prime, 1.0, defaults)?,
            gamma: require("gamma", p.gamma, 0.6, defaults)?,
            b_hpz: require("b_hpz", p.b_hpz, 1.0, defaults)?,
            d: require("d", p.d, 0.2, defaults)?,
        },
        other => return Err(CliError::Config(format!("unknown model {other:?}; expected generic, kl, cl or hpz"))),
    };
    model.validate()?;
    Ok(model)
}

pub fn resolve(cfg: RunConfig, flags: &Overrides) -> Result<Resolved, CliError> {
    let model_name = flags.preset.clone().or(cfg.model.clone()).unwrap_or_else(|| {
        if cfg.coefficients.is_some() {
            "generic".into()
        } else {
            "kl".into()
        }
    });
    let model = if model_name == "generic" {
        if cfg.preset.is_some() {
            return Err(CliError::Config("generic model takes coefficients, not preset parameters".into()));
        }
        let c = cfg.coefficients.as_ref().ok_or_else(|| CliError::Config("generic model needs coefficients".into()))?;
        ModelSpec::Generic(LiouvillianCoeffs::new(c.h, c.gamma, c.g)?)
    } else {
        if cfg.coefficients.is_some() && flags.preset.is_none() {
            return Err(CliError::Config("give either coefficients or preset parameters, not both".into()));
        }
        ModelSpec::Preset(preset_from(&model_name, cfg.preset.as_ref())?)
    };
    let basis_n = flags.basis_n.or(cfg.basis_n).unwrap_or(DEFAULT_BASIS_N);
    let n_q = if flags.basis_n.is_some() { basis_n } else { cfg.n_q.unwrap_or(basis_n) };
    let n_r = if flags.basis_n.is_some() { basis_n } else { cfg.n_r.unwrap_or(basis_n) };
    if n_q < 4 || n_r < 4 {
        return Err(CliError::Config(format!("basis sizes must be at least 4 (got {n_q}, {n_r})")));
    }
    let tol = finite("tol", flags.tol.or(cfg.tol).unwrap_or(DEFAULT_TOL))?;
    if tol <= 0.0 {
        return Err(CliError::Config("tol must be positive".into()));
    }
    let eig_tol = finite("eig_tol", cfg.eig_tol.unwrap_or(DEFAULT_EIG_TOL))?;
    if eig_tol <= 0.0 {
        return Err(CliError::Config("eig_tol must be positive".into()));
    }
    let b_target = finite("b_target", cfg.b_target.unwrap_or(DEFAULT_B_TARGET))?;
    let label = cfg
        .label
        .map(|l| {
            let sign = match l.sign.as_str() {
                "+" | "plus" => Sign::Plus,
                "-" | "minus" => Sign::Minus,
                other => return Err(CliError::Config(format!("label sign must be + or -, got {other:?}"))),
            };
            Ok(EigenLabel::new(l.m, l.n, sign)?)
        })
        .transpose()?;
    let grid = cfg
        .grid
        .map(|g| {
            for (name, x) in [("q_min", g.q_min), ("q_max", g.q_max), ("r_min", g.r_min), ("r_max", g.r_max)] {
                finite(name, x)?;
            }
            if g.steps < 2 || g.q_min >= g.q_max || g.r_min >= g.r_max {
                return Err(CliError::Config("grid needs steps >= 2 and min < max".into()));
            }
            Ok(Grid { q_min: g.q_min, q_max: g.q_max, r_min: g.r_min, r_max: g.r_max, steps: g.steps })
        })
        .transpose()?;
    let t_max = cfg.t_max.map(|t| finite("t_max", t)).transpose()?;
    if t_max.is_some_and(|t| t <= 0.0) {
        return Err(CliError::Config("t_max must be positive".into()));
    }
    let t_steps = cfg.t_steps.unwrap_or(DEFAULT_T_STEPS);
    if t_steps < 3 {
        return Err(CliError::Config("t_steps must be at least 3".into()));
    }
    let steps = cfg
        .steps
        .map(|v| {
            v.into_iter()
                .map(|s| {
                    let id = GeneratorId::from_name(&s.generator)
                        .ok_or_else(|| CliError::Config(format!("unknown generator {:?}", s.generator)))?;
                    Ok(Step::new(id, finite("param", s.param)?))
                })
                .collect::<Result<Vec<_>, CliError>>()
        })
        .transpose()?;
    Ok(Resolved {
        model,
        m_max: flags.m_max.or(cfg.m_max).unwrap_or(DEFAULT_M_MAX),
        n_q,
        n_r,
        tol,
        eig_tol,
        out: flags.out.clone().or(cfg.out).unwrap_or_else(|| PathBuf::from(".")),
        b_target,
        label,
        grid,
        t_max,
        t_steps,
        steps,
    })
}
