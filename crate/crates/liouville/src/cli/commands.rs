//! The six subcommands. Each computes all of its artifacts before anything
//! is written, so a failing command leaves no files behind.

use liouville_core::reduction::{reduce_to_kl, replay, ReductionPlan};
use liouville_core::spectrum::{eigenvalue, EigenLabel, Sign};
use liouville_core::{
    apply_plan_gaussian, assemble_liouvillian, delta, transformed_eigenfunction, AppliedEigenfunction, Error,
    GaussianState, LinearPhaseOperator, LiouvillianCoeffs, C64,
};
use serde_json::{json, Value};

use super::config::{Grid, ModelSpec, Resolved};
use super::output::{grid_csv, Artifact};
use super::CliError;
use crate::verify::{
    assemble_matrix, biorthogonality_check, expand, lower_coupling, match_spectrum, residual, trace_and_hermiticity,
    truncated_spectrum, BasisConfig, OperatorMatrix, Propagator, StateVector,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Spectrum,
    Reduce,
    Eigfun,
    Stationary,
    Verify,
    Evolve,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Spectrum => "spectrum",
            Command::Reduce => "reduce",
            Command::Eigfun => "eigfun",
            Command::Stationary => "stationary",
            Command::Verify => "verify",
            Command::Evolve => "evolve",
        }
    }
}

/// Artifacts of a successful run and whether every tolerance was met.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub artifacts: Vec<Artifact>,
    pub pass: bool,
}

pub fn run_command(cmd: Command, r: &Resolved) -> Result<Outcome, CliError> {
    match cmd {
        Command::Spectrum => spectrum(r),
        Command::Reduce => reduce(r),
        Command::Eigfun => eigfun(r),
        Command::Stationary => stationary(r),
        Command::Verify => verify(r),
        Command::Evolve => evolve(r),
    }
}

fn c64(z: C64) -> Value {
    json!({ "re": z.re, "im": z.im })
}

fn coeffs_json(c: &LiouvillianCoeffs) -> Value {
    json!({ "h": c.h, "gamma": c.gamma, "g": c.g })
}

fn label_json(l: &EigenLabel) -> Value {
    json!({ "m": l.m, "n": l.n, "sign": l.sign.symbol().to_string() })
}

fn gaussian_json(s: &GaussianState) -> Value {
    json!({ "mu": s.mu, "kappa": s.kappa, "nu": s.nu })
}

fn linear_json(l: &LinearPhaseOperator) -> Value {
    json!({ "q": c64(l.q), "r": c64(l.r), "dq": c64(l.dq), "dr": c64(l.dr) })
}

fn steps_json(steps: &[liouville_core::Step]) -> Value {
    Value::Array(steps.iter().map(|s| json!({ "generator": s.generator.name(), "param": s.param })).collect())
}

fn header(cmd: Command, r: &Resolved) -> serde_json::Map<String, Value> {
    let mut m = serde_json::Map::new();
    m.insert("command".into(), json!(cmd.name()));
    m.insert("model".into(), json!(r.model.name()));
    m.insert("coefficients".into(), coeffs_json(&r.model.coefficients()));
    m
}

/// Reduction plan of the configured model.
pub fn plan(r: &Resolved) -> Result<ReductionPlan, CliError> {
    let c = r.model.coefficients();
    r.model.omega0()?;
    Ok(reduce_to_kl(&c, r.b_target)?)
}

fn label_or_default(r: &Resolved) -> EigenLabel {
    r.label.unwrap_or(EigenLabel { m: 1, n: 0, sign: Sign::Plus })
}

/// Physical stationary state; `PositivityViolation` when the model has none.
pub fn stationary_state(r: &Resolved, plan: &ReductionPlan) -> Result<GaussianState, CliError> {
    let s = match &r.model {
        ModelSpec::Preset(p) => p.stationary()?,
        ModelSpec::Generic(c) => {
            let f = transformed_eigenfunction(plan, &EigenLabel { m: 0, n: 0, sign: Sign::Plus }, c)?;
            f.gaussian
        }
    };
    if !s.is_physical() {
        return Err(Error::PositivityViolation { step: None, generator: None, param: s.nu, window: (0.0, f64::INFINITY) }
            .into());
    }
    Ok(s)
}

fn spectrum(r: &Resolved) -> Result<Outcome, CliError> {
    let omega0 = r.model.omega0()?;
    let gamma = r.model.gamma();
    let modes: Vec<Value> = EigenLabel::all_up_to(r.m_max)
        .iter()
        .map(|l| {
            let mut v = label_json(l);
            let z = eigenvalue(l, omega0, gamma);
            v["re"] = json!(z.re);
            v["im"] = json!(z.im);
            v
        })
        .collect();
    let mut out = header(Command::Spectrum, r);
    out.insert("omega0".into(), json!(omega0));
    out.insert("gamma".into(), json!(gamma));
    out.insert("m_max".into(), json!(r.m_max));
    out.insert("eigenvalues".into(), Value::Array(modes));
    Ok(Outcome { artifacts: vec![Artifact::json("spectrum.json", &out)?], pass: true })
}

fn reduce(r: &Resolved) -> Result<Outcome, CliError> {
    let p = plan(r)?;
    let source = r.model.coefficients();
    let residual = p.replay_residual(&source);
    let mut out = header(Command::Reduce, r);
    out.insert("omega0".into(), json!(p.omega0));
    out.insert("b".into(), json!(p.b));
    out.insert("steps".into(), steps_json(&p.steps));
    out.insert("target".into(), coeffs_json(&p.target));
    out.insert("replay_residual".into(), json!(residual));
    let mut pass = residual <= r.tol;
    if let Some(steps) = &r.steps {
        // Replays an explicit step list, e.g. the `steps` of an earlier run.
        let replayed = replay(steps, &source);
        let d = replayed.max_abs_diff(&p.target);
        out.insert("input_steps".into(), json!({ "replayed": coeffs_json(&replayed), "distance_to_target": d }));
        pass &= d <= r.tol;
    }
    Ok(Outcome { artifacts: vec![Artifact::json("reduce.json", &out)?], pass })
}

fn poly_json(f: &AppliedEigenfunction) -> Value {
    Value::Array(
        f.density_polynomial()
            .terms()
            .map(|((j, k), c)| json!({ "q_power": j, "r_power": k, "re": c.re, "im": c.im }))
            .collect(),
    )
}

fn default_grid(s: &GaussianState) -> Result<Grid, CliError> {
    let frame = s.normalized_frame()?;
    let (q, r) = (3.0 * frame.q_scale, 3.0 / frame.r_scale);
    Ok(Grid { q_min: -q, q_max: q, r_min: -r, r_max: r, steps: 41 })
}

fn eigfun(r: &Resolved) -> Result<Outcome, CliError> {
    let p = plan(r)?;
    let label = label_or_default(r);
    let f = transformed_eigenfunction(&p, &label, &r.model.coefficients())?;
    let grid = match &r.grid {
        Some(g) => g.clone(),
        None => default_grid(&f.gaussian)?,
    };
    let eval = f.evaluator();
    let lin = |lo: f64, hi: f64, i: usize| lo + (hi - lo) * i as f64 / (grid.steps - 1) as f64;
    let mut rows = Vec::with_capacity(grid.steps * grid.steps);
    for i in 0..grid.steps {
        let q = lin(grid.q_min, grid.q_max, i);
        for j in 0..grid.steps {
            let rr = lin(grid.r_min, grid.r_max, j);
            let v = eval(q, rr);
            rows.push([q, rr, v.re, v.im]);
        }
    }
    let mut out = header(Command::Eigfun, r);
    out.insert("label".into(), label_json(&label));
    out.insert("eigenvalue".into(), c64(f.eigenvalue));
    out.insert("gaussian".into(), gaussian_json(&f.gaussian));
    out.insert("frame".into(), json!({ "q_scale": f.frame.q_scale, "r_scale": f.frame.r_scale }));
    out.insert("q_operator".into(), linear_json(&f.q_op));
    out.insert("r_operator".into(), linear_json(&f.r_op));
    out.insert("density_polynomial".into(), poly_json(&f));
    out.insert("steps".into(), steps_json(&p.steps));
    out.insert(
        "grid".into(),
        json!({ "q_min": grid.q_min, "q_max": grid.q_max, "r_min": grid.r_min, "r_max": grid.r_max, "steps": grid.steps, "file": "eigfun_grid.csv" }),
    );
    Ok(Outcome {
        artifacts: vec![
            Artifact::json("eigfun.json", &out)?,
            Artifact { name: "eigfun_grid.csv".into(), contents: grid_csv(&rows) },
        ],
        pass: true,
    })
}

fn stationary(r: &Resolved) -> Result<Outcome, CliError> {
    let p = plan(r)?;
    let s = stationary_state(r, &p)?;
    let frame = s.normalized_frame()?;
    let mut out = header(Command::Stationary, r);
    out.insert("gaussian".into(), gaussian_json(&s));
    out.insert("delta".into(), json!(delta(&s)));
    out.insert("frame".into(), json!({ "q_scale": frame.q_scale, "r_scale": frame.r_scale }));
    if let Some(steps) = &r.steps {
        let t = apply_plan_gaussian(steps, &s)?;
        out.insert("steps".into(), steps_json(steps));
        out.insert("transformed".into(), json!({ "gaussian": gaussian_json(&t), "delta": delta(&t) }));
    }
    Ok(Outcome { artifacts: vec![Artifact::json("stationary.json", &out)?], pass: true })
}

/// Liouvillian matrix in the basis adapted to the stationary state.
pub fn setup_matrix(r: &Resolved, s: &GaussianState) -> Result<(BasisConfig, OperatorMatrix), CliError> {
    let cfg = BasisConfig::adapted_to(s, r.n_q, r.n_r)?;
    let k = assemble_matrix(&assemble_liouvillian(&r.model.coefficients()), &cfg)?;
    Ok((cfg, k))
}

fn basis_json(cfg: &BasisConfig) -> Value {
    json!({ "n_q": cfg.n_q, "n_r": cfg.n_r, "q_scale": cfg.frame.q_scale, "r_scale": cfg.frame.r_scale, "chirp": cfg.chirp })
}

fn verify(r: &Resolved) -> Result<Outcome, CliError> {
    let p = plan(r)?;
    let s = stationary_state(r, &p)?;
    let (cfg, k) = setup_matrix(r, &s)?;
    let c = r.model.coefficients();
    let omega0 = p.omega0;
    let mut pass = true;
    let mut modes = Vec::new();
    let mut rows = Vec::new();
    let mut max_residual: f64 = 0.0;
    for l in EigenLabel::all_up_to(r.m_max) {
        let f = transformed_eigenfunction(&p, &l, &c)?;
        let v = expand(&f, &cfg);
        let res = residual(&k, &v, f.eigenvalue)?;
        max_residual = max_residual.max(res);
        pass &= res <= r.tol;
        let mut row = label_json(&l);
        row["eigenvalue"] = c64(f.eigenvalue);
        row["residual"] = json!(res);
        row["pass"] = json!(res <= r.tol);
        rows.push(row);
        modes.push((l, v, f.eigenvalue));
    }
    let (tr, herm) = trace_and_hermiticity(&modes[0].1);
    let trace_error = (tr - C64::new(1.0, 0.0)).norm();
    pass &= trace_error <= r.tol && herm <= r.tol;

    let spec = truncated_spectrum(&k, &cfg);
    let window = r.m_max as f64 * omega0.max(c.gamma);
    let m = match_spectrum(&spec, omega0, c.gamma, window, r.eig_tol);
    pass &= m.unmatched.is_empty() && m.missing.is_empty();
    let spectrum = json!({
        "window": window,
        "triangular": spec.triangular,
        "lower_coupling": spec.lower_coupling,
        "in_window": m.in_window,
        "max_distance": m.max_distance,
        "unmatched": m.unmatched.iter().map(|z| c64(*z)).collect::<Vec<_>>(),
        "missing": m.missing.iter().map(|z| c64(*z)).collect::<Vec<_>>(),
    });
    let pairing = match biorthogonality_check(&k, &cfg, &modes, r.eig_tol) {
        Ok(g) => {
            pass &= g.max_off_diagonal <= r.eig_tol;
            json!({
                "max_off_diagonal": g.max_off_diagonal,
                "max_eigenvalue_distance": g.max_eigenvalue_distance,
                "subspace_dim": g.subspace_dim,
            })
        }
        Err(e) => {
            pass = false;
            json!({ "error": { "kind": e.kind(), "message": e.to_string() } })
        }
    };
    let mut out = header(Command::Verify, r);
    out.insert("omega0".into(), json!(omega0));
    out.insert("m_max".into(), json!(r.m_max));
    out.insert("tol".into(), json!(r.tol));
    out.insert("eig_tol".into(), json!(r.eig_tol));
    out.insert("basis".into(), basis_json(&cfg));
    out.insert("modes".into(), Value::Array(rows));
    out.insert("max_residual".into(), json!(max_residual));
    out.insert(
        "stationary".into(),
        json!({ "gaussian": gaussian_json(&s), "trace": c64(tr), "trace_error": trace_error, "hermiticity_defect": herm }),
    );
    out.insert("spectrum".into(), spectrum);
    out.insert("biorthogonality".into(), pairing);
    out.insert("pass".into(), json!(pass));
    Ok(Outcome { artifacts: vec![Artifact::json("verify.json", &out)?], pass })
}

/// Least-squares slope of `ln y` against `t`, negated.
pub fn fitted_decay_rate(t: &[f64], y: &[f64]) -> f64 {
    let n = t.len() as f64;
    let ly: Vec<f64> = y.iter().map(|v| v.ln()).collect();
    let (mt, my) = (t.iter().sum::<f64>() / n, ly.iter().sum::<f64>() / n);
    let sxy: f64 = t.iter().zip(&ly).map(|(a, b)| (a - mt) * (b - my)).sum();
    let sxx: f64 = t.iter().map(|a| (a - mt) * (a - mt)).sum();
    -sxy / sxx
}

/// Relative tolerance on the fitted decay rate.
pub const DECAY_RATE_TOL: f64 = 0.01;
/// Amplitude of the seeded mode in the initial state.
pub const SEED_AMPLITUDE: f64 = 0.5;

fn evolve(r: &Resolved) -> Result<Outcome, CliError> {
    let p = plan(r)?;
    let s = stationary_state(r, &p)?;
    let (cfg, k) = setup_matrix(r, &s)?;
    let c = r.model.coefficients();
    let label = label_or_default(r);
    if label.m == 0 {
        return Err(CliError::Config("evolve needs a decaying mode label (m > 0)".into()));
    }
    let f00 = expand(&transformed_eigenfunction(&p, &EigenLabel { m: 0, n: 0, sign: Sign::Plus }, &c)?, &cfg);
    // A hermitian perturbation: a real mode, or the sum of a ± pair.
    let signs: &[Sign] = if label.n == 0 { &[Sign::Plus] } else { &[Sign::Plus, Sign::Minus] };
    let weight = C64::new(SEED_AMPLITUDE / signs.len() as f64, 0.0);
    let mut seeded = Vec::new();
    for sign in signs {
        let l = EigenLabel { sign: *sign, ..label };
        let f = transformed_eigenfunction(&p, &l, &c)?;
        seeded.push((expand(&f, &cfg), f.eigenvalue));
    }
    let mut x0 = f00.coeffs.clone();
    for (v, _) in &seeded {
        x0 += &v.coeffs * weight;
    }
    let prop = Propagator::new(&k, &StateVector::new(x0, cfg))?;
    let lambda = seeded[0].1;
    let t_max = r.t_max.unwrap_or(10.0 / c.gamma);
    if !(t_max.is_finite() && t_max > 0.0) {
        return Err(CliError::Config("t_max must be positive (γ = 0 needs an explicit t_max)".into()));
    }
    let mode = &seeded[0].0;
    let mode_norm = mode.coeffs.norm_squared();
    let (mut ts, mut amps) = (Vec::new(), Vec::new());
    let mut series = Vec::new();
    let (mut max_trace_error, mut max_herm): (f64, f64) = (0.0, 0.0);
    for i in 0..r.t_steps {
        let t = t_max * i as f64 / (r.t_steps - 1) as f64;
        let ft = prop.at(t)?;
        let (tr, herm) = trace_and_hermiticity(&ft);
        let amp = mode.coeffs.dotc(&(&ft.coeffs - &f00.coeffs)) / mode_norm;
        let te = (tr - C64::new(1.0, 0.0)).norm();
        max_trace_error = max_trace_error.max(te);
        max_herm = max_herm.max(herm);
        ts.push(t);
        amps.push(amp.norm());
        series.push(json!({ "t": t, "trace": c64(tr), "hermiticity_defect": herm, "amplitude": c64(amp) }));
    }
    let fitted = fitted_decay_rate(&ts, &amps);
    let expected = lambda.re;
    let rel = (fitted - expected).abs() / expected.abs().max(f64::MIN_POSITIVE);
    let pass = max_trace_error <= r.tol && max_herm <= r.tol && rel <= DECAY_RATE_TOL;
    let mut out = header(Command::Evolve, r);
    out.insert("label".into(), label_json(&label));
    out.insert("eigenvalue".into(), c64(lambda));
    out.insert("basis".into(), basis_json(&cfg));
    out.insert("lower_coupling".into(), json!(lower_coupling(&k, &cfg)));
    out.insert("t_max".into(), json!(t_max));
    out.insert("seed_amplitude".into(), json!(SEED_AMPLITUDE));
    out.insert("max_trace_error".into(), json!(max_trace_error));
    out.insert("max_hermiticity_defect".into(), json!(max_herm));
    out.insert(
        "decay_rate".into(),
        json!({ "fitted": fitted, "expected": expected, "relative_error": rel, "tol": DECAY_RATE_TOL }),
    );
    out.insert("series".into(), Value::Array(series));
    out.insert("pass".into(), json!(pass));
    Ok(Outcome { artifacts: vec![Artifact::json("evolve.json", &out)?], pass })
}
