//! Run configuration: a flat JSON file mirroring the parameter names,
//! overridden field-by-field by command-line flags.

use num_complex::Complex64;
use serde_json::Value;
use slitmap_core::ModelParams;

/// Parameter overrides collected from the command line.
#[derive(Debug, Default, Clone)]
pub struct Overrides {
    pub m: Option<f64>,
    pub kappa: Option<f64>,
    pub tau1: Option<f64>,
    pub tau1_inf: Option<f64>,
    pub n0_star: Option<f64>,
    pub n1: Option<f64>,
    pub b0: Option<f64>,
    pub xi0: Option<f64>,
    pub zeta0: Option<Complex64>,
    pub quad_order: Option<usize>,
    pub n_points: Option<usize>,
    pub tol: Option<f64>,
}

/// Reads a flat JSON config into `ModelParams`, starting from the
/// defaults. `zeta0` is a two-element `[re, im]` array.
pub fn params_from_json(text: &str) -> Result<ModelParams, String> {
    let v: Value = serde_json::from_str(text).map_err(|e| format!("config is not valid JSON: {e}"))?;
    let obj = v.as_object().ok_or("config must be a JSON object")?;
    let mut p = ModelParams::default();
    for (key, val) in obj {
        match key.as_str() {
            "kappa" => p.kappa = as_f64(key, val)?,
            "tau1_hat" => p.tau1_hat = as_f64(key, val)?,
            "tau1_inf_hat" => p.tau1_inf_hat = as_f64(key, val)?,
            "m" => p.m = as_f64(key, val)?,
            "n0_star" => p.n0_star = as_f64(key, val)?,
            "n1" => p.n1 = as_f64(key, val)?,
            "b0" => p.b0 = as_f64(key, val)?,
            "xi0" => p.xi0 = as_f64(key, val)?,
            "zeta0" => {
                let arr = val.as_array().filter(|a| a.len() == 2).ok_or_else(|| {
                    format!("field '{key}' must be a two-element [re, im] array")
                })?;
                p.zeta0 = Complex64::new(as_f64(key, &arr[0])?, as_f64(key, &arr[1])?);
            }
            "quad_order" => p.quad_order = as_usize(key, val)?,
            "n_points" => p.n_points = as_usize(key, val)?,
            "tol" => p.tol = as_f64(key, val)?,
            other => return Err(format!("unknown config field '{other}'")),
        }
    }
    Ok(p)
}

fn as_f64(key: &str, v: &Value) -> Result<f64, String> {
    v.as_f64().ok_or_else(|| format!("field '{key}' must be a number"))
}

fn as_usize(key: &str, v: &Value) -> Result<usize, String> {
    v.as_u64()
        .map(|n| n as usize)
        .ok_or_else(|| format!("field '{key}' must be a non-negative integer"))
}

impl Overrides {
    pub fn apply(&self, mut p: ModelParams) -> ModelParams {
        if let Some(x) = self.m {
            p.m = x;
        }
        if let Some(x) = self.kappa {
            p.kappa = x;
        }
        if let Some(x) = self.tau1 {
            p.tau1_hat = x;
        }
        if let Some(x) = self.tau1_inf {
            p.tau1_inf_hat = x;
        }
        if let Some(x) = self.n0_star {
            p.n0_star = x;
        }
        if let Some(x) = self.n1 {
            p.n1 = x;
        }
        if let Some(x) = self.b0 {
            p.b0 = x;
        }
        if let Some(x) = self.xi0 {
            p.xi0 = x;
        }
        if let Some(z) = self.zeta0 {
            p.zeta0 = z;
        }
        if let Some(n) = self.quad_order {
            p.quad_order = n;
        }
        if let Some(n) = self.n_points {
            p.n_points = n;
        }
        if let Some(t) = self.tol {
            p.tol = t;
        }
        p
    }
}

/// The sweepable parameters and their flag spellings.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepParam {
    M,
    Kappa,
    Tau1,
    Tau1Inf,
    N0Star,
}

impl SweepParam {
    pub fn parse(name: &str) -> Result<Self, String> {
        match name {
            "m" => Ok(SweepParam::M),
            "kappa" => Ok(SweepParam::Kappa),
            "tau1" | "tau1_hat" => Ok(SweepParam::Tau1),
            "tau1-inf" | "tau1_inf_hat" => Ok(SweepParam::Tau1Inf),
            "n0star" | "N0_star" | "n0_star" => Ok(SweepParam::N0Star),
            other => Err(format!(
                "'{other}' is not sweepable (use m, kappa, tau1, tau1-inf or n0star)"
            )),
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            SweepParam::M => "m",
            SweepParam::Kappa => "kappa",
            SweepParam::Tau1 => "tau1",
            SweepParam::Tau1Inf => "tau1-inf",
            SweepParam::N0Star => "n0star",
        }
    }

    pub fn set(&self, mut p: ModelParams, value: f64) -> ModelParams {
        match self {
            SweepParam::M => p.m = value,
            SweepParam::Kappa => p.kappa = value,
            SweepParam::Tau1 => p.tau1_hat = value,
            SweepParam::Tau1Inf => p.tau1_inf_hat = value,
            SweepParam::N0Star => p.n0_star = value,
        }
        p
    }
}

/// Parses `name=v1,v2,...`.
pub fn parse_sweep(spec: &str) -> Result<(SweepParam, Vec<f64>), String> {
    let (name, rest) = spec
        .split_once('=')
        .ok_or("sweep must look like name=v1,v2,...")?;
    let param = SweepParam::parse(name.trim())?;
    let values: Result<Vec<f64>, _> = rest
        .split(',')
        .map(|s| s.trim().parse::<f64>().map_err(|e| format!("bad sweep value '{s}': {e}")))
        .collect();
    let values = values?;
    if values.is_empty() {
        return Err(String::from("sweep needs at least one value"));
    }
    Ok((param, values))
}
