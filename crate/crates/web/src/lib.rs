//! Browser bindings: a spectrum table and sampled radial / oscillator
//! profiles, for the static page in `www/`.

use serde_json::json;
use u1kepler::exact::{format_rational, rational_to_f64};
use u1kepler::oscillator::{self, oscillator_residual, twist};
use u1kepler::radial::{self, radial_eigenfunction, radial_operator_residual};
use u1kepler::spectra::spectrum_table;
use u1kepler::{fd, ProblemParams};
use wasm_bindgen::prelude::*;

const MAX_LEVELS: u32 = 200;
const MAX_POINTS: u32 = 5000;

/// Spectrum rows as a JSON document `{hw_label, levels: [...]}`.
pub fn spectrum_json(n: i32, sigma: i32, levels: u32) -> Result<String, String> {
    let params = ProblemParams::new(n.into(), sigma.into()).map_err(|e| e.to_string())?;
    let table = spectrum_table(params, levels.min(MAX_LEVELS).into());
    let label: Vec<String> = table.hw_label.iter().map(|h| h.to_string()).collect();
    let rows: Vec<_> = table
        .levels
        .iter()
        .map(|l| {
            json!({
                "I": l.level,
                "energy_exact": format_rational(&l.energy),
                "energy_float": rational_to_f64(&l.energy),
                "degeneracy": l.degeneracy.to_string(),
                "left_ktype": l.left_ktype.to_string(),
                "right_ktype": l.right_ktype.to_string(),
            })
        })
        .collect();
    Ok(json!({"hw_label": format!("[{}]", label.join(" ")), "levels": rows}).to_string())
}

/// A sampled profile: interleaved `(x, value)` pairs plus a summary.
#[derive(Debug, Clone, PartialEq)]
pub struct Samples {
    pub xy: Vec<f64>,
    pub summary: String,
}

fn sample(grid: &[f64], points: u32, f: impl Fn(f64) -> f64) -> Result<Vec<f64>, String> {
    if points < 2 {
        return Err("need at least 2 points".into());
    }
    let xs = fd::linspace(grid[0], grid[grid.len() - 1], points.min(MAX_POINTS) as usize);
    Ok(xs.into_iter().flat_map(|x| [x, f(x)]).collect())
}

pub fn radial_samples(n: i32, sigma: i32, k: u32, l: u32, points: u32) -> Result<Samples, String> {
    let params = ProblemParams::new(n.into(), sigma.into()).map_err(|e| e.to_string())?;
    let f = radial_eigenfunction(k.into(), l.into(), params).map_err(|e| e.to_string())?;
    let grid = radial::default_grid(&f);
    let residual = radial_operator_residual(&f, &grid, fd::DEFAULT_STEP).map_err(|e| e.to_string())?;
    let summary = json!({
        "I": f.level(),
        "energy_exact": format_rational(&f.energy()),
        "energy_float": f.energy_f64(),
        "nodes": k - 1,
        "residual": residual,
    });
    Ok(Samples {
        xy: sample(&grid, points, |r| f.eval(r))?,
        summary: summary.to_string(),
    })
}

pub fn oscillator_samples(n: i32, sigma: i32, k: u32, l: u32, points: u32) -> Result<Samples, String> {
    let params = ProblemParams::new(n.into(), sigma.into()).map_err(|e| e.to_string())?;
    let p = twist(&radial_eigenfunction(k.into(), l.into(), params).map_err(|e| e.to_string())?);
    let grid = oscillator::default_grid();
    let residual = oscillator_residual(&p, &grid, fd::DEFAULT_STEP).map_err(|e| e.to_string())?;
    let summary = json!({
        "I": p.source().level(),
        "harmonic_degree": p.harmonic_degree(),
        "eigenvalue": p.eigenvalue(),
        "residual": residual,
    });
    Ok(Samples {
        xy: sample(&grid, points, |r| p.eval(r))?,
        summary: summary.to_string(),
    })
}

#[wasm_bindgen]
pub struct Profile {
    xy: Vec<f64>,
    summary: String,
}

#[wasm_bindgen]
impl Profile {
    /// Interleaved `x0, y0, x1, y1, ...`.
    #[wasm_bindgen(getter)]
    pub fn xy(&self) -> Vec<f64> {
        self.xy.clone()
    }

    #[wasm_bindgen(getter)]
    pub fn summary(&self) -> String {
        self.summary.clone()
    }
}

impl From<Samples> for Profile {
    fn from(s: Samples) -> Self {
        Profile {
            xy: s.xy,
            summary: s.summary,
        }
    }
}

#[wasm_bindgen(js_name = spectrum)]
pub fn js_spectrum(n: i32, sigma: i32, levels: u32) -> Result<String, JsError> {
    spectrum_json(n, sigma, levels).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = radialProfile)]
pub fn js_radial_profile(n: i32, sigma: i32, k: u32, l: u32, points: u32) -> Result<Profile, JsError> {
    radial_samples(n, sigma, k, l, points)
        .map(Profile::from)
        .map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = oscillatorProfile)]
pub fn js_oscillator_profile(n: i32, sigma: i32, k: u32, l: u32, points: u32) -> Result<Profile, JsError> {
    oscillator_samples(n, sigma, k, l, points)
        .map(Profile::from)
        .map_err(|e| JsError::new(&e))
}
