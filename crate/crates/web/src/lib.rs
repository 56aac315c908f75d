//! Browser bindings: each entry point takes a JSON job description (the same schema the
//! CLI reads) and returns a JSON string. Natively they are plain functions, so the demo's
//! logic is tested without a browser.

use serde::Serialize;
use serde_json::{json, Value};

use ostar_core::characters::CharacterTable;
use ostar_core::cyclotomic::CycloNum;
use ostar_core::job::{parse_config, run_job, JobConfig, Task};
use ostar_core::symclass::{MultiIndex, TensorSetting};

#[cfg(target_arch = "wasm32")]
use wasm_bindgen::prelude::wasm_bindgen;

/// Orbits with a Gram matrix in the explorer; larger inputs are truncated.
const MAX_ORBITS: usize = 60;
/// Index scans the page will attempt before refusing.
const WEB_BUDGET: u64 = 200_000;

fn load(config: &str, tasks: &[Task]) -> Result<JobConfig, String> {
    let mut cfg = parse_config(config).map_err(|e| e.to_string())?;
    cfg.tasks = tasks.to_vec();
    cfg.budgets.index = cfg.budgets.index.min(WEB_BUDGET);
    Ok(cfg)
}

fn approx(v: &CycloNum) -> String {
    let c = v.to_complex();
    let tidy = |x: f64| if x.abs() < 5e-10 { 0.0 } else { x };
    let (re, im) = (tidy(c.re), tidy(c.im));
    if im == 0.0 {
        format!("{re:.4}")
    } else {
        format!("{re:.4}{im:+.4}i")
    }
}

/// Character table of the configured group, with exact and approximate values.
#[cfg_attr(target_arch = "wasm32", wasm_bindgen)]
pub fn character_table(config: &str) -> Result<String, String> {
    let cfg = load(config, &[Task::Chartable])?;
    run_job(&cfg)
        .map(|r| r.to_json())
        .map_err(|e| e.to_string())
}

/// Verdict for every irreducible character, optionally cross-checked by brute force.
#[cfg_attr(target_arch = "wasm32", wasm_bindgen)]
pub fn decide(config: &str, verify: bool) -> Result<String, String> {
    let tasks: &[Task] = if verify {
        &[Task::Decide, Task::Verify]
    } else {
        &[Task::Decide]
    };
    let cfg = load(config, tasks)?;
    run_job(&cfg)
        .map(|r| r.to_json())
        .map_err(|e| e.to_string())
}

#[derive(Serialize)]
struct GramView {
    rep: MultiIndex,
    orbit_size: usize,
    stabilizer_order: usize,
    s_alpha: String,
    size: usize,
    rank: usize,
    hermitian: bool,
    /// Approximate entries, row-major.
    entries: Vec<Vec<String>>,
    /// Indices of a largest family of pairwise orthogonal vectors among the orbit's generators.
    orthogonal_family: Vec<usize>,
}

/// Orbits of Γ_{m,n} under G for one character, with the Gram matrix of every orbital
/// subspace that survives in the symmetry class.
#[cfg_attr(target_arch = "wasm32", wasm_bindgen)]
pub fn orbit_explorer(config: &str, chi: usize) -> Result<String, String> {
    let cfg = load(config, &[])?;
    let mut table = CharacterTable::compute(&cfg.group);
    if !table.validate(&cfg.group).passed() {
        return Err("character table failed validation".into());
    }
    if chi >= table.len() {
        return Err(format!("chi must be below {}", table.len()));
    }
    let row = table.row(chi);
    let setting =
        TensorSetting::new(&cfg.group, &cfg.rep, &row, cfg.n).map_err(|e| e.to_string())?;
    let records = setting
        .orbit_scan(cfg.budgets.index as u128)
        .map_err(|e| e.to_string())?;
    let surviving: Vec<_> = records.iter().filter(|r| r.in_delta_bar).collect();
    let mut grams = Vec::new();
    for r in surviving.iter().take(MAX_ORBITS) {
        let g = setting.gram(&r.rep).map_err(|e| e.to_string())?;
        let k = g.size();
        let adj: Vec<Vec<bool>> = (0..k)
            .map(|i| {
                (0..k)
                    .map(|j| i != j && g.entries[i][j].is_zero())
                    .collect()
            })
            .collect();
        let family = ostar_core::ostar::max_clique(&adj, k);
        grams.push(GramView {
            rep: r.rep.clone(),
            orbit_size: r.orbit_size,
            stabilizer_order: r.stabilizer.len(),
            s_alpha: r.s_alpha.to_string(),
            size: k,
            rank: g.rank(),
            hermitian: g.is_hermitian(),
            entries: g
                .entries
                .iter()
                .map(|row| row.iter().map(approx).collect())
                .collect(),
            orthogonal_family: family,
        });
    }
    let dim = setting.dim().map_err(|e| e.to_string())?;
    let out: Value = json!({
        "label": cfg.label,
        "chi": chi,
        "degree": table.degree(chi),
        "n": cfg.n,
        "m": cfg.rep.degree(),
        "dim": dim.to_string(),
        "orbit_count": records.len(),
        "surviving_orbits": surviving.len(),
        "truncated": surviving.len() > MAX_ORBITS,
        "orbits": grams,
    });
    Ok(serde_json::to_string(&out).expect("serializable"))
}
