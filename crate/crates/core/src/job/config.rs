use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groups::{
    build_wreath, dihedral, group_pq, regular_rep, z_group, AbelianGroup, ActionHom, Automorphism,
    Perm, PermRep, RepKind, SemidirectGroup, WreathSpec, SUBGROUP_BOUND,
};
use crate::symclass::INDEX_BUDGET;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Deserialize, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Task {
    Chartable,
    Orbits,
    Dims,
    Decide,
    Verify,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Deserialize, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Format {
    #[default]
    Json,
    Csv,
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct Budgets {
    /// Cap on n^m for exhaustive index scans.
    #[serde(default = "default_index_budget")]
    pub index: u64,
    /// Largest group order whose subgroup lattice is enumerated.
    #[serde(default = "default_subgroup_bound")]
    pub subgroup: usize,
}

fn default_index_budget() -> u64 {
    INDEX_BUDGET as u64
}

fn default_subgroup_bound() -> usize {
    SUBGROUP_BOUND
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets {
            index: default_index_budget(),
            subgroup: default_subgroup_bound(),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct Output {
    pub path: Option<String>,
    #[serde(default)]
    pub format: Format,
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize, Serialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum FamilySpec {
    Dihedral { s: u32 },
    Pq { p: u32, q: u32, r: u32 },
    ZGroup { s: u32, t: u32, r: u32 },
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize, Serialize)]
#[serde(untagged)]
pub enum WreathAction {
    /// Only "regular" is accepted.
    Keyword(String),
    /// One permutation of Ω per generator of H, images of 1..=|Ω|.
    Perms(Vec<Vec<u32>>),
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct WreathConfig {
    #[serde(rename = "A")]
    pub a: Vec<u32>,
    #[serde(rename = "H")]
    pub h: Vec<u32>,
    pub omega: usize,
    pub action: WreathAction,
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct ExplicitRep {
    /// Images of 1..=m for each generator of A.
    pub a: Vec<Vec<u32>>,
    /// Images of 1..=m for each generator of H.
    pub h: Vec<Vec<u32>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Deserialize, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RepConfig {
    #[default]
    Natural,
    Regular,
    Explicit(ExplicitRep),
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    family: Option<FamilySpec>,
    wreath: Option<WreathConfig>,
    #[serde(rename = "A")]
    a: Option<Vec<u32>>,
    #[serde(rename = "H")]
    h: Option<Vec<u32>>,
    /// phi[j][i]: coordinates of φ_{h_j}(a_i).
    phi: Option<Vec<Vec<Vec<i64>>>>,
    #[serde(default)]
    rep: RepConfig,
    n: u32,
    m: Option<usize>,
    #[serde(default)]
    tasks: Vec<Task>,
    #[serde(default)]
    budgets: Budgets,
    #[serde(default)]
    output: Output,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GroupSource {
    Family,
    Wreath,
    Semidirect,
}

/// A validated job: the group and representation are already built.
#[derive(Debug, Clone)]
pub struct JobConfig {
    pub group: SemidirectGroup,
    pub label: String,
    pub source: GroupSource,
    pub rep: PermRep,
    pub n: u32,
    /// Tasks in pipeline order, without repeats.
    pub tasks: Vec<Task>,
    pub budgets: Budgets,
    pub output: Output,
}

fn at(path: &str, e: Error) -> Error {
    match e {
        Error::Invalid(msg) => Error::Invalid(format!("{path}: {msg}")),
        other => other,
    }
}

fn invalid_at<T>(path: &str, msg: impl std::fmt::Display) -> Result<T> {
    Err(Error::Invalid(format!("{path}: {msg}")))
}

fn abelian(path: &str, factors: &[u32]) -> Result<AbelianGroup> {
    AbelianGroup::new(factors.to_vec()).map_err(|e| at(path, e))
}

fn perms(path: &str, list: &[Vec<u32>]) -> Result<Vec<Perm>> {
    list.iter()
        .enumerate()
        .map(|(i, p)| Perm::from_one_based(p).map_err(|e| at(&format!("{path}[{i}]"), e)))
        .collect()
}

fn semidirect_from_table(a: &[u32], h: &[u32], phi: &[Vec<Vec<i64>>]) -> Result<SemidirectGroup> {
    let a = abelian("A", a)?;
    let h = abelian("H", h)?;
    if phi.len() != h.rank() {
        return invalid_at(
            "phi",
            format!("{} rows given, H has {} generators", phi.len(), h.rank()),
        );
    }
    let mut images = Vec::with_capacity(phi.len());
    for (j, row) in phi.iter().enumerate() {
        let path = format!("phi[{j}]");
        if row.len() != a.rank() {
            return invalid_at(
                &path,
                format!("{} images given, A has {} generators", row.len(), a.rank()),
            );
        }
        let gens = row
            .iter()
            .enumerate()
            .map(|(i, coords)| {
                if coords.len() != a.rank() {
                    return invalid_at(
                        &format!("{path}[{i}]"),
                        format!(
                            "{} coordinates given, A has rank {}",
                            coords.len(),
                            a.rank()
                        ),
                    );
                }
                a.element(coords)
                    .map_err(|e| at(&format!("{path}[{i}]"), e))
            })
            .collect::<Result<Vec<_>>>()?;
        images.push(Automorphism::new(&a, gens).map_err(|e| at(&path, e))?);
    }
    let phi = ActionHom::new(&a, &h, images).map_err(|e| at("phi", e))?;
    SemidirectGroup::new(a, h, phi).map_err(|e| at("phi", e))
}

/// Parses and validates a job description; every structural error carries a path.
pub fn parse_config(text: &str) -> Result<JobConfig> {
    let de = &mut serde_json::Deserializer::from_str(text);
    let raw: RawConfig = serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        let path = if path == "." {
            "config".to_string()
        } else {
            path
        };
        Error::Invalid(format!("{path}: {}", e.inner()))
    })?;
    build(raw)
}

fn build(raw: RawConfig) -> Result<JobConfig> {
    if raw.n == 0 {
        return invalid_at("n", "alphabet size must be at least 1");
    }
    let custom = raw.a.is_some() || raw.h.is_some() || raw.phi.is_some();
    let given = [raw.family.is_some(), raw.wreath.is_some(), custom]
        .iter()
        .filter(|b| **b)
        .count();
    if given != 1 {
        return invalid_at(
            "config",
            "give exactly one group: `family`, `wreath`, or `A`/`H`/`phi`",
        );
    }
    let (group, natural, label, source) = if let Some(f) = &raw.family {
        let built = match *f {
            FamilySpec::Dihedral { s } => dihedral(s),
            FamilySpec::Pq { p, q, r } => group_pq(p, q, r),
            FamilySpec::ZGroup { s, t, r } => z_group(s, t, r),
        }
        .map_err(|e| at("family", e))?;
        (built.group, built.natural, built.label, GroupSource::Family)
    } else if let Some(w) = &raw.wreath {
        let a = abelian("wreath.A", &w.a)?;
        let h = abelian("wreath.H", &w.h)?;
        let spec = match &w.action {
            WreathAction::Keyword(k) if k == "regular" => {
                if w.omega != h.order() {
                    return invalid_at(
                        "wreath.omega",
                        format!("regular action needs omega = |H| = {}", h.order()),
                    );
                }
                WreathSpec::regular(a, h)
            }
            WreathAction::Keyword(k) => {
                return invalid_at(
                    "wreath.action",
                    format!("unknown action {k:?}; use \"regular\" or a list of permutations"),
                )
            }
            WreathAction::Perms(list) => WreathSpec {
                action: perms("wreath.action", list)?,
                omega: w.omega,
                a,
                h,
            },
        };
        let built = build_wreath(&spec).map_err(|e| at("wreath", e))?;
        (built.group, built.natural, built.label, GroupSource::Wreath)
    } else {
        let (Some(a), Some(h), Some(phi)) = (&raw.a, &raw.h, &raw.phi) else {
            return invalid_at(
                "config",
                "a semidirect product needs all of `A`, `H` and `phi`",
            );
        };
        let g = semidirect_from_table(a, h, phi)?;
        let label = format!("Z{a:?} x| Z{h:?}");
        (g, None, label, GroupSource::Semidirect)
    };
    let rep = match &raw.rep {
        RepConfig::Natural => natural.ok_or_else(|| {
            Error::Invalid(format!(
                "rep: {label} has no faithful natural representation; use \"regular\" or \"explicit\""
            ))
        })?,
        RepConfig::Regular => regular_rep(&group),
        RepConfig::Explicit(x) => {
            let a_gens = perms("rep.explicit.a", &x.a)?;
            let h_gens = perms("rep.explicit.h", &x.h)?;
            PermRep::from_generators(&group, &a_gens, &h_gens, RepKind::Explicit)
                .map_err(|e| at("rep.explicit", e))?
        }
    };
    if let Some(m) = raw.m {
        if m != rep.degree() {
            return invalid_at(
                "m",
                format!(
                    "override {m} differs from the representation degree {}",
                    rep.degree()
                ),
            );
        }
    }
    let mut tasks = raw.tasks;
    tasks.sort();
    tasks.dedup();
    Ok(JobConfig {
        group,
        label,
        source,
        rep,
        n: raw.n,
        tasks,
        budgets: raw.budgets,
        output: raw.output,
    })
}
