use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Serialize, Serializer};

use super::config::{Format, GroupSource, JobConfig, Task};
use crate::characters::{format_approx, CharacterTable, ValidationReport};
use crate::cyclotomic::{CycloNum, JsonInt, JsonRational};
use crate::error::{invalid, Error, Result};
use crate::groups::{FiniteGroup, RepKind};
use crate::ostar::{
    brute_force_verify, decide_main_theorem, decide_subgroup_criterion, Justification, Verdict,
    Witness,
};
use crate::symclass::{delta_bar_total, OrbitRecord, TensorSetting};

fn big_int<S: Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    JsonInt(v).serialize(s)
}

fn big_rational<S: Serializer>(v: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
    JsonRational(v).serialize(s)
}

#[derive(Debug, Clone, Serialize)]
pub struct GroupInfo {
    pub label: String,
    pub source: GroupSource,
    pub order: usize,
    #[serde(rename = "A")]
    pub a: Vec<u32>,
    #[serde(rename = "H")]
    pub h: Vec<u32>,
}

#[derive(Debug, Clone, Serialize)]
pub struct RepInfo {
    pub kind: RepKind,
    pub degree: usize,
    pub faithful: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassInfo {
    /// Smallest element index in the class.
    pub representative: usize,
    #[serde(rename = "A")]
    pub a: Vec<u32>,
    #[serde(rename = "H")]
    pub h: Vec<u32>,
    pub size: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct CharacterRow {
    pub index: usize,
    pub degree: u32,
    pub dual_orbit_rep: Vec<u32>,
    pub dual_orbit_size: usize,
    pub u: Vec<u32>,
    /// Exact values, one per class.
    pub values: Vec<CycloNum>,
    /// Float approximations of `values`, for reading only.
    pub approx: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct TableReport {
    pub conductor: u32,
    pub classes: Vec<ClassInfo>,
    pub characters: Vec<CharacterRow>,
}

#[derive(Debug, Clone, Serialize)]
pub struct OrbitSection {
    pub chi: usize,
    pub records: Vec<OrbitRecord>,
}

#[derive(Debug, Clone, Serialize)]
pub struct DimRow {
    pub chi: usize,
    pub degree: u32,
    #[serde(serialize_with = "big_int")]
    pub dim: BigInt,
    /// Σ_{α∈Δ̄} s_α from the orbit scan.
    #[serde(serialize_with = "big_rational")]
    pub orbital_sum: BigRational,
    pub consistent: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct Decision {
    pub chi: usize,
    pub degree: u32,
    /// The first definite verdict of the trail, else the first one.
    pub verdict: Verdict,
    /// Every decider consulted, cheapest first.
    pub trail: Vec<Verdict>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Verification {
    pub chi: usize,
    pub brute_force: Verdict,
    /// Null when either side is inconclusive.
    pub agrees_with_decision: Option<bool>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub group: GroupInfo,
    pub representation: RepInfo,
    pub n: u32,
    pub m: usize,
    pub tasks: Vec<Task>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub validation: Option<ValidationReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub character_table: Option<TableReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub orbits: Option<Vec<OrbitSection>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dims: Option<Vec<DimRow>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub decisions: Option<Vec<Decision>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verification: Option<Vec<Verification>>,
    #[serde(skip)]
    chartable_csv: Option<String>,
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report is serializable") + "\n"
    }

    /// The single table of this report as CSV: the character table or the orbit records.
    pub fn to_csv(&self) -> Result<String> {
        match (&self.chartable_csv, &self.orbits) {
            (Some(_), Some(_)) => {
                invalid("csv holds one table; request `chartable` or `orbits`, not both")
            }
            (Some(t), None) => Ok(t.clone()),
            (None, Some(sections)) => Ok(orbit_sections_csv(sections)),
            (None, None) => invalid("csv output needs the `chartable` or `orbits` task"),
        }
    }

    pub fn render(&self, format: Format) -> Result<String> {
        match format {
            Format::Json => Ok(self.to_json()),
            Format::Csv => self.to_csv(),
        }
    }
}

fn orbit_sections_csv(sections: &[OrbitSection]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record([
        "chi",
        "rep",
        "orbit_size",
        "stabilizer_order",
        "s_alpha",
        "in_delta_bar",
    ])
    .expect("in-memory csv");
    for s in sections {
        for r in &s.records {
            w.write_record([
                s.chi.to_string(),
                r.rep.to_string(),
                r.orbit_size.to_string(),
                r.stabilizer.len().to_string(),
                r.s_alpha.to_string(),
                r.in_delta_bar.to_string(),
            ])
            .expect("in-memory csv");
        }
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf8")
}

fn table_report(cfg: &JobConfig, t: &CharacterTable) -> TableReport {
    let g = &cfg.group;
    TableReport {
        conductor: t.conductor(),
        classes: t
            .classes()
            .iter()
            .map(|cl| {
                let (a, h) = g.coords(cl[0]);
                ClassInfo {
                    representative: cl[0],
                    a,
                    h,
                    size: cl.len(),
                }
            })
            .collect(),
        characters: t
            .chars()
            .iter()
            .enumerate()
            .map(|(i, c)| CharacterRow {
                index: i,
                degree: c.degree,
                dual_orbit_rep: c.orbit.representative.exponents().to_vec(),
                dual_orbit_size: c.orbit.members.len(),
                u: c.u.exponents().to_vec(),
                values: t.class_values(i).to_vec(),
                approx: t.class_values(i).iter().map(format_approx).collect(),
            })
            .collect(),
    }
}

fn decide_one(
    cfg: &JobConfig,
    t: &CharacterTable,
    chi: usize,
    row: &[CycloNum],
) -> Result<Decision> {
    let budget = cfg.budgets.index as u128;
    let mut main = decide_main_theorem(&cfg.group, t, chi, &cfg.rep, cfg.n, budget)?;
    if cfg.source == GroupSource::Wreath {
        main = main.as_corollary(Justification::WreathCorollary);
    }
    let mut trail = vec![main];
    let stop = trail[0].status.is_definite() || trail[0].witness == Some(Witness::ZeroDimensional);
    if !stop {
        trail.push(decide_subgroup_criterion(
            &cfg.group,
            &cfg.rep,
            row,
            cfg.n,
            cfg.budgets.subgroup,
            budget,
        )?);
    }
    let verdict = trail
        .iter()
        .find(|v| v.status.is_definite())
        .unwrap_or(&trail[0])
        .clone();
    Ok(Decision {
        chi,
        degree: t.degree(chi),
        verdict,
        trail,
    })
}

/// Runs the requested tasks in pipeline order.
pub fn run_job(cfg: &JobConfig) -> Result<Report> {
    let g = &cfg.group;
    let mut report = Report {
        group: GroupInfo {
            label: cfg.label.clone(),
            source: cfg.source,
            order: g.order(),
            a: g.a().factors().to_vec(),
            h: g.h().factors().to_vec(),
        },
        representation: RepInfo {
            kind: cfg.rep.kind(),
            degree: cfg.rep.degree(),
            faithful: cfg.rep.is_faithful(),
        },
        n: cfg.n,
        m: cfg.rep.degree(),
        tasks: cfg.tasks.clone(),
        validation: None,
        character_table: None,
        orbits: None,
        dims: None,
        decisions: None,
        verification: None,
        chartable_csv: None,
    };
    if cfg.tasks.is_empty() {
        return Ok(report);
    }
    let mut table = CharacterTable::compute(g);
    let validation = table.validate(g).clone();
    if !validation.passed() {
        let names: Vec<&str> = validation.failures().iter().map(|c| c.name).collect();
        return Err(Error::Consistency(format!(
            "character table failed validation: {}",
            names.join(", ")
        )));
    }
    report.validation = Some(validation);
    let rows: Vec<Vec<CycloNum>> = (0..table.len()).map(|i| table.row(i)).collect();
    let budget = cfg.budgets.index as u128;
    let wants = |t: Task| cfg.tasks.contains(&t);

    if wants(Task::Chartable) {
        report.character_table = Some(table_report(cfg, &table));
        report.chartable_csv = Some(table.to_csv(g));
    }
    let mut scans: Vec<Option<Vec<OrbitRecord>>> = vec![None; rows.len()];
    if wants(Task::Orbits) || wants(Task::Dims) {
        for (chi, row) in rows.iter().enumerate() {
            let s = TensorSetting::new(g, &cfg.rep, row, cfg.n)?;
            scans[chi] = Some(s.orbit_scan(budget)?);
        }
    }
    if wants(Task::Orbits) {
        report.orbits = Some(
            scans
                .iter()
                .enumerate()
                .map(|(chi, r)| OrbitSection {
                    chi,
                    records: r.clone().expect("scanned above"),
                })
                .collect(),
        );
    }
    if wants(Task::Dims) {
        let mut dims = Vec::new();
        for (chi, row) in rows.iter().enumerate() {
            let s = TensorSetting::new(g, &cfg.rep, row, cfg.n)?;
            let dim = s.dim()?;
            let orbital_sum = delta_bar_total(scans[chi].as_deref().expect("scanned above"));
            let consistent = orbital_sum == BigRational::from_integer(dim.clone());
            if !consistent {
                return Err(Error::Consistency(format!(
                    "character {chi}: dimension formula gives {dim}, orbital sum gives {orbital_sum}"
                )));
            }
            dims.push(DimRow {
                chi,
                degree: table.degree(chi),
                dim,
                orbital_sum,
                consistent,
            });
        }
        report.dims = Some(dims);
    }
    if wants(Task::Decide) || wants(Task::Verify) {
        let decisions = rows
            .iter()
            .enumerate()
            .map(|(chi, row)| decide_one(cfg, &table, chi, row))
            .collect::<Result<Vec<_>>>()?;
        if wants(Task::Verify) {
            let mut out = Vec::new();
            for (chi, row) in rows.iter().enumerate() {
                let brute = brute_force_verify(g, &cfg.rep, row, cfg.n, budget)?;
                let theory = decisions[chi].verdict.status;
                let agrees = (brute.status.is_definite() && theory.is_definite())
                    .then_some(brute.status == theory);
                if agrees == Some(false) {
                    return Err(Error::Consistency(format!(
                        "character {chi}: brute force says {:?}, {:?} says {theory:?}",
                        brute.status, decisions[chi].verdict.justification
                    )));
                }
                out.push(Verification {
                    chi,
                    brute_force: brute,
                    agrees_with_decision: agrees,
                });
            }
            report.verification = Some(out);
        }
        if wants(Task::Decide) {
            report.decisions = Some(decisions);
        }
    }
    Ok(report)
}

/// Runs on a dedicated pool of `threads` workers; output does not depend on the count.
pub fn run_job_with_threads(cfg: &JobConfig, threads: Option<usize>) -> Result<Report> {
    #[cfg(feature = "parallel")]
    if let Some(k) = threads {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(k.max(1))
            .build()
            .map_err(|e| Error::Invalid(format!("threads: {e}")))?;
        return pool.install(|| run_job(cfg));
    }
    #[cfg(not(feature = "parallel"))]
    let _ = threads;
    run_job(cfg)
}
