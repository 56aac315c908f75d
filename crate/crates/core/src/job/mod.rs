//! Batch jobs: a JSON description of a group, a representation and a task list in, a
//! deterministic JSON (or CSV) report out.

mod config;
mod run;

pub use config::{
    parse_config, Budgets, ExplicitRep, FamilySpec, Format, GroupSource, JobConfig, Output,
    RepConfig, Task, WreathAction, WreathConfig,
};
pub use run::{
    run_job, run_job_with_threads, CharacterRow, ClassInfo, Decision, DimRow, GroupInfo,
    OrbitSection, RepInfo, Report, TableReport, Verification,
};
