use ostar_core::characters::CharacterTable;
use ostar_core::groups::{build_wreath, AbelianGroup, FiniteGroup, WreathSpec};
use ostar_core::job::{parse_config, run_job, Format, Task};
use ostar_core::ostar::{decide_main_theorem, Justification, Status};
use ostar_core::symclass::{TensorSetting, INDEX_BUDGET};
use ostar_core::Error;
use serde_json::Value;

fn report(text: &str) -> Value {
    let cfg = parse_config(text).unwrap();
    serde_json::from_str(&run_job(&cfg).unwrap().to_json()).unwrap()
}

#[test]
fn dims_sum_to_the_full_tensor_power() {
    // the symmetry classes decompose V^⊗m, so Σ_χ dim V_χ = n^m = 3^5
    let v = report(r#"{"family":{"dihedral":{"s":5}},"n":3,"tasks":["dims"]}"#);
    let total: i64 = v["dims"]
        .as_array()
        .unwrap()
        .iter()
        .map(|d| {
            assert_eq!(d["consistent"], true);
            d["dim"].as_i64().unwrap()
        })
        .sum();
    assert_eq!(total, 243);
}

#[test]
fn wreath_job_uses_the_corollary_label() {
    let v = report(
        r#"{"wreath":{"A":[3],"H":[2],"omega":2,"action":"regular"},"rep":"natural","n":3,"tasks":["decide"]}"#,
    );
    assert_eq!(v["group"]["order"], 18);
    for d in v["decisions"].as_array().unwrap() {
        let j = d["verdict"]["justification"].as_str().unwrap();
        if d["degree"] == 1 {
            assert_eq!(j, "LinearCharacter");
        } else {
            assert_eq!(d["verdict"]["status"], "NotAdmits");
            assert_eq!(j, "WreathCorollary");
        }
    }
}

#[test]
fn library_and_job_agree() {
    let b = build_wreath(&WreathSpec::regular(
        AbelianGroup::cyclic(3).unwrap(),
        AbelianGroup::cyclic(2).unwrap(),
    ))
    .unwrap();
    let mut t = CharacterTable::compute(&b.group);
    assert!(t.validate(&b.group).passed());
    let rep = b.natural.as_ref().unwrap();
    for chi in 0..t.len() {
        let v = decide_main_theorem(&b.group, &t, chi, rep, 3, INDEX_BUDGET).unwrap();
        let expect = if t.is_linear(chi) {
            Status::Admits
        } else {
            Status::NotAdmits
        };
        assert_eq!(v.status, expect);
        if !t.is_linear(chi) {
            assert_eq!(v.justification, Justification::MainTheorem);
        }
        let row = t.row(chi);
        let s = TensorSetting::new(&b.group, rep, &row, 3).unwrap();
        assert_eq!(s.m(), rep.degree());
    }
    assert_eq!(b.group.order(), 18);
}

#[test]
fn csv_outputs() {
    let cfg = parse_config(r#"{"family":{"pq":{"p":3,"q":7,"r":2}},"n":2,"tasks":["chartable"]}"#)
        .unwrap();
    let csv = run_job(&cfg).unwrap().render(Format::Csv).unwrap();
    assert_eq!(csv.lines().count(), 6);
    let cfg = parse_config(
        r#"{"family":{"dihedral":{"s":3}},"n":2,"tasks":["orbits"],"output":{"format":"csv"}}"#,
    )
    .unwrap();
    assert_eq!(cfg.tasks, vec![Task::Orbits]);
    let csv = run_job(&cfg).unwrap().render(cfg.output.format).unwrap();
    assert!(csv.lines().next().unwrap().contains("s_alpha"));
}

#[test]
fn error_kinds_map_to_exit_codes() {
    let e = parse_config(r#"{"family":{"dihedral":{"s":3}},"n":0}"#).unwrap_err();
    assert!(matches!(e, Error::Invalid(_)));
    assert_eq!(e.exit_code(), 2);
    let mut cfg =
        parse_config(r#"{"family":{"dihedral":{"s":4}},"n":4,"tasks":["orbits"]}"#).unwrap();
    cfg.budgets.index = 10;
    let e = run_job(&cfg).unwrap_err();
    assert_eq!(e.exit_code(), 3);
}
