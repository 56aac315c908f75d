use num_integer::Integer;
use num_rational::BigRational;
use serde::Serialize;

use super::dual::{dual_group, dual_orbits, DualChar, DualOrbit};
use crate::cyclotomic::CycloNum;
use crate::groups::{conjugacy_classes, FiniteGroup, GElem, SemidirectGroup};

/// χ_{([x],U)}: the character induced from the stabilizer H_x, with U a linear character of H_x.
#[derive(Debug, Clone, Serialize)]
pub struct IrredChar {
    pub orbit: DualOrbit,
    /// The character x of A used to evaluate the formula; any member of `orbit`.
    pub x: DualChar,
    /// U, given by the lex-min character of H whose restriction to H_x is U.
    pub u: DualChar,
    pub degree: u32,
}

/// Conductor holding every character value of A ⋊ H.
pub fn value_conductor(g: &SemidirectGroup) -> u32 {
    g.a().exponent().lcm(&g.h().exponent())
}

impl IrredChar {
    /// The same character computed from another member of its dual orbit.
    pub fn with_representative(&self, x: DualChar) -> IrredChar {
        assert!(self.orbit.members.contains(&x), "not a member of the orbit");
        IrredChar { x, ..self.clone() }
    }

    pub fn in_stabilizer(&self, h: usize) -> bool {
        self.orbit.stabilizer.binary_search(&h).is_ok()
    }

    pub fn label(&self) -> String {
        format!("x={:?} u={:?}", self.x.exponents(), self.u.exponents())
    }
}

/// χ(a, g) = (χ_U(g)/|H_x|)·Σ_{h∈H} x(φ_h(a)) for g ∈ H_x, and 0 otherwise.
pub fn char_value(chi: &IrredChar, g: &SemidirectGroup, e: GElem) -> CycloNum {
    let n = value_conductor(g);
    if !chi.in_stabilizer(e.h) {
        return CycloNum::zero(n);
    }
    let (a, h) = (g.a(), g.h());
    let step_a = (n / a.exponent()) as usize;
    let mut counts = vec![0i64; n as usize];
    for k in 0..h.order() {
        counts[chi.x.phase(a, g.act(k, e.a)) as usize * step_a] += 1;
    }
    let orbit_sum = CycloNum::from_power_counts(n, &counts).expect("valid conductor");
    let step_h = (n / h.exponent()) as i64;
    let u =
        CycloNum::root_of_unity(n, chi.u.phase(h, e.h) as i64 * step_h).expect("valid conductor");
    let scale = BigRational::new(1.into(), (chi.orbit.stabilizer.len() as i64).into());
    (orbit_sum * u).scale(&scale)
}

/// The Mackey-type sum (1/|H_x|)·Σ_{h: hgh⁻¹∈H_x} x(φ_h(a))·χ_U(hgh⁻¹), evaluated literally
/// with conjugation carried out in H.
pub fn mackey_value(chi: &IrredChar, g: &SemidirectGroup, e: GElem) -> CycloNum {
    let n = value_conductor(g);
    let h = g.h();
    let mut total = CycloNum::zero(n);
    for k in 0..h.order() {
        let conj = h.add(h.add(k, e.h), h.neg(k));
        if !chi.in_stabilizer(conj) {
            continue;
        }
        let xv = chi.x.value(g.a(), g.act(k, e.a));
        let uv = chi.u.value(h, conj);
        total = total + xv * uv;
    }
    total.scale(&BigRational::new(
        1.into(),
        (chi.orbit.stabilizer.len() as i64).into(),
    ))
}

/// Every χ_{([x_i],U)}: one per dual orbit and linear character U of its stabilizer.
pub fn irred_chars(g: &SemidirectGroup) -> Vec<IrredChar> {
    let h = g.h();
    let h_dual = dual_group(h);
    let mut out = Vec::new();
    for orbit in dual_orbits(g.a(), h, g.phi()) {
        // distinct restrictions of H^∨ to H_x are exactly the linear characters of H_x
        let mut seen = std::collections::BTreeSet::new();
        for u in &h_dual {
            let signature: Vec<u32> = orbit.stabilizer.iter().map(|&k| u.phase(h, k)).collect();
            if seen.insert(signature) {
                out.push(IrredChar {
                    x: orbit.representative.clone(),
                    u: u.clone(),
                    degree: (h.order() / orbit.stabilizer.len()) as u32,
                    orbit: orbit.clone(),
                });
            }
        }
        debug_assert_eq!(seen.len(), orbit.stabilizer.len());
    }
    out
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct ValidationReport {
    pub checks: Vec<Check>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.passed).collect()
    }
}

/// Exact completeness and orthogonality checks on rows of element-wise character values.
pub fn validate_table(g: &impl FiniteGroup, rows: &[Vec<CycloNum>]) -> ValidationReport {
    let order = g.order();
    let mut checks = Vec::new();

    let classes = conjugacy_classes(g).len();
    checks.push(Check {
        name: "class_count",
        passed: rows.len() == classes,
        detail: format!("{} characters, {classes} conjugacy classes", rows.len()),
    });

    let degree_sum = rows
        .iter()
        .fold(CycloNum::zero(1), |acc, r| acc + &r[0] * &r[0]);
    checks.push(Check {
        name: "degree_sum",
        passed: degree_sum == CycloNum::from_integer(1, order as i64),
        detail: format!("sum of squared degrees = {degree_sum}, |G| = {order}"),
    });

    let conj: Vec<Vec<CycloNum>> = rows
        .iter()
        .map(|r| r.iter().map(CycloNum::conj).collect())
        .collect();
    let mut bad_pairs = Vec::new();
    for i in 0..rows.len() {
        for j in i..rows.len() {
            let s = rows[i]
                .iter()
                .zip(&conj[j])
                .fold(CycloNum::zero(1), |acc, (x, y)| acc + x * y);
            let expect = if i == j { order as i64 } else { 0 };
            if s != CycloNum::from_integer(1, expect) {
                bad_pairs.push((i, j));
            }
        }
    }
    checks.push(Check {
        name: "first_orthogonality",
        passed: bad_pairs.is_empty(),
        detail: if bad_pairs.is_empty() {
            "all pairs orthonormal".into()
        } else {
            format!("failing pairs {bad_pairs:?}")
        },
    });

    let bad_inv = (0..rows.len())
        .filter(|&i| (0..order).any(|x| rows[i][g.inv(x)] != conj[i][x]))
        .count();
    checks.push(Check {
        name: "inverse_conjugate",
        passed: bad_inv == 0,
        detail: format!("{bad_inv} characters with χ(g⁻¹) ≠ conj χ(g)"),
    });

    ValidationReport { checks }
}

/// {g : χ(g) = 0} from an element-wise row.
pub fn zero_set(row: &[CycloNum]) -> Vec<usize> {
    (0..row.len()).filter(|&x| row[x].is_zero()).collect()
}

/// The irreducible characters of a group together with their values, memoized per
/// conjugacy class.
#[derive(Debug, Clone)]
pub struct CharacterTable {
    conductor: u32,
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
    chars: Vec<IrredChar>,
    values: Vec<Vec<CycloNum>>,
    validation: Option<ValidationReport>,
}

impl CharacterTable {
    pub fn compute(g: &SemidirectGroup) -> Self {
        let classes = conjugacy_classes(g);
        let mut class_of = vec![0; g.order()];
        for (c, members) in classes.iter().enumerate() {
            for &x in members {
                class_of[x] = c;
            }
        }
        let chars = irred_chars(g);
        let values = chars
            .iter()
            .map(|chi| {
                classes
                    .iter()
                    .map(|cl| char_value(chi, g, g.elem(cl[0])))
                    .collect()
            })
            .collect();
        CharacterTable {
            conductor: value_conductor(g),
            classes,
            class_of,
            chars,
            values,
            validation: None,
        }
    }

    /// Runs [`validate_table`] and remembers the outcome.
    pub fn validate(&mut self, g: &SemidirectGroup) -> &ValidationReport {
        let rows: Vec<Vec<CycloNum>> = (0..self.chars.len()).map(|i| self.row(i)).collect();
        self.validation = Some(validate_table(g, &rows));
        self.validation.as_ref().expect("just set")
    }

    pub fn validation(&self) -> Option<&ValidationReport> {
        self.validation.as_ref()
    }

    /// True only after a validation run in which every check passed.
    pub fn is_validated(&self) -> bool {
        self.validation
            .as_ref()
            .is_some_and(ValidationReport::passed)
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn len(&self) -> usize {
        self.chars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chars.is_empty()
    }

    pub fn chars(&self) -> &[IrredChar] {
        &self.chars
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class_of(&self, g: usize) -> usize {
        self.class_of[g]
    }

    pub fn class_values(&self, chi: usize) -> &[CycloNum] {
        &self.values[chi]
    }

    pub fn value(&self, chi: usize, g: usize) -> &CycloNum {
        &self.values[chi][self.class_of[g]]
    }

    /// Values on every element, indexed by element.
    pub fn row(&self, chi: usize) -> Vec<CycloNum> {
        self.class_of
            .iter()
            .map(|&c| self.values[chi][c].clone())
            .collect()
    }

    pub fn degree(&self, chi: usize) -> u32 {
        self.chars[chi].degree
    }

    pub fn is_linear(&self, chi: usize) -> bool {
        self.chars[chi].degree == 1
    }

    pub fn zero_set(&self, chi: usize) -> Vec<usize> {
        zero_set(&self.row(chi))
    }

    /// Rows are characters, columns are conjugacy classes by smallest member; each cell
    /// carries the exact value (JSON) and a float approximation.
    pub fn to_csv(&self, g: &SemidirectGroup) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        let mut header = vec![
            "character".to_string(),
            "degree".to_string(),
            "dual_orbit_rep".to_string(),
            "u".to_string(),
        ];
        for cl in &self.classes {
            let (a, h) = g.coords(cl[0]);
            let name = format!("{a:?}|{h:?}").replace(' ', "");
            header.push(format!("{name} exact"));
            header.push(format!("{name} approx"));
        }
        w.write_record(&header).expect("in-memory csv");
        for (i, chi) in self.chars.iter().enumerate() {
            let mut rec = vec![
                i.to_string(),
                chi.degree.to_string(),
                format!("{:?}", chi.orbit.representative.exponents()).replace(' ', ""),
                format!("{:?}", chi.u.exponents()).replace(' ', ""),
            ];
            for v in &self.values[i] {
                rec.push(serde_json::to_string(v).expect("serializable"));
                rec.push(format_approx(v));
            }
            w.write_record(&rec).expect("in-memory csv");
        }
        String::from_utf8(w.into_inner().expect("flush")).expect("utf8")
    }
}

pub(crate) fn format_approx(v: &CycloNum) -> String {
    let c = v.to_complex();
    let re = if c.re.abs() < 5e-13 { 0.0 } else { c.re };
    let im = if c.im.abs() < 5e-13 { 0.0 } else { c.im };
    if im == 0.0 {
        format!("{re:.6}")
    } else {
        format!("{re:.6}{im:+.6}i")
    }
}
