use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use super::search::find_trivial_stabilizer_alpha;
use super::verdict::{Justification, Status, Verdict, Witness};
use crate::characters::{zero_set, CharacterTable};
use crate::cyclotomic::{in_prime_semigroup, prime_factors, CycloNum};
use crate::error::{invalid, Error, Result};
use crate::groups::{
    dihedral, enumerate_subgroups, group_pq, z_group, FiniteGroup, PermRep, RepKind,
    SemidirectGroup,
};
use crate::symclass::TensorSetting;

/// χ(e) as a positive integer.
pub(crate) fn char_degree(chi: &[CycloNum], id: usize) -> Result<u64> {
    chi[id]
        .to_integer()
        .and_then(|d| d.to_u64())
        .filter(|d| *d > 0)
        .ok_or_else(|| Error::Consistency(format!("χ(e) = {} is not a positive integer", chi[id])))
}

/// A verdict when V_χ(G) = 0 for this n, before any theorem is consulted.
pub(crate) fn zero_dimension_check<G: FiniteGroup + Sync>(
    s: &TensorSetting<'_, G>,
    j: Justification,
) -> Result<Option<Verdict>> {
    Ok(s.dim()?
        .is_zero()
        .then(|| Verdict::inconclusive(j, Witness::ZeroDimensional)))
}

/// Main theorem for A ⋊ H: given α with G_α = {e} and |H| ∉ N₀⟨Prime(|A|)⟩, V_χ(G) has an
/// o*-basis exactly when χ is linear.
pub fn decide_main_theorem(
    g: &SemidirectGroup,
    table: &CharacterTable,
    chi: usize,
    rep: &PermRep,
    n: u32,
    budget: u128,
) -> Result<Verdict> {
    if !table.is_validated() {
        return invalid("character table has not passed validation");
    }
    let row = table.row(chi);
    let setting = TensorSetting::new(g, rep, &row, n)?;
    if let Some(v) = zero_dimension_check(&setting, Justification::MainTheorem)? {
        return Ok(v);
    }
    if table.is_linear(chi) {
        return Ok(Verdict::linear());
    }
    let search = find_trivial_stabilizer_alpha(g, rep, n, budget);
    let Some(alpha) = search.alpha().cloned() else {
        return Ok(Verdict::inconclusive(
            Justification::MainTheorem,
            Witness::AlphaSearch { search },
        ));
    };
    let h_order = g.h().order() as u64;
    let primes = prime_factors(g.a().order() as u64);
    if in_prime_semigroup(h_order, &primes) {
        return Ok(Verdict::inconclusive(
            Justification::MainTheorem,
            Witness::SemigroupMember { h_order, primes },
        ));
    }
    // the proof's count: s_α = χ(e)² on a regular orbit
    let record = setting.record_for(&alpha)?;
    let deg = table.degree(chi) as i64;
    if record.s_alpha != BigRational::from_integer(BigInt::from(deg * deg)) {
        return Err(Error::Consistency(format!(
            "s_α = {} at {alpha}, expected χ(e)² = {}",
            record.s_alpha,
            deg * deg
        )));
    }
    Ok(Verdict::new(
        Status::NotAdmits,
        Justification::MainTheorem,
        Witness::TrivialStabilizer {
            alpha,
            h_order,
            primes,
            h_order_in_semigroup: false,
        },
    ))
}

/// The corollary families, each rebuilt and re-checked before the main theorem is applied.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Deserialize, serde::Serialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum NamedFamily {
    DihedralOdd { s: u32 },
    Pq { p: u32, q: u32, r: u32 },
    ZGroup { s: u32, t: u32, r: u32 },
}

/// Builds the family member, validates its table, and decides character `chi` under the
/// natural or regular representation.
pub fn decide_named_family(
    family: NamedFamily,
    rep_kind: RepKind,
    chi: usize,
    n: u32,
    budget: u128,
) -> Result<Verdict> {
    let built = match family {
        NamedFamily::DihedralOdd { s } if s % 2 == 0 => {
            return invalid(format!("dihedral_odd needs odd s, got {s}"))
        }
        NamedFamily::DihedralOdd { s } => dihedral(s)?,
        NamedFamily::Pq { p, q, r } => group_pq(p, q, r)?,
        NamedFamily::ZGroup { s, t, r } => {
            if prime_factors((s * t) as u64).len() != 2 {
                return invalid(format!(
                    "|G| = {} does not have exactly two prime factors",
                    s * t
                ));
            }
            z_group(s, t, r)?
        }
    };
    let g = &built.group;
    let rep = match rep_kind {
        RepKind::Natural => built.natural.clone().ok_or_else(|| {
            Error::Invalid(format!(
                "{} has no faithful natural representation",
                built.label
            ))
        })?,
        RepKind::Regular => crate::groups::regular_rep(g),
        RepKind::Explicit => {
            return invalid("named families use the natural or regular representation")
        }
    };
    let mut table = CharacterTable::compute(g);
    if !table.validate(g).passed() {
        return Err(Error::Consistency(format!(
            "character table of {} failed validation",
            built.label
        )));
    }
    if chi >= table.len() {
        return invalid(format!(
            "character index {chi} out of range (table has {})",
            table.len()
        ));
    }
    let v = decide_main_theorem(g, &table, chi, &rep, n, budget)?;
    if v.status == Status::Inconclusive {
        // name the hypothesis that failed
        let message = match &v.witness {
            Some(Witness::AlphaSearch { .. }) => format!(
                "hypothesis failed for {}: no α in Γ_{{{},{n}}} with trivial stabilizer",
                built.label,
                rep.degree()
            ),
            Some(Witness::SemigroupMember { h_order, primes }) => format!(
                "hypothesis failed for {}: |H| = {h_order} lies in the semigroup generated by {primes:?}",
                built.label
            ),
            Some(Witness::ZeroDimensional) => format!("V_χ is zero for {} with n = {n}", built.label),
            _ => "inconclusive".into(),
        };
        let mut out = v.as_corollary(Justification::NamedFamilyCorollary);
        out.witness = Some(Witness::Diagnostic { message });
        return Ok(out);
    }
    Ok(v.as_corollary(Justification::NamedFamilyCorollary))
}

/// A subgroup K ⊆ G ∖ Z_χ with [G:K] < χ(e)², together with α of trivial stabilizer, rules out
/// an o*-basis. Works from a character row on any finite group.
pub fn decide_subgroup_criterion(
    g: &(impl FiniteGroup + Sync),
    rep: &PermRep,
    chi: &[CycloNum],
    n: u32,
    subgroup_bound: usize,
    budget: u128,
) -> Result<Verdict> {
    let setting = TensorSetting::new(g, rep, chi, n)?;
    if let Some(v) = zero_dimension_check(&setting, Justification::SubgroupCriterion)? {
        return Ok(v);
    }
    let deg = char_degree(chi, g.identity())?;
    let degree_squared = deg * deg;
    if deg == 1 {
        return Ok(Verdict::inconclusive(
            Justification::SubgroupCriterion,
            Witness::Diagnostic {
                message: "linear character: no subgroup has index below 1".into(),
            },
        ));
    }
    let search = find_trivial_stabilizer_alpha(g, rep, n, budget);
    let Some(alpha) = search.alpha().cloned() else {
        return Ok(Verdict::inconclusive(
            Justification::SubgroupCriterion,
            Witness::AlphaSearch { search },
        ));
    };
    let subgroups = match enumerate_subgroups(g, subgroup_bound) {
        Ok(s) => s,
        Err(e @ Error::Budget { .. }) => {
            return Ok(Verdict::inconclusive(
                Justification::SubgroupCriterion,
                Witness::Diagnostic {
                    message: e.to_string(),
                },
            ))
        }
        Err(e) => return Err(e),
    };
    let zeros = zero_set(chi);
    let hit = subgroups
        .iter()
        .filter(|k| {
            (k.index_in(g) as u64) < degree_squared
                && k.elements().iter().all(|x| zeros.binary_search(x).is_err())
        })
        .min_by_key(|k| k.index_in(g));
    Ok(match hit {
        Some(k) => Verdict::new(
            Status::NotAdmits,
            Justification::SubgroupCriterion,
            Witness::Subgroup {
                alpha,
                elements: k.elements().to_vec(),
                order: k.order(),
                index: k.index_in(g),
                degree_squared,
            },
        ),
        None => Verdict::inconclusive(
            Justification::SubgroupCriterion,
            Witness::NoSubgroup {
                subgroups_checked: subgroups.len(),
                degree_squared,
            },
        ),
    })
}
