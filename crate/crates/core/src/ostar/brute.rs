use num_traits::ToPrimitive;

use super::theorems::zero_dimension_check;
use super::verdict::{Justification, OrbitClique, Status, Verdict, Witness};
use crate::cyclotomic::CycloNum;
use crate::error::{Error, Result};
use crate::groups::{FiniteGroup, PermRep};
use crate::par;
use crate::symclass::{OrbitRecord, TensorSetting};

/// Largest clique found, stopping early once one of size `target` exists.
///
/// Vertices are tried in order of decreasing degree (ties by index); the search is exhaustive
/// below `target`, so a shorter result proves no clique of size `target` exists.
pub fn max_clique(adj: &[Vec<bool>], target: usize) -> Vec<usize> {
    let k = adj.len();
    let mut order: Vec<usize> = (0..k).collect();
    let degree = |v: usize| adj[v].iter().filter(|&&e| e).count();
    order.sort_by_key(|&v| (std::cmp::Reverse(degree(v)), v));
    let mut best = Vec::new();
    let mut current = Vec::new();
    extend(adj, &order, &mut current, &mut best, target);
    best.sort_unstable();
    best
}

fn extend(
    adj: &[Vec<bool>],
    candidates: &[usize],
    current: &mut Vec<usize>,
    best: &mut Vec<usize>,
    target: usize,
) -> bool {
    if current.len() > best.len() {
        *best = current.clone();
        if best.len() >= target {
            return true;
        }
    }
    for (i, &v) in candidates.iter().enumerate() {
        if current.len() + candidates.len() - i <= best.len() {
            break;
        }
        let next: Vec<usize> = candidates[i + 1..]
            .iter()
            .copied()
            .filter(|&u| adj[v][u])
            .collect();
        current.push(v);
        let done = extend(adj, &next, current, best, target);
        current.pop();
        if done {
            return true;
        }
    }
    false
}

fn orbit_clique<G: FiniteGroup + Sync>(
    s: &TensorSetting<'_, G>,
    r: &OrbitRecord,
) -> Result<(OrbitClique, usize)> {
    let need = r
        .s_alpha
        .to_integer()
        .to_u64()
        .filter(|_| r.s_alpha.is_integer())
        .ok_or_else(|| {
            Error::Consistency(format!(
                "s_α = {} at {} is not an integer",
                r.s_alpha, r.rep
            ))
        })?;
    if need == 1 {
        // any single e*_{ασ} is nonzero on Δ̄
        return Ok((
            OrbitClique {
                rep: r.rep.clone(),
                s_alpha: 1,
                clique: Some(vec![s.group.identity()]),
            },
            1,
        ));
    }
    let gram = s.gram(&r.rep)?;
    let adj: Vec<Vec<bool>> = gram
        .entries
        .iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(|(j, v): (usize, &CycloNum)| i != j && v.is_zero())
                .collect()
        })
        .collect();
    let best = max_clique(&adj, need as usize);
    let size = best.len();
    let clique = (size as u64 >= need).then(|| best.iter().map(|&i| gram.coset_reps[i]).collect());
    Ok((
        OrbitClique {
            rep: r.rep.clone(),
            s_alpha: need,
            clique,
        },
        size,
    ))
}

/// Decides the definition directly: every orbital subspace V*_α, α ∈ Δ̄, must contain s_α
/// pairwise orthogonal vectors among {e*_{ασ}}. Uses no theorem.
pub fn brute_force_verify(
    g: &(impl FiniteGroup + Sync),
    rep: &PermRep,
    chi: &[CycloNum],
    n: u32,
    budget: u128,
) -> Result<Verdict> {
    let setting = TensorSetting::new(g, rep, chi, n)?;
    let records = match setting.orbit_scan(budget) {
        Ok(r) => r,
        Err(e @ Error::Budget { .. }) => {
            return Ok(Verdict::inconclusive(
                Justification::BruteForce,
                Witness::Diagnostic {
                    message: e.to_string(),
                },
            ))
        }
        Err(e) => return Err(e),
    };
    if let Some(v) = zero_dimension_check(&setting, Justification::BruteForce)? {
        return Ok(v);
    }
    let delta: Vec<&OrbitRecord> = records.iter().filter(|r| r.in_delta_bar).collect();
    let results = par::map(&delta, |r| orbit_clique(&setting, r))
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    let failed = results
        .iter()
        .find(|(c, _)| c.clique.is_none())
        .map(|(c, size)| Witness::FailedOrbit {
            rep: c.rep.clone(),
            s_alpha: c.s_alpha,
            max_clique: *size,
        });
    let per_orbit = results.into_iter().map(|(c, _)| c).collect();
    Ok(Verdict {
        status: if failed.is_some() {
            Status::NotAdmits
        } else {
            Status::Admits
        },
        justification: Justification::BruteForce,
        witness: failed,
        per_orbit,
    })
}
