use super::verdict::AlphaSearch;
use crate::groups::{FiniteGroup, PermRep, RepKind};
use crate::symclass::{index_count, MultiIndex};
use crate::Error;

fn trivially_stabilized(alpha: &MultiIndex, rep: &PermRep, id: usize) -> bool {
    (0..rep.group_order()).filter(|&g| g != id).all(|g| {
        let p = rep.image(g);
        (0..alpha.m()).any(|j| alpha.entries()[p.apply(j)] != alpha.entries()[j])
    })
}

/// The lex-min α ∈ Γ_{m,n} with G_α = {e}, or why there is none.
pub fn find_trivial_stabilizer_alpha(
    g: &impl FiniteGroup,
    rep: &PermRep,
    n: u32,
    budget: u128,
) -> AlphaSearch {
    let m = rep.degree();
    if g.order() == 1 {
        return AlphaSearch::Found {
            alpha: MultiIndex::constant(m, n),
        };
    }
    if !rep.is_faithful() {
        return AlphaSearch::ProvenNone {
            reason: "the representation has a nontrivial kernel, which fixes every index".into(),
        };
    }
    if n == 1 {
        return AlphaSearch::ProvenNone {
            reason: "with n = 1 the only index is constant".into(),
        };
    }
    if rep.kind() == RepKind::Regular {
        // one distinguished point x: only g with x·g = x fixes it
        let mut entries = vec![1; m];
        entries[m - 1] = 2;
        return AlphaSearch::Found {
            alpha: MultiIndex::new(entries, n).expect("entries within 1..=n"),
        };
    }
    let total = match index_count(m, n, budget) {
        Ok(t) => t,
        Err(Error::Budget { needed, limit, .. }) => {
            return AlphaSearch::BudgetExhausted { needed, limit }
        }
        Err(e) => unreachable!("index_count only refuses on budget: {e}"),
    };
    (0..total)
        .map(|code| MultiIndex::decode(code, m, n))
        .find(|a| trivially_stabilized(a, rep, g.identity()))
        .map_or_else(
            || AlphaSearch::ProvenNone {
                reason: format!("all {total} indices of Γ_{{{m},{n}}} have nontrivial stabilizer"),
            },
            |alpha| AlphaSearch::Found { alpha },
        )
}
