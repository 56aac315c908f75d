use std::collections::BTreeSet;

use super::semidirect::FiniteGroup;
use crate::error::{Error, Result};

/// Default order bound for subgroup-lattice enumeration.
pub const SUBGROUP_BOUND: usize = 200;

/// A subgroup as its sorted element indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subgroup(Vec<usize>);

impl Subgroup {
    pub fn elements(&self) -> &[usize] {
        &self.0
    }

    pub fn order(&self) -> usize {
        self.0.len()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.0.binary_search(&x).is_ok()
    }

    pub fn index_in(&self, g: &impl FiniteGroup) -> usize {
        g.order() / self.0.len()
    }

    pub fn is_closed(&self, g: &impl FiniteGroup) -> bool {
        self.0
            .iter()
            .all(|&x| self.contains(g.inv(x)) && self.0.iter().all(|&y| self.contains(g.mul(x, y))))
    }
}

/// The subgroup generated by `gens`.
pub fn generated(g: &impl FiniteGroup, gens: &[usize]) -> Subgroup {
    let mut seen = vec![false; g.order()];
    let mut stack = vec![g.identity()];
    seen[g.identity()] = true;
    while let Some(x) = stack.pop() {
        for &s in gens {
            let y = g.mul(x, s);
            if !seen[y] {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    Subgroup((0..g.order()).filter(|&x| seen[x]).collect())
}

/// A small generating set, chosen greedily by increasing element index.
pub fn generating_set(g: &impl FiniteGroup) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut current = generated(g, &gens);
    for x in 0..g.order() {
        if current.order() == g.order() {
            break;
        }
        if !current.contains(x) {
            gens.push(x);
            current = generated(g, &gens);
        }
    }
    gens
}

/// Every subgroup of `g`: cyclic subgroups first, then joins with cyclic subgroups until no
/// new subgroup appears. Refuses groups above `bound` instead of returning a partial lattice.
pub fn enumerate_subgroups(g: &impl FiniteGroup, bound: usize) -> Result<Vec<Subgroup>> {
    if g.order() > bound {
        return Err(Error::Budget {
            what: "subgroup enumeration (group order)",
            needed: g.order() as u128,
            limit: bound as u128,
        });
    }
    let cyclic: BTreeSet<Subgroup> = (0..g.order()).map(|x| generated(g, &[x])).collect();
    // one generator per cyclic subgroup
    let cyclic_gens: Vec<usize> = cyclic
        .iter()
        .map(|c| {
            *c.elements()
                .iter()
                .find(|&&x| generated(g, &[x]).order() == c.order())
                .expect("cyclic subgroup has a generator")
        })
        .collect();

    let mut all: BTreeSet<Subgroup> = cyclic.clone();
    let mut frontier: Vec<Subgroup> = cyclic.into_iter().collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for s in &frontier {
            for &c in &cyclic_gens {
                if s.contains(c) {
                    continue;
                }
                let mut gens = s.elements().to_vec();
                gens.push(c);
                let j = generated(g, &gens);
                if !all.contains(&j) {
                    all.insert(j.clone());
                    next.push(j);
                }
            }
        }
        frontier = next;
    }
    let mut out: Vec<Subgroup> = all.into_iter().collect();
    out.sort_by(|x, y| x.order().cmp(&y.order()).then_with(|| x.cmp(y)));
    debug_assert!(out.iter().all(|s| s.is_closed(g)));
    Ok(out)
}

/// Conjugacy classes, each sorted, listed by smallest member.
pub fn conjugacy_classes(g: &impl FiniteGroup) -> Vec<Vec<usize>> {
    let mut class_of = vec![usize::MAX; g.order()];
    let mut classes = Vec::new();
    for x in 0..g.order() {
        if class_of[x] != usize::MAX {
            continue;
        }
        let members: BTreeSet<usize> = (0..g.order()).map(|k| g.conjugate(x, k)).collect();
        for &y in &members {
            class_of[y] = classes.len();
        }
        classes.push(members.into_iter().collect());
    }
    classes
}
