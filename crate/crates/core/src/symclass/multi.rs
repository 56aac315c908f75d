use serde::{Serialize, Serializer};

use crate::error::{invalid, Error, Result};
use crate::groups::PermRep;

/// α = (α_1, …, α_m) ∈ Γ_{m,n}, entries 1-based.
///
/// The mixed-radix code puts α_1 in the most significant digit, so numeric order of codes is
/// lexicographic order of sequences.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiIndex {
    entries: Vec<u32>,
    n: u32,
}

impl MultiIndex {
    pub fn new(entries: Vec<u32>, n: u32) -> Result<Self> {
        if n == 0 {
            return invalid("alphabet size n must be at least 1");
        }
        if let Some(bad) = entries.iter().find(|&&e| e == 0 || e > n) {
            return invalid(format!("entry {bad} outside 1..={n}"));
        }
        Ok(MultiIndex { entries, n })
    }

    pub fn constant(m: usize, n: u32) -> Self {
        MultiIndex {
            entries: vec![1; m],
            n,
        }
    }

    pub fn decode(mut code: u64, m: usize, n: u32) -> Self {
        let mut entries = vec![0; m];
        for e in entries.iter_mut().rev() {
            *e = (code % n as u64) as u32 + 1;
            code /= n as u64;
        }
        MultiIndex { entries, n }
    }

    pub fn encode(&self) -> u64 {
        self.entries
            .iter()
            .fold(0u64, |acc, &e| acc * self.n as u64 + (e - 1) as u64)
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn m(&self) -> usize {
        self.entries.len()
    }

    pub fn n(&self) -> u32 {
        self.n
    }
}

impl std::fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl Serialize for MultiIndex {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.entries.serialize(s)
    }
}

/// |Γ_{m,n}| = n^m, refused above `budget`.
pub fn index_count(m: usize, n: u32, budget: u128) -> Result<u64> {
    let needed = (n as u128).checked_pow(m as u32).unwrap_or(u128::MAX);
    if needed > budget {
        return Err(Error::Budget {
            what: "multi-indices n^m",
            needed,
            limit: budget,
        });
    }
    Ok(needed as u64)
}

/// ασ with (ασ)_i = α_{σ⁻¹(i)}, σ = π(g).
pub fn act(alpha: &MultiIndex, g: usize, rep: &PermRep) -> Result<MultiIndex> {
    if rep.degree() != alpha.m() {
        return invalid(format!(
            "representation degree {} does not match index length {}",
            rep.degree(),
            alpha.m()
        ));
    }
    Ok(act_unchecked(alpha, g, rep))
}

pub(crate) fn act_unchecked(alpha: &MultiIndex, g: usize, rep: &PermRep) -> MultiIndex {
    let sigma = rep.image(g);
    let mut entries = vec![0; alpha.m()];
    for (j, &a) in alpha.entries.iter().enumerate() {
        entries[sigma.apply(j)] = a;
    }
    MultiIndex {
        entries,
        n: alpha.n,
    }
}

/// Number of cycles of π(g), fixed points included.
pub fn cycle_count(g: usize, rep: &PermRep) -> usize {
    rep.image(g).cycle_count()
}
