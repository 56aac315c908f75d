use serde::Serialize;

use crate::symclass::MultiIndex;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Status {
    Admits,
    NotAdmits,
    Inconclusive,
}

impl Status {
    pub fn is_definite(self) -> bool {
        self != Status::Inconclusive
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Justification {
    LinearCharacter,
    MainTheorem,
    WreathCorollary,
    NamedFamilyCorollary,
    SubgroupCriterion,
    BruteForce,
}

/// Outcome of the search for α with G_α = {e}.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum AlphaSearch {
    Found {
        alpha: MultiIndex,
    },
    /// Every index was checked, or the representation has a kernel.
    ProvenNone {
        reason: String,
    },
    /// n^m exceeds the budget and no shortcut applies; nothing is claimed.
    BudgetExhausted {
        needed: u128,
        limit: u128,
    },
}

impl AlphaSearch {
    pub fn alpha(&self) -> Option<&MultiIndex> {
        match self {
            AlphaSearch::Found { alpha } => Some(alpha),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// Both hypotheses of the main theorem: α with trivial stabilizer, and
    /// |H| ∉ N₀⟨Prime(|A|)⟩.
    TrivialStabilizer {
        alpha: MultiIndex,
        h_order: u64,
        primes: Vec<u64>,
        h_order_in_semigroup: bool,
    },
    AlphaSearch {
        search: AlphaSearch,
    },
    SemigroupMember {
        h_order: u64,
        primes: Vec<u64>,
    },
    Subgroup {
        alpha: MultiIndex,
        elements: Vec<usize>,
        order: usize,
        index: usize,
        degree_squared: u64,
    },
    NoSubgroup {
        subgroups_checked: usize,
        degree_squared: u64,
    },
    /// The first orbit (by representative) without s_α pairwise orthogonal e*_{ασ}.
    FailedOrbit {
        rep: MultiIndex,
        s_alpha: u64,
        max_clique: usize,
    },
    ZeroDimensional,
    Diagnostic {
        message: String,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitClique {
    pub rep: MultiIndex,
    pub s_alpha: u64,
    /// Coset representatives σ with {e*_{ασ}} pairwise orthogonal, or null when none of
    /// size s_α exists.
    pub clique: Option<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Verdict {
    pub status: Status,
    pub justification: Justification,
    pub witness: Option<Witness>,
    pub per_orbit: Vec<OrbitClique>,
}

impl Verdict {
    pub(crate) fn new(status: Status, justification: Justification, witness: Witness) -> Self {
        Verdict {
            status,
            justification,
            witness: Some(witness),
            per_orbit: Vec::new(),
        }
    }

    pub(crate) fn linear() -> Self {
        Verdict {
            status: Status::Admits,
            justification: Justification::LinearCharacter,
            witness: None,
            per_orbit: Vec::new(),
        }
    }

    pub(crate) fn inconclusive(justification: Justification, witness: Witness) -> Self {
        Self::new(Status::Inconclusive, justification, witness)
    }

    /// Re-labels a main-theorem verdict as one of its corollaries; other verdicts pass through.
    pub fn as_corollary(mut self, j: Justification) -> Self {
        if self.justification == Justification::MainTheorem {
            self.justification = j;
        }
        self
    }
}
