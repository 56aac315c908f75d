//! Deciding whether V_χ(G) has an orthogonal basis of decomposable symmetrized tensors.
//!
//! Theorem-based deciders only ever return NotAdmits or Inconclusive for nonlinear χ; a
//! positive answer comes from linearity or from the exhaustive clique search.

mod brute;
mod search;
mod theorems;
mod verdict;

pub use brute::{brute_force_verify, max_clique};
pub use search::find_trivial_stabilizer_alpha;
pub use theorems::{
    decide_main_theorem, decide_named_family, decide_subgroup_criterion, NamedFamily,
};
pub use verdict::{AlphaSearch, Justification, OrbitClique, Status, Verdict, Witness};
