//! Finite abelian groups, semidirect and wreath products, permutation representations and
//! subgroup lattices.

mod abelian;
mod builders;
mod perm;
mod semidirect;
mod subgroups;

pub use abelian::{AbElement, AbelianGroup, ActionHom, Automorphism, MAX_ELEMENTS};
pub use builders::{build_wreath, dihedral, group_pq, z_group, BuiltGroup, WreathSpec};
pub use perm::{regular_rep, Perm, PermRep, RepKind};
pub use semidirect::{FiniteGroup, GElem, SemidirectGroup};
pub use subgroups::{
    conjugacy_classes, enumerate_subgroups, generated, generating_set, Subgroup, SUBGROUP_BOUND,
};
