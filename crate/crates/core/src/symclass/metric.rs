use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use super::linalg::exact_rank;
use super::multi::{act_unchecked, index_count, MultiIndex};
use super::TensorSetting;
use crate::cyclotomic::CycloNum;
use crate::error::{invalid, Result};
use crate::groups::{FiniteGroup, PermRep};

/// Coordinates in the basis {e⊗_β : β ∈ Γ_{m,n}}; absent keys are zero.
pub type SparseTensor = BTreeMap<MultiIndex, CycloNum>;

/// Gram matrix of {e*_{ασ}} over the right cosets G_α σ.
#[derive(Debug, Clone, Serialize)]
pub struct GramMatrix {
    pub alpha: MultiIndex,
    /// Smallest element index in each coset, in increasing order.
    pub coset_reps: Vec<usize>,
    /// entries[i][j] = ⟨e*_{ασ_i}, e*_{ασ_j}⟩.
    pub entries: Vec<Vec<CycloNum>>,
}

impl GramMatrix {
    pub fn size(&self) -> usize {
        self.coset_reps.len()
    }

    pub fn rank(&self) -> usize {
        exact_rank(&self.entries)
    }

    pub fn is_hermitian(&self) -> bool {
        let k = self.size();
        (0..k).all(|i| (0..k).all(|j| self.entries[i][j] == self.entries[j][i].conj()))
    }

    pub fn has_constant_diagonal(&self) -> bool {
        self.entries
            .iter()
            .enumerate()
            .all(|(i, row)| row[i] == self.entries[0][0])
    }
}

/// ⟨u, v⟩ = Σ_β conj(u_β) v_β.
pub fn tensor_inner(u: &SparseTensor, v: &SparseTensor) -> CycloNum {
    u.iter()
        .filter_map(|(b, x)| v.get(b).map(|y| x.conj() * y))
        .fold(CycloNum::zero(1), |acc, t| acc + t)
}

impl<G: FiniteGroup + Sync> TensorSetting<'_, G> {
    fn weight(&self) -> BigRational {
        BigRational::new(1.into(), BigInt::from(self.group.order()))
    }

    /// ⟨e*_α, e*_{ασ}⟩ = χ(e)/|G| · Σ_{h∈G_α} χ(σh), σ = π(g).
    pub fn inner_product(&self, alpha: &MultiIndex, g: usize) -> Result<CycloNum> {
        self.check_index(alpha)?;
        Ok(self.inner_with_stabilizer(&self.stabilizer(alpha), g))
    }

    fn inner_with_stabilizer(&self, stab: &[usize], g: usize) -> CycloNum {
        let sum = stab.iter().fold(CycloNum::zero(1), |acc, &h| {
            acc + &self.chi[self.group.mul(g, h)]
        });
        (sum * &self.chi[self.group.identity()]).scale(&self.weight())
    }

    /// ⟨e*_α, e*_β⟩, zero when β lies in another orbit.
    pub fn inner_product_pair(&self, alpha: &MultiIndex, beta: &MultiIndex) -> Result<CycloNum> {
        self.check_index(alpha)?;
        self.check_index(beta)?;
        Ok(
            match (0..self.group.order()).find(|&g| act_unchecked(alpha, g, self.rep) == *beta) {
                Some(g) => self.inner_product(alpha, g)?,
                None => CycloNum::zero(1),
            },
        )
    }

    /// Right-coset representatives of G_α, one per distinct ασ, smallest element first.
    pub fn coset_reps(&self, alpha: &MultiIndex) -> Vec<usize> {
        let mut seen = std::collections::HashSet::new();
        (0..self.group.order())
            .filter(|&g| seen.insert(act_unchecked(alpha, g, self.rep)))
            .collect()
    }

    /// Full Gram matrix of the orbital subspace; α must lie in Δ̄.
    pub fn gram(&self, alpha: &MultiIndex) -> Result<GramMatrix> {
        self.check_index(alpha)?;
        let stab = self.stabilizer(alpha);
        if self
            .inner_with_stabilizer(&stab, self.group.identity())
            .is_zero()
        {
            return invalid(format!("{alpha} is not in the support set: e*_α = 0"));
        }
        let reps = self.coset_reps(alpha);
        let entries = reps
            .iter()
            .map(|&si| {
                let si_inv = self.group.inv(si);
                reps.iter()
                    .map(|&sj| self.inner_with_stabilizer(&stab, self.group.mul(sj, si_inv)))
                    .collect()
            })
            .collect();
        Ok(GramMatrix {
            alpha: alpha.clone(),
            coset_reps: reps,
            entries,
        })
    }

    /// e*_α in coordinates: the coefficient of β is χ(e)/|G| · Σ{χ(σ) : ασ⁻¹ = β}.
    pub fn explicit_tensor(&self, alpha: &MultiIndex, budget: u128) -> Result<SparseTensor> {
        self.check_index(alpha)?;
        index_count(self.m(), self.n, budget)?;
        let mut acc: SparseTensor = BTreeMap::new();
        for g in 0..self.group.order() {
            let beta = act_unchecked(alpha, self.group.inv(g), self.rep);
            let slot = acc.entry(beta).or_insert_with(|| CycloNum::zero(1));
            *slot = &*slot + &self.chi[g];
        }
        let scale = self.weight();
        let deg = &self.chi[self.group.identity()];
        Ok(acc
            .into_iter()
            .filter(|(_, v)| !v.is_zero())
            .map(|(b, v)| (b, (v * deg).scale(&scale)))
            .collect())
    }
}

/// d^G_χ(M) = Σ_σ χ(σ) Π_i M_{i,σ(i)}.
pub fn generalized_matrix_function(
    matrix: &[Vec<CycloNum>],
    chi: &[CycloNum],
    rep: &PermRep,
) -> Result<CycloNum> {
    let m = rep.degree();
    if matrix.len() != m || matrix.iter().any(|r| r.len() != m) {
        return invalid(format!("matrix must be {m}×{m}"));
    }
    if chi.len() != rep.group_order() {
        return invalid("character row length differs from the group order");
    }
    let mut total = CycloNum::zero(1);
    for (g, c) in chi.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let sigma = rep.image(g);
        let mut prod = c.clone();
        for (i, row) in matrix.iter().enumerate() {
            prod = prod * &row[sigma.apply(i)];
            if prod.is_zero() {
                break;
            }
        }
        total = total + prod;
    }
    Ok(total)
}
