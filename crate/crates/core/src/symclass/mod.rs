//! Symmetry classes V_χ(G) inside the m-th tensor power of C^n.
//!
//! G acts on Γ_{m,n} through a permutation representation; every function here takes the
//! character as a row of exact values indexed by group element, so any finite group with a
//! representation works, not only semidirect products.

mod linalg;
mod metric;
mod multi;
mod orbits;

pub use linalg::exact_rank;
pub use metric::{generalized_matrix_function, tensor_inner, GramMatrix, SparseTensor};
pub use multi::{act, cycle_count, index_count, MultiIndex};
pub use orbits::{delta_bar_total, orbits_to_csv, OrbitRecord, INDEX_BUDGET};

use crate::cyclotomic::CycloNum;
use crate::error::{invalid, Result};
use crate::groups::{FiniteGroup, PermRep};

/// A group, a representation of degree m, a character row, and the alphabet size n.
#[derive(Debug, Clone, Copy)]
pub struct TensorSetting<'a, G> {
    pub group: &'a G,
    pub rep: &'a PermRep,
    pub chi: &'a [CycloNum],
    pub n: u32,
}

impl<'a, G: FiniteGroup> TensorSetting<'a, G> {
    pub fn new(group: &'a G, rep: &'a PermRep, chi: &'a [CycloNum], n: u32) -> Result<Self> {
        if n == 0 {
            return invalid("alphabet size n must be at least 1");
        }
        if rep.group_order() != group.order() {
            return invalid("representation is for a group of a different order");
        }
        if chi.len() != group.order() {
            return invalid(format!(
                "character row has {} values for a group of order {}",
                chi.len(),
                group.order()
            ));
        }
        Ok(TensorSetting { group, rep, chi, n })
    }

    pub fn m(&self) -> usize {
        self.rep.degree()
    }

    /// χ(e).
    pub fn degree(&self) -> &CycloNum {
        &self.chi[self.group.identity()]
    }

    fn check_index(&self, alpha: &MultiIndex) -> Result<()> {
        if alpha.m() != self.m() || alpha.n() != self.n {
            return invalid(format!("{alpha} is not in Γ_{{{},{}}}", self.m(), self.n));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use num_rational::BigRational;
    use proptest::prelude::*;

    use super::*;
    use crate::characters::CharacterTable;
    use crate::groups::{dihedral, group_pq, BuiltGroup, Perm, RepKind, SemidirectGroup};

    fn q(a: i64, b: i64) -> CycloNum {
        CycloNum::from_rational(1, &BigRational::new(a.into(), b.into()))
    }

    fn rows(g: &SemidirectGroup) -> Vec<Vec<CycloNum>> {
        let t = CharacterTable::compute(g);
        (0..t.len()).map(|i| t.row(i)).collect()
    }

    fn d6() -> (BuiltGroup, Vec<Vec<CycloNum>>) {
        let b = dihedral(3).unwrap();
        let r = rows(&b.group);
        (b, r)
    }

    fn idx(v: &[u32], n: u32) -> MultiIndex {
        MultiIndex::new(v.to_vec(), n).unwrap()
    }

    fn element_with_image(rep: &PermRep, images: &[u32]) -> usize {
        (0..rep.group_order())
            .find(|&g| rep.image(g).images() == images)
            .unwrap()
    }

    #[test]
    fn multi_index_validation_and_codes() {
        assert!(MultiIndex::new(vec![1, 3], 2).is_err());
        assert!(MultiIndex::new(vec![0], 2).is_err());
        let a = idx(&[2, 1, 3], 3);
        assert_eq!(a.encode(), 9 + 2);
        assert_eq!(MultiIndex::decode(11, 3, 3), a);
        assert!(idx(&[1, 2, 2], 2) < idx(&[2, 1, 1], 2));
        assert_eq!(a.to_string(), "(2,1,3)");
    }

    #[test]
    fn action_examples() {
        let (b, _) = d6();
        let rep = b.natural.unwrap();
        let c = idx(&[2, 2, 2], 2);
        for g in 0..6 {
            assert_eq!(act(&c, g, &rep).unwrap(), c);
        }
        assert_eq!(
            act(&idx(&[1, 2, 1], 2), 0, &rep).unwrap(),
            idx(&[1, 2, 1], 2)
        );
        // σ = (1 2 3): 1 → 2 → 3 → 1
        let g = element_with_image(&rep, &[1, 2, 0]);
        assert_eq!(
            act(&idx(&[1, 2, 1], 2), g, &rep).unwrap(),
            idx(&[1, 1, 2], 2)
        );
        assert!(act(&idx(&[1, 2], 2), g, &rep).is_err());
    }

    #[test]
    fn cycle_counts() {
        let (b, _) = d6();
        let rep = b.natural.unwrap();
        assert_eq!(cycle_count(0, &rep), 3);
        assert_eq!(cycle_count(element_with_image(&rep, &[1, 2, 0]), &rep), 1);
        assert_eq!(cycle_count(element_with_image(&rep, &[2, 1, 0]), &rep), 2);
        let id5 = PermRep::from_element_images(
            &crate::groups::SemidirectGroup::direct(
                crate::groups::AbelianGroup::trivial(),
                crate::groups::AbelianGroup::trivial(),
            )
            .unwrap(),
            vec![Perm::identity(5)],
            RepKind::Explicit,
        )
        .unwrap();
        assert_eq!(cycle_count(0, &id5), 5);
    }

    #[test]
    fn order_six_orbits() {
        let (b, chis) = d6();
        let rep = b.natural.unwrap();
        let s = TensorSetting::new(&b.group, &rep, &chis[2], 2).unwrap();
        let recs = s.orbit_scan(INDEX_BUDGET).unwrap();
        let reps: Vec<Vec<u32>> = recs.iter().map(|r| r.rep.entries().to_vec()).collect();
        assert_eq!(
            reps,
            vec![vec![1, 1, 1], vec![1, 1, 2], vec![1, 2, 2], vec![2, 2, 2]]
        );
        assert!(recs[0].stab_char_sum.is_zero());
        assert!(!recs[0].in_delta_bar);
        let delta: Vec<&OrbitRecord> = recs.iter().filter(|r| r.in_delta_bar).collect();
        assert_eq!(delta.len(), 2);
        for r in delta {
            assert_eq!(r.s_alpha, BigRational::from_integer(2.into()));
            assert_eq!(r.orbit_size, 3);
        }
        assert_eq!(delta_bar_total(&recs), BigRational::from_integer(4.into()));
        let csv = orbits_to_csv(&recs);
        assert!(csv.starts_with("rep,orbit_size,stabilizer_order,s_alpha,in_delta_bar\n"));
        assert!(csv.contains("\"(1,1,2)\",3,2,2,true"));
    }

    #[test]
    fn trivial_group_orbits_are_singletons() {
        let g = SemidirectGroup::direct(
            crate::groups::AbelianGroup::trivial(),
            crate::groups::AbelianGroup::trivial(),
        )
        .unwrap();
        let rep =
            PermRep::from_element_images(&g, vec![Perm::identity(3)], RepKind::Explicit).unwrap();
        let chi = vec![CycloNum::one(1)];
        let s = TensorSetting::new(&g, &rep, &chi, 3).unwrap();
        let recs = s.orbit_scan(INDEX_BUDGET).unwrap();
        assert_eq!(recs.len(), 27);
        assert!(recs.iter().all(|r| r.orbit_size == 1));
        assert_eq!(s.dim().unwrap(), 27.into());
    }

    #[test]
    fn scan_budget_is_enforced() {
        let (b, chis) = d6();
        let rep = b.natural.unwrap();
        let s = TensorSetting::new(&b.group, &rep, &chis[0], 3).unwrap();
        assert!(matches!(
            s.orbit_scan(26),
            Err(crate::Error::Budget { needed: 27, .. })
        ));
    }

    #[test]
    fn dimension_examples() {
        let (b, chis) = d6();
        let rep = b.natural.unwrap();
        let dim = |chi: &[CycloNum], n| {
            TensorSetting::new(&b.group, &rep, chi, n)
                .unwrap()
                .dim()
                .unwrap()
        };
        // symmetric cube of C^2
        assert_eq!(dim(&chis[0], 2), 4.into());
        assert_eq!(dim(&chis[1], 2), 0.into());
        assert_eq!(dim(&chis[2], 2), 4.into());
        // alternating cube of C^3
        assert_eq!(dim(&chis[1], 3), 1.into());
        assert_eq!(dim(&chis[0], 4), 20.into());
    }

    #[test]
    fn broken_row_is_a_consistency_failure() {
        let (b, chis) = d6();
        let rep = b.natural.unwrap();
        let mut bad = chis[2].clone();
        bad[1] = q(1, 2);
        let s = TensorSetting::new(&b.group, &rep, &bad, 2).unwrap();
        assert!(matches!(s.dim(), Err(crate::Error::Consistency(_))));
    }

    #[test]
    fn inner_product_examples() {
        let (b, chis) = d6();
        let rep = b.natural.unwrap();
        let s = TensorSetting::new(&b.group, &rep, &chis[2], 2).unwrap();
        let alpha = idx(&[1, 1, 2], 2);
        let t13 = element_with_image(&rep, &[2, 1, 0]);
        assert_eq!(s.inner_product(&alpha, t13).unwrap(), q(-1, 3));
        assert_eq!(s.inner_product(&alpha, 0).unwrap(), q(2, 3));
        assert!(s.inner_product(&idx(&[1, 1, 1], 2), 0).unwrap().is_zero());
        assert!(s
            .inner_product_pair(&alpha, &idx(&[1, 2, 2], 2))
            .unwrap()
            .is_zero());
        assert_eq!(
            s.inner_product_pair(&alpha, &idx(&[2, 1, 1], 2)).unwrap(),
            s.inner_product_pair(&alpha, &idx(&[1, 2, 1], 2)).unwrap()
        );
    }

    #[test]
    fn order_six_gram() {
        let (b, chis) = d6();
        let rep = b.natural.unwrap();
        let s = TensorSetting::new(&b.group, &rep, &chis[2], 2).unwrap();
        let gm = s.gram(&idx(&[1, 1, 2], 2)).unwrap();
        assert_eq!(gm.size(), 3);
        for i in 0..3 {
            for j in 0..3 {
                let expect = if i == j { q(2, 3) } else { q(-1, 3) };
                assert_eq!(gm.entries[i][j], expect);
            }
        }
        assert_eq!(gm.rank(), 2);
        assert!(gm.is_hermitian() && gm.has_constant_diagonal());
        assert!(s.gram(&idx(&[1, 1, 1], 2)).is_err());
        let json = serde_json::to_value(&gm).unwrap();
        assert_eq!(json["alpha"], serde_json::json!([1, 1, 2]));
        assert_eq!(
            json["entries"][0][1]["coeffs"],
            serde_json::json!([[-1, 3], [0, 1]])
        );
    }

    #[test]
    fn linear_character_grams_have_rank_one() {
        let b = group_pq(3, 7, 2).unwrap();
        let chis = rows(&b.group);
        let rep = b.natural.unwrap();
        for chi in chis.iter().filter(|r| r[0] == CycloNum::one(1)) {
            let s = TensorSetting::new(&b.group, &rep, chi, 2).unwrap();
            for r in s.orbit_scan(INDEX_BUDGET).unwrap() {
                assert!(r.s_alpha <= BigRational::from_integer(1.into()));
                if r.in_delta_bar {
                    assert_eq!(s.gram(&r.rep).unwrap().rank(), 1);
                }
            }
        }
    }

    #[test]
    fn symmetrizer_on_two_letters() {
        // S_2 as C_2 acting on two positions
        let c2 = crate::groups::AbelianGroup::cyclic(2).unwrap();
        let g = SemidirectGroup::direct(c2, crate::groups::AbelianGroup::trivial()).unwrap();
        let rep = crate::groups::regular_rep(&g);
        let chi = vec![CycloNum::one(1), CycloNum::one(1)];
        let s = TensorSetting::new(&g, &rep, &chi, 2).unwrap();
        let t = s.explicit_tensor(&idx(&[1, 2], 2), INDEX_BUDGET).unwrap();
        assert_eq!(t.len(), 2);
        assert_eq!(t[&idx(&[1, 2], 2)], q(1, 2));
        assert_eq!(t[&idx(&[2, 1], 2)], q(1, 2));
        let sign = vec![CycloNum::one(1), CycloNum::from_integer(1, -1)];
        let s = TensorSetting::new(&g, &rep, &sign, 2).unwrap();
        assert!(s
            .explicit_tensor(&idx(&[2, 2], 2), INDEX_BUDGET)
            .unwrap()
            .is_empty());
    }

    /// Every Gram entry against coordinates of the explicit tensors.
    fn assert_gram_matches_explicit(g: &SemidirectGroup, rep: &PermRep, chi: &[CycloNum], n: u32) {
        let s = TensorSetting::new(g, rep, chi, n).unwrap();
        for r in s.orbit_scan(INDEX_BUDGET).unwrap() {
            let zero = s.explicit_tensor(&r.rep, INDEX_BUDGET).unwrap();
            assert_eq!(zero.is_empty(), !r.in_delta_bar);
            if !r.in_delta_bar {
                continue;
            }
            let gm = s.gram(&r.rep).unwrap();
            let tensors: Vec<SparseTensor> = gm
                .coset_reps
                .iter()
                .map(|&c| {
                    let beta = act(&r.rep, c, rep).unwrap();
                    s.explicit_tensor(&beta, INDEX_BUDGET).unwrap()
                })
                .collect();
            for i in 0..gm.size() {
                for j in 0..gm.size() {
                    assert_eq!(gm.entries[i][j], tensor_inner(&tensors[i], &tensors[j]));
                }
            }
            assert!(gm.is_hermitian() && gm.has_constant_diagonal());
            assert_eq!(BigRational::from_integer(gm.rank().into()), r.s_alpha);
        }
    }

    #[test]
    fn gram_oracle_order_six() {
        let (b, chis) = d6();
        let rep = b.natural.unwrap();
        for chi in &chis {
            for n in [2, 3] {
                assert_gram_matches_explicit(&b.group, &rep, chi, n);
            }
        }
    }

    #[test]
    fn gram_oracle_order_21() {
        let b = group_pq(3, 7, 2).unwrap();
        let chis = rows(&b.group);
        let rep = b.natural.unwrap();
        for chi in &chis {
            assert_gram_matches_explicit(&b.group, &rep, chi, 2);
        }
    }

    #[test]
    fn generalized_matrix_function_examples() {
        let (b, chis) = d6();
        let rep = b.natural.unwrap();
        let int = |k| CycloNum::from_integer(1, k);
        let id: Vec<Vec<CycloNum>> = (0..3)
            .map(|i| (0..3).map(|j| int((i == j) as i64)).collect())
            .collect();
        let ones = vec![vec![int(1); 3]; 3];
        for chi in &chis {
            assert_eq!(generalized_matrix_function(&id, chi, &rep).unwrap(), chi[0]);
        }
        for chi in &chis[1..] {
            assert!(generalized_matrix_function(&ones, chi, &rep)
                .unwrap()
                .is_zero());
        }
        // D_6 acting on 3 points is all of S_3: trivial χ gives the permanent, sign the determinant
        let m = [[2, -1, 3], [0, 5, 7], [4, 1, -6]];
        let mc: Vec<Vec<CycloNum>> = m
            .iter()
            .map(|r| r.iter().map(|&x| int(x)).collect())
            .collect();
        let mut perm = 0;
        let mut det = 0;
        for p in [
            [0, 1, 2],
            [1, 2, 0],
            [2, 0, 1],
            [0, 2, 1],
            [2, 1, 0],
            [1, 0, 2],
        ]
        .iter()
        .enumerate()
        {
            let prod: i64 = (0..3).map(|i| m[i][p.1[i]]).product();
            perm += prod;
            det += if p.0 < 3 { prod } else { -prod };
        }
        assert_eq!(
            generalized_matrix_function(&mc, &chis[0], &rep).unwrap(),
            int(perm)
        );
        assert_eq!(
            generalized_matrix_function(&mc, &chis[1], &rep).unwrap(),
            int(det)
        );
        assert!(generalized_matrix_function(&mc[..2], &chis[0], &rep).is_err());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn right_action_law(s in 3u32..8, n in 1u32..4, code in any::<u64>(), g in any::<usize>(), h in any::<usize>()) {
            let b = dihedral(s).unwrap();
            let rep = b.natural.unwrap();
            let order = 2 * s as usize;
            let (g, h) = (g % order, h % order);
            let total = (n as u64).pow(s);
            let alpha = MultiIndex::decode(code % total, s as usize, n);
            let lhs = act(&act(&alpha, g, &rep).unwrap(), h, &rep).unwrap();
            let rhs = act(&alpha, crate::groups::FiniteGroup::mul(&b.group, g, h), &rep).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn partition_and_orbit_stabilizer(s in 3u32..7, n in 1u32..4, which in any::<usize>()) {
            let b = dihedral(s).unwrap();
            let chis = rows(&b.group);
            let rep = b.natural.unwrap();
            let chi = &chis[which % chis.len()];
            let st = TensorSetting::new(&b.group, &rep, chi, n).unwrap();
            let recs = st.orbit_scan(INDEX_BUDGET).unwrap();
            let total: usize = recs.iter().map(|r| r.orbit_size).sum();
            prop_assert_eq!(total as u64, (n as u64).pow(s));
            for r in &recs {
                prop_assert_eq!(r.orbit_size * r.stabilizer.len(), 2 * s as usize);
                prop_assert_eq!(r.in_delta_bar, !r.stab_char_sum.is_zero());
                prop_assert!(r.s_alpha.is_integer());
            }
            prop_assert_eq!(delta_bar_total(&recs), BigRational::from_integer(st.dim().unwrap()));
        }
    }
}
