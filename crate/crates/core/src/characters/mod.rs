//! Irreducible characters of A ⋊_φ H for abelian A and H, with exact values.
//!
//! Characters are indexed by an H-orbit [x] on the dual group A^∨ and a linear character U of
//! the stabilizer H_x. Values come from the reduced induced-character formula; they are
//! memoized per conjugacy class inside a [`CharacterTable`].

mod dual;
mod table;

pub use dual::{dual_group, dual_orbits, DualChar, DualOrbit};
pub(crate) use table::format_approx;
pub use table::{
    char_value, irred_chars, mackey_value, validate_table, value_conductor, zero_set,
    CharacterTable, Check, IrredChar, ValidationReport,
};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::CycloNum;
    use crate::groups::{
        build_wreath, dihedral, group_pq, z_group, AbelianGroup, FiniteGroup, GElem,
        SemidirectGroup, WreathSpec,
    };

    fn d6() -> SemidirectGroup {
        dihedral(3).unwrap().group
    }

    #[test]
    fn order_six_table() {
        let g = d6();
        let mut t = CharacterTable::compute(&g);
        let degrees: Vec<u32> = t.chars().iter().map(|c| c.degree).collect();
        assert_eq!(degrees, vec![1, 1, 2]);
        assert!(t.validate(&g).passed());
        assert!(t.is_validated());
        // degree-2 character on a rotation: ζ_3 + ζ_3² = -1
        let rot = g.index_of(GElem { a: 1, h: 0 });
        assert_eq!(t.value(2, rot), &CycloNum::from_integer(6, -1));
        // and zero off H_x = {e}
        let refl = g.index_of(GElem { a: 1, h: 1 });
        assert!(t.value(2, refl).is_zero());
        assert_eq!(t.value(2, 0), &CycloNum::from_integer(6, 2));
    }

    #[test]
    fn direct_product_is_all_linear() {
        let g = SemidirectGroup::direct(
            AbelianGroup::cyclic(3).unwrap(),
            AbelianGroup::new(vec![2, 2]).unwrap(),
        )
        .unwrap();
        let mut t = CharacterTable::compute(&g);
        assert_eq!(t.len(), 12);
        assert!(t.chars().iter().all(|c| c.degree == 1));
        assert!(t.validate(&g).passed());
    }

    #[test]
    fn order_21_table() {
        let g = group_pq(3, 7, 2).unwrap().group;
        let mut t = CharacterTable::compute(&g);
        let mut degrees: Vec<u32> = t.chars().iter().map(|c| c.degree).collect();
        degrees.sort();
        assert_eq!(degrees, vec![1, 1, 1, 3, 3]);
        assert!(t.validate(&g).passed());
        let deg3 = t.chars().iter().position(|c| c.degree == 3).unwrap();
        let zeros = t.zero_set(deg3);
        assert_eq!(zeros.len(), 14);
        assert!(zeros.iter().all(|&x| g.elem(x).h != 0));
    }

    #[test]
    fn zero_sets() {
        let g = d6();
        let t = CharacterTable::compute(&g);
        assert!(t.zero_set(0).is_empty());
        assert!(t.zero_set(1).is_empty());
        let z = t.zero_set(2);
        assert_eq!(z.len(), 3);
        assert!(z.iter().all(|&x| g.elem(x).h == 1));
    }

    #[test]
    fn corrupted_table_fails_orthogonality() {
        let g = d6();
        let t = CharacterTable::compute(&g);
        let mut rows: Vec<Vec<CycloNum>> = (0..t.len()).map(|i| t.row(i)).collect();
        assert!(validate_table(&g, &rows).passed());
        rows[2][1] = CycloNum::from_integer(6, 5);
        let report = validate_table(&g, &rows);
        assert!(!report.passed());
        assert!(report
            .failures()
            .iter()
            .any(|c| c.name == "first_orthogonality"));
    }

    fn suite() -> Vec<SemidirectGroup> {
        let c2 = AbelianGroup::cyclic(2).unwrap();
        let c3 = AbelianGroup::cyclic(3).unwrap();
        vec![
            d6(),
            dihedral(4).unwrap().group,
            dihedral(5).unwrap().group,
            group_pq(3, 7, 2).unwrap().group,
            z_group(5, 4, 2).unwrap().group,
            build_wreath(&WreathSpec::regular(c2.clone(), c2.clone()))
                .unwrap()
                .group,
            build_wreath(&WreathSpec::regular(c3, c2)).unwrap().group,
        ]
    }

    #[test]
    fn class_functions_and_representative_independence() {
        for g in suite() {
            let t = CharacterTable::compute(&g);
            for (i, chi) in t.chars().iter().enumerate() {
                // value straight from the formula on every element, against the class memo
                for x in 0..g.order() {
                    assert_eq!(&char_value(chi, &g, g.elem(x)), t.value(i, x));
                }
                for member in &chi.orbit.members {
                    let other = chi.with_representative(member.clone());
                    for x in 0..g.order() {
                        assert_eq!(char_value(&other, &g, g.elem(x)), *t.value(i, x));
                    }
                }
                assert_eq!(
                    chi.orbit.members.len() * chi.orbit.stabilizer.len(),
                    g.h().order()
                );
            }
        }
    }

    #[test]
    fn mackey_sum_matches_reduced_formula() {
        for g in suite() {
            for chi in irred_chars(&g) {
                for x in 0..g.order() {
                    let e = g.elem(x);
                    assert_eq!(mackey_value(&chi, &g, e), char_value(&chi, &g, e));
                }
            }
        }
    }

    #[test]
    fn conjugation_invariance() {
        for g in suite() {
            let t = CharacterTable::compute(&g);
            for chi in t.chars() {
                for x in 0..g.order() {
                    let v = char_value(chi, &g, g.elem(x));
                    for k in 0..g.order() {
                        assert_eq!(char_value(chi, &g, g.elem(g.conjugate(x, k))), v);
                    }
                }
            }
        }
    }

    #[test]
    fn csv_export_shape() {
        let g = d6();
        let t = CharacterTable::compute(&g);
        let csv = t.to_csv(&g);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines.len(), 4);
        assert!(lines[0].starts_with("character,degree,dual_orbit_rep,u,"));
        assert!(lines[3].contains("-1.000000"));
    }

    mod props {
        use proptest::prelude::*;

        use super::super::*;
        use crate::groups::{dihedral, z_group};

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(12))]

            #[test]
            fn dihedral_tables_are_valid(s in 3u32..12) {
                let g = dihedral(s).unwrap().group;
                let mut t = CharacterTable::compute(&g);
                prop_assert!(t.validate(&g).passed());
                let linear = t.chars().iter().filter(|c| c.degree == 1).count();
                prop_assert_eq!(linear, if s % 2 == 0 { 4 } else { 2 });
            }

            #[test]
            fn metacyclic_tables_are_valid(pick in 0usize..4) {
                let (s, t_, r) = [(7, 3, 2), (5, 4, 2), (9, 2, 8), (13, 4, 5)][pick];
                let g = z_group(s, t_, r).unwrap().group;
                let mut t = CharacterTable::compute(&g);
                prop_assert!(t.validate(&g).passed());
            }
        }
    }
}
