use serde::Serialize;

use crate::cyclotomic::CycloNum;
use crate::groups::{AbelianGroup, ActionHom};

/// A linear character of Z_{n_1} × … × Z_{n_k}: a ↦ Π ζ_{n_i}^{c_i a_i}.
///
/// Exponent tuples live in the same mixed-radix space as the group's elements, so
/// `AbelianGroup::index` orders characters lexicographically by exponents.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct DualChar {
    exponents: Vec<u32>,
}

impl DualChar {
    pub fn new(g: &AbelianGroup, exponents: Vec<u32>) -> Self {
        debug_assert_eq!(exponents.len(), g.rank());
        DualChar { exponents }
    }

    pub fn from_index(g: &AbelianGroup, idx: usize) -> Self {
        DualChar {
            exponents: g.coords(idx),
        }
    }

    pub fn index(&self, g: &AbelianGroup) -> usize {
        g.index(&self.exponents)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn is_trivial(&self) -> bool {
        self.exponents.iter().all(|c| *c == 0)
    }

    /// k with x(a) = ζ_E^k, E the exponent of the group.
    pub fn phase(&self, g: &AbelianGroup, a: usize) -> u32 {
        let e = g.exponent() as u64;
        let total: u64 = g
            .coords(a)
            .iter()
            .zip(&self.exponents)
            .zip(g.factors())
            .map(|((ai, ci), ni)| *ai as u64 * *ci as u64 * (e / *ni as u64))
            .sum();
        (total % e) as u32
    }

    pub fn value(&self, g: &AbelianGroup, a: usize) -> CycloNum {
        CycloNum::root_of_unity(g.exponent(), self.phase(g, a) as i64)
            .expect("group exponent is a valid conductor")
    }

    /// x ∘ φ_h, read off from the values on the generators.
    pub fn twisted(&self, a: &AbelianGroup, phi: &ActionHom, h: usize) -> DualChar {
        let aut = phi.at(h);
        let e = a.exponent();
        let exponents = (0..a.rank())
            .map(|i| {
                let step = e / a.factors()[i];
                self.phase(a, aut.apply(a.generator(i))) / step
            })
            .collect();
        DualChar { exponents }
    }
}

/// All |A| characters of A, in lexicographic exponent order.
pub fn dual_group(a: &AbelianGroup) -> Vec<DualChar> {
    (0..a.order()).map(|i| DualChar::from_index(a, i)).collect()
}

/// An H-orbit on A^∨ under h·x = x ∘ φ_h.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DualOrbit {
    /// Lex-min member.
    pub representative: DualChar,
    pub members: Vec<DualChar>,
    /// H_x as sorted element indices of H.
    pub stabilizer: Vec<usize>,
}

/// Partition of A^∨ into H-orbits, listed by representative.
pub fn dual_orbits(a: &AbelianGroup, h: &AbelianGroup, phi: &ActionHom) -> Vec<DualOrbit> {
    let mut seen = vec![false; a.order()];
    let mut out = Vec::new();
    for idx in 0..a.order() {
        if seen[idx] {
            continue;
        }
        let x = DualChar::from_index(a, idx);
        let mut members = Vec::new();
        let mut stabilizer = Vec::new();
        for k in 0..h.order() {
            let y = x.twisted(a, phi, k);
            let yi = y.index(a);
            if yi == idx {
                stabilizer.push(k);
            }
            if !seen[yi] {
                seen[yi] = true;
                members.push(y);
            }
        }
        members.sort();
        out.push(DualOrbit {
            representative: x,
            members,
            stabilizer,
        });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{AbElement, Automorphism};

    fn power_action(n: u32, m: u32, r: u32) -> (AbelianGroup, AbelianGroup, ActionHom) {
        let a = AbelianGroup::cyclic(n).unwrap();
        let h = AbelianGroup::cyclic(m).unwrap();
        let aut = Automorphism::new(&a, vec![AbElement(vec![r])]).unwrap();
        let phi = ActionHom::new(&a, &h, vec![aut]).unwrap();
        (a, h, phi)
    }

    #[test]
    fn dual_group_sizes_and_values() {
        assert_eq!(dual_group(&AbelianGroup::trivial()).len(), 1);
        let c3 = AbelianGroup::cyclic(3).unwrap();
        let d = dual_group(&c3);
        assert_eq!(d.len(), 3);
        assert_eq!(d[2].value(&c3, 2), CycloNum::root_of_unity(3, 4).unwrap());
        let v4 = AbelianGroup::new(vec![2, 2]).unwrap();
        for x in dual_group(&v4) {
            for a in 0..4 {
                let v = x.value(&v4, a).to_integer().unwrap();
                assert!(v == 1.into() || v == (-1).into());
            }
        }
    }

    #[test]
    fn characters_are_homomorphisms_and_orthogonal() {
        let g = AbelianGroup::new(vec![2, 6]).unwrap();
        let d = dual_group(&g);
        for x in &d {
            for a in 0..g.order() {
                for b in 0..g.order() {
                    assert_eq!(x.value(&g, g.add(a, b)), x.value(&g, a) * x.value(&g, b));
                }
            }
        }
        for (i, x) in d.iter().enumerate() {
            for (j, y) in d.iter().enumerate() {
                let s = (0..g.order()).fold(CycloNum::zero(6), |acc, a| {
                    acc + x.value(&g, a) * y.value(&g, a).conj()
                });
                let expect = if i == j { g.order() as i64 } else { 0 };
                assert_eq!(s, CycloNum::from_integer(6, expect));
            }
        }
    }

    #[test]
    fn inversion_orbits() {
        let (a, h, phi) = power_action(3, 2, 2);
        let orbits = dual_orbits(&a, &h, &phi);
        assert_eq!(orbits.len(), 2);
        assert_eq!(orbits[0].members.len(), 1);
        assert_eq!(orbits[0].stabilizer, vec![0, 1]);
        assert_eq!(orbits[1].representative.exponents(), &[1]);
        assert_eq!(orbits[1].members.len(), 2);
        assert_eq!(orbits[1].stabilizer, vec![0]);
    }

    #[test]
    fn trivial_action_orbits() {
        let a = AbelianGroup::new(vec![2, 3]).unwrap();
        let h = AbelianGroup::cyclic(4).unwrap();
        let orbits = dual_orbits(&a, &h, &ActionHom::trivial(&a, &h));
        assert_eq!(orbits.len(), 6);
        assert!(orbits.iter().all(|o| o.stabilizer.len() == 4));
    }

    #[test]
    fn squaring_on_c5() {
        let (a, h, phi) = power_action(5, 4, 2);
        let orbits = dual_orbits(&a, &h, &phi);
        assert_eq!(orbits.len(), 2);
        let exps: Vec<u32> = orbits[1].members.iter().map(|m| m.exponents()[0]).collect();
        assert_eq!(exps, vec![1, 2, 3, 4]);
        for o in &orbits {
            assert_eq!(o.members.len() * o.stabilizer.len(), h.order());
        }
    }
}
