//! Named families and wreath products, each with a natural permutation representation.

use num_integer::Integer;

use super::abelian::{AbElement, AbelianGroup, ActionHom, Automorphism};
use super::perm::{Perm, PermRep, RepKind};
use super::semidirect::SemidirectGroup;
use crate::cyclotomic::prime_factors;
use crate::error::{invalid, Result};

#[derive(Debug, Clone)]
pub struct BuiltGroup {
    pub group: SemidirectGroup,
    /// Present only when faithful.
    pub natural: Option<PermRep>,
    pub label: String,
}

fn is_prime(n: u64) -> bool {
    n >= 2 && prime_factors(n) == [n]
}

fn mult_order(r: u64, modulus: u64) -> Option<u64> {
    if modulus == 1 {
        return Some(1);
    }
    if r.gcd(&modulus) != 1 {
        return None;
    }
    let mut x = r % modulus;
    let mut k = 1;
    while x != 1 {
        x = x * r % modulus;
        k += 1;
    }
    Some(k)
}

fn mod_inverse(r: u64, modulus: u64) -> u64 {
    (1..modulus).find(|y| r * y % modulus == 1).unwrap_or(1)
}

/// C_s ⋊ C_t with φ_b(a) = a^r, acting on Z_s by x ↦ x + 1 and x ↦ r⁻¹x.
fn cyclic_by_cyclic(s: u32, t: u32, r: u64) -> Result<(SemidirectGroup, PermRep)> {
    let a = AbelianGroup::cyclic(s)?;
    let h = AbelianGroup::cyclic(t)?;
    let aut = Automorphism::new(&a, vec![AbElement(vec![(r % s as u64) as u32])])?;
    let phi = ActionHom::new(&a, &h, vec![aut])?;
    let g = SemidirectGroup::new(a, h, phi)?;
    let (s64, rinv) = (s as u64, mod_inverse(r % s as u64, s as u64));
    let shift = Perm::from_fn(s as usize, |x| (x + 1) % s as usize)?;
    let scale = Perm::from_fn(s as usize, |x| (x as u64 * rinv % s64) as usize)?;
    let rep = PermRep::from_generators(&g, &[shift], &[scale], RepKind::Natural)?;
    Ok((g, rep))
}

/// D_{2s} = C_s ⋊ C_2 with φ_b(a) = a⁻¹, acting on the vertices of an s-gon.
pub fn dihedral(s: u32) -> Result<BuiltGroup> {
    if s < 3 {
        return invalid(format!("dihedral group needs s >= 3, got {s}"));
    }
    let (group, rep) = cyclic_by_cyclic(s, 2, s as u64 - 1)?;
    Ok(BuiltGroup {
        group,
        natural: Some(rep),
        label: format!("D_{}", 2 * s),
    })
}

/// Non-abelian group of order pq: C_q ⋊ C_p with φ_b(a) = a^r, r of multiplicative order p
/// modulo q. Natural representation: the affine maps on Z_q.
pub fn group_pq(p: u32, q: u32, r: u32) -> Result<BuiltGroup> {
    if !is_prime(q as u64) {
        return invalid(format!("q = {q} is not prime"));
    }
    if !is_prime(p as u64) {
        return invalid(format!("p = {p} is not prime"));
    }
    if !(q - 1).is_multiple_of(p) {
        return invalid(format!("p = {p} does not divide q - 1 = {}", q - 1));
    }
    match mult_order(r as u64, q as u64) {
        Some(k) if k == p as u64 => {}
        Some(k) => {
            return invalid(format!(
                "r = {r} has multiplicative order {k} mod {q}; need r^{p} ≡ 1 (mod {q}) with r ≢ 1"
            ))
        }
        None => return invalid(format!("r = {r} is not a unit mod {q}")),
    }
    let (group, rep) = cyclic_by_cyclic(q, p, r as u64)?;
    Ok(BuiltGroup {
        group,
        natural: Some(rep),
        label: format!("C_{q} ⋊ C_{p} (r = {r})"),
    })
}

/// Split metacyclic group C_s ⋊ C_t with gcd(s, t) = 1 and r^t ≡ 1 (mod s). The affine
/// degree-s representation is bundled only when it is faithful, i.e. when r has order exactly t.
pub fn z_group(s: u32, t: u32, r: u32) -> Result<BuiltGroup> {
    if s < 2 || t < 1 {
        return invalid(format!(
            "z-group needs s >= 2 and t >= 1, got s = {s}, t = {t}"
        ));
    }
    if s.gcd(&t) != 1 {
        return invalid(format!(
            "gcd(s, t) = gcd({s}, {t}) = {} is not 1",
            s.gcd(&t)
        ));
    }
    let order = match mult_order(r as u64, s as u64) {
        Some(k) => k,
        None => return invalid(format!("r = {r} is not a unit mod {s}")),
    };
    if !(t as u64).is_multiple_of(order) {
        return invalid(format!(
            "r^t ≢ 1 (mod s): {r}^{t} mod {s} = {}",
            (0..t).fold(1u64, |acc, _| acc * r as u64 % s as u64)
        ));
    }
    let (group, rep) = cyclic_by_cyclic(s, t, r as u64)?;
    let natural = rep.is_faithful().then_some(rep);
    Ok(BuiltGroup {
        group,
        natural,
        label: format!("C_{s} ⋊ C_{t} (r = {r})"),
    })
}

/// A ≀_Ω H data: `action[j]` is how the j-th generator of H permutes Ω = {0, …, |Ω|-1}.
#[derive(Debug, Clone)]
pub struct WreathSpec {
    pub a: AbelianGroup,
    pub h: AbelianGroup,
    pub omega: usize,
    pub action: Vec<Perm>,
}

impl WreathSpec {
    /// Ω = H with H acting on itself by translation.
    pub fn regular(a: AbelianGroup, h: AbelianGroup) -> Self {
        let action = (0..h.rank())
            .map(|j| {
                let g = h.generator(j);
                Perm::from_fn(h.order(), |w| h.add(w, g)).expect("translation is a permutation")
            })
            .collect();
        WreathSpec {
            omega: h.order(),
            a,
            h,
            action,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.omega == 0 {
            return invalid("Ω must be nonempty");
        }
        if self.action.len() != self.h.rank() {
            return invalid(format!(
                "Ω-action has {} generator permutations, H has {} generators",
                self.action.len(),
                self.h.rank()
            ));
        }
        for (j, p) in self.action.iter().enumerate() {
            if p.degree() != self.omega {
                return invalid(format!(
                    "action[{j}] has degree {}, |Ω| = {}",
                    p.degree(),
                    self.omega
                ));
            }
            if !p.pow(self.h.factors()[j]).is_identity() {
                return invalid(format!(
                    "action[{j}] raised to the generator order {} is not the identity",
                    self.h.factors()[j]
                ));
            }
        }
        for (i, x) in self.action.iter().enumerate() {
            for (j, y) in self.action.iter().enumerate().skip(i + 1) {
                if x.then(y) != y.then(x) {
                    return invalid(format!("action[{i}] and action[{j}] do not commute"));
                }
            }
        }
        Ok(())
    }
}

/// K ⋊ H with K = A^Ω and φ_Ω(h)(a_ω) = (a_{h⁻¹ω}). The natural representation is the
/// imprimitive action on A × Ω, bundled when faithful.
pub fn build_wreath(w: &WreathSpec) -> Result<BuiltGroup> {
    w.validate()?;
    let rank = w.a.rank();
    let k_factors: Vec<u32> = (0..w.omega).flat_map(|_| w.a.factors().to_vec()).collect();
    let k = AbelianGroup::new(k_factors)?;
    let mut images = Vec::with_capacity(w.h.rank());
    for sigma in &w.action {
        let gen_images = (0..k.rank())
            .map(|g| {
                let (omega, i) = (g / rank, g % rank);
                k.coords(k.generator(sigma.apply(omega) * rank + i))
            })
            .map(AbElement)
            .collect();
        images.push(Automorphism::new(&k, gen_images)?);
    }
    let phi = ActionHom::new(&k, &w.h, images)?;
    let group = SemidirectGroup::new(k, w.h.clone(), phi)?;

    let na = w.a.order();
    let degree = na * w.omega;
    let k_gens: Vec<Perm> = (0..w.omega * rank)
        .map(|g| {
            let (omega, i) = (g / rank, g % rank);
            let step = w.a.generator(i);
            Perm::from_fn(degree, |pt| {
                let (blk, x) = (pt / na, pt % na);
                if blk == omega {
                    blk * na + w.a.add(x, step)
                } else {
                    pt
                }
            })
        })
        .collect::<Result<_>>()?;
    let h_gens: Vec<Perm> = w
        .action
        .iter()
        .map(|sigma| {
            let back = sigma.inverse();
            Perm::from_fn(degree, |pt| back.apply(pt / na) * na + pt % na)
        })
        .collect::<Result<_>>()?;
    let rep = PermRep::from_generators(&group, &k_gens, &h_gens, RepKind::Natural)?;
    let natural = rep.is_faithful().then_some(rep);
    Ok(BuiltGroup {
        label: format!("Z{:?} wr_{} Z{:?}", w.a.factors(), w.omega, w.h.factors()),
        group,
        natural,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::semidirect::FiniteGroup;

    #[test]
    fn dihedral_family() {
        for s in 3..=9 {
            let d = dihedral(s).unwrap();
            assert_eq!(d.group.order(), 2 * s as usize);
            let rep = d.natural.unwrap();
            assert_eq!(rep.degree(), s as usize);
            assert!(rep.is_faithful());
        }
        assert!(dihedral(2).is_err());
    }

    #[test]
    fn pq_family() {
        let g = group_pq(3, 7, 2).unwrap();
        assert_eq!(g.group.order(), 21);
        assert!(!g.group.is_abelian());
        assert_eq!(g.natural.as_ref().unwrap().degree(), 7);
        let err = group_pq(3, 7, 3).unwrap_err().to_string();
        assert!(err.contains("order 6 mod 7"), "{err}");
        assert!(group_pq(3, 11, 2).is_err());
        assert!(group_pq(5, 11, 3).is_ok());
    }

    #[test]
    fn z_groups() {
        let f20 = z_group(5, 4, 2).unwrap();
        assert_eq!(f20.group.order(), 20);
        assert!(f20.natural.is_some());
        // r = 4 has order 2, so the affine action of C_5 ⋊ C_4 has a kernel
        let g = z_group(5, 4, 4).unwrap();
        assert!(g.natural.is_none());
        assert!(z_group(6, 4, 5).is_err());
        assert!(z_group(7, 3, 3).is_err());
    }

    #[test]
    fn wreath_orders() {
        let c2 = AbelianGroup::cyclic(2).unwrap();
        let c3 = AbelianGroup::cyclic(3).unwrap();
        let w22 = build_wreath(&WreathSpec::regular(c2.clone(), c2.clone())).unwrap();
        assert_eq!(w22.group.order(), 8);
        assert!(!w22.group.is_abelian());
        assert_eq!(w22.natural.as_ref().unwrap().degree(), 4);
        let w32 = build_wreath(&WreathSpec::regular(c3.clone(), c2.clone())).unwrap();
        assert_eq!(w32.group.order(), 18);
        assert_eq!(
            prime_factors(w32.group.a().order() as u64),
            prime_factors(c3.order() as u64)
        );
        // |Ω| = 1 with trivial action is the direct product
        let triv = WreathSpec {
            a: c3.clone(),
            h: c2.clone(),
            omega: 1,
            action: vec![Perm::identity(1)],
        };
        let w = build_wreath(&triv).unwrap();
        assert_eq!(w.group.order(), 6);
        assert!(w.group.is_abelian());
        assert!(w.natural.is_none());
    }

    #[test]
    fn wreath_order_formula() {
        let c2 = AbelianGroup::cyclic(2).unwrap();
        let c3 = AbelianGroup::cyclic(3).unwrap();
        for (a, h) in [(&c2, &c3), (&c3, &c3), (&c2, &c2)] {
            let w = build_wreath(&WreathSpec::regular(a.clone(), h.clone())).unwrap();
            let expect = a.order().pow(h.order() as u32) * h.order();
            assert_eq!(w.group.order(), expect);
        }
    }

    #[test]
    fn order_eight_wreath_is_dihedral() {
        // C_2 ≀ C_2 and D_8 have the same element-order statistics: 5 involutions, 2 of order 4
        let c2 = AbelianGroup::cyclic(2).unwrap();
        let w = build_wreath(&WreathSpec::regular(c2.clone(), c2))
            .unwrap()
            .group;
        let mut orders: Vec<usize> = (0..8).map(|x| w.element_order(x)).collect();
        orders.sort();
        assert_eq!(orders, vec![1, 2, 2, 2, 2, 2, 4, 4]);
        let d8 = dihedral(4).unwrap().group;
        let mut d_orders: Vec<usize> = (0..8).map(|x| d8.element_order(x)).collect();
        d_orders.sort();
        assert_eq!(orders, d_orders);
    }

    #[test]
    fn bad_wreath_action() {
        let c2 = AbelianGroup::cyclic(2).unwrap();
        let c3 = AbelianGroup::cyclic(3).unwrap();
        let spec = WreathSpec {
            a: c2,
            h: c3,
            omega: 2,
            action: vec![Perm::from_images(vec![1, 0]).unwrap()],
        };
        assert!(build_wreath(&spec).is_err());
    }
}
