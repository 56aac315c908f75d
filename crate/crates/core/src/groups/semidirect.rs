use serde::Serialize;

use super::abelian::{AbelianGroup, ActionHom, MAX_ELEMENTS};
use crate::error::{Error, Result};

/// Finite group whose elements are the indices `0..order()`, with 0 the identity.
pub trait FiniteGroup {
    fn order(&self) -> usize;
    fn mul(&self, x: usize, y: usize) -> usize;
    fn inv(&self, x: usize) -> usize;

    fn identity(&self) -> usize {
        0
    }

    /// g x g⁻¹
    fn conjugate(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }
}

/// An element (a, h) of A ⋊ H by group indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct GElem {
    pub a: usize,
    pub h: usize,
}

/// A ⋊_φ H with (a₁,h₁)(a₂,h₂) = (a₁·φ_{h₁}(a₂), h₁h₂).
///
/// Element indices follow the lexicographic order of (a-coordinates, h-coordinates), so the
/// index of (a, h) is `a * |H| + h` and the smallest index in any set is its lex-min element.
#[derive(Debug, Clone)]
pub struct SemidirectGroup {
    a: AbelianGroup,
    h: AbelianGroup,
    phi: ActionHom,
    phi_tables: Vec<Vec<u32>>,
    mul: Vec<u32>,
    inv: Vec<u32>,
}

impl SemidirectGroup {
    pub fn new(a: AbelianGroup, h: AbelianGroup, phi: ActionHom) -> Result<Self> {
        let order = a.order() * h.order();
        if order > MAX_ELEMENTS {
            return Err(Error::Budget {
                what: "group order",
                needed: order as u128,
                limit: MAX_ELEMENTS as u128,
            });
        }
        if phi.domain() != &h {
            return Err(Error::Invalid("phi is defined on a different H".into()));
        }
        let phi_tables: Vec<Vec<u32>> =
            (0..h.order()).map(|k| phi.at(k).table().to_vec()).collect();
        let (na, nh) = (a.order(), h.order());
        let mut mul = Vec::with_capacity(order * order);
        for x in 0..order {
            let (a1, h1) = (x / nh, x % nh);
            for y in 0..order {
                let (a2, h2) = (y / nh, y % nh);
                let a3 = a.add(a1, phi_tables[h1][a2] as usize);
                let h3 = h.add(h1, h2);
                mul.push((a3 * nh + h3) as u32);
            }
        }
        let mut inv = vec![0u32; order];
        for x in 0..order {
            let (ax, hx) = (x / nh, x % nh);
            let hi = h.neg(hx);
            let ai = phi_tables[hi][a.neg(ax)] as usize;
            inv[x] = (ai * nh + hi) as u32;
        }
        debug_assert!(na * nh == order);
        let g = SemidirectGroup {
            a,
            h,
            phi,
            phi_tables,
            mul,
            inv,
        };
        g.check_structure()?;
        Ok(g)
    }

    /// Direct product A × H.
    pub fn direct(a: AbelianGroup, h: AbelianGroup) -> Result<Self> {
        let phi = ActionHom::trivial(&a, &h);
        Self::new(a, h, phi)
    }

    fn check_structure(&self) -> Result<()> {
        let nh = self.h.order();
        for x in 0..self.order() {
            if self.mul(x, self.inv(x)) != 0 || self.mul(self.inv(x), x) != 0 {
                return Err(Error::Consistency(format!("inverse law fails at {x}")));
            }
        }
        // {(a, e)} must be normal: g (a,e) g⁻¹ has trivial H-part
        for a in 0..self.a.order() {
            for g in 0..self.order() {
                if self.conjugate(a * nh, g) % nh != 0 {
                    return Err(Error::Consistency("A is not normal in A ⋊ H".into()));
                }
            }
        }
        Ok(())
    }

    pub fn a(&self) -> &AbelianGroup {
        &self.a
    }

    pub fn h(&self) -> &AbelianGroup {
        &self.h
    }

    pub fn phi(&self) -> &ActionHom {
        &self.phi
    }

    /// φ_h(a) on group indices.
    pub fn act(&self, h: usize, a: usize) -> usize {
        self.phi_tables[h][a] as usize
    }

    pub fn elem(&self, idx: usize) -> GElem {
        let nh = self.h.order();
        GElem {
            a: idx / nh,
            h: idx % nh,
        }
    }

    pub fn index_of(&self, e: GElem) -> usize {
        e.a * self.h.order() + e.h
    }

    /// Coordinates of an element as (a-coords, h-coords).
    pub fn coords(&self, idx: usize) -> (Vec<u32>, Vec<u32>) {
        let e = self.elem(idx);
        (self.a.coords(e.a), self.h.coords(e.h))
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order()).all(|x| (0..self.order()).all(|y| self.mul(x, y) == self.mul(y, x)))
    }

    pub fn element_order(&self, x: usize) -> usize {
        let mut k = 1;
        let mut y = x;
        while y != 0 {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }
}

impl FiniteGroup for SemidirectGroup {
    fn order(&self) -> usize {
        self.inv.len()
    }

    fn mul(&self, x: usize, y: usize) -> usize {
        self.mul[x * self.inv.len() + y] as usize
    }

    fn inv(&self, x: usize) -> usize {
        self.inv[x] as usize
    }
}
