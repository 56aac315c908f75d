use num_integer::Integer;
use serde::Serialize;

use crate::error::{invalid, Error, Result};

/// Hard cap on the number of elements any enumerated group may have.
pub const MAX_ELEMENTS: usize = 2000;

/// Z_{n_1} × … × Z_{n_k}, presented by its cyclic factors as given.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AbelianGroup {
    factors: Vec<u32>,
    #[serde(skip)]
    order: usize,
    #[serde(skip)]
    exponent: u32,
}

/// Coordinates of an element, each reduced modulo its factor.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct AbElement(pub Vec<u32>);

impl AbelianGroup {
    pub fn new(factors: Vec<u32>) -> Result<Self> {
        if let Some(i) = factors.iter().position(|n| *n == 0) {
            return invalid(format!("factor {i} is zero; cyclic factors must be >= 1"));
        }
        let mut order: usize = 1;
        for n in &factors {
            order = order
                .checked_mul(*n as usize)
                .filter(|o| *o <= MAX_ELEMENTS)
                .ok_or(Error::Budget {
                    what: "abelian group order",
                    needed: factors.iter().map(|n| *n as u128).product(),
                    limit: MAX_ELEMENTS as u128,
                })?;
        }
        let exponent = factors.iter().fold(1u32, |acc, n| acc.lcm(n));
        Ok(AbelianGroup {
            factors,
            order,
            exponent,
        })
    }

    pub fn cyclic(n: u32) -> Result<Self> {
        Self::new(vec![n])
    }

    pub fn trivial() -> Self {
        Self::new(Vec::new()).expect("trivial group")
    }

    pub fn factors(&self) -> &[u32] {
        &self.factors
    }

    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    /// Mixed-radix coordinates; the first factor is the most significant digit.
    pub fn coords(&self, mut idx: usize) -> Vec<u32> {
        let mut out = vec![0; self.factors.len()];
        for (slot, n) in out.iter_mut().zip(&self.factors).rev() {
            *slot = (idx % *n as usize) as u32;
            idx /= *n as usize;
        }
        out
    }

    pub fn index(&self, coords: &[u32]) -> usize {
        debug_assert_eq!(coords.len(), self.factors.len());
        coords
            .iter()
            .zip(&self.factors)
            .fold(0usize, |acc, (c, n)| acc * *n as usize + (*c % *n) as usize)
    }

    /// Validates and reduces a coordinate tuple.
    pub fn element(&self, coords: &[i64]) -> Result<AbElement> {
        if coords.len() != self.factors.len() {
            return invalid(format!(
                "element has {} coordinates, group has {} factors",
                coords.len(),
                self.factors.len()
            ));
        }
        Ok(AbElement(
            coords
                .iter()
                .zip(&self.factors)
                .map(|(c, n)| c.rem_euclid(*n as i64) as u32)
                .collect(),
        ))
    }

    /// Index of the i-th standard generator.
    pub fn generator(&self, i: usize) -> usize {
        let mut c = vec![0; self.rank()];
        c[i] = 1;
        self.index(&c)
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        let (ca, cb) = (self.coords(a), self.coords(b));
        let sum: Vec<u32> = ca
            .iter()
            .zip(&cb)
            .zip(&self.factors)
            .map(|((x, y), n)| (x + y) % n)
            .collect();
        self.index(&sum)
    }

    pub fn neg(&self, a: usize) -> usize {
        let c: Vec<u32> = self
            .coords(a)
            .iter()
            .zip(&self.factors)
            .map(|(x, n)| (n - x) % n)
            .collect();
        self.index(&c)
    }

    /// k·a
    pub fn times(&self, a: usize, k: u64) -> usize {
        let c: Vec<u32> = self
            .coords(a)
            .iter()
            .zip(&self.factors)
            .map(|(x, n)| ((*x as u64 * k) % *n as u64) as u32)
            .collect();
        self.index(&c)
    }

    pub fn element_order(&self, a: usize) -> u32 {
        self.coords(a)
            .iter()
            .zip(&self.factors)
            .fold(1u32, |acc, (x, n)| acc.lcm(&(n / n.gcd(x))))
    }
}

/// An automorphism of an abelian group, given by the images of the standard generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Automorphism {
    gen_images: Vec<AbElement>,
    table: Vec<u32>,
}

impl Automorphism {
    pub fn identity(a: &AbelianGroup) -> Self {
        let gen_images = (0..a.rank())
            .map(|i| AbElement(a.coords(a.generator(i))))
            .collect();
        Automorphism {
            gen_images,
            table: (0..a.order() as u32).collect(),
        }
    }

    /// Checks that the generator images define a bijective endomorphism.
    pub fn new(a: &AbelianGroup, gen_images: Vec<AbElement>) -> Result<Self> {
        if gen_images.len() != a.rank() {
            return invalid(format!(
                "expected {} generator images, got {}",
                a.rank(),
                gen_images.len()
            ));
        }
        let mut img_idx = Vec::with_capacity(a.rank());
        for (i, img) in gen_images.iter().enumerate() {
            if img.0.len() != a.rank() || img.0.iter().zip(a.factors()).any(|(c, n)| c >= n) {
                return invalid(format!("image of generator {i} is not a reduced element"));
            }
            let idx = a.index(&img.0);
            let n_i = a.factors()[i];
            if !n_i.is_multiple_of(a.element_order(idx)) {
                return invalid(format!(
                    "image of generator {i} has order {} not dividing {n_i}; map is not a homomorphism",
                    a.element_order(idx)
                ));
            }
            img_idx.push(idx);
        }
        let mut table = Vec::with_capacity(a.order());
        for x in 0..a.order() {
            let img = a
                .coords(x)
                .iter()
                .zip(&img_idx)
                .fold(0, |acc, (c, g)| a.add(acc, a.times(*g, *c as u64)));
            table.push(img as u32);
        }
        let mut seen = vec![false; a.order()];
        for &t in &table {
            if std::mem::replace(&mut seen[t as usize], true) {
                return invalid("generator images do not define a bijection");
            }
        }
        Ok(Automorphism { gen_images, table })
    }

    pub fn gen_images(&self) -> &[AbElement] {
        &self.gen_images
    }

    pub fn apply(&self, x: usize) -> usize {
        self.table[x] as usize
    }

    /// `self ∘ inner`
    pub fn compose(&self, inner: &Automorphism, a: &AbelianGroup) -> Automorphism {
        let table: Vec<u32> = inner
            .table
            .iter()
            .map(|&x| self.table[x as usize])
            .collect();
        let gen_images = (0..a.rank())
            .map(|i| AbElement(a.coords(table[a.generator(i)] as usize)))
            .collect();
        Automorphism { gen_images, table }
    }

    pub fn pow(&self, k: u32, a: &AbelianGroup) -> Automorphism {
        (0..k).fold(Automorphism::identity(a), |acc, _| self.compose(&acc, a))
    }

    pub fn is_identity(&self) -> bool {
        self.table.iter().enumerate().all(|(i, t)| i == *t as usize)
    }

    pub(crate) fn table(&self) -> &[u32] {
        &self.table
    }
}

/// φ: H → Aut(A), given on the standard generators of H.
#[derive(Debug, Clone)]
pub struct ActionHom {
    domain: AbelianGroup,
    codomain: AbelianGroup,
    images: Vec<Automorphism>,
}

impl ActionHom {
    pub fn new(a: &AbelianGroup, h: &AbelianGroup, images: Vec<Automorphism>) -> Result<Self> {
        if images.len() != h.rank() {
            return invalid(format!(
                "phi has {} generator images, H has {} generators",
                images.len(),
                h.rank()
            ));
        }
        for (j, img) in images.iter().enumerate() {
            if !img.pow(h.factors()[j], a).is_identity() {
                return invalid(format!(
                    "phi of generator {j} raised to its order {} is not the identity",
                    h.factors()[j]
                ));
            }
        }
        for (i, x) in images.iter().enumerate() {
            for (j, y) in images.iter().enumerate().skip(i + 1) {
                if x.compose(y, a) != y.compose(x, a) {
                    return invalid(format!(
                        "phi images of generators {i} and {j} do not commute"
                    ));
                }
            }
        }
        Ok(ActionHom {
            domain: h.clone(),
            codomain: a.clone(),
            images,
        })
    }

    /// The trivial action.
    pub fn trivial(a: &AbelianGroup, h: &AbelianGroup) -> Self {
        ActionHom {
            domain: h.clone(),
            codomain: a.clone(),
            images: vec![Automorphism::identity(a); h.rank()],
        }
    }

    pub fn domain(&self) -> &AbelianGroup {
        &self.domain
    }

    pub fn images(&self) -> &[Automorphism] {
        &self.images
    }

    /// φ_h for the element of H with index `h`.
    pub fn at(&self, h: usize) -> Automorphism {
        let a = &self.codomain;
        self.domain
            .coords(h)
            .iter()
            .zip(&self.images)
            .fold(Automorphism::identity(a), |acc, (k, img)| {
                img.pow(*k, a).compose(&acc, a)
            })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_and_coordinates() {
        let g = AbelianGroup::new(vec![2, 3]).unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(g.exponent(), 6);
        let all: std::collections::BTreeSet<Vec<u32>> = (0..6).map(|i| g.coords(i)).collect();
        assert_eq!(all.len(), 6);
        assert_eq!(g.coords(4), vec![1, 1]);
        assert_eq!(g.index(&[1, 1]), 4);
        assert_eq!(g.add(4, 4), g.index(&[0, 2]));
        assert_eq!(g.add(4, g.neg(4)), 0);
        assert_eq!(g.element_order(g.index(&[1, 1])), 6);
        assert_eq!(AbelianGroup::trivial().order(), 1);
        assert!(AbelianGroup::new(vec![3, 0]).is_err());
        assert!(matches!(
            AbelianGroup::new(vec![50, 50]),
            Err(Error::Budget { .. })
        ));
    }

    #[test]
    fn automorphism_validation() {
        let c5 = AbelianGroup::cyclic(5).unwrap();
        let sq = Automorphism::new(&c5, vec![AbElement(vec![2])]).unwrap();
        assert_eq!(sq.apply(3), 1);
        assert!(sq.pow(4, &c5).is_identity());
        assert!(!sq.pow(2, &c5).is_identity());
        assert!(Automorphism::new(&c5, vec![AbElement(vec![0])]).is_err());

        let c4 = AbelianGroup::cyclic(4).unwrap();
        assert!(Automorphism::new(&c4, vec![AbElement(vec![2])]).is_err());

        // Z2 x Z4: the image of the order-2 generator must have order dividing 2
        let g = AbelianGroup::new(vec![2, 4]).unwrap();
        let bad = Automorphism::new(&g, vec![AbElement(vec![0, 1]), AbElement(vec![1, 0])]);
        assert!(bad.is_err());
        let swap_ok = Automorphism::new(&g, vec![AbElement(vec![1, 2]), AbElement(vec![1, 1])]);
        assert!(swap_ok.is_ok());
    }

    #[test]
    fn action_hom_validation() {
        let c7 = AbelianGroup::cyclic(7).unwrap();
        let c3 = AbelianGroup::cyclic(3).unwrap();
        let by2 = Automorphism::new(&c7, vec![AbElement(vec![2])]).unwrap();
        let phi = ActionHom::new(&c7, &c3, vec![by2]).unwrap();
        assert_eq!(phi.at(2).apply(1), 4);
        let by3 = Automorphism::new(&c7, vec![AbElement(vec![3])]).unwrap();
        assert!(ActionHom::new(&c7, &c3, vec![by3.clone()]).is_err());
        assert!(ActionHom::new(&c7, &c3, vec![]).is_err());
    }
}
