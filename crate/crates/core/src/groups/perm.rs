use serde::Serialize;

use super::semidirect::{FiniteGroup, SemidirectGroup};
use super::subgroups::generating_set;
use crate::error::{invalid, Result};

/// A permutation of {0, …, m-1}, stored as the image of each point.
///
/// Products compose left to right: `p.then(q)` applies `p` first. With this convention
/// α ↦ ασ, (ασ)_i = α_{σ⁻¹(i)}, is a right action.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Perm(Vec<u32>);

impl Perm {
    pub fn identity(m: usize) -> Self {
        Perm((0..m as u32).collect())
    }

    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let m = images.len();
        let mut seen = vec![false; m];
        for &i in &images {
            if i as usize >= m || std::mem::replace(&mut seen[i as usize], true) {
                return invalid(format!("{images:?} is not a permutation of 0..{m}"));
            }
        }
        Ok(Perm(images))
    }

    /// From images of 1..=m.
    pub fn from_one_based(images: &[u32]) -> Result<Self> {
        if images.contains(&0) {
            return invalid(format!("{images:?}: points are numbered from 1"));
        }
        Self::from_images(images.iter().map(|i| i - 1).collect())
    }

    pub fn from_fn(m: usize, f: impl Fn(usize) -> usize) -> Result<Self> {
        Self::from_images((0..m).map(|i| f(i) as u32).collect())
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i] as usize
    }

    pub fn images(&self) -> &[u32] {
        &self.0
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &Perm) -> Perm {
        Perm(self.0.iter().map(|&i| next.0[i as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut out = vec![0; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            out[j as usize] = i as u32;
        }
        Perm(out)
    }

    pub fn pow(&self, k: u32) -> Perm {
        (0..k).fold(Perm::identity(self.degree()), |acc, _| acc.then(self))
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, j)| i == *j as usize)
    }

    /// Number of cycles, fixed points included.
    pub fn cycle_count(&self) -> usize {
        self.cycle_type().len()
    }

    /// Cycle lengths in descending order.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut seen = vec![false; self.0.len()];
        let mut out = Vec::new();
        for start in 0..self.0.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.0[i] as usize;
                len += 1;
            }
            out.push(len);
        }
        out.sort_unstable_by(|a, b| b.cmp(a));
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RepKind {
    Natural,
    Regular,
    Explicit,
}

/// A homomorphism G → S_m, materialized on every element.
#[derive(Debug, Clone)]
pub struct PermRep {
    degree: usize,
    images: Vec<Perm>,
    kind: RepKind,
    faithful: bool,
}

/// Pairwise homomorphism check up to this order; above it, products with a generating set.
const FULL_HOM_CHECK: usize = 200;

impl PermRep {
    /// Builds the representation from one permutation per group element and checks
    /// π(xy) = π(x)π(y).
    pub fn from_element_images(
        g: &impl FiniteGroup,
        images: Vec<Perm>,
        kind: RepKind,
    ) -> Result<Self> {
        if images.len() != g.order() {
            return invalid(format!(
                "{} images for a group of order {}",
                images.len(),
                g.order()
            ));
        }
        let degree = images.first().map_or(0, Perm::degree);
        if images.iter().any(|p| p.degree() != degree) {
            return invalid("permutation images have mixed degrees");
        }
        let right: Vec<usize> = if g.order() <= FULL_HOM_CHECK {
            (0..g.order()).collect()
        } else {
            generating_set(g)
        };
        for x in 0..g.order() {
            for &y in &right {
                if images[g.mul(x, y)] != images[x].then(&images[y]) {
                    return invalid(format!(
                        "not a homomorphism: image of element {} times element {y} differs from the product of images",
                        x
                    ));
                }
            }
        }
        let faithful = images.iter().skip(1).all(|p| !p.is_identity());
        Ok(PermRep {
            degree,
            images,
            kind,
            faithful,
        })
    }

    /// Extends generator images: π(a, h) = π(a, e)·π(e, h), with π(a, e) the product of the
    /// A-generator images raised to the coordinates of a.
    pub fn from_generators(
        g: &SemidirectGroup,
        a_gens: &[Perm],
        h_gens: &[Perm],
        kind: RepKind,
    ) -> Result<Self> {
        if a_gens.len() != g.a().rank() || h_gens.len() != g.h().rank() {
            return invalid(format!(
                "expected {} A-generator and {} H-generator permutations, got {} and {}",
                g.a().rank(),
                g.h().rank(),
                a_gens.len(),
                h_gens.len()
            ));
        }
        let m = a_gens
            .iter()
            .chain(h_gens)
            .map(Perm::degree)
            .next()
            .unwrap_or(1);
        if a_gens.iter().chain(h_gens).any(|p| p.degree() != m) {
            return invalid("generator permutations have mixed degrees");
        }
        let word = |coords: Vec<u32>, gens: &[Perm]| {
            coords
                .iter()
                .zip(gens)
                .fold(Perm::identity(m), |acc, (k, p)| acc.then(&p.pow(*k)))
        };
        let images = (0..g.order())
            .map(|x| {
                let (ac, hc) = g.coords(x);
                word(ac, a_gens).then(&word(hc, h_gens))
            })
            .collect();
        Self::from_element_images(g, images, kind)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Order of the represented group.
    pub fn group_order(&self) -> usize {
        self.images.len()
    }

    pub fn image(&self, g: usize) -> &Perm {
        &self.images[g]
    }

    pub fn kind(&self) -> RepKind {
        self.kind
    }

    pub fn is_faithful(&self) -> bool {
        self.faithful
    }

    pub fn kernel(&self) -> Vec<usize> {
        (0..self.images.len())
            .filter(|&x| self.images[x].is_identity())
            .collect()
    }
}

/// Right-regular representation: element g sends the point x to x·g.
pub fn regular_rep(g: &impl FiniteGroup) -> PermRep {
    let n = g.order();
    let images = (0..n)
        .map(|y| Perm((0..n).map(|x| g.mul(x, y) as u32).collect()))
        .collect();
    PermRep {
        degree: n,
        images,
        kind: RepKind::Regular,
        faithful: true,
    }
}
