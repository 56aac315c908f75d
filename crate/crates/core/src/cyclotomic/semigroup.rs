//! Membership in numerical semigroups generated by primes, and the Lam–Leung obstruction to
//! vanishing sums of roots of unity.

use crate::error::{invalid, Result};

/// Is `k` a nonnegative integer combination of `primes`?
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemigroupQuery {
    k: u64,
    primes: Vec<u64>,
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl SemigroupQuery {
    pub fn new(k: u64, primes: impl IntoIterator<Item = u64>) -> Result<Self> {
        let mut primes: Vec<u64> = primes.into_iter().collect();
        primes.sort_unstable();
        primes.dedup();
        if primes.is_empty() {
            return invalid("semigroup query needs at least one prime");
        }
        if let Some(p) = primes.iter().find(|p| !is_prime(**p)) {
            return invalid(format!("{p} is not prime"));
        }
        Ok(SemigroupQuery { k, primes })
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }
}

pub fn semigroup_member(q: &SemigroupQuery) -> bool {
    in_prime_semigroup(q.k, &q.primes)
}

/// Reachability table over 0..=k. An empty generator set only reaches 0.
pub fn in_prime_semigroup(k: u64, generators: &[u64]) -> bool {
    if k == 0 {
        return true;
    }
    let k = k as usize;
    let mut reach = vec![false; k + 1];
    reach[0] = true;
    for i in 1..=k {
        reach[i] = generators
            .iter()
            .any(|&g| g as usize <= i && g > 0 && reach[i - g as usize]);
    }
    reach[k]
}

/// Distinct prime factors, ascending. `prime_factors(1)` is empty.
pub fn prime_factors(mut m: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= m {
        if m.is_multiple_of(d) {
            out.push(d);
            while m.is_multiple_of(d) {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        out.push(m);
    }
    out
}

/// True when no k-term sum of m-th roots of unity can vanish, because k lies outside
/// N₀⟨Prime(m)⟩. False means the criterion says nothing.
pub fn lam_leung_certifies_nonzero(k: u64, m: u64) -> bool {
    !in_prime_semigroup(k, &prime_factors(m))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn membership_examples() {
        let q = |k| semigroup_member(&SemigroupQuery::new(k, [3, 5]).unwrap());
        assert!(!q(2));
        assert!(q(8));
        assert!(!q(7));
        assert!(q(0));
        assert!(q(6));
        assert!(q(9));
        // every k >= (3-1)(5-1) is representable
        assert!((8..40).all(q));
    }

    #[test]
    fn query_validation() {
        assert!(SemigroupQuery::new(3, []).is_err());
        assert!(SemigroupQuery::new(3, [4]).is_err());
        assert_eq!(SemigroupQuery::new(3, [5, 3, 5]).unwrap().primes(), &[3, 5]);
    }

    #[test]
    fn membership_matches_brute_force() {
        let primes = [2u64, 3, 5, 7];
        for mask in 1u32..16 {
            let gens: Vec<u64> = (0..4)
                .filter(|i| mask & (1 << i) != 0)
                .map(|i| primes[i])
                .collect();
            for k in 0..30u64 {
                let brute = (0..=k / 2)
                    .flat_map(|a| (0..=k / 3).map(move |b| (a, b)))
                    .flat_map(|(a, b)| (0..=k / 5).map(move |c| (a, b, c)))
                    .flat_map(|(a, b, c)| (0..=k / 7).map(move |d| (a, b, c, d)))
                    .any(|(a, b, c, d)| {
                        let coef = [a, b, c, d];
                        let mut total = 0;
                        for i in 0..4 {
                            if mask & (1 << i) == 0 && coef[i] != 0 {
                                return false;
                            }
                            total += coef[i] * primes[i];
                        }
                        total == k
                    });
                assert_eq!(in_prime_semigroup(k, &gens), brute, "k={k} gens={gens:?}");
            }
        }
    }

    #[test]
    fn lam_leung_examples() {
        assert!(lam_leung_certifies_nonzero(2, 15));
        assert!(!lam_leung_certifies_nonzero(3, 3));
        assert!(lam_leung_certifies_nonzero(7, 15));
        assert!(lam_leung_certifies_nonzero(1, 1));
        assert_eq!(prime_factors(360), vec![2, 3, 5]);
        assert!(prime_factors(1).is_empty());
    }
}
