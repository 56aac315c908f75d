//! Cyclotomic polynomials and the polynomial helpers used for reduction and inversion.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Largest conductor accepted by [`super::CycloNum`].
pub const MAX_CONDUCTOR: u32 = 10_000;

/// Φ_N with integer coefficients, lowest degree first. Monic, length φ(N) + 1.
#[derive(Debug)]
pub struct CycloPoly {
    pub coeffs: Vec<i64>,
    /// `(j, c)` for every nonzero coefficient below the leading one.
    pub(crate) tail: Vec<(usize, i64)>,
}

impl CycloPoly {
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }
}

type Cache = RwLock<HashMap<u32, Arc<CycloPoly>>>;

static CACHE: OnceLock<Cache> = OnceLock::new();

/// Returns Φ_n, computing it from x^n - 1 and the Φ_d of the proper divisors on first use.
///
/// The cache is filled at most once per key; concurrent fills for the same key compute the same
/// polynomial and the first insert wins.
pub fn cyclotomic_poly(n: u32) -> Arc<CycloPoly> {
    assert!(n >= 1, "cyclotomic polynomial of order 0");
    let cache = CACHE.get_or_init(Default::default);
    if let Some(p) = cache.read().expect("cyclotomic cache poisoned").get(&n) {
        return p.clone();
    }

    let n_us = n as usize;
    let mut num = vec![0i128; n_us + 1];
    num[0] = -1;
    num[n_us] = 1;
    for d in 1..n {
        if n.is_multiple_of(d) {
            let phi_d = cyclotomic_poly(d);
            num = exact_div_monic(&num, &phi_d.coeffs);
        }
    }
    let coeffs: Vec<i64> = num
        .into_iter()
        .map(|c| i64::try_from(c).expect("cyclotomic coefficient overflow"))
        .collect();
    let deg = coeffs.len() - 1;
    let tail = coeffs[..deg]
        .iter()
        .enumerate()
        .filter(|(_, c)| **c != 0)
        .map(|(j, c)| (j, *c))
        .collect();
    let poly = Arc::new(CycloPoly { coeffs, tail });

    let mut w = cache.write().expect("cyclotomic cache poisoned");
    w.entry(n).or_insert(poly).clone()
}

/// Euler's totient, read off as deg Φ_n.
pub fn totient(n: u32) -> usize {
    cyclotomic_poly(n).degree()
}

fn exact_div_monic(num: &[i128], den: &[i64]) -> Vec<i128> {
    let dn = den.len() - 1;
    let mut rem = num.to_vec();
    let qlen = num.len() - dn;
    let mut q = vec![0i128; qlen];
    for i in (0..qlen).rev() {
        let c = rem[i + dn];
        if c == 0 {
            continue;
        }
        q[i] = c;
        for (j, &dj) in den.iter().enumerate() {
            rem[i + j] -= c * dj as i128;
        }
    }
    debug_assert!(rem.iter().all(|c| *c == 0), "non-exact cyclotomic division");
    q
}

/// Reduces a coefficient vector on powers of ζ_n to the basis {1, ζ, …, ζ^(φ(n)-1)}.
pub(crate) fn reduce_int(mut v: Vec<BigInt>, n: u32) -> Vec<BigInt> {
    let n_us = n as usize;
    if v.len() > n_us {
        // ζ^n = 1
        let extra = v.split_off(n_us);
        for (i, c) in extra.into_iter().enumerate() {
            v[i % n_us] += c;
        }
    }
    let phi = cyclotomic_poly(n);
    let deg = phi.degree();
    for i in (deg..v.len()).rev() {
        if v[i].is_zero() {
            continue;
        }
        let c = std::mem::take(&mut v[i]);
        for &(j, pj) in &phi.tail {
            v[i - deg + j] -= &c * pj;
        }
    }
    v.resize(deg, BigInt::zero());
    v
}

/// Σ_k counts[k]·ζ_n^k = 0, decided exactly on machine integers.
///
/// Exponents are taken mod n. Callers must keep the counts small enough that the reduction
/// mod Φ_n stays within i128.
pub fn power_sum_vanishes(n: u32, counts: &[i64]) -> bool {
    assert!(
        (1..=MAX_CONDUCTOR).contains(&n),
        "conductor {n} out of range"
    );
    let v: Vec<i128> = counts.iter().map(|&c| c as i128).collect();
    reduce_i128(v, n).iter().all(|&c| c == 0)
}

fn reduce_i128(mut v: Vec<i128>, n: u32) -> Vec<i128> {
    let n_us = n as usize;
    if v.len() > n_us {
        let extra = v.split_off(n_us);
        for (i, c) in extra.into_iter().enumerate() {
            v[i % n_us] += c;
        }
    }
    let phi = cyclotomic_poly(n);
    let deg = phi.degree();
    for i in (deg..v.len()).rev() {
        let c = std::mem::take(&mut v[i]);
        if c == 0 {
            continue;
        }
        for &(j, pj) in &phi.tail {
            v[i - deg + j] -= c * pj as i128;
        }
    }
    v.resize(deg, 0);
    v
}

// Dense polynomials over Q, lowest degree first, no trailing zeros.

pub(crate) type QPoly = Vec<BigRational>;

fn trim(p: &mut QPoly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn sub_scaled_shifted(a: &mut QPoly, b: &QPoly, c: &BigRational, shift: usize) {
    if a.len() < b.len() + shift {
        a.resize(b.len() + shift, BigRational::zero());
    }
    for (j, bj) in b.iter().enumerate() {
        a[j + shift] -= c * bj;
    }
}

fn divrem(a: &QPoly, b: &QPoly) -> (QPoly, QPoly) {
    let mut r = a.clone();
    trim(&mut r);
    let db = b.len() - 1;
    let lead = &b[db];
    let mut q = vec![BigRational::zero(); r.len().saturating_sub(db)];
    while r.len() > db && !r.is_empty() {
        let shift = r.len() - 1 - db;
        let c = &r[r.len() - 1] / lead;
        sub_scaled_shifted(&mut r, b, &c, shift);
        q[shift] = c;
        trim(&mut r);
    }
    trim(&mut q);
    (q, r)
}

fn mul(a: &QPoly, b: &QPoly) -> QPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            out[i + j] += ai * bj;
        }
    }
    trim(&mut out);
    out
}

fn sub(a: &QPoly, b: &QPoly) -> QPoly {
    let mut out = a.clone();
    if out.len() < b.len() {
        out.resize(b.len(), BigRational::zero());
    }
    for (i, bi) in b.iter().enumerate() {
        out[i] -= bi;
    }
    trim(&mut out);
    out
}

/// Inverse of `a` modulo the irreducible `modulus`, via the extended Euclidean algorithm.
/// Returns `None` when `a` is zero modulo `modulus`.
pub(crate) fn inverse_mod(a: &QPoly, modulus: &QPoly) -> Option<QPoly> {
    let mut a = a.clone();
    trim(&mut a);
    if a.is_empty() {
        return None;
    }
    let (mut r0, mut r1) = (modulus.clone(), a);
    let (mut t0, mut t1): (QPoly, QPoly) = (Vec::new(), vec![BigRational::one()]);
    while !r1.is_empty() {
        let (q, r) = divrem(&r0, &r1);
        let t2 = sub(&t0, &mul(&q, &t1));
        r0 = r1;
        r1 = r;
        t0 = t1;
        t1 = t2;
    }
    if r0.len() != 1 {
        return None;
    }
    let c = r0[0].clone();
    let (_, mut t) = divrem(&t0, modulus);
    for coef in t.iter_mut() {
        *coef /= &c;
    }
    Some(t)
}
