//! Exact arithmetic in cyclotomic fields Q(ζ_N).
//!
//! A [`CycloNum`] is stored in the power basis {1, ζ_N, …, ζ_N^(φ(N)-1)} with a single positive
//! common denominator, so equality and zero tests are coefficient comparisons. Values of
//! different conductors are lifted to the least common multiple before combining.

mod poly;
mod semigroup;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

use crate::error::{invalid, Result};

pub use poly::{cyclotomic_poly, power_sum_vanishes, totient, CycloPoly, MAX_CONDUCTOR};
pub use semigroup::{
    in_prime_semigroup, lam_leung_certifies_nonzero, prime_factors, semigroup_member,
    SemigroupQuery,
};

#[derive(Clone, Debug)]
pub struct CycloNum {
    conductor: u32,
    num: Vec<BigInt>,
    den: BigInt,
}

fn check_conductor(n: u32) -> Result<()> {
    if n == 0 {
        return invalid("conductor must be positive");
    }
    if n > MAX_CONDUCTOR {
        return invalid(format!("conductor {n} exceeds the cap of {MAX_CONDUCTOR}"));
    }
    Ok(())
}

/// Smallest conductor holding both values; panics past the cap.
fn common_conductor(a: u32, b: u32) -> u32 {
    let l = a.lcm(&b);
    assert!(
        l <= MAX_CONDUCTOR,
        "mixed-conductor arithmetic needs conductor {l}, above the cap of {MAX_CONDUCTOR}"
    );
    l
}

impl CycloNum {
    fn from_parts(conductor: u32, num: Vec<BigInt>, den: BigInt) -> Self {
        let mut out = CycloNum {
            conductor,
            num,
            den,
        };
        out.normalize();
        out
    }

    fn normalize(&mut self) {
        debug_assert!(!self.den.is_zero());
        if self.den.is_negative() {
            self.den = -std::mem::take(&mut self.den);
            for c in self.num.iter_mut() {
                *c = -std::mem::take(c);
            }
        }
        let mut g = self.den.clone();
        for c in &self.num {
            if g.is_one() {
                break;
            }
            if !c.is_zero() {
                g = g.gcd(c);
            }
        }
        if self.num.iter().all(Zero::is_zero) {
            self.den = BigInt::one();
            return;
        }
        if !g.is_one() {
            for c in self.num.iter_mut() {
                *c /= &g;
            }
            self.den /= &g;
        }
    }

    pub fn zero(conductor: u32) -> Self {
        let deg = totient(conductor);
        CycloNum {
            conductor,
            num: vec![BigInt::zero(); deg],
            den: BigInt::one(),
        }
    }

    pub fn one(conductor: u32) -> Self {
        Self::from_integer(conductor, 1)
    }

    pub fn from_integer(conductor: u32, k: i64) -> Self {
        let mut z = Self::zero(conductor);
        z.num[0] = BigInt::from(k);
        z
    }

    pub fn from_rational(conductor: u32, r: &BigRational) -> Self {
        let mut z = Self::zero(conductor);
        z.num[0] = r.numer().clone();
        z.den = r.denom().clone();
        z.normalize();
        z
    }

    /// ζ_N^e, for any integer exponent.
    pub fn root_of_unity(conductor: u32, e: i64) -> Result<Self> {
        check_conductor(conductor)?;
        let k = e.rem_euclid(conductor as i64) as usize;
        let mut v = vec![BigInt::zero(); k + 1];
        v[k] = BigInt::one();
        Ok(Self::from_parts(
            conductor,
            poly::reduce_int(v, conductor),
            BigInt::one(),
        ))
    }

    /// Σ counts[i]·ζ_N^i for an integer vector of any length.
    pub fn from_power_counts(conductor: u32, counts: &[i64]) -> Result<Self> {
        check_conductor(conductor)?;
        let v = counts.iter().map(|&c| BigInt::from(c)).collect();
        Ok(Self::from_parts(
            conductor,
            poly::reduce_int(v, conductor),
            BigInt::one(),
        ))
    }

    /// Σ coeffs[i]·ζ_N^i for rational coefficients of any length.
    pub fn from_power_coeffs(conductor: u32, coeffs: &[BigRational]) -> Result<Self> {
        check_conductor(conductor)?;
        let den = coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let v = coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        Ok(Self::from_parts(
            conductor,
            poly::reduce_int(v, conductor),
            den,
        ))
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    /// Coefficients on 1, ζ, …, ζ^(φ(N)-1).
    pub fn coeffs(&self) -> Vec<BigRational> {
        self.num
            .iter()
            .map(|c| BigRational::new(c.clone(), self.den.clone()))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }

    /// `Some(q)` when the value lies in Q.
    pub fn to_rational(&self) -> Option<BigRational> {
        if self.num.iter().skip(1).all(Zero::is_zero) {
            Some(BigRational::new(self.num[0].clone(), self.den.clone()))
        } else {
            None
        }
    }

    pub fn to_integer(&self) -> Option<BigInt> {
        self.to_rational()
            .filter(|r| r.is_integer())
            .map(|r| r.to_integer())
    }

    /// Re-expresses the value in Q(ζ_M) for a multiple M of the current conductor.
    pub fn lift(&self, target: u32) -> Result<Self> {
        check_conductor(target)?;
        if !target.is_multiple_of(self.conductor) {
            return invalid(format!(
                "cannot lift conductor {} to {target}",
                self.conductor
            ));
        }
        if target == self.conductor {
            return Ok(self.clone());
        }
        let step = (target / self.conductor) as usize;
        let mut v = vec![BigInt::zero(); (self.num.len().max(1) - 1) * step + 1];
        for (i, c) in self.num.iter().enumerate() {
            v[i * step] = c.clone();
        }
        Ok(Self::from_parts(
            target,
            poly::reduce_int(v, target),
            self.den.clone(),
        ))
    }

    fn aligned<'a>(
        a: &'a CycloNum,
        b: &'a CycloNum,
    ) -> (
        std::borrow::Cow<'a, CycloNum>,
        std::borrow::Cow<'a, CycloNum>,
    ) {
        use std::borrow::Cow;
        if a.conductor == b.conductor {
            return (Cow::Borrowed(a), Cow::Borrowed(b));
        }
        let n = common_conductor(a.conductor, b.conductor);
        let lift = |x: &'a CycloNum| {
            if x.conductor == n {
                Cow::Borrowed(x)
            } else {
                Cow::Owned(x.lift(n).expect("conductor checked"))
            }
        };
        (lift(a), lift(b))
    }

    fn add_signed(&self, other: &CycloNum, negate: bool) -> CycloNum {
        let (a, b) = Self::aligned(self, other);
        let n = a.conductor;
        if a.den == b.den {
            let num = a
                .num
                .iter()
                .zip(&b.num)
                .map(|(x, y)| if negate { x - y } else { x + y })
                .collect();
            return Self::from_parts(n, num, a.den.clone());
        }
        let num = a
            .num
            .iter()
            .zip(&b.num)
            .map(|(x, y)| {
                let l = x * &b.den;
                let r = y * &a.den;
                if negate {
                    l - r
                } else {
                    l + r
                }
            })
            .collect();
        Self::from_parts(n, num, &a.den * &b.den)
    }

    fn mul_impl(&self, other: &CycloNum) -> CycloNum {
        let (a, b) = Self::aligned(self, other);
        let n = a.conductor;
        if a.is_zero() || b.is_zero() {
            return Self::zero(n);
        }
        let mut v = vec![BigInt::zero(); a.num.len() + b.num.len() - 1];
        for (i, x) in a.num.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.num.iter().enumerate() {
                if !y.is_zero() {
                    v[i + j] += x * y;
                }
            }
        }
        Self::from_parts(n, poly::reduce_int(v, n), &a.den * &b.den)
    }

    pub fn scale(&self, r: &BigRational) -> CycloNum {
        let num = self.num.iter().map(|c| c * r.numer()).collect();
        Self::from_parts(self.conductor, num, &self.den * r.denom())
    }

    pub fn scale_int(&self, k: i64) -> CycloNum {
        self.scale(&BigRational::from_integer(BigInt::from(k)))
    }

    /// Complex conjugate, induced by ζ ↦ ζ^(-1).
    pub fn conj(&self) -> CycloNum {
        let n = self.conductor as usize;
        let mut v = vec![BigInt::zero(); n];
        for (i, c) in self.num.iter().enumerate() {
            v[(n - i) % n] += c;
        }
        Self::from_parts(
            self.conductor,
            poly::reduce_int(v, self.conductor),
            self.den.clone(),
        )
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<CycloNum> {
        if self.is_zero() {
            return None;
        }
        let phi = cyclotomic_poly(self.conductor);
        let modulus: Vec<BigRational> = phi
            .coeffs
            .iter()
            .map(|&c| BigRational::from_integer(c.into()))
            .collect();
        let a: Vec<BigRational> = self
            .num
            .iter()
            .map(|c| BigRational::new(c.clone(), self.den.clone()))
            .collect();
        let t = poly::inverse_mod(&a, &modulus)?;
        Self::from_power_coeffs(self.conductor, &t).ok()
    }

    pub fn checked_div(&self, other: &CycloNum) -> Option<CycloNum> {
        other.inv().map(|i| self * &i)
    }

    /// Numerical value at ζ_N = exp(2πi/N).
    pub fn to_complex(&self) -> Complex64 {
        let den = self.den.to_f64().unwrap_or(f64::INFINITY);
        let n = self.conductor as f64;
        self.num
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| {
                let t = std::f64::consts::TAU * i as f64 / n;
                Complex64::from_polar(c.to_f64().unwrap_or(f64::NAN) / den, t)
            })
            .sum()
    }
}

impl PartialEq for CycloNum {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            return self.den == other.den && self.num == other.num;
        }
        (self - other).is_zero()
    }
}

impl Eq for CycloNum {}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl $tr<&CycloNum> for &CycloNum {
            type Output = CycloNum;
            fn $method(self, rhs: &CycloNum) -> CycloNum {
                let f: fn(&CycloNum, &CycloNum) -> CycloNum = $body;
                f(self, rhs)
            }
        }
        impl $tr<CycloNum> for CycloNum {
            type Output = CycloNum;
            fn $method(self, rhs: CycloNum) -> CycloNum {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&CycloNum> for CycloNum {
            type Output = CycloNum;
            fn $method(self, rhs: &CycloNum) -> CycloNum {
                (&self).$method(rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| a.add_signed(b, false));
forward_binop!(Sub, sub, |a, b| a.add_signed(b, true));
forward_binop!(Mul, mul, |a, b| a.mul_impl(b));

impl Neg for &CycloNum {
    type Output = CycloNum;
    fn neg(self) -> CycloNum {
        CycloNum {
            conductor: self.conductor,
            num: self.num.iter().map(|c| -c).collect(),
            den: self.den.clone(),
        }
    }
}

impl Neg for CycloNum {
    type Output = CycloNum;
    fn neg(self) -> CycloNum {
        -&self
    }
}

impl fmt::Display for CycloNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = if c.is_negative() {
                ("-", -c)
            } else {
                ("+", c.clone())
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    write!(f, "z{}", self.conductor)?;
                    if i > 1 {
                        write!(f, "^{i}")?;
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Integer that serializes as a JSON number when it fits in i64, otherwise as a decimal string.
pub(crate) struct JsonInt<'a>(pub &'a BigInt);

impl Serialize for JsonInt<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self.0.to_i64() {
            Some(v) => s.serialize_i64(v),
            None => s.serialize_str(&self.0.to_string()),
        }
    }
}

/// Exact rational as a `[numerator, denominator]` pair.
pub(crate) struct JsonRational<'a>(pub &'a BigRational);

impl Serialize for JsonRational<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        (JsonInt(self.0.numer()), JsonInt(self.0.denom())).serialize(s)
    }
}

impl Serialize for CycloNum {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let coeffs = self.coeffs();
        let pairs: Vec<JsonRational<'_>> = coeffs.iter().map(JsonRational).collect();
        let mut st = s.serialize_struct("CycloNum", 2)?;
        st.serialize_field("conductor", &self.conductor)?;
        st.serialize_field("coeffs", &pairs)?;
        st.end()
    }
}
