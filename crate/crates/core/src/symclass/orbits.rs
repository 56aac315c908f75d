use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

use super::multi::{act_unchecked, index_count, MultiIndex};
use super::TensorSetting;
use crate::cyclotomic::{CycloNum, JsonRational};
use crate::error::{Error, Result};
use crate::groups::FiniteGroup;
use crate::par;

/// Default cap on |Γ_{m,n}| for exhaustive scans.
pub const INDEX_BUDGET: u128 = 10_000_000;

#[derive(Debug, Clone, PartialEq)]
pub struct OrbitRecord {
    /// Lex-min member of the orbit.
    pub rep: MultiIndex,
    pub orbit_size: usize,
    /// G_α, sorted element indices.
    pub stabilizer: Vec<usize>,
    /// Σ_{h∈G_α} χ(h).
    pub stab_char_sum: CycloNum,
    pub in_delta_bar: bool,
    /// s_α = χ(e)/|G_α| · Σ_{h∈G_α} χ(h), the dimension of the orbital subspace.
    pub s_alpha: BigRational,
}

impl Serialize for OrbitRecord {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("OrbitRecord", 6)?;
        st.serialize_field("rep", &self.rep)?;
        st.serialize_field("orbit_size", &self.orbit_size)?;
        st.serialize_field("stabilizer_order", &self.stabilizer.len())?;
        st.serialize_field("stab_char_sum", &self.stab_char_sum)?;
        st.serialize_field("in_delta_bar", &self.in_delta_bar)?;
        st.serialize_field("s_alpha", &JsonRational(&self.s_alpha))?;
        st.end()
    }
}

struct Bitset(Vec<u64>);

impl Bitset {
    fn new(len: u64) -> Self {
        Bitset(vec![0; len.div_ceil(64) as usize])
    }

    /// Sets the bit and reports whether it was already set.
    fn test_and_set(&mut self, i: u64) -> bool {
        let (w, b) = ((i / 64) as usize, i % 64);
        let old = self.0[w] >> b & 1 == 1;
        self.0[w] |= 1 << b;
        old
    }

    fn get(&self, i: u64) -> bool {
        self.0[(i / 64) as usize] >> (i % 64) & 1 == 1
    }
}

impl<G: FiniteGroup + Sync> TensorSetting<'_, G> {
    /// G_α.
    pub fn stabilizer(&self, alpha: &MultiIndex) -> Vec<usize> {
        (0..self.group.order())
            .filter(|&g| act_unchecked(alpha, g, self.rep) == *alpha)
            .collect()
    }

    /// The record of the orbit through `alpha`; `rep` is `alpha` itself, not the lex-min member.
    pub fn record_for(&self, alpha: &MultiIndex) -> Result<OrbitRecord> {
        self.check_index(alpha)?;
        let stab = self.stabilizer(alpha);
        self.make_record(alpha.clone(), stab)
    }

    fn make_record(&self, rep: MultiIndex, stabilizer: Vec<usize>) -> Result<OrbitRecord> {
        let stab_char_sum = stabilizer
            .iter()
            .fold(CycloNum::zero(1), |acc, &h| acc + &self.chi[h]);
        let s = (&stab_char_sum * &self.chi[self.group.identity()])
            .scale(&BigRational::new(1.into(), BigInt::from(stabilizer.len())));
        let s_alpha = s.to_rational().ok_or_else(|| {
            Error::Consistency(format!("orbital dimension at {rep} is not rational: {s}"))
        })?;
        if s_alpha.is_negative() {
            return Err(Error::Consistency(format!(
                "orbital dimension at {rep} is negative: {s_alpha}"
            )));
        }
        Ok(OrbitRecord {
            orbit_size: self.group.order() / stabilizer.len(),
            in_delta_bar: !stab_char_sum.is_zero(),
            rep,
            stabilizer,
            stab_char_sum,
            s_alpha,
        })
    }

    /// One record per orbit of G on Γ_{m,n}, in lex order of representatives.
    pub fn orbit_scan(&self, budget: u128) -> Result<Vec<OrbitRecord>> {
        let (m, n) = (self.m(), self.n);
        let total = index_count(m, n, budget)?;
        let mut seen = Bitset::new(total);
        let mut found = Vec::new();
        for code in 0..total {
            if seen.get(code) {
                continue;
            }
            let alpha = MultiIndex::decode(code, m, n);
            let mut stab = Vec::new();
            for g in 0..self.group.order() {
                let beta = act_unchecked(&alpha, g, self.rep);
                seen.test_and_set(beta.encode());
                if beta == alpha {
                    stab.push(g);
                }
            }
            found.push((alpha, stab));
        }
        par::map(&found, |(alpha, stab)| {
            self.make_record(alpha.clone(), stab.clone())
        })
        .into_iter()
        .collect()
    }

    /// dim V_χ(G) = χ(e)/|G| · Σ_σ χ(σ) n^{c(σ)}.
    pub fn dim(&self) -> Result<BigInt> {
        let mut by_cycles = vec![CycloNum::zero(1); self.m() + 1];
        for g in 0..self.group.order() {
            let c = self.rep.image(g).cycle_count();
            by_cycles[c] = &by_cycles[c] + &self.chi[g];
        }
        let mut total = CycloNum::zero(1);
        for (c, v) in by_cycles.iter().enumerate() {
            if !v.is_zero() {
                let power = BigRational::from_integer(BigInt::from(self.n).pow(c as u32));
                total = total + v.scale(&power);
            }
        }
        let total = (total * &self.chi[self.group.identity()]).scale(&BigRational::new(
            1.into(),
            BigInt::from(self.group.order()),
        ));
        match total.to_integer() {
            Some(d) if !d.is_negative() => Ok(d),
            _ => Err(Error::Consistency(format!(
                "dimension formula gives {total}, not a nonnegative integer"
            ))),
        }
    }
}

/// Σ_{α∈Δ̄} s_α.
pub fn delta_bar_total(records: &[OrbitRecord]) -> BigRational {
    records
        .iter()
        .filter(|r| r.in_delta_bar)
        .fold(BigRational::zero(), |acc, r| acc + &r.s_alpha)
}

/// Columns: rep, orbit_size, stabilizer_order, s_alpha, in_delta_bar.
pub fn orbits_to_csv(records: &[OrbitRecord]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record([
        "rep",
        "orbit_size",
        "stabilizer_order",
        "s_alpha",
        "in_delta_bar",
    ])
    .expect("in-memory csv");
    for r in records {
        w.write_record([
            r.rep.to_string(),
            r.orbit_size.to_string(),
            r.stabilizer.len().to_string(),
            r.s_alpha.to_string(),
            r.in_delta_bar.to_string(),
        ])
        .expect("in-memory csv");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf8")
}
