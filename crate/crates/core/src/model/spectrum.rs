//! The 128-level spectrum assembled from highest-weight levels and their `S⁻` towers.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::Result;
use crate::numbers::{CycAut, DiscTag, Field, FieldElement, IntoFieldElement, Momentum, QuadNum, RhoNum};

use super::config::NODES;
use super::qubit::energies;

/// One highest-weight level `(k, r′, ν)` together with its copies at `r = r′..=7−r′`.
#[derive(Clone, Debug, PartialEq)]
pub struct SpectrumRecord {
    pub k: Momentum,
    pub r_prime: u8,
    pub nu: Option<i8>,
    pub r_values: Vec<u8>,
    pub energy_exact: QuadNum<RhoNum>,
    pub energy_float: f64,
    pub multiplicity: usize,
}

impl SpectrumRecord {
    pub fn disc_tag(&self) -> Option<DiscTag> {
        self.energy_exact.tag()
    }

    /// `(k, r′, ν)` as a compact label, e.g. `k=1 r'=2 ν=+1`.
    pub fn key(&self) -> String {
        let nu = match self.nu {
            Some(1) => " ν=+1".to_string(),
            Some(n) => format!(" ν={n}"),
            None => String::new(),
        };
        format!("k={} r'={}{nu}", self.k, self.r_prime)
    }
}

/// Every level, ordered by `k`, then `r′`, then `ν = +1, −1`.
pub fn full_spectrum() -> Result<Vec<SpectrumRecord>> {
    let mut out = Vec::new();
    for k in Momentum::all() {
        for r_prime in 0..=3usize {
            for level in energies(r_prime, k)? {
                let r_values: Vec<u8> = (r_prime..=NODES - r_prime).map(|r| r as u8).collect();
                out.push(SpectrumRecord {
                    k,
                    r_prime: r_prime as u8,
                    nu: level.nu,
                    multiplicity: r_values.len(),
                    r_values,
                    energy_float: level.energy.numeric_embed(CycAut::IDENTITY)?.re,
                    energy_exact: level.energy,
                });
            }
        }
    }
    Ok(out)
}

pub fn total_multiplicity(records: &[SpectrumRecord]) -> usize {
    records.iter().map(|r| r.multiplicity).sum()
}

/// `{"base", "root_coeff", "disc"}`, meaning `base + root_coeff·√disc`.
pub fn energy_json(e: &QuadNum<RhoNum>) -> serde_json::Value {
    serde_json::json!({
        "base": e.a().to_element(),
        "root_coeff": e.b().to_element(),
        "disc": e.tag(),
    })
}

/// Inverse of [`energy_json`].
pub fn energy_from_json(v: &serde_json::Value) -> Result<QuadNum<RhoNum>> {
    let part = |name: &str| -> Result<RhoNum> {
        let el: FieldElement = serde_json::from_value(v[name].clone())?;
        el.into_rho()
    };
    let base = part("base")?;
    let root = part("root_coeff")?;
    let tag: Option<DiscTag> = serde_json::from_value(v["disc"].clone())?;
    Ok(match tag {
        Some(t) => QuadNum::new(base, root, t),
        None if root.is_zero() => QuadNum::from_base(base),
        None => {
            return Err(crate::Error::Parse("root coefficient without a discriminant".into()))
        }
    })
}

impl Serialize for SpectrumRecord {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("SpectrumRecord", 7)?;
        st.serialize_field("k", &self.k)?;
        st.serialize_field("r_prime", &self.r_prime)?;
        st.serialize_field("nu", &self.nu)?;
        st.serialize_field("r_values", &self.r_values)?;
        st.serialize_field("energy", &energy_json(&self.energy_exact))?;
        st.serialize_field("energy_float", &self.energy_float)?;
        st.serialize_field("multiplicity", &self.multiplicity)?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numbers::rat;

    #[test]
    fn multiplicities() {
        let s = full_spectrum().unwrap();
        assert_eq!(s.len(), 1 + 6 + 14 + 14);
        assert_eq!(total_multiplicity(&s), 128);
        for rp in 0..=3u8 {
            let sum: usize = s.iter().filter(|r| r.r_prime == rp).map(|r| r.multiplicity).sum();
            assert_eq!(sum, [8, 36, 56, 28][rp as usize]);
        }
    }

    #[test]
    fn zero_momentum_values() {
        let s = full_spectrum().unwrap();
        let at_zero: Vec<(u8, Option<i8>, RhoNum)> = s
            .iter()
            .filter(|r| r.k.is_zero())
            .map(|r| (r.r_prime, r.nu, r.energy_exact.a().clone()))
            .collect();
        let q = |n| RhoNum::from_rat(rat(n));
        assert_eq!(
            at_zero,
            vec![
                (0, None, q(0)),
                (2, Some(1), q(-2)),
                (2, Some(-1), q(-6)),
                (3, Some(1), q(-5)),
                (3, Some(-1), q(-5)),
            ]
        );
    }

    #[test]
    fn json_round_trip() {
        for r in full_spectrum().unwrap() {
            let v = serde_json::to_value(&r).unwrap();
            assert_eq!(energy_from_json(&v["energy"]).unwrap(), r.energy_exact);
        }
    }
}
