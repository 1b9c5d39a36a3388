//! Multiplicative independence of the six discriminants modulo squares.
//!
//! A product over a nonempty subset with odd valuation at some prime cannot be a
//! square, so 63 certificates give `[H_E : Q(ρ)] = 2⁶`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::numbers::{designated_prime, valuation, DiscTag, Field, RhoNum};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct KummerCertificate {
    pub subset: Vec<DiscTag>,
    /// Lowest-indexed member of the subset; its designated prime is the witness.
    pub witness: DiscTag,
    #[serde(skip)]
    pub prime: RhoNum,
    pub valuation: u32,
}

impl KummerCertificate {
    pub fn is_odd(&self) -> bool {
        self.valuation % 2 == 1
    }
}

/// The subset of `DiscTag::all()` selected by the bits of `mask`.
pub fn subset_of(mask: u8) -> Vec<DiscTag> {
    DiscTag::all()
        .into_iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, t)| t)
        .collect()
}

pub fn subset_product(subset: &[DiscTag]) -> RhoNum {
    subset.iter().fold(RhoNum::one(), |acc, t| acc * t.value())
}

/// Certificate for one nonempty subset; errors if the witness valuation is even.
pub fn certify(subset: &[DiscTag]) -> Result<KummerCertificate> {
    let witness = *subset
        .first()
        .ok_or_else(|| Error::InvalidArgument("empty subset".into()))?;
    let prime = designated_prime(witness);
    let v = valuation(&subset_product(subset), &prime)?;
    let cert = KummerCertificate {
        subset: subset.to_vec(),
        witness,
        prime,
        valuation: v,
    };
    if !cert.is_odd() {
        let names: Vec<String> = subset.iter().map(|t| t.to_string()).collect();
        return Err(Error::MissingCertificate(format!(
            "{{{}}}: even valuation {v} at the prime of {witness}",
            names.join(", ")
        )));
    }
    Ok(cert)
}

/// All 63 certificates, by increasing subset mask.
pub fn kummer_independence() -> Result<Vec<KummerCertificate>> {
    (1u8..64).map(|m| certify(&subset_of(m))).collect()
}

/// `2^(number of independent discriminants)`, given a certificate for every subset.
pub fn certified_degree(certs: &[KummerCertificate], tags: &[DiscTag]) -> Option<u64> {
    let covered = (1u8..64)
        .map(subset_of)
        .filter(|s| !s.is_empty() && s.iter().all(|t| tags.contains(t)))
        .all(|s| certs.iter().any(|c| c.subset == s && c.is_odd()));
    covered.then(|| 1 << tags.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_subsets_certified() {
        let certs = kummer_independence().unwrap();
        assert_eq!(certs.len(), 63);
        assert!(certs.iter().all(|c| c.valuation == 1));
        assert_eq!(certified_degree(&certs, &DiscTag::all()), Some(64));
    }

    #[test]
    fn pair_needs_valuation() {
        let all = DiscTag::all();
        let c = certify(&[all[0], all[1]]).unwrap();
        assert_eq!(c.witness, all[0]);
        assert_eq!(subset_product(&[all[0], all[1]]).norm(), crate::numbers::rat(1289 * 1289));
        assert!(certify(&[]).is_err());
    }
}
