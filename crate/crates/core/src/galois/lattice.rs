//! Subfields of the Heisenberg field tower, their degrees and the induced permutation.

use serde::Serialize;

use crate::error::Result;
use crate::linalg::ExactMatrix;
use crate::numbers::{CycNum, DiscTag, Field, KClass, RhoNum};

use super::kummer::{certified_degree, KummerCertificate};
use super::wreath::WreathElement;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Subfield {
    Rationals,
    /// `Q(η)`, `η = i√7`.
    Eta,
    /// `Q(ρ)`.
    Real,
    /// `Q(ω)`.
    Cyclotomic,
    /// `Q(ρ, √Δ_{r′}^k)`.
    RealQubit(DiscTag),
    /// `Q(ρ, √Δ_{r′}^{1,2,4})`.
    RealWeight(u8),
    /// All six roots over `Q(ρ)`.
    RealTotal,
    /// `Q(ω, √Δ_{r′}^k)`.
    ComplexQubit(DiscTag),
    ComplexWeight(u8),
    ComplexTotal,
}

impl Subfield {
    pub fn all() -> Vec<Subfield> {
        let mut v = vec![Subfield::Rationals, Subfield::Eta, Subfield::Real, Subfield::Cyclotomic];
        v.extend(DiscTag::all().into_iter().map(Subfield::RealQubit));
        v.extend([Subfield::RealWeight(2), Subfield::RealWeight(3), Subfield::RealTotal]);
        v.extend(DiscTag::all().into_iter().map(Subfield::ComplexQubit));
        v.extend([Subfield::ComplexWeight(2), Subfield::ComplexWeight(3), Subfield::ComplexTotal]);
        v
    }

    pub fn name(&self) -> String {
        match self {
            Subfield::Rationals => "Q".into(),
            Subfield::Eta => "Q(η)".into(),
            Subfield::Real => "Q(ρ)".into(),
            Subfield::Cyclotomic => "Q(ω)".into(),
            Subfield::RealQubit(t) => format!("H_E[{t}]"),
            Subfield::RealWeight(rp) => format!("H_E[r'={rp}]"),
            Subfield::RealTotal => "H_E".into(),
            Subfield::ComplexQubit(t) => format!("H_G[{t}]"),
            Subfield::ComplexWeight(rp) => format!("H_G[r'={rp}]"),
            Subfield::ComplexTotal => "H_G".into(),
        }
    }

    /// Square roots adjoined over `Q(ρ)` or `Q(ω)`.
    pub fn roots(&self) -> Vec<DiscTag> {
        match self {
            Subfield::RealQubit(t) | Subfield::ComplexQubit(t) => vec![*t],
            Subfield::RealWeight(rp) | Subfield::ComplexWeight(rp) => DiscTag::all()
                .into_iter()
                .filter(|t| t.r_prime() == *rp)
                .collect(),
            Subfield::RealTotal | Subfield::ComplexTotal => DiscTag::all().to_vec(),
            _ => Vec::new(),
        }
    }

    fn ground(&self) -> Option<Subfield> {
        match self {
            Subfield::RealQubit(_) | Subfield::RealWeight(_) | Subfield::RealTotal => Some(Subfield::Real),
            Subfield::ComplexQubit(_) | Subfield::ComplexWeight(_) | Subfield::ComplexTotal => {
                Some(Subfield::Cyclotomic)
            }
            _ => None,
        }
    }

    /// Whether `self ⊆ other`.
    pub fn is_subfield_of(&self, other: &Subfield) -> bool {
        use Subfield::*;
        if self == other || *self == Rationals {
            return true;
        }
        let base_le = |a: &Subfield, b: &Subfield| match (a, b) {
            (Eta, Cyclotomic) | (Real, Cyclotomic) => true,
            (x, y) => x == y,
        };
        match (self.ground(), other.ground()) {
            (None, None) => base_le(self, other),
            (None, Some(g)) => base_le(self, &g),
            (Some(_), None) => false,
            (Some(g1), Some(g2)) => {
                base_le(&g1, &g2) && self.roots().iter().all(|t| other.roots().contains(t))
            }
        }
    }

    /// Image under `g`: each `√Δ^k` goes to `±√Δ^{φ(l)k}`.
    pub fn act(&self, g: &WreathElement) -> Subfield {
        let l = g.l();
        match self {
            Subfield::RealQubit(t) => Subfield::RealQubit(t.scaled(l)),
            Subfield::ComplexQubit(t) => Subfield::ComplexQubit(t.scaled(l)),
            other => other.clone(),
        }
    }
}

/// Dimension over `Q` of the span of `1, x, …, x⁶`: the degree of `Q(x)`.
fn generated_degree(x: &CycNum) -> Result<usize> {
    let mut powers = Vec::new();
    let mut p = CycNum::one();
    for _ in 0..7 {
        powers.push(p.coeffs().to_vec());
        p = p * x.clone();
    }
    ExactMatrix::from_rows(powers)?.rank()
}

/// Degree over `Q`, or `None` when the Kummer certificates do not cover the roots.
pub fn degree(field: &Subfield, certs: &[KummerCertificate]) -> Result<Option<u64>> {
    let base = |f: &Subfield| -> Result<u64> {
        Ok(match f {
            Subfield::Rationals => 1,
            Subfield::Eta => generated_degree(&CycNum::eta())? as u64,
            Subfield::Real => generated_degree(&crate::numbers::embed(&RhoNum::rho()))? as u64,
            _ => generated_degree(&CycNum::omega())? as u64,
        })
    };
    match field.ground() {
        None => Ok(Some(base(field)?)),
        Some(g) => Ok(certified_degree(certs, &field.roots()).map(|d| d * base(&g).unwrap_or(0))),
    }
}

/// `perm[i] = j` when `Subfield::all()[i]` is sent to `Subfield::all()[j]`.
pub fn act_on_subfields(g: &WreathElement) -> Vec<usize> {
    let all = Subfield::all();
    all.iter()
        .map(|f| all.iter().position(|h| *h == f.act(g)).expect("closed"))
        .collect()
}

pub fn real_qubit(rp: u8, k: KClass) -> Subfield {
    Subfield::RealQubit(DiscTag::new(rp, k).expect("valid tag"))
}
