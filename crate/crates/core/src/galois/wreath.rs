//! Wreath-product Galois groups of the Heisenberg field tower.
//!
//! An element `(ε; τ_l)` acts by `τ_l` on `Q(ω)` and by
//! `√Δ_{r′}^k ↦ ε_{r′,k} √Δ_{r′}^{φ(l)k}`, with `ε` indexed by the source class `k`.
//! Composition `g·h` applies `h` first.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numbers::{CycAut, DiscTag, KClass};

/// Which of the four groups an element belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variant {
    /// `C₂ ≀ C₃`: the field `Q(ρ, √Δ_{r′}^{1,2,4})` for a single `r′`.
    RealSingle { r_prime: u8 },
    /// `(C₂×C₂) ≀ C₃`: the total real field.
    RealDouble,
    /// `C₂ ≀_φ C₆`: a single `r′` over `Q(ω)`.
    ComplexSingle { r_prime: u8 },
    /// `(C₂×C₂) ≀_φ C₆`: the total complex field.
    ComplexDouble,
}

impl Variant {
    pub fn is_complex(self) -> bool {
        matches!(self, Variant::ComplexSingle { .. } | Variant::ComplexDouble)
    }

    /// Rows of `ε` that may carry a `−1`.
    pub fn active_rows(self) -> &'static [u8] {
        match self {
            Variant::RealSingle { r_prime: 2 } | Variant::ComplexSingle { r_prime: 2 } => &[2],
            Variant::RealSingle { .. } | Variant::ComplexSingle { .. } => &[3],
            Variant::RealDouble | Variant::ComplexDouble => &[2, 3],
        }
    }

    pub fn cyclic_part(self) -> Vec<CycAut> {
        if self.is_complex() {
            CycAut::all().collect()
        } else {
            CycAut::squares().collect()
        }
    }

    pub fn order(self) -> usize {
        (1 << (3 * self.active_rows().len())) * self.cyclic_part().len()
    }

    pub fn all() -> [Variant; 4] {
        [
            Variant::RealSingle { r_prime: 2 },
            Variant::RealDouble,
            Variant::ComplexSingle { r_prime: 2 },
            Variant::ComplexDouble,
        ]
    }

    fn validate(self) -> Result<()> {
        match self {
            Variant::RealSingle { r_prime } | Variant::ComplexSingle { r_prime }
                if !(2..=3).contains(&r_prime) =>
            {
                Err(Error::InvalidArgument(format!("r' must be 2 or 3, got {r_prime}")))
            }
            _ => Ok(()),
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Variant::RealSingle { r_prime } => write!(f, "C2≀C3 (r'={r_prime})"),
            Variant::RealDouble => write!(f, "(C2×C2)≀C3"),
            Variant::ComplexSingle { r_prime } => write!(f, "C2≀φC6 (r'={r_prime})"),
            Variant::ComplexDouble => write!(f, "(C2×C2)≀φC6"),
        }
    }
}

/// Signs `ε_{r′,k} ∈ {±1}`, rows `r′ = 2, 3`, columns `k = 1, 2, 4`.
pub type SignMatrix = [[i8; 3]; 2];

const ALL_PLUS: SignMatrix = [[1; 3]; 2];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct WreathElement {
    eps: SignMatrix,
    l: CycAut,
    variant: Variant,
}

fn row_index(r_prime: u8) -> usize {
    debug_assert!((2..=3).contains(&r_prime));
    (r_prime - 2) as usize
}

impl WreathElement {
    pub fn new(eps: SignMatrix, l: CycAut, variant: Variant) -> Result<Self> {
        variant.validate()?;
        if eps.iter().flatten().any(|&s| s != 1 && s != -1) {
            return Err(Error::InvalidArgument("signs must be ±1".into()));
        }
        for rp in [2u8, 3] {
            if !variant.active_rows().contains(&rp) && eps[row_index(rp)] != [1; 3] {
                return Err(Error::InvalidArgument(format!(
                    "{variant} carries no signs for r'={rp}"
                )));
            }
        }
        if !variant.cyclic_part().contains(&l) {
            return Err(Error::InvalidArgument(format!("{l} is not in the cyclic part of {variant}")));
        }
        Ok(WreathElement { eps, l, variant })
    }

    pub fn identity(variant: Variant) -> Self {
        WreathElement {
            eps: ALL_PLUS,
            l: CycAut::IDENTITY,
            variant,
        }
    }

    pub fn eps(&self) -> &SignMatrix {
        &self.eps
    }

    /// `ε_{r′,k}`.
    pub fn sign(&self, tag: DiscTag) -> i8 {
        self.eps[row_index(tag.r_prime())][tag.k().index()]
    }

    pub fn l(&self) -> CycAut {
        self.l
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn is_identity(&self) -> bool {
        self.eps == ALL_PLUS && self.l == CycAut::IDENTITY
    }

    /// `(ε; τ_l)(ε′; τ_{l′}) = (ε″; τ_{ll′})` with `ε″_k = ε_{φ(l′)k} ε′_k`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.variant != other.variant {
            return Err(Error::VariantMismatch(self.variant, other.variant));
        }
        let mut eps = ALL_PLUS;
        for (r, row) in eps.iter_mut().enumerate() {
            for k in KClass::ALL {
                let shifted = k.scaled(other.l).index();
                row[k.index()] = self.eps[r][shifted] * other.eps[r][k.index()];
            }
        }
        Ok(WreathElement {
            eps,
            l: self.l.compose(other.l),
            variant: self.variant,
        })
    }

    /// `ε⁻¹_m = ε_{φ(l)⁻¹ m}`, so that `g⁻¹ g = 1`.
    pub fn inverse(&self) -> Self {
        let l_inv = self.l.inverse();
        let mut eps = ALL_PLUS;
        for (r, row) in eps.iter_mut().enumerate() {
            for m in KClass::ALL {
                row[m.index()] = self.eps[r][m.scaled(l_inv).index()];
            }
        }
        WreathElement {
            eps,
            l: l_inv,
            variant: self.variant,
        }
    }

    /// Every element, ordered by `l` and then by the sign bits.
    pub fn enumerate(variant: Variant) -> Result<Vec<Self>> {
        variant.validate()?;
        let rows = variant.active_rows();
        let bits = 3 * rows.len();
        let mut out = Vec::with_capacity(variant.order());
        for l in variant.cyclic_part() {
            for mask in 0u32..(1 << bits) {
                let mut eps = ALL_PLUS;
                for (ri, &rp) in rows.iter().enumerate() {
                    for c in 0..3 {
                        if mask >> (3 * ri + c) & 1 == 1 {
                            eps[row_index(rp)][c] = -1;
                        }
                    }
                }
                out.push(WreathElement { eps, l, variant });
            }
        }
        Ok(out)
    }

    /// The element in the largest group with the same data.
    pub fn promote(&self) -> Self {
        WreathElement {
            variant: Variant::ComplexDouble,
            ..*self
        }
    }
}

impl fmt::Display for WreathElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let row = |r: &[i8; 3]| {
            r.iter()
                .map(|s| if *s > 0 { "+" } else { "-" })
                .collect::<String>()
        };
        write!(f, "(ε2={} ε3={}; {})", row(&self.eps[0]), row(&self.eps[1]), self.l)
    }
}

/// JSON form `{"eps": [[±1,±1,±1],[±1,±1,±1]], "l": int}`; always a member of the
/// complex total group.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ElementSpec {
    pub eps: SignMatrix,
    pub l: i64,
}

impl TryFrom<ElementSpec> for WreathElement {
    type Error = Error;
    fn try_from(s: ElementSpec) -> Result<Self> {
        WreathElement::new(s.eps, CycAut::new(s.l)?, Variant::ComplexDouble)
    }
}

impl From<&WreathElement> for ElementSpec {
    fn from(g: &WreathElement) -> Self {
        ElementSpec {
            eps: g.eps,
            l: g.l.signed(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn orders() {
        let orders: Vec<usize> = Variant::all()
            .iter()
            .map(|v| WreathElement::enumerate(*v).unwrap().len())
            .collect();
        assert_eq!(orders, vec![24, 192, 48, 384]);
        for v in Variant::all() {
            let set: HashSet<_> = WreathElement::enumerate(v).unwrap().into_iter().collect();
            assert_eq!(set.len(), v.order());
        }
    }

    #[test]
    fn inverse_and_mismatch() {
        let v = Variant::ComplexDouble;
        for g in WreathElement::enumerate(v).unwrap() {
            assert!(g.mul(&g.inverse()).unwrap().is_identity());
            assert!(g.inverse().mul(&g).unwrap().is_identity());
        }
        let a = WreathElement::identity(Variant::RealDouble);
        let b = WreathElement::identity(Variant::ComplexDouble);
        assert!(matches!(a.mul(&b), Err(Error::VariantMismatch(..))));
    }

    #[test]
    fn rejects_foreign_data() {
        let rs = Variant::RealSingle { r_prime: 2 };
        assert!(WreathElement::new(ALL_PLUS, CycAut::new(3).unwrap(), rs).is_err());
        assert!(WreathElement::new([[1; 3], [-1, 1, 1]], CycAut::IDENTITY, rs).is_err());
        assert!(WreathElement::new([[2, 1, 1], [1; 3]], CycAut::IDENTITY, Variant::RealDouble).is_err());
        assert!(WreathElement::enumerate(Variant::RealSingle { r_prime: 4 }).is_err());
    }

    #[test]
    fn json_spec() {
        let s: ElementSpec = serde_json::from_str(r#"{"eps":[[-1,1,1],[1,1,1]],"l":2}"#).unwrap();
        let g = WreathElement::try_from(s).unwrap();
        assert_eq!(g.sign(DiscTag::new(2, KClass::One).unwrap()), -1);
        assert_eq!(g.l(), CycAut::TAU);
        let bad: ElementSpec = serde_json::from_str(r#"{"eps":[[1,1,1],[1,1,1]],"l":7}"#).unwrap();
        assert!(WreathElement::try_from(bad).is_err());
    }
}
