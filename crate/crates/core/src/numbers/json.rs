//! JSON form of field elements:
//! `{"field": "Q"|"Q(rho)"|"Q(w7)"|"quad", "coeffs": ["p/q", …], "tag": {"rp": 2|3, "k": 1|2|4}}`.
//!
//! Quadratic elements additionally carry `"base": "Q(rho)"|"Q(w7)"`; their `coeffs`
//! list the base coordinates of `a` followed by those of `b` in `a + b√Δ`. The
//! `tag` key is present only for quadratic elements with a nonzero root part.

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::cyclotomic::CycNum;
use super::quadratic::{DiscTag, QuadBase, QuadNum};
use super::rat::{format_rat, parse_rat, Rat};
use super::field::Field;
use super::real::RhoNum;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub enum FieldElement {
    Q(Rat),
    Rho(RhoNum),
    Cyc(CycNum),
    QuadRho(QuadNum<RhoNum>),
    QuadCyc(QuadNum<CycNum>),
}

#[derive(Serialize, Deserialize)]
struct Repr {
    field: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    base: Option<String>,
    coeffs: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    tag: Option<DiscTag>,
}

const Q: &str = "Q";
const RHO: &str = "Q(rho)";
const CYC: &str = "Q(w7)";
const QUAD: &str = "quad";

fn fmt_all(cs: &[Rat]) -> Vec<String> {
    cs.iter().map(format_rat).collect()
}

fn parse_exact<const N: usize>(cs: &[String]) -> Result<[Rat; N]> {
    if cs.len() != N {
        return Err(Error::Parse(format!("expected {N} coefficients, got {}", cs.len())));
    }
    let v: Vec<Rat> = cs.iter().map(|s| parse_rat(s)).collect::<Result<_>>()?;
    Ok(v.try_into().expect("length checked"))
}

/// Conversion between a base field and its coefficient vector.
pub trait Coefficients: Sized {
    const FIELD: &'static str;
    fn to_coeffs(&self) -> Vec<Rat>;
    fn from_coeffs(cs: &[String]) -> Result<Self>;
}

impl Coefficients for RhoNum {
    const FIELD: &'static str = RHO;
    fn to_coeffs(&self) -> Vec<Rat> {
        self.coeffs().to_vec()
    }
    fn from_coeffs(cs: &[String]) -> Result<Self> {
        parse_exact::<3>(cs).map(RhoNum::new)
    }
}

impl Coefficients for CycNum {
    const FIELD: &'static str = CYC;
    fn to_coeffs(&self) -> Vec<Rat> {
        self.coeffs().to_vec()
    }
    fn from_coeffs(cs: &[String]) -> Result<Self> {
        parse_exact::<6>(cs).map(CycNum::new)
    }
}

fn quad_repr<B: QuadBase + Coefficients>(x: &QuadNum<B>) -> Repr {
    let mut cs = x.a().to_coeffs();
    cs.extend(x.b().to_coeffs());
    Repr {
        field: QUAD.into(),
        base: Some(B::FIELD.into()),
        coeffs: fmt_all(&cs),
        tag: x.tag(),
    }
}

fn quad_from<B: QuadBase + Coefficients>(r: &Repr) -> Result<QuadNum<B>> {
    let half = r.coeffs.len() / 2;
    if r.coeffs.len() % 2 != 0 {
        return Err(Error::Parse("odd number of quadratic coefficients".into()));
    }
    let a = B::from_coeffs(&r.coeffs[..half])?;
    let b = B::from_coeffs(&r.coeffs[half..])?;
    match r.tag {
        Some(t) => Ok(QuadNum::new(a, b, t)),
        None if b.is_zero() => Ok(QuadNum::from_base(a)),
        None => Err(Error::Parse("quadratic element with root part but no tag".into())),
    }
}

impl FieldElement {
    /// The element as a member of `Q(ρ)`, when it is one.
    pub fn into_rho(self) -> Result<RhoNum> {
        match self {
            FieldElement::Q(q) => Ok(RhoNum::from_rat(q)),
            FieldElement::Rho(x) => Ok(x),
            FieldElement::Cyc(x) => super::real::project(&x),
            _ => Err(Error::Parse("expected an element of Q(rho)".into())),
        }
    }

    fn to_repr(&self) -> Repr {
        let simple = |field: &str, cs: Vec<Rat>| Repr {
            field: field.into(),
            base: None,
            coeffs: fmt_all(&cs),
            tag: None,
        };
        match self {
            FieldElement::Q(q) => simple(Q, vec![q.clone()]),
            FieldElement::Rho(x) => simple(RHO, x.to_coeffs()),
            FieldElement::Cyc(x) => simple(CYC, x.to_coeffs()),
            FieldElement::QuadRho(x) => quad_repr(x),
            FieldElement::QuadCyc(x) => quad_repr(x),
        }
    }

    fn from_repr(r: Repr) -> Result<Self> {
        match r.field.as_str() {
            Q => Ok(FieldElement::Q(parse_exact::<1>(&r.coeffs)?[0].clone())),
            RHO => RhoNum::from_coeffs(&r.coeffs).map(FieldElement::Rho),
            CYC => CycNum::from_coeffs(&r.coeffs).map(FieldElement::Cyc),
            QUAD => match r.base.as_deref() {
                Some(RHO) => quad_from(&r).map(FieldElement::QuadRho),
                Some(CYC) => quad_from(&r).map(FieldElement::QuadCyc),
                other => Err(Error::Parse(format!("unknown quadratic base {other:?}"))),
            },
            other => Err(Error::Parse(format!("unknown field {other:?}"))),
        }
    }
}

impl Serialize for FieldElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_repr().serialize(s)
    }
}

impl<'de> Deserialize<'de> for FieldElement {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = Repr::deserialize(d)?;
        FieldElement::from_repr(r).map_err(serde::de::Error::custom)
    }
}

/// Conversion of each concrete field into the tagged union.
pub trait IntoFieldElement {
    fn to_element(&self) -> FieldElement;
}

impl IntoFieldElement for Rat {
    fn to_element(&self) -> FieldElement {
        FieldElement::Q(self.clone())
    }
}
impl IntoFieldElement for RhoNum {
    fn to_element(&self) -> FieldElement {
        FieldElement::Rho(self.clone())
    }
}
impl IntoFieldElement for CycNum {
    fn to_element(&self) -> FieldElement {
        FieldElement::Cyc(self.clone())
    }
}
impl IntoFieldElement for QuadNum<RhoNum> {
    fn to_element(&self) -> FieldElement {
        FieldElement::QuadRho(self.clone())
    }
}
impl IntoFieldElement for QuadNum<CycNum> {
    fn to_element(&self) -> FieldElement {
        FieldElement::QuadCyc(self.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numbers::rat::ratio;
    use crate::numbers::KClass;
    use serde_json::json;

    #[test]
    fn rho_schema() {
        let x = FieldElement::Rho(RhoNum::new([ratio(1, 2), ratio(-3, 1), ratio(0, 1)]));
        let v = serde_json::to_value(&x).unwrap();
        assert_eq!(v, json!({"field": "Q(rho)", "coeffs": ["1/2", "-3/1", "0/1"]}));
        let back: FieldElement = serde_json::from_value(v).unwrap();
        assert_eq!(back, x);
    }

    #[test]
    fn quad_schema_carries_tag() {
        let tag = DiscTag::new(3, KClass::Two).unwrap();
        let x = QuadNum::new(RhoNum::from_ints([1, 0, 0]), RhoNum::from_ints([0, 1, 0]), tag);
        let v = serde_json::to_value(x.to_element()).unwrap();
        assert_eq!(v["tag"], json!({"rp": 3, "k": 2}));
        assert_eq!(v["base"], json!("Q(rho)"));
        let back: FieldElement = serde_json::from_value(v).unwrap();
        assert_eq!(back, FieldElement::QuadRho(x));
    }

    #[test]
    fn rejects_malformed() {
        let bad = json!({"field": "Q(w7)", "coeffs": ["1/1"]});
        assert!(serde_json::from_value::<FieldElement>(bad).is_err());
        let bad = json!({"field": "quad", "base": "Q(rho)", "coeffs": ["0","0","0","1","0","0"]});
        assert!(serde_json::from_value::<FieldElement>(bad).is_err());
        let bad = json!({"field": "quad", "base": "Q(rho)", "coeffs": ["1","0","0","1","0","0"], "tag": {"rp": 4, "k": 1}});
        assert!(serde_json::from_value::<FieldElement>(bad).is_err());
    }
}
