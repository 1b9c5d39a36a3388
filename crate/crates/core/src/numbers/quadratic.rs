//! Quadratic extensions `Base(√Δ)` with `Δ` one of the six qubit discriminants.
//!
//! The square root stays symbolic: an element carries a [`DiscTag`] naming its `Δ`,
//! and arithmetic is only defined between equal tags (or against elements with
//! vanishing root part, which carry no tag).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::cyclotomic::{CycAut, CycNum, KClass};
use super::field::Field;
use super::rat::{rat, Rat};
use super::real::{embed, RhoNum};
use crate::error::{Error, Result};

/// Names one of the six discriminants `Δ_{r′}^k`, `r′ ∈ {2,3}`, `k ∈ {1,2,4}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawTag")]
pub struct DiscTag {
    #[serde(rename = "rp")]
    r_prime: u8,
    k: KClass,
}

#[derive(Deserialize)]
struct RawTag {
    rp: u8,
    k: KClass,
}

impl TryFrom<RawTag> for DiscTag {
    type Error = Error;
    fn try_from(r: RawTag) -> Result<Self> {
        DiscTag::new(r.rp, r.k)
    }
}

impl DiscTag {
    pub fn new(r_prime: u8, k: KClass) -> Result<Self> {
        if !(2..=3).contains(&r_prime) {
            return Err(Error::InvalidArgument(format!(
                "discriminants exist for r' = 2, 3 only, got {r_prime}"
            )));
        }
        Ok(DiscTag { r_prime, k })
    }

    /// All six tags, ordered `Δ₂¹, Δ₂², Δ₂⁴, Δ₃¹, Δ₃², Δ₃⁴`.
    pub fn all() -> [DiscTag; 6] {
        let mut out = [DiscTag {
            r_prime: 2,
            k: KClass::One,
        }; 6];
        for (i, rp) in [2u8, 3].into_iter().enumerate() {
            for (j, k) in KClass::ALL.into_iter().enumerate() {
                out[3 * i + j] = DiscTag { r_prime: rp, k };
            }
        }
        out
    }

    pub fn r_prime(self) -> u8 {
        self.r_prime
    }

    pub fn k(self) -> KClass {
        self.k
    }

    pub fn index(self) -> usize {
        3 * (self.r_prime as usize - 2) + self.k.index()
    }

    pub fn scaled(self, l: CycAut) -> DiscTag {
        DiscTag {
            r_prime: self.r_prime,
            k: self.k.scaled(l),
        }
    }

    /// `Δ₂ = 16 − μ − 3μ²`, `Δ₃ = 25 − 10μ − 3μ²` with `μ = ρ_k`.
    pub fn value(self) -> RhoNum {
        let mu = RhoNum::rho_class(self.k);
        let poly = match self.r_prime {
            2 => [rat(16), rat(-1), rat(-3)],
            _ => [rat(25), rat(-10), rat(-3)],
        };
        mu.eval_poly(&poly)
    }
}

impl fmt::Display for DiscTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Δ{}^{}", self.r_prime, self.k)
    }
}

/// Base fields admissible under a square root of a discriminant.
pub trait QuadBase: Field {
    fn from_rho(x: &RhoNum) -> Self;
    fn apply_aut(&self, t: CycAut) -> Self;
}

impl QuadBase for RhoNum {
    fn from_rho(x: &RhoNum) -> Self {
        x.clone()
    }
    fn apply_aut(&self, t: CycAut) -> Self {
        RhoNum::apply_aut(self, t)
    }
}

impl QuadBase for CycNum {
    fn from_rho(x: &RhoNum) -> Self {
        embed(x)
    }
    fn apply_aut(&self, t: CycAut) -> Self {
        CycNum::apply_aut(self, t)
    }
}

/// `a + b·√Δ_tag`. Canonical: `tag` is `None` exactly when `b = 0`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct QuadNum<B> {
    a: B,
    b: B,
    tag: Option<DiscTag>,
}

impl<B: QuadBase> QuadNum<B> {
    pub fn new(a: B, b: B, tag: DiscTag) -> Self {
        let tag = (!b.is_zero()).then_some(tag);
        QuadNum { a, b, tag }
    }

    pub fn from_base(a: B) -> Self {
        QuadNum {
            a,
            b: B::zero(),
            tag: None,
        }
    }

    /// `√Δ_tag` itself.
    pub fn sqrt_disc(tag: DiscTag) -> Self {
        QuadNum::new(B::zero(), B::one(), tag)
    }

    pub fn a(&self) -> &B {
        &self.a
    }

    pub fn b(&self) -> &B {
        &self.b
    }

    pub fn tag(&self) -> Option<DiscTag> {
        self.tag
    }

    pub fn is_base(&self) -> bool {
        self.tag.is_none()
    }

    /// `Δ` as an element of the base field.
    pub fn disc(&self) -> Option<B> {
        self.tag.map(|t| B::from_rho(&t.value()))
    }

    /// The other root: `a − b√Δ`.
    pub fn quad_conj(&self) -> Self {
        QuadNum {
            a: self.a.clone(),
            b: -self.b.clone(),
            tag: self.tag,
        }
    }

    /// `(a + b√Δ)(a − b√Δ) = a² − Δb²`.
    pub fn rel_norm(&self) -> B {
        match self.disc() {
            Some(d) => self.a.clone() * self.a.clone() - d * self.b.clone() * self.b.clone(),
            None => self.a.clone() * self.a.clone(),
        }
    }

    fn joint_tag(&self, other: &Self) -> Result<Option<DiscTag>> {
        match (self.tag, other.tag) {
            (Some(x), Some(y)) if x != y => Err(Error::TagMismatch(x.to_string(), y.to_string())),
            (x, y) => Ok(x.or(y)),
        }
    }

    fn build(a: B, b: B, tag: Option<DiscTag>) -> Self {
        match tag {
            Some(t) => QuadNum::new(a, b, t),
            None => QuadNum::from_base(a),
        }
    }

    fn try_add(&self, other: &Self) -> Result<Self> {
        let tag = self.joint_tag(other)?;
        Ok(QuadNum::build(
            self.a.clone() + other.a.clone(),
            self.b.clone() + other.b.clone(),
            tag,
        ))
    }

    fn try_mul(&self, other: &Self) -> Result<Self> {
        let tag = self.joint_tag(other)?;
        let ac = self.a.clone() * other.a.clone();
        let ad = self.a.clone() * other.b.clone();
        let bc = self.b.clone() * other.a.clone();
        let bd = self.b.clone() * other.b.clone();
        let d = tag.map(|t| B::from_rho(&t.value())).unwrap_or_else(B::zero);
        Ok(QuadNum::build(ac + d * bd, ad + bc, tag))
    }

    /// Applies `f` to both base coordinates, keeping the tag.
    pub fn map_base(&self, f: impl Fn(&B) -> B) -> Self {
        QuadNum::build(f(&self.a), f(&self.b), self.tag)
    }

    /// Automorphism of the base extended by `√Δ^k ↦ sign·√Δ^{lk}`.
    pub fn apply_aut_signed(&self, t: CycAut, sign: i8) -> Self {
        let a = self.a.apply_aut(t);
        let b = self.b.apply_aut(t);
        match self.tag {
            None => QuadNum::from_base(a),
            Some(tag) => {
                let b = if sign < 0 { -b } else { b };
                QuadNum::new(a, b, tag.scaled(t))
            }
        }
    }
}

impl<B: QuadBase> Add for QuadNum<B> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.try_add(&rhs).expect("quadratic tag mismatch")
    }
}

impl<B: QuadBase> Sub for QuadNum<B> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.try_add(&-rhs).expect("quadratic tag mismatch")
    }
}

impl<B: QuadBase> Mul for QuadNum<B> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.try_mul(&rhs).expect("quadratic tag mismatch")
    }
}

impl<B: QuadBase> Neg for QuadNum<B> {
    type Output = Self;
    fn neg(self) -> Self {
        QuadNum {
            a: -self.a,
            b: -self.b,
            tag: self.tag,
        }
    }
}

impl<B: QuadBase> Field for QuadNum<B> {
    fn zero() -> Self {
        QuadNum::from_base(B::zero())
    }
    fn one() -> Self {
        QuadNum::from_base(B::one())
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
    fn from_rat(q: Rat) -> Self {
        QuadNum::from_base(B::from_rat(q))
    }
    fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n_inv = self.rel_norm().inv()?;
        let c = self.quad_conj();
        Ok(QuadNum::build(c.a * n_inv.clone(), c.b * n_inv, c.tag))
    }
    /// Complex conjugation; `√Δ` is real in every embedding.
    fn conj(&self) -> Self {
        self.map_base(|x| x.conj())
    }
    /// Uses the principal (positive) square root of the embedded `Δ`.
    fn numeric_embed(&self, embedding: CycAut) -> Result<Complex64> {
        let a = self.a.numeric_embed(embedding)?;
        match self.tag {
            None => Ok(a),
            Some(tag) => {
                let d = tag.value().to_f64(embedding);
                if d <= 0.0 {
                    return Err(Error::NegativeDiscriminant(d));
                }
                Ok(a + self.b.numeric_embed(embedding)? * d.sqrt())
            }
        }
    }
    fn checked_add(&self, other: &Self) -> Result<Self> {
        self.try_add(other)
    }
    fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&-other.clone())
    }
    fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.try_mul(other)
    }
}

impl<B: QuadBase> fmt::Display for QuadNum<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.tag {
            None => write!(f, "{}", self.a),
            Some(t) => write!(f, "({}) + ({})·√{}", self.a, self.b, t),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn discriminant_values() {
        let [d21, d22, d24, d31, d32, d34] = DiscTag::all().map(DiscTag::value);
        assert_eq!(d21, RhoNum::from_ints([16, -1, -3]));
        assert_eq!(d22, RhoNum::from_ints([9, 3, 2]));
        assert_eq!(d24, RhoNum::from_ints([9, -2, 1]));
        assert_eq!(d31, RhoNum::from_ints([25, -10, -3]));
        assert_eq!(d32, RhoNum::from_ints([36, 3, -7]));
        assert_eq!(d34, RhoNum::from_ints([9, 7, 10]));
    }

    #[test]
    fn sqrt_squares_to_disc() {
        for tag in DiscTag::all() {
            let s = QuadNum::<RhoNum>::sqrt_disc(tag);
            assert_eq!(s.clone() * s, QuadNum::from_base(tag.value()));
        }
    }

    #[test]
    fn tag_mismatch_is_an_error() {
        let [t1, t2, ..] = DiscTag::all();
        let x = QuadNum::<RhoNum>::sqrt_disc(t1);
        let y = QuadNum::<RhoNum>::sqrt_disc(t2);
        assert!(matches!(x.checked_mul(&y), Err(Error::TagMismatch(..))));
        assert!(x.checked_add(&QuadNum::one()).is_ok());
    }

    #[test]
    fn inverse_and_norm() {
        let tag = DiscTag::all()[3];
        let x = QuadNum::new(RhoNum::from_ints([1, 2, 0]), RhoNum::from_ints([0, -1, 1]), tag);
        let prod = x.clone() * x.quad_conj();
        assert_eq!(prod, QuadNum::from_base(x.rel_norm()));
        assert_eq!(x.clone() * x.inv().unwrap(), QuadNum::one());
    }

    #[test]
    fn cancellation_drops_tag() {
        let tag = DiscTag::all()[0];
        let s = QuadNum::<CycNum>::sqrt_disc(tag);
        let z = s.clone() - s;
        assert!(z.is_zero() && z.tag().is_none());
    }
}
