//! The cyclotomic field `Q(ω)`, `ω = exp(2πi/7)`, in the power basis `{1, ω, …, ω⁵}`.

use std::f64::consts::PI;
use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::field::{forward_binop, Field};
use super::rat::{display_rat, rat, to_f64, Rat};
use crate::error::{Error, Result};

pub const N: i64 = 7;

/// A Galois automorphism `τ_l : ω ↦ ω^l` of `Q(ω)`, `l` a unit mod 7.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "i64", into = "i64")]
pub struct CycAut(u8);

impl CycAut {
    pub const IDENTITY: CycAut = CycAut(1);
    pub const CONJUGATION: CycAut = CycAut(6);
    /// `τ := τ₂`, the generator of `G(Q(ρ)/Q)`.
    pub const TAU: CycAut = CycAut(2);

    pub fn new(l: i64) -> Result<Self> {
        let r = l.rem_euclid(N);
        if r == 0 {
            return Err(Error::InvalidArgument(format!("{l} is not a unit mod 7")));
        }
        Ok(CycAut(r as u8))
    }

    /// Residue in `1..=6`.
    pub fn value(self) -> i64 {
        self.0 as i64
    }

    /// Representative in `{±1, ±2, ±3}`.
    pub fn signed(self) -> i64 {
        let v = self.0 as i64;
        if v > 3 {
            v - N
        } else {
            v
        }
    }

    pub fn compose(self, other: CycAut) -> CycAut {
        CycAut(((self.0 as u16 * other.0 as u16) % 7) as u8)
    }

    pub fn inverse(self) -> CycAut {
        (1..7)
            .map(CycAut)
            .find(|c| self.compose(*c) == CycAut::IDENTITY)
            .expect("units mod 7 form a group")
    }

    pub fn all() -> impl Iterator<Item = CycAut> {
        (1..7u8).map(CycAut)
    }

    /// The three automorphisms restricting to the real subfield: `{τ₁, τ₂, τ₄}`.
    pub fn squares() -> impl Iterator<Item = CycAut> {
        [1u8, 2, 4].into_iter().map(CycAut)
    }

    /// `φ(±m) = m` for `m ∈ {1,2,4}`: the class of `l` modulo `±1`.
    pub fn class(self) -> KClass {
        KClass::from_residue(self.0 as i64).expect("units have a class")
    }

    pub fn order(self) -> u32 {
        let mut x = self;
        let mut n = 1;
        while x != CycAut::IDENTITY {
            x = x.compose(self);
            n += 1;
        }
        n
    }
}

impl TryFrom<i64> for CycAut {
    type Error = Error;
    fn try_from(v: i64) -> Result<Self> {
        CycAut::new(v)
    }
}

impl From<CycAut> for i64 {
    fn from(c: CycAut) -> i64 {
        c.signed()
    }
}

impl fmt::Display for CycAut {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "τ{}", self.signed())
    }
}

/// Class of a nonzero quasimomentum modulo `k ~ −k`, represented by `1`, `2` or `4`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "i64", into = "i64")]
pub enum KClass {
    One,
    Two,
    Four,
}

impl KClass {
    pub const ALL: [KClass; 3] = [KClass::One, KClass::Two, KClass::Four];

    pub fn from_residue(k: i64) -> Option<KClass> {
        match k.rem_euclid(N) {
            1 | 6 => Some(KClass::One),
            2 | 5 => Some(KClass::Two),
            3 | 4 => Some(KClass::Four),
            _ => None,
        }
    }

    pub fn value(self) -> i64 {
        match self {
            KClass::One => 1,
            KClass::Two => 2,
            KClass::Four => 4,
        }
    }

    pub fn index(self) -> usize {
        match self {
            KClass::One => 0,
            KClass::Two => 1,
            KClass::Four => 2,
        }
    }

    /// Image of the class under `τ_l`.
    pub fn scaled(self, l: CycAut) -> KClass {
        KClass::from_residue(self.value() * l.value()).expect("unit times unit")
    }

    /// Exponent `e` with `self = τ^e(1)`, `τ = τ₂`.
    pub fn tau_exponent(self) -> u32 {
        match self {
            KClass::One => 0,
            KClass::Two => 1,
            KClass::Four => 2,
        }
    }
}

impl TryFrom<i64> for KClass {
    type Error = Error;
    fn try_from(v: i64) -> Result<Self> {
        match v {
            1 => Ok(KClass::One),
            2 => Ok(KClass::Two),
            4 => Ok(KClass::Four),
            _ => Err(Error::InvalidArgument(format!("k-class must be 1, 2 or 4, got {v}"))),
        }
    }
}

impl From<KClass> for i64 {
    fn from(c: KClass) -> i64 {
        c.value()
    }
}

impl fmt::Display for KClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value())
    }
}

/// Quasimomentum in the Brillouin zone `B = {−3, …, 3}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "i64", into = "i64")]
pub struct Momentum(i8);

impl Momentum {
    pub const ZERO: Momentum = Momentum(0);

    /// Reduces any integer into `B`.
    pub fn new(k: i64) -> Momentum {
        let r = k.rem_euclid(N);
        Momentum(if r > 3 { r - N } else { r } as i8)
    }

    pub fn value(self) -> i64 {
        self.0 as i64
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    pub fn all() -> impl Iterator<Item = Momentum> {
        (-3..=3).map(Momentum)
    }

    pub fn nonzero() -> impl Iterator<Item = Momentum> {
        Momentum::all().filter(|k| !k.is_zero())
    }

    pub fn class(self) -> Option<KClass> {
        KClass::from_residue(self.value())
    }

    pub fn scaled(self, l: CycAut) -> Momentum {
        Momentum::new(self.value() * l.value())
    }

    pub fn neg(self) -> Momentum {
        Momentum::new(-self.value())
    }
}

impl TryFrom<i64> for Momentum {
    type Error = Error;
    fn try_from(v: i64) -> Result<Self> {
        if (-3..=3).contains(&v) {
            Ok(Momentum(v as i8))
        } else {
            Err(Error::InvalidArgument(format!("quasimomentum {v} outside -3..=3")))
        }
    }
}

impl From<Momentum> for i64 {
    fn from(k: Momentum) -> i64 {
        k.value()
    }
}

impl fmt::Display for Momentum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// An element `c₀ + c₁ω + … + c₅ω⁵` of `Q(ω)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CycNum {
    coeffs: [Rat; 6],
}

impl CycNum {
    pub fn new(coeffs: [Rat; 6]) -> Self {
        CycNum { coeffs }
    }

    pub fn from_ints(c: [i64; 6]) -> Self {
        CycNum::new(c.map(rat))
    }

    pub fn coeffs(&self) -> &[Rat; 6] {
        &self.coeffs
    }

    /// Reduces a vector indexed by exponents `0..7` using `ω⁶ = −(1 + ω + … + ω⁵)`.
    fn from_seven(mut c: [Rat; 7]) -> Self {
        let top = std::mem::take(&mut c[6]);
        let mut out: [Rat; 6] = Default::default();
        for (o, ci) in out.iter_mut().zip(c) {
            *o = ci - &top;
        }
        CycNum { coeffs: out }
    }

    /// `ω^e` for any integer exponent.
    pub fn omega_pow(e: i64) -> Self {
        let mut c: [Rat; 7] = Default::default();
        c[e.rem_euclid(N) as usize] = Rat::one();
        CycNum::from_seven(c)
    }

    pub fn omega() -> Self {
        CycNum::omega_pow(1)
    }

    /// `η := η₁ − η₋₁ = (ω + ω² + ω⁴) − (ω⁶ + ω⁵ + ω³) = i√7`.
    pub fn eta() -> Self {
        let pos = CycNum::omega_pow(1) + CycNum::omega_pow(2) + CycNum::omega_pow(4);
        let neg = CycNum::omega_pow(6) + CycNum::omega_pow(5) + CycNum::omega_pow(3);
        pos - neg
    }

    /// `Σ mᵢ ω^{eᵢ}` from integer (coefficient, exponent) pairs.
    pub fn from_terms(terms: &[(i64, i64)]) -> Self {
        let mut c: [Rat; 7] = Default::default();
        for &(m, e) in terms {
            c[e.rem_euclid(N) as usize] += rat(m);
        }
        CycNum::from_seven(c)
    }

    /// Coefficients in the root basis `{ω, ω², …, ω⁶}`.
    pub fn root_basis_coeffs(&self) -> [Rat; 6] {
        // 1 = −(ω + … + ω⁶)
        let c0 = &self.coeffs[0];
        std::array::from_fn(|i| {
            let e = i + 1;
            let own = if e < 6 { self.coeffs[e].clone() } else { Rat::zero() };
            own - c0
        })
    }

    pub fn from_root_basis(c: &[Rat; 6]) -> Self {
        let mut seven: [Rat; 7] = Default::default();
        for (i, ci) in c.iter().enumerate() {
            seven[i + 1] = ci.clone();
        }
        CycNum::from_seven(seven)
    }

    pub fn apply_aut(&self, t: CycAut) -> Self {
        let mut c: [Rat; 7] = Default::default();
        for (e, ci) in self.coeffs.iter().enumerate() {
            c[(e as i64 * t.value()).rem_euclid(N) as usize] += ci;
        }
        CycNum::from_seven(c)
    }

    /// `N_{Q(ω)/Q}(x)`: product of the six conjugates.
    pub fn norm(&self) -> Rat {
        let p = CycAut::all().fold(CycNum::one(), |acc, t| acc * self.apply_aut(t));
        debug_assert!(p.is_rational());
        p.coeffs[0].clone()
    }

    pub fn trace(&self) -> Rat {
        let s = CycAut::all().fold(CycNum::zero(), |acc, t| acc + self.apply_aut(t));
        s.coeffs[0].clone()
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs[1..].iter().all(Field::is_zero)
    }

    pub fn is_real(&self) -> bool {
        self.apply_aut(CycAut::CONJUGATION) == *self
    }

    pub fn scale(&self, q: &Rat) -> Self {
        CycNum {
            coeffs: std::array::from_fn(|i| &self.coeffs[i] * q),
        }
    }
}

fn cyc_add(a: &CycNum, b: &CycNum) -> CycNum {
    CycNum {
        coeffs: std::array::from_fn(|i| &a.coeffs[i] + &b.coeffs[i]),
    }
}

fn cyc_sub(a: &CycNum, b: &CycNum) -> CycNum {
    CycNum {
        coeffs: std::array::from_fn(|i| &a.coeffs[i] - &b.coeffs[i]),
    }
}

fn cyc_mul(a: &CycNum, b: &CycNum) -> CycNum {
    let mut c: [Rat; 7] = Default::default();
    for (i, ai) in a.coeffs.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.coeffs.iter().enumerate() {
            if bj.is_zero() {
                continue;
            }
            c[(i + j) % 7] += ai * bj;
        }
    }
    CycNum::from_seven(c)
}

forward_binop!(CycNum, Add, add, cyc_add);
forward_binop!(CycNum, Sub, sub, cyc_sub);
forward_binop!(CycNum, Mul, mul, cyc_mul);

impl std::ops::Neg for CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        CycNum {
            coeffs: self.coeffs.map(|c| -c),
        }
    }
}

impl std::ops::Neg for &CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        -self.clone()
    }
}

impl Field for CycNum {
    fn zero() -> Self {
        CycNum {
            coeffs: Default::default(),
        }
    }
    fn one() -> Self {
        CycNum::from_rat(Rat::one())
    }
    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Field::is_zero)
    }
    fn from_rat(q: Rat) -> Self {
        let mut coeffs: [Rat; 6] = Default::default();
        coeffs[0] = q;
        CycNum { coeffs }
    }
    /// `x⁻¹ = (∏_{l≠1} τ_l x) / N(x)`.
    fn inv(&self) -> Result<Self> {
        if Field::is_zero(self) {
            return Err(Error::DivisionByZero);
        }
        let others = CycAut::all()
            .filter(|t| *t != CycAut::IDENTITY)
            .fold(CycNum::one(), |acc, t| acc * self.apply_aut(t));
        let norm = (self * &others).coeffs[0].clone();
        Ok(others.scale(&norm.recip()))
    }
    fn conj(&self) -> Self {
        self.apply_aut(CycAut::CONJUGATION)
    }
    fn numeric_embed(&self, embedding: CycAut) -> Result<Complex64> {
        let theta = 2.0 * PI * embedding.value() as f64 / 7.0;
        Ok(self
            .coeffs
            .iter()
            .enumerate()
            .map(|(e, c)| Complex64::from_polar(1.0, theta * e as f64) * to_f64(c))
            .sum())
    }
}

impl fmt::Display for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| match e {
                0 => display_rat(c),
                1 => format!("{}·ω", display_rat(c)),
                _ => format!("{}·ω^{e}", display_rat(c)),
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + ").replace("+ -", "- "))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn omega_relations() {
        assert_eq!(CycNum::omega() * CycNum::omega_pow(6), CycNum::one());
        let sum = (0..7).fold(CycNum::zero(), |acc, e| acc + CycNum::omega_pow(e));
        assert!(Field::is_zero(&sum));
        assert_eq!(CycNum::omega().pow(7), CycNum::one());
    }

    #[test]
    fn automorphism_group_law() {
        let t2 = CycAut::new(2).unwrap();
        let t4 = CycAut::new(4).unwrap();
        assert_eq!(t2.compose(t4), CycAut::IDENTITY);
        assert_eq!(CycNum::omega().apply_aut(t2), CycNum::omega_pow(2));
        assert_eq!(CycAut::new(-4).unwrap().order(), 6);
        assert_eq!(CycAut::new(-2).unwrap().order(), 6);
        assert_eq!(CycAut::new(-1).unwrap().order(), 2);
        assert!(CycAut::new(7).is_err());
        for a in CycAut::all() {
            assert_eq!(a.compose(a.inverse()), CycAut::IDENTITY);
        }
    }

    #[test]
    fn eta_squares_to_minus_seven() {
        let eta = CycNum::eta();
        assert_eq!(&eta * &eta, CycNum::from_rat(rat(-7)));
        let z = eta.numeric_embed(CycAut::IDENTITY).unwrap();
        assert!(z.re.abs() < 1e-12 && (z.im - 7f64.sqrt()).abs() < 1e-12);
        // fixed by C3, negated by conjugation
        assert_eq!(eta.apply_aut(CycAut::TAU), eta);
        assert_eq!(eta.conj(), -eta);
    }

    #[test]
    fn root_basis_round_trip() {
        let x = CycNum::from_ints([3, -1, 0, 2, 5, -7]);
        assert_eq!(CycNum::from_root_basis(&x.root_basis_coeffs()), x);
    }

    #[test]
    fn momentum_reduction() {
        assert_eq!(Momentum::new(4).value(), -3);
        assert_eq!(Momentum::new(-4).value(), 3);
        assert_eq!(Momentum::new(3).class(), Some(KClass::Four));
        assert_eq!(Momentum::new(2).scaled(CycAut::new(2).unwrap()).value(), -3);
        assert_eq!(KClass::Four.scaled(CycAut::TAU), KClass::One);
        assert_eq!(CycAut::new(5).unwrap().class(), KClass::Two);
    }
}
