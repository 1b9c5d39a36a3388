//! The real subfield `Q(ρ)`, `ρ = ω + ω⁻¹`, in the basis `{1, ρ, ρ²}` with
//! `ρ³ = 1 + 2ρ − ρ²`.

use std::f64::consts::PI;
use std::fmt;

use num_complex::Complex64;
use num_traits::Signed;

use super::cyclotomic::{CycAut, CycNum, KClass};
use super::field::{forward_binop, Field};
use super::rat::{display_rat, rat, to_f64, Rat};
use crate::error::{Error, Result};

/// An element `a₀ + a₁ρ + a₂ρ²` of `Q(ρ)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RhoNum {
    coeffs: [Rat; 3],
}

impl RhoNum {
    pub fn new(coeffs: [Rat; 3]) -> Self {
        RhoNum { coeffs }
    }

    pub fn from_ints(c: [i64; 3]) -> Self {
        RhoNum::new(c.map(rat))
    }

    pub fn coeffs(&self) -> &[Rat; 3] {
        &self.coeffs
    }

    pub fn rho() -> Self {
        RhoNum::from_ints([0, 1, 0])
    }

    /// `ρ_l = ω^l + ω^{−l}`; `ρ₀ = 2`, `ρ₂ = ρ² − 2`, `ρ₃ = ρ₄ = 1 − ρ − ρ²`.
    pub fn rho_l(l: i64) -> Self {
        match l.rem_euclid(7) {
            0 => RhoNum::from_ints([2, 0, 0]),
            1 | 6 => RhoNum::from_ints([0, 1, 0]),
            2 | 5 => RhoNum::from_ints([-2, 0, 1]),
            _ => RhoNum::from_ints([1, -1, -1]),
        }
    }

    pub fn rho_class(c: KClass) -> Self {
        RhoNum::rho_l(c.value())
    }

    /// Evaluates a rational polynomial (coefficients low to high) at `self`.
    pub fn eval_poly(&self, poly: &[Rat]) -> RhoNum {
        poly.iter()
            .rev()
            .fold(RhoNum::zero(), |acc, c| acc * self + RhoNum::from_rat(c.clone()))
    }

    /// `τ = τ₂`: `ρ ↦ ρ₂`, `ρ² ↦ ρ₂² = 3 − ρ − ρ²`.
    fn tau(&self) -> Self {
        let [a0, a1, a2] = &self.coeffs;
        RhoNum::new([
            a0 - rat(2) * a1 + rat(3) * a2,
            -a2.clone(),
            a1 - a2,
        ])
    }

    /// `τ_l` restricted to `Q(ρ)`: depends only on `l` up to sign.
    pub fn apply_aut(&self, t: CycAut) -> Self {
        self.tau_pow(t.class().tau_exponent())
    }

    pub fn tau_pow(&self, e: u32) -> Self {
        (0..e % 3).fold(self.clone(), |x, _| x.tau())
    }

    /// The conjugates `(a₁, a₂, a₄) = (a, τa, τ²a)`.
    pub fn conjugates(&self) -> [RhoNum; 3] {
        let a2 = self.tau();
        let a4 = a2.tau();
        [self.clone(), a2, a4]
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs[1].is_zero() && self.coeffs[2].is_zero()
    }

    /// `tr_{K/Q}(a) = a₁ + a₂ + a₄`.
    pub fn trace(&self) -> Rat {
        let [a1, a2, a4] = self.conjugates();
        let t = a1 + a2 + a4;
        debug_assert!(t.is_rational());
        t.coeffs[0].clone()
    }

    /// `N_{K/Q}(a) = a₁a₂a₄`.
    pub fn norm(&self) -> Rat {
        let [a1, a2, a4] = self.conjugates();
        let n = a1 * a2 * a4;
        debug_assert!(n.is_rational());
        n.coeffs[0].clone()
    }

    /// Integer coefficients in `{1, ρ, ρ²}`, i.e. membership in `Z[ρ] = O_K`.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    pub fn scale(&self, q: &Rat) -> Self {
        RhoNum::new(std::array::from_fn(|i| &self.coeffs[i] * q))
    }

    pub fn embed(&self) -> CycNum {
        embed(self)
    }

    pub fn to_f64(&self, embedding: CycAut) -> f64 {
        let r = 2.0 * (2.0 * PI * embedding.value() as f64 / 7.0).cos();
        to_f64(&self.coeffs[0]) + to_f64(&self.coeffs[1]) * r + to_f64(&self.coeffs[2]) * r * r
    }
}

/// `(trace, norm)` over `Q`.
pub fn trace_norm(x: &RhoNum) -> (Rat, Rat) {
    (x.trace(), x.norm())
}

/// `N(x + yρ) = x³ − x²y − 2xy² + y³`.
pub fn norm_linear_closed_form(x: &Rat, y: &Rat) -> Rat {
    x * x * x - x * x * y - rat(2) * x * y * y + y * y * y
}

/// `N(x + a) = x³ + tr(a)x² + ½[(tr a)² − tr(a²)]x + N(a)`.
pub fn norm_shift_closed_form(x: &Rat, a: &RhoNum) -> Rat {
    let t = a.trace();
    let t2 = (a * a).trace();
    x * x * x + &t * x * x + (&t * &t - t2) / rat(2) * x + a.norm()
}

/// Embeds `Q(ρ)` in `Q(ω)` via `ρ = ω + ω⁶`.
pub fn embed(x: &RhoNum) -> CycNum {
    let r = CycNum::omega_pow(1) + CycNum::omega_pow(6);
    let r2 = &r * &r;
    CycNum::from_rat(x.coeffs[0].clone())
        + r.scale(&x.coeffs[1])
        + r2.scale(&x.coeffs[2])
}

/// Inverse of [`embed`] on the conjugation-fixed part of `Q(ω)`.
pub fn project(x: &CycNum) -> Result<RhoNum> {
    let c = x.coeffs();
    // real ⇔ c₁ = 0, c₂ = c₅, c₃ = c₄; then x = c₀ + c₂ρ₂ + c₃ρ₄
    if !(c[1].is_zero() && c[2] == c[5] && c[3] == c[4]) {
        return Err(Error::NotReal(x.to_string()));
    }
    let out = RhoNum::from_rat(c[0].clone())
        + RhoNum::rho_l(2).scale(&c[2])
        + RhoNum::rho_l(4).scale(&c[3]);
    debug_assert_eq!(embed(&out), *x);
    Ok(out)
}

/// Largest `v` such that `x / πᵛ` lies in `Z[ρ]`.
pub fn valuation(x: &RhoNum, pi: &RhoNum) -> Result<u32> {
    if x.is_zero() {
        return Err(Error::ZeroInput);
    }
    if !x.is_integral() {
        return Err(Error::NonIntegral(x.to_string()));
    }
    let n = pi.norm();
    if !pi.is_integral() || n.abs() <= Rat::one() {
        return Err(Error::InvalidArgument(format!(
            "{pi} is not a prime generator (norm {n})"
        )));
    }
    let pi_inv = pi.inv()?;
    let mut v = 0;
    let mut cur = x.clone();
    loop {
        let q = &cur * &pi_inv;
        if !q.is_integral() {
            return Ok(v);
        }
        cur = q;
        v += 1;
    }
}

fn rho_add(a: &RhoNum, b: &RhoNum) -> RhoNum {
    RhoNum::new(std::array::from_fn(|i| &a.coeffs[i] + &b.coeffs[i]))
}

fn rho_sub(a: &RhoNum, b: &RhoNum) -> RhoNum {
    RhoNum::new(std::array::from_fn(|i| &a.coeffs[i] - &b.coeffs[i]))
}

fn rho_mul(a: &RhoNum, b: &RhoNum) -> RhoNum {
    let mut p: [Rat; 5] = Default::default();
    for (i, ai) in a.coeffs.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.coeffs.iter().enumerate() {
            p[i + j] += ai * bj;
        }
    }
    let [p0, p1, p2, p3, p4] = p;
    // ρ³ = 1 + 2ρ − ρ², ρ⁴ = −1 − ρ + 3ρ²
    RhoNum::new([
        p0 + &p3 - &p4,
        p1 + rat(2) * &p3 - &p4,
        p2 - &p3 + rat(3) * &p4,
    ])
}

forward_binop!(RhoNum, Add, add, rho_add);
forward_binop!(RhoNum, Sub, sub, rho_sub);
forward_binop!(RhoNum, Mul, mul, rho_mul);

impl std::ops::Neg for RhoNum {
    type Output = RhoNum;
    fn neg(self) -> RhoNum {
        RhoNum::new(self.coeffs.map(|c| -c))
    }
}

impl std::ops::Neg for &RhoNum {
    type Output = RhoNum;
    fn neg(self) -> RhoNum {
        -self.clone()
    }
}

impl Field for RhoNum {
    fn zero() -> Self {
        RhoNum::new(Default::default())
    }
    fn one() -> Self {
        RhoNum::from_rat(Rat::one())
    }
    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Field::is_zero)
    }
    fn from_rat(q: Rat) -> Self {
        RhoNum::new([q, Rat::zero(), Rat::zero()])
    }
    /// `x⁻¹ = τ(x)τ²(x) / N(x)`.
    fn inv(&self) -> Result<Self> {
        if Field::is_zero(self) {
            return Err(Error::DivisionByZero);
        }
        let [_, a2, a4] = self.conjugates();
        let n = self.norm();
        Ok((a2 * a4).scale(&n.recip()))
    }
    fn conj(&self) -> Self {
        self.clone()
    }
    fn numeric_embed(&self, embedding: CycAut) -> Result<Complex64> {
        Ok(Complex64::new(self.to_f64(embedding), 0.0))
    }
}

impl fmt::Display for RhoNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| match e {
                0 => display_rat(c),
                1 => format!("{}·ρ", display_rat(c)),
                _ => format!("{}·ρ²", display_rat(c)),
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

    fn r(c: [i64; 3]) -> RhoNum {
        RhoNum::from_ints(c)
    }

    #[test]
    fn minimal_polynomial_reductions() {
        let rho = RhoNum::rho();
        assert_eq!(rho.pow(3), r([1, 2, -1]));
        assert_eq!(rho.pow(4), r([-1, -1, 3]));
        // x³ + x² − 2x − 1 vanishes at ρ
        let p = [rat(-1), rat(-2), rat(1), rat(1)];
        assert!(rho.eval_poly(&p).is_zero());
    }

    #[test]
    fn trace_and_norm_of_rho() {
        let rho = RhoNum::rho();
        assert_eq!(rho.trace(), rat(-1));
        assert_eq!((&rho * &rho).trace(), rat(5));
        assert_eq!(rho.norm(), rat(1));
        assert_eq!(r([5, 1, 0]).norm(), rat(91));
        assert_eq!(r([5, -3, 0]).norm(), rat(83));
        assert_eq!(r([3, 1, 0]).norm(), rat(13));
        assert_eq!(r([2, -1, 0]).norm(), rat(7));
    }

    #[test]
    fn tau_cycles_rho_l() {
        let t = CycAut::TAU;
        assert_eq!(RhoNum::rho_l(1).apply_aut(t), RhoNum::rho_l(2));
        assert_eq!(RhoNum::rho_l(2).apply_aut(t), RhoNum::rho_l(4));
        assert_eq!(RhoNum::rho_l(4).apply_aut(t), RhoNum::rho_l(1));
        assert_eq!(RhoNum::rho().apply_aut(CycAut::CONJUGATION), RhoNum::rho());
        // agrees with τ₂ on the cyclotomic side
        let x = r([3, -2, 5]);
        assert_eq!(embed(&x.apply_aut(t)), embed(&x).apply_aut(t));
    }

    #[test]
    fn embed_project() {
        assert_eq!(embed(&RhoNum::rho()), CycNum::omega_pow(1) + CycNum::omega_pow(6));
        let w25 = CycNum::omega_pow(2) + CycNum::omega_pow(5);
        assert_eq!(project(&w25).unwrap(), r([-2, 0, 1]));
        assert!(matches!(project(&CycNum::omega()), Err(Error::NotReal(_))));
    }

    #[test]
    fn valuation_errors() {
        let d = r([16, -1, -3]);
        assert!(matches!(valuation(&RhoNum::zero(), &d), Err(Error::ZeroInput)));
        let half = RhoNum::from_rat(super::super::rat::ratio(1, 2));
        assert!(matches!(valuation(&half, &d), Err(Error::NonIntegral(_))));
        assert!(valuation(&d, &RhoNum::one()).is_err());
        assert_eq!(valuation(&d, &d).unwrap(), 1);
        assert_eq!(valuation(&(&d * &d), &d).unwrap(), 2);
    }

    #[test]
    fn closed_forms_agree_with_products() {
        for x in -4..=4 {
            for y in -4..=4 {
                let (x, y) = (rat(x), rat(y));
                let e = RhoNum::new([x.clone(), y.clone(), Rat::zero()]);
                assert_eq!(e.norm(), norm_linear_closed_form(&x, &y));
            }
        }
    }
}
