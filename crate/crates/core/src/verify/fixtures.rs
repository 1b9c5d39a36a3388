//! Reference matrices, vectors and polynomials, used only as comparison data.
//!
//! Entries are written in `ξ = ω^k`, `μ_l = ξ^l + ξ^{−l}`.

use crate::linalg::ExactMatrix;
use crate::model::wavelet::xi_pow;
use crate::numbers::{rat, CycNum, DiscTag, Field, KClass, Momentum, RhoNum};

fn c(n: i64) -> CycNum {
    CycNum::from_rat(rat(n))
}

fn q(n: i64) -> RhoNum {
    RhoNum::from_rat(rat(n))
}

fn rows(r: Vec<Vec<CycNum>>) -> ExactMatrix<CycNum> {
    ExactMatrix::from_rows(r).expect("rectangular fixture")
}

pub fn ham0() -> ExactMatrix<CycNum> {
    rows(vec![vec![c(0)]])
}

pub fn ham1(k: Momentum) -> ExactMatrix<CycNum> {
    let x = |e| xi_pow(k, e);
    rows(vec![vec![c(-2) + x(-1) + x(1)]])
}

pub fn ham2(k: Momentum) -> ExactMatrix<CycNum> {
    let x = |e| xi_pow(k, e);
    rows(vec![
        vec![c(-2), c(1) + x(1), c(0)],
        vec![c(1) + x(-1), c(-4), c(1) + x(1)],
        vec![c(0), c(1) + x(-1), c(-4) + x(3) + x(-3)],
    ])
}

pub fn ham3(k: Momentum) -> ExactMatrix<CycNum> {
    let x = |e| xi_pow(k, e);
    rows(vec![
        vec![c(-2), c(1), c(0), x(-1), c(0)],
        vec![c(1), c(-4), c(1), x(-2), x(1)],
        vec![c(0), c(1), c(-4), c(1), c(1) + x(3)],
        vec![x(1), x(2), c(1), c(-4), x(2)],
        vec![c(0), x(-1), c(1) + x(-3), x(-2), c(-6) + x(2) + x(-2)],
    ])
}

pub fn s11(k: Momentum) -> ExactMatrix<CycNum> {
    let x = |e| xi_pow(k, e);
    rows(vec![vec![c(1) + x(-1)], vec![c(1) + x(-2)], vec![c(1) + x(-3)]])
}

pub fn s21(k: Momentum) -> ExactMatrix<CycNum> {
    let x = |e| xi_pow(k, e);
    rows(vec![
        vec![c(1) + x(-1), c(1), c(0)],
        vec![c(1), x(-1), c(1)],
        vec![c(1), c(0), x(3) + x(-1)],
        vec![c(1), x(2), x(2)],
        vec![c(0), c(1) + x(-2), x(3)],
    ])
}

/// `μ_l` at momentum `k`, as an element of `Q(ρ)`.
pub fn mu(k: Momentum, l: i64) -> RhoNum {
    RhoNum::rho_l(k.value() * l)
}

pub fn qubit_h2(k: Momentum) -> ExactMatrix<RhoNum> {
    let m = mu(k, 1);
    let four = q(4);
    ExactMatrix::from_rows(vec![
        vec![-m.clone() - four.clone(), q(2) - m.clone()],
        vec![q(2) + m, mu(k, 4) - four],
    ])
    .expect("2×2")
}

pub fn qubit_h3(k: Momentum) -> ExactMatrix<RhoNum> {
    let four = q(4);
    ExactMatrix::from_rows(vec![
        vec![
            q(-3) - mu(k, 4) - four.clone(),
            q(-1) + mu(k, 2) - mu(k, 4).scale(&rat(2)),
        ],
        vec![q(1) + mu(k, 2), q(1) + mu(k, 2) - four],
    ])
    .expect("2×2")
}

/// `(s, d)` of `f(x) = (x+4)² − s(x+4) + d`.
pub fn charpoly(r_prime: usize, k: Momentum) -> (RhoNum, RhoNum) {
    let m = mu(k, 1);
    let m2 = m.clone() * m.clone();
    match r_prime {
        2 => (q(1) - m.scale(&rat(2)) - m2.clone(), q(-3) + m + m2),
        _ => (q(-5) + m.clone() + m2.scale(&rat(2)), m - m2.scale(&rat(2))),
    }
}

/// `Δ₂ = 16 − μ − 3μ²`, `Δ₃ = 25 − 10μ − 3μ²`.
pub fn disc_in_mu(r_prime: usize, k: Momentum) -> RhoNum {
    let m = mu(k, 1);
    let m2 = m.clone() * m.clone();
    match r_prime {
        2 => q(16) - m - m2.scale(&rat(3)),
        _ => q(25) - m.scale(&rat(10)) - m2.scale(&rat(3)),
    }
}

/// The six discriminants in the basis `{1, ρ, ρ²}`.
pub fn disc_table() -> Vec<(DiscTag, RhoNum)> {
    let t = |rp, k| DiscTag::new(rp, k).expect("valid");
    vec![
        (t(2, KClass::One), RhoNum::from_ints([16, -1, -3])),
        (t(2, KClass::Two), RhoNum::from_ints([9, 3, 2])),
        (t(2, KClass::Four), RhoNum::from_ints([9, -2, 1])),
        (t(3, KClass::One), RhoNum::from_ints([25, -10, -3])),
        (t(3, KClass::Two), RhoNum::from_ints([36, 3, -7])),
        (t(3, KClass::Four), RhoNum::from_ints([9, 7, 10])),
    ]
}

/// Weight-two basis for `k ≠ 0`; the first entry of the second vector is `(1+ξ³)/(1+ξ) = 1−ξ+ξ²`.
pub fn two_magnon_basis(k: Momentum) -> [Vec<CycNum>; 2] {
    let x = |e| xi_pow(k, e);
    let a1 = c(1) + x(1);
    let second = (c(1) + x(3)).checked_div(&a1).expect("1+ξ ≠ 0 for k ≠ 0");
    [vec![c(1) + x(2), -a1, c(0)], vec![second, c(0), c(-1)]]
}

/// Weight-three basis for `k ≠ 0`.
pub fn three_magnon_basis(k: Momentum) -> [Vec<CycNum>; 2] {
    let x = |e| xi_pow(k, e);
    [
        vec![c(0), -(c(1) + x(-2)), -(x(2) - x(-2)), c(1) + x(2), x(-1) - x(-2)],
        vec![x(1) - x(5), x(5) + x(6), c(0), -(x(1) + x(2)), x(3) - x(1)],
    ]
}

/// `k = 0` eigenvectors: weight two with energies −2, −6; weight three with −5.
/// Weight-three vectors have the form `(2t, −3t+s, 2t, −3t−s, 2t)`.
pub fn zero_momentum_vectors(r_prime: usize) -> [Vec<CycNum>; 2] {
    let v = |xs: &[i64]| xs.iter().map(|&n| c(n)).collect::<Vec<_>>();
    match r_prime {
        2 => [v(&[-1, 0, 1]), v(&[1, -2, 1])],
        _ => [v(&[2, -3, 2, -3, 2]), v(&[0, 1, 0, -1, 0])],
    }
}

pub fn zero_momentum_energies(r_prime: usize) -> [i64; 2] {
    match r_prime {
        2 => [-2, -6],
        _ => [-5, -5],
    }
}

/// Closed forms `P_{r,r′}^k` built from `S₁,₁`, `S₂,₁` and `S₁,₂ = S₂,₁ S₁,₁`.
pub fn projector_closed_form(r: usize, r_prime: usize, k: Momentum) -> Option<ExactMatrix<CycNum>> {
    let s11 = s11(k);
    let s21 = s21(k);
    let s12 = s21.mul(&s11).ok()?;
    let gram = |s: &ExactMatrix<CycNum>, a: i64, b: i64| {
        s.mul(&s.adjoint()).expect("square").scale(&CycNum::from_rat(crate::numbers::ratio(a, b)))
    };
    match (r, r_prime) {
        (2, 1) => Some(gram(&s11, 1, 5)),
        (2, 2) => ExactMatrix::identity(3).sub(&gram(&s11, 1, 5)).ok(),
        (3, 1) => Some(gram(&s12, 1, 40)),
        (3, 2) => gram(&s21, 1, 3).sub(&gram(&s12, 1, 15)).ok(),
        (3, 3) => ExactMatrix::identity(5)
            .sub(&gram(&s21, 1, 3))
            .and_then(|m| m.add(&gram(&s12, 1, 24)))
            .ok(),
        _ => None,
    }
}

/// Orbit table below the equator: `(r, dim, [(t, islands)])`.
pub fn orbit_table() -> Vec<(usize, usize, Vec<(Vec<u8>, usize)>)> {
    vec![
        (0, 1, vec![(vec![], 0)]),
        (1, 7, vec![(vec![7], 1)]),
        (2, 21, vec![(vec![1, 6], 1), (vec![2, 5], 2), (vec![3, 4], 2)]),
        (
            3,
            35,
            vec![
                (vec![1, 1, 5], 1),
                (vec![1, 2, 4], 2),
                (vec![1, 3, 3], 2),
                (vec![1, 4, 2], 2),
                (vec![2, 2, 3], 3),
            ],
        ),
    ]
}
