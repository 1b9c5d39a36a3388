//! Square-class decisions in `Q(ρ)`: either an exact square root or a disproof.

use num_bigint::BigInt;

use super::cyclotomic::CycAut;
use super::field::Field;
use super::quadratic::DiscTag;
use super::rat::{common_denominator, is_perfect_square, Rat};
use super::real::{valuation, RhoNum};
use super::reconstruct::{rationalize, DEFAULT_MAX_DENOMINATOR};
use crate::error::{Error, Result};

/// Why an element is not a square in `Q(ρ)`.
#[derive(Clone, Debug, PartialEq)]
pub enum NonSquareCertificate {
    /// `N_{K/Q}(x)` is not a square in `Q`.
    NormNotSquare { norm: Rat },
    /// `x` (scaled into `Z[ρ]` by a rational square) has odd valuation at a prime.
    OddValuation {
        prime_of: DiscTag,
        prime: RhoNum,
        valuation: u32,
    },
}

#[derive(Clone, Debug, PartialEq)]
pub enum SqrtOutcome {
    Square(RhoNum),
    NonSquare(NonSquareCertificate),
}

/// The designated prime attached to a discriminant: `π₂^k = Δ₂^k` (norm 1289) and
/// `π₃^k = τ^{e+1}(3 + ρ)` (norm 13) where `k = τ^e(1)`. The ramified `2 − ρ` is never used.
pub fn designated_prime(tag: DiscTag) -> RhoNum {
    match tag.r_prime() {
        2 => tag.value(),
        _ => RhoNum::from_ints([3, 1, 0]).tau_pow(tag.k().tau_exponent() + 1),
    }
}

/// Tries to take an exact square root of `x` in `Q(ρ)`.
///
/// Candidates come from the eight sign choices of the real square roots in the three
/// embeddings, rationalized coefficientwise and verified by exact squaring. Failing
/// that, nonsquareness is proven from the rational norm or from an odd valuation at
/// one of the designated primes.
pub fn sqrt_in_rho(x: &RhoNum) -> Result<SqrtOutcome> {
    if x.is_zero() {
        return Err(Error::ZeroInput);
    }
    if let Some(y) = numeric_root_search(x) {
        return Ok(SqrtOutcome::Square(y));
    }
    let norm = x.norm();
    if !is_perfect_square(&norm) {
        return Ok(SqrtOutcome::NonSquare(NonSquareCertificate::NormNotSquare {
            norm,
        }));
    }
    let (scaled, _) = integral_square_multiple(x);
    for tag in DiscTag::all() {
        let prime = designated_prime(tag);
        let v = valuation(&scaled, &prime)?;
        if v % 2 == 1 {
            return Ok(SqrtOutcome::NonSquare(NonSquareCertificate::OddValuation {
                prime_of: tag,
                prime,
                valuation: v,
            }));
        }
    }
    Err(Error::Undecided(x.to_string()))
}

fn numeric_root_search(x: &RhoNum) -> Option<RhoNum> {
    let embeddings: Vec<CycAut> = (1..=3).map(|l| CycAut::new(l).unwrap()).collect();
    let values: Vec<f64> = embeddings.iter().map(|e| x.to_f64(*e)).collect();
    if values.iter().any(|v| *v < 0.0) {
        return None;
    }
    let roots: Vec<f64> = values.iter().map(|v| v.sqrt()).collect();
    let nodes: Vec<f64> = embeddings
        .iter()
        .map(|e| RhoNum::rho().to_f64(*e))
        .collect();
    for signs in 0..8u32 {
        let target: Vec<f64> = (0..3)
            .map(|j| if signs >> j & 1 == 1 { -roots[j] } else { roots[j] })
            .collect();
        let Some(c) = solve_vandermonde3(&nodes, &target) else {
            continue;
        };
        let coeffs: Option<Vec<Rat>> = c
            .iter()
            .map(|v| rationalize(*v, DEFAULT_MAX_DENOMINATOR))
            .collect();
        let Some(coeffs) = coeffs else { continue };
        let y = RhoNum::new([coeffs[0].clone(), coeffs[1].clone(), coeffs[2].clone()]);
        if &y * &y == *x {
            return Some(y);
        }
    }
    None
}

/// Solves `Σᵢ cᵢ nodeⱼⁱ = targetⱼ` by Cramer's rule.
fn solve_vandermonde3(nodes: &[f64], target: &[f64]) -> Option<[f64; 3]> {
    let m = |j: usize| [1.0, nodes[j], nodes[j] * nodes[j]];
    let rows = [m(0), m(1), m(2)];
    let det3 = |a: [[f64; 3]; 3]| {
        a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1])
            - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
            + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0])
    };
    let det = det3(rows);
    if det.abs() < 1e-12 {
        return None;
    }
    let mut out = [0.0; 3];
    for (i, o) in out.iter_mut().enumerate() {
        let mut a = rows;
        for j in 0..3 {
            a[j][i] = target[j];
        }
        *o = det3(a) / det;
    }
    Some(out)
}

/// Clears denominators: `x · d²` lies in `Z[ρ]` and has the square class of `x`.
pub fn integral_square_multiple(x: &RhoNum) -> (RhoNum, BigInt) {
    let d = common_denominator(x.coeffs());
    let scaled = x.scale(&Rat::from_integer(&d * &d));
    debug_assert!(scaled.is_integral() && d.sign() != num_bigint::Sign::NoSign);
    (scaled, d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numbers::rat::rat;

    #[test]
    fn square_of_rho() {
        let rho = RhoNum::rho();
        match sqrt_in_rho(&(&rho * &rho)).unwrap() {
            SqrtOutcome::Square(y) => assert!(y == rho || y == -rho),
            other => panic!("expected a root, got {other:?}"),
        }
    }

    #[test]
    fn two_magnon_discriminant_has_prime_norm() {
        let d = DiscTag::all()[0].value();
        assert_eq!(
            sqrt_in_rho(&d).unwrap(),
            SqrtOutcome::NonSquare(NonSquareCertificate::NormNotSquare { norm: rat(1289) })
        );
    }

    #[test]
    fn product_with_square_norm_uses_valuation() {
        let [t1, t2, ..] = DiscTag::all();
        let x = t1.value() * t2.value();
        assert_eq!(x.norm(), rat(1289 * 1289));
        match sqrt_in_rho(&x).unwrap() {
            SqrtOutcome::NonSquare(NonSquareCertificate::OddValuation {
                prime_of,
                valuation,
                ..
            }) => {
                assert_eq!(prime_of, t1);
                assert_eq!(valuation, 1);
            }
            other => panic!("expected valuation certificate, got {other:?}"),
        }
    }

    #[test]
    fn designated_primes_have_expected_norms() {
        for tag in DiscTag::all() {
            let n = designated_prime(tag).norm();
            assert_eq!(n, rat(if tag.r_prime() == 2 { 1289 } else { 13 }));
        }
    }

    #[test]
    fn zero_is_rejected() {
        assert!(matches!(sqrt_in_rho(&RhoNum::zero()), Err(Error::ZeroInput)));
    }
}
