//! Rational reconstruction of floating-point values by continued fractions.

use num_bigint::BigInt;

use super::rat::Rat;

/// Denominator bound used by the square-root search.
pub const DEFAULT_MAX_DENOMINATOR: u64 = 1_000_000;

/// The last continued-fraction convergent of `x` whose denominator does not exceed
/// `max_den`. Returns `None` for non-finite input.
pub fn rationalize(x: f64, max_den: u64) -> Option<Rat> {
    if !x.is_finite() {
        return None;
    }
    let (mut p0, mut q0, mut p1, mut q1) = (0i128, 1i128, 1i128, 0i128);
    let mut rem = x;
    for _ in 0..64 {
        let a = rem.floor();
        if a.abs() > 1e15 {
            break;
        }
        let a = a as i128;
        let p2 = a * p1 + p0;
        let q2 = a * q1 + q0;
        if q2 > max_den as i128 {
            break;
        }
        (p0, q0, p1, q1) = (p1, q1, p2, q2);
        let frac = rem - a as f64;
        if frac.abs() < 1e-12 {
            break;
        }
        rem = 1.0 / frac;
    }
    (q1 != 0).then(|| Rat::new(BigInt::from(p1), BigInt::from(q1)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numbers::rat::{rat, ratio};

    #[test]
    fn recovers_small_fractions() {
        assert_eq!(rationalize(0.75, 1000), Some(ratio(3, 4)));
        assert_eq!(rationalize(-2.0, 1000), Some(rat(-2)));
        assert_eq!(rationalize(-7.0 / 3.0 + 1e-13, 1_000_000), Some(ratio(-7, 3)));
        assert_eq!(rationalize(f64::NAN, 10), None);
    }

    #[test]
    fn respects_the_bound() {
        let pi = rationalize(std::f64::consts::PI, 1000).unwrap();
        assert_eq!(pi, ratio(355, 113));
        assert_eq!(rationalize(std::f64::consts::PI, 100).unwrap(), ratio(22, 7));
    }
}
