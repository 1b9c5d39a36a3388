//! Actions of wreath elements on field elements, operators, wavelets and spectra.

use crate::linalg::ExactMatrix;
use crate::model::SpectrumRecord;
use crate::numbers::{CycNum, Momentum, QuadBase, QuadNum, Rat, RhoNum};

use super::wreath::WreathElement;

/// Field automorphism induced by a group element.
pub trait GaloisAct: Sized {
    fn act(&self, g: &WreathElement) -> Self;
}

impl GaloisAct for Rat {
    fn act(&self, _: &WreathElement) -> Self {
        self.clone()
    }
}

impl GaloisAct for RhoNum {
    fn act(&self, g: &WreathElement) -> Self {
        self.apply_aut(g.l())
    }
}

impl GaloisAct for CycNum {
    fn act(&self, g: &WreathElement) -> Self {
        self.apply_aut(g.l())
    }
}

/// `τ_l` on the base and `√Δ^k ↦ ε_k √Δ^{φ(l)k}`.
impl<B: QuadBase> GaloisAct for QuadNum<B> {
    fn act(&self, g: &WreathElement) -> Self {
        let sign = self.tag().map_or(1, |t| g.sign(t));
        self.apply_aut_signed(g.l(), sign)
    }
}

pub fn act_on_element<F: GaloisAct>(g: &WreathElement, x: &F) -> F {
    x.act(g)
}

/// Entrywise action `Θ_g`.
pub fn act_on_operator<F: GaloisAct + crate::numbers::Field>(
    g: &WreathElement,
    m: &ExactMatrix<F>,
) -> ExactMatrix<F> {
    m.map(|x| x.act(g))
}

pub fn act_on_vector<F: GaloisAct>(g: &WreathElement, v: &[F]) -> Vec<F> {
    v.iter().map(|x| x.act(g)).collect()
}

/// `k ↦ lk`.
pub fn act_on_momentum(g: &WreathElement, k: Momentum) -> Momentum {
    k.scaled(g.l())
}

/// Image `(lk, r′, ε_{r′,k} ν)` of a level label; `k = 0` and weights below 2 carry no sign.
pub fn act_on_level(g: &WreathElement, k: Momentum, r_prime: u8, nu: Option<i8>) -> (Momentum, u8, Option<i8>) {
    let nu = match (nu, k.class()) {
        (Some(n), Some(class)) if r_prime >= 2 => {
            let tag = crate::numbers::DiscTag::new(r_prime, class).expect("qubit weight");
            Some(n * g.sign(tag))
        }
        (n, _) => n,
    };
    (act_on_momentum(g, k), r_prime, nu)
}

/// `perm[i] = j` when record `i` is sent to record `j`.
pub fn act_on_spectrum(g: &WreathElement, records: &[SpectrumRecord]) -> Vec<usize> {
    records
        .iter()
        .map(|r| {
            let image = act_on_level(g, r.k, r.r_prime, r.nu);
            records
                .iter()
                .position(|s| (s.k, s.r_prime, s.nu) == image)
                .expect("the spectrum is closed under the group")
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::galois::Variant;
    use crate::model::full_spectrum;
    use crate::numbers::{CycAut, DiscTag, Field, KClass};

    fn element(eps: [[i8; 3]; 2], l: i64) -> WreathElement {
        WreathElement::new(eps, CycAut::new(l).unwrap(), Variant::ComplexDouble).unwrap()
    }

    #[test]
    fn roots_move_with_l_and_eps() {
        let t1 = DiscTag::new(2, KClass::One).unwrap();
        let t2 = DiscTag::new(2, KClass::Two).unwrap();
        let g = element([[1; 3]; 2], 2);
        assert_eq!(QuadNum::<RhoNum>::sqrt_disc(t1).act(&g), QuadNum::sqrt_disc(t2));
        let h = element([[-1, 1, 1], [1; 3]], 1);
        assert_eq!(QuadNum::<RhoNum>::sqrt_disc(t1).act(&h), -QuadNum::sqrt_disc(t1));
        assert_eq!(QuadNum::<RhoNum>::sqrt_disc(t2).act(&h), QuadNum::sqrt_disc(t2));
    }

    #[test]
    fn composition_matches_group_law() {
        let all = WreathElement::enumerate(Variant::ComplexDouble).unwrap();
        let x = QuadNum::new(RhoNum::from_ints([1, 2, -1]), RhoNum::from_ints([0, 1, 3]), DiscTag::all()[4]);
        for g in all.iter().step_by(7) {
            for h in all.iter().step_by(11) {
                assert_eq!(x.act(h).act(g), x.act(&g.mul(h).unwrap()));
            }
        }
    }

    #[test]
    fn spectrum_action() {
        let s = full_spectrum().unwrap();
        for g in WreathElement::enumerate(Variant::ComplexDouble).unwrap() {
            let perm = act_on_spectrum(&g, &s);
            for (i, &j) in perm.iter().enumerate() {
                assert_eq!(s[i].energy_exact.act(&g), s[j].energy_exact);
                if s[i].k.is_zero() {
                    assert_eq!(i, j);
                }
            }
            let mut sorted = perm.clone();
            sorted.sort();
            assert_eq!(sorted, (0..s.len()).collect::<Vec<_>>());
        }
    }

    #[test]
    fn identity_fixes_everything() {
        let s = full_spectrum().unwrap();
        let e = WreathElement::identity(Variant::ComplexDouble);
        assert_eq!(act_on_spectrum(&e, &s), (0..s.len()).collect::<Vec<_>>());
        let x = CycNum::from_ints([1, 2, 3, 4, 5, 6]);
        assert_eq!(x.act(&e), x);
        assert!(Rat::one().act(&e).is_one());
    }
}
