//! Named basis elements of the algebras used throughout the crate.
//!
//! Spacetime Cl(1,3) puts the positive-square vector first: `γ0 = e1`,
//! `γ1 = e2`, `γ2 = e3`, `γ3 = e4`. The Pauli algebra Cl(3,0) uses
//! `σk = ek`.

use crate::algebra::{Multivector, Signature};

/// Spacetime vector `γμ`, `μ ∈ 0..=3`.
pub fn gamma(mu: usize) -> Multivector {
    assert!(mu < 4, "spacetime index out of range");
    Multivector::blade(Signature::CL13, 1 << mu, 1.0)
}

/// Relative vector `σk = γk γ0`, `k ∈ 1..=3`.
pub fn sigma(k: usize) -> Multivector {
    assert!((1..=3).contains(&k), "spatial index out of range");
    gamma(k) * gamma(0)
}

/// Spacetime pseudoscalar `I = γ0123`.
pub fn sta_pseudoscalar() -> Multivector {
    Multivector::pseudoscalar(Signature::CL13)
}

/// `I σk`, the spatial bivectors of spacetime.
pub fn i_sigma(k: usize) -> Multivector {
    sta_pseudoscalar() * sigma(k)
}

/// Pauli vector `σk` of Cl(3,0).
pub fn pauli(k: usize) -> Multivector {
    assert!((1..=3).contains(&k), "Pauli index out of range");
    Multivector::blade(Signature::CL3, 1 << (k - 1), 1.0)
}

/// Pseudoscalar `I = σ1σ2σ3` of Cl(3,0).
pub fn pauli_pseudoscalar() -> Multivector {
    Multivector::pseudoscalar(Signature::CL3)
}

/// Quaternion units inside Cl(3,0): `i1 = -Iσ1`, `i2 = Iσ2`, `i3 = Iσ3`.
pub fn quaternion_units() -> [Multivector; 3] {
    let i = pauli_pseudoscalar();
    [-(&i * pauli(1)), &i * pauli(2), &i * pauli(3)]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relative_vectors_square_to_one() {
        for k in 1..=3 {
            let s = sigma(k);
            assert_eq!(&s * &s, Multivector::scalar(Signature::CL13, 1.0));
        }
        let i = sta_pseudoscalar();
        assert_eq!(&i * &i, Multivector::scalar(Signature::CL13, -1.0));
        assert_eq!(sigma(1) * sigma(2) * sigma(3), i);
    }

    #[test]
    fn i_sigma3_is_gamma21() {
        assert_eq!(i_sigma(3), gamma(2) * gamma(1));
        assert_eq!(i_sigma(2), gamma(1) * gamma(3));
    }

    #[test]
    fn quaternion_units_obey_hamilton() {
        let [i1, i2, i3] = quaternion_units();
        let minus_one = Multivector::scalar(Signature::CL3, -1.0);
        assert_eq!(&i1 * &i1, minus_one);
        assert_eq!(&i2 * &i2, minus_one);
        assert_eq!(&i3 * &i3, minus_one);
        assert_eq!(&i1 * &i2 * &i3, minus_one);
        assert_eq!(&i1 * &i2, i3);
    }
}
