//! Pin and Spin groups as normalized versors, and their actions.
//!
//! A versor `U` with `U Ũ = ±1` acts two-sidedly on multivectors as
//! `A ↦ ±U A Ũ` (rotations and reflections) and one-sidedly on spinors as
//! `ψ ↦ U ψ`.

use serde::Serialize;

use crate::algebra::{Multivector, Sign, Tolerance};
use crate::error::{Error, Result};
use crate::text::serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum VersorTag {
    NotVersor,
    Pin,
    Spin,
    SpinPlus,
}

impl std::fmt::Display for VersorTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            VersorTag::NotVersor => "not_versor",
            VersorTag::Pin => "pin",
            VersorTag::Spin => "spin",
            VersorTag::SpinPlus => "spin_plus",
        })
    }
}

/// Group membership of a multivector together with its norm `U Ũ` (when
/// that norm is a scalar).
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct VersorClass {
    pub tag: VersorTag,
    pub norm_value: Option<f64>,
}

impl VersorClass {
    pub fn is_pin(&self) -> bool {
        self.tag != VersorTag::NotVersor
    }

    pub fn is_spin(&self) -> bool {
        matches!(self.tag, VersorTag::Spin | VersorTag::SpinPlus)
    }

    pub fn is_spin_plus(&self) -> bool {
        self.tag == VersorTag::SpinPlus
    }
}

/// Decides Pin / Spin / Spin+ membership numerically.
///
/// Pin needs `U Ũ = ±1`, a single parity, and `U e_i Ũ` to be a vector for
/// every basis vector. Spin adds evenness; Spin+ adds `U Ũ = +1`.
pub fn classify_versor(u: &Multivector, tol: &Tolerance) -> VersorClass {
    let rev = u.reverse();
    let norm = u * &rev;
    if !norm.is_scalar(tol) {
        return VersorClass {
            tag: VersorTag::NotVersor,
            norm_value: None,
        };
    }
    let n = norm.scalar_part();
    let not_versor = VersorClass {
        tag: VersorTag::NotVersor,
        norm_value: Some(n),
    };
    let unit = tol.approx_eq(n, 1.0) || tol.approx_eq(n, -1.0);
    let even = u.is_even(tol);
    if !unit || !(even || u.is_odd(tol)) {
        return not_versor;
    }
    let sig = u.sig();
    let preserves_vectors = (1..=sig.dim()).all(|i| {
        let e = Multivector::basis_vector(sig, i).expect("index in range");
        (u * &e * &rev).is_grade(1, tol)
    });
    if !preserves_vectors {
        return not_versor;
    }
    let tag = match (even, n > 0.0) {
        (true, true) => VersorTag::SpinPlus,
        (true, false) => VersorTag::Spin,
        (false, _) => VersorTag::Pin,
    };
    VersorClass {
        tag,
        norm_value: Some(n),
    }
}

/// `± U A Ũ`.
pub fn adjoint_act(u: &Multivector, a: &Multivector, sign: Sign, tol: &Tolerance) -> Result<Multivector> {
    if !classify_versor(u, tol).is_pin() {
        return Err(Error::NonInvertibleVersor {
            norm: serialize(&(u * &u.reverse())),
        });
    }
    Ok(u.try_mul(a)? * &u.reverse() * sign.value())
}

/// `U ψ` for `U` in Spin(p,q) and an even spinor `ψ`.
pub fn spinor_transform(u: &Multivector, psi: &Multivector, tol: &Tolerance) -> Result<Multivector> {
    if !classify_versor(u, tol).is_spin() {
        return Err(Error::NotInSpinGroup);
    }
    if !psi.is_even(tol) {
        return Err(Error::NotEven);
    }
    u.try_mul(psi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{exp_bivector, Signature};
    use crate::text::parse;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn cl2(s: &str) -> Multivector {
        parse(s, Signature::CL2).unwrap()
    }

    #[test]
    fn classification_examples() {
        let tol = Tolerance::default();
        let u = exp_bivector(&cl2("0.35e12"), Sign::Plus, &tol).unwrap();
        assert_eq!(classify_versor(&u, &tol).tag, VersorTag::SpinPlus);

        let e1 = classify_versor(&cl2("e1"), &tol);
        assert_eq!(e1.tag, VersorTag::Pin);
        assert_eq!(e1.norm_value, Some(1.0));

        let bad = classify_versor(&cl2("1 + e1"), &tol);
        assert_eq!(bad.tag, VersorTag::NotVersor);
        assert_eq!(bad.norm_value, None);
    }

    #[test]
    fn negative_norm_even_versor_is_spin() {
        let tol = Tolerance::default();
        // γ0γ1 squares to +1 in Cl(1,3); its reverse flips sign so U Ũ = -1
        let u = parse("e12", Signature::CL13).unwrap();
        let c = classify_versor(&u, &tol);
        assert_eq!(c.tag, VersorTag::Spin);
        assert_eq!(c.norm_value, Some(-1.0));
    }

    #[test]
    fn half_turn_reverses_e1() {
        let tol = Tolerance::default();
        let u = exp_bivector(&(cl2("e12") * (std::f64::consts::PI / 2.0)), Sign::Plus, &tol).unwrap();
        let out = adjoint_act(&u, &cl2("e1"), Sign::Plus, &tol).unwrap();
        assert!(out.approx_eq(&cl2("-e1"), &tol));
    }

    #[test]
    fn identity_rotor_acts_trivially() {
        let tol = Tolerance::default();
        let a = cl2("1 - 2e1 + 0.5e12");
        let one = cl2("1");
        assert_eq!(adjoint_act(&one, &a, Sign::Plus, &tol).unwrap(), a);
        assert_eq!(spinor_transform(&one, &a.even_part(), &tol).unwrap(), a.even_part());
    }

    #[test]
    fn rejects_non_versors() {
        let tol = Tolerance::default();
        assert!(matches!(
            adjoint_act(&cl2("1 + e1"), &cl2("e1"), Sign::Plus, &tol),
            Err(Error::NonInvertibleVersor { .. })
        ));
        assert_eq!(
            spinor_transform(&cl2("e1"), &cl2("1"), &tol),
            Err(Error::NotInSpinGroup)
        );
        assert_eq!(spinor_transform(&cl2("1"), &cl2("e1"), &tol), Err(Error::NotEven));
    }

    #[test]
    fn lorentz_rotors_preserve_vector_norms() {
        let tol = Tolerance::default();
        let sig = Signature::CL13;
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for _ in 0..100 {
            let b = Multivector::random_grade(sig, 2, &mut rng) * 0.4;
            let u = exp_bivector(&b, Sign::Plus, &tol).unwrap();
            assert!(classify_versor(&u, &tol).is_spin_plus());
            let a = Multivector::random_grade(sig, 1, &mut rng);
            let ra = adjoint_act(&u, &a, Sign::Plus, &tol).unwrap();
            assert!(ra.is_grade(1, &tol));
            assert!(tol.approx_eq((&ra * &ra).scalar_part(), (&a * &a).scalar_part()));
        }
    }

    #[test]
    fn spinor_density_is_invariant() {
        let tol = Tolerance::default();
        let sig = Signature::CL13;
        let mut rng = ChaCha8Rng::seed_from_u64(22);
        for _ in 0..50 {
            let u = exp_bivector(&(Multivector::random_grade(sig, 2, &mut rng) * 0.5), Sign::Plus, &tol).unwrap();
            let psi = Multivector::random_even(sig, &mut rng);
            let moved = spinor_transform(&u, &psi, &tol).unwrap();
            let before = psi.reverse() * &psi;
            let after = moved.reverse() * &moved;
            assert!(after.max_diff(&before) < 1e-9 * (1.0 + before.max_abs()));
        }
    }
}
