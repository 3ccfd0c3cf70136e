//! Wick rotation of spacetime vectors into Euclidean four-space, and the
//! isomorphism between the even subalgebras of Cl(1,3) and Cl(3,1).
//!
//! Indexing: `γ0 ↦ e1` and `γk ↦ e(k+1)` in Cl(4,0); in Cl(3,1) the
//! vectors `λ1, λ2, λ3` are `e1, e2, e3` and `λ0 = e4`.

use serde::Serialize;

use crate::algebra::{Multivector, Signature, Tolerance};
use crate::basis::gamma;
use crate::error::{Error, Result};

/// Euclidean vector `W(a)` in Cl(4,0), remembering the Lorentzian source.
#[derive(Clone, Debug, PartialEq)]
pub struct WickImage {
    value: Multivector,
    source_sig: Signature,
}

impl WickImage {
    pub fn value(&self) -> &Multivector {
        &self.value
    }

    pub fn source_sig(&self) -> Signature {
        self.source_sig
    }

    pub fn into_value(self) -> Multivector {
        self.value
    }
}

/// `W(a) = ⟨aγ0⟩₀ γ0 + ⟨aγ0⟩₂`, with the relative vectors `σk = γkγ0`
/// read as Euclidean basis vectors.
pub fn wick_rotate(a: &Multivector, tol: &Tolerance) -> Result<WickImage> {
    if a.sig() != Signature::CL13 {
        return Err(Error::WrongSignature {
            expected: Signature::CL13,
            actual: a.sig(),
        });
    }
    if !a.is_grade(1, tol) {
        return Err(Error::WrongGrade {
            expected: "vector",
            found: a.grades_present(tol),
        });
    }
    let ag0 = a.try_mul(&gamma(0))?;
    let mut coeffs = vec![ag0.scalar_part()];
    for k in 1..=3 {
        let sigma_k = gamma(k) * gamma(0);
        // σk² = 1 and the σk are orthogonal, so the coefficient is ⟨aγ0 σk⟩₀
        coeffs.push((&ag0 * &sigma_k).scalar_part());
    }
    Ok(WickImage {
        value: Multivector::vector(Signature::CL4, &coeffs)?,
        source_sig: Signature::CL13,
    })
}

/// `⟨ǎ b̌⟩₀ = ½(ǎb̌ + b̌ǎ)`.
pub fn euclidean_scalar_product(a: &WickImage, b: &WickImage) -> f64 {
    let ab = &a.value * &b.value;
    let ba = &b.value * &a.value;
    ((ab + ba) * 0.5).scalar_part()
}

/// Outcome of comparing the even-subalgebra multiplication tables.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BridgeReport {
    /// `σk²` in Cl(1,3).
    pub lorentz_squares: [f64; 3],
    /// `σ'k² = (λkλ0)²` in Cl(3,1).
    pub mirror_squares: [f64; 3],
    pub products: usize,
    pub mismatches: usize,
}

impl BridgeReport {
    pub fn passed(&self) -> bool {
        self.mismatches == 0
            && self.lorentz_squares.iter().chain(&self.mirror_squares).all(|&s| s == 1.0)
    }
}

/// Products of the three relative vectors, indexed by bitmask over `σ1, σ2, σ3`.
fn even_basis(sigmas: &[Multivector; 3]) -> Vec<Multivector> {
    let sig = sigmas[0].sig();
    (0u32..8)
        .map(|mask| {
            (0..3)
                .filter(|k| mask & (1 << k) != 0)
                .fold(Multivector::scalar(sig, 1.0), |acc, k| acc * &sigmas[k])
        })
        .collect()
}

/// Coordinates of an even element on a basis of signed blades.
fn coordinates(x: &Multivector, basis: &[Multivector]) -> Vec<f64> {
    basis
        .iter()
        .map(|b| {
            let (mask, sign) = b.terms().next().expect("basis element is a nonzero blade");
            x.coeff(mask) * sign
        })
        .collect()
}

/// Builds `σk = γkγ0` in Cl(1,3) and `σ'k = λkλ0` in Cl(3,1) and checks
/// that all 64 products of their 8 monomials have identical coordinates.
pub fn signature_bridge_check() -> BridgeReport {
    let lorentz: [Multivector; 3] = std::array::from_fn(|k| gamma(k + 1) * gamma(0));
    let mirror: [Multivector; 3] = std::array::from_fn(|k| {
        let lk = Multivector::basis_vector(Signature::CL31, k + 1).expect("index in range");
        let l0 = Multivector::basis_vector(Signature::CL31, 4).expect("index in range");
        lk * l0
    });
    let square = |s: &Multivector| (s * s).scalar_part();
    let (lb, mb) = (even_basis(&lorentz), even_basis(&mirror));
    let mut mismatches = 0;
    for i in 0..8 {
        for j in 0..8 {
            let left = coordinates(&(&lb[i] * &lb[j]), &lb);
            let right = coordinates(&(&mb[i] * &mb[j]), &mb);
            if left != right {
                mismatches += 1;
            }
        }
    }
    BridgeReport {
        lorentz_squares: lorentz.each_ref().map(square),
        mirror_squares: mirror.each_ref().map(square),
        products: 64,
        mismatches,
    }
}
