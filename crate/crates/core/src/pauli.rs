//! Pauli spinors: even elements of Cl(3,0), i.e. quaternions.
//!
//! Every operation is written for a general unit axis `r`; the default is
//! `σ3`, which turns `I r` into the quaternion unit `i3`.

use serde::Serialize;

use crate::algebra::{check_unit_vector, exp_bivector, Multivector, Sign, Signature, Tolerance};
use crate::basis::{pauli, pauli_pseudoscalar, quaternion_units};
use crate::error::{Error, Result};

/// An even element of Cl(3,0) together with the axis used for its
/// observables and Hermitian structure.
#[derive(Clone, Debug, PartialEq)]
pub struct PauliSpinor {
    value: Multivector,
    axis: Multivector,
}

impl PauliSpinor {
    /// Spinor with the default axis `σ3`.
    pub fn new(value: Multivector, tol: &Tolerance) -> Result<Self> {
        Self::with_axis(value, pauli(3), tol)
    }

    pub fn with_axis(value: Multivector, axis: Multivector, tol: &Tolerance) -> Result<Self> {
        check_sig(&value)?;
        check_axis(&axis, tol)?;
        if !value.is_even(tol) {
            return Err(Error::NotEven);
        }
        Ok(PauliSpinor {
            value: value.even_part(),
            axis: axis.grade_part(1),
        })
    }

    /// `q0 + q1 i1 + q2 i2 + q3 i3`.
    pub fn from_quaternion(q: [f64; 4]) -> Self {
        let [i1, i2, i3] = quaternion_units();
        let value = Multivector::scalar(Signature::CL3, q[0]) + i1 * q[1] + i2 * q[2] + i3 * q[3];
        PauliSpinor { value, axis: pauli(3) }
    }

    /// Inverse of [`PauliSpinor::from_quaternion`].
    pub fn quaternion(&self) -> [f64; 4] {
        let [i1, i2, i3] = quaternion_units();
        // i_k^2 = -1, so the coefficient is -<ψ i_k>
        let c = |u: &Multivector| -(&self.value * u).scalar_part();
        [self.value.scalar_part(), c(&i1), c(&i2), c(&i3)]
    }

    pub fn value(&self) -> &Multivector {
        &self.value
    }

    pub fn axis(&self) -> &Multivector {
        &self.axis
    }

    pub fn into_value(self) -> Multivector {
        self.value
    }
}

/// Density `ρ = ψψ̃` and spin vector `s = ψ r ψ̃`.
#[derive(Clone, Debug, PartialEq)]
pub struct PauliObservables {
    pub rho: f64,
    pub spin: Multivector,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PauliObservablesReport {
    pub rho: f64,
    pub spin: [f64; 3],
}

impl PauliObservables {
    pub fn new(rho: f64, spin: Multivector, tol: &Tolerance) -> Result<Self> {
        check_sig(&spin)?;
        if !spin.is_grade(1, tol) {
            return Err(Error::WrongGrade {
                expected: "vector",
                found: spin.grades_present(tol),
            });
        }
        Ok(PauliObservables {
            rho,
            spin: spin.grade_part(1),
        })
    }

    /// `s_k = <s σk>`.
    pub fn spin_components(&self) -> [f64; 3] {
        [1, 2, 3].map(|k| self.spin.vector_component(k))
    }

    pub fn report(&self) -> PauliObservablesReport {
        PauliObservablesReport {
            rho: self.rho,
            spin: self.spin_components(),
        }
    }
}

fn check_sig(a: &Multivector) -> Result<()> {
    if a.sig() != Signature::CL3 {
        return Err(Error::WrongSignature {
            expected: Signature::CL3,
            actual: a.sig(),
        });
    }
    Ok(())
}

fn check_axis(r: &Multivector, tol: &Tolerance) -> Result<()> {
    check_sig(r)?;
    let square = check_unit_vector(r, tol)?;
    if square < 0.0 {
        return Err(Error::InvalidAxis { square });
    }
    Ok(())
}

/// `A† = r Ã r`.
pub fn spin_conjugate(a: &Multivector, r: &Multivector, tol: &Tolerance) -> Result<Multivector> {
    check_sig(a)?;
    check_axis(r, tol)?;
    let r = r.grade_part(1);
    Ok(&r * a.reverse() * &r)
}

/// Projection onto the complex span `{1, I r}`: `½(ψ + ψ̃†)`.
pub fn c_project_about(psi: &Multivector, r: &Multivector, tol: &Tolerance) -> Result<Multivector> {
    check_sig(psi)?;
    if !psi.is_even(tol) {
        return Err(Error::NotEven);
    }
    let psi = psi.even_part();
    let dagger = spin_conjugate(&psi.reverse(), r, tol)?;
    Ok((psi + dagger) * 0.5)
}

/// [`c_project_about`] with the axis `σ3`.
pub fn c_project(psi: &Multivector, tol: &Tolerance) -> Result<Multivector> {
    c_project_about(psi, &pauli(3), tol)
}

/// `<ψ̃ φ>_C`, a complex number in the span `{1, I r}`.
pub fn hermitian_product(psi: &PauliSpinor, phi: &PauliSpinor, tol: &Tolerance) -> Result<Multivector> {
    if !psi.axis.approx_eq(&phi.axis, tol) {
        return Err(Error::AxisMismatch);
    }
    c_project_about(&(psi.value.reverse() * &phi.value), &psi.axis, tol)
}

pub fn observables(psi: &PauliSpinor) -> PauliObservables {
    let rev = psi.value.reverse();
    PauliObservables {
        rho: (&psi.value * &rev).scalar_part(),
        spin: (&psi.value * &psi.axis * &rev).grade_part(1),
    }
}

/// Rebuilds a spinor with axis `σ3` from its observables and a phase `α`.
pub fn reconstruct(obs: &PauliObservables, alpha: f64, tol: &Tolerance) -> Result<PauliSpinor> {
    reconstruct_about(obs, &pauli(3), alpha, tol)
}

/// `ψ = z p⁻¹ exp(I r α)` with `z = ½(ρ + s r)` and `p² = ½(ρ + <s r>)`.
pub fn reconstruct_about(
    obs: &PauliObservables,
    r: &Multivector,
    alpha: f64,
    tol: &Tolerance,
) -> Result<PauliSpinor> {
    check_axis(r, tol)?;
    check_sig(&obs.spin)?;
    let r = r.grade_part(1);
    let sr = &obs.spin * &r;
    let p_squared = 0.5 * (obs.rho + sr.scalar_part());
    if p_squared <= tol.abs_eps {
        return Err(Error::AntiAlignedSpin { p_squared });
    }
    let z = (sr + obs.rho) * 0.5;
    let phase = exp_bivector(&(pauli_pseudoscalar() * &r * alpha), Sign::Plus, tol)?;
    let value = z * (1.0 / p_squared.sqrt()) * phase;
    Ok(PauliSpinor { value, axis: r })
}
