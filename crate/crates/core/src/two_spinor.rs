//! Lorentz 2-spinors as right ideals `Ψ l` of the even spacetime algebra.
//!
//! "Complex numbers" here are scalars plus pseudoscalars; they are exposed
//! as [`Complex64`] with the coefficient of `I` as the imaginary part. The
//! spin conjugate is always taken with respect to `γ0`.

use nalgebra::{Matrix6, Vector6};
use num_complex::Complex64;
use serde::Serialize;

use crate::algebra::{Multivector, Paravector, Signature, Tolerance};
use crate::basis::{gamma, i_sigma, sigma, sta_pseudoscalar};
use crate::dirac::{right_eigenvalue, DiracSpinor, BIVECTOR_MASKS};
use crate::error::{Error, Result};
use crate::text::serialize;

fn scalar(x: f64) -> Multivector {
    Multivector::scalar(Signature::CL13, x)
}

/// `re + im I`.
pub fn complex_to_mv(c: Complex64) -> Multivector {
    scalar(c.re) + sta_pseudoscalar() * c.im
}

/// Scalar and pseudoscalar parts of `a`.
pub fn mv_to_complex(a: &Multivector) -> Complex64 {
    Complex64::new(a.scalar_part(), a.pseudoscalar_part())
}

/// `A† = γ0 Ã γ0`.
fn dagger(a: &Multivector) -> Multivector {
    let t = gamma(0);
    &t * a.reverse() * &t
}

/// `<A,B>_S`: grades 0 and 4 of `ÃB`.
pub fn product_s(a: &Multivector, b: &Multivector, tol: &Tolerance) -> Result<Multivector> {
    let p = even_product(a, b, tol)?;
    Ok(p.grade_part(0) + p.grade_part(4))
}

/// `<A,B>_B`: grade 2 of `ÃB`.
pub fn product_b(a: &Multivector, b: &Multivector, tol: &Tolerance) -> Result<Multivector> {
    Ok(even_product(a, b, tol)?.grade_part(2))
}

fn even_product(a: &Multivector, b: &Multivector, tol: &Tolerance) -> Result<Multivector> {
    for x in [a, b] {
        if x.sig() != Signature::CL13 {
            return Err(Error::WrongSignature {
                expected: Signature::CL13,
                actual: x.sig(),
            });
        }
        if !x.is_even(tol) {
            return Err(Error::NotEven);
        }
    }
    Ok(a.reverse() * b)
}

/// `l = ½(1 + e)` for a unit relative vector `e` (`e² = 1`, `γ0 e γ0 = -e`).
#[derive(Clone, Debug, PartialEq)]
pub struct Projector {
    e: Multivector,
    value: Multivector,
    rotor: Multivector,
}

impl Projector {
    pub fn new(e: &Multivector, tol: &Tolerance) -> Result<Self> {
        if e.sig() != Signature::CL13 {
            return Err(Error::WrongSignature {
                expected: Signature::CL13,
                actual: e.sig(),
            });
        }
        if !e.is_grade(2, tol) {
            return Err(Error::WrongGrade {
                expected: "bivector",
                found: e.grades_present(tol),
            });
        }
        let e = e.grade_part(2);
        let square = &e * &e;
        if !square.approx_eq(&scalar(1.0), tol) {
            return Err(Error::InvalidProjector {
                square: serialize(&square),
            });
        }
        if !dagger(&e.reverse()).approx_eq(&-&e, tol) {
            return Err(Error::ProjectorNotHermitian);
        }
        let rotor = rotor_to(&e);
        Ok(Projector {
            value: (scalar(1.0) + &e) * 0.5,
            e,
            rotor,
        })
    }

    /// The Weyl projector `½(1 + σ3)`.
    pub fn standard() -> Self {
        Projector::new(&sigma(3), &Tolerance::default()).expect("σ3 is a valid projector")
    }

    pub fn e(&self) -> &Multivector {
        &self.e
    }

    pub fn value(&self) -> &Multivector {
        &self.value
    }

    /// `l̃ = ½(1 - e)`.
    pub fn complement(&self) -> Multivector {
        self.value.reverse()
    }

    /// Spatial rotor `R` with `R σ3 R̃ = e`.
    pub fn rotor(&self) -> &Multivector {
        &self.rotor
    }

    /// The projector for `-e`.
    pub fn opposite(&self) -> Projector {
        let e = -&self.e;
        Projector {
            rotor: rotor_to(&e),
            value: self.complement(),
            e,
        }
    }

    /// Largest deviation from `l² = l`, `l l̃ = 0`, `l + l̃ = 1`, `l† = l`.
    pub fn law_residuals(&self) -> [f64; 4] {
        let l = &self.value;
        let lt = self.complement();
        [
            (l * l).max_diff(l),
            (l * &lt).max_abs(),
            (l + &lt).max_diff(&scalar(1.0)),
            dagger(l).max_diff(l),
        ]
    }
}

/// Minimal rotation carrying `σ3` to `e`; passes through the half-turn
/// `Iσ2` when `e` is closer to `-σ3`.
fn rotor_to(e: &Multivector) -> Multivector {
    let s3 = sigma(3);
    let c = (e * &s3).scalar_part();
    if c >= 0.0 {
        (scalar(1.0) + e * &s3) * (1.0 / (2.0 * (1.0 + c)).sqrt())
    } else {
        let r2 = (scalar(1.0) - e * &s3) * (1.0 / (2.0 * (1.0 - c)).sqrt());
        r2 * i_sigma(2)
    }
}

/// An element of the ideal `Ψ l`.
#[derive(Clone, Debug, PartialEq)]
pub struct TwoSpinor {
    value: Multivector,
    projector: Projector,
}

impl TwoSpinor {
    pub fn new(value: Multivector, projector: Projector, tol: &Tolerance) -> Result<Self> {
        if value.sig() != Signature::CL13 {
            return Err(Error::WrongSignature {
                expected: Signature::CL13,
                actual: value.sig(),
            });
        }
        if !value.is_even(tol) {
            return Err(Error::NotEven);
        }
        let value = value.even_part();
        if !(&value * &projector.value).approx_eq(&value, tol) {
            return Err(Error::NotInIdeal);
        }
        Ok(TwoSpinor { value, projector })
    }

    /// `η^0 o + η^1 ι`.
    pub fn from_components(c: [Complex64; 2], projector: &Projector) -> Self {
        let basis = spin_basis(projector);
        let value = complex_to_mv(c[0]) * &basis.o.value + complex_to_mv(c[1]) * &basis.iota.value;
        TwoSpinor {
            value,
            projector: projector.clone(),
        }
    }

    pub fn value(&self) -> &Multivector {
        &self.value
    }

    pub fn projector(&self) -> &Projector {
        &self.projector
    }

    /// `(η^0, η^1) = ({η, ι}, {o, η})`.
    pub fn components(&self) -> [Complex64; 2] {
        let b = spin_basis(&self.projector);
        [bracket(&self.value, &b.iota.value, &b.epsilon), bracket(&b.o.value, &self.value, &b.epsilon)]
    }

    fn same_frame(&self, other: &TwoSpinor, tol: &Tolerance) -> Result<()> {
        if !self.projector.e.approx_eq(&other.projector.e, tol) {
            return Err(Error::AxisMismatch);
        }
        Ok(())
    }
}

/// `(Ψ l, Ψ l̃)`, the second living in the ideal of `-e`.
pub fn split(psi: &DiracSpinor, l: &Projector) -> (TwoSpinor, TwoSpinor) {
    let plus = TwoSpinor {
        value: psi.value() * &l.value,
        projector: l.clone(),
    };
    let minus = TwoSpinor {
        value: psi.value() * l.complement(),
        projector: l.opposite(),
    };
    (plus, minus)
}

/// The spinor basis `o`, `ι` and the symplectic form `ε = <o, ι>_B`.
#[derive(Clone, Debug, PartialEq)]
pub struct SpinBasis {
    pub o: TwoSpinor,
    pub iota: TwoSpinor,
    pub epsilon: Multivector,
}

/// `o = l`, `ι = σ1' o` with `σ1' = R σ1 R̃`.
pub fn spin_basis(l: &Projector) -> SpinBasis {
    let o = l.value.clone();
    let s1 = &l.rotor * sigma(1) * l.rotor.reverse();
    let iota = s1 * &o;
    let epsilon = (o.reverse() * &iota).grade_part(2);
    SpinBasis {
        o: TwoSpinor {
            value: o,
            projector: l.clone(),
        },
        iota: TwoSpinor {
            value: iota,
            projector: l.clone(),
        },
        epsilon,
    }
}

/// `-2 <η̃ξ, ε†>_S`.
fn bracket(eta: &Multivector, xi: &Multivector, epsilon: &Multivector) -> Complex64 {
    let x = eta.reverse() * xi;
    let s = x.reverse() * dagger(epsilon);
    Complex64::new(-2.0 * s.scalar_part(), -2.0 * s.pseudoscalar_part())
}

/// `{η, ξ} = η^0 ξ^1 - η^1 ξ^0`.
pub fn inner_product(eta: &TwoSpinor, xi: &TwoSpinor, tol: &Tolerance) -> Result<Complex64> {
    eta.same_frame(xi, tol)?;
    let eps = spin_basis(&eta.projector).epsilon;
    Ok(bracket(&eta.value, &xi.value, &eps))
}

/// `J̄ = η η†`.
pub fn flagpole(eta: &TwoSpinor, tol: &Tolerance) -> Result<Paravector> {
    if eta.value.is_zero(tol) {
        return Err(Error::ZeroSpinor);
    }
    Paravector::new(&eta.value * dagger(&eta.value), gamma(0), tol)
}

fn independent(eta: &TwoSpinor, chi: &TwoSpinor, tol: &Tolerance) -> Result<Complex64> {
    let b = inner_product(eta, chi, tol)?;
    if b.norm() < tol.abs_eps * eta.value.norm() * chi.value.norm() {
        return Err(Error::ProportionalSpinors);
    }
    Ok(b)
}

/// `L̄ = η χ† + χ η†`.
pub fn spacelike_paravector(eta: &TwoSpinor, chi: &TwoSpinor, tol: &Tolerance) -> Result<Paravector> {
    eta.same_frame(chi, tol)?;
    let l = &eta.value * dagger(&chi.value) + &chi.value * dagger(&eta.value);
    Paravector::new(l, gamma(0), tol)
}

/// `F = <J̄, L̄>_B`.
pub fn flag(eta: &TwoSpinor, chi: &TwoSpinor, tol: &Tolerance) -> Result<Multivector> {
    independent(eta, chi, tol)?;
    let j = flagpole(eta, tol)?;
    let l = spacelike_paravector(eta, chi, tol)?;
    product_b(j.value(), l.value(), tol)
}

/// `T̄ = η η† + χ χ†`.
pub fn timelike_paravector(eta: &TwoSpinor, chi: &TwoSpinor, tol: &Tolerance) -> Result<Paravector> {
    independent(eta, chi, tol)?;
    let t = &eta.value * dagger(&eta.value) + &chi.value * dagger(&chi.value);
    Paravector::new(t, gamma(0), tol)
}

/// Newman-Penrose metric in the order `(l, n, m, m†)`.
pub const NP_METRIC: [[f64; 4]; 4] = [
    [0.0, 1.0, 0.0, 0.0],
    [1.0, 0.0, 0.0, 0.0],
    [0.0, 0.0, 0.0, -1.0],
    [0.0, 0.0, -1.0, 0.0],
];

#[derive(Clone, Debug, PartialEq)]
pub struct NullTetrad {
    pub l: Multivector,
    pub n: Multivector,
    pub m: Multivector,
    pub m_dagger: Multivector,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TetradReport {
    pub l: String,
    pub n: String,
    pub m: String,
    pub m_dagger: String,
    pub metric: [[f64; 4]; 4],
    pub metric_residual: f64,
}

impl NullTetrad {
    pub fn elements(&self) -> [&Multivector; 4] {
        [&self.l, &self.n, &self.m, &self.m_dagger]
    }

    /// `E_a Ẽ_b + E_b Ẽ_a` for every pair.
    pub fn metric_products(&self) -> [[Multivector; 4]; 4] {
        let e = self.elements();
        std::array::from_fn(|a| std::array::from_fn(|b| e[a] * e[b].reverse() + e[b] * e[a].reverse()))
    }

    /// Scalar parts of [`NullTetrad::metric_products`].
    pub fn metric(&self) -> [[f64; 4]; 4] {
        self.metric_products().map(|row| row.map(|x| x.scalar_part()))
    }

    /// Largest deviation of the products from [`NP_METRIC`].
    pub fn metric_residual(&self) -> f64 {
        let products = self.metric_products();
        let mut worst: f64 = 0.0;
        for a in 0..4 {
            for b in 0..4 {
                worst = worst.max(products[a][b].max_diff(&scalar(NP_METRIC[a][b])));
            }
        }
        worst
    }

    pub fn report(&self) -> TetradReport {
        TetradReport {
            l: serialize(&self.l),
            n: serialize(&self.n),
            m: serialize(&self.m),
            m_dagger: serialize(&self.m_dagger),
            metric: self.metric(),
            metric_residual: self.metric_residual(),
        }
    }
}

/// `l = o o†`, `n = ι ι†`, `m = o ι†`, `m† = ι o†`.
pub fn null_tetrad(l: &Projector) -> NullTetrad {
    let b = spin_basis(l);
    let (o, i) = (&b.o.value, &b.iota.value);
    NullTetrad {
        l: o * dagger(o),
        n: i * dagger(i),
        m: o * dagger(i),
        m_dagger: i * dagger(o),
    }
}

/// `N_AB = α̃_A† ε α_B†` with `α_0 = o`, `α_1 = ι`.
fn null_basis(l: &Projector) -> [[Multivector; 2]; 2] {
    let b = spin_basis(l);
    let alpha = [&b.o.value, &b.iota.value];
    std::array::from_fn(|a| std::array::from_fn(|c| dagger(&alpha[a].reverse()) * &b.epsilon * dagger(alpha[c])))
}

/// `B = β^{AB} N_AB` for symmetric `β`.
pub fn bivector_from_components(beta: [[Complex64; 2]; 2], l: &Projector, tol: &Tolerance) -> Result<Multivector> {
    let d = beta[0][1] - beta[1][0];
    if !(tol.is_zero(d.re) && tol.is_zero(d.im)) {
        return Err(Error::AsymmetricComponents);
    }
    let n = null_basis(l);
    let mut out = Multivector::zero(Signature::CL13);
    for a in 0..2 {
        for c in 0..2 {
            out += &(complex_to_mv(beta[a][c]) * &n[a][c]);
        }
    }
    Ok(out.grade_part(2))
}

/// Inverse of [`bivector_from_components`].
pub fn bivector_components(b: &Multivector, l: &Projector, tol: &Tolerance) -> Result<[[Complex64; 2]; 2]> {
    if !b.is_grade(2, tol) {
        return Err(Error::WrongGrade {
            expected: "bivector",
            found: b.grades_present(tol),
        });
    }
    let n = null_basis(l);
    let i = sta_pseudoscalar();
    let sym = [n[0][0].clone(), &n[0][1] + &n[1][0], n[1][1].clone()];
    let mut columns = Vec::with_capacity(6);
    for s in &sym {
        columns.push(s.clone());
        columns.push(&i * s);
    }
    let m = Matrix6::from_fn(|row, col| columns[col].coeff(BIVECTOR_MASKS[row]));
    let rhs = Vector6::from_fn(|row, _| b.coeff(BIVECTOR_MASKS[row]));
    let x = m.lu().solve(&rhs).expect("null basis spans the bivectors");
    let c = |k: usize| Complex64::new(x[2 * k], x[2 * k + 1]);
    Ok([[c(0), c(1)], [c(1), c(2)]])
}

/// `Ψ = η + χ̃†`.
pub fn dirac_from_two_spinors(eta: &TwoSpinor, chi: &TwoSpinor, tol: &Tolerance) -> Result<DiracSpinor> {
    eta.same_frame(chi, tol)?;
    DiracSpinor::new(&eta.value + dagger(&chi.value.reverse()), tol)
}

/// `Some(±1)` when `η σ3 = ±η`.
pub fn chirality(eta: &Multivector, tol: &Tolerance) -> Option<f64> {
    right_eigenvalue(eta, &sigma(3), tol)
}

/// `Some(±1)` when `η σ2 = ±η`.
pub fn charge_conjugation(eta: &Multivector, tol: &Tolerance) -> Option<f64> {
    right_eigenvalue(eta, &sigma(2), tol)
}

/// `φ ∈ [0, π]` with `h = cos φ` and `s² = -sin² φ`.
pub fn projection_angle(h: f64, s: &Multivector) -> f64 {
    let s2 = (s * s).scalar_part();
    (-s2).max(0.0).sqrt().atan2(h)
}
