use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use rand::Rng;

use super::blade::{self, conjugate_sign, involution_sign, product_sign, reorder_sign, reverse_sign};
use super::{Signature, Tolerance};
use crate::error::{Error, Result};

/// A general element of Cl(p,q), stored densely over the `2^(p+q)` basis
/// blades. Index `b` of the coefficient array is the blade bitmask.
#[derive(Clone, Debug, PartialEq)]
pub struct Multivector {
    sig: Signature,
    coeffs: Vec<f64>,
}

impl Multivector {
    pub fn zero(sig: Signature) -> Self {
        Multivector {
            sig,
            coeffs: vec![0.0; sig.blade_count()],
        }
    }

    pub fn scalar(sig: Signature, value: f64) -> Self {
        Self::blade(sig, 0, value)
    }

    /// `value` times the blade with bitmask `mask`.
    ///
    /// # Panics
    ///
    /// If `mask` names a basis vector beyond `p+q`.
    pub fn blade(sig: Signature, mask: u32, value: f64) -> Self {
        let mut mv = Self::zero(sig);
        mv.coeffs[mask as usize] = value;
        mv
    }

    /// Basis vector `e_i`, 1-based.
    pub fn basis_vector(sig: Signature, i: usize) -> Result<Self> {
        if i == 0 || i > sig.dim() {
            return Err(Error::GradeOutOfRange {
                grade: i,
                dim: sig.dim(),
            });
        }
        Ok(Self::blade(sig, 1 << (i - 1), 1.0))
    }

    /// Grade-1 element with the given components along `e_1 .. e_n`.
    pub fn vector(sig: Signature, components: &[f64]) -> Result<Self> {
        if components.len() != sig.dim() {
            return Err(Error::CoefficientLength {
                expected: sig.dim(),
                actual: components.len(),
            });
        }
        let mut mv = Self::zero(sig);
        for (i, c) in components.iter().enumerate() {
            mv.coeffs[1 << i] = *c;
        }
        Ok(mv)
    }

    pub fn from_coeffs(sig: Signature, coeffs: Vec<f64>) -> Result<Self> {
        if coeffs.len() != sig.blade_count() {
            return Err(Error::CoefficientLength {
                expected: sig.blade_count(),
                actual: coeffs.len(),
            });
        }
        Ok(Multivector { sig, coeffs })
    }

    /// The unit pseudoscalar `e_1 e_2 ... e_n`.
    pub fn pseudoscalar(sig: Signature) -> Self {
        Self::blade(sig, (sig.blade_count() - 1) as u32, 1.0)
    }

    /// Multivector with independent standard-normal coefficients on the
    /// grades selected by `keep`.
    pub fn random_with<R: Rng + ?Sized>(
        sig: Signature,
        rng: &mut R,
        keep: impl Fn(usize) -> bool,
    ) -> Self {
        let mut mv = Self::zero(sig);
        for (mask, c) in mv.coeffs.iter_mut().enumerate() {
            if keep(blade::grade(mask as u32)) {
                *c = standard_normal(rng);
            }
        }
        mv
    }

    pub fn random<R: Rng + ?Sized>(sig: Signature, rng: &mut R) -> Self {
        Self::random_with(sig, rng, |_| true)
    }

    pub fn random_even<R: Rng + ?Sized>(sig: Signature, rng: &mut R) -> Self {
        Self::random_with(sig, rng, |k| k % 2 == 0)
    }

    pub fn random_grade<R: Rng + ?Sized>(sig: Signature, k: usize, rng: &mut R) -> Self {
        Self::random_with(sig, rng, |g| g == k)
    }

    pub fn sig(&self) -> Signature {
        self.sig
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<f64> {
        self.coeffs
    }

    pub fn coeff(&self, mask: u32) -> f64 {
        self.coeffs[mask as usize]
    }

    pub fn set_coeff(&mut self, mask: u32, value: f64) {
        self.coeffs[mask as usize] = value;
    }

    /// Coefficient along `e_i`.
    pub fn vector_component(&self, i: usize) -> f64 {
        self.coeffs[1 << (i - 1)]
    }

    pub fn scalar_part(&self) -> f64 {
        self.coeffs[0]
    }

    /// Coefficient of the unit pseudoscalar.
    pub fn pseudoscalar_part(&self) -> f64 {
        self.coeffs[self.coeffs.len() - 1]
    }

    /// Euclidean norm of the coefficient array. Used only to scale tolerances.
    pub fn norm(&self) -> f64 {
        self.coeffs.iter().map(|c| c * c).sum::<f64>().sqrt()
    }

    /// Largest absolute coefficient.
    pub fn max_abs(&self) -> f64 {
        self.coeffs.iter().fold(0.0, |m, c| m.max(c.abs()))
    }

    /// Iterator over `(mask, coefficient)` pairs with non-zero coefficient.
    pub fn terms(&self) -> impl Iterator<Item = (u32, f64)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| **c != 0.0)
            .map(|(m, c)| (m as u32, *c))
    }

    fn check_sig(&self, other: &Multivector) -> Result<()> {
        if self.sig != other.sig {
            return Err(Error::SignatureMismatch {
                left: self.sig,
                right: other.sig,
            });
        }
        Ok(())
    }

    /// Geometric product.
    pub fn try_mul(&self, other: &Multivector) -> Result<Multivector> {
        self.check_sig(other)?;
        let mut out = Multivector::zero(self.sig);
        for (a, ca) in self.terms() {
            for (b, cb) in other.terms() {
                out.coeffs[(a ^ b) as usize] += product_sign(a, b, self.sig) * ca * cb;
            }
        }
        Ok(out)
    }

    /// Outer (wedge) product.
    pub fn try_wedge(&self, other: &Multivector) -> Result<Multivector> {
        self.check_sig(other)?;
        let mut out = Multivector::zero(self.sig);
        for (a, ca) in self.terms() {
            for (b, cb) in other.terms() {
                if a & b == 0 {
                    out.coeffs[(a | b) as usize] += reorder_sign(a, b) * ca * cb;
                }
            }
        }
        Ok(out)
    }

    /// Commutator product `(AB - BA) / 2`.
    pub fn try_commutator(&self, other: &Multivector) -> Result<Multivector> {
        let ab = self.try_mul(other)?;
        let ba = other.try_mul(self)?;
        Ok((&ab - &ba) * 0.5)
    }

    pub fn wedge(&self, other: &Multivector) -> Multivector {
        self.try_wedge(other).expect("signature mismatch in outer product")
    }

    pub fn commutator(&self, other: &Multivector) -> Multivector {
        self.try_commutator(other)
            .expect("signature mismatch in commutator product")
    }

    /// `<A>_k`.
    pub fn grade(&self, k: usize) -> Result<Multivector> {
        if k > self.sig.dim() {
            return Err(Error::GradeOutOfRange {
                grade: k,
                dim: self.sig.dim(),
            });
        }
        Ok(self.map_by_grade(|g, c| if g == k { c } else { 0.0 }))
    }

    /// `<A>_k`, returning zero for out-of-range grades.
    pub fn grade_part(&self, k: usize) -> Multivector {
        self.map_by_grade(|g, c| if g == k { c } else { 0.0 })
    }

    fn map_by_grade(&self, f: impl Fn(usize, f64) -> f64) -> Multivector {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(m, c)| f(blade::grade(m as u32), *c))
            .collect();
        Multivector {
            sig: self.sig,
            coeffs,
        }
    }

    /// Main involution: grade `k` scaled by `(-1)^k`.
    pub fn grade_involution(&self) -> Multivector {
        self.map_by_grade(|k, c| involution_sign(k) * c)
    }

    /// Reverse: grade `k` scaled by `(-1)^(k(k-1)/2)`.
    pub fn reverse(&self) -> Multivector {
        self.map_by_grade(|k, c| reverse_sign(k) * c)
    }

    /// Clifford conjugate: grade `k` scaled by `(-1)^(k(k+1)/2)`.
    pub fn clifford_conjugate(&self) -> Multivector {
        self.map_by_grade(|k, c| conjugate_sign(k) * c)
    }

    /// `(A + Â) / 2`.
    pub fn even_part(&self) -> Multivector {
        self.map_by_grade(|k, c| if k % 2 == 0 { c } else { 0.0 })
    }

    /// `(A - Â) / 2`.
    pub fn odd_part(&self) -> Multivector {
        self.map_by_grade(|k, c| if k % 2 == 1 { c } else { 0.0 })
    }

    /// Grades whose coefficients are not negligible at tolerance `tol`,
    /// measured relative to the norm of the whole multivector.
    pub fn grades_present(&self, tol: &Tolerance) -> Vec<usize> {
        let bound = tol.bound(self.norm());
        let mut present = vec![false; self.sig.dim() + 1];
        for (m, c) in self.coeffs.iter().enumerate() {
            if c.abs() > bound {
                present[blade::grade(m as u32)] = true;
            }
        }
        present
            .iter()
            .enumerate()
            .filter(|(_, p)| **p)
            .map(|(k, _)| k)
            .collect()
    }

    /// True when every blade outside the grades accepted by `keep` is
    /// negligible relative to the norm of `self`.
    pub fn is_within_grades(&self, tol: &Tolerance, keep: impl Fn(usize) -> bool) -> bool {
        let bound = tol.bound(self.norm());
        self.coeffs
            .iter()
            .enumerate()
            .all(|(m, c)| keep(blade::grade(m as u32)) || c.abs() <= bound)
    }

    pub fn is_grade(&self, k: usize, tol: &Tolerance) -> bool {
        self.is_within_grades(tol, |g| g == k)
    }

    pub fn is_scalar(&self, tol: &Tolerance) -> bool {
        self.is_grade(0, tol)
    }

    pub fn is_even(&self, tol: &Tolerance) -> bool {
        self.is_within_grades(tol, |g| g % 2 == 0)
    }

    pub fn is_odd(&self, tol: &Tolerance) -> bool {
        self.is_within_grades(tol, |g| g % 2 == 1)
    }

    /// Every coefficient within `tol` of zero (absolute bound only).
    pub fn is_zero(&self, tol: &Tolerance) -> bool {
        self.coeffs.iter().all(|c| c.abs() <= tol.abs_eps)
    }

    /// Coefficient-wise comparison with the mixed absolute/relative rule.
    pub fn approx_eq(&self, other: &Multivector, tol: &Tolerance) -> bool {
        self.sig == other.sig
            && self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .all(|(a, b)| tol.approx_eq(*a, *b))
    }

    /// Largest coefficient-wise absolute difference.
    pub fn max_diff(&self, other: &Multivector) -> f64 {
        assert_eq!(self.sig, other.sig, "signature mismatch in comparison");
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .fold(0.0, |m, (a, b)| m.max((a - b).abs()))
    }
}

fn standard_normal<R: Rng + ?Sized>(rng: &mut R) -> f64 {
    // Box-Muller
    let u1: f64 = rng.gen_range(f64::EPSILON..1.0);
    let u2: f64 = rng.gen();
    (-2.0 * u1.ln()).sqrt() * (2.0 * std::f64::consts::PI * u2).cos()
}

/// Geometric product. Fails on mismatched signatures.
pub fn geometric_product(a: &Multivector, b: &Multivector) -> Result<Multivector> {
    a.try_mul(b)
}

pub fn outer_product(a: &Multivector, b: &Multivector) -> Result<Multivector> {
    a.try_wedge(b)
}

pub fn commutator_product(a: &Multivector, b: &Multivector) -> Result<Multivector> {
    a.try_commutator(b)
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $body:expr) => {
        impl $trait<&Multivector> for &Multivector {
            type Output = Multivector;
            fn $method(self, rhs: &Multivector) -> Multivector {
                $body(self, rhs)
            }
        }
        impl $trait<Multivector> for Multivector {
            type Output = Multivector;
            fn $method(self, rhs: Multivector) -> Multivector {
                $body(&self, &rhs)
            }
        }
        impl $trait<&Multivector> for Multivector {
            type Output = Multivector;
            fn $method(self, rhs: &Multivector) -> Multivector {
                $body(&self, rhs)
            }
        }
        impl $trait<Multivector> for &Multivector {
            type Output = Multivector;
            fn $method(self, rhs: Multivector) -> Multivector {
                $body(self, &rhs)
            }
        }
    };
}

fn add_impl(a: &Multivector, b: &Multivector) -> Multivector {
    assert_eq!(a.sig, b.sig, "signature mismatch in addition");
    let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect();
    Multivector { sig: a.sig, coeffs }
}

fn sub_impl(a: &Multivector, b: &Multivector) -> Multivector {
    assert_eq!(a.sig, b.sig, "signature mismatch in subtraction");
    let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x - y).collect();
    Multivector { sig: a.sig, coeffs }
}

// Operator form panics on mismatched signatures; `try_mul` reports them.
fn mul_impl(a: &Multivector, b: &Multivector) -> Multivector {
    a.try_mul(b).expect("signature mismatch in geometric product")
}

forward_binop!(Add, add, add_impl);
forward_binop!(Sub, sub, sub_impl);
forward_binop!(Mul, mul, mul_impl);

impl AddAssign<&Multivector> for Multivector {
    fn add_assign(&mut self, rhs: &Multivector) {
        assert_eq!(self.sig, rhs.sig, "signature mismatch in addition");
        for (x, y) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *x += y;
        }
    }
}

impl Mul<f64> for &Multivector {
    type Output = Multivector;
    fn mul(self, rhs: f64) -> Multivector {
        Multivector {
            sig: self.sig,
            coeffs: self.coeffs.iter().map(|c| c * rhs).collect(),
        }
    }
}

impl Mul<f64> for Multivector {
    type Output = Multivector;
    fn mul(mut self, rhs: f64) -> Multivector {
        self.coeffs.iter_mut().for_each(|c| *c *= rhs);
        self
    }
}

impl Mul<Multivector> for f64 {
    type Output = Multivector;
    fn mul(self, rhs: Multivector) -> Multivector {
        rhs * self
    }
}

impl Mul<&Multivector> for f64 {
    type Output = Multivector;
    fn mul(self, rhs: &Multivector) -> Multivector {
        rhs * self
    }
}

impl Neg for &Multivector {
    type Output = Multivector;
    fn neg(self) -> Multivector {
        self * -1.0
    }
}

impl Neg for Multivector {
    type Output = Multivector;
    fn neg(self) -> Multivector {
        self * -1.0
    }
}

impl Add<f64> for &Multivector {
    type Output = Multivector;
    fn add(self, rhs: f64) -> Multivector {
        let mut out = self.clone();
        out.coeffs[0] += rhs;
        out
    }
}

impl Add<f64> for Multivector {
    type Output = Multivector;
    fn add(mut self, rhs: f64) -> Multivector {
        self.coeffs[0] += rhs;
        self
    }
}

impl Add<Multivector> for f64 {
    type Output = Multivector;
    fn add(self, rhs: Multivector) -> Multivector {
        rhs + self
    }
}

impl Sub<Multivector> for f64 {
    type Output = Multivector;
    fn sub(self, rhs: Multivector) -> Multivector {
        -rhs + self
    }
}
