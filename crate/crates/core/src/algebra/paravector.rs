use super::{Multivector, Tolerance};
use crate::error::{Error, Result};

/// A vector carried into the even subalgebra by a fixed unit vector:
/// `value = a r` for the split vector `r` (`r^2 = ±1`).
#[derive(Clone, Debug, PartialEq)]
pub struct Paravector {
    value: Multivector,
    split_vector: Multivector,
}

impl Paravector {
    /// Wraps an even element together with the split vector it refers to.
    pub fn new(value: Multivector, split_vector: Multivector, tol: &Tolerance) -> Result<Self> {
        check_unit_vector(&split_vector, tol)?;
        if value.sig() != split_vector.sig() {
            return Err(Error::SignatureMismatch {
                left: value.sig(),
                right: split_vector.sig(),
            });
        }
        if !value.is_even(tol) {
            return Err(Error::NotEven);
        }
        Ok(Paravector {
            value: value.even_part(),
            split_vector: split_vector.grade_part(1),
        })
    }

    pub fn value(&self) -> &Multivector {
        &self.value
    }

    pub fn split_vector(&self) -> &Multivector {
        &self.split_vector
    }

    pub fn into_value(self) -> Multivector {
        self.value
    }

    /// `value * reverse(value)`, the quadratic form carried over from the vector.
    pub fn norm(&self) -> Multivector {
        &self.value * &self.value.reverse()
    }

    /// Recovers the vector `a = value r^{-1}`.
    pub fn to_vector(&self) -> Multivector {
        let r = &self.split_vector;
        let r_sq = (r * r).scalar_part();
        (&self.value * r * (1.0 / r_sq)).grade_part(1)
    }
}

/// `a r` for a vector `a` and a unit (non-null) vector `r`.
pub fn paravector_split(a: &Multivector, r: &Multivector, tol: &Tolerance) -> Result<Paravector> {
    if !a.is_grade(1, tol) {
        return Err(Error::WrongGrade {
            expected: "vector",
            found: a.grades_present(tol),
        });
    }
    check_unit_vector(r, tol)?;
    let value = a.grade_part(1).try_mul(&r.grade_part(1))?;
    Paravector::new(value, r.clone(), tol)
}

/// Accepts grade-1 elements with `r^2 = ±1`; returns that square.
pub(crate) fn check_unit_vector(r: &Multivector, tol: &Tolerance) -> Result<f64> {
    if !r.is_grade(1, tol) {
        return Err(Error::WrongGrade {
            expected: "vector",
            found: r.grades_present(tol),
        });
    }
    let r = r.grade_part(1);
    let square = (&r * &r).scalar_part();
    if !(tol.approx_eq(square, 1.0) || tol.approx_eq(square, -1.0)) {
        return Err(Error::InvalidAxis { square });
    }
    Ok(square.signum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Signature;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn split_of_axis_is_one() {
        let tol = Tolerance::default();
        let e1 = Multivector::basis_vector(Signature::CL2, 1).unwrap();
        let pv = paravector_split(&e1, &e1, &tol).unwrap();
        assert_eq!(pv.value(), &Multivector::scalar(Signature::CL2, 1.0));
    }

    #[test]
    fn norm_matches_vector_square_in_cl3() {
        let tol = Tolerance::default();
        let sig = Signature::CL3;
        let r = Multivector::basis_vector(sig, 3).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..50 {
            let a = Multivector::random_grade(sig, 1, &mut rng);
            let pv = paravector_split(&a, &r, &tol).unwrap();
            let a_sq = &a * &a;
            assert!(pv.norm().approx_eq(&a_sq, &tol));
            assert!(pv.to_vector().approx_eq(&a, &tol));
        }
    }

    #[test]
    fn null_vector_gives_null_paravector() {
        let tol = Tolerance::default();
        let sig = Signature::CL13;
        let g0 = Multivector::basis_vector(sig, 1).unwrap();
        let g3 = Multivector::basis_vector(sig, 4).unwrap();
        let a = &g0 + &g3;
        let pv = paravector_split(&a, &g0, &tol).unwrap();
        // (g0 + g3) g0 = 1 - sigma3, and its reverse is 1 + sigma3
        assert_eq!(pv.norm(), Multivector::zero(sig));
    }

    #[test]
    fn rejects_bad_inputs() {
        let tol = Tolerance::default();
        let sig = Signature::CL13;
        let g0 = Multivector::basis_vector(sig, 1).unwrap();
        let g1 = Multivector::basis_vector(sig, 2).unwrap();
        let null = &g0 + &g1;
        assert!(matches!(
            paravector_split(&g0, &null, &tol),
            Err(Error::InvalidAxis { .. })
        ));
        let biv = &g0 * &g1;
        assert!(matches!(
            paravector_split(&biv, &g0, &tol),
            Err(Error::WrongGrade { .. })
        ));
    }
}
