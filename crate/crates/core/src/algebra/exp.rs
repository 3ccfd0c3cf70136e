use super::{Multivector, Sign, Tolerance};
use crate::error::{Error, Result};

/// Hard cap on the number of series terms when `B^2` is not a scalar.
pub const MAX_SERIES_TERMS: usize = 64;

/// `±exp(B)` for a pure bivector `B`.
///
/// When `B^2` is a scalar the closed forms are used: trigonometric for
/// `B^2 < 0`, hyperbolic for `B^2 > 0` and `1 + B` for `B^2 = 0`. Otherwise
/// `B` is scaled down by a power of two, the power series is summed to
/// machine precision (at most [`MAX_SERIES_TERMS`] terms) and the result is
/// squared back up.
pub fn exp_bivector(bivector: &Multivector, sign: Sign, tol: &Tolerance) -> Result<Multivector> {
    if !bivector.is_grade(2, tol) {
        return Err(Error::WrongGrade {
            expected: "bivector",
            found: bivector.grades_present(tol),
        });
    }
    let b = bivector.grade_part(2);
    let square = &b * &b;
    let value = if square.is_scalar(tol) {
        let s = square.scalar_part();
        if tol.is_zero(s) {
            &b + 1.0
        } else if s < 0.0 {
            let theta = (-s).sqrt();
            &b * (theta.sin() / theta) + theta.cos()
        } else {
            let theta = s.sqrt();
            &b * (theta.sinh() / theta) + theta.cosh()
        }
    } else {
        series(&b)
    };
    Ok(value * sign.value())
}

fn series(b: &Multivector) -> Multivector {
    let mut halvings = 0;
    while b.norm() / f64::powi(2.0, halvings) > 0.5 && halvings < 64 {
        halvings += 1;
    }
    let scaled = b * f64::powi(2.0, -halvings);
    let mut sum = Multivector::scalar(b.sig(), 1.0);
    let mut term = sum.clone();
    for r in 1..MAX_SERIES_TERMS {
        term = (&term * &scaled) * (1.0 / r as f64);
        sum += &term;
        if term.norm() <= f64::EPSILON * sum.norm() {
            break;
        }
    }
    for _ in 0..halvings {
        sum = &sum * &sum;
    }
    sum
}

/// `Ũ / (U Ũ)`, the inverse of a versor whose norm `U Ũ` is a non-zero scalar.
pub fn versor_inverse(u: &Multivector, tol: &Tolerance) -> Result<Multivector> {
    let rev = u.reverse();
    let norm = u * &rev;
    if !norm.is_scalar(tol) || norm.scalar_part().abs() < tol.abs_eps {
        return Err(Error::NonInvertibleVersor {
            norm: crate::text::serialize(&norm),
        });
    }
    Ok(rev * (1.0 / norm.scalar_part()))
}
