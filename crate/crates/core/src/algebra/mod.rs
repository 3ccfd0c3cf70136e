//! Real Clifford algebras Cl(p,q) with dense coefficient storage.

pub mod blade;
mod exp;
mod multivector;
mod paravector;
mod signature;

pub use exp::{exp_bivector, versor_inverse, MAX_SERIES_TERMS};
pub use multivector::{commutator_product, geometric_product, outer_product, Multivector};
pub use paravector::{paravector_split, Paravector};
pub use signature::Signature;

pub(crate) use paravector::check_unit_vector;

use crate::error::{Error, Result};

/// Largest supported `p + q`.
pub const MAX_DIM: usize = 12;

/// Numerical equality: `|x - y| <= abs_eps + rel_eps * max(|x|, |y|)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Tolerance {
    pub abs_eps: f64,
    pub rel_eps: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance {
            abs_eps: 1e-9,
            rel_eps: 1e-9,
        }
    }
}

impl Tolerance {
    pub fn new(abs_eps: f64, rel_eps: f64) -> Result<Self> {
        if !(abs_eps > 0.0 && rel_eps > 0.0) {
            return Err(Error::InvalidTolerance { abs_eps, rel_eps });
        }
        Ok(Tolerance { abs_eps, rel_eps })
    }

    /// Same value for both bounds.
    pub fn uniform(eps: f64) -> Result<Self> {
        Self::new(eps, eps)
    }

    pub fn approx_eq(&self, x: f64, y: f64) -> bool {
        (x - y).abs() <= self.abs_eps + self.rel_eps * x.abs().max(y.abs())
    }

    pub fn is_zero(&self, x: f64) -> bool {
        x.abs() <= self.abs_eps
    }

    /// Threshold for "negligible" at the given magnitude.
    pub fn bound(&self, scale: f64) -> f64 {
        self.abs_eps + self.rel_eps * scale
    }
}

/// The explicit `±` in front of exponentials and two-sided actions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> f64 {
        match self {
            Sign::Plus => 1.0,
            Sign::Minus => -1.0,
        }
    }
}

impl std::str::FromStr for Sign {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "+" | "+1" | "1" | "plus" => Ok(Sign::Plus),
            "-" | "-1" | "minus" => Ok(Sign::Minus),
            _ => Err(format!("expected + or -, got `{s}`")),
        }
    }
}
