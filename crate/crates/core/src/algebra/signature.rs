use std::fmt;

use serde::{Deserialize, Serialize};

use super::MAX_DIM;
use crate::error::{Error, Result};

/// Metric signature of a real Clifford algebra Cl(p,q).
///
/// Basis vectors are numbered from 1. Vectors `1..=p` square to +1 and
/// vectors `p+1..=p+q` square to -1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Signature {
    p: usize,
    q: usize,
}

impl Signature {
    pub fn new(p: usize, q: usize) -> Result<Self> {
        if p + q > MAX_DIM {
            return Err(Error::SignatureTooLarge { p, q });
        }
        Ok(Signature { p, q })
    }

    /// Euclidean 2D plane.
    pub const CL2: Signature = Signature { p: 2, q: 0 };
    /// Quaternions.
    pub const CL02: Signature = Signature { p: 0, q: 2 };
    /// Euclidean 3D space (Pauli algebra).
    pub const CL3: Signature = Signature { p: 3, q: 0 };
    /// Spacetime with one positive and three negative directions.
    pub const CL13: Signature = Signature { p: 1, q: 3 };
    /// Spacetime with the opposite sign convention.
    pub const CL31: Signature = Signature { p: 3, q: 1 };
    /// Euclidean 4D space, target of the Wick rotation.
    pub const CL4: Signature = Signature { p: 4, q: 0 };

    pub fn p(self) -> usize {
        self.p
    }

    pub fn q(self) -> usize {
        self.q
    }

    /// Number of basis vectors.
    pub fn dim(self) -> usize {
        self.p + self.q
    }

    /// `p - q`.
    pub fn signature_index(self) -> isize {
        self.p as isize - self.q as isize
    }

    /// Number of basis blades, `2^(p+q)`.
    pub fn blade_count(self) -> usize {
        1 << self.dim()
    }

    /// Square of the 1-based basis vector `i`.
    pub fn square_of(self, i: usize) -> f64 {
        debug_assert!(i >= 1 && i <= self.dim());
        if i <= self.p {
            1.0
        } else {
            -1.0
        }
    }

    /// Bitmask of the basis vectors that square to -1.
    pub(crate) fn negative_mask(self) -> u32 {
        let all = (1u32 << self.dim()) - 1;
        all & !((1u32 << self.p) - 1)
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cl({},{})", self.p, self.q)
    }
}

impl std::str::FromStr for Signature {
    type Err = String;

    /// Parses `"p,q"`.
    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let (p, q) = s
            .split_once(',')
            .ok_or_else(|| format!("expected `p,q`, got `{s}`"))?;
        let p: usize = p.trim().parse().map_err(|e| format!("bad p: {e}"))?;
        let q: usize = q.trim().parse().map_err(|e| format!("bad q: {e}"))?;
        Signature::new(p, q).map_err(|e| e.to_string())
    }
}
