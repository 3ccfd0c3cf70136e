//! Real geometric algebras Cl(p,q) and the spinors that live in their even
//! subalgebras: rotors and spin groups, Pauli and Dirac spinors with their
//! observables, Lorentz 2-spinors and null tetrads, matrix representations
//! and the Wick rotation.

pub mod algebra;
pub mod basis;
pub mod dirac;
pub mod error;
pub mod pauli;
pub mod repr;
pub mod spin;
pub mod text;
pub mod two_spinor;
pub mod wick;

pub use algebra::{Multivector, Sign, Signature, Tolerance};
pub use error::{Error, Result};
