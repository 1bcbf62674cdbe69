//! Exact commutative algebra for deciding weak liftability of cyclic modules
//! over hypersurface rings.

pub mod algebra;
pub mod error;
pub mod groebner;
pub mod idealcalc;
pub mod liftcrit;
pub mod loci;
pub mod modsyz;

pub use error::{Error, Result};
