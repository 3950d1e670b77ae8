pub mod base_theory;
pub mod characters;
pub mod combinatorics;
pub mod error;
pub mod functors;
pub mod hopf;
pub mod io;
mod linalg;
pub mod nsym;
pub mod report;
pub mod scalar;
pub mod tensor;
pub mod verify;

pub use error::{Error, Result};
pub use scalar::Scalar;
