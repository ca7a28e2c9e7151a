pub mod bitset;
pub mod error;
pub mod graph;

pub use bitset::VSet;
pub use error::{Error, Result};
pub use graph::Graph;
pub mod complex;
pub use complex::SimplicialComplex;
pub mod homology;
pub use homology::{BettiVector, Coefficients};
pub mod enumerative;
pub mod families;
pub use enumerative::Polynomial;
pub mod acceptance;
pub mod construct;
pub mod flip;
pub mod io;
