//! Pair partitions, the Brauer and blob categories, the chain functor
//! between them and Gram determinants of their cell modules.

pub mod blob;
pub mod brauer;
pub mod cellrep;
pub mod chains;
pub mod error;
pub mod iso;
pub mod pairpart;
pub mod report;
pub mod scalars;
pub mod suite;

pub use error::{Error, Result};
pub use pairpart::{PairPartition, PairSet, Vertex, VertexPair};
pub use scalars::{LaurentQ, Poly, Rational};
