//! Knot diagrams, Conway and cabled mutation, and the invariants that do
//! (or do not) see the difference: Jones, coloured Jones, HOMFLY-PT,
//! Kauffman, Alexander, signature and integral Khovanov homology.

pub mod coloredjones;
pub mod diagram;
pub mod error;
pub mod khovanov;
pub mod linalg;
pub mod mutation;
pub mod pipeline;
pub mod poly;
pub mod skein;

pub use diagram::PlanarDiagram;
pub use error::{Error, Result};
