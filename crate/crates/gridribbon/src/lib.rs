//! Grid diagrams, flat knotted ribbons, and ribbonlength upper-bound
//! certificates.
//!
//! The toolkit builds grid diagrams for the torus and twist knot families,
//! measures the exact center-line length of the width-1 flat ribbon each
//! diagram induces, certifies the quadratic and linear length bounds in
//! terms of crossing numbers, and realizes the sharper folded-ribbon
//! construction for twist knots whose length grows with golden-ratio slope.
//! Knot identity of generated diagrams is verified independently through
//! Alexander polynomials computed from the traced diagrams, and a
//! move-based annealing search shortens diagrams without changing the knot.

pub mod alexander;
pub mod anneal;
pub mod error;
pub mod fold;
pub mod generators;
pub mod grid;
pub mod metrics;
pub mod moves;
pub mod pd;
pub mod poly;
pub mod render;

mod parallel;

pub use error::{Error, Result};
pub use grid::GridDiagram;
