//! Exact local cohomology of monomial quotient rings with respect to the
//! prime generated by one block of variables.
//!
//! The polynomial ring is `K[x_1..x_m, y_1..y_n]` with a monomial ideal `I`
//! and `P = (y_1..y_n)`.  The crate computes the bigraded Hilbert series of
//! `H^i_P(R)` for `R = K[x,y]/I` as an exact rational expression, extracts
//! multigraded component dimensions, and decides tameness of the induced
//! coarse grading.

pub mod cech;
pub mod hilbert;
pub mod error;
pub mod homology;
pub mod io;
pub mod monomial;
pub mod series;
pub mod simplicial;
pub mod tame;

pub use error::{Error, Result};
