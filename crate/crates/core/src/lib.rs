//! Exact enumeration of `m`-regular `d`-contact stacks.
//!
//! A stack on `[n]` is a noncrossing diagram whose vertices have degree at
//! most `d` and whose arcs `(i, j)` satisfy `j - i >= m`. Stacks correspond
//! one-to-one with `m`-regular Λ-avoiding DLU paths ([`bijection`]), whose
//! generating functions satisfy a finite system of equations
//! ([`gfsolver`]). Brute-force enumerators in [`diagram`] and [`dlupath`]
//! serve as independent oracles, and [`algebraic`] checks the closed
//! algebraic equations known for small `d`.

pub mod algebraic;
pub mod bijection;
pub mod diagram;
pub mod dlupath;
pub mod error;
pub mod gfsolver;
pub mod series;

pub use diagram::{Diagram, StackParams};
pub use dlupath::{DluPath, Piece, Step};
pub use error::{Error, Result};
pub use gfsolver::{GfKey, GfTable};
pub use series::Series;
