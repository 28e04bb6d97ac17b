//! Exact arithmetic for lattice simple-current extensions of unrolled
//! restricted quantum groups at roots of unity.
//!
//! Weights are stored in fundamental-weight coordinates and every scalar
//! `q^e` is kept as its exponent `e` modulo `ℓ`, so no verdict ever passes
//! through floating point.

pub mod algebra;
pub mod cartan;
pub mod cli;
pub mod error;
pub mod extensions;
pub mod lattice;
pub mod linalg;
pub mod localmod;
pub mod normal_form;
pub mod oracle;
pub mod rational;
pub mod weight;

pub use cartan::{CartanDatum, Series};
pub use error::{Error, Result};
pub use lattice::{Census, DualGroup, RationalLattice};
pub use rational::{ExponentModL, Rational};
pub use weight::Weight;
