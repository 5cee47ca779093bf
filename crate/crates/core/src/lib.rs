//! Vertex degrees close to the average degree.
//!
//! Every simple graph on `n` vertices with average degree `d` has a vertex whose
//! degree lies in certain explicit intervals around `d`. This crate evaluates
//! those intervals ([`bounds`]), cross-checks the underlying continuous
//! optimization problem numerically ([`opt`]), verifies the bounds against all
//! graphical degree sequences of small order ([`sequences`]) and builds the
//! graphs that show the bounds are tight ([`extremal`]).

pub mod bounds;
pub mod error;

pub use bounds::{GraphParams, Interval, Rational};
pub use error::{Error, Result};
pub mod extremal;
pub mod opt;
pub mod sequences;
