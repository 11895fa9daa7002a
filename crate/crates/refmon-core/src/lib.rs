//! Reflection monoids of partial symmetries and their presentations.
//!
//! The crate builds the concrete finite inverse monoids `M(W, S)` (Boolean
//! reflection monoids, Coxeter arrangement monoids, Renner monoids of the
//! classical algebraic monoids), generates presentations for them, and
//! certifies each presentation by comparing a congruence enumeration of the
//! presented monoid with an exhaustive enumeration of the concrete one.
//!
//! Everything here is `no_std` + `alloc`; IO lives in the CLI crate.
#![no_std]

extern crate alloc;

pub mod charmap;
pub mod closed;
pub mod coxeter;
pub mod error;
pub mod graph;
pub mod idem;
pub mod lattice;
pub mod partial_map;
pub mod pipeline;
pub mod presentation;
pub mod renner;
pub mod subspace;
pub mod system;
pub mod verify;

pub use error::{Error, Result};
