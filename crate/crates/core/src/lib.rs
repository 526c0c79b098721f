//! Exact-arithmetic analysis of functional decomposability in second-order
//! polynomial recurrence sequences.
//!
//! The crate builds up from exact polynomial kernels to: recurrence specs and
//! their symmetric Binet invariants, functional decomposition with
//! cyclic/dihedral classification, the Chebyshev/Dickson identity suite,
//! condition evaluation for the no-vanishing-subsum criteria, explicit
//! degree-bound certificates, and an end-to-end sweep harness.

pub mod bounds;
pub mod criteria;
pub mod decompose;
pub mod dickson;
pub mod error;
pub mod harness;
pub mod parse;
pub mod polycore;
pub mod recurrence;

pub use error::{Error, Result};
pub use polycore::{BiPoly, Poly, Rat, RatFunc};
pub use recurrence::{BinetData, RecurrenceSpec, ValidationFlags};
