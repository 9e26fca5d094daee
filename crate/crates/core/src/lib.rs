//! `Ext^1` between irreducible `GL(n)`-modules whose highest weight is
//! p-restricted and completely splittable, and a finite-field Specht-module
//! engine that checks the symmetric-group counterpart by brute force.
//!
//! * [`combinatorics`]: partitions, weights, `chi`, `psi`, bigness, `hat`, `tilde`.
//! * [`oracle`]: closed-form `Ext^1` dimensions and radical predictions.
//! * [`ffla`]: dense linear algebra over GF(p).
//! * [`specht`]: Specht modules, their radicals, simple heads and intertwiners.
//! * [`harness`]: verification sweeps, reports and the on-disk cache.

pub mod combinatorics;
pub mod error;
pub mod ffla;
pub mod harness;
pub mod oracle;
pub mod specht;

pub use combinatorics::{Partition, Prime, Weight};
pub use error::{Error, Result, ScopeError};
