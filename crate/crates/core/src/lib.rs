//! Exact computer algebra for invariant fields of transitive subgroups of S6.
//!
//! The crate is layered bottom-up:
//!
//! * [`algebra`]: coefficient fields (Q, GF(p), and their ζ3 extensions);
//! * [`polyring`]: sparse multivariate polynomials with exact GCD;
//! * [`ratfield`]: normalized rational functions, substitution, permutation
//!   action and Jacobian ranks;
//! * [`permgrp`]: permutations, group closure and the catalog of the groups
//!   G1..G4;
//! * [`towers`]: descent towers of invariant generators with checkable
//!   certificates;
//! * [`genpoly`]: generic sextic polynomials for G1;
//! * [`galois`]: Frobenius cycle-type sampling of specialized sextics.

pub mod algebra;
pub mod error;
pub mod permgrp;
pub mod polyring;
pub mod ratfield;
pub mod towers;
pub mod genpoly;
pub mod galois;

pub use algebra::{Field, FieldElem, Rational};
pub use error::{Error, Result};
