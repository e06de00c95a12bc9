//! Littlewood-Richardson coefficients through four combinatorial models.
//!
//! `c^lambda_{mu,nu}` counts each of
//!
//! * LR tableaux of shape `lambda/mu` and content `nu` ([`tableaux`]),
//! * hives with boundary `(mu, nu, lambda)` ([`hives`]),
//! * GZ schemes in `GZ(mu*, lambda*-nu*, nu*)` and in `GZ(nu, lambda-mu, mu)` ([`gt`]).
//!
//! [`bijections`] gives explicit maps between the families, [`enumeration`]
//! lists and counts them, and [`oracle`] computes the coefficient independently
//! by multiplying Schur polynomials.

pub mod bijections;
pub mod enumeration;
pub mod error;
pub mod gt;
pub mod hives;
pub mod oracle;
pub mod render;
pub mod sample;
pub mod tableaux;
pub mod types;

pub use bijections::LRTriple;
pub use error::{Error, Result};
pub use gt::GZTriple;
pub use hives::HiveBoundary;
pub use tableaux::{ContentMatrix, SkewTableau};
pub use types::{DominantWeight, Entry, HArray, Shape, TArray};
