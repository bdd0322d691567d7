//! Exact divisor-lattice arithmetic, numerical invariants, curve-class
//! enumeration, quadric-cone Chow rings, and the projective-normality
//! decision engine for degree-nine polarized surfaces.
//!
//! Everything is integer or exact-rational arithmetic; the library contains
//! no floating point. Verdicts carry ordered citation trails keyed into a
//! registry of criteria and imported classification facts, so a report can
//! be audited rule by rule.

pub mod anchors;
pub mod catalog;
pub mod cone_chow;
pub mod curve_search;
pub mod error;
pub mod invariants;
pub mod normality;
pub mod ratio;
pub mod surface_models;

pub use error::Error;
pub use ratio::Ratio;
pub use surface_models::{BaseSurface, DivisorClass, SurfaceModel, SurfaceSpec};
