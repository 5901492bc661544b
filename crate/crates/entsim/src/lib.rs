//! Entailment-based trajectory similarity.
//!
//! Compares trajectories two ways: geometrically, via the Hausdorff distance
//! between their fixes, and inferentially, via the Jaccard overlap of the
//! spatial-relation statements each trajectory entails from the regions it
//! crosses. A small risk harness then quantifies what substituting one
//! trajectory for the other does to a region-attribute average (the
//! insurance-risk toy model).

pub mod entailment;
pub mod error;
pub mod geometry;
pub mod regions;
pub mod report;
pub mod risk;
pub mod similarity;

pub use error::{Error, Result};
