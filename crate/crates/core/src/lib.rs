//! Radon-projection features and shallow kernel networks.
//!
//! This crate implements the full Projectron pipeline: global Radon
//! projections as image descriptors, a three-stage shallow network (dense
//! encoder, paired RBF kernel layer with learnable bandwidths, shallow MLP
//! classifier), plain MLP baselines, Adam training with early stopping, and
//! the evaluation metrics used to compare them.

pub mod checkpoint;
pub mod data;
pub mod error;
pub mod metrics;
pub mod model;
pub mod nn;
pub mod radon;
pub mod train;

pub use error::Error;

/// Convenience alias used across the crate.
pub type Result<T> = std::result::Result<T, Error>;
