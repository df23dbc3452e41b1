//! Wavelet-based resizing of neural network checkpoints.

pub mod checkpoint;
pub mod consolidate;
pub mod container;
pub mod dwt;
pub mod error;
pub mod filters;
pub mod metrics;
pub mod nd;
pub mod tensor;
pub mod transfer;

pub use error::{Error, Result};
