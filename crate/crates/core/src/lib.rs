//! Pattern expansion toolkit.
//!
//! The crate covers the full pipeline for hand-drawn-style structured
//! patterns:
//!
//! * [`proc_patterns`] procedurally renders eight pattern classes with
//!   Perlin-noise domain warping and emits template captions, producing
//!   the training corpus.
//! * [`nn`] is a small dependency-free neural network layer zoo
//!   (convolutions, group norm, attention, Adam) with hand-written
//!   backward passes, generic over `f32`/`f64`.
//! * [`diffusion`] holds the latent diffusion stack: autoencoder, noise
//!   schedule, time-conditioned U-Net with decoupled text/image
//!   cross-attention, LoRA adapters, the training loops and the DDIM
//!   sampler.
//! * [`expansion`] grows a small seed patch into an arbitrarily large
//!   tileable canvas via masked outpainting, per-step noise rolling,
//!   latent replication and patched diffusion.
//! * [`eval`] measures tileability (seam energy) and input fidelity and
//!   drives the ablation grid.
//!
//! All randomness flows from explicit seeds through named substreams
//! ([`rng`]), so every artifact is reproducible bit-exactly on one
//! platform.

pub mod ckpt;
pub mod config;
pub mod diffusion;
pub mod error;
pub mod eval;
pub mod expansion;
pub mod manifest;
pub mod nn;
pub mod proc_patterns;
pub mod raster;
pub mod rng;

pub use error::{Error, Result};

/// Element type used by the production pipeline. Tests instantiate the
/// generic layers at `f64` where tighter tolerances are required.
pub type Real = f32;
