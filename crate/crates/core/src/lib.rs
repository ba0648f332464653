//! Pipeline library for few-shot fish image classification.
//!
//! The pipeline ingests a hierarchically labeled image collection into a
//! manifest, generates per-category textual descriptions through a pluggable
//! language-model client, turns those descriptions into synthetic images plus
//! latent encodings through a pluggable generation backend, fine-tunes a
//! dual-pathway contrastive embedding model, and evaluates top-k / size-binned
//! accuracy under few-shot protocols.
//!
//! Every heavyweight model (language model, image generator, encoder) sits
//! behind a trait registered by name in a [`registry::Registry`], so the whole
//! pipeline runs deterministically on CPU with the built-in mock backends.

pub mod augmentor;
pub mod dataset;
pub mod error;
pub mod evaluator;
pub mod fraction;
pub mod hash;
pub mod latent;
pub mod model;
pub mod pipeline;
pub mod promptgen;
pub mod registry;
pub mod taxonomy;
pub mod trainer;

pub use error::{Error, Result};
