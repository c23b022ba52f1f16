//! MRC-Net: multi-resolution contextual network for retinal vessel segmentation,
//! trained adversarially against a conditional discriminator.
//!
//! The crate is a self-contained CPU implementation: a small `f32`/`f64`-generic
//! neural-network stack with hand-derived backward passes, the MRC-Net generator
//! and its conditional discriminator, the region-based loss family, the full
//! evaluation-metric suite, dataset pipelines for the DRIVE/STARE/CHASE fundus
//! databases, and the round-based adversarial training protocol.
//!
//! Pipeline stages:
//!
//! 1. **data** – dataset loading, resize + z-score preprocessing, augmentation.
//! 2. **generator / discriminator** – the two networks.
//! 3. **losses** – BCE, soft Dice, soft Jaccard, GAN objectives and the
//!    β-weighted composite.
//! 4. **train** – ADAM-driven generator-only or adversarial rounds with
//!    validation-F1 round selection and checkpointing.
//! 5. **metrics** – confusion counts, Se/Sp/Acc/Bacc/F1/Dice/MCC/J/E and AUC.
//! 6. **cli** – `train`, `eval`, `infer`, `ablate`, `report` commands.
//!
//! The `examples/` directory has one runnable example per capability; the
//! `mrcnet` binary is a thin wrapper over [`cli`].

// Force the OpenBLAS backend to be linked for ndarray's BLAS gemm dispatch.
extern crate blas_src;

pub mod checkpoint;
pub mod cli;
pub mod config;
pub mod data;
pub mod discriminator;
pub mod generator;
pub mod losses;
pub mod metrics;
pub mod nn;
pub mod report;
pub mod train;

pub use discriminator::{Discriminator, DiscriminatorConfig};
pub use generator::{Generator, GeneratorConfig};
pub use losses::LossConfig;
pub use metrics::{ConfusionCounts, MetricsReport};
pub use train::TrainConfig;
