//! Federated meta-learning toolkit for constrained clients.
//!
//! The crate is organized around the lifecycle of a tiny model:
//!
//! - [`nncore`] — dense feed-forward networks with hand-written
//!   backpropagation, SGD/Adam optimizers, and binary checkpoints.
//! - [`streams`] — task distributions (sine regression, synthetic
//!   classification), sample generation, support/query splits, CSV ingestion.
//! - [`tinyol`] — streaming on-device learning: a frozen base network plus a
//!   trainable output layer, Welford input standardization, prequential
//!   metrics, and a brute-force KNN baseline.
//! - [`fedmeta`] — the federated meta-learning protocols (FedSGD, batched
//!   Reptile, serial TinyReptile, TinyMetaFed with partial local
//!   reconstruction, top-P% selective communication, and cosine-annealing
//!   server schedule) with exact communication accounting.
//! - [`netsim`] — the wire layer: length-prefixed binary framing, loopback
//!   and TCP transports, and the device-side event loop.
//!
//! All generators and protocols are deterministic functions of their
//! configuration and a 64-bit seed; two runs with the same inputs produce
//! byte-identical outputs.

pub mod error;
pub mod fedmeta;
pub mod netsim;
pub mod nncore;
pub mod seed;
pub mod streams;
pub mod tinyol;

pub use error::{Error, Result};
pub use fedmeta::{
    CommunicationLedger, CosineSchedule, GlobalLocalPartition, MetaConfig, Protocol, RoundRecord,
    SparseUpdate,
};
pub use nncore::{
    Activation, GradientVector, NetworkConfig, OptimizerState, OutputHead, ParameterVector,
    Precision,
};
pub use streams::{
    ClassificationTask, Sample, SineTask, SupportQuerySplit, Target, Task, TaskDistributionConfig,
};
pub use tinyol::{KnnHead, PrequentialMetrics, RunningStats, TinyOlEngine};
