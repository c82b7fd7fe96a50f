//! Discrete Ricci curvature for complex networks.
//!
//! Ollivier-Ricci curvature (exact optimal transport between random-walk
//! measures), Forman-Ricci curvature and its triangle-augmented variant, the
//! classical edge/vertex metrics they are usually compared against, seeded
//! model-network generators, rank/linear correlation over ensembles, and
//! communication-efficiency robustness experiments.

pub mod analysis;
pub mod curvature;
pub mod error;
pub mod forman;
pub mod generators;
pub mod graph;
pub mod io;
pub mod metrics;
pub mod ollivier;
pub mod reproduce;
pub mod table;

pub use curvature::{CurvatureKind, EdgeCurvatureVector, VertexCurvatureVector};
pub use error::{Error, Result};
pub use graph::{EdgeId, Graph, LoadReport};
pub use ollivier::{SparseMeasure, TransportPlan, WalkKind};
pub use table::{MetricTable, Scope};
