//! Curvature vectors shared by the Forman and Ollivier modules.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CurvatureKind {
    Forman,
    AugmentedForman,
    Ollivier,
}

impl CurvatureKind {
    /// Short column name used in tables.
    pub fn column(self) -> &'static str {
        match self {
            CurvatureKind::Forman => "FR",
            CurvatureKind::AugmentedForman => "AFR",
            CurvatureKind::Ollivier => "OR",
        }
    }
}

/// One curvature value per [`EdgeId`].
#[derive(Debug, Clone, PartialEq)]
pub struct EdgeCurvatureVector {
    pub kind: CurvatureKind,
    pub values: Vec<f64>,
}

impl EdgeCurvatureVector {
    pub fn new(kind: CurvatureKind, values: Vec<f64>) -> Self {
        debug_assert!(values.iter().all(|v| v.is_finite()));
        EdgeCurvatureVector { kind, values }
    }

    #[inline]
    pub fn get(&self, e: EdgeId) -> f64 {
        self.values[e.0]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// One curvature value per vertex.
#[derive(Debug, Clone, PartialEq)]
pub struct VertexCurvatureVector {
    pub kind: CurvatureKind,
    pub values: Vec<f64>,
}

/// Scalar curvature of each vertex: the sum of the curvatures of its
/// incident edges. Isolated vertices get 0.
pub fn vertex_curvature(g: &Graph, edge_curv: &EdgeCurvatureVector) -> Result<VertexCurvatureVector> {
    if edge_curv.len() != g.edge_count() {
        return Err(Error::Domain(format!(
            "edge curvature has {} entries but the graph has {} edges",
            edge_curv.len(),
            g.edge_count()
        )));
    }
    let values = (0..g.vertex_count())
        .map(|v| g.incident_edges(v).iter().map(|&e| edge_curv.get(e)).sum())
        .collect();
    Ok(VertexCurvatureVector {
        kind: edge_curv.kind,
        values,
    })
}
