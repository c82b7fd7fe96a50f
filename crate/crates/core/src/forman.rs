//! Forman-Ricci curvature of edges and its augmented variant with triangle
//! faces.
//!
//! On unit weights both are evaluated in exact integer arithmetic:
//! `F(e) = 4 - deg(u) - deg(v)` and `F#(e) = F(e) + 3 t(e)`, where `t(e)` is
//! the number of triangles through `e`. With non-unit weights the general
//! cell-complex formulas are evaluated in floating point.

use crate::curvature::{vertex_curvature, CurvatureKind, EdgeCurvatureVector, VertexCurvatureVector};
use crate::error::Result;
use crate::graph::Graph;

/// Forman-Ricci curvature of every edge.
pub fn forman_edge(g: &Graph) -> EdgeCurvatureVector {
    if g.is_unit_weighted() {
        let values = g
            .edges()
            .iter()
            .map(|&(u, v)| (4 - g.degree(u) as i64 - g.degree(v) as i64) as f64)
            .collect();
        EdgeCurvatureVector::new(CurvatureKind::Forman, values)
    } else {
        forman_edge_weighted(g)
    }
}

/// Weighted Forman curvature, always evaluated with the general formula
///
/// `F(e) = w_e (w_u/w_e + w_v/w_e - Σ_{ê∋u, ê≠e} w_u/√(w_e w_ê) - Σ_{ê∋v, ê≠e} w_v/√(w_e w_ê))`.
pub fn forman_edge_weighted(g: &Graph) -> EdgeCurvatureVector {
    let values = g
        .edge_ids()
        .map(|e| {
            let (u, v) = g.endpoints(e);
            let we = g.edge_weight(e);
            let (wu, wv) = (g.vertex_weight(u), g.vertex_weight(v));
            let side = |x: usize, wx: f64| -> f64 {
                g.incident_edges(x)
                    .iter()
                    .filter(|&&f| f != e)
                    .map(|&f| wx / (we * g.edge_weight(f)).sqrt())
                    .sum()
            };
            we * (wu / we + wv / we - side(u, wu) - side(v, wv))
        })
        .collect();
    EdgeCurvatureVector::new(CurvatureKind::Forman, values)
}

/// Augmented Forman-Ricci curvature with every triangle as a unit-weight face.
pub fn augmented_forman_edge(g: &Graph) -> EdgeCurvatureVector {
    if g.is_unit_weighted() {
        let values = g
            .edge_ids()
            .map(|e| {
                let (u, v) = g.endpoints(e);
                let t = g.triangles_through_edge(e) as i64;
                (4 - g.degree(u) as i64 - g.degree(v) as i64 + 3 * t) as f64
            })
            .collect();
        EdgeCurvatureVector::new(CurvatureKind::AugmentedForman, values)
    } else {
        augmented_forman_edge_with_faces(g, |_, _, _| 1.0)
    }
}

/// Augmented Forman curvature on the 2-complex whose faces are the triangles
/// of `g`; `face_weight(a, b, c)` gives the weight of triangle `a < b < c`.
///
/// Two edges sharing a vertex are parallel unless they also bound a common
/// triangle; each parallel edge `ê` contributes
/// `|Σ_{f ⊃ e, ê} √(w_e w_ê)/w_f - Σ_{x ∈ e ∩ ê} w_x/√(w_e w_ê)|`.
pub fn augmented_forman_edge_with_faces(g: &Graph, face_weight: impl Fn(usize, usize, usize) -> f64) -> EdgeCurvatureVector {
    let tri_weight = |a: usize, b: usize, c: usize| {
        let mut t = [a, b, c];
        t.sort_unstable();
        face_weight(t[0], t[1], t[2])
    };
    let values = g
        .edge_ids()
        .map(|e| {
            let (u, v) = g.endpoints(e);
            let we = g.edge_weight(e);
            let apexes = g.common_neighbors(e);

            let faces: f64 = apexes.iter().map(|&c| we / tri_weight(u, v, c)).sum();
            let vertices = g.vertex_weight(u) / we + g.vertex_weight(v) / we;

            let mut parallel = 0.0;
            for (shared, other) in [(u, v), (v, u)] {
                let ws = g.vertex_weight(shared);
                for (&far, &f) in g.neighbors(shared).iter().zip(g.incident_edges(shared)) {
                    if far == other {
                        continue;
                    }
                    // ê = (shared, far) bounds a face with e iff far is an apex; it then
                    // has a common parent and a common child and is not parallel
                    if apexes.binary_search(&far).is_ok() {
                        continue;
                    }
                    // no common parent: the face sum is empty
                    parallel += ws / (we * g.edge_weight(f)).sqrt();
                }
            }
            we * (faces + vertices - parallel)
        })
        .collect();
    EdgeCurvatureVector::new(CurvatureKind::AugmentedForman, values)
}

pub fn forman_vertex(g: &Graph, edge_curv: &EdgeCurvatureVector) -> Result<VertexCurvatureVector> {
    vertex_curvature(g, edge_curv)
}
