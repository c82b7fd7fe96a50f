use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Normaliser for the inverse-distance sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum EfficiencyNorm {
    /// Unordered pairs over `n(n-1)`: complete graphs score 1/2.
    #[default]
    Paper,
    /// Ordered pairs over `n(n-1)`: complete graphs score 1.
    Ordered,
}

/// Sum of `1/d(i, j)` over unordered reachable pairs `i < j`.
///
/// Per-source sums are collected by index and added sequentially, so the
/// result is independent of scheduling.
pub fn inverse_distance_sum(g: &Graph) -> f64 {
    let n = g.vertex_count();
    let per_source: Vec<f64> = (0..n)
        .into_par_iter()
        .map_init(
            || (vec![usize::MAX; n], Vec::with_capacity(n)),
            |(dist, queue), s| {
                for &v in queue.iter() {
                    dist[v] = usize::MAX;
                }
                queue.clear();
                dist[s] = 0;
                queue.push(s);
                let mut head = 0;
                let mut sum = 0.0;
                while head < queue.len() {
                    let v = queue[head];
                    head += 1;
                    if v > s {
                        sum += 1.0 / dist[v] as f64;
                    }
                    for &w in g.neighbors(v) {
                        if dist[w] == usize::MAX {
                            dist[w] = dist[v] + 1;
                            queue.push(w);
                        }
                    }
                }
                sum
            },
        )
        .collect();
    per_source.iter().sum()
}

/// Communication efficiency `Σ_{i<j} 1/d_ij / (n(n-1))`; disconnected pairs
/// contribute nothing.
pub fn communication_efficiency(g: &Graph) -> Result<f64> {
    communication_efficiency_with(g, EfficiencyNorm::Paper, g.vertex_count())
}

/// Efficiency with an explicit normaliser and vertex count `n` in the
/// prefactor (which may differ from `g.vertex_count()` when removed vertices
/// are kept as isolated placeholders).
pub fn communication_efficiency_with(g: &Graph, norm: EfficiencyNorm, n: usize) -> Result<f64> {
    if n < 2 {
        return Err(Error::Domain(format!("communication efficiency needs at least 2 vertices, got {n}")));
    }
    let s = inverse_distance_sum(g);
    let factor = match norm {
        EfficiencyNorm::Paper => 1.0,
        EfficiencyNorm::Ordered => 2.0,
    };
    Ok(factor * s / (n as f64 * (n - 1) as f64))
}
