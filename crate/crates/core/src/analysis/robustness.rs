use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::efficiency::{communication_efficiency_with, EfficiencyNorm};
use crate::curvature::{vertex_curvature, CurvatureKind, EdgeCurvatureVector};
use crate::error::{Error, Result};
use crate::forman::{augmented_forman_edge, forman_edge};
use crate::graph::Graph;
use crate::metrics;
use crate::ollivier::{ollivier_edge_local, WalkKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Target {
    Edges,
    Vertices,
}

impl FromStr for Target {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "edge" | "edges" => Ok(Target::Edges),
            "vertex" | "vertices" | "node" | "nodes" => Ok(Target::Vertices),
            other => Err(Error::invalid("target", format!("expected `edges` or `vertices`, got `{other}`"))),
        }
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Target::Edges => "edges",
            Target::Vertices => "vertices",
        })
    }
}

/// Removal ordering.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Strategy {
    Random,
    OrIncreasing,
    FrIncreasing,
    AfrIncreasing,
    EbcDecreasing,
    BcDecreasing,
    DegreeDecreasing,
    CcDecreasing,
}

impl Strategy {
    pub const EDGE: [Strategy; 5] = [
        Strategy::Random,
        Strategy::OrIncreasing,
        Strategy::FrIncreasing,
        Strategy::AfrIncreasing,
        Strategy::EbcDecreasing,
    ];

    pub const VERTEX: [Strategy; 7] = [
        Strategy::Random,
        Strategy::OrIncreasing,
        Strategy::FrIncreasing,
        Strategy::AfrIncreasing,
        Strategy::BcDecreasing,
        Strategy::DegreeDecreasing,
        Strategy::CcDecreasing,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Strategy::Random => "random",
            Strategy::OrIncreasing => "or_increasing",
            Strategy::FrIncreasing => "fr_increasing",
            Strategy::AfrIncreasing => "afr_increasing",
            Strategy::EbcDecreasing => "ebc_decreasing",
            Strategy::BcDecreasing => "bc_decreasing",
            Strategy::DegreeDecreasing => "degree_decreasing",
            Strategy::CcDecreasing => "cc_decreasing",
        }
    }

    pub fn applies_to(self, target: Target) -> bool {
        match target {
            Target::Edges => Strategy::EDGE.contains(&self),
            Target::Vertices => Strategy::VERTEX.contains(&self),
        }
    }

    pub fn for_target(target: Target) -> &'static [Strategy] {
        match target {
            Target::Edges => &Strategy::EDGE,
            Target::Vertices => &Strategy::VERTEX,
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Strategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lower = s.to_ascii_lowercase();
        Strategy::EDGE
            .iter()
            .chain(&Strategy::VERTEX)
            .copied()
            .find(|st| st.name() == lower)
            .ok_or_else(|| Error::UnknownStrategy(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RemovalOptions {
    pub walk: WalkKind,
    pub norm: EfficiencyNorm,
    /// Recompute the ordering on the damaged network after every removal.
    pub adaptive: bool,
    /// After vertex removal, use the number of remaining vertices in the
    /// prefactor instead of the original count.
    pub renormalize_vertices: bool,
}

impl Default for RemovalOptions {
    fn default() -> Self {
        RemovalOptions {
            walk: WalkKind::LAZY,
            norm: EfficiencyNorm::Paper,
            adaptive: false,
            renormalize_vertices: false,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CurvePoint {
    pub fraction: f64,
    pub efficiency: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RemovalCurve {
    pub strategy: Strategy,
    pub target: Target,
    pub seed: u64,
    pub points: Vec<CurvePoint>,
}

/// Writes `strategy,fraction,efficiency` rows for a set of curves.
pub fn write_curves_csv<W: std::io::Write>(curves: &[RemovalCurve], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["strategy", "fraction", "efficiency"])?;
    for c in curves {
        for p in &c.points {
            w.write_record([c.strategy.name().to_string(), p.fraction.to_string(), p.efficiency.to_string()])?;
        }
    }
    w.flush().map_err(|e| Error::io("<curve csv>", e))
}

/// Pointwise mean of curves sampled at the same fractions.
pub fn mean_curve(curves: &[RemovalCurve]) -> Result<Vec<CurvePoint>> {
    let first = curves.first().ok_or_else(|| Error::Domain("no curves to average".into()))?;
    let mut out = first.points.clone();
    for c in &curves[1..] {
        if c.points.len() != out.len() {
            return Err(Error::Domain("curves sampled at different fractions".into()));
        }
        for (acc, p) in out.iter_mut().zip(&c.points) {
            acc.efficiency += p.efficiency;
        }
    }
    for p in &mut out {
        p.efficiency /= curves.len() as f64;
    }
    Ok(out)
}

/// Scores whose ascending order is the removal order. Decreasing strategies
/// negate their metric.
fn scores(g: &Graph, target: Target, strategy: Strategy, walk: WalkKind) -> Result<Vec<f64>> {
    let edge_curv = |kind: CurvatureKind| -> Result<EdgeCurvatureVector> {
        Ok(match kind {
            CurvatureKind::Ollivier => ollivier_edge_local(g, walk)?,
            CurvatureKind::Forman => forman_edge(g),
            CurvatureKind::AugmentedForman => augmented_forman_edge(g),
        })
    };
    let curvature = |kind| -> Result<Vec<f64>> {
        let ev = edge_curv(kind)?;
        match target {
            Target::Edges => Ok(ev.values),
            Target::Vertices => Ok(vertex_curvature(g, &ev)?.values),
        }
    };
    let neg = |v: Vec<f64>| v.into_iter().map(|x| -x).collect();
    match strategy {
        Strategy::OrIncreasing => curvature(CurvatureKind::Ollivier),
        Strategy::FrIncreasing => curvature(CurvatureKind::Forman),
        Strategy::AfrIncreasing => curvature(CurvatureKind::AugmentedForman),
        Strategy::EbcDecreasing => Ok(neg(metrics::edge_betweenness(g))),
        Strategy::BcDecreasing => Ok(neg(metrics::vertex_betweenness(g))),
        Strategy::DegreeDecreasing => Ok(neg(metrics::degree_column(g))),
        Strategy::CcDecreasing => Ok(neg(metrics::clustering_coefficient(g))),
        Strategy::Random => unreachable!("random order has no scores"),
    }
}

/// Ids sorted by ascending score, ties by ascending id.
fn order_by(scores: &[f64], candidates: impl Iterator<Item = usize>) -> Vec<usize> {
    let mut ids: Vec<usize> = candidates.collect();
    ids.sort_by(|&a, &b| scores[a].total_cmp(&scores[b]).then(a.cmp(&b)));
    ids
}

/// Static removal order on the intact network.
pub fn removal_order(g: &Graph, target: Target, strategy: Strategy, seed: u64, walk: WalkKind) -> Result<Vec<usize>> {
    if !strategy.applies_to(target) {
        return Err(Error::UnknownStrategy(format!("{strategy} (for {target})")));
    }
    let total = match target {
        Target::Edges => g.edge_count(),
        Target::Vertices => g.vertex_count(),
    };
    if strategy == Strategy::Random {
        let mut ids: Vec<usize> = (0..total).collect();
        ids.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        return Ok(ids);
    }
    Ok(order_by(&scores(g, target, strategy, walk)?, 0..total))
}

/// Network with the given elements removed, keeping all vertex ids.
fn damaged(g: &Graph, target: Target, removed: &[bool]) -> Graph {
    match target {
        Target::Edges => g.edge_subgraph(|e| !removed[e.index()]),
        Target::Vertices => g.edge_subgraph(|e| {
            let (u, v) = g.endpoints(e);
            !removed[u] && !removed[v]
        }),
    }
}

/// Number of removed elements at each of `steps` evenly spaced fractions.
fn checkpoints(total: usize, steps: usize) -> Vec<(f64, usize)> {
    (0..steps)
        .map(|i| {
            let fraction = i as f64 / (steps - 1) as f64;
            let k = (i * total + (steps - 1) / 2) / (steps - 1);
            (fraction, k)
        })
        .collect()
}

/// Removes edges or vertices of `g` in the order given by `strategy` and
/// records communication efficiency at `steps` evenly spaced fractions
/// `i / (steps - 1)`. Vertex removal drops incident edges; removed vertices
/// stay in the prefactor unless `renormalize_vertices` is set.
pub fn removal_experiment(
    g: &Graph,
    target: Target,
    strategy: &str,
    steps: usize,
    seed: u64,
    opts: &RemovalOptions,
) -> Result<RemovalCurve> {
    let strategy: Strategy = strategy.parse()?;
    if !strategy.applies_to(target) {
        return Err(Error::UnknownStrategy(format!("{strategy} (for {target})")));
    }
    if steps < 2 {
        return Err(Error::invalid("steps", "must be at least 2"));
    }
    let n = g.vertex_count();
    if n < 2 {
        return Err(Error::Domain(format!("removal needs at least 2 vertices, got {n}")));
    }
    let total = match target {
        Target::Edges => g.edge_count(),
        Target::Vertices => n,
    };
    let adaptive = opts.adaptive && strategy != Strategy::Random;

    let efficiency = |h: &Graph, removed_count: usize| -> Result<f64> {
        let remaining = if target == Target::Vertices && opts.renormalize_vertices {
            n - removed_count
        } else {
            n
        };
        if remaining < 2 {
            return Ok(0.0);
        }
        communication_efficiency_with(h, opts.norm, remaining)
    };

    let mut removed = vec![false; total];
    let mut points = Vec::with_capacity(steps);
    let mut done = 0usize;

    if adaptive {
        let mut current = g.clone();
        for (fraction, k) in checkpoints(total, steps) {
            while done < k {
                let s = scores(&current, target, strategy, opts.walk)?;
                let next = order_by(&s, (0..total).filter(|&i| !removed[i]))[0];
                removed[next] = true;
                done += 1;
                current = damaged(g, target, &removed);
            }
            points.push(CurvePoint {
                fraction,
                efficiency: efficiency(&current, done)?,
            });
        }
    } else {
        let order = removal_order(g, target, strategy, seed, opts.walk)?;
        for (fraction, k) in checkpoints(total, steps) {
            while done < k {
                removed[order[done]] = true;
                done += 1;
            }
            let h = if done == 0 { g.clone() } else { damaged(g, target, &removed) };
            points.push(CurvePoint {
                fraction,
                efficiency: efficiency(&h, done)?,
            });
        }
    }

    Ok(RemovalCurve {
        strategy,
        target,
        seed,
        points,
    })
}
