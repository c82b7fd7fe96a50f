//! Ollivier-Ricci curvature `κ(x, y) = 1 - W1(m_x, m_y) / d(x, y)` with
//! random-walk measures and exact Wasserstein-1 distances on the hop metric.

mod measure;
pub mod transport;

use std::collections::HashMap;

use rayon::prelude::*;

pub use measure::{walk_measure, SparseMeasure, WalkKind};
pub use transport::{solve_transport, TransportSolution};

use crate::curvature::{vertex_curvature, CurvatureKind, EdgeCurvatureVector, VertexCurvatureVector};
use crate::error::{Error, Result};
use crate::graph::{BfsScratch, Graph};

/// Optimal coupling between two measures on a graph.
#[derive(Debug, Clone, PartialEq)]
pub struct TransportPlan {
    /// Support of the source measure.
    pub rows: Vec<usize>,
    /// Support of the target measure.
    pub cols: Vec<usize>,
    /// Row-major flow matrix.
    pub flow: Vec<f64>,
    /// Row-major hop distances.
    pub distance: Vec<f64>,
    /// Total `Σ flow · distance`, i.e. W1.
    pub cost: f64,
}

impl TransportPlan {
    #[inline]
    pub fn flow_at(&self, i: usize, j: usize) -> f64 {
        self.flow[i * self.cols.len() + j]
    }
}

/// Fills the row-major hop-distance matrix between two supports.
fn support_distances(g: &Graph, scratch: &mut BfsScratch, rows: &[usize], cols: &[usize], out: &mut Vec<f64>) -> Result<()> {
    out.clear();
    let mut row = vec![None; cols.len()];
    for &x in rows {
        scratch.distances_to(g, x, cols, &mut row);
        for d in &row {
            out.push(d.ok_or(Error::UnreachableMass)? as f64);
        }
    }
    Ok(())
}

fn wasserstein_with(g: &Graph, scratch: &mut BfsScratch, a: &SparseMeasure, b: &SparseMeasure) -> Result<TransportPlan> {
    let mut distance = Vec::with_capacity(a.len() * b.len());
    support_distances(g, scratch, a.support(), b.support(), &mut distance)?;
    let sol = solve_transport(a.mass(), b.mass(), &distance)?;
    Ok(TransportPlan {
        rows: a.support().to_vec(),
        cols: b.support().to_vec(),
        flow: sol.flow,
        distance,
        cost: sol.cost,
    })
}

/// Exact W1 distance and optimal plan between `a` and `b`, with costs equal
/// to hop distances in `g`.
pub fn wasserstein1(g: &Graph, a: &SparseMeasure, b: &SparseMeasure) -> Result<TransportPlan> {
    let mut scratch = BfsScratch::new(g.vertex_count());
    wasserstein_with(g, &mut scratch, a, b)
}

/// Ollivier-Ricci curvature of every edge. `g` must be connected; run it on
/// the largest connected component.
pub fn ollivier_edge(g: &Graph, walk: WalkKind) -> Result<EdgeCurvatureVector> {
    let (_, components) = g.components();
    if components > 1 {
        return Err(Error::Disconnected { components });
    }
    ollivier_edge_local(g, walk)
}

/// Same as [`ollivier_edge`] without the connectivity check. Edge curvature
/// only involves the two closed neighbourhoods, so it is well defined on
/// every edge of any graph.
pub(crate) fn ollivier_edge_local(g: &Graph, walk: WalkKind) -> Result<EdgeCurvatureVector> {
    let n = g.vertex_count();
    let values = g
        .edges()
        .par_iter()
        .map_init(
            || (BfsScratch::new(n), Vec::new()),
            |(scratch, distance), &(x, y)| -> Result<f64> {
                // adjacent endpoints: d(x, y) = 1
                Ok(1.0 - edge_transport_cost(g, scratch, distance, x, y, walk)?)
            },
        )
        .collect::<Result<Vec<f64>>>()?;
    Ok(EdgeCurvatureVector::new(CurvatureKind::Ollivier, values))
}

/// W1 between the walk measures of adjacent `x` and `y`.
///
/// Every support point lies in `N[x]` or `N[y]`, so all distances are at
/// most 3 and only two-hop neighbourhoods are explored.
///
/// Both measures are multiplied by `deg(x) deg(y)` before solving, so for
/// idleness 0 or 1/2 every mass is an integer or half-integer and the
/// optimal cost is exact until the single final division.
fn edge_transport_cost(
    g: &Graph,
    scratch: &mut BfsScratch,
    distance: &mut Vec<f64>,
    x: usize,
    y: usize,
    walk: WalkKind,
) -> Result<f64> {
    let (dx, dy) = (g.degree(x), g.degree(y));
    let scale = (dx * dy) as f64;
    let stay = walk.idleness();
    let scaled = |v: usize, other_degree: usize| -> (Vec<usize>, Vec<f64>) {
        let mut support = Vec::with_capacity(g.degree(v) + 1);
        let mut mass = Vec::with_capacity(g.degree(v) + 1);
        if stay > 0.0 {
            support.push(v);
            mass.push(stay * scale);
        }
        if stay < 1.0 {
            support.extend_from_slice(g.neighbors(v));
            mass.resize(support.len(), (1.0 - stay) * other_degree as f64);
        }
        (support, mass)
    };
    let (sx, mx) = scaled(x, dy);
    let (sy, my) = scaled(y, dx);
    let ((sx, mx), (sy, my)) = cancel_shared_mass(sx, mx, sy, my);
    if sx.is_empty() {
        return Ok(0.0);
    }
    // mark two-hop balls around the cheaper side; W1 is symmetric
    let reach = |s: &[usize]| -> usize { s.iter().flat_map(|&a| g.neighbors(a)).map(|&w| g.degree(w)).sum() };
    let (mx, my) = if reach(&sx) <= reach(&sy) {
        scratch.near_distances(g, &sx, &sy, distance);
        (mx, my)
    } else {
        scratch.near_distances(g, &sy, &sx, distance);
        (my, mx)
    };
    let (mx, my, cost) = merge_duplicate_lines(&mx, &my, distance);
    let sol = solve_transport(&mx, &my, &cost)?;
    Ok(sol.cost / scale)
}

/// Leaves `min(a(v), b(v))` in place at every shared support vertex, which
/// some optimal plan always does when costs form a metric.
fn cancel_shared_mass(
    sa: Vec<usize>,
    ma: Vec<f64>,
    sb: Vec<usize>,
    mb: Vec<f64>,
) -> ((Vec<usize>, Vec<f64>), (Vec<usize>, Vec<f64>)) {
    let sorted = |s: Vec<usize>, m: Vec<f64>| {
        let mut v: Vec<(usize, f64)> = s.into_iter().zip(m).collect();
        v.sort_unstable_by_key(|p| p.0);
        v
    };
    let (mut a, mut b) = (sorted(sa, ma), sorted(sb, mb));
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                let common = a[i].1.min(b[j].1);
                a[i].1 -= common;
                b[j].1 -= common;
                i += 1;
                j += 1;
            }
        }
    }
    let split = |v: Vec<(usize, f64)>| v.into_iter().filter(|p| p.1 > 0.0).unzip();
    (split(a), split(b))
}

/// Sums the masses of rows (and then columns) whose cost vectors coincide.
/// The merged problem has the same optimal cost.
fn merge_duplicate_lines(supply: &[f64], demand: &[f64], cost: &[f64]) -> (Vec<f64>, Vec<f64>, Vec<f64>) {
    let (m, n) = (supply.len(), demand.len());
    // distances are small integers
    let key = |it: &mut dyn Iterator<Item = f64>| -> Vec<u32> { it.map(|c| c as u32).collect() };

    let mut row_of: HashMap<Vec<u32>, usize> = HashMap::new();
    let mut rows: Vec<usize> = Vec::new();
    let mut new_supply: Vec<f64> = Vec::new();
    for i in 0..m {
        let k = key(&mut cost[i * n..(i + 1) * n].iter().copied());
        match row_of.get(&k) {
            Some(&r) => new_supply[r] += supply[i],
            None => {
                row_of.insert(k, rows.len());
                rows.push(i);
                new_supply.push(supply[i]);
            }
        }
    }

    let mut col_of: HashMap<Vec<u32>, usize> = HashMap::new();
    let mut cols: Vec<usize> = Vec::new();
    let mut new_demand: Vec<f64> = Vec::new();
    for j in 0..n {
        let k = key(&mut rows.iter().map(|&i| cost[i * n + j]));
        match col_of.get(&k) {
            Some(&c) => new_demand[c] += demand[j],
            None => {
                col_of.insert(k, cols.len());
                cols.push(j);
                new_demand.push(demand[j]);
            }
        }
    }

    let merged = rows.iter().flat_map(|&i| cols.iter().map(move |&j| cost[i * n + j])).collect();
    (new_supply, new_demand, merged)
}

pub fn ollivier_vertex(g: &Graph, edge_curv: &EdgeCurvatureVector) -> Result<VertexCurvatureVector> {
    vertex_curvature(g, edge_curv)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(n: usize) -> Graph {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Graph::from_simple_edges(n, edges).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::from_simple_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn identical_measures_cost_nothing() {
        let g = complete(4);
        let m = walk_measure(&g, 0, WalkKind::LAZY).unwrap();
        let plan = wasserstein1(&g, &m, &m).unwrap();
        assert_eq!(plan.cost, 0.0);
        for (i, &mass) in m.mass().iter().enumerate() {
            assert_eq!(plan.flow_at(i, i), mass);
        }
    }

    #[test]
    fn point_masses_cost_their_distance() {
        let g = Graph::from_simple_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        let plan = wasserstein1(&g, &SparseMeasure::dirac(0), &SparseMeasure::dirac(4)).unwrap();
        assert_eq!(plan.cost, 4.0);
        assert_eq!(plan.flow, vec![1.0]);
    }

    #[test]
    fn c4_neighbourhoods() {
        let g = cycle(4);
        let a = walk_measure(&g, 0, WalkKind::NON_LAZY).unwrap();
        let b = walk_measure(&g, 1, WalkKind::NON_LAZY).unwrap();
        assert_eq!(a.support(), &[1, 3]);
        assert_eq!(b.support(), &[0, 2]);
        let plan = wasserstein1(&g, &a, &b).unwrap();
        // every cross distance is 1, so each coupling (e.g. 1 -> 2, 3 -> 0) is optimal
        assert!((plan.cost - 1.0).abs() < 1e-12);
        for i in 0..2 {
            assert!((plan.flow_at(i, 0) + plan.flow_at(i, 1) - 0.5).abs() < 1e-12);
            assert!((plan.flow_at(0, i) + plan.flow_at(1, i) - 0.5).abs() < 1e-12);
        }
    }

    #[test]
    fn unreachable_support_is_an_error() {
        let g = Graph::from_simple_edges(4, [(0, 1), (2, 3)]).unwrap();
        let err = wasserstein1(&g, &SparseMeasure::dirac(0), &SparseMeasure::dirac(3)).unwrap_err();
        assert!(matches!(err, Error::UnreachableMass));
    }

    #[test]
    fn star_is_flat_without_laziness() {
        for m in 2..8 {
            let g = Graph::from_simple_edges(m + 1, (1..=m).map(|i| (0, i))).unwrap();
            let k = ollivier_edge(&g, WalkKind::NON_LAZY).unwrap();
            assert!(k.values.iter().all(|&x| x == 0.0), "m={m}: {:?}", k.values);
            let vc = ollivier_vertex(&g, &k).unwrap();
            assert_eq!(vc.values[1], 0.0);
        }
    }

    #[test]
    fn lazy_triangle() {
        let g = complete(3);
        let k = ollivier_edge(&g, WalkKind::LAZY).unwrap();
        for &x in &k.values {
            assert!((x - 0.75).abs() < 1e-12);
        }
        let vc = ollivier_vertex(&g, &k).unwrap();
        assert!(vc.values.iter().all(|&x| (x - 1.5).abs() < 1e-12));
    }

    #[test]
    fn disconnected_graph_rejected() {
        let g = Graph::from_simple_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert!(matches!(ollivier_edge(&g, WalkKind::LAZY), Err(Error::Disconnected { components: 2 })));
    }
}
