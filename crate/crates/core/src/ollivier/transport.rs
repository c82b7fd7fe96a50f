//! Exact solver for the balanced transportation problem
//!
//! ```text
//! minimise   Σ_ij c_ij x_ij
//! subject to Σ_j x_ij = s_i,  Σ_i x_ij = d_j,  x_ij >= 0
//! ```
//!
//! Transportation simplex: a least-cost greedy allocation gives a starting
//! basis (a spanning tree of `m + n - 1` cells, degenerate cells included), then
//! MODI potentials price the non-basic cells. Entering and leaving cells are
//! chosen by Bland's rule on the row-major cell index, which rules out
//! cycling and makes the pivot sequence fully deterministic.

use crate::error::{Error, Result};

/// Optimal plan of a transportation problem.
#[derive(Debug, Clone, PartialEq)]
pub struct TransportSolution {
    pub rows: usize,
    pub cols: usize,
    /// Row-major `rows × cols` flow matrix.
    pub flow: Vec<f64>,
    pub cost: f64,
    pub row_potential: Vec<f64>,
    pub col_potential: Vec<f64>,
    pub pivots: usize,
}

impl TransportSolution {
    #[inline]
    pub fn flow_at(&self, i: usize, j: usize) -> f64 {
        self.flow[i * self.cols + j]
    }
}

#[derive(Debug, Clone, Copy)]
struct BasicCell {
    row: usize,
    col: usize,
    flow: f64,
}

impl BasicCell {
    fn index(&self, cols: usize) -> usize {
        self.row * cols + self.col
    }
}

/// Solves the transportation problem with supplies `supply`, demands
/// `demand` and row-major costs `cost`. Supplies and demands must be
/// nonnegative with equal totals (up to rounding).
pub fn solve_transport(supply: &[f64], demand: &[f64], cost: &[f64]) -> Result<TransportSolution> {
    let (m, n) = (supply.len(), demand.len());
    if m == 0 || n == 0 {
        return Err(Error::Solver("empty supply or demand".into()));
    }
    if cost.len() != m * n {
        return Err(Error::Solver(format!("cost matrix has {} entries, expected {}", cost.len(), m * n)));
    }
    if supply.iter().chain(demand).any(|&x| !(x >= 0.0 && x.is_finite())) {
        return Err(Error::Solver("supplies and demands must be finite and nonnegative".into()));
    }
    if cost.iter().any(|c| !c.is_finite()) {
        return Err(Error::Solver("costs must be finite".into()));
    }
    let total_s: f64 = supply.iter().sum();
    let total_d: f64 = demand.iter().sum();
    if (total_s - total_d).abs() > 1e-9 * total_s.max(total_d).max(1.0) {
        return Err(Error::Solver(format!("unbalanced problem: supply {total_s} vs demand {total_d}")));
    }

    let scale = cost.iter().fold(1.0f64, |a, &c| a.max(c.abs()));
    let eps = 1e-12 * scale;

    let mut basis = least_cost_start(supply, demand, cost);
    debug_assert_eq!(basis.len(), m + n - 1);
    let mut in_basis = vec![false; m * n];
    for b in &basis {
        in_basis[b.index(n)] = true;
    }

    let mut tree = SpanningTree::new(m, n);
    let mut u = vec![0.0; m];
    let mut v = vec![0.0; n];
    let max_pivots = 100 * (m + n) * (m + n) + 1000;
    let mut pivots = 0;

    loop {
        tree.rebuild(&basis, m);
        tree.potentials(&basis, cost, n, &mut u, &mut v);

        // Bland: lowest-index improving cell enters.
        let entering = (0..m * n).find(|&idx| {
            !in_basis[idx] && cost[idx] - u[idx / n] - v[idx % n] < -eps
        });
        let Some(idx) = entering else { break };
        let (ei, ej) = (idx / n, idx % n);

        pivots += 1;
        if pivots > max_pivots {
            return Err(Error::Solver(format!("no convergence after {max_pivots} pivots")));
        }

        // Path of basic cells from row node `ei` to column node `m + ej`;
        // along it the sign alternates starting with a decrease.
        let path = tree.path(ei, m + ej);
        let (mut theta, mut leave) = (f64::INFINITY, usize::MAX);
        for &slot in path.iter().step_by(2) {
            let cell = basis[slot];
            if leave == usize::MAX
                || cell.flow < theta
                || (cell.flow == theta && cell.index(n) < basis[leave].index(n))
            {
                theta = cell.flow;
                leave = slot;
            }
        }
        for (k, &slot) in path.iter().enumerate() {
            if k % 2 == 0 {
                basis[slot].flow -= theta;
            } else {
                basis[slot].flow += theta;
            }
        }
        in_basis[basis[leave].index(n)] = false;
        basis[leave] = BasicCell { row: ei, col: ej, flow: theta };
        in_basis[idx] = true;
    }

    let mut flow = vec![0.0; m * n];
    for b in &basis {
        flow[b.index(n)] = b.flow.max(0.0);
    }
    let primal: f64 = flow.iter().zip(cost).map(|(x, c)| x * c).sum();
    let dual: f64 = u.iter().zip(supply).map(|(a, b)| a * b).sum::<f64>() + v.iter().zip(demand).map(|(a, b)| a * b).sum::<f64>();
    let min_reduced = (0..m * n).map(|idx| cost[idx] - u[idx / n] - v[idx % n]).fold(f64::INFINITY, f64::min);
    if min_reduced < -1e-9 * scale || (primal - dual).abs() > 1e-9 * scale {
        return Err(Error::Solver(format!(
            "optimality certificate failed: primal {primal}, dual {dual}, min reduced cost {min_reduced}"
        )));
    }

    Ok(TransportSolution {
        rows: m,
        cols: n,
        flow,
        cost: primal,
        row_potential: u,
        col_potential: v,
        pivots,
    })
}

/// Least-cost start: cells are taken in order of increasing cost (ties by
/// row-major index). Exactly one row or column is retired per allocation
/// (both only at the very end), so the result always has `m + n - 1` cells
/// forming a spanning tree, zero-flow cells included.
fn least_cost_start(supply: &[f64], demand: &[f64], cost: &[f64]) -> Vec<BasicCell> {
    let (m, n) = (supply.len(), demand.len());
    let mut s = supply.to_vec();
    let mut d = demand.to_vec();
    let mut row_live = vec![true; m];
    let mut col_live = vec![true; n];
    let (mut rows_left, mut cols_left) = (m, n);
    let mut cells = Vec::with_capacity(m + n - 1);

    let mut order: Vec<usize> = (0..m * n).collect();
    order.sort_by(|&a, &b| cost[a].total_cmp(&cost[b]).then(a.cmp(&b)));
    let mut next = order.into_iter();

    while rows_left > 1 && cols_left > 1 {
        let idx = next
            .by_ref()
            .find(|&idx| row_live[idx / n] && col_live[idx % n])
            .expect("live rows and columns remain");
        let (i, j) = (idx / n, idx % n);
        if s[i] <= d[j] {
            let x = s[i];
            cells.push(BasicCell { row: i, col: j, flow: x });
            d[j] = (d[j] - x).max(0.0);
            s[i] = 0.0;
            row_live[i] = false;
            rows_left -= 1;
        } else {
            let x = d[j];
            cells.push(BasicCell { row: i, col: j, flow: x });
            s[i] = (s[i] - x).max(0.0);
            d[j] = 0.0;
            col_live[j] = false;
            cols_left -= 1;
        }
    }

    // One line left: the remaining allocations are forced.
    if rows_left == 1 {
        let i = row_live.iter().position(|&l| l).unwrap();
        for j in (0..n).filter(|&j| col_live[j]) {
            cells.push(BasicCell { row: i, col: j, flow: d[j] });
        }
    } else {
        let j = col_live.iter().position(|&l| l).unwrap();
        for i in (0..m).filter(|&i| row_live[i]) {
            cells.push(BasicCell { row: i, col: j, flow: s[i] });
        }
    }
    cells
}

/// Basis tree over `m` row nodes and `n` column nodes (`m + j`).
struct SpanningTree {
    adj: Vec<Vec<(usize, usize)>>,
    parent: Vec<(usize, usize)>,
    stack: Vec<usize>,
}

impl SpanningTree {
    fn new(m: usize, n: usize) -> Self {
        SpanningTree {
            adj: vec![Vec::new(); m + n],
            parent: vec![(usize::MAX, usize::MAX); m + n],
            stack: Vec::new(),
        }
    }

    fn rebuild(&mut self, basis: &[BasicCell], m: usize) {
        self.adj.iter_mut().for_each(Vec::clear);
        for (slot, b) in basis.iter().enumerate() {
            self.adj[b.row].push((m + b.col, slot));
            self.adj[m + b.col].push((b.row, slot));
        }
    }

    fn potentials(&mut self, basis: &[BasicCell], cost: &[f64], n: usize, u: &mut [f64], v: &mut [f64]) {
        let m = u.len();
        let mut done = vec![false; m + n];
        self.stack.clear();
        self.stack.push(0);
        done[0] = true;
        u[0] = 0.0;
        while let Some(node) = self.stack.pop() {
            for &(next, slot) in &self.adj[node] {
                if done[next] {
                    continue;
                }
                done[next] = true;
                let c = cost[basis[slot].index(n)];
                if next >= m {
                    v[next - m] = c - u[node];
                } else {
                    u[next] = c - v[node - m];
                }
                self.stack.push(next);
            }
        }
        debug_assert!(done.iter().all(|&d| d), "basis is not spanning");
    }

    /// Basic-cell slots on the tree path from `from` to `to`, in order.
    fn path(&mut self, from: usize, to: usize) -> Vec<usize> {
        self.parent.iter_mut().for_each(|p| *p = (usize::MAX, usize::MAX));
        self.stack.clear();
        self.stack.push(from);
        self.parent[from] = (from, usize::MAX);
        while let Some(node) = self.stack.pop() {
            if node == to {
                break;
            }
            for &(next, slot) in &self.adj[node] {
                if self.parent[next].0 == usize::MAX {
                    self.parent[next] = (node, slot);
                    self.stack.push(next);
                }
            }
        }
        let mut slots = Vec::new();
        let mut node = to;
        while node != from {
            let (prev, slot) = self.parent[node];
            slots.push(slot);
            node = prev;
        }
        slots.reverse();
        slots
    }
}
