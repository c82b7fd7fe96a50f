//! Independent reference implementations shared by the integration tests.
#![allow(dead_code)]

use std::collections::VecDeque;

use ricci_net::Graph;

pub fn complete(n: usize) -> Graph {
    Graph::from_simple_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
}

pub fn star(m: usize) -> Graph {
    Graph::from_simple_edges(m + 1, (1..=m).map(|i| (0, i))).unwrap()
}

pub fn cycle(n: usize) -> Graph {
    Graph::from_simple_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
}

pub fn path(n: usize) -> Graph {
    Graph::from_simple_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
}

/// Two stars with `a` and `b` leaves whose centres 0 and 1 are joined.
pub fn double_star(a: usize, b: usize) -> Graph {
    let mut edges = vec![(0, 1)];
    edges.extend((0..a).map(|i| (0, 2 + i)));
    edges.extend((0..b).map(|i| (1, 2 + a + i)));
    Graph::from_simple_edges(2 + a + b, edges).unwrap()
}

/// All-pairs hop distances by repeated BFS over an adjacency matrix.
pub fn all_pairs(g: &Graph) -> Vec<Vec<Option<usize>>> {
    let n = g.vertex_count();
    let mut adj = vec![vec![false; n]; n];
    for &(u, v) in g.edges() {
        adj[u][v] = true;
        adj[v][u] = true;
    }
    (0..n)
        .map(|s| {
            let mut d = vec![None; n];
            d[s] = Some(0);
            let mut q = VecDeque::from([s]);
            while let Some(v) = q.pop_front() {
                for w in 0..n {
                    if adj[v][w] && d[w].is_none() {
                        d[w] = Some(d[v].unwrap() + 1);
                        q.push_back(w);
                    }
                }
            }
            d
        })
        .collect()
}

/// Every shortest path between every unordered pair, enumerated by DFS.
/// Returns `(vertex, edge)` betweenness with endpoints excluded.
pub fn brute_force_betweenness(g: &Graph) -> (Vec<f64>, Vec<f64>) {
    let n = g.vertex_count();
    let d = all_pairs(g);
    let mut vb = vec![0.0; n];
    let mut eb = vec![0.0; g.edge_count()];
    for s in 0..n {
        for t in s + 1..n {
            let Some(dst) = d[s][t] else { continue };
            let mut paths: Vec<Vec<usize>> = Vec::new();
            let mut stack = vec![vec![s]];
            while let Some(p) = stack.pop() {
                let last = *p.last().unwrap();
                if last == t {
                    paths.push(p);
                    continue;
                }
                for &w in g.neighbors(last) {
                    if d[s][w] == Some(p.len()) && d[w][t] == Some(dst - p.len()) {
                        let mut q = p.clone();
                        q.push(w);
                        stack.push(q);
                    }
                }
            }
            let share = 1.0 / paths.len() as f64;
            for p in &paths {
                for &v in &p[1..p.len() - 1] {
                    vb[v] += share;
                }
                for w in p.windows(2) {
                    eb[g.find_edge(w[0], w[1]).unwrap().index()] += share;
                }
            }
        }
    }
    (vb, eb)
}

/// Minimum transportation cost by enumerating every spanning-tree basis of
/// the bipartite cell graph and solving each by leaf elimination.
pub fn brute_force_transport(supply: &[f64], demand: &[f64], cost: &[f64]) -> f64 {
    let (m, n) = (supply.len(), demand.len());
    let cells = m * n;
    let k = m + n - 1;
    let mut best = f64::INFINITY;
    let mut pick: Vec<usize> = (0..k).collect();
    loop {
        if let Some(c) = tree_solution(supply, demand, cost, &pick) {
            best = best.min(c);
        }
        // next k-combination of 0..cells
        let mut i = k;
        loop {
            if i == 0 {
                return best;
            }
            i -= 1;
            if pick[i] != i + cells - k {
                break;
            }
        }
        pick[i] += 1;
        for j in i + 1..k {
            pick[j] = pick[j - 1] + 1;
        }
    }
}

fn tree_solution(supply: &[f64], demand: &[f64], cost: &[f64], pick: &[usize]) -> Option<f64> {
    let (m, n) = (supply.len(), demand.len());
    let mut rem: Vec<f64> = supply.iter().chain(demand).copied().collect();
    let mut live = vec![true; pick.len()];
    let mut degree = vec![0usize; m + n];
    for &c in pick {
        degree[c / n] += 1;
        degree[m + c % n] += 1;
    }
    let mut total = 0.0;
    for _ in 0..pick.len() {
        // a live cell with a leaf endpoint
        let (slot, leaf) = pick.iter().enumerate().filter(|(s, _)| live[*s]).find_map(|(s, &c)| {
            let (r, col) = (c / n, m + c % n);
            if degree[r] == 1 {
                Some((s, r))
            } else if degree[col] == 1 {
                Some((s, col))
            } else {
                None
            }
        })?;
        let c = pick[slot];
        let (r, col) = (c / n, m + c % n);
        let other = if leaf == r { col } else { r };
        let x = rem[leaf];
        if x < -1e-12 {
            return None;
        }
        rem[leaf] = 0.0;
        rem[other] -= x;
        degree[r] -= 1;
        degree[col] -= 1;
        live[slot] = false;
        total += x * cost[c];
    }
    // acyclic with m + n - 1 cells means spanning; residuals must vanish
    if rem.iter().all(|r| r.abs() < 1e-9) {
        Some(total)
    } else {
        None
    }
}

/// Triangles by checking every vertex triple.
pub fn brute_force_triangles(g: &Graph) -> usize {
    let n = g.vertex_count();
    let mut t = 0;
    for a in 0..n {
        for b in a + 1..n {
            if !g.has_edge(a, b) {
                continue;
            }
            for c in b + 1..n {
                if g.has_edge(a, c) && g.has_edge(b, c) {
                    t += 1;
                }
            }
        }
    }
    t
}

/// Ordinary least-squares slope.
pub fn ols_slope(xs: &[f64], ys: &[f64]) -> f64 {
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    sxy / sxx
}
