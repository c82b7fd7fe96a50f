//! Classical edge and vertex metrics: betweenness (Brandes), embeddedness,
//! dispersion, degree and local clustering coefficient.

use rayon::prelude::*;

use crate::graph::{EdgeId, Graph};

/// Unnormalised betweenness: each unordered vertex pair contributes its
/// fraction of shortest paths through the element once.
#[derive(Debug, Clone, PartialEq)]
pub struct Betweenness {
    pub vertex: Vec<f64>,
    pub edge: Vec<f64>,
}

const SOURCE_CHUNK: usize = 32;

/// Brandes accumulation over all BFS sources. Sources are processed in fixed
/// chunks whose partial sums are added in chunk order, so the result does not
/// depend on thread scheduling.
pub fn betweenness(g: &Graph) -> Betweenness {
    let n = g.vertex_count();
    let m = g.edge_count();
    let sources: Vec<usize> = (0..n).collect();
    let partials: Vec<(Vec<f64>, Vec<f64>)> = sources
        .par_chunks(SOURCE_CHUNK)
        .map(|chunk| {
            let mut vertex = vec![0.0; n];
            let mut edge = vec![0.0; m];
            let mut state = BrandesState::new(n);
            for &s in chunk {
                state.accumulate(g, s, &mut vertex, &mut edge);
            }
            (vertex, edge)
        })
        .collect();

    let mut vertex = vec![0.0; n];
    let mut edge = vec![0.0; m];
    for (pv, pe) in partials {
        vertex.iter_mut().zip(pv).for_each(|(a, b)| *a += b);
        edge.iter_mut().zip(pe).for_each(|(a, b)| *a += b);
    }
    // every unordered pair was visited from both ends
    vertex.iter_mut().chain(edge.iter_mut()).for_each(|x| *x *= 0.5);
    Betweenness { vertex, edge }
}

pub fn edge_betweenness(g: &Graph) -> Vec<f64> {
    betweenness(g).edge
}

pub fn vertex_betweenness(g: &Graph) -> Vec<f64> {
    betweenness(g).vertex
}

struct BrandesState {
    dist: Vec<i64>,
    sigma: Vec<f64>,
    delta: Vec<f64>,
    order: Vec<usize>,
}

impl BrandesState {
    fn new(n: usize) -> Self {
        BrandesState {
            dist: vec![-1; n],
            sigma: vec![0.0; n],
            delta: vec![0.0; n],
            order: Vec::with_capacity(n),
        }
    }

    fn accumulate(&mut self, g: &Graph, s: usize, vertex: &mut [f64], edge: &mut [f64]) {
        for &v in &self.order {
            self.dist[v] = -1;
            self.sigma[v] = 0.0;
            self.delta[v] = 0.0;
        }
        self.order.clear();

        self.dist[s] = 0;
        self.sigma[s] = 1.0;
        self.order.push(s);
        let mut head = 0;
        while head < self.order.len() {
            let v = self.order[head];
            head += 1;
            for &w in g.neighbors(v) {
                if self.dist[w] < 0 {
                    self.dist[w] = self.dist[v] + 1;
                    self.order.push(w);
                }
                if self.dist[w] == self.dist[v] + 1 {
                    self.sigma[w] += self.sigma[v];
                }
            }
        }

        for &w in self.order.iter().rev() {
            let dw = self.dist[w];
            let coeff = (1.0 + self.delta[w]) / self.sigma[w];
            for (&v, &e) in g.neighbors(w).iter().zip(g.incident_edges(w)) {
                if self.dist[v] == dw - 1 {
                    let c = self.sigma[v] * coeff;
                    edge[e.index()] += c;
                    self.delta[v] += c;
                }
            }
            if w != s {
                vertex[w] += self.delta[w];
            }
        }
    }
}

/// Number of common neighbours of each edge's endpoints.
pub fn embeddedness(g: &Graph) -> Vec<f64> {
    g.edge_ids().map(|e| g.triangles_through_edge(e) as f64).collect()
}

/// Dispersion of each edge `(u, v)`: over unordered pairs `{s, t}` of common
/// neighbours, count those where `s` and `t` are not adjacent and have no
/// common neighbour among the other common neighbours of `u` and `v`.
/// With `normalized`, the count is divided by the embeddedness (0 when the
/// embeddedness is 0).
pub fn dispersion(g: &Graph, normalized: bool) -> Vec<f64> {
    g.edge_ids()
        .collect::<Vec<_>>()
        .par_iter()
        .map(|&e| edge_dispersion(g, e, normalized))
        .collect()
}

fn edge_dispersion(g: &Graph, e: EdgeId, normalized: bool) -> f64 {
    let common = g.common_neighbors(e);
    let mut count = 0usize;
    for (a, &s) in common.iter().enumerate() {
        for &t in &common[a + 1..] {
            if g.has_edge(s, t) {
                continue;
            }
            let bridged = common.iter().any(|&w| w != s && w != t && g.has_edge(w, s) && g.has_edge(w, t));
            if !bridged {
                count += 1;
            }
        }
    }
    if normalized {
        if common.is_empty() {
            0.0
        } else {
            count as f64 / common.len() as f64
        }
    } else {
        count as f64
    }
}

pub fn degree_column(g: &Graph) -> Vec<f64> {
    (0..g.vertex_count()).map(|v| g.degree(v) as f64).collect()
}

/// Local clustering coefficient; 0 for vertices of degree below 2.
pub fn clustering_coefficient(g: &Graph) -> Vec<f64> {
    (0..g.vertex_count())
        .map(|v| {
            let k = g.degree(v);
            if k < 2 {
                return 0.0;
            }
            let links: usize = g
                .neighbors(v)
                .iter()
                .map(|&a| crate::graph::sorted_intersection_count(g.neighbors(a), g.neighbors(v)))
                .sum::<usize>()
                / 2;
            2.0 * links as f64 / (k * (k - 1)) as f64
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(n: usize) -> Graph {
        Graph::from_simple_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
    }

    fn double_star(m: usize, m2: usize) -> Graph {
        let mut edges = vec![(0, 1)];
        edges.extend((0..m).map(|i| (0, 2 + i)));
        edges.extend((0..m2).map(|i| (1, 2 + m + i)));
        Graph::from_simple_edges(2 + m + m2, edges).unwrap()
    }

    #[test]
    fn bridge_of_double_star() {
        let g = double_star(3, 3);
        let eb = edge_betweenness(&g);
        assert_eq!(eb[g.find_edge(0, 1).unwrap().index()], 16.0);
    }

    #[test]
    fn cycle_and_triangle_edges() {
        let c4 = Graph::from_simple_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert!(edge_betweenness(&c4).iter().all(|&b| (b - 2.0).abs() < 1e-12));
        assert!(edge_betweenness(&complete(3)).iter().all(|&b| b == 1.0));
    }

    #[test]
    fn vertex_betweenness_examples() {
        let star = Graph::from_simple_edges(5, (1..5).map(|i| (0, i))).unwrap();
        assert_eq!(vertex_betweenness(&star)[0], 6.0);
        assert!(vertex_betweenness(&complete(6)).iter().all(|&b| b == 0.0));
        let p3 = Graph::from_simple_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(vertex_betweenness(&p3), vec![0.0, 1.0, 0.0]);
    }

    #[test]
    fn embeddedness_examples() {
        assert!(embeddedness(&complete(3)).iter().all(|&x| x == 1.0));
        assert!(embeddedness(&complete(5)).iter().all(|&x| x == 3.0));
        let tree = Graph::from_simple_edges(4, [(0, 1), (1, 2), (1, 3)]).unwrap();
        assert!(embeddedness(&tree).iter().all(|&x| x == 0.0));
    }

    #[test]
    fn dispersion_examples() {
        // |C| <= 1
        assert_eq!(dispersion(&complete(3), false), vec![0.0; 3]);
        // u=0, v=1, C={2,3}, s-t adjacent
        let k4 = complete(4);
        assert_eq!(dispersion(&k4, false)[k4.find_edge(0, 1).unwrap().index()], 0.0);
        // C={2,3} not adjacent, no other common neighbour
        let g = Graph::from_simple_edges(4, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)]).unwrap();
        let e = g.find_edge(0, 1).unwrap().index();
        assert_eq!(dispersion(&g, false)[e], 1.0);
        assert_eq!(dispersion(&g, true)[e], 0.5);
        // a third common neighbour adjacent to both s and t bridges them
        let g = Graph::from_simple_edges(5, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (0, 4), (1, 4), (4, 2), (4, 3)]).unwrap();
        let e = g.find_edge(0, 1).unwrap().index();
        assert_eq!(dispersion(&g, false)[e], 0.0);
    }

    #[test]
    fn clustering_examples() {
        assert_eq!(clustering_coefficient(&complete(3)), vec![1.0; 3]);
        let star = Graph::from_simple_edges(4, (1..4).map(|i| (0, i))).unwrap();
        assert_eq!(clustering_coefficient(&star)[0], 0.0);
        // K4 minus edge (2,3): vertex 0 has neighbours 1,2,3 with links 1-2, 1-3
        let g = Graph::from_simple_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        assert!((clustering_coefficient(&g)[0] - 2.0 / 3.0).abs() < 1e-15);
    }
}
