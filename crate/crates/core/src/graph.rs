//! Immutable undirected simple graph with CSR adjacency and stable edge ids.
//!
//! Vertices are dense ids `0..n`. Every vertex also carries its original
//! label (the id it had in the source file) so reports can print source ids.
//! Edges are stored once as `(u, v)` with `u < v`, sorted lexicographically;
//! the position in that table is the [`EdgeId`].

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::error::{Error, Result};

/// Index into a graph's edge table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeId(pub usize);

impl EdgeId {
    #[inline]
    pub fn index(self) -> usize {
        self.0
    }
}

/// Entries dropped while building a graph from a raw pair list.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct LoadReport {
    pub duplicates: usize,
    pub self_loops: usize,
}

impl LoadReport {
    pub fn discarded(&self) -> usize {
        self.duplicates + self.self_loops
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Graph {
    edges: Vec<(usize, usize)>,
    offsets: Vec<usize>,
    targets: Vec<usize>,
    incident: Vec<EdgeId>,
    vertex_weight: Vec<f64>,
    edge_weight: Vec<f64>,
    labels: Vec<u64>,
}

impl Graph {
    /// Graph on `n` isolated vertices.
    pub fn empty(n: usize) -> Self {
        Self::build(n, Vec::new(), (0..n as u64).collect())
    }

    /// Builds a graph on vertices `0..n` from a list of distinct undirected
    /// edges. Self-loops, duplicates and out-of-range endpoints are rejected.
    pub fn from_simple_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut canon: Vec<(usize, usize)> = Vec::new();
        for (a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::Domain(format!("edge ({a}, {b}) out of range for {n} vertices")));
            }
            if a == b {
                return Err(Error::Domain(format!("self-loop at vertex {a}")));
            }
            canon.push((a.min(b), a.max(b)));
        }
        canon.sort_unstable();
        if let Some(w) = canon.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::Domain(format!("duplicate edge ({}, {})", w[0].0, w[0].1)));
        }
        Ok(Self::build(n, canon, (0..n as u64).collect()))
    }

    /// Builds a graph from raw labelled pairs. Self-loops and repeated pairs
    /// (in either orientation) are dropped and counted. Every label that
    /// appears anywhere, including only in a self-loop, becomes a vertex;
    /// labels are relabelled to `0..n` in increasing label order.
    pub fn from_edge_list(pairs: &[(u64, u64)]) -> (Self, LoadReport) {
        let labels: Vec<u64> = pairs
            .iter()
            .flat_map(|&(a, b)| [a, b])
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let index: BTreeMap<u64, usize> = labels.iter().enumerate().map(|(i, &l)| (l, i)).collect();

        let mut report = LoadReport::default();
        let mut canon = Vec::with_capacity(pairs.len());
        for &(a, b) in pairs {
            if a == b {
                report.self_loops += 1;
                continue;
            }
            let (u, v) = (index[&a], index[&b]);
            canon.push((u.min(v), u.max(v)));
        }
        canon.sort_unstable();
        let before = canon.len();
        canon.dedup();
        report.duplicates = before - canon.len();

        (Self::build(labels.len(), canon, labels), report)
    }

    fn build(n: usize, edges: Vec<(usize, usize)>, labels: Vec<u64>) -> Self {
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        let mut degree = vec![0usize; n];
        for &(u, v) in &edges {
            degree[u] += 1;
            degree[v] += 1;
        }
        let mut offsets = Vec::with_capacity(n + 1);
        offsets.push(0);
        for d in &degree {
            offsets.push(offsets.last().unwrap() + d);
        }
        let mut cursor = offsets[..n].to_vec();
        let mut targets = vec![0usize; offsets[n]];
        let mut incident = vec![EdgeId(0); offsets[n]];
        // Edges are sorted, so each vertex receives its lower neighbours
        // (in increasing order) before its higher ones: lists come out sorted.
        for (i, &(u, v)) in edges.iter().enumerate() {
            targets[cursor[u]] = v;
            incident[cursor[u]] = EdgeId(i);
            cursor[u] += 1;
            targets[cursor[v]] = u;
            incident[cursor[v]] = EdgeId(i);
            cursor[v] += 1;
        }
        let m = edges.len();
        Graph {
            edges,
            offsets,
            targets,
            incident,
            vertex_weight: vec![1.0; n],
            edge_weight: vec![1.0; m],
            labels,
        }
    }

    /// Replaces vertex and edge weights. All weights must be finite and > 0.
    pub fn with_weights(mut self, vertex_weight: Vec<f64>, edge_weight: Vec<f64>) -> Result<Self> {
        if vertex_weight.len() != self.vertex_count() || edge_weight.len() != self.edge_count() {
            return Err(Error::Domain("weight vector length mismatch".into()));
        }
        if let Some(w) = vertex_weight.iter().chain(&edge_weight).find(|w| !(w.is_finite() && **w > 0.0)) {
            return Err(Error::Domain(format!("weights must be strictly positive, got {w}")));
        }
        self.vertex_weight = vertex_weight;
        self.edge_weight = edge_weight;
        Ok(self)
    }

    /// Replaces the original-label table.
    pub fn with_labels(mut self, labels: Vec<u64>) -> Result<Self> {
        if labels.len() != self.vertex_count() {
            return Err(Error::Domain("label vector length mismatch".into()));
        }
        self.labels = labels;
        Ok(self)
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.offsets.len() - 1
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertex_count() == 0
    }

    /// Canonical edge table, `u < v`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    #[inline]
    pub fn endpoints(&self, e: EdgeId) -> (usize, usize) {
        self.edges[e.0]
    }

    pub fn edge_ids(&self) -> impl ExactSizeIterator<Item = EdgeId> {
        (0..self.edge_count()).map(EdgeId)
    }

    /// Sorted neighbour list.
    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }

    /// Edge ids parallel to [`Graph::neighbors`].
    #[inline]
    pub fn incident_edges(&self, v: usize) -> &[EdgeId] {
        &self.incident[self.offsets[v]..self.offsets[v + 1]]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn find_edge(&self, u: usize, v: usize) -> Option<EdgeId> {
        let nbrs = self.neighbors(u);
        nbrs.binary_search(&v).ok().map(|k| self.incident_edges(u)[k])
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.neighbors(u).binary_search(&v).is_ok()
    }

    #[inline]
    pub fn vertex_weight(&self, v: usize) -> f64 {
        self.vertex_weight[v]
    }

    #[inline]
    pub fn edge_weight(&self, e: EdgeId) -> f64 {
        self.edge_weight[e.0]
    }

    pub fn is_unit_weighted(&self) -> bool {
        self.vertex_weight.iter().chain(&self.edge_weight).all(|&w| w == 1.0)
    }

    #[inline]
    pub fn label(&self, v: usize) -> u64 {
        self.labels[v]
    }

    pub fn labels(&self) -> &[u64] {
        &self.labels
    }

    /// Component id per vertex (numbered in order of smallest member) and
    /// the number of components.
    pub fn components(&self) -> (Vec<usize>, usize) {
        let n = self.vertex_count();
        let mut comp = vec![usize::MAX; n];
        let mut count = 0;
        let mut queue = VecDeque::new();
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = count;
            queue.push_back(s);
            while let Some(x) = queue.pop_front() {
                for &y in self.neighbors(x) {
                    if comp[y] == usize::MAX {
                        comp[y] = count;
                        queue.push_back(y);
                    }
                }
            }
            count += 1;
        }
        (comp, count)
    }

    pub fn is_connected(&self) -> bool {
        self.components().1 <= 1
    }

    /// Induced subgraph on the largest connected component. Ties go to the
    /// component holding the smallest vertex id.
    pub fn largest_connected_component(&self) -> Graph {
        let (comp, count) = self.components();
        if count <= 1 {
            return self.clone();
        }
        let mut sizes = vec![0usize; count];
        for &c in &comp {
            sizes[c] += 1;
        }
        // Components are numbered by smallest member, so the first maximum wins the tie.
        let best = (0..count).fold(0, |b, c| if sizes[c] > sizes[b] { c } else { b });
        let keep: Vec<usize> = (0..self.vertex_count()).filter(|&v| comp[v] == best).collect();
        self.induced_subgraph(&keep)
    }

    /// Induced subgraph on `keep` (must be strictly increasing). Weights and
    /// original labels carry over.
    pub fn induced_subgraph(&self, keep: &[usize]) -> Graph {
        debug_assert!(keep.windows(2).all(|w| w[0] < w[1]));
        let mut new_id = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in keep.iter().enumerate() {
            new_id[v] = i;
        }
        let mut kept_edges = Vec::new();
        let mut edge_weight = Vec::new();
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            if new_id[u] != usize::MAX && new_id[v] != usize::MAX {
                kept_edges.push((new_id[u], new_id[v]));
                edge_weight.push(self.edge_weight[i]);
            }
        }
        let labels = keep.iter().map(|&v| self.labels[v]).collect();
        let mut g = Graph::build(keep.len(), kept_edges, labels);
        g.vertex_weight = keep.iter().map(|&v| self.vertex_weight[v]).collect();
        g.edge_weight = edge_weight;
        g
    }

    /// Same vertex set, only the edges for which `keep` returns true.
    pub fn edge_subgraph(&self, mut keep: impl FnMut(EdgeId) -> bool) -> Graph {
        let mut kept = Vec::new();
        let mut edge_weight = Vec::new();
        for e in self.edge_ids() {
            if keep(e) {
                kept.push(self.edges[e.0]);
                edge_weight.push(self.edge_weight[e.0]);
            }
        }
        let mut g = Graph::build(self.vertex_count(), kept, self.labels.clone());
        g.vertex_weight = self.vertex_weight.clone();
        g.edge_weight = edge_weight;
        g
    }

    /// Number of common neighbours of the endpoints of `e`.
    pub fn triangles_through_edge(&self, e: EdgeId) -> usize {
        let (u, v) = self.endpoints(e);
        sorted_intersection_count(self.neighbors(u), self.neighbors(v))
    }

    /// Common neighbours of the endpoints of `e`, sorted.
    pub fn common_neighbors(&self, e: EdgeId) -> Vec<usize> {
        let (u, v) = self.endpoints(e);
        let (a, b) = (self.neighbors(u), self.neighbors(v));
        let (mut i, mut j) = (0, 0);
        let mut out = Vec::new();
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    out.push(a[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        out
    }

    /// Hop distances from `source` to every vertex within `cutoff` hops (all
    /// reachable vertices when `cutoff` is `None`).
    pub fn bfs_distances(&self, source: usize, cutoff: Option<usize>) -> BTreeMap<usize, usize> {
        let mut dist = BTreeMap::new();
        let mut queue = VecDeque::new();
        dist.insert(source, 0);
        queue.push_back(source);
        while let Some(x) = queue.pop_front() {
            let d = dist[&x];
            if cutoff.is_some_and(|c| d >= c) {
                continue;
            }
            for &y in self.neighbors(x) {
                if let std::collections::btree_map::Entry::Vacant(slot) = dist.entry(y) {
                    slot.insert(d + 1);
                    queue.push_back(y);
                }
            }
        }
        dist
    }
}

pub(crate) fn sorted_intersection_count(a: &[usize], b: &[usize]) -> usize {
    let (mut i, mut j, mut count) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                count += 1;
                i += 1;
                j += 1;
            }
        }
    }
    count
}

/// Reusable BFS state for hot loops: stamped visit marks avoid clearing an
/// `n`-sized array per search.
#[derive(Debug, Clone)]
pub(crate) struct BfsScratch {
    dist: Vec<u32>,
    seen: Vec<u32>,
    epoch: u32,
    queue: VecDeque<usize>,
}

impl BfsScratch {
    pub(crate) fn new(n: usize) -> Self {
        BfsScratch {
            dist: vec![0; n],
            seen: vec![0; n],
            epoch: 0,
            queue: VecDeque::new(),
        }
    }

    fn next_epoch(&mut self) {
        self.epoch = self.epoch.wrapping_add(1);
        if self.epoch == 0 {
            self.seen.iter_mut().for_each(|s| *s = 0);
            self.epoch = 1;
        }
    }

    /// Row-major distances from `rows` to `cols`, exact up to 2 and reported
    /// as 3 beyond. Exact whenever every pair is at distance at most 3.
    pub(crate) fn near_distances(&mut self, g: &Graph, rows: &[usize], cols: &[usize], out: &mut Vec<f64>) {
        out.clear();
        for &a in rows {
            self.next_epoch();
            let epoch = self.epoch;
            self.seen[a] = epoch;
            self.dist[a] = 0;
            for &w in g.neighbors(a) {
                self.seen[w] = epoch;
                self.dist[w] = 1;
            }
            for &w in g.neighbors(a) {
                for &z in g.neighbors(w) {
                    if self.seen[z] != epoch {
                        self.seen[z] = epoch;
                        self.dist[z] = 2;
                    }
                }
            }
            out.extend(cols.iter().map(|&b| if self.seen[b] == epoch { self.dist[b] as f64 } else { 3.0 }));
        }
    }

    /// Runs a BFS from `source` and writes the hop distance of each `targets[k]`
    /// into `out[k]` (`None` if unreachable). Stops once every target is found.
    pub(crate) fn distances_to(&mut self, g: &Graph, source: usize, targets: &[usize], out: &mut [Option<u32>]) {
        debug_assert_eq!(targets.len(), out.len());
        self.next_epoch();
        let epoch = self.epoch;
        out.iter_mut().for_each(|o| *o = None);

        let mut remaining = targets.len();
        let mut settle = |dist: &[u32], seen: &[u32], out: &mut [Option<u32>]| {
            for (k, &t) in targets.iter().enumerate() {
                if out[k].is_none() && seen[t] == epoch {
                    out[k] = Some(dist[t]);
                    remaining -= 1;
                }
            }
            remaining
        };

        self.queue.clear();
        self.seen[source] = epoch;
        self.dist[source] = 0;
        self.queue.push_back(source);
        let mut level = 0u32;
        let mut left = settle(&self.dist, &self.seen, out);
        while left > 0 {
            let Some(x) = self.queue.pop_front() else { break };
            let d = self.dist[x];
            if d > level {
                // all vertices at distance <= d are discovered by now
                level = d;
                left = settle(&self.dist, &self.seen, out);
                if left == 0 {
                    break;
                }
            }
            for &y in g.neighbors(x) {
                if self.seen[y] != epoch {
                    self.seen[y] = epoch;
                    self.dist[y] = d + 1;
                    self.queue.push_back(y);
                }
            }
        }
        if left > 0 {
            settle(&self.dist, &self.seen, out);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pairs(list: &[(u64, u64)]) -> Graph {
        Graph::from_edge_list(list).0
    }

    #[test]
    fn triangle_from_pairs() {
        let (g, report) = Graph::from_edge_list(&[(0, 1), (1, 2), (2, 0)]);
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 3);
        assert_eq!(report.discarded(), 0);
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (1, 2)]);
    }

    #[test]
    fn dedup_and_self_loops_counted() {
        let (g, report) = Graph::from_edge_list(&[(0, 1), (1, 0), (2, 2)]);
        assert_eq!(g.edges(), &[(0, 1)]);
        assert_eq!(report, LoadReport { duplicates: 1, self_loops: 1 });
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.degree(2), 0);
    }

    #[test]
    fn empty_input_is_empty_graph() {
        let (g, report) = Graph::from_edge_list(&[]);
        assert!(g.is_empty());
        assert_eq!(report.discarded(), 0);
        assert!(g.largest_connected_component().is_empty());
    }

    #[test]
    fn relabels_sparse_ids_and_keeps_labels() {
        let g = pairs(&[(10, 30), (30, 20)]);
        assert_eq!(g.labels(), &[10, 20, 30]);
        assert_eq!(g.edges(), &[(0, 2), (1, 2)]);
    }

    #[test]
    fn strict_constructor_rejects_bad_input() {
        assert!(Graph::from_simple_edges(3, [(0, 0)]).is_err());
        assert!(Graph::from_simple_edges(3, [(0, 1), (1, 0)]).is_err());
        assert!(Graph::from_simple_edges(2, [(0, 2)]).is_err());
    }

    #[test]
    fn lcc_tie_goes_to_component_of_vertex_zero() {
        let g = pairs(&[(3, 4), (4, 5), (5, 3), (0, 1), (1, 2), (2, 0)]);
        let lcc = g.largest_connected_component();
        assert_eq!(lcc.vertex_count(), 3);
        assert_eq!(lcc.labels(), &[0, 1, 2]);
    }

    #[test]
    fn lcc_of_path_plus_isolated_vertex() {
        let g = Graph::from_simple_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        let lcc = g.largest_connected_component();
        assert_eq!(lcc.vertex_count(), 5);
        assert_eq!(lcc.edge_count(), 4);
    }

    #[test]
    fn lcc_of_connected_graph_is_identity() {
        let g = pairs(&[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]);
        assert_eq!(g.largest_connected_component(), g);
    }

    #[test]
    fn lcc_keeps_original_labels() {
        let g = pairs(&[(7, 8), (100, 101), (101, 102)]);
        let lcc = g.largest_connected_component();
        assert_eq!(lcc.labels(), &[100, 101, 102]);
    }

    #[test]
    fn triangle_counts() {
        let k4 = Graph::from_simple_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert!(k4.edge_ids().all(|e| k4.triangles_through_edge(e) == 2));
        let tree = Graph::from_simple_edges(4, [(0, 1), (1, 2), (1, 3)]).unwrap();
        assert!(tree.edge_ids().all(|e| tree.triangles_through_edge(e) == 0));
        let tri = pairs(&[(0, 1), (1, 2), (2, 0)]);
        assert_eq!(tri.triangles_through_edge(tri.find_edge(0, 1).unwrap()), 1);
    }

    #[test]
    fn bfs_examples() {
        let p3 = Graph::from_simple_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(p3.bfs_distances(0, None), BTreeMap::from([(0, 0), (1, 1), (2, 2)]));
        let c4 = Graph::from_simple_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(c4.bfs_distances(0, None), BTreeMap::from([(0, 0), (1, 1), (3, 1), (2, 2)]));
        let two = Graph::from_simple_edges(4, [(0, 1), (2, 3)]).unwrap();
        let d = two.bfs_distances(0, None);
        assert!(!d.contains_key(&2) && !d.contains_key(&3));
        assert_eq!(p3.bfs_distances(0, Some(1)), BTreeMap::from([(0, 0), (1, 1)]));
    }

    #[test]
    fn scratch_bfs_matches_map_bfs() {
        let g = Graph::from_simple_edges(7, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (5, 6)]).unwrap();
        let mut scratch = BfsScratch::new(g.vertex_count());
        let targets = [0, 2, 3, 6];
        let mut out = [None; 4];
        for s in 0..7 {
            scratch.distances_to(&g, s, &targets, &mut out);
            let reference = g.bfs_distances(s, None);
            for (k, &t) in targets.iter().enumerate() {
                assert_eq!(out[k], reference.get(&t).map(|&d| d as u32), "s={s} t={t}");
            }
        }
    }

    #[test]
    fn weights_must_be_positive() {
        let g = pairs(&[(0, 1)]);
        assert!(g.clone().with_weights(vec![1.0, 0.0], vec![1.0]).is_err());
        assert!(g.clone().with_weights(vec![1.0, 1.0], vec![-2.0]).is_err());
        assert!(g.with_weights(vec![2.0, 1.0], vec![3.0]).is_ok());
    }
}
