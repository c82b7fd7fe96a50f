//! Per-network metric columns and their CSV export, plus the driver that
//! fills a table from a graph.

use std::fmt;
use std::path::Path;
use std::str::FromStr;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::curvature::vertex_curvature;
use crate::error::{Error, Result};
use crate::forman::{augmented_forman_edge, forman_edge};
use crate::graph::Graph;
use crate::metrics;
use crate::ollivier::{ollivier_edge_local, WalkKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Scope {
    Edge,
    Vertex,
}

impl fmt::Display for Scope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Scope::Edge => "edge",
            Scope::Vertex => "vertex",
        })
    }
}

/// Named metric columns for one network, one value per edge and per vertex.
#[derive(Debug, Clone, PartialEq)]
pub struct MetricTable {
    pub network: String,
    edge_labels: Vec<(u64, u64)>,
    vertex_labels: Vec<u64>,
    edge_columns: Vec<(String, Vec<f64>)>,
    vertex_columns: Vec<(String, Vec<f64>)>,
}

impl MetricTable {
    pub fn new(network: impl Into<String>, g: &Graph) -> Self {
        MetricTable {
            network: network.into(),
            edge_labels: g.edges().iter().map(|&(u, v)| (g.label(u), g.label(v))).collect(),
            vertex_labels: g.labels().to_vec(),
            edge_columns: Vec::new(),
            vertex_columns: Vec::new(),
        }
    }

    pub fn edge_count(&self) -> usize {
        self.edge_labels.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_labels.len()
    }

    fn insert(columns: &mut Vec<(String, Vec<f64>)>, expected: usize, name: &str, values: Vec<f64>) -> Result<()> {
        if values.len() != expected {
            return Err(Error::Domain(format!("column `{name}` has {} values, expected {expected}", values.len())));
        }
        if columns.iter().any(|(n, _)| n == name) {
            return Err(Error::Domain(format!("duplicate column `{name}`")));
        }
        if let Some(v) = values.iter().find(|v| !v.is_finite()) {
            return Err(Error::Domain(format!("column `{name}` contains non-finite value {v}")));
        }
        columns.push((name.to_string(), values));
        Ok(())
    }

    pub fn add_column(&mut self, scope: Scope, name: &str, values: Vec<f64>) -> Result<()> {
        match scope {
            Scope::Edge => Self::insert(&mut self.edge_columns, self.edge_labels.len(), name, values),
            Scope::Vertex => Self::insert(&mut self.vertex_columns, self.vertex_labels.len(), name, values),
        }
    }

    pub fn column(&self, scope: Scope, name: &str) -> Option<&[f64]> {
        let cols = match scope {
            Scope::Edge => &self.edge_columns,
            Scope::Vertex => &self.vertex_columns,
        };
        cols.iter().find(|(n, _)| n == name).map(|(_, v)| v.as_slice())
    }

    pub fn column_names(&self, scope: Scope) -> Vec<&str> {
        let cols = match scope {
            Scope::Edge => &self.edge_columns,
            Scope::Vertex => &self.vertex_columns,
        };
        cols.iter().map(|(n, _)| n.as_str()).collect()
    }

    /// `u,v,<metrics...>` with original vertex labels.
    pub fn write_edge_csv<W: std::io::Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        let mut header = vec!["u".to_string(), "v".to_string()];
        header.extend(self.edge_columns.iter().map(|(n, _)| n.clone()));
        w.write_record(&header)?;
        for (i, &(u, v)) in self.edge_labels.iter().enumerate() {
            let mut row = vec![u.to_string(), v.to_string()];
            row.extend(self.edge_columns.iter().map(|(_, c)| c[i].to_string()));
            w.write_record(&row)?;
        }
        w.flush().map_err(|e| Error::io("<edge csv>", e))
    }

    /// `vertex,<metrics...>` with original vertex labels.
    pub fn write_vertex_csv<W: std::io::Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        let mut header = vec!["vertex".to_string()];
        header.extend(self.vertex_columns.iter().map(|(n, _)| n.clone()));
        w.write_record(&header)?;
        for (i, &v) in self.vertex_labels.iter().enumerate() {
            let mut row = vec![v.to_string()];
            row.extend(self.vertex_columns.iter().map(|(_, c)| c[i].to_string()));
            w.write_record(&row)?;
        }
        w.flush().map_err(|e| Error::io("<vertex csv>", e))
    }

    /// Writes `<dir>/<network>_edges.csv` and `<dir>/<network>_vertices.csv`.
    pub fn write_csv_files(&self, dir: &Path) -> Result<(std::path::PathBuf, std::path::PathBuf)> {
        let edge_path = dir.join(format!("{}_edges.csv", self.network));
        let vertex_path = dir.join(format!("{}_vertices.csv", self.network));
        let f = std::fs::File::create(&edge_path).map_err(|e| Error::io(&edge_path, e))?;
        self.write_edge_csv(std::io::BufWriter::new(f))?;
        let f = std::fs::File::create(&vertex_path).map_err(|e| Error::io(&vertex_path, e))?;
        self.write_vertex_csv(std::io::BufWriter::new(f))?;
        Ok((edge_path, vertex_path))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum EdgeMetric {
    Ollivier,
    Forman,
    AugmentedForman,
    EdgeBetweenness,
    Embeddedness,
    Dispersion,
}

impl EdgeMetric {
    pub const ALL: [EdgeMetric; 6] = [
        EdgeMetric::Ollivier,
        EdgeMetric::Forman,
        EdgeMetric::AugmentedForman,
        EdgeMetric::EdgeBetweenness,
        EdgeMetric::Embeddedness,
        EdgeMetric::Dispersion,
    ];

    pub fn column(self) -> &'static str {
        match self {
            EdgeMetric::Ollivier => "OR",
            EdgeMetric::Forman => "FR",
            EdgeMetric::AugmentedForman => "AFR",
            EdgeMetric::EdgeBetweenness => "EBC",
            EdgeMetric::Embeddedness => "EMB",
            EdgeMetric::Dispersion => "DIS",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum VertexMetric {
    Ollivier,
    Forman,
    AugmentedForman,
    Degree,
    Betweenness,
    Clustering,
}

impl VertexMetric {
    pub const ALL: [VertexMetric; 6] = [
        VertexMetric::Ollivier,
        VertexMetric::Forman,
        VertexMetric::AugmentedForman,
        VertexMetric::Degree,
        VertexMetric::Betweenness,
        VertexMetric::Clustering,
    ];

    pub fn column(self) -> &'static str {
        match self {
            VertexMetric::Ollivier => "OR",
            VertexMetric::Forman => "FR",
            VertexMetric::AugmentedForman => "AFR",
            VertexMetric::Degree => "DEG",
            VertexMetric::Betweenness => "BC",
            VertexMetric::Clustering => "CC",
        }
    }
}

/// Which columns to compute.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MetricSelection {
    pub edge: Vec<EdgeMetric>,
    pub vertex: Vec<VertexMetric>,
}

impl Default for MetricSelection {
    fn default() -> Self {
        MetricSelection {
            edge: EdgeMetric::ALL.to_vec(),
            vertex: VertexMetric::ALL.to_vec(),
        }
    }
}

impl MetricSelection {
    pub fn none() -> Self {
        MetricSelection {
            edge: Vec::new(),
            vertex: Vec::new(),
        }
    }

    pub fn with_edge(mut self, m: EdgeMetric) -> Self {
        if !self.edge.contains(&m) {
            self.edge.push(m);
        }
        self
    }

    pub fn with_vertex(mut self, m: VertexMetric) -> Self {
        if !self.vertex.contains(&m) {
            self.vertex.push(m);
        }
        self
    }

    /// Resolves a column name in `scope` (`OR`, `EBC`, `CC`, ...).
    pub fn add_column(self, scope: Scope, name: &str) -> Result<Self> {
        match scope {
            Scope::Edge => EdgeMetric::ALL
                .into_iter()
                .find(|m| m.column().eq_ignore_ascii_case(name))
                .map(|m| self.clone().with_edge(m)),
            Scope::Vertex => VertexMetric::ALL
                .into_iter()
                .find(|m| m.column().eq_ignore_ascii_case(name))
                .map(|m| self.clone().with_vertex(m)),
        }
        .ok_or_else(|| Error::invalid("metrics", format!("unknown {scope} metric `{name}`")))
    }
}

impl FromStr for MetricSelection {
    type Err = Error;

    /// Comma-separated names. Curvatures (`or`, `fr`, `afr`) select both the
    /// edge and the vertex column; the rest belong to one scope.
    fn from_str(s: &str) -> Result<Self> {
        let mut sel = MetricSelection::none();
        for name in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            sel = match name.to_ascii_lowercase().as_str() {
                "or" => sel.with_edge(EdgeMetric::Ollivier).with_vertex(VertexMetric::Ollivier),
                "fr" => sel.with_edge(EdgeMetric::Forman).with_vertex(VertexMetric::Forman),
                "afr" => sel.with_edge(EdgeMetric::AugmentedForman).with_vertex(VertexMetric::AugmentedForman),
                "ebc" => sel.with_edge(EdgeMetric::EdgeBetweenness),
                "emb" => sel.with_edge(EdgeMetric::Embeddedness),
                "dis" => sel.with_edge(EdgeMetric::Dispersion),
                "deg" | "degree" => sel.with_vertex(VertexMetric::Degree),
                "bc" => sel.with_vertex(VertexMetric::Betweenness),
                "cc" => sel.with_vertex(VertexMetric::Clustering),
                "all" => MetricSelection::default(),
                other => return Err(Error::invalid("metrics", format!("unknown metric `{other}`"))),
            };
        }
        if sel.edge.is_empty() && sel.vertex.is_empty() {
            return Err(Error::invalid("metrics", "no metrics selected"));
        }
        Ok(sel)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComputeOptions {
    pub walk: WalkKind,
    pub normalized_dispersion: bool,
}

impl Default for ComputeOptions {
    fn default() -> Self {
        ComputeOptions {
            walk: WalkKind::LAZY,
            normalized_dispersion: false,
        }
    }
}

/// Wall-clock time spent per computed quantity.
pub type Timings = Vec<(String, Duration)>;

/// Computes the selected columns on `g` as given (no component extraction).
pub fn compute_metrics(g: &Graph, network: &str, selection: &MetricSelection, opts: &ComputeOptions) -> Result<(MetricTable, Timings)> {
    let mut table = MetricTable::new(network, g);
    let mut timings = Timings::new();
    let mut timed = |label: &str, f: &mut dyn FnMut() -> Result<Vec<f64>>| -> Result<Vec<f64>> {
        let start = Instant::now();
        let out = f()?;
        timings.push((label.to_string(), start.elapsed()));
        Ok(out)
    };

    let wants_e = |m| selection.edge.contains(&m);
    let wants_v = |m| selection.vertex.contains(&m);

    let or = if wants_e(EdgeMetric::Ollivier) || wants_v(VertexMetric::Ollivier) {
        Some(timed("OR", &mut || Ok(ollivier_edge_local(g, opts.walk)?.values))?)
    } else {
        None
    };
    let fr = if wants_e(EdgeMetric::Forman) || wants_v(VertexMetric::Forman) {
        Some(timed("FR", &mut || Ok(forman_edge(g).values))?)
    } else {
        None
    };
    let afr = if wants_e(EdgeMetric::AugmentedForman) || wants_v(VertexMetric::AugmentedForman) {
        Some(timed("AFR", &mut || Ok(augmented_forman_edge(g).values))?)
    } else {
        None
    };
    let btw = if wants_e(EdgeMetric::EdgeBetweenness) || wants_v(VertexMetric::Betweenness) {
        let mut vertex = Vec::new();
        let edge = timed("EBC+BC", &mut || {
            let b = metrics::betweenness(g);
            vertex = b.vertex;
            Ok(b.edge)
        })?;
        Some((edge, vertex))
    } else {
        None
    };

    let scalar = |values: &Vec<f64>, kind| -> Result<Vec<f64>> {
        let ev = crate::curvature::EdgeCurvatureVector::new(kind, values.clone());
        Ok(vertex_curvature(g, &ev)?.values)
    };

    for &m in &selection.edge {
        let values = match m {
            EdgeMetric::Ollivier => or.clone().unwrap(),
            EdgeMetric::Forman => fr.clone().unwrap(),
            EdgeMetric::AugmentedForman => afr.clone().unwrap(),
            EdgeMetric::EdgeBetweenness => btw.as_ref().unwrap().0.clone(),
            EdgeMetric::Embeddedness => timed("EMB", &mut || Ok(metrics::embeddedness(g)))?,
            EdgeMetric::Dispersion => timed("DIS", &mut || Ok(metrics::dispersion(g, opts.normalized_dispersion)))?,
        };
        table.add_column(Scope::Edge, m.column(), values)?;
    }
    for &m in &selection.vertex {
        use crate::curvature::CurvatureKind as K;
        let values = match m {
            VertexMetric::Ollivier => scalar(or.as_ref().unwrap(), K::Ollivier)?,
            VertexMetric::Forman => scalar(fr.as_ref().unwrap(), K::Forman)?,
            VertexMetric::AugmentedForman => scalar(afr.as_ref().unwrap(), K::AugmentedForman)?,
            VertexMetric::Degree => metrics::degree_column(g),
            VertexMetric::Betweenness => btw.as_ref().unwrap().1.clone(),
            VertexMetric::Clustering => timed("CC", &mut || Ok(metrics::clustering_coefficient(g)))?,
        };
        table.add_column(Scope::Vertex, m.column(), values)?;
    }
    Ok((table, timings))
}
