//! Side-by-side comparison of reported correlation tables with values
//! recomputed from generator ensembles and local network files.

mod reported;

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::analysis::{ensemble_correlate, network_correlate, round2, MetricPair};
use crate::error::{Error, Result};
use crate::generators::GeneratorSpec;
use crate::graph::Graph;
use crate::io::{parse_edge_list, read_edge_list};
use crate::ollivier::WalkKind;
use crate::table::Scope;

const ZACHARY: &str = include_str!("../../fixtures/zachary_karate.txt");

/// The bundled Zachary karate club network (34 vertices, 78 edges).
pub fn zachary_karate_club() -> Graph {
    let pairs = parse_edge_list(ZACHARY.as_bytes(), Path::new("zachary_karate.txt")).expect("bundled fixture parses");
    Graph::from_edge_list(&pairs).0
}

/// Directory holding the bundled fixtures in a source checkout.
pub fn default_fixture_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

#[derive(Debug, Clone, Copy, PartialEq)]
enum Source {
    Er { p: f64 },
    Ws { k: usize, beta: f64 },
    Ba { m: usize },
    Hgg { k: f64 },
    Fixture(&'static str),
}

#[derive(Debug, Clone, Copy)]
struct ReportedRow {
    label: &'static str,
    source: Source,
    values: &'static [f64],
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TableId {
    I,
    II,
    III,
    IV,
}

impl TableId {
    pub const ALL: [TableId; 4] = [TableId::I, TableId::II, TableId::III, TableId::IV];

    /// Column pairs in table order.
    pub fn pairs(self) -> Vec<MetricPair> {
        let cross = |scope, others: [&str; 3]| {
            ["OR", "FR", "AFR"]
                .into_iter()
                .flat_map(|c| others.map(|o| MetricPair::new(scope, c, o)))
                .collect()
        };
        match self {
            TableId::I => vec![MetricPair::new(Scope::Edge, "OR", "FR"), MetricPair::new(Scope::Edge, "OR", "AFR")],
            TableId::II => vec![MetricPair::new(Scope::Vertex, "OR", "FR"), MetricPair::new(Scope::Vertex, "OR", "AFR")],
            TableId::III => cross(Scope::Edge, ["EBC", "EMB", "DIS"]),
            TableId::IV => cross(Scope::Vertex, ["DEG", "BC", "CC"]),
        }
    }

    fn rows(self) -> &'static [ReportedRow] {
        match self {
            TableId::I => reported::TABLE_I,
            TableId::II => reported::TABLE_II,
            TableId::III => reported::TABLE_III,
            TableId::IV => reported::TABLE_IV,
        }
    }
}

impl fmt::Display for TableId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TableId::I => "I",
            TableId::II => "II",
            TableId::III => "III",
            TableId::IV => "IV",
        })
    }
}

impl FromStr for TableId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "I" | "1" => Ok(TableId::I),
            "II" | "2" => Ok(TableId::II),
            "III" | "3" => Ok(TableId::III),
            "IV" | "4" => Ok(TableId::IV),
            other => Err(Error::invalid("table", format!("expected I, II, III or IV, got `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ReproduceConfig {
    /// Ensemble size per model row.
    pub samples: usize,
    /// Base seed; sample `i` uses `seed + i`.
    pub seed: u64,
    pub walk: WalkKind,
    /// Vertex count of the model networks.
    pub n: usize,
    /// Directory searched for `<name>.txt` edge lists of the real networks.
    pub fixture_dir: PathBuf,
    pub include_models: bool,
    pub include_fixtures: bool,
}

impl Default for ReproduceConfig {
    fn default() -> Self {
        ReproduceConfig {
            samples: 100,
            seed: 0,
            walk: WalkKind::LAZY,
            n: 1000,
            fixture_dir: default_fixture_dir(),
            include_models: true,
            include_fixtures: true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReproCell {
    pub pair: String,
    pub reported: f64,
    pub computed: Option<f64>,
    pub samples: usize,
    pub excluded: usize,
}

impl ReproCell {
    pub fn abs_diff(&self) -> Option<f64> {
        self.computed.map(|c| (c - self.reported).abs())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReproRow {
    pub network: String,
    /// Generator spec (`key=value` form) or fixture path.
    pub source: String,
    pub cells: Vec<ReproCell>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReproReport {
    pub table: TableId,
    pub seed: u64,
    pub samples: usize,
    pub idleness: f64,
    pub rows: Vec<ReproRow>,
    /// Rows that could not be computed, with the reason.
    pub skipped: Vec<(String, String)>,
}

fn model_spec(source: Source, n: usize, seed: u64) -> Option<GeneratorSpec> {
    match source {
        Source::Er { p } => Some(GeneratorSpec::er(n, p, seed)),
        Source::Ws { k, beta } => Some(GeneratorSpec::ws(n, k, beta, seed)),
        Source::Ba { m } => Some(GeneratorSpec::ba(n, m, seed)),
        Source::Hgg { k } => Some(GeneratorSpec::hgg(n, k, 2.0, seed)),
        Source::Fixture(_) => None,
    }
}

fn load_fixture(dir: &Path, name: &str) -> Result<Option<(Graph, String)>> {
    let path = dir.join(format!("{name}.txt"));
    if path.is_file() {
        let (g, _) = read_edge_list(&path)?;
        return Ok(Some((g, path.display().to_string())));
    }
    if name == "zachary_karate" {
        return Ok(Some((zachary_karate_club(), "bundled:zachary_karate.txt".into())));
    }
    Ok(None)
}

/// Recomputes every available row of `table`. Model rows are ensemble means;
/// real-network rows are computed when `<fixture_dir>/<name>.txt` exists and
/// are otherwise listed in `skipped`.
pub fn reproduce_table(table: TableId, cfg: &ReproduceConfig) -> Result<ReproReport> {
    let pairs = table.pairs();
    let mut rows = Vec::new();
    let mut skipped = Vec::new();
    for row in table.rows() {
        let (network, source, report) = match row.source {
            Source::Fixture(name) => {
                if !cfg.include_fixtures {
                    continue;
                }
                match load_fixture(&cfg.fixture_dir, name)? {
                    Some((g, origin)) => (row.label.to_string(), origin, network_correlate(&g, row.label, &pairs, cfg.walk)?),
                    None => {
                        let path = cfg.fixture_dir.join(format!("{name}.txt"));
                        skipped.push((row.label.to_string(), format!("fixture {} not found", path.display())));
                        continue;
                    }
                }
            }
            source => {
                if !cfg.include_models {
                    continue;
                }
                let spec = model_spec(source, cfg.n, cfg.seed).expect("model row");
                let report = ensemble_correlate(&spec, cfg.samples, &pairs, cfg.walk)?;
                (spec.describe(), spec.to_kv(), report)
            }
        };
        let cells = pairs
            .iter()
            .zip(row.values)
            .zip(&report.pairs)
            .map(|((p, &reported), c)| ReproCell {
                pair: format!("{}~{}", p.a, p.b),
                reported,
                computed: c.spearman,
                samples: c.samples,
                excluded: c.excluded,
            })
            .collect();
        rows.push(ReproRow { network, source, cells });
    }
    Ok(ReproReport {
        table,
        seed: cfg.seed,
        samples: cfg.samples,
        idleness: cfg.walk.idleness(),
        rows,
        skipped,
    })
}

impl ReproReport {
    pub fn write_csv<W: std::io::Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["table", "network", "source", "pair", "reported", "computed", "abs_diff", "samples", "excluded"])?;
        let na = |v: Option<f64>| v.map_or("NA".to_string(), |x| x.to_string());
        for row in &self.rows {
            for c in &row.cells {
                w.write_record([
                    self.table.to_string(),
                    row.network.clone(),
                    row.source.clone(),
                    c.pair.clone(),
                    c.reported.to_string(),
                    na(c.computed),
                    na(c.abs_diff()),
                    c.samples.to_string(),
                    c.excluded.to_string(),
                ])?;
            }
        }
        w.flush().map_err(|e| Error::io("<table csv>", e))
    }

    /// Text table with two-decimal values: reported / computed / |diff| per pair.
    pub fn render(&self) -> String {
        let mut s = format!(
            "Table {} (Spearman; samples={}, seed={}, idleness={})\n",
            self.table, self.samples, self.seed, self.idleness
        );
        let width = self.rows.iter().map(|r| r.network.len()).max().unwrap_or(7).max(7);
        for row in &self.rows {
            s.push_str(&format!("{:<width$}", row.network));
            for c in &row.cells {
                let comp = c.computed.map_or("NA".to_string(), round2);
                let diff = c.abs_diff().map_or("NA".to_string(), round2);
                s.push_str(&format!("  {}: {} / {} / {}", c.pair, round2(c.reported), comp, diff));
            }
            s.push('\n');
        }
        for (name, why) in &self.skipped {
            s.push_str(&format!("skipped {name}: {why}\n"));
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tables_are_rectangular() {
        for t in TableId::ALL {
            let width = t.pairs().len();
            assert_eq!(t.rows().len(), 29);
            assert!(t.rows().iter().all(|r| r.values.len() == width), "table {t}");
        }
    }

    #[test]
    fn bundled_zachary() {
        let g = zachary_karate_club();
        assert_eq!((g.vertex_count(), g.edge_count()), (34, 78));
    }

    #[test]
    fn fixture_rows_only() {
        let cfg = ReproduceConfig {
            include_models: false,
            fixture_dir: PathBuf::from("/nonexistent"),
            ..ReproduceConfig::default()
        };
        let r = reproduce_table(TableId::I, &cfg).unwrap();
        assert_eq!(r.rows.len(), 1);
        assert_eq!(r.rows[0].network, "Zachary karate club");
        assert_eq!(r.skipped.len(), 16);
        let or_fr = r.rows[0].cells[0].computed.unwrap();
        assert!((or_fr - 0.75).abs() < 0.05, "{or_fr}");
    }

    #[test]
    fn table_names() {
        assert_eq!("iii".parse::<TableId>().unwrap(), TableId::III);
        assert!("V".parse::<TableId>().is_err());
    }
}
