use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::table::{MetricTable, Scope};

fn check_columns(xs: &[f64], ys: &[f64], what: &'static str) -> Result<()> {
    if xs.len() != ys.len() {
        return Err(Error::Domain(format!("{what}: columns have lengths {} and {}", xs.len(), ys.len())));
    }
    if xs.len() < 2 {
        return Err(Error::UndefinedCorrelation("fewer than two observations"));
    }
    let constant = |c: &[f64]| c.iter().all(|&v| v == c[0]);
    if constant(xs) || constant(ys) {
        return Err(Error::UndefinedCorrelation("zero variance"));
    }
    Ok(())
}

fn mean(xs: &[f64]) -> f64 {
    xs.iter().sum::<f64>() / xs.len() as f64
}

/// Product-moment correlation coefficient.
pub fn pearson(xs: &[f64], ys: &[f64]) -> Result<f64> {
    check_columns(xs, ys, "pearson")?;
    let (mx, my) = (mean(xs), mean(ys));
    let (mut sxy, mut sxx, mut syy) = (0.0, 0.0, 0.0);
    for (&x, &y) in xs.iter().zip(ys) {
        let (dx, dy) = (x - mx, y - my);
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if sxx == 0.0 || syy == 0.0 {
        return Err(Error::UndefinedCorrelation("zero variance"));
    }
    Ok((sxy / (sxx * syy).sqrt()).clamp(-1.0, 1.0))
}

/// 1-based ranks; tied values share the mean of their positions.
pub fn average_ranks(xs: &[f64]) -> Vec<f64> {
    let mut order: Vec<usize> = (0..xs.len()).collect();
    order.sort_by(|&a, &b| xs[a].total_cmp(&xs[b]));
    let mut ranks = vec![0.0; xs.len()];
    let mut i = 0;
    while i < order.len() {
        let mut j = i + 1;
        while j < order.len() && xs[order[j]] == xs[order[i]] {
            j += 1;
        }
        // positions i..j hold ranks i+1..=j
        let r = (i + 1 + j) as f64 / 2.0;
        for &k in &order[i..j] {
            ranks[k] = r;
        }
        i = j;
    }
    ranks
}

/// Rank correlation: Pearson on average ranks.
pub fn spearman(xs: &[f64], ys: &[f64]) -> Result<f64> {
    check_columns(xs, ys, "spearman")?;
    pearson(&average_ranks(xs), &average_ranks(ys))
}

/// Two columns of the same scope to correlate.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MetricPair {
    pub scope: Scope,
    pub a: String,
    pub b: String,
}

impl MetricPair {
    pub fn new(scope: Scope, a: &str, b: &str) -> Self {
        MetricPair {
            scope,
            a: a.to_string(),
            b: b.to_string(),
        }
    }

    /// Curvature-vs-curvature pairs followed by each curvature against the
    /// classical metrics of the same scope.
    pub fn standard() -> Vec<MetricPair> {
        let mut out = vec![
            MetricPair::new(Scope::Edge, "OR", "FR"),
            MetricPair::new(Scope::Edge, "OR", "AFR"),
            MetricPair::new(Scope::Vertex, "OR", "FR"),
            MetricPair::new(Scope::Vertex, "OR", "AFR"),
        ];
        for c in ["OR", "FR", "AFR"] {
            for m in ["EBC", "EMB", "DIS"] {
                out.push(MetricPair::new(Scope::Edge, c, m));
            }
        }
        for c in ["OR", "FR", "AFR"] {
            for m in ["DEG", "BC", "CC"] {
                out.push(MetricPair::new(Scope::Vertex, c, m));
            }
        }
        out
    }
}

/// Coefficients for one pair. `None` marks an undefined coefficient.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PairCorrelation {
    pub scope: Scope,
    pub a: String,
    pub b: String,
    pub pearson: Option<f64>,
    pub spearman: Option<f64>,
    /// Column length; for ensembles, the mean column length over the
    /// samples that contributed.
    pub sample_size: usize,
    /// Networks that contributed to the coefficients.
    pub samples: usize,
    /// Networks left out because a coefficient was undefined.
    pub excluded: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CorrelationReport {
    pub network: String,
    pub seed: Option<u64>,
    pub idleness: f64,
    pub pairs: Vec<PairCorrelation>,
}

fn undefined_is_none(r: Result<f64>) -> Result<Option<f64>> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(Error::UndefinedCorrelation(_)) => Ok(None),
        Err(e) => Err(e),
    }
}

/// Correlates the requested columns of one table.
pub fn correlate_table(table: &MetricTable, pairs: &[MetricPair]) -> Result<Vec<PairCorrelation>> {
    pairs
        .iter()
        .map(|p| {
            let col = |name: &str| {
                table
                    .column(p.scope, name)
                    .ok_or_else(|| Error::invalid("pairs", format!("no {} column `{name}`", p.scope)))
            };
            let (xs, ys) = (col(&p.a)?, col(&p.b)?);
            let pearson = undefined_is_none(pearson(xs, ys))?;
            let spearman = undefined_is_none(spearman(xs, ys))?;
            let ok = pearson.is_some() && spearman.is_some();
            Ok(PairCorrelation {
                scope: p.scope,
                a: p.a.clone(),
                b: p.b.clone(),
                pearson,
                spearman,
                sample_size: xs.len(),
                samples: usize::from(ok),
                excluded: usize::from(!ok),
            })
        })
        .collect()
}

fn fmt_opt(v: Option<f64>, decimals: Option<usize>) -> String {
    match (v, decimals) {
        (None, _) => "NA".to_string(),
        (Some(x), Some(d)) => format!("{:.*}", d, x),
        (Some(x), None) => x.to_string(),
    }
}

/// Two-decimal rendering that avoids printing `-0.00`.
pub fn round2(x: f64) -> String {
    let s = format!("{x:.2}");
    if s == "-0.00" {
        "0.00".into()
    } else {
        s
    }
}

impl CorrelationReport {
    /// Full precision, one row per pair.
    pub fn write_csv<W: std::io::Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["network", "scope", "a", "b", "pearson", "spearman", "sample_size", "samples", "excluded"])?;
        for p in &self.pairs {
            w.write_record([
                self.network.clone(),
                p.scope.to_string(),
                p.a.clone(),
                p.b.clone(),
                fmt_opt(p.pearson, None),
                fmt_opt(p.spearman, None),
                p.sample_size.to_string(),
                p.samples.to_string(),
                p.excluded.to_string(),
            ])?;
        }
        w.flush().map_err(|e| Error::io("<correlation csv>", e))
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    /// Human-readable table, coefficients rounded to two decimals.
    pub fn render(&self) -> String {
        let mut s = format!("network: {}\n", self.network);
        s.push_str(&format!("{:<7} {:<12} {:>9} {:>9} {:>8}\n", "scope", "pair", "spearman", "pearson", "excluded"));
        for p in &self.pairs {
            let sp = p.spearman.map_or("NA".to_string(), round2);
            let pe = p.pearson.map_or("NA".to_string(), round2);
            s.push_str(&format!(
                "{:<7} {:<12} {:>9} {:>9} {:>8}\n",
                p.scope.to_string(),
                format!("{}~{}", p.a, p.b),
                sp,
                pe,
                p.excluded
            ));
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pearson_examples() {
        let xs = [1.0, 2.0, 3.0];
        assert!((pearson(&xs, &xs).unwrap() - 1.0).abs() < 1e-15);
        assert!((pearson(&xs, &[-1.0, -2.0, -3.0]).unwrap() + 1.0).abs() < 1e-15);
        assert!((pearson(&xs, &[6.0, 4.0, 5.0]).unwrap() + 0.5).abs() < 1e-15);
    }

    #[test]
    fn spearman_examples() {
        let r = spearman(&[1.0, 2.0, 3.0, 4.0], &[1.0, 3.0, 2.0, 4.0]).unwrap();
        assert!((r - 0.8).abs() < 1e-15);
        let xs = [0.3, -1.0, 2.5, 7.0];
        let ys: Vec<f64> = xs.iter().map(|x: &f64| x.exp()).collect();
        assert_eq!(spearman(&xs, &ys).unwrap(), 1.0);
        assert!(matches!(spearman(&xs, &[2.0; 4]), Err(Error::UndefinedCorrelation(_))));
        assert!(spearman(&[1.0], &[1.0]).is_err());
        assert!(matches!(pearson(&[1.0, 2.0], &[1.0]), Err(Error::Domain(_))));
    }

    #[test]
    fn tied_ranks_are_averaged() {
        assert_eq!(average_ranks(&[10.0, 20.0, 10.0, 30.0]), vec![1.5, 3.0, 1.5, 4.0]);
        assert_eq!(average_ranks(&[5.0, 5.0, 5.0]), vec![2.0; 3]);
    }

    #[test]
    fn rendering() {
        assert_eq!(round2(-0.001), "0.00");
        assert_eq!(round2(0.745), "0.74");
        let report = CorrelationReport {
            network: "x".into(),
            seed: None,
            idleness: 0.5,
            pairs: vec![PairCorrelation {
                scope: Scope::Edge,
                a: "OR".into(),
                b: "FR".into(),
                pearson: None,
                spearman: Some(0.5),
                sample_size: 3,
                samples: 0,
                excluded: 1,
            }],
        };
        let mut buf = Vec::new();
        report.write_csv(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.lines().nth(1).unwrap(), "x,edge,OR,FR,NA,0.5,3,0,1");
        assert!(report.render().contains("NA"));
    }
}
