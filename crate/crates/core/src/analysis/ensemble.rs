use rayon::prelude::*;

use super::correlation::{correlate_table, CorrelationReport, MetricPair, PairCorrelation};
use crate::error::{Error, Result};
use crate::generators::GeneratorSpec;
use crate::graph::Graph;
use crate::ollivier::WalkKind;
use crate::table::{compute_metrics, ComputeOptions, MetricSelection};

/// Columns needed to evaluate every pair.
pub fn selection_for(pairs: &[MetricPair]) -> Result<MetricSelection> {
    let mut sel = MetricSelection::none();
    for p in pairs {
        sel = sel.add_column(p.scope, &p.a)?.add_column(p.scope, &p.b)?;
    }
    Ok(sel)
}

/// Correlations on the largest connected component of one network.
pub fn network_correlate(g: &Graph, network: &str, pairs: &[MetricPair], walk: WalkKind) -> Result<CorrelationReport> {
    let lcc = g.largest_connected_component();
    let opts = ComputeOptions {
        walk,
        ..ComputeOptions::default()
    };
    let (table, _) = compute_metrics(&lcc, network, &selection_for(pairs)?, &opts)?;
    Ok(CorrelationReport {
        network: network.to_string(),
        seed: None,
        idleness: walk.idleness(),
        pairs: correlate_table(&table, pairs)?,
    })
}

/// Mean coefficients over `samples` networks drawn with seeds
/// `spec.seed + i`. Each sample is correlated on its own largest connected
/// component; samples with an undefined coefficient for a pair are left out
/// of that pair's mean and counted in `excluded`.
pub fn ensemble_correlate(spec: &GeneratorSpec, samples: usize, pairs: &[MetricPair], walk: WalkKind) -> Result<CorrelationReport> {
    if samples == 0 {
        return Err(Error::invalid("samples", "must be at least 1"));
    }
    spec.validate()?;
    let selection = selection_for(pairs)?;
    let opts = ComputeOptions {
        walk,
        ..ComputeOptions::default()
    };
    let per_sample: Vec<Vec<PairCorrelation>> = (0..samples as u64)
        .into_par_iter()
        .map(|i| {
            let g = spec.with_seed(spec.seed.wrapping_add(i)).generate()?;
            let lcc = g.largest_connected_component();
            let (table, _) = compute_metrics(&lcc, "sample", &selection, &opts)?;
            correlate_table(&table, pairs)
        })
        .collect::<Result<_>>()?;

    let pairs = pairs
        .iter()
        .enumerate()
        .map(|(k, p)| {
            let (mut sp, mut pe, mut size, mut used) = (0.0, 0.0, 0usize, 0usize);
            for sample in &per_sample {
                let c = &sample[k];
                if let (Some(s), Some(r)) = (c.spearman, c.pearson) {
                    sp += s;
                    pe += r;
                    size += c.sample_size;
                    used += 1;
                }
            }
            let avg = |x: f64| (used > 0).then(|| x / used as f64);
            PairCorrelation {
                scope: p.scope,
                a: p.a.clone(),
                b: p.b.clone(),
                pearson: avg(pe),
                spearman: avg(sp),
                sample_size: (size + used / 2).checked_div(used).unwrap_or(0),
                samples: used,
                excluded: samples - used,
            }
        })
        .collect();

    Ok(CorrelationReport {
        network: spec.describe(),
        seed: Some(spec.seed),
        idleness: walk.idleness(),
        pairs,
    })
}
