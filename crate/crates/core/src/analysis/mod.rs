//! Correlation of metric columns, seed-ensemble averaging, communication
//! efficiency and removal experiments.

mod correlation;
mod efficiency;
mod ensemble;
mod robustness;

pub use correlation::{
    average_ranks, correlate_table, pearson, round2, spearman, CorrelationReport, MetricPair, PairCorrelation,
};
pub use efficiency::{communication_efficiency, communication_efficiency_with, inverse_distance_sum, EfficiencyNorm};
pub use ensemble::{ensemble_correlate, network_correlate, selection_for};
pub use robustness::{
    mean_curve, removal_experiment, removal_order, write_curves_csv, CurvePoint, RemovalCurve, RemovalOptions,
    Strategy, Target,
};
