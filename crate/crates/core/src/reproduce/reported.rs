//! Reported Spearman coefficients, one row per network, columns in table order.

use super::{ReportedRow, Source};

pub(super) const TABLE_I: &[ReportedRow] = &[
    ReportedRow { label: "ER n=1000 p=0.003", source: Source::Er { p: 0.003 }, values: &[0.89, 0.9] },
    ReportedRow { label: "ER n=1000 p=0.007", source: Source::Er { p: 0.007 }, values: &[0.39, 0.43] },
    ReportedRow { label: "ER n=1000 p=0.01", source: Source::Er { p: 0.01 }, values: &[-0.03, 0.04] },
    ReportedRow { label: "WS n=1000 k=2 beta=0.5", source: Source::Ws { k: 2, beta: 0.5 }, values: &[0.92, 0.92] },
    ReportedRow { label: "WS n=1000 k=8 beta=0.5", source: Source::Ws { k: 8, beta: 0.5 }, values: &[0.18, 0.7] },
    ReportedRow { label: "WS n=1000 k=10 beta=0.5", source: Source::Ws { k: 10, beta: 0.5 }, values: &[0.1, 0.69] },
    ReportedRow { label: "BA n=1000 m=2", source: Source::Ba { m: 2 }, values: &[0.74, 0.74] },
    ReportedRow { label: "BA n=1000 m=4", source: Source::Ba { m: 4 }, values: &[0.33, 0.36] },
    ReportedRow { label: "BA n=1000 m=5", source: Source::Ba { m: 5 }, values: &[0.13, 0.16] },
    ReportedRow { label: "HGG n=1000 k=3 gamma=2 T=0", source: Source::Hgg { k: 3.0 }, values: &[0.78, 0.66] },
    ReportedRow { label: "HGG n=1000 k=5 gamma=2 T=0", source: Source::Hgg { k: 5.0 }, values: &[0.82, 0.76] },
    ReportedRow { label: "HGG n=1000 k=10 gamma=2 T=0", source: Source::Hgg { k: 10.0 }, values: &[0.85, 0.87] },
    ReportedRow { label: "Autonomous systems", source: Source::Fixture("autonomous_systems"), values: &[0.43, 0.42] },
    ReportedRow { label: "PGP", source: Source::Fixture("pgp"), values: &[0.32, 0.83] },
    ReportedRow { label: "US Power Grid", source: Source::Fixture("us_power_grid"), values: &[0.6, 0.76] },
    ReportedRow { label: "Astrophysics co-authorship", source: Source::Fixture("astrophysics_coauthorship"), values: &[0.25, 0.7] },
    ReportedRow { label: "Chicago Road", source: Source::Fixture("chicago_road"), values: &[0.98, 0.98] },
    ReportedRow { label: "Yeast protein interactions", source: Source::Fixture("yeast_protein"), values: &[0.7, 0.74] },
    ReportedRow { label: "Euro Road", source: Source::Fixture("euro_road"), values: &[0.81, 0.88] },
    ReportedRow { label: "Human protein interactions", source: Source::Fixture("human_protein"), values: &[0.48, 0.52] },
    ReportedRow { label: "Hamsterster friendship", source: Source::Fixture("hamsterster_friendship"), values: &[0.23, 0.3] },
    ReportedRow { label: "Email communication", source: Source::Fixture("email_communication"), values: &[0.19, 0.53] },
    ReportedRow { label: "PDZ domain interactions", source: Source::Fixture("pdz_domain"), values: &[0.72, 0.71] },
    ReportedRow { label: "Adjective-Noun adjacency", source: Source::Fixture("adjective_noun"), values: &[0.15, 0.35] },
    ReportedRow { label: "Dolphin", source: Source::Fixture("dolphin"), values: &[0.07, 0.71] },
    ReportedRow { label: "Contiguous US States", source: Source::Fixture("contiguous_us_states"), values: &[0.68, 0.91] },
    ReportedRow { label: "Zachary karate club", source: Source::Fixture("zachary_karate"), values: &[0.75, 0.81] },
    ReportedRow { label: "Jazz musicians", source: Source::Fixture("jazz_musicians"), values: &[0.11, 0.9] },
    ReportedRow { label: "Zebra", source: Source::Fixture("zebra"), values: &[-0.04, 0.62] },
];

pub(super) const TABLE_II: &[ReportedRow] = &[
    ReportedRow { label: "ER n=1000 p=0.003", source: Source::Er { p: 0.003 }, values: &[0.97, 0.97] },
    ReportedRow { label: "ER n=1000 p=0.007", source: Source::Er { p: 0.007 }, values: &[0.97, 0.97] },
    ReportedRow { label: "ER n=1000 p=0.01", source: Source::Er { p: 0.01 }, values: &[0.96, 0.96] },
    ReportedRow { label: "WS n=1000 k=2 beta=0.5", source: Source::Ws { k: 2, beta: 0.5 }, values: &[0.9, 0.9] },
    ReportedRow { label: "WS n=1000 k=8 beta=0.5", source: Source::Ws { k: 8, beta: 0.5 }, values: &[0.8, 0.93] },
    ReportedRow { label: "WS n=1000 k=10 beta=0.5", source: Source::Ws { k: 10, beta: 0.5 }, values: &[0.77, 0.92] },
    ReportedRow { label: "BA n=1000 m=2", source: Source::Ba { m: 2 }, values: &[0.61, 0.61] },
    ReportedRow { label: "BA n=1000 m=4", source: Source::Ba { m: 4 }, values: &[0.59, 0.6] },
    ReportedRow { label: "BA n=1000 m=5", source: Source::Ba { m: 5 }, values: &[0.63, 0.64] },
    ReportedRow { label: "HGG n=1000 k=3 gamma=2 T=0", source: Source::Hgg { k: 3.0 }, values: &[0.48, 0.57] },
    ReportedRow { label: "HGG n=1000 k=5 gamma=2 T=0", source: Source::Hgg { k: 5.0 }, values: &[0.34, 0.41] },
    ReportedRow { label: "HGG n=1000 k=10 gamma=2 T=0", source: Source::Hgg { k: 10.0 }, values: &[0.09, 0.13] },
    ReportedRow { label: "Autonomous systems", source: Source::Fixture("autonomous_systems"), values: &[0.64, 0.64] },
    ReportedRow { label: "PGP", source: Source::Fixture("pgp"), values: &[0.37, 0.74] },
    ReportedRow { label: "US Power Grid", source: Source::Fixture("us_power_grid"), values: &[0.68, 0.82] },
    ReportedRow { label: "Astrophysics co-authorship", source: Source::Fixture("astrophysics_coauthorship"), values: &[0.43, 0.78] },
    ReportedRow { label: "Chicago Road", source: Source::Fixture("chicago_road"), values: &[0.96, 0.96] },
    ReportedRow { label: "Yeast protein interactions", source: Source::Fixture("yeast_protein"), values: &[0.85, 0.92] },
    ReportedRow { label: "Euro Road", source: Source::Fixture("euro_road"), values: &[0.9, 0.92] },
    ReportedRow { label: "Human protein interactions", source: Source::Fixture("human_protein"), values: &[0.83, 0.84] },
    ReportedRow { label: "Hamsterster friendship", source: Source::Fixture("hamsterster_friendship"), values: &[0.85, 0.86] },
    ReportedRow { label: "Email communication", source: Source::Fixture("email_communication"), values: &[0.79, 0.86] },
    ReportedRow { label: "PDZ domain interactions", source: Source::Fixture("pdz_domain"), values: &[0.91, 0.91] },
    ReportedRow { label: "Adjective-Noun adjacency", source: Source::Fixture("adjective_noun"), values: &[0.47, 0.5] },
    ReportedRow { label: "Dolphin", source: Source::Fixture("dolphin"), values: &[0.04, 0.49] },
    ReportedRow { label: "Contiguous US States", source: Source::Fixture("contiguous_us_states"), values: &[0.61, 0.89] },
    ReportedRow { label: "Zachary karate club", source: Source::Fixture("zachary_karate"), values: &[0.24, 0.7] },
    ReportedRow { label: "Jazz musicians", source: Source::Fixture("jazz_musicians"), values: &[-0.79, 0.01] },
    ReportedRow { label: "Zebra", source: Source::Fixture("zebra"), values: &[-0.72, 0.99] },
];

pub(super) const TABLE_III: &[ReportedRow] = &[
    ReportedRow { label: "ER n=1000 p=0.003", source: Source::Er { p: 0.003 }, values: &[-0.86, 0.08, 0.0, -0.81, -0.07, 0.0, -0.82, 0.04, 0.0] },
    ReportedRow { label: "ER n=1000 p=0.007", source: Source::Er { p: 0.007 }, values: &[-0.53, 0.25, 0.05, -0.8, -0.11, -0.03, -0.82, 0.06, 0.02] },
    ReportedRow { label: "ER n=1000 p=0.01", source: Source::Er { p: 0.01 }, values: &[-0.34, 0.32, 0.1, -0.76, -0.13, -0.05, -0.79, 0.07, 0.03] },
    ReportedRow { label: "WS n=1000 k=2 beta=0.5", source: Source::Ws { k: 2, beta: 0.5 }, values: &[-0.75, 0.0, 0.0, -0.57, 0.0, 0.0, -0.57, 0.0, 0.0] },
    ReportedRow { label: "WS n=1000 k=8 beta=0.5", source: Source::Ws { k: 8, beta: 0.5 }, values: &[-0.85, 0.79, 0.44, -0.52, -0.05, -0.08, -0.89, 0.68, 0.42] },
    ReportedRow { label: "WS n=1000 k=10 beta=0.5", source: Source::Ws { k: 10, beta: 0.5 }, values: &[-0.87, 0.82, 0.49, -0.45, -0.05, -0.07, -0.89, 0.73, 0.47] },
    ReportedRow { label: "BA n=1000 m=2", source: Source::Ba { m: 2 }, values: &[-0.73, -0.09, -0.11, -0.76, -0.3, -0.16, -0.77, -0.26, -0.15] },
    ReportedRow { label: "BA n=1000 m=4", source: Source::Ba { m: 4 }, values: &[-0.45, 0.18, 0.14, -0.83, -0.48, -0.35, -0.84, -0.43, -0.33] },
    ReportedRow { label: "BA n=1000 m=5", source: Source::Ba { m: 5 }, values: &[-0.3, 0.3, 0.25, -0.85, -0.54, -0.41, -0.86, -0.48, -0.39] },
    ReportedRow { label: "HGG n=1000 k=3 gamma=2 T=0", source: Source::Hgg { k: 3.0 }, values: &[-0.47, -0.3, -0.15, -0.67, -0.04, -0.18, -0.76, 0.27, -0.07] },
    ReportedRow { label: "HGG n=1000 k=5 gamma=2 T=0", source: Source::Hgg { k: 5.0 }, values: &[-0.62, -0.2, -0.13, -0.73, -0.08, -0.17, -0.81, 0.2, -0.1] },
    ReportedRow { label: "HGG n=1000 k=10 gamma=2 T=0", source: Source::Hgg { k: 10.0 }, values: &[-0.78, -0.03, -0.06, -0.79, -0.15, -0.12, -0.87, 0.14, -0.08] },
    ReportedRow { label: "Autonomous systems", source: Source::Fixture("autonomous_systems"), values: &[-0.17, -0.37, -0.25, -0.26, -0.44, -0.18, -0.27, -0.41, -0.16] },
    ReportedRow { label: "PGP", source: Source::Fixture("pgp"), values: &[-0.64, 0.2, -0.13, 0.11, -0.69, -0.17, -0.56, 0.21, -0.15] },
    ReportedRow { label: "US Power Grid", source: Source::Fixture("us_power_grid"), values: &[-0.61, 0.16, 0.06, -0.26, -0.41, -0.19, -0.45, 0.09, 0.04] },
    ReportedRow { label: "Astrophysics co-authorship", source: Source::Fixture("astrophysics_coauthorship"), values: &[-0.78, 0.47, -0.16, -0.23, -0.58, -0.23, -0.63, 0.07, -0.27] },
    ReportedRow { label: "Chicago Road", source: Source::Fixture("chicago_road"), values: &[-0.65, 0.0, 0.0, -0.65, 0.0, 0.0, -0.65, 0.0, 0.0] },
    ReportedRow { label: "Yeast protein interactions", source: Source::Fixture("yeast_protein"), values: &[-0.83, 0.06, -0.01, -0.52, -0.15, -0.13, -0.59, 0.14, 0.0] },
    ReportedRow { label: "Euro Road", source: Source::Fixture("euro_road"), values: &[-0.54, 0.05, 0.02, -0.4, -0.31, -0.07, -0.43, 0.0, 0.03] },
    ReportedRow { label: "Human protein interactions", source: Source::Fixture("human_protein"), values: &[-0.46, 0.07, 0.01, -0.38, -0.22, -0.19, -0.43, -0.07, -0.1] },
    ReportedRow { label: "Hamsterster friendship", source: Source::Fixture("hamsterster_friendship"), values: &[-0.53, 0.12, 0.0, -0.35, -0.61, -0.4, -0.42, -0.47, -0.32] },
    ReportedRow { label: "Email communication", source: Source::Fixture("email_communication"), values: &[-0.61, 0.55, 0.24, -0.32, -0.45, -0.41, -0.57, 0.01, -0.16] },
    ReportedRow { label: "PDZ domain interactions", source: Source::Fixture("pdz_domain"), values: &[-0.79, -0.04, 0.0, -0.55, -0.02, 0.0, -0.55, 0.06, 0.0] },
    ReportedRow { label: "Adjective-Noun adjacency", source: Source::Fixture("adjective_noun"), values: &[-0.51, 0.22, 0.09, -0.42, -0.72, -0.55, -0.57, -0.42, -0.37] },
    ReportedRow { label: "Dolphin", source: Source::Fixture("dolphin"), values: &[-0.66, 0.51, 0.28, 0.11, -0.58, -0.21, -0.61, 0.59, 0.31] },
    ReportedRow { label: "Contiguous US States", source: Source::Fixture("contiguous_us_states"), values: &[-0.68, -0.1, -0.15, -0.49, -0.72, -0.71, -0.64, -0.03, -0.08] },
    ReportedRow { label: "Zachary karate club", source: Source::Fixture("zachary_karate"), values: &[-0.79, 0.1, -0.06, -0.64, -0.29, -0.37, -0.8, 0.43, 0.14] },
    ReportedRow { label: "Jazz musicians", source: Source::Fixture("jazz_musicians"), values: &[-0.84, 0.57, -0.03, -0.22, -0.66, -0.18, -0.76, 0.47, -0.05] },
    ReportedRow { label: "Zebra", source: Source::Fixture("zebra"), values: &[-0.94, 0.52, 0.13, 0.04, -0.71, -0.15, -0.65, 0.97, 0.09] },
];

pub(super) const TABLE_IV: &[ReportedRow] = &[
    ReportedRow { label: "ER n=1000 p=0.003", source: Source::Er { p: 0.003 }, values: &[-0.94, -0.94, -0.07, -0.94, -0.94, -0.13, -0.94, -0.94, -0.08] },
    ReportedRow { label: "ER n=1000 p=0.007", source: Source::Er { p: 0.007 }, values: &[-0.98, -0.98, -0.18, -0.99, -0.98, -0.26, -0.99, -0.98, -0.21] },
    ReportedRow { label: "ER n=1000 p=0.01", source: Source::Er { p: 0.01 }, values: &[-0.98, -0.98, -0.16, -0.99, -0.98, -0.25, -0.99, -0.98, -0.21] },
    ReportedRow { label: "WS n=1000 k=2 beta=0.5", source: Source::Ws { k: 2, beta: 0.5 }, values: &[-0.71, -0.82, 0.0, -0.75, -0.73, 0.0, -0.75, -0.73, 0.0] },
    ReportedRow { label: "WS n=1000 k=8 beta=0.5", source: Source::Ws { k: 8, beta: 0.5 }, values: &[-0.81, -0.96, 0.51, -0.98, -0.91, 0.05, -0.91, -0.98, 0.38] },
    ReportedRow { label: "WS n=1000 k=10 beta=0.5", source: Source::Ws { k: 10, beta: 0.5 }, values: &[-0.79, -0.95, 0.57, -0.99, -0.91, 0.09, -0.92, -0.98, 0.41] },
    ReportedRow { label: "BA n=1000 m=2", source: Source::Ba { m: 2 }, values: &[-0.9, -0.9, -0.18, -0.59, -0.77, -0.39, -0.59, -0.78, -0.37] },
    ReportedRow { label: "BA n=1000 m=4", source: Source::Ba { m: 4 }, values: &[-0.94, -0.88, -0.08, -0.73, -0.84, -0.49, -0.73, -0.85, -0.45] },
    ReportedRow { label: "BA n=1000 m=5", source: Source::Ba { m: 5 }, values: &[-0.94, -0.9, -0.05, -0.78, -0.85, -0.4, -0.79, -0.86, -0.37] },
    ReportedRow { label: "HGG n=1000 k=3 gamma=2 T=0", source: Source::Hgg { k: 3.0 }, values: &[-0.28, -0.3, -0.14, -0.86, -0.6, -0.45, -0.79, -0.58, -0.37] },
    ReportedRow { label: "HGG n=1000 k=5 gamma=2 T=0", source: Source::Hgg { k: 5.0 }, values: &[-0.15, -0.17, -0.03, -0.89, -0.61, -0.21, -0.85, -0.6, -0.18] },
    ReportedRow { label: "HGG n=1000 k=10 gamma=2 T=0", source: Source::Hgg { k: 10.0 }, values: &[0.06, -0.06, 0.01, -0.93, -0.68, 0.31, -0.91, -0.66, 0.3] },
    ReportedRow { label: "Autonomous systems", source: Source::Fixture("autonomous_systems"), values: &[-0.85, -0.7, -0.39, -0.51, -0.38, -0.55, -0.5, -0.38, -0.55] },
    ReportedRow { label: "PGP", source: Source::Fixture("pgp"), values: &[-0.12, -0.49, 0.29, -0.73, -0.51, -0.51, -0.35, -0.46, -0.05] },
    ReportedRow { label: "US Power Grid", source: Source::Fixture("us_power_grid"), values: &[-0.68, -0.8, 0.03, -0.79, -0.62, -0.49, -0.69, -0.68, -0.13] },
    ReportedRow { label: "Astrophysics co-authorship", source: Source::Fixture("astrophysics_coauthorship"), values: &[-0.39, -0.72, 0.62, -0.95, -0.64, 0.25, -0.64, -0.66, 0.41] },
    ReportedRow { label: "Chicago Road", source: Source::Fixture("chicago_road"), values: &[-0.33, -0.34, 0.0, -0.42, -0.42, 0.0, -0.42, -0.42, 0.0] },
    ReportedRow { label: "Yeast protein interactions", source: Source::Fixture("yeast_protein"), values: &[-0.54, -0.67, -0.05, -0.57, -0.56, -0.33, -0.45, -0.54, -0.07] },
    ReportedRow { label: "Euro Road", source: Source::Fixture("euro_road"), values: &[-0.82, -0.75, -0.22, -0.82, -0.64, -0.38, -0.8, -0.65, -0.24] },
    ReportedRow { label: "Human protein interactions", source: Source::Fixture("human_protein"), values: &[-0.77, -0.78, -0.23, -0.71, -0.65, -0.43, -0.67, -0.64, -0.34] },
    ReportedRow { label: "Hamsterster friendship", source: Source::Fixture("hamsterster_friendship"), values: &[-0.87, -0.87, -0.3, -0.92, -0.76, -0.45, -0.91, -0.76, -0.42] },
    ReportedRow { label: "Email communication", source: Source::Fixture("email_communication"), values: &[-0.8, -0.88, 0.06, -0.97, -0.87, -0.31, -0.93, -0.88, -0.19] },
    ReportedRow { label: "PDZ domain interactions", source: Source::Fixture("pdz_domain"), values: &[-0.5, -0.58, -0.12, -0.62, -0.64, -0.14, -0.61, -0.64, -0.09] },
    ReportedRow { label: "Adjective-Noun adjacency", source: Source::Fixture("adjective_noun"), values: &[-0.57, -0.76, 0.07, -0.96, -0.84, -0.5, -0.95, -0.84, -0.45] },
    ReportedRow { label: "Dolphin", source: Source::Fixture("dolphin"), values: &[-0.04, -0.39, 0.44, -0.98, -0.77, -0.45, -0.73, -0.72, -0.04] },
    ReportedRow { label: "Contiguous US States", source: Source::Fixture("contiguous_us_states"), values: &[-0.59, -0.74, 0.71, -0.98, -0.82, 0.55, -0.78, -0.79, 0.7] },
    ReportedRow { label: "Zachary karate club", source: Source::Fixture("zachary_karate"), values: &[0.1, -0.09, 0.35, -0.84, -0.76, 0.4, -0.47, -0.6, 0.52] },
    ReportedRow { label: "Jazz musicians", source: Source::Fixture("jazz_musicians"), values: &[0.78, 0.34, 0.08, -0.99, -0.72, 0.33, -0.49, -0.56, 0.56] },
    ReportedRow { label: "Zebra", source: Source::Fixture("zebra"), values: &[0.78, 0.35, -0.33, -0.94, -0.73, 0.7, 0.76, 0.33, -0.31] },
];
