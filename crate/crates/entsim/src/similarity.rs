//! Entailment-based similarity (Jaccard over statement sets) and pairwise
//! comparison orchestration.

use rayon::prelude::*;
use serde::Serialize;

use crate::entailment::{entail_trajectory, StatementSet, TBoxConfig};
use crate::error::{Error, Result};
use crate::geometry::{hausdorff, HausdorffVariant, MetricMode, Trajectory};
use crate::regions::{AdjacencyGraph, RegionLayer};
use crate::risk::{estimate_risk, RiskModel};

/// Jaccard overlap of two statement sets: |a ∩ b| / |a ∪ b|.
///
/// `None` when both sets are empty: two trajectories with no entailment
/// evidence cannot be scored, and reporting perfect similarity would be
/// misleading.
pub fn jaccard(a: &StatementSet, b: &StatementSet) -> Option<f64> {
    let union = a.union_size(b);
    if union == 0 {
        return None;
    }
    Some(a.intersection_size(b) as f64 / union as f64)
}

/// One report row comparing a real trajectory with its synthetic stand-in.
///
/// `None` fields are undefined values, rendered as empty CSV fields or JSON
/// nulls. `notes` carries human-readable diagnostics (e.g. regions missing
/// the risk attribute) and is never serialized.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ComparisonRecord {
    pub pair_id: String,
    pub hausdorff_km: f64,
    pub entailment_similarity: Option<f64>,
    pub risk_real: Option<f64>,
    pub risk_synthetic: Option<f64>,
    pub risk_deviation: Option<f64>,
    pub out_of_layer_real: usize,
    pub out_of_layer_synthetic: usize,
    #[serde(skip)]
    pub notes: Vec<String>,
}

/// Everything a pairwise comparison needs besides the two trajectories.
pub struct CompareContext<'a> {
    pub layer: &'a RegionLayer,
    pub adjacency: &'a AdjacencyGraph,
    pub tbox: &'a TBoxConfig,
    pub mode: MetricMode,
    pub variant: HausdorffVariant,
    pub risk_model: RiskModel,
}

/// Compares one real/synthetic trajectory pair.
///
/// The Hausdorff direction is real → synthetic in the directed variant. The
/// risk deviation is synthetic minus real: positive means the substitution
/// inflates apparent risk.
pub fn compare_pair(
    real: &Trajectory,
    synthetic: &Trajectory,
    ctx: &CompareContext<'_>,
) -> ComparisonRecord {
    let hausdorff_km = hausdorff(real, synthetic, ctx.mode, ctx.variant);

    let entailed_real = entail_trajectory(real, ctx.layer, ctx.adjacency, ctx.tbox)
        .expect("located regions are registered in the adjacency graph");
    let entailed_synth = entail_trajectory(synthetic, ctx.layer, ctx.adjacency, ctx.tbox)
        .expect("located regions are registered in the adjacency graph");
    let entailment_similarity = jaccard(&entailed_real, &entailed_synth);

    let (_, out_of_layer_real) = ctx.layer.crossed_regions(real);
    let (_, out_of_layer_synthetic) = ctx.layer.crossed_regions(synthetic);

    let mut notes = Vec::new();
    let risk_real = estimate_risk(real, ctx.layer, &ctx.risk_model);
    let risk_synthetic = estimate_risk(synthetic, ctx.layer, &ctx.risk_model);
    for (side, estimate) in [("real", &risk_real), ("synthetic", &risk_synthetic)] {
        for region in &estimate.missing_attribute {
            notes.push(format!(
                "{side} trajectory crosses {region}, which lacks attribute {:?}",
                ctx.risk_model.attribute_key
            ));
        }
    }

    let risk_deviation = match (risk_real.value, risk_synthetic.value) {
        (Some(r), Some(s)) => Some(s - r),
        _ => None,
    };

    ComparisonRecord {
        pair_id: format!("{}:{}", real.id(), synthetic.id()),
        hausdorff_km,
        entailment_similarity,
        risk_real: risk_real.value,
        risk_synthetic: risk_synthetic.value,
        risk_deviation,
        out_of_layer_real,
        out_of_layer_synthetic,
        notes,
    }
}

/// Matches real and synthetic trajectories by id. Ids present on only one
/// side are a pairing error listing the orphans.
pub fn pair_by_id(
    real: Vec<Trajectory>,
    synthetic: Vec<Trajectory>,
) -> Result<Vec<(Trajectory, Trajectory)>> {
    let mut synth_by_id: std::collections::BTreeMap<String, Trajectory> = synthetic
        .into_iter()
        .map(|t| (t.id().to_string(), t))
        .collect();

    let mut pairs = Vec::with_capacity(real.len());
    let mut real_only = Vec::new();
    for t in real {
        match synth_by_id.remove(t.id()) {
            Some(s) => pairs.push((t, s)),
            None => real_only.push(t.id().to_string()),
        }
    }
    let synthetic_only: Vec<String> = synth_by_id.into_keys().collect();

    if !real_only.is_empty() || !synthetic_only.is_empty() {
        real_only.sort();
        return Err(Error::Pairing {
            real_only,
            synthetic_only,
        });
    }
    Ok(pairs)
}

/// Compares every pair. Pairs are processed in parallel; the output is
/// sorted by pair id, so results are identical regardless of execution
/// order.
pub fn compare_batch(
    pairs: &[(Trajectory, Trajectory)],
    ctx: &CompareContext<'_>,
) -> Vec<ComparisonRecord> {
    let mut records: Vec<ComparisonRecord> = pairs
        .par_iter()
        .map(|(real, synth)| compare_pair(real, synth, ctx))
        .collect();
    records.sort_by(|a, b| a.pair_id.cmp(&b.pair_id));
    records
}
