//! Toy insurance-risk model: the unweighted mean of a region attribute over
//! the districts a trajectory crossed.

use crate::geometry::Trajectory;
use crate::regions::RegionLayer;

/// How the risk attribute is aggregated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RiskModel {
    /// Region attribute to average. Defaults to `crime_rate`.
    pub attribute_key: String,
    /// When true, average per located fix instead of per distinct region —
    /// a sensitivity-analysis alternative to the default distinct-region
    /// mean.
    pub per_fix: bool,
}

impl Default for RiskModel {
    fn default() -> Self {
        RiskModel {
            attribute_key: "crime_rate".to_string(),
            per_fix: false,
        }
    }
}

/// Outcome of a risk estimate. `value` is `None` when the trajectory crossed
/// no region or a crossed region lacks the attribute; `missing_attribute`
/// names the offending regions.
#[derive(Debug, Clone, PartialEq)]
pub struct RiskEstimate {
    pub value: Option<f64>,
    pub missing_attribute: Vec<String>,
}

/// Mean attribute value over the regions the trajectory crossed.
///
/// Revisits do not change the default estimate: the mean runs over the
/// distinct crossed-region set, not over fixes.
pub fn estimate_risk(t: &Trajectory, layer: &RegionLayer, model: &RiskModel) -> RiskEstimate {
    let (crossed, _out_of_layer) = layer.crossed_regions(t);

    let mut missing_attribute: Vec<String> = crossed
        .iter()
        .filter(|id| {
            layer
                .region(id)
                .and_then(|r| r.attribute(&model.attribute_key))
                .is_none()
        })
        .cloned()
        .collect();
    missing_attribute.sort();

    if crossed.is_empty() || !missing_attribute.is_empty() {
        return RiskEstimate {
            value: None,
            missing_attribute,
        };
    }

    let attribute = |id: &str| -> f64 {
        layer
            .region(id)
            .and_then(|r| r.attribute(&model.attribute_key))
            .expect("checked above")
    };

    let value = if model.per_fix {
        let located: Vec<f64> = t
            .fixes()
            .iter()
            .filter_map(|f| layer.locate(f))
            .map(attribute)
            .collect();
        // crossed is non-empty, so at least one fix located.
        located.iter().sum::<f64>() / located.len() as f64
    } else {
        crossed.iter().map(|id| attribute(id)).sum::<f64>() / crossed.len() as f64
    };

    RiskEstimate {
        value: Some(value),
        missing_attribute,
    }
}

/// Signed risk deviation: synthetic minus real. Positive means the
/// substitution inflates apparent risk. `None` when either side is
/// undefined.
pub fn risk_deviation(
    real: &Trajectory,
    synthetic: &Trajectory,
    layer: &RegionLayer,
    model: &RiskModel,
) -> Option<f64> {
    let r = estimate_risk(real, layer, model).value?;
    let s = estimate_risk(synthetic, layer, model).value?;
    Some(s - r)
}
