//! Materialization of the atomic spatial-relation statements a trajectory
//! entails from the regions it crosses, under a configurable ruleset.
//!
//! Statements are ⟨subject, predicate, object⟩ triples over a closed
//! predicate vocabulary (`touches`, `within`, `contains`). They are atomic:
//! two statements compare equal only when all three components match, and no
//! equal- or disjoint-relation statement is ever produced.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::io::Read;
use std::path::Path;
use std::str::FromStr;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::geometry::Trajectory;
use crate::regions::{AdjacencyGraph, RegionLayer};

/// Closed relation vocabulary.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Predicate {
    Touches,
    Within,
    Contains,
}

impl Predicate {
    pub fn as_str(&self) -> &'static str {
        match self {
            Predicate::Touches => "touches",
            Predicate::Within => "within",
            Predicate::Contains => "contains",
        }
    }

    /// The predicate of the inverse statement: `touches` is its own inverse,
    /// `within` and `contains` swap.
    pub fn inverse(&self) -> Predicate {
        match self {
            Predicate::Touches => Predicate::Touches,
            Predicate::Within => Predicate::Contains,
            Predicate::Contains => Predicate::Within,
        }
    }
}

impl fmt::Display for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One atomic ⟨subject, predicate, object⟩ fact. Subject and object are
/// always distinct.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Statement {
    subject: String,
    predicate: Predicate,
    object: String,
}

impl Statement {
    pub fn new(
        subject: impl Into<String>,
        predicate: Predicate,
        object: impl Into<String>,
    ) -> Result<Self> {
        let (subject, object) = (subject.into(), object.into());
        if subject == object {
            return Err(Error::SelfRelation(subject));
        }
        Ok(Statement {
            subject,
            predicate,
            object,
        })
    }

    pub fn subject(&self) -> &str {
        &self.subject
    }

    pub fn predicate(&self) -> Predicate {
        self.predicate
    }

    pub fn object(&self) -> &str {
        &self.object
    }

    /// Byte-stable canonical serialization: `subject|predicate|object`.
    pub fn canonical(&self) -> String {
        format!("{}|{}|{}", self.subject, self.predicate, self.object)
    }

    pub fn inverse(&self) -> Statement {
        Statement {
            subject: self.object.clone(),
            predicate: self.predicate.inverse(),
            object: self.subject.clone(),
        }
    }
}

impl fmt::Display for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.canonical())
    }
}

/// An unordered, duplicate-free collection of statements.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct StatementSet {
    items: BTreeSet<Statement>,
}

impl StatementSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, st: Statement) -> bool {
        self.items.insert(st)
    }

    pub fn contains(&self, st: &Statement) -> bool {
        self.items.contains(st)
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Statement> {
        self.items.iter()
    }

    pub fn union_with(&mut self, other: &StatementSet) {
        for st in &other.items {
            self.items.insert(st.clone());
        }
    }

    pub fn intersection_size(&self, other: &StatementSet) -> usize {
        let (small, large) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        small
            .items
            .iter()
            .filter(|st| large.items.contains(*st))
            .count()
    }

    pub fn union_size(&self, other: &StatementSet) -> usize {
        self.len() + other.len() - self.intersection_size(other)
    }

    /// Canonical triples, one per statement, sorted lexicographically for
    /// reproducible diffs.
    pub fn canonical_lines(&self) -> Vec<String> {
        let mut lines: Vec<String> = self.items.iter().map(Statement::canonical).collect();
        lines.sort();
        lines
    }
}

impl FromIterator<Statement> for StatementSet {
    fn from_iter<T: IntoIterator<Item = Statement>>(iter: T) -> Self {
        StatementSet {
            items: iter.into_iter().collect(),
        }
    }
}

impl Extend<Statement> for StatementSet {
    fn extend<T: IntoIterator<Item = Statement>>(&mut self, iter: T) {
        self.items.extend(iter)
    }
}

/// Entailment rules that can be switched on per run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Rule {
    /// For a crossed region R and each adjacent X: ⟨R, touches, X⟩.
    NeighborTouches,
    /// Close every emitted statement under inversion.
    InverseStatements,
    /// For a crossed region R and each ancestor P: ⟨R, within, P⟩.
    ContainmentTransitivity,
}

impl Rule {
    pub fn as_str(&self) -> &'static str {
        match self {
            Rule::NeighborTouches => "neighbor_touches",
            Rule::InverseStatements => "inverse_statements",
            Rule::ContainmentTransitivity => "containment_transitivity",
        }
    }
}

impl FromStr for Rule {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "neighbor_touches" => Ok(Rule::NeighborTouches),
            "inverse_statements" => Ok(Rule::InverseStatements),
            "containment_transitivity" => Ok(Rule::ContainmentTransitivity),
            other => Err(Error::Config(format!(
                "unknown rule {other:?}; expected neighbor_touches, inverse_statements, or containment_transitivity"
            ))),
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct TBoxDoc {
    rules: Option<Vec<String>>,
    corner_touch: Option<bool>,
    #[serde(default)]
    hierarchy: Vec<HierarchyEdgeDoc>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct HierarchyEdgeDoc {
    child: String,
    parent: String,
}

/// Terminology configuration: enabled rules, the corner-touch convention
/// forwarded to adjacency derivation, and the areal-unit hierarchy.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TBoxConfig {
    rules: BTreeSet<Rule>,
    corner_touch: bool,
    hierarchy: BTreeMap<String, String>, // child -> parent, acyclic
}

impl Default for TBoxConfig {
    /// Default ruleset: `neighbor_touches` and `inverse_statements` on,
    /// `containment_transitivity` off; corner contact counts as touching.
    fn default() -> Self {
        TBoxConfig {
            rules: BTreeSet::from([Rule::NeighborTouches, Rule::InverseStatements]),
            corner_touch: true,
            hierarchy: BTreeMap::new(),
        }
    }
}

impl TBoxConfig {
    pub fn rule_enabled(&self, rule: Rule) -> bool {
        self.rules.contains(&rule)
    }

    pub fn rules(&self) -> impl Iterator<Item = Rule> + '_ {
        self.rules.iter().copied()
    }

    pub fn corner_touch(&self) -> bool {
        self.corner_touch
    }

    pub fn parent_of(&self, id: &str) -> Option<&str> {
        self.hierarchy.get(id).map(String::as_str)
    }

    pub fn hierarchy_edges(&self) -> impl Iterator<Item = (&str, &str)> {
        self.hierarchy
            .iter()
            .map(|(c, p)| (c.as_str(), p.as_str()))
    }

    /// Full ancestor chain of `id`, nearest parent first.
    pub fn ancestors(&self, id: &str) -> Vec<&str> {
        let mut chain = Vec::new();
        let mut cur = id;
        while let Some(parent) = self.parent_of(cur) {
            chain.push(parent);
            cur = parent;
            if chain.len() > self.hierarchy.len() {
                // Unreachable after validation; guard against misuse.
                break;
            }
        }
        chain
    }

    /// Parses the JSON configuration document:
    ///
    /// ```json
    /// {
    ///   "rules": ["neighbor_touches", "inverse_statements"],
    ///   "corner_touch": true,
    ///   "hierarchy": [{"child": "R00", "parent": "B"}]
    /// }
    /// ```
    ///
    /// Omitting `rules` selects the default ruleset; an explicit empty list
    /// disables every rule.
    pub fn from_json_str(s: &str) -> Result<Self> {
        let doc: TBoxDoc = serde_json::from_str(s)?;
        let rules = match doc.rules {
            None => TBoxConfig::default().rules,
            Some(names) => names
                .iter()
                .map(|n| n.parse())
                .collect::<Result<BTreeSet<Rule>>>()?,
        };
        let mut config = TBoxConfig {
            rules,
            corner_touch: doc.corner_touch.unwrap_or(true),
            hierarchy: BTreeMap::new(),
        };
        for edge in &doc.hierarchy {
            config.add_hierarchy_edge(&edge.child, &edge.parent)?;
        }
        config.validate_hierarchy()?;
        Ok(config)
    }

    pub fn from_json_reader<R: Read>(mut reader: R) -> Result<Self> {
        let mut s = String::new();
        reader.read_to_string(&mut s)?;
        Self::from_json_str(&s)
    }

    pub fn from_json_path(path: impl AsRef<Path>) -> Result<Self> {
        let file = std::fs::File::open(path)?;
        Self::from_json_reader(std::io::BufReader::new(file))
    }

    fn add_hierarchy_edge(&mut self, child: &str, parent: &str) -> Result<()> {
        if child == parent {
            return Err(Error::HierarchyCycle(child.to_string()));
        }
        match self.hierarchy.get(child) {
            Some(existing) if existing != parent => Err(Error::Config(format!(
                "hierarchy declares two parents for {child:?}: {existing:?} and {parent:?}"
            ))),
            _ => {
                self.hierarchy
                    .insert(child.to_string(), parent.to_string());
                Ok(())
            }
        }
    }

    fn validate_hierarchy(&self) -> Result<()> {
        for start in self.hierarchy.keys() {
            let mut cur = start.as_str();
            let mut steps = 0usize;
            while let Some(parent) = self.parent_of(cur) {
                if parent == start {
                    return Err(Error::HierarchyCycle(start.clone()));
                }
                cur = parent;
                steps += 1;
                if steps > self.hierarchy.len() {
                    return Err(Error::HierarchyCycle(start.clone()));
                }
            }
        }
        Ok(())
    }

    /// Returns a copy with the layer's `parent_id` declarations merged into
    /// the hierarchy. Conflicting parents are a configuration error.
    pub fn merged_with_layer(&self, layer: &RegionLayer) -> Result<TBoxConfig> {
        let mut merged = self.clone();
        for (child, parent) in layer.parent_edges() {
            merged.add_hierarchy_edge(child, parent)?;
        }
        merged.validate_hierarchy()?;
        Ok(merged)
    }
}

/// Statements entailed by a single located fix's region.
///
/// The fix-level `within` assertion is the trigger only; the materialized set
/// holds region-level statements, so identical crossings entail identical
/// sets regardless of which trajectory produced them.
pub fn entail_fix(
    region: &str,
    adjacency: &AdjacencyGraph,
    tbox: &TBoxConfig,
) -> Result<StatementSet> {
    if !adjacency.knows(region) {
        return Err(Error::UnknownRegion(region.to_string()));
    }
    let mut set = StatementSet::new();
    if tbox.rule_enabled(Rule::NeighborTouches) {
        for neighbor in adjacency.neighbors(region) {
            set.insert(Statement::new(region, Predicate::Touches, neighbor)?);
        }
    }
    if tbox.rule_enabled(Rule::ContainmentTransitivity) {
        for ancestor in tbox.ancestors(region) {
            set.insert(Statement::new(region, Predicate::Within, ancestor)?);
        }
    }
    if tbox.rule_enabled(Rule::InverseStatements) {
        let inverses: Vec<Statement> = set.iter().map(Statement::inverse).collect();
        set.extend(inverses);
    }
    Ok(set)
}

/// Statements entailed by a trajectory: the union over every located fix.
///
/// Fixes outside the layer contribute nothing, and the result depends only
/// on the set of crossed regions, not on fix order or multiplicity.
pub fn entail_trajectory(
    t: &Trajectory,
    layer: &RegionLayer,
    adjacency: &AdjacencyGraph,
    tbox: &TBoxConfig,
) -> Result<StatementSet> {
    let (crossed, _out_of_layer) = layer.crossed_regions(t);
    let mut set = StatementSet::new();
    for region in &crossed {
        set.union_with(&entail_fix(region, adjacency, tbox)?);
    }
    Ok(set)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Fix;
    use crate::regions::test_fixtures::grid3x3_geojson;
    use crate::regions::{compute_adjacency, DEFAULT_EPSILON_DEG};
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};

    fn st(s: &str, p: Predicate, o: &str) -> Statement {
        Statement::new(s, p, o).unwrap()
    }

    fn grid() -> (RegionLayer, AdjacencyGraph) {
        let layer = RegionLayer::from_geojson_str(&grid3x3_geojson()).unwrap();
        let graph = compute_adjacency(&layer, true, DEFAULT_EPSILON_DEG).graph;
        (layer, graph)
    }

    #[test]
    fn canonical_form_examples() {
        assert_eq!(
            st("R00", Predicate::Touches, "R01").canonical(),
            "R00|touches|R01"
        );
        assert_eq!(
            st("B", Predicate::Contains, "R00").canonical(),
            "B|contains|R00"
        );
    }

    #[test]
    fn statement_rejects_equal_subject_object() {
        assert!(matches!(
            Statement::new("R", Predicate::Touches, "R"),
            Err(Error::SelfRelation(_))
        ));
    }

    #[test]
    fn inverse_swaps_roles() {
        let s = st("R00", Predicate::Within, "B");
        let inv = s.inverse();
        assert_eq!(inv, st("B", Predicate::Contains, "R00"));
        assert_eq!(inv.inverse(), s);
        assert_eq!(
            st("A", Predicate::Touches, "B").inverse(),
            st("B", Predicate::Touches, "A")
        );
    }

    #[test]
    fn entail_fix_on_grid_corner() {
        // R00's queen neighbors are R01, R10, R11: three pairs, six
        // statements once inverses are in. Oracle: enumerate directly.
        let (_, graph) = grid();
        let tbox = TBoxConfig::default();
        let set = entail_fix("R00", &graph, &tbox).unwrap();

        let mut oracle = StatementSet::new();
        for nb in ["R01", "R10", "R11"] {
            oracle.insert(st("R00", Predicate::Touches, nb));
            oracle.insert(st(nb, Predicate::Touches, "R00"));
        }
        assert_eq!(set, oracle);
        assert_eq!(set.len(), 6);
    }

    #[test]
    fn entail_fix_isolated_region_is_empty() {
        let mut graph = AdjacencyGraph::new();
        graph.register_node("LONE");
        let set = entail_fix("LONE", &graph, &TBoxConfig::default()).unwrap();
        assert!(set.is_empty());
    }

    #[test]
    fn entail_fix_unknown_region_errors() {
        let (_, graph) = grid();
        assert!(matches!(
            entail_fix("NOPE", &graph, &TBoxConfig::default()),
            Err(Error::UnknownRegion(_))
        ));
    }

    #[test]
    fn containment_chain_materializes_transitively() {
        // R00 -> B -> City; transitive closure over the two-edge chain gives
        // within/contains pairs for both ancestors.
        let mut graph = AdjacencyGraph::new();
        graph.register_node("R00");
        let tbox = TBoxConfig::from_json_str(
            r#"{
                "rules": ["neighbor_touches", "inverse_statements", "containment_transitivity"],
                "hierarchy": [
                    {"child": "R00", "parent": "B"},
                    {"child": "B", "parent": "City"}
                ]
            }"#,
        )
        .unwrap();
        let set = entail_fix("R00", &graph, &tbox).unwrap();

        let mut oracle = StatementSet::new();
        for ancestor in ["B", "City"] {
            oracle.insert(st("R00", Predicate::Within, ancestor));
            oracle.insert(st(ancestor, Predicate::Contains, "R00"));
        }
        assert_eq!(set, oracle);
        assert_eq!(set.len(), 4);
    }

    #[test]
    fn containment_without_inverse_emits_within_only() {
        let mut graph = AdjacencyGraph::new();
        graph.register_node("R00");
        let tbox = TBoxConfig::from_json_str(
            r#"{
                "rules": ["containment_transitivity"],
                "hierarchy": [{"child": "R00", "parent": "B"}]
            }"#,
        )
        .unwrap();
        let set = entail_fix("R00", &graph, &tbox).unwrap();
        assert_eq!(set.len(), 1);
        assert!(set.contains(&st("R00", Predicate::Within, "B")));
    }

    #[test]
    fn entail_trajectory_union_on_grid() {
        let (layer, graph) = grid();
        let tbox = TBoxConfig::default();
        // Crosses R00 and R01.
        let t = Trajectory::new(
            "t",
            vec![Fix::new(0.5, 0.5, 0).unwrap(), Fix::new(0.5, 1.5, 1).unwrap()],
        )
        .unwrap();
        let set = entail_trajectory(&t, &layer, &graph, &tbox).unwrap();

        // Set-union oracle over the two per-region materializations.
        let mut oracle = entail_fix("R00", &graph, &tbox).unwrap();
        oracle.union_with(&entail_fix("R01", &graph, &tbox).unwrap());
        assert_eq!(set, oracle);
        assert_eq!(set.len(), 14);
    }

    #[test]
    fn entail_trajectory_single_fix_matches_entail_fix() {
        let (layer, graph) = grid();
        let tbox = TBoxConfig::default();
        let t = Trajectory::new("t", vec![Fix::new(1.5, 1.5, 0).unwrap()]).unwrap();
        let set = entail_trajectory(&t, &layer, &graph, &tbox).unwrap();
        assert_eq!(set, entail_fix("R11", &graph, &tbox).unwrap());
    }

    #[test]
    fn entail_trajectory_outside_layer_is_empty() {
        let (layer, graph) = grid();
        let t = Trajectory::new(
            "t",
            vec![Fix::new(50.0, 50.0, 0).unwrap(), Fix::new(51.0, 51.0, 1).unwrap()],
        )
        .unwrap();
        let set = entail_trajectory(&t, &layer, &graph, &TBoxConfig::default()).unwrap();
        assert!(set.is_empty());
    }

    #[test]
    fn shared_neighbor_overlap_for_adjacent_regions() {
        let (_, graph) = grid();
        let tbox = TBoxConfig::default();
        for (a, b) in graph.edges() {
            let ea = entail_fix(a, &graph, &tbox).unwrap();
            let eb = entail_fix(b, &graph, &tbox).unwrap();
            let forward = st(a, Predicate::Touches, b);
            let backward = st(b, Predicate::Touches, a);
            assert!(ea.contains(&forward) && ea.contains(&backward));
            assert!(eb.contains(&forward) && eb.contains(&backward));
        }
    }

    #[test]
    fn inverse_closure_holds_when_enabled() {
        let (layer, graph) = grid();
        let tbox = TBoxConfig::from_json_str(
            r#"{
                "rules": ["neighbor_touches", "inverse_statements", "containment_transitivity"],
                "hierarchy": [{"child": "R11", "parent": "B"}, {"child": "B", "parent": "City"}]
            }"#,
        )
        .unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..100 {
            let t = random_grid_trajectory(&mut rng, 1..10);
            let set = entail_trajectory(&t, &layer, &graph, &tbox).unwrap();
            for statement in set.iter() {
                assert!(
                    set.contains(&statement.inverse()),
                    "missing inverse of {statement}"
                );
                assert_ne!(statement.subject(), statement.object());
            }
        }
    }

    #[test]
    fn fix_permutation_leaves_entailment_unchanged() {
        let (layer, graph) = grid();
        let tbox = TBoxConfig::default();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..100 {
            let t = random_grid_trajectory(&mut rng, 2..10);
            let mut shuffled: Vec<Fix> = t.fixes().to_vec();
            shuffled.shuffle(&mut rng);
            let reseq: Vec<Fix> = shuffled
                .iter()
                .enumerate()
                .map(|(i, f)| Fix::new(f.lat(), f.lon(), i as u64).unwrap())
                .collect();
            let t2 = Trajectory::new("shuffled", reseq).unwrap();
            assert_eq!(
                entail_trajectory(&t, &layer, &graph, &tbox).unwrap(),
                entail_trajectory(&t2, &layer, &graph, &tbox).unwrap()
            );
        }
    }

    #[test]
    fn adding_a_fix_never_shrinks_entailment() {
        let (layer, graph) = grid();
        let tbox = TBoxConfig::default();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(9);
        for _ in 0..100 {
            let t = random_grid_trajectory(&mut rng, 1..9);
            let base = entail_trajectory(&t, &layer, &graph, &tbox).unwrap();
            let mut fixes = t.fixes().to_vec();
            let last_seq = fixes.last().unwrap().seq();
            fixes.push(
                Fix::new(
                    rng.random_range(-0.5..3.5),
                    rng.random_range(-0.5..3.5),
                    last_seq + 1,
                )
                .unwrap(),
            );
            let grown = entail_trajectory(
                &Trajectory::new("grown", fixes).unwrap(),
                &layer,
                &graph,
                &tbox,
            )
            .unwrap();
            for statement in base.iter() {
                assert!(grown.contains(statement));
            }
        }
    }

    #[test]
    fn canonical_equality_matches_field_equality() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(13);
        let ids = ["R00", "R01", "R10", "B", "City", "Q7"];
        let preds = [Predicate::Touches, Predicate::Within, Predicate::Contains];
        let mut sample = |rng: &mut rand_chacha::ChaCha8Rng| loop {
            let s = ids[rng.random_range(0..ids.len())];
            let o = ids[rng.random_range(0..ids.len())];
            if s != o {
                return Statement::new(s, preds[rng.random_range(0..preds.len())], o).unwrap();
            }
        };
        for _ in 0..1000 {
            let a = sample(&mut rng);
            let b = sample(&mut rng);
            let fields_equal = a.subject() == b.subject()
                && a.predicate() == b.predicate()
                && a.object() == b.object();
            assert_eq!(a.canonical() == b.canonical(), fields_equal);
            assert_eq!(a == b, fields_equal);
        }
    }

    #[test]
    fn no_excluded_predicates_in_vocabulary() {
        // The vocabulary is closed at the type level; canonical output can
        // never carry an equal or disjoint relation.
        let (layer, graph) = grid();
        let t = Trajectory::new("t", vec![Fix::new(1.5, 1.5, 0).unwrap()]).unwrap();
        let set = entail_trajectory(&t, &layer, &graph, &TBoxConfig::default()).unwrap();
        for line in set.canonical_lines() {
            let pred = line.split('|').nth(1).unwrap();
            assert!(matches!(pred, "touches" | "within" | "contains"));
        }
    }

    #[test]
    fn tbox_config_parsing() {
        let tbox = TBoxConfig::from_json_str(r#"{}"#).unwrap();
        assert_eq!(tbox, TBoxConfig::default());
        assert!(tbox.corner_touch());

        let tbox = TBoxConfig::from_json_str(r#"{"rules": [], "corner_touch": false}"#).unwrap();
        assert!(!tbox.rule_enabled(Rule::NeighborTouches));
        assert!(!tbox.corner_touch());

        let err = TBoxConfig::from_json_str(r#"{"rules": ["frobnicate"]}"#).unwrap_err();
        assert!(matches!(err, Error::Config(_)), "{err}");

        let err = TBoxConfig::from_json_str(
            r#"{"hierarchy": [{"child": "A", "parent": "B"}, {"child": "B", "parent": "A"}]}"#,
        )
        .unwrap_err();
        assert!(matches!(err, Error::HierarchyCycle(_)), "{err}");

        let err = TBoxConfig::from_json_str(
            r#"{"hierarchy": [{"child": "A", "parent": "B"}, {"child": "A", "parent": "C"}]}"#,
        )
        .unwrap_err();
        assert!(matches!(err, Error::Config(_)), "{err}");
    }

    #[test]
    fn merged_with_layer_picks_up_parent_ids() {
        let doc = r#"{"type":"FeatureCollection","features":[
            {"type":"Feature","properties":{"region_id":"A","parent_id":"B"},"geometry":{"type":"Polygon","coordinates":[[[0.0,0.0],[1.0,0.0],[1.0,1.0],[0.0,1.0],[0.0,0.0]]]}}
        ]}"#;
        let layer = RegionLayer::from_geojson_str(doc).unwrap();
        let tbox = TBoxConfig::from_json_str(
            r#"{"rules": ["containment_transitivity"], "hierarchy": [{"child": "B", "parent": "City"}]}"#,
        )
        .unwrap();
        let merged = tbox.merged_with_layer(&layer).unwrap();
        assert_eq!(merged.ancestors("A"), vec!["B", "City"]);
    }

    fn random_grid_trajectory(
        rng: &mut rand_chacha::ChaCha8Rng,
        len_range: std::ops::Range<usize>,
    ) -> Trajectory {
        let n = rng.random_range(len_range);
        let fixes: Vec<Fix> = (0..n)
            .map(|i| {
                Fix::new(
                    rng.random_range(-0.5..3.5),
                    rng.random_range(-0.5..3.5),
                    i as u64,
                )
                .unwrap()
            })
            .collect();
        Trajectory::new("rand", fixes).unwrap()
    }
}
