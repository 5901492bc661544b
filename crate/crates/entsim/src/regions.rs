//! Attributed polygonal region layers: GeoJSON ingestion, point location,
//! trajectory coverage, and the region adjacency ("touches") graph.

use std::collections::{BTreeMap, BTreeSet};
use std::io::{Read, Write};
use std::path::Path;

use rstar::{RTree, RTreeObject, AABB};

use crate::error::{Error, Result};
use crate::geometry::{Fix, Trajectory};

/// Default boundary/adjacency tolerance in degrees: well below GPS precision,
/// above double rounding noise.
pub const DEFAULT_EPSILON_DEG: f64 = 1e-9;

type Point = [f64; 2]; // [x = lon, y = lat]

#[derive(Debug, Clone)]
struct Ring {
    pts: Vec<Point>, // closed: first == last
}

impl Ring {
    fn segments(&self) -> impl Iterator<Item = (Point, Point)> + '_ {
        self.pts.windows(2).map(|w| (w[0], w[1]))
    }

    /// Winding number; nonzero means the point is inside. Points on the
    /// boundary are not reliable here and must be screened out first.
    fn winding_contains(&self, p: Point) -> bool {
        let mut wn: i32 = 0;
        for (a, b) in self.segments() {
            if a[1] <= p[1] {
                if b[1] > p[1] && cross(a, b, p) > 0.0 {
                    wn += 1;
                }
            } else if b[1] <= p[1] && cross(a, b, p) < 0.0 {
                wn -= 1;
            }
        }
        wn != 0
    }

    fn min_dist_sq(&self, p: Point) -> f64 {
        self.segments()
            .map(|(a, b)| point_segment_dist_sq(p, a, b))
            .fold(f64::INFINITY, f64::min)
    }

    fn bbox(&self) -> (Point, Point) {
        let mut lo = [f64::INFINITY, f64::INFINITY];
        let mut hi = [f64::NEG_INFINITY, f64::NEG_INFINITY];
        for p in &self.pts {
            lo[0] = lo[0].min(p[0]);
            lo[1] = lo[1].min(p[1]);
            hi[0] = hi[0].max(p[0]);
            hi[1] = hi[1].max(p[1]);
        }
        (lo, hi)
    }
}

fn cross(a: Point, b: Point, p: Point) -> f64 {
    (b[0] - a[0]) * (p[1] - a[1]) - (p[0] - a[0]) * (b[1] - a[1])
}

fn point_segment_dist_sq(p: Point, a: Point, b: Point) -> f64 {
    let (dx, dy) = (b[0] - a[0], b[1] - a[1]);
    let len_sq = dx * dx + dy * dy;
    let t = if len_sq == 0.0 {
        0.0
    } else {
        (((p[0] - a[0]) * dx + (p[1] - a[1]) * dy) / len_sq).clamp(0.0, 1.0)
    };
    let (ex, ey) = (a[0] + t * dx - p[0], a[1] + t * dy - p[1]);
    ex * ex + ey * ey
}

#[derive(Debug, Clone)]
struct Polygon {
    outer: Ring,
    holes: Vec<Ring>,
}

impl Polygon {
    fn rings(&self) -> impl Iterator<Item = &Ring> {
        std::iter::once(&self.outer).chain(self.holes.iter())
    }

    /// Interior test assuming the point is not on any ring.
    fn interior_contains(&self, p: Point) -> bool {
        self.outer.winding_contains(p) && !self.holes.iter().any(|h| h.winding_contains(p))
    }
}

/// Where a point sits relative to a region, at tolerance `eps`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PointInRegion {
    Interior,
    Boundary,
    Exterior,
}

/// One attributed region: a polygon or multi-polygon with optional numeric
/// attributes (e.g. `crime_rate`) and an optional parent areal unit.
#[derive(Debug, Clone)]
pub struct Region {
    id: String,
    polygons: Vec<Polygon>,
    attributes: BTreeMap<String, f64>,
    parent_id: Option<String>,
}

impl Region {
    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn attribute(&self, key: &str) -> Option<f64> {
        self.attributes.get(key).copied()
    }

    pub fn crime_rate(&self) -> Option<f64> {
        self.attribute("crime_rate")
    }

    pub fn parent_id(&self) -> Option<&str> {
        self.parent_id.as_deref()
    }

    /// Classifies a point against this region: on the boundary (within
    /// `eps`), in the interior, or outside.
    pub fn classify(&self, lon: f64, lat: f64, eps: f64) -> PointInRegion {
        let p = [lon, lat];
        let eps_sq = eps * eps;
        for poly in &self.polygons {
            for ring in poly.rings() {
                if ring.min_dist_sq(p) <= eps_sq {
                    return PointInRegion::Boundary;
                }
            }
        }
        if self.polygons.iter().any(|poly| poly.interior_contains(p)) {
            PointInRegion::Interior
        } else {
            PointInRegion::Exterior
        }
    }

    fn bbox(&self) -> (Point, Point) {
        let mut lo = [f64::INFINITY, f64::INFINITY];
        let mut hi = [f64::NEG_INFINITY, f64::NEG_INFINITY];
        for poly in &self.polygons {
            let (l, h) = poly.outer.bbox();
            lo[0] = lo[0].min(l[0]);
            lo[1] = lo[1].min(l[1]);
            hi[0] = hi[0].max(h[0]);
            hi[1] = hi[1].max(h[1]);
        }
        (lo, hi)
    }

    fn boundary_segments(&self) -> impl Iterator<Item = (Point, Point)> + '_ {
        self.polygons
            .iter()
            .flat_map(|poly| poly.rings())
            .flat_map(|ring| ring.segments())
    }
}

struct IndexEntry {
    envelope: AABB<Point>,
    region_idx: usize,
}

impl RTreeObject for IndexEntry {
    type Envelope = AABB<Point>;

    fn envelope(&self) -> Self::Envelope {
        self.envelope
    }
}

/// An immutable collection of regions with a bounding-box spatial index.
pub struct RegionLayer {
    regions: Vec<Region>,
    by_id: BTreeMap<String, usize>,
    index: RTree<IndexEntry>,
}

impl RegionLayer {
    fn build(regions: Vec<Region>) -> Result<Self> {
        let mut by_id = BTreeMap::new();
        for (idx, region) in regions.iter().enumerate() {
            if by_id.insert(region.id.clone(), idx).is_some() {
                return Err(Error::DuplicateRegionId(region.id.clone()));
            }
        }
        let entries = regions
            .iter()
            .enumerate()
            .map(|(region_idx, r)| {
                let (lo, hi) = r.bbox();
                IndexEntry {
                    envelope: AABB::from_corners(lo, hi),
                    region_idx,
                }
            })
            .collect();
        Ok(RegionLayer {
            regions,
            by_id,
            index: RTree::bulk_load(entries),
        })
    }

    /// Parses a GeoJSON FeatureCollection of Polygon/MultiPolygon features.
    ///
    /// Every feature needs a string `region_id` property; `crime_rate`
    /// (non-negative number) and `parent_id` (string) are optional. Any other
    /// numeric property is kept as a region attribute.
    pub fn from_geojson_str(s: &str) -> Result<Self> {
        let gj: geojson::GeoJson = s.parse()?;
        let fc = match gj {
            geojson::GeoJson::FeatureCollection(fc) => fc,
            _ => {
                return Err(Error::Schema {
                    feature_index: 0,
                    message: "document is not a FeatureCollection".into(),
                })
            }
        };

        let mut regions = Vec::with_capacity(fc.features.len());
        for (feature_index, feature) in fc.features.into_iter().enumerate() {
            let schema_err = |message: String| Error::Schema {
                feature_index,
                message,
            };

            let props = feature.properties.unwrap_or_default();
            let id = match props.get("region_id") {
                Some(serde_json::Value::String(s)) => s.clone(),
                Some(_) => return Err(schema_err("region_id must be a string".into())),
                None => return Err(schema_err("missing region_id property".into())),
            };
            validate_region_id(&id)?;

            let mut attributes = BTreeMap::new();
            for (key, value) in &props {
                if key == "region_id" || key == "parent_id" {
                    continue;
                }
                if let Some(number) = value.as_f64() {
                    if key == "crime_rate" && !(number.is_finite() && number >= 0.0) {
                        return Err(schema_err(format!(
                            "crime_rate must be a non-negative number, found {number}"
                        )));
                    }
                    if number.is_finite() {
                        attributes.insert(key.clone(), number);
                    }
                } else if key == "crime_rate" {
                    return Err(schema_err("crime_rate must be a number".into()));
                }
            }

            let parent_id = match props.get("parent_id") {
                Some(serde_json::Value::String(s)) => Some(s.clone()),
                Some(serde_json::Value::Null) | None => None,
                Some(_) => return Err(schema_err("parent_id must be a string".into())),
            };

            let geometry = feature
                .geometry
                .ok_or_else(|| schema_err("feature has no geometry".into()))?;
            let polygons = match geometry.value {
                geojson::Value::Polygon(rings) => vec![parse_polygon(&id, rings)?],
                geojson::Value::MultiPolygon(polys) => polys
                    .into_iter()
                    .map(|rings| parse_polygon(&id, rings))
                    .collect::<Result<Vec<_>>>()?,
                other => {
                    return Err(schema_err(format!(
                        "geometry must be Polygon or MultiPolygon, found {}",
                        other.type_name()
                    )))
                }
            };

            regions.push(Region {
                id,
                polygons,
                attributes,
                parent_id,
            });
        }

        Self::build(regions)
    }

    pub fn from_geojson_reader<R: Read>(mut reader: R) -> Result<Self> {
        let mut s = String::new();
        reader.read_to_string(&mut s)?;
        Self::from_geojson_str(&s)
    }

    pub fn from_geojson_path(path: impl AsRef<Path>) -> Result<Self> {
        let file = std::fs::File::open(path)?;
        Self::from_geojson_reader(std::io::BufReader::new(file))
    }

    pub fn len(&self) -> usize {
        self.regions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.regions.is_empty()
    }

    pub fn regions(&self) -> impl Iterator<Item = &Region> {
        self.regions.iter()
    }

    pub fn region(&self, id: &str) -> Option<&Region> {
        self.by_id.get(id).map(|&idx| &self.regions[idx])
    }

    pub fn region_ids(&self) -> impl Iterator<Item = &str> {
        self.by_id.keys().map(String::as_str)
    }

    /// Child -> parent edges declared through `parent_id` properties.
    pub fn parent_edges(&self) -> impl Iterator<Item = (&str, &str)> {
        self.regions
            .iter()
            .filter_map(|r| r.parent_id().map(|p| (r.id(), p)))
    }

    /// Returns the id of the region containing the fix, or `None`.
    ///
    /// Points within [`DEFAULT_EPSILON_DEG`] of a boundary are assigned to
    /// the lexicographically smallest candidate id, deterministically.
    pub fn locate(&self, p: &Fix) -> Option<&str> {
        self.locate_with_epsilon(p, DEFAULT_EPSILON_DEG)
    }

    pub fn locate_with_epsilon(&self, p: &Fix, eps: f64) -> Option<&str> {
        let (x, y) = (p.lon(), p.lat());
        let query = AABB::from_corners([x - eps, y - eps], [x + eps, y + eps]);

        // A point with no boundary contact sits in at most one interior for
        // a valid layer; when boundaries (or overlapping interiors) put
        // several regions in play, the lexicographically smallest id wins.
        let mut best: Option<&str> = None;
        for entry in self.index.locate_in_envelope_intersecting(&query) {
            let region = &self.regions[entry.region_idx];
            if region.classify(x, y, eps) == PointInRegion::Exterior {
                continue;
            }
            best = match best {
                Some(cur) if cur <= region.id() => Some(cur),
                _ => Some(region.id()),
            };
        }
        best
    }

    /// Distinct located region ids over all fixes, plus the count of fixes
    /// contained in no region.
    pub fn crossed_regions(&self, t: &Trajectory) -> (BTreeSet<String>, usize) {
        let mut crossed = BTreeSet::new();
        let mut out_of_layer = 0usize;
        for fix in t.fixes() {
            match self.locate(fix) {
                Some(id) => {
                    crossed.insert(id.to_string());
                }
                None => out_of_layer += 1,
            }
        }
        (crossed, out_of_layer)
    }
}

fn validate_region_id(id: &str) -> Result<()> {
    if id.is_empty() {
        return Err(Error::InvalidRegionId {
            id: id.into(),
            reason: "empty".into(),
        });
    }
    if id.contains('|') {
        return Err(Error::InvalidRegionId {
            id: id.into(),
            reason: "contains '|', which is reserved for canonical statements".into(),
        });
    }
    if id.contains('\n') || id.contains('\r') {
        return Err(Error::InvalidRegionId {
            id: id.into(),
            reason: "contains a line break".into(),
        });
    }
    Ok(())
}

fn parse_polygon(region_id: &str, rings: Vec<Vec<Vec<f64>>>) -> Result<Polygon> {
    let geom_err = |message: String| Error::Geometry {
        region: region_id.to_string(),
        message,
    };
    if rings.is_empty() {
        return Err(geom_err("polygon has no rings".into()));
    }
    let mut parsed = Vec::with_capacity(rings.len());
    for ring in rings {
        if ring.len() < 4 {
            return Err(geom_err(format!(
                "ring has {} positions, need at least 4",
                ring.len()
            )));
        }
        let mut pts = Vec::with_capacity(ring.len());
        for pos in &ring {
            if pos.len() < 2 || !pos[0].is_finite() || !pos[1].is_finite() {
                return Err(geom_err("ring position is not a finite lon,lat pair".into()));
            }
            pts.push([pos[0], pos[1]]);
        }
        if pts.first() != pts.last() {
            return Err(geom_err("unclosed ring: first vertex != last vertex".into()));
        }
        parsed.push(Ring { pts });
    }
    let mut iter = parsed.into_iter();
    Ok(Polygon {
        outer: iter.next().expect("at least one ring"),
        holes: iter.collect(),
    })
}

/// Symmetric "touches" relation between regions. No self-loops.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AdjacencyGraph {
    nodes: BTreeSet<String>,
    neighbors: BTreeMap<String, BTreeSet<String>>,
}

impl AdjacencyGraph {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn register_node(&mut self, id: impl Into<String>) {
        self.nodes.insert(id.into());
    }

    pub fn register_region_ids<'a>(&mut self, ids: impl IntoIterator<Item = &'a str>) {
        for id in ids {
            self.register_node(id);
        }
    }

    pub fn insert_edge(&mut self, a: impl Into<String>, b: impl Into<String>) -> Result<()> {
        let (a, b) = (a.into(), b.into());
        if a == b {
            return Err(Error::SelfLoopEdge(a));
        }
        self.nodes.insert(a.clone());
        self.nodes.insert(b.clone());
        self.neighbors.entry(a.clone()).or_default().insert(b.clone());
        self.neighbors.entry(b).or_default().insert(a);
        Ok(())
    }

    pub fn knows(&self, id: &str) -> bool {
        self.nodes.contains(id)
    }

    pub fn contains_edge(&self, a: &str, b: &str) -> bool {
        self.neighbors.get(a).is_some_and(|ns| ns.contains(b))
    }

    pub fn neighbors(&self, id: &str) -> impl Iterator<Item = &str> {
        self.neighbors
            .get(id)
            .into_iter()
            .flat_map(|ns| ns.iter().map(String::as_str))
    }

    /// Undirected edges as lexicographically ordered pairs, sorted.
    pub fn edges(&self) -> Vec<(&str, &str)> {
        let mut out = Vec::new();
        for (a, ns) in &self.neighbors {
            for b in ns {
                if a < b {
                    out.push((a.as_str(), b.as_str()));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.edges().len()
    }

    /// Writes CSV with header `region_a,region_b`, one ordered pair per row,
    /// rows sorted.
    pub fn to_csv_writer<W: Write>(&self, writer: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(writer);
        w.write_record(["region_a", "region_b"])?;
        for (a, b) in self.edges() {
            w.write_record([a, b])?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn to_csv_string(&self) -> String {
        let mut buf = Vec::new();
        self.to_csv_writer(&mut buf)
            .expect("writing CSV to memory cannot fail");
        String::from_utf8(buf).expect("CSV output is UTF-8")
    }

    /// Reads the edge-list CSV. Pairs are normalized to lexicographic order;
    /// self-loops are rejected. Only ids seen in edges become known nodes —
    /// call [`AdjacencyGraph::register_region_ids`] afterwards when a layer
    /// is available so isolated regions are known too.
    pub fn from_csv_reader<R: Read>(reader: R) -> Result<Self> {
        let mut rdr = csv::ReaderBuilder::new()
            .has_headers(true)
            .from_reader(reader);
        let headers: Vec<&str> = rdr.headers()?.iter().collect();
        if headers != ["region_a", "region_b"] {
            return Err(Error::AdjacencyCsv {
                line: 1,
                message: format!(
                    "expected header region_a,region_b, found {}",
                    headers.join(",")
                ),
            });
        }
        let mut graph = AdjacencyGraph::new();
        for record in rdr.records() {
            let record = record?;
            let line = record.position().map(|p| p.line()).unwrap_or_default();
            let a = record.get(0).unwrap_or("").to_string();
            let b = record.get(1).unwrap_or("").to_string();
            if a.is_empty() || b.is_empty() {
                return Err(Error::AdjacencyCsv {
                    line,
                    message: "empty region id".into(),
                });
            }
            graph.insert_edge(a, b).map_err(|e| Error::AdjacencyCsv {
                line,
                message: e.to_string(),
            })?;
        }
        Ok(graph)
    }

    pub fn from_csv_path(path: impl AsRef<Path>) -> Result<Self> {
        let file = std::fs::File::open(path)?;
        Self::from_csv_reader(std::io::BufReader::new(file))
    }
}

/// Result of deriving adjacency from geometry: the graph plus any region
/// pairs whose interiors overlap (neither touches nor disjoint, so no edge).
#[derive(Debug)]
pub struct AdjacencyBuild {
    pub graph: AdjacencyGraph,
    pub overlap_warnings: Vec<(String, String)>,
}

/// How two region boundaries meet.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum PairContact {
    Disjoint,
    PointContact,
    EdgeContact,
    Overlap,
}

/// Derives the "touches" graph from region geometry.
///
/// An edge {A, B} is present iff the boundaries of A and B come within `eps`
/// of each other and the interiors do not overlap. With `corner_touch` false,
/// single-point contacts (shared corners) do not count.
pub fn compute_adjacency(layer: &RegionLayer, corner_touch: bool, eps: f64) -> AdjacencyBuild {
    let mut graph = AdjacencyGraph::new();
    graph.register_region_ids(layer.region_ids());
    let mut overlap_warnings = Vec::new();

    let regions: Vec<&Region> = layer.regions().collect();
    let bboxes: Vec<(Point, Point)> = regions.iter().map(|r| r.bbox()).collect();

    for i in 0..regions.len() {
        for j in (i + 1)..regions.len() {
            let (alo, ahi) = bboxes[i];
            let (blo, bhi) = bboxes[j];
            if alo[0] > bhi[0] + eps
                || blo[0] > ahi[0] + eps
                || alo[1] > bhi[1] + eps
                || blo[1] > ahi[1] + eps
            {
                continue;
            }
            let (a, b) = (regions[i], regions[j]);
            match classify_pair(a, b, eps) {
                PairContact::Disjoint => {}
                PairContact::Overlap => {
                    let pair = if a.id() < b.id() {
                        (a.id().to_string(), b.id().to_string())
                    } else {
                        (b.id().to_string(), a.id().to_string())
                    };
                    overlap_warnings.push(pair);
                }
                PairContact::EdgeContact => {
                    graph
                        .insert_edge(a.id(), b.id())
                        .expect("distinct region ids");
                }
                PairContact::PointContact => {
                    if corner_touch {
                        graph
                            .insert_edge(a.id(), b.id())
                            .expect("distinct region ids");
                    }
                }
            }
        }
    }

    overlap_warnings.sort();
    AdjacencyBuild {
        graph,
        overlap_warnings,
    }
}

/// Sign of the offset of `p` from the line through `a`-`b`, treating offsets
/// within `eps` as zero. Degenerate segments give 0.
fn side_of_line(p: Point, a: Point, b: Point, eps: f64) -> i8 {
    let len = ((b[0] - a[0]).powi(2) + (b[1] - a[1]).powi(2)).sqrt();
    if len == 0.0 {
        return 0;
    }
    let offset = cross(a, b, p) / len;
    if offset > eps {
        1
    } else if offset < -eps {
        -1
    } else {
        0
    }
}

fn segments_properly_cross(a1: Point, a2: Point, b1: Point, b2: Point, eps: f64) -> bool {
    let s1 = side_of_line(b1, a1, a2, eps);
    let s2 = side_of_line(b2, a1, a2, eps);
    let s3 = side_of_line(a1, b1, b2, eps);
    let s4 = side_of_line(a2, b1, b2, eps);
    (s1 as i32) * (s2 as i32) < 0 && (s3 as i32) * (s4 as i32) < 0
}

fn segment_dist_sq(a1: Point, a2: Point, b1: Point, b2: Point) -> f64 {
    point_segment_dist_sq(a1, b1, b2)
        .min(point_segment_dist_sq(a2, b1, b2))
        .min(point_segment_dist_sq(b1, a1, a2))
        .min(point_segment_dist_sq(b2, a1, a2))
}

/// Length of the collinear overlap between two segments lying within `eps`
/// of a common line, or 0.0 when they are not collinear.
fn collinear_overlap_len(a1: Point, a2: Point, b1: Point, b2: Point, eps: f64) -> f64 {
    if side_of_line(b1, a1, a2, eps) != 0 || side_of_line(b2, a1, a2, eps) != 0 {
        return 0.0;
    }
    let (dx, dy) = (a2[0] - a1[0], a2[1] - a1[1]);
    let len = (dx * dx + dy * dy).sqrt();
    if len == 0.0 {
        return 0.0;
    }
    let (ux, uy) = (dx / len, dy / len);
    let project = |p: Point| (p[0] - a1[0]) * ux + (p[1] - a1[1]) * uy;
    let (tb1, tb2) = (project(b1), project(b2));
    let (blo, bhi) = (tb1.min(tb2), tb1.max(tb2));
    (bhi.min(len) - blo.max(0.0)).max(0.0)
}

fn classify_pair(a: &Region, b: &Region, eps: f64) -> PairContact {
    // Proper boundary crossings mean the interiors intersect.
    for (sa1, sa2) in a.boundary_segments() {
        for (sb1, sb2) in b.boundary_segments() {
            if segments_properly_cross(sa1, sa2, sb1, sb2, eps) {
                return PairContact::Overlap;
            }
        }
    }

    // Any boundary sample of one region lying strictly inside the other
    // witnesses an interior overlap: a boundary point is a limit of interior
    // points, so a neighborhood inside the other interior must meet this
    // region's interior too. Catches containment and collinear partial
    // overlaps that produce no proper crossing.
    let boundary_samples = |r: &Region| -> Vec<Point> {
        let mut pts = Vec::new();
        for (p, q) in r.boundary_segments() {
            pts.push(p);
            for t in [0.25, 0.5, 0.75] {
                pts.push([p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1])]);
            }
        }
        pts
    };
    for (this, other) in [(a, b), (b, a)] {
        for p in boundary_samples(this) {
            if other.classify(p[0], p[1], eps) == PointInRegion::Interior {
                return PairContact::Overlap;
            }
        }
        // Identical or near-identical footprints leave every boundary sample
        // on the other boundary; a per-polygon bbox-centre probe interior to
        // both regions still flags those.
        for poly in &this.polygons {
            let (lo, hi) = poly.outer.bbox();
            let c = [(lo[0] + hi[0]) / 2.0, (lo[1] + hi[1]) / 2.0];
            if this.classify(c[0], c[1], eps) == PointInRegion::Interior
                && other.classify(c[0], c[1], eps) == PointInRegion::Interior
            {
                return PairContact::Overlap;
            }
        }
    }

    // No interior overlap: decide disjoint vs contact, and how extended the
    // contact is.
    let eps_sq = eps * eps;
    let mut min_dist_sq = f64::INFINITY;
    let mut max_overlap = 0.0f64;
    for (sa1, sa2) in a.boundary_segments() {
        for (sb1, sb2) in b.boundary_segments() {
            min_dist_sq = min_dist_sq.min(segment_dist_sq(sa1, sa2, sb1, sb2));
            max_overlap = max_overlap.max(collinear_overlap_len(sa1, sa2, sb1, sb2, eps));
        }
    }
    if min_dist_sq > eps_sq {
        PairContact::Disjoint
    } else if max_overlap > eps {
        PairContact::EdgeContact
    } else {
        PairContact::PointContact
    }
}
