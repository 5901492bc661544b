//! Coordinate types, distance metrics, and Hausdorff distances between
//! trajectories.
//!
//! Geodesic distances use the haversine formula on a sphere of mean radius
//! 6371.0088 km and are reported in kilometres. Planar distances treat the
//! coordinate pair as Cartesian and are reported in coordinate units.

use std::fmt;
use std::io::Read;
use std::path::Path;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Mean Earth radius in kilometres.
pub const EARTH_RADIUS_KM: f64 = 6371.0088;

/// A single coordinate sample within a trajectory.
///
/// Coordinates are validated at construction; every `Fix` holds a latitude in
/// [-90, 90] and a longitude in [-180, 180]. The optional timestamp is carried
/// through untouched and never interpreted.
#[derive(Debug, Clone, PartialEq)]
pub struct Fix {
    lat: f64,
    lon: f64,
    seq: u64,
    timestamp: Option<String>,
}

impl Fix {
    pub fn new(lat: f64, lon: f64, seq: u64) -> Result<Self> {
        if !lat.is_finite() || !(-90.0..=90.0).contains(&lat) {
            return Err(Error::LatitudeOutOfRange(lat));
        }
        if !lon.is_finite() || !(-180.0..=180.0).contains(&lon) {
            return Err(Error::LongitudeOutOfRange(lon));
        }
        Ok(Fix {
            lat,
            lon,
            seq,
            timestamp: None,
        })
    }

    pub fn with_timestamp(mut self, timestamp: impl Into<String>) -> Self {
        self.timestamp = Some(timestamp.into());
        self
    }

    pub fn lat(&self) -> f64 {
        self.lat
    }

    pub fn lon(&self) -> f64 {
        self.lon
    }

    pub fn seq(&self) -> u64 {
        self.seq
    }

    pub fn timestamp(&self) -> Option<&str> {
        self.timestamp.as_deref()
    }
}

/// An ordered, non-empty sequence of fixes describing one agent's movement.
#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    id: String,
    fixes: Vec<Fix>,
}

impl Trajectory {
    /// Builds a trajectory, rejecting empty fix lists and non-increasing seq
    /// values.
    pub fn new(id: impl Into<String>, fixes: Vec<Fix>) -> Result<Self> {
        let id = id.into();
        if fixes.is_empty() {
            return Err(Error::EmptyTrajectory(id));
        }
        for pair in fixes.windows(2) {
            if pair[1].seq <= pair[0].seq {
                return Err(Error::NonMonotoneSeq {
                    tid: id,
                    prev: pair[0].seq,
                    seq: pair[1].seq,
                });
            }
        }
        Ok(Trajectory { id, fixes })
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn fixes(&self) -> &[Fix] {
        &self.fixes
    }

    pub fn len(&self) -> usize {
        self.fixes.len()
    }

    pub fn is_empty(&self) -> bool {
        false // non-empty by construction
    }
}

/// Distance interpretation for a computation context.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum MetricMode {
    /// Great-circle distance on a sphere of radius [`EARTH_RADIUS_KM`]; km.
    #[default]
    Geodesic,
    /// Euclidean distance over the raw coordinate pair; coordinate units.
    Planar,
}

impl FromStr for MetricMode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "geodesic" => Ok(MetricMode::Geodesic),
            "planar" => Ok(MetricMode::Planar),
            other => Err(format!("unknown metric {other:?}; expected geodesic or planar")),
        }
    }
}

impl fmt::Display for MetricMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MetricMode::Geodesic => write!(f, "geodesic"),
            MetricMode::Planar => write!(f, "planar"),
        }
    }
}

/// Which Hausdorff statistic a comparison reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum HausdorffVariant {
    /// `directed_hausdorff(real, synthetic)`; asymmetric.
    #[default]
    Directed,
    /// Max of the two directed distances.
    Symmetric,
}

impl FromStr for HausdorffVariant {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "directed" => Ok(HausdorffVariant::Directed),
            "symmetric" => Ok(HausdorffVariant::Symmetric),
            other => Err(format!(
                "unknown hausdorff variant {other:?}; expected directed or symmetric"
            )),
        }
    }
}

impl fmt::Display for HausdorffVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HausdorffVariant::Directed => write!(f, "directed"),
            HausdorffVariant::Symmetric => write!(f, "symmetric"),
        }
    }
}

fn haversine_km(lat1: f64, lon1: f64, lat2: f64, lon2: f64) -> f64 {
    let phi1 = lat1.to_radians();
    let phi2 = lat2.to_radians();
    let dphi = (lat2 - lat1).to_radians();
    let dlam = (lon2 - lon1).to_radians();
    let a = (dphi / 2.0).sin().powi(2) + phi1.cos() * phi2.cos() * (dlam / 2.0).sin().powi(2);
    // atan2 form stays stable as a -> 1 (near-antipodal points)
    let c = 2.0 * a.sqrt().atan2((1.0 - a).sqrt());
    EARTH_RADIUS_KM * c
}

/// Distance between two fixes under the given metric mode.
pub fn distance(p: &Fix, q: &Fix, mode: MetricMode) -> f64 {
    match mode {
        MetricMode::Geodesic => haversine_km(p.lat, p.lon, q.lat, q.lon),
        MetricMode::Planar => {
            let dlat = p.lat - q.lat;
            let dlon = p.lon - q.lon;
            (dlat * dlat + dlon * dlon).sqrt()
        }
    }
}

/// Directed Hausdorff distance: the largest distance from a fix of `from` to
/// its nearest fix of `to`. Not symmetric in general.
pub fn directed_hausdorff(from: &Trajectory, to: &Trajectory, mode: MetricMode) -> f64 {
    let mut overall: f64 = 0.0;
    for p in from.fixes() {
        let mut nearest = f64::INFINITY;
        for q in to.fixes() {
            let d = distance(p, q, mode);
            if d < nearest {
                nearest = d;
                // This fix can no longer raise the running maximum.
                if nearest <= overall {
                    break;
                }
            }
        }
        if nearest > overall {
            overall = nearest;
        }
    }
    overall
}

/// Symmetric Hausdorff distance: max of the two directed distances.
pub fn symmetric_hausdorff(a: &Trajectory, b: &Trajectory, mode: MetricMode) -> f64 {
    directed_hausdorff(a, b, mode).max(directed_hausdorff(b, a, mode))
}

/// Hausdorff distance for the requested variant, computed `real -> synthetic`
/// in the directed case.
pub fn hausdorff(
    real: &Trajectory,
    synthetic: &Trajectory,
    mode: MetricMode,
    variant: HausdorffVariant,
) -> f64 {
    match variant {
        HausdorffVariant::Directed => directed_hausdorff(real, synthetic, mode),
        HausdorffVariant::Symmetric => symmetric_hausdorff(real, synthetic, mode),
    }
}

/// Reads trajectories from CSV with header `tid,seq,lat,lon[,timestamp]`.
///
/// Rows must be grouped by tid with strictly increasing seq inside each
/// group; a tid resurfacing after another tid is rejected, as is any
/// non-monotone seq.
pub fn read_trajectories_csv<R: Read>(reader: R) -> Result<Vec<Trajectory>> {
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(true)
        .flexible(false)
        .from_reader(reader);

    let headers = rdr.headers()?.clone();
    let cols: Vec<&str> = headers.iter().collect();
    let has_timestamp = match cols.as_slice() {
        ["tid", "seq", "lat", "lon"] => false,
        ["tid", "seq", "lat", "lon", "timestamp"] => true,
        other => {
            return Err(Error::TrajectoryCsv {
                line: 1,
                message: format!(
                    "expected header tid,seq,lat,lon[,timestamp], found {}",
                    other.join(",")
                ),
            })
        }
    };

    let mut trajectories: Vec<Trajectory> = Vec::new();
    let mut finished: std::collections::HashSet<String> = std::collections::HashSet::new();
    let mut current_tid: Option<String> = None;
    let mut current_fixes: Vec<Fix> = Vec::new();

    let mut flush = |tid: Option<String>, fixes: &mut Vec<Fix>| -> Result<()> {
        if let Some(tid) = tid {
            trajectories.push(Trajectory::new(tid, std::mem::take(fixes))?);
        }
        Ok(())
    };

    for record in rdr.records() {
        let record = record?;
        let line = record
            .position()
            .map(|p| p.line())
            .unwrap_or_default();
        let field = |idx: usize| -> &str { record.get(idx).unwrap_or("") };

        let tid = field(0).to_string();
        if tid.is_empty() {
            return Err(Error::TrajectoryCsv {
                line,
                message: "empty tid".into(),
            });
        }
        let seq: u64 = field(1).parse().map_err(|_| Error::TrajectoryCsv {
            line,
            message: format!("seq {:?} is not a non-negative integer", field(1)),
        })?;
        let lat: f64 = field(2).parse().map_err(|_| Error::TrajectoryCsv {
            line,
            message: format!("lat {:?} is not a number", field(2)),
        })?;
        let lon: f64 = field(3).parse().map_err(|_| Error::TrajectoryCsv {
            line,
            message: format!("lon {:?} is not a number", field(3)),
        })?;

        let mut fix = Fix::new(lat, lon, seq).map_err(|e| Error::TrajectoryCsv {
            line,
            message: e.to_string(),
        })?;
        if has_timestamp {
            let ts = field(4);
            if !ts.is_empty() {
                fix = fix.with_timestamp(ts);
            }
        }

        match current_tid.as_deref() {
            Some(cur) if cur == tid => {
                let prev = current_fixes.last().expect("group is non-empty").seq();
                if seq <= prev {
                    return Err(Error::TrajectoryCsv {
                        line,
                        message: format!(
                            "trajectory {tid:?}: seq {seq} does not increase over previous seq {prev}"
                        ),
                    });
                }
                current_fixes.push(fix);
            }
            _ => {
                if finished.contains(&tid) {
                    return Err(Error::TrajectoryCsv {
                        line,
                        message: format!("rows for trajectory {tid:?} are not contiguous"),
                    });
                }
                flush(current_tid.take(), &mut current_fixes)?;
                if let Some(prev) = trajectories.last() {
                    finished.insert(prev.id().to_string());
                }
                current_tid = Some(tid);
                current_fixes.push(fix);
            }
        }
    }
    flush(current_tid.take(), &mut current_fixes)?;

    Ok(trajectories)
}

/// [`read_trajectories_csv`] over a filesystem path.
pub fn read_trajectories_csv_path(path: impl AsRef<Path>) -> Result<Vec<Trajectory>> {
    let file = std::fs::File::open(path)?;
    read_trajectories_csv(std::io::BufReader::new(file))
}
