//! Error type shared across the crate.

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("latitude {0} outside [-90, 90]")]
    LatitudeOutOfRange(f64),

    #[error("longitude {0} outside [-180, 180]")]
    LongitudeOutOfRange(f64),

    #[error("trajectory {0:?} has no fixes")]
    EmptyTrajectory(String),

    #[error("trajectory {tid:?}: seq {seq} does not increase over previous seq {prev}")]
    NonMonotoneSeq { tid: String, prev: u64, seq: u64 },

    #[error("trajectory csv, line {line}: {message}")]
    TrajectoryCsv { line: u64, message: String },

    #[error("region layer, feature {feature_index}: {message}")]
    Schema { feature_index: usize, message: String },

    #[error("duplicate region id {0:?}")]
    DuplicateRegionId(String),

    #[error("region {region:?}: {message}")]
    Geometry { region: String, message: String },

    #[error("invalid region id {id:?}: {reason}")]
    InvalidRegionId { id: String, reason: String },

    #[error("unknown region id {0:?}")]
    UnknownRegion(String),

    #[error("adjacency edge {0:?} connects a region to itself")]
    SelfLoopEdge(String),

    #[error("adjacency csv, line {line}: {message}")]
    AdjacencyCsv { line: u64, message: String },

    #[error("statement subject and object are both {0:?}; the equal relation is excluded")]
    SelfRelation(String),

    #[error("tbox config: {0}")]
    Config(String),

    #[error("hierarchy cycle through {0:?}")]
    HierarchyCycle(String),

    #[error(
        "real and synthetic trajectories do not pair up; only in real: {real_only:?}, only in synthetic: {synthetic_only:?}"
    )]
    Pairing {
        real_only: Vec<String>,
        synthetic_only: Vec<String>,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    GeoJson(#[from] geojson::Error),
}

impl Error {
    /// Process exit code for the CLI: 2 for pairing failures, 1 for every
    /// other input or schema problem.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Pairing { .. } => 2,
            _ => 1,
        }
    }
}
