use thiserror::Error;

use crate::partitions::Partition;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed partition {0:?}")]
    MalformedPartition(String),

    #[error("malformed partial permutation {0:?}: {1}")]
    MalformedPartialPerm(String, String),

    #[error("malformed filling {0:?}: {1}")]
    MalformedFilling(String, String),

    #[error("cannot pad a partition of {size} to {n}")]
    InvalidPadding { size: usize, n: usize },

    #[error("point {point} lies outside 1..={n}")]
    PointOutOfRange { point: u32, n: usize },

    #[error("ambient sizes differ ({left} vs {right})")]
    AmbientMismatch { left: usize, right: usize },

    #[error("partition {0} has parts equal to 1")]
    NotProper(Partition),

    #[error("partitions have different sizes ({left} vs {right})")]
    SizeMismatch { left: usize, right: usize },

    #[error("class {partition} is empty in S_{n}")]
    EmptyClass { partition: Partition, n: usize },

    #[error("{what} = {value} exceeds the configured bound {max}")]
    BoundExceeded {
        what: &'static str,
        value: usize,
        max: usize,
    },

    #[error("internal invariant violated: {0}")]
    Internal(String),
}
