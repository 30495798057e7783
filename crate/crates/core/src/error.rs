use crate::rootsys::SimpleType;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum Error {
    #[error("unsupported type {kind}{rank}")]
    UnsupportedType { kind: char, rank: usize },

    #[error("cannot parse simple type from {0:?}")]
    BadTypeName(String),

    #[error("{what}: {size} exceeds the limit of {limit}")]
    TooLarge {
        what: &'static str,
        size: usize,
        limit: usize,
    },

    #[error("golden table is for {golden}, root system is {actual}")]
    TypeMismatch {
        golden: SimpleType,
        actual: SimpleType,
    },

    #[error("no golden table for {0}")]
    NoGolden(SimpleType),

    #[error("simple root index {index} out of range 1..={rank}")]
    SimpleIndexOutOfRange { index: usize, rank: usize },

    #[error("thread pool: {0}")]
    ThreadPool(String),

    #[error("malformed table: {0}")]
    MalformedTable(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
