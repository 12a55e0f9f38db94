use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("syntax error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("arc label {label} appears {count} times (expected 2)")]
    Label { label: u32, count: usize },

    #[error("diagram is not planar: V - E + F = {euler}, expected {expected}")]
    NonPlanar { euler: i64, expected: i64 },

    #[error("invalid DT code: {0}")]
    InvalidDt(String),

    #[error("DT code {0} is not realizable by a planar diagram")]
    NonRealizable(String),

    #[error("operation requires a knot, diagram has {components} components")]
    MultiComponent { components: usize },

    #[error("resource budget exceeded: {what} (limit {limit})")]
    Budget { what: &'static str, limit: u64 },

    #[error("tangle region: {0}")]
    Region(String),

    #[error("involution {0} is not string-preserving for this tangle")]
    NotStringPreserving(&'static str),

    #[error("tangle: {0}")]
    Tangle(String),

    #[error("{file}:{line}: {msg}")]
    Ingest { file: String, line: usize, msg: String },

    #[error("record {record}: missing invariant {invariant}")]
    MissingInvariant { record: String, invariant: &'static str },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Process exit code for the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Budget { .. } => 3,
            _ => 2,
        }
    }
}
