use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("order {n} exceeds the supported maximum of {max}")]
    OrderTooLarge { n: usize, max: usize },

    #[error("bad edge ({u}, {v}) for a graph of order {n}")]
    BadEdge { u: usize, v: usize, n: usize },

    #[error("parse error at byte {offset}: {msg}")]
    Parse { offset: usize, msg: String },

    #[error("operation requires at least one vertex")]
    EmptyGraph,

    #[error("operation requires a connected graph")]
    Disconnected,

    #[error("parameter out of range: {0}")]
    ParamOutOfRange(String),

    #[error("no {degree}-regular graph on {order} vertices")]
    NoRegularGraph { degree: usize, order: usize },

    #[error("negative discriminant {0} in the signless Laplacian bound")]
    NegativeDiscriminant(f64),

    #[error("threshold {kind} has a zero denominator at k = 2")]
    DivisionByZeroK2 { kind: &'static str },

    #[error("no F-free graph in the enumerated class")]
    EmptyClass,

    #[error("eigensolver did not converge after {sweeps} sweeps (off-diagonal norm {off})")]
    NoConvergence { sweeps: usize, off: f64 },

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{path}:{line}: {msg}")]
    RecordParse { path: PathBuf, line: usize, msg: String },
}
