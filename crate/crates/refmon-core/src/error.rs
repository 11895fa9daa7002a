use alloc::string::String;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("ground set mismatch: {0} vs {1}")]
    GroundMismatch(usize, usize),
    #[error("kind mismatch")]
    KindMismatch,
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
    #[error("enumeration exceeded cap of {0}")]
    CapExceeded(usize),
    #[error("not admissible: {0}")]
    NotAdmissible(String),
    #[error("unsupported kind: {0}")]
    UnsupportedKind(String),
    #[error("not a simple polytope: {0}")]
    NotSimple(String),
    #[error("bad generator index {0}")]
    BadIndex(usize),
    #[error("unmapped generator {0}")]
    UnmappedGenerator(String),
    #[error("parse error: {0}")]
    Parse(String),
}
