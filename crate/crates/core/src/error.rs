use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("extremal rays are undefined modulo a lineality space of dimension {lineality_dim}")]
    NotPointed { lineality_dim: usize },
    #[error("character outside weight cone")]
    OutsideWeightCone,
    #[error("point outside the fan support")]
    OutsideSupport,
    #[error("orbit cones are unavailable for a wall-given system; use git_fan_from_walls")]
    WallsGiven,
    #[error("wall {index} has dimension {found}, expected {expected}")]
    WallDimension { index: usize, expected: usize, found: usize },
    #[error("wall {index} is not contained in the support")]
    WallOutsideSupport { index: usize },
    #[error("orbit cone {index} is not a face of any full-dimensional orbit cone")]
    WallHypothesis { index: usize },
    #[error("wall arrangement is inconsistent: {0}")]
    Arrangement(String),
    #[error("fan property fails between cones {0} and {1}")]
    NotAFan(usize, usize),
    #[error("kappa must be full-dimensional in the first {0} coordinates of the support")]
    KappaDegenerate(usize),
    #[error("character not deep")]
    NotDeep,
    #[error("weight system is not admissible: the weights off facet {facet:?} do not generate the lattice")]
    NotAdmissible { facet: Vec<usize> },
    #[error("the constant-degree hypothesis fails: {0}")]
    DegreeZero(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },
    #[error("invalid weight system: {0}")]
    InvalidSystem(String),
    #[error("unknown family {0:?}")]
    UnknownFamily(String),
    #[error("bad parameters for family {family}: {reason}")]
    BadParams { family: String, reason: String },
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
}
