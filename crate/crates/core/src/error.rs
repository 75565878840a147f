//! Error types shared across the crate.

use crate::geom::Pos;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ModelError {
    #[error("duplicate tile name `{0}`")]
    DuplicateTileName(String),
    #[error("seed references unknown tile `{0}`")]
    UnknownSeedTile(String),
    #[error("seed domain is not edge-connected")]
    DisconnectedSeed,
    #[error("negative glue strength for `{0}`")]
    BadStrength(String),
    #[error("seed is empty")]
    EmptySeed,
    #[error("duplicate seed position {0:?}")]
    DuplicateSeedPosition(Pos),
    #[error("position {0:?} is already occupied")]
    OccupiedPosition(Pos),
    #[error("assemblies disagree at {0:?}")]
    ConflictingOverlap(Pos),
    #[error("assemblies neither overlap nor bind")]
    DisjointUnbound,
    #[error("assembly is empty")]
    EmptyAssembly,
    #[error("malformed system description: {0}")]
    Parse(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PathError {
    #[error("path is empty")]
    EmptyPath,
    #[error("repeated position {0:?}")]
    RepeatedPosition(Pos),
    #[error("steps {0} and {1} are not adjacent")]
    NonAdjacentStep(usize, usize),
    #[error("steps {0} and {1} do not bind")]
    NonBindingStep(usize, usize),
    #[error("unknown tile type `{0}`")]
    UnknownTileType(String),
    #[error("concatenation endpoints do not bind")]
    NoBond,
    #[error("paths intersect at {0:?}")]
    Intersection(Pos),
    #[error("system has no finite terminal assembly")]
    SystemNotFinite,
    #[error("system is not directed")]
    SystemNotDirected,
    #[error("turn comparison needs a prefix of length >= 2")]
    BadPrefix,
    #[error("paths do not share their first two positions")]
    PreconditionViolated,
    #[error("empty path set")]
    EmptySet,
    #[error("paths in set have mixed origins")]
    MixedOrigins,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GlueError {
    #[error("path too short for glues")]
    TooShort,
    #[error("column {0} out of range")]
    ColumnOutOfRange(i32),
    #[error("bad glue index {0}")]
    BadIndex(usize),
    #[error("no glue on column {0}")]
    NoGlueOnColumn(i32),
    #[error("no visible glue on column {0}")]
    NoVisibleGlue(i32),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RegionError {
    #[error("indices do not form a cut")]
    NotACut,
    #[error("hole end glues are not both on column {0}")]
    NotClosed(i32),
    #[error("frontier crosses the hole path")]
    CorkCrossed,
    #[error("hole path must stay within γ")]
    OffTerminal,
    #[error("query outside the analysis box")]
    OutsideBox,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CutError {
    #[error("bad glue indices ({0},{1})")]
    BadIndices(usize, usize),
    #[error("search budget exceeded")]
    SearchBudgetExceeded,
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("no extremal path for column {0}")]
    NoExtremalPath(i32),
    #[error(transparent)]
    Path(#[from] PathError),
    #[error(transparent)]
    Glue(#[from] GlueError),
    #[error(transparent)]
    Region(#[from] RegionError),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ArcError {
    #[error("column {0} outside the shield window")]
    ColumnOutOfWindow(i32),
    #[error("not a shield: {0}")]
    NotAShield(ShieldViolation),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("shield locator disagrees with the extent test: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Cut(#[from] CutError),
}

/// Which clause of the shield definition a candidate failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum ShieldViolation {
    /// Intersects the reference path or leaves the workspace.
    Containment,
    /// The combined path is not a negative arc on the shield column.
    NotNegativeArc,
    /// The candidate does not prefix the minimal interior path of its arc.
    NotMinimalPrefix,
    /// The combined arc does not reach back to the anchor column.
    DoesNotReachBack,
}

impl std::fmt::Display for ShieldViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            ShieldViolation::Containment => "bullet 1 (containment)",
            ShieldViolation::NotNegativeArc => "bullet 2 (negative arc)",
            ShieldViolation::NotMinimalPrefix => "bullet 3 (minimal interior prefix)",
            ShieldViolation::DoesNotReachBack => "bullet 4 (reach-back extent)",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HarnessError {
    #[error("generator configuration too large for exhaustive mode")]
    ConfigTooLarge,
    #[error("unknown lemma `{0}`")]
    UnknownLemma(String),
    #[error("search budget exceeded")]
    SearchBudgetExceeded,
    #[error(transparent)]
    Model(#[from] ModelError),
}
