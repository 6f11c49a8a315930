use alloc::string::String;
use core::fmt;

/// Errors surfaced by the core algorithms.
///
/// Every variant carries enough context to reproduce the failing call.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Two strings that must share an alphabet (or a length) do not.
    LengthMismatch {
        left: usize,
        right: usize,
    },
    AlphabetMismatch {
        detail: String,
    },
    /// A symbol coordinate is outside its component's range.
    CoordOutOfRange {
        position: usize,
        component: usize,
        value: u32,
        size: u32,
    },
    /// A component size is zero or exceeds the wire limit of 65536.
    BadComponentSize {
        component: usize,
        size: u32,
    },
    /// An edit-script position does not exist in the string it targets.
    ScriptPositionOutOfRange {
        position: usize,
        len: usize,
    },
    /// Edit-script positions must be strictly increasing per operation kind.
    ScriptNotCanonical {
        detail: String,
    },
    /// `(lenA + lenB - ed)` must be even and non-negative.
    ParityViolation {
        len_a: usize,
        len_b: usize,
        ed: usize,
    },
    /// An edge references a vertex outside the declared part sizes.
    EdgeOutOfRange {
        edge: (usize, usize),
        left_len: usize,
        right_len: usize,
    },
    /// A matched pair joins two unequal symbols.
    MatchedSymbolsDiffer {
        left: usize,
        right: usize,
    },
    /// A matching is not strictly increasing in both coordinates.
    MatchingNotMonotone {
        at: usize,
    },
    /// Parameter must lie in an open or half-open interval.
    ParamOutOfRange {
        name: &'static str,
        value: f64,
        expected: &'static str,
    },
    /// Randomized construction gave up.
    IterationCapExceeded {
        what: &'static str,
        cap: u64,
        hint: &'static str,
    },
    /// The interval property failed at a triple (1-based, paper convention).
    SyncViolation {
        i: usize,
        j: usize,
        k: usize,
        ed: usize,
    },
    /// A block decoder returned more candidates than the codebook's cap.
    ListCapExceeded {
        block: usize,
        got: usize,
        cap: usize,
    },
    /// Decoding engine failed inside a multi-round position decode.
    EngineFailure {
        round: usize,
        detail: String,
    },
    /// Block-decode failure inside the approximation algorithm.
    BlockDecodeFailure {
        block: usize,
        detail: String,
    },
    /// Ground-truth record and decoding disagree on received length.
    RecordMismatch {
        detail: String,
    },
    /// Two-layer scheme parameters are infeasible.
    SchemeInfeasible {
        detail: String,
    },
    /// Explicit decode failure of the unique insdel code (budget exceeded
    /// or inconsistent input); never silently wrong.
    DecodeFailure {
        detail: String,
    },
    /// Message length does not match the code dimension.
    MessageLength {
        got: usize,
        want: usize,
    },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::LengthMismatch { left, right } => {
                write!(f, "length mismatch: {left} vs {right}")
            }
            Error::AlphabetMismatch { detail } => write!(f, "alphabet mismatch: {detail}"),
            Error::CoordOutOfRange {
                position,
                component,
                value,
                size,
            } => write!(
                f,
                "symbol {position}, component {component}: coordinate {value} outside 0..{size}"
            ),
            Error::BadComponentSize { component, size } => {
                write!(f, "component {component}: size {size} not in 1..=65536")
            }
            Error::ScriptPositionOutOfRange { position, len } => {
                write!(
                    f,
                    "script position {position} out of range for length {len}"
                )
            }
            Error::ScriptNotCanonical { detail } => write!(f, "script not canonical: {detail}"),
            Error::ParityViolation { len_a, len_b, ed } => write!(
                f,
                "lcs_from_ed({len_a}, {len_b}, {ed}): sum minus distance is odd or negative"
            ),
            Error::EdgeOutOfRange {
                edge,
                left_len,
                right_len,
            } => write!(
                f,
                "edge ({}, {}) outside parts of size ({left_len}, {right_len})",
                edge.0, edge.1
            ),
            Error::MatchedSymbolsDiffer { left, right } => {
                write!(f, "matched pair ({left}, {right}) joins unequal symbols")
            }
            Error::MatchingNotMonotone { at } => {
                write!(f, "matching not strictly increasing at pair {at}")
            }
            Error::ParamOutOfRange {
                name,
                value,
                expected,
            } => {
                write!(f, "{name} = {value} outside {expected}")
            }
            Error::IterationCapExceeded { what, cap, hint } => {
                write!(f, "{what}: gave up after {cap} iterations ({hint})")
            }
            Error::SyncViolation { i, j, k, ed } => write!(
                f,
                "interval property violated at (i,j,k)=({i},{j},{k}): ed={ed}"
            ),
            Error::ListCapExceeded { block, got, cap } => write!(
                f,
                "block {block}: decoder returned {got} candidates, codebook cap is {cap}"
            ),
            Error::EngineFailure { round, detail } => {
                write!(f, "edit-distance engine failed in round {round}: {detail}")
            }
            Error::BlockDecodeFailure { block, detail } => {
                write!(f, "block {block}: {detail}")
            }
            Error::RecordMismatch { detail } => write!(f, "corruption record mismatch: {detail}"),
            Error::SchemeInfeasible { detail } => write!(f, "scheme infeasible: {detail}"),
            Error::DecodeFailure { detail } => write!(f, "decode failure: {detail}"),
            Error::MessageLength { got, want } => {
                write!(f, "message length {got}, code dimension {want}")
            }
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
