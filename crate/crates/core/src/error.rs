use alloc::string::String;
use core::fmt;

use crate::reconfig::ScheduleError;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    VertexOutOfRange {
        vertex: usize,
        n: usize,
    },
    SelfLoop {
        vertex: usize,
    },
    DuplicateEdge {
        u: usize,
        v: usize,
    },
    LabelCount {
        expected: usize,
        found: usize,
    },
    /// A constructor or oracle was called outside its domain.
    InvalidParameter(&'static str),
    EmptyNeighbourhood,
    TooFewVertices {
        required: usize,
        found: usize,
    },
    NotATree,
    /// `k^n` (or the number of visited states) would exceed the configured cap.
    CapExceeded {
        candidates: u64,
        cap: u64,
    },
    LengthMismatch {
        expected: usize,
        found: usize,
    },
    ColourOutOfRange {
        colour: usize,
        k: usize,
    },
    TooManyColours {
        k: usize,
    },
    ColourCountMismatch {
        expected: usize,
        found: usize,
    },
    /// The colouring is not proper (PROPER mode) or not strong (STRONG mode).
    InvalidColouring,
    UnknownSymbol(String),
    MixedSymbols,
    EmptyColouring,
    RequiresThreeColours {
        k: usize,
    },
    NotACycle,
    MonochromaticEdge {
        u: usize,
        v: usize,
    },
    Schedule(ScheduleError),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for a graph on {n} vertices")
            }
            Error::SelfLoop { vertex } => write!(f, "self-loop at vertex {vertex}"),
            Error::DuplicateEdge { u, v } => write!(f, "duplicate edge {{{u},{v}}}"),
            Error::LabelCount { expected, found } => {
                write!(f, "expected {expected} vertex labels, found {found}")
            }
            Error::InvalidParameter(msg) => write!(f, "invalid parameter: {msg}"),
            Error::EmptyNeighbourhood => write!(f, "new vertex needs at least one neighbour"),
            Error::TooFewVertices { required, found } => {
                write!(f, "need at least {required} vertices, graph has {found}")
            }
            Error::NotATree => write!(f, "graph is not a tree"),
            Error::CapExceeded { candidates, cap } => {
                if *candidates == u64::MAX {
                    write!(f, "state space exceeds the cap of {cap} candidates")
                } else {
                    write!(f, "{candidates} candidates exceed the cap of {cap}")
                }
            }
            Error::LengthMismatch { expected, found } => {
                write!(f, "colouring has {found} entries, graph has {expected} vertices")
            }
            Error::ColourOutOfRange { colour, k } => {
                write!(f, "colour {colour} is out of range for k = {k}")
            }
            Error::TooManyColours { k } => write!(f, "k = {k} exceeds the supported 255 colours"),
            Error::ColourCountMismatch { expected, found } => {
                write!(f, "colouring uses k = {found}, expected k = {expected}")
            }
            Error::InvalidColouring => write!(f, "colouring is not valid for the requested mode"),
            Error::UnknownSymbol(s) => write!(f, "unknown colour symbol {s:?}"),
            Error::MixedSymbols => write!(f, "colouring mixes letters and integers"),
            Error::EmptyColouring => write!(f, "empty colouring"),
            Error::RequiresThreeColours { k } => {
                write!(f, "cycle weights are defined for k = 3 only, got k = {k}")
            }
            Error::NotACycle => write!(f, "vertex sequence is not a cycle of the graph"),
            Error::MonochromaticEdge { u, v } => {
                write!(f, "edge {{{u},{v}}} is monochromatic")
            }
            Error::Schedule(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for Error {}

impl From<ScheduleError> for Error {
    fn from(e: ScheduleError) -> Self {
        Error::Schedule(e)
    }
}
