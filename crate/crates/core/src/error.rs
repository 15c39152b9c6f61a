use thiserror::Error;

use crate::composition::ClassSpec;

/// Errors raised while parsing the text forms.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("empty input; the empty composition is written `-`")]
    Empty,
    #[error("invalid part `{0}`: parts are positive decimal integers")]
    BadPart(String),
    #[error("invalid cut/join letter `{0}`: expected `C` or `J`")]
    BadLetter(char),
    #[error("cut/join word of length {len} does not fit a board of length {board}")]
    BoardMismatch { len: usize, board: u32 },
    #[error("unknown class `{0}`: expected one of all, parts12, odd, min2")]
    UnknownClass(String),
    #[error("unknown origin tag `{0}`")]
    UnknownOrigin(String),
    #[error("unknown map `{0}`: expected one of prop1, prop2, prop3, thm4")]
    UnknownMap(String),
    #[error("unknown identity `{0}`: expected one of eq1, eq2, eq3, eq4, pow2")]
    UnknownIdentity(String),
}

/// Domain errors raised by the library operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("the empty composition has no board")]
    EmptyBoard,
    #[error("composition {composition} is not in class {class}")]
    NotInClass {
        class: ClassSpec,
        composition: String,
    },
    #[error("rank {rank} out of range: {class} has {count} compositions of {n}")]
    RankOutOfRange {
        class: ClassSpec,
        n: u32,
        rank: String,
        count: String,
    },
    #[error("{map} requires n >= {min}, got n = {n}")]
    BelowRange { map: &'static str, n: u32, min: u32 },
    #[error("{map} does not accept origin {origin}")]
    WrongOrigin {
        map: &'static str,
        origin: &'static str,
    },
    #[error("{map}: payload {composition} is not a {class} composition of {expected_total}")]
    BadPayload {
        map: &'static str,
        class: ClassSpec,
        composition: String,
        expected_total: u32,
    },
    #[error("internal invariant violated in {map}: {detail}")]
    Invariant { map: &'static str, detail: String },
    #[error("n = {n} exceeds the materialization bound {bound}")]
    TooLarge { n: u32, bound: u32 },
}

pub type Result<T> = std::result::Result<T, Error>;
