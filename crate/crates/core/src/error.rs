use thiserror::Error;

use crate::partition::Cell;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("partition parts must be weakly decreasing (part {index} is smaller than part {})", index + 1)]
    NotWeaklyDecreasing { index: usize },
    #[error("partition part {index} is zero")]
    ZeroPart { index: usize },
    #[error("partition part {index} is negative")]
    NegativePart { index: usize },
    #[error("cannot parse partition from {0:?}")]
    ParsePartition(String),
    #[error("cannot parse frame from {0:?} (expected RxC)")]
    ParseFrame(String),
    #[error("frame dimensions must lie in 1..={max}, got {rows}x{cols}")]
    InvalidFrame { rows: u32, cols: u32, max: u32 },
    #[error("partition does not fit frame")]
    DoesNotFit,
    #[error("box {0} lies outside the frame")]
    CellOutsideFrame(Cell),
    #[error("box {0} is not addable")]
    NotAddable(Cell),
    #[error("tableau has a hole at {0}")]
    TableauHasHole(Cell),
    #[error("entries do not match the shape: {0}")]
    ShapeMismatch(String),
    #[error("filling is not semistandard")]
    NotSemistandard,
    #[error("tableau entry bound {found} does not match frame rows {expected}")]
    EntryBoundMismatch { expected: u32, found: u32 },
    #[error("polynomial division leaves a nonzero remainder")]
    NonExactDivision,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("partition has {length} rows but the entry bound is {bound}")]
    InvalidBound { length: usize, bound: u32 },
    #[error("polynomial is not a product of factors q^e - 1")]
    NotAGeometricProduct,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
