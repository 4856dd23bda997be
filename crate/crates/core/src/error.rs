use core::fmt;

/// Errors reported by the core library.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Inverse of the zero element requested.
    ZeroInverse,
    /// A field element symbol other than `0`, `1`, `w`, `w2`.
    ParseElement,
    /// Two vectors of different lengths were combined.
    LengthMismatch { left: usize, right: usize },
    /// Matrix shapes do not fit together.
    ShapeMismatch,
    /// Determinant of a non-square matrix.
    NotSquare { rows: usize, cols: usize },
    /// A generator matrix whose rows are linearly dependent.
    RankDeficient { rows: usize, rank: usize },
    /// An operation defined only for two-dimensional codes.
    NotDimensionTwo { k: usize },
    /// Code length below 2, where no `[n, 2]` code exists.
    LengthTooSmall { n: usize },
    /// The tuple does not satisfy `1 + a2 + a3 + a4 + a5 = d`.
    WeightNormalization { expected: i64, found: i64 },
    /// The tuple carries zero columns (`a0 > 0`) where none are allowed.
    ZeroColumnsPresent { a0: u32 },
    /// `move_add_row` requires `a3 >= 1`.
    NonPositiveA3,
    /// `move_swap_rows` requires `1 + a1 + a3 + a4 + a5 = d`.
    SecondRowWeight { expected: i64, found: i64 },
    /// A coordinate of an a-tuple would be negative.
    NegativeEntry { index: usize, value: i64 },
    /// A multiplicity vector spanning fewer than two projective points.
    DegenerateMultVector,
    /// Verifier range below the smallest supported maximum length.
    RangeTooSmall { n_max: usize, min: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ZeroInverse => write!(f, "zero has no multiplicative inverse"),
            Error::ParseElement => {
                write!(f, "invalid GF(4) element; expected one of 0, 1, w, w2")
            }
            Error::LengthMismatch { left, right } => {
                write!(f, "vector length mismatch: {left} vs {right}")
            }
            Error::ShapeMismatch => write!(f, "matrix shapes are incompatible"),
            Error::NotSquare { rows, cols } => {
                write!(f, "determinant needs a square matrix, got {rows}x{cols}")
            }
            Error::RankDeficient { rows, rank } => {
                write!(f, "generator matrix has {rows} rows but rank {rank}")
            }
            Error::NotDimensionTwo { k } => write!(f, "expected a code of dimension 2, got {k}"),
            Error::LengthTooSmall { n } => write!(
                f,
                "length {n} is too small: no [n, 2] code exists for n < 2 (in particular n = 1)"
            ),
            Error::WeightNormalization { expected, found } => {
                write!(f, "first row weight 1 + a2 + a3 + a4 + a5 = {found} but d = {expected}")
            }
            Error::ZeroColumnsPresent { a0 } => {
                write!(f, "tuple has a0 = {a0}, expected no zero columns")
            }
            Error::NonPositiveA3 => write!(f, "move requires a3 >= 1"),
            Error::SecondRowWeight { expected, found } => {
                write!(f, "second row weight 1 + a1 + a3 + a4 + a5 = {found} but d = {expected}")
            }
            Error::NegativeEntry { index, value } => {
                write!(f, "entry a{index} = {value} is negative")
            }
            Error::DegenerateMultVector => {
                write!(f, "multiplicity vector does not span two projective points")
            }
            Error::RangeTooSmall { n_max, min } => {
                write!(f, "n_max = {n_max} is below the minimum {min}")
            }
        }
    }
}

impl core::error::Error for Error {}
