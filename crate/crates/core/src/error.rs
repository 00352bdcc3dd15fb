use core::fmt;

/// Errors raised by the code model and the sequence rewrites.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CodeError {
    /// A transition element is zero or larger than the dimension.
    ElementOutOfRange {
        position: usize,
        element: u8,
        dimension: usize,
    },
    /// The dimension is zero or exceeds [`crate::MAX_DIMENSION`].
    DimensionOutOfRange(usize),
    /// Fewer than four transitions, or an odd count.
    InvalidLength(usize),
    /// The walk does not return to the all-zeros vertex.
    NotClosed,
    /// Vertices `first` and `second` coincide.
    NotSimple {
        first: usize,
        second: usize,
    },
    WidthMismatch {
        left: usize,
        right: usize,
    },
    IndexOutOfRange {
        index: usize,
        len: usize,
    },
    /// The sequence is shorter than `2(k+1)`.
    LengthTooShort {
        len: usize,
        required: usize,
    },
    OddLength(usize),
    /// The input code does not have the spread it claims.
    InputNotVerified {
        spread: usize,
    },
    /// The rewritten code failed its own verification.
    PostVerificationFailed {
        spread: usize,
    },
}

impl fmt::Display for CodeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CodeError::ElementOutOfRange {
                position,
                element,
                dimension,
            } => write!(
                f,
                "transition element {element} at position {} is outside 1..={dimension}",
                position + 1
            ),
            CodeError::DimensionOutOfRange(n) => {
                write!(f, "dimension {n} is outside 1..={}", crate::MAX_DIMENSION)
            }
            CodeError::InvalidLength(len) => {
                write!(
                    f,
                    "transition sequence of length {len} is not an even length >= 4"
                )
            }
            CodeError::NotClosed => write!(f, "transition sequence does not close the cycle"),
            CodeError::NotSimple { first, second } => write!(
                f,
                "vertices {} and {} coincide; the cycle is not simple",
                first + 1,
                second + 1
            ),
            CodeError::WidthMismatch { left, right } => {
                write!(f, "vertex widths differ ({left} vs {right})")
            }
            CodeError::IndexOutOfRange { index, len } => {
                write!(
                    f,
                    "vertex index {index} out of range for cycle of length {len}"
                )
            }
            CodeError::LengthTooShort { len, required } => {
                write!(
                    f,
                    "code length {len} is too short (need at least {required})"
                )
            }
            CodeError::OddLength(len) => write!(f, "code length {len} is odd"),
            CodeError::InputNotVerified { spread } => {
                write!(f, "input code does not have spread {spread}")
            }
            CodeError::PostVerificationFailed { spread } => {
                write!(f, "constructed code failed spread {spread} verification")
            }
        }
    }
}

impl core::error::Error for CodeError {}
