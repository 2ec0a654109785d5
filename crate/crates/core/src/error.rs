use core::fmt;

/// Errors raised by dual-number and operator routines.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DualError {
    /// Two operands of a binary operation carry different orders.
    OrderMismatch { left: usize, right: usize },
    /// The requested order is not valid for this operation.
    InvalidOrder { order: usize, reason: &'static str },
    /// Component index outside `0..=order`.
    IndexOutOfRange { index: usize, order: usize },
    /// Negative or otherwise meaningless argument.
    InvalidArgument(&'static str),
    /// Vector or matrix shapes do not conform.
    DimensionMismatch { expected: usize, found: usize },
}

impl fmt::Display for DualError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DualError::OrderMismatch { left, right } => {
                write!(f, "order mismatch: {left} vs {right}")
            }
            DualError::InvalidOrder { order, reason } => {
                write!(f, "invalid order {order}: {reason}")
            }
            DualError::IndexOutOfRange { index, order } => {
                write!(f, "component {index} out of range for order {order}")
            }
            DualError::InvalidArgument(msg) => write!(f, "invalid argument: {msg}"),
            DualError::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
        }
    }
}

impl core::error::Error for DualError {}
