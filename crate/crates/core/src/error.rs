use thiserror::Error;

/// Errors shared across the certification toolkit.
///
/// Everything on the certification path uses checked integer arithmetic;
/// `ArithmeticOverflow` means a product or sum would not fit in 64 bits and
/// the computation was aborted rather than allowed to wrap.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("arithmetic overflow in {0}")]
    ArithmeticOverflow(&'static str),

    #[error("rule has no tail; nothing to certify beyond its finite breakpoints")]
    NoTail,

    #[error("opt table covers n <= {covered} but n = {needed} is required")]
    OptTableTooShort { covered: u64, needed: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;
