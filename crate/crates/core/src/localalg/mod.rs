//! Local algebra at the origin: standard bases, quotient dimensions,
//! membership, multiplication operators and a truncation oracle.

pub mod linalg;
mod lpoly;
pub mod macaulay;
pub mod operator;
pub mod order;
pub mod sbasis;

use thiserror::Error;

pub use macaulay::{macaulay_dim, macaulay_stable_dim, MacaulayRun};
pub use operator::{kernel_rank, mult_operator, QuotientOperator};
pub use order::MonomialOrder;
pub use sbasis::{
    local_colength, normal_form, quotient_dim, standard_basis, QuotientDim, StandardBasis,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LocalAlgError {
    #[error("no generators given")]
    NoGenerators,
    #[error("all generators are zero")]
    AllZero,
    #[error("generators mix arities {expected} and {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("the quotient is infinite-dimensional")]
    InfiniteQuotient,
    #[error("truncated dimension did not stabilize up to degree {cap} (trace {trace:?})")]
    NotStabilized { cap: u32, trace: Vec<(u32, usize)> },
}
