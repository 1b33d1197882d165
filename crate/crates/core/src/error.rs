use thiserror::Error;

use crate::rootdata::CartanType;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unsupported root system {0}")]
    UnsupportedType(CartanType),
    #[error("{0} has no root datum (degenerate rank)")]
    DegenerateType(CartanType),
    #[error("Weyl group of {ty} has order {order}, above the enumeration cap {cap}")]
    WeylGroupTooLarge {
        ty: CartanType,
        order: u64,
        cap: u64,
    },
    #[error("weight has {got} coordinates but {ty} has rank {rank}")]
    RankMismatch {
        ty: CartanType,
        rank: usize,
        got: usize,
    },
    #[error("incompatible systems {left} and {right}")]
    IncompatibleSystems { left: CartanType, right: CartanType },
    #[error("weight {0:?} is not dominant")]
    NotDominant(Vec<i64>),
    #[error("weight difference {0:?} is not in the root lattice")]
    NotInRootLattice(Vec<i64>),
    #[error("coefficient of q^{exponent} is negative ({value})")]
    NegativeCoefficient { exponent: u32, value: String },
    #[error("partition sizes differ: {shape} vs {content}")]
    SizeMismatch { shape: u32, content: u32 },
    #[error("{0:?} is not a partition")]
    NotAPartition(Vec<u32>),
    #[error("tableau is not semistandard: {0}")]
    NotSemistandard(String),
    #[error("inconsistent identification: {0}")]
    Inconsistent(String),
    #[error("matrix is not in SL: determinant {0}")]
    NotSpecialLinear(String),
    #[error("scaling parameter must be nonzero")]
    ZeroScaling,
    #[error("empty sample set")]
    EmptySamples,
    #[error("invalid family descriptor: {0}")]
    InvalidFamily(String),
    #[error("value {0} does not fit the target integer type")]
    Overflow(String),
}
