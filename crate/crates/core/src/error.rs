use thiserror::Error;

use crate::geometry::{BasisId, RayId};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ray id {0} is outside 1..=24")]
    UnknownRay(u32),
    #[error("basis id {0} is outside 1..=24")]
    UnknownBasis(u32),
    #[error("rays {0:?} do not form one of the 24 bases")]
    NotABasis(Vec<u8>),
    #[error("empty {0} set")]
    Empty(&'static str),
    #[error("ray {0} is not in cell A")]
    NotInCellA(RayId),
    #[error("rays must be one from each inner basis of cell {cell}: got {rays:?}")]
    NotOnePerGroup { cell: char, rays: [u8; 3] },
    #[error("basis {0} is not part of the proof")]
    BasisNotInProof(BasisId),
    #[error("basis {0} is not an outer basis")]
    NotOuter(BasisId),
    #[error("expected an 18-9 proof, got {0}")]
    WrongFamily(String),
    #[error("the instance is colorable, so criticality is undefined")]
    AlreadyColorable,
    #[error("the proof is already ray-critical")]
    AlreadyRayCritical,
    #[error("no critical proof lies inside the ray support")]
    NoReduction,
    #[error("Mermin propagation stalled with {known} of 9 cells known")]
    PropagationStalled { known: usize },
    #[error("invalid seed cells: {0}")]
    InvalidSeed(&'static str),
    #[error("internal consistency check failed: {0}")]
    Consistency(String),
}
