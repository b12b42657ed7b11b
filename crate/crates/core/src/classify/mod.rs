//! Classification data for simple weight modules: breaks along an orbit,
//! the designated ideal, the support classes `O_α`, the skeleton quiver and
//! its simple modules.

mod breaks;
mod quiver;
mod simples;

use thiserror::Error;

pub use breaks::{detect_breaks, equivalence_check, orbit_shift, BreakInfo, BreakReport, IdealCoordinates};
pub use quiver::{
    bits, quiver_simples, skeleton, Arrow, ArrowKind, Matrix, QuiverPresentation, QuiverRelation, QuiverSimple,
    SkeletonAlgebra,
};
pub use simples::{alphas, enumerate_simples, SimpleModuleDescriptor};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("coordinate {name}_{index} is zero")]
    ZeroCoordinate { name: &'static str, index: usize },
    #[error("mu has {mu} entries and nu has {nu}; both need the same positive length")]
    Shape { mu: usize, nu: usize },
    #[error("the two ideals do not lie in one orbit")]
    NotSameOrbit,
}
