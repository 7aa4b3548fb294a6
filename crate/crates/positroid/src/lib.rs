//! Exact combinatorics and linear algebra for positroid varieties, Richardson
//! varieties and their totally nonnegative parts.

pub mod affine;
pub mod deodhar;
pub mod error;
pub mod gt;
pub mod linalg;
pub mod perm;
pub mod plabic;
pub mod poly;
pub mod scalar;
pub mod symfunc;
pub mod tableaux;

pub use affine::{
    AffinePerm, BoundedAffinePerm, CyclicRankMatrix, DecoratedPerm, GrassmannNecklace,
};
pub use deodhar::{BsChain, Chamber, Mask, Step};
pub use error::{Error, Result};
pub use gt::{GtPattern, PipeDreamSet};
pub use linalg::{FlagPoint, Matrix, PlueckerVector};
pub use perm::{KChain, Perm, RankMatrix, Word};
pub use plabic::{Color, EdgeWeights, FaceLabeling, PlabicGraph, Trip};
pub use poly::{Poly, UniPoly};
pub use scalar::{Field, Fp, OrderedField, Prime, Ring, Q};
pub use symfunc::{CoeffMap, SymFunc};
pub use tableaux::{Orientation, Partition, Tableau};
