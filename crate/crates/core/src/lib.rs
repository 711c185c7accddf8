//! Orthogonal Fano planes, oriented Fano planes, triangular embeddings of K7,
//! the Kirkman system STS(15) #61 and the octonion multiplication table, with
//! exhaustive searches that compute each object's symmetry group.

pub mod embed;
pub mod group;
pub mod kirkman15;
pub mod octonion;
pub mod orient;
pub mod perm;
pub mod steiner;

pub use embed::RotationSystem;
pub use group::{Order21Kind, PermGroup};
pub use kirkman15::{ExtendedPoint, Resolution};
pub use octonion::Octonion;
pub use orient::{Orientation, OrientedFano};
pub use perm::Permutation;
pub use steiner::{Triple, TripleSystem};
