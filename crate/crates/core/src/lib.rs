//! Matroids given by explicit lists of subsets: the ten standard description
//! kinds, conversions between them, separating families, and search
//! procedures for minors, isomorphism and 3-matroid intersection.

pub mod conversions;
pub mod description;
pub mod error;
pub mod families;
pub mod harness;
pub mod mask;
pub mod ops;
pub mod reductions;
pub mod table;
pub mod validate;
pub mod view;

pub use description::{
    encode_from_oracle, parse, semantically_equal, serialize, size_of, Description,
    DescriptionKind, SizeMeasure,
};
pub use error::{Error, Result};
pub use families::{FamilyId, FamilyTag, MultiGraph};
pub use mask::{GroundSet, SubsetMask, MAX_N};
pub use table::RankTable;
pub use validate::{validate, ValidationReport};
pub use view::{IndependenceOracle, MatroidView};
