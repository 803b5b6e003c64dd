//! Rectangular groupoids and their three equivalent faces: P1 arrays,
//! red/green graph pairs with unique two-step paths, and 0/1 matrix pairs
//! whose product is the all-ones matrix.
//!
//! Everything is 0-based: an order-`n` structure lives on `0..n`, and
//! structures on pairs `(a, b)` are flattened to `a * m + b`.

pub mod construct;
pub mod enumerate;
mod error;
pub mod fixtures;
mod graph;
mod group;
mod groupoid;
pub mod isotopy;
mod matrix;
mod partial;
mod partition;
mod perm;
pub mod properties;
pub mod transform;

pub use error::{Error, Result};
pub use graph::GraphPair;
pub use group::FiniteGroup;
pub use groupoid::{make_groupoid, Groupoid, MAX_ORDER};
pub use matrix::BoolMatrix;
pub use partial::PartialArray;
pub use partition::{Partition, PartitionSystem};
pub use perm::{IsotopyTriple, LexPermutations, Mapping, Permutation, Transversal};
