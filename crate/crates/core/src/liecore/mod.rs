//! Root-system utilities: weights, dominance, Weyl subgroup enumeration, and
//! exact weight-multiplicity computation.

mod freudenthal;
mod weight;
mod weyl;

pub use freudenthal::{irrep_dimension, weight_multiplicity};
pub use weight::{dominant, KType, RootFamily, Weight};
pub use weyl::{BlockKind, WeylBlock, WeylElement, WeylSubgroupSpec};
