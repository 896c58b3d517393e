//! Classical root systems and a concrete Weyl basis.

mod identities;
pub mod realization;
mod roots;
mod vector;
mod weyl;

pub use identities::{check_weyl_basis, IdentityCheck, IdentityReport};
pub use roots::{Family, Root, RootId, RootSystem};
pub use vector::AlgebraVector;
pub use weyl::{StructureConstantRow, WeylBasis};

use std::sync::Arc;

use crate::error::Result;

/// Root system plus Weyl basis, shared by everything built on top.
pub fn build(family: Family, rank: usize) -> Result<Arc<WeylBasis>> {
    let rs = Arc::new(RootSystem::new(family, rank)?);
    Ok(Arc::new(WeylBasis::new(rs)))
}
