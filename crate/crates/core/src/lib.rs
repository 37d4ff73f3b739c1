pub mod build;
pub mod catalog;
pub mod codes;
pub mod decomp;
pub mod duality;
pub mod error;
pub mod group;
pub mod ideal;
pub mod injective;
pub mod module;
pub mod ring;

pub use build::{build_ring, build_ring_with_cap, GroupSpec, RingExpr};
pub use catalog::{standard_catalog, CatalogEntry};
pub use error::{Error, Result};
pub use ring::{Elem, FiniteRing};
