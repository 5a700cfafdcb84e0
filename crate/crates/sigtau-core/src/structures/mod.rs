//! Supporting structures for ranking and unranking.

mod inversion;
mod list;
mod locator;

pub use inversion::InversionVector;
pub use list::IndexableList;
pub use locator::StableLocator;
