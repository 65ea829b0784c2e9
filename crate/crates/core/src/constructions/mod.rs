//! Building algebras from algebras, and checking maps between them.

pub mod catalog;
mod congruence;
mod extension;
mod morphism;
mod product;

pub use catalog::{catalog, catalog_spec, CatalogAlgebra};
pub use congruence::{
    check_congruence, congruence_closure, enumerate_congruences, quotient, CongruencePartition,
    CongruenceViolation,
};
pub use extension::{
    new_entry_positions, one_point_extension, OnePointExtensions, DEFAULT_EXTENSION_ENTRY_LIMIT,
};
pub use morphism::{
    check_homomorphism, isomorphism_search, HomomorphismCheck, HomomorphismMap, DEFAULT_ISO_LIMIT,
};
pub use product::{
    diagonal_window, product, rule_product, ProductIndex, Tail, WindowedProduct,
    DEFAULT_PRODUCT_LIMIT,
};
