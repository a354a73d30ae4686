//! The defining ideal 𝔭₅ of `k[Γ₅]`: generator catalogs and their
//! verification through `dim k[x]/(J + (x₁)) = a`.

pub mod catalog;
pub mod gastinger;
pub mod groebner;
pub mod monomial;

pub use catalog::{
    generator_catalog, generator_catalog_variant, homogeneity_check, BinomialGenerator, Catalog,
    CatalogKind, CatalogVariant,
};
pub use gastinger::{
    gastinger_dimension, gastinger_verify, gastinger_verify_variant, gastinger_verify_with,
    Adjudication, DropOne, GastingerReport, VariantOutcome,
};
pub use groebner::{buchberger, GroebnerBasis, Polynomial};
pub use monomial::{Dimension, ExponentVector, MonomialIdealBasis, MonomialOrder, NVARS};
