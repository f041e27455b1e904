//! Exact computation of endomorphism monoids and operads of functors.
//!
//! A functor from a finitely presented category into a concrete base
//! (finite sets, or finite-dimensional rational vector spaces) has an
//! endomorphism object: the set or space of natural transformations from
//! the functor to itself, computed here as an equalizer of finite products
//! of hom objects. The crates expose:
//!
//! * [`fincat`]: finitely presented categories with total composition
//!   tables, functors between them, and exhaustive axiom validation;
//! * [`linalg`]: exact rational matrices, canonical (reduced row echelon)
//!   subspaces, kernels, and quotients;
//! * [`vbase`]: the two concrete bases, their hom objects, products,
//!   equalizers, and monoid objects;
//! * [`operad`]: truncated symmetric sequences, convolution and
//!   composition products, and operad axiom validators;
//! * [`ends`]: the equalizer computation itself, endomorphism monoids,
//!   whiskering along functors, and arity-indexed endomorphism operads;
//! * [`rep`]: representations of monoids on functors, the adjunction
//!   between representation categories and endomorphism monoids, and
//!   module-category comparisons;
//! * [`oracle`]: independent brute-force and fraction-free recomputations
//!   used to cross-check the engines.
//!
//! All arithmetic is exact; nothing is floating point.

pub mod error;
pub mod fincat;
pub mod linalg;
pub mod vbase;
pub mod operad;
pub mod ends;
pub mod rep;
pub mod oracle;

pub use error::{Error, Result};

/// Default cap on enumerated search spaces (finite-set natural
/// transformation candidates, exhaustive monoid-map searches).
pub const DEFAULT_GUARD: u128 = 1_000_000;
