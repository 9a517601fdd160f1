//! Noncommutative words, linear combinations, and the normal-ordering engine.

mod algebra;
mod element;
mod generator;
mod probe;

pub use algebra::{Algebra, Family, Relation, Strategy, DEFAULT_REWRITE_CAP, REWRITE_CAP_ENV};
pub use element::NCElement;
pub use generator::{is_normal, word_to_string, Gen, GenKey, Kind, Word};
pub use probe::{associativity_probe, confluence_probe};
