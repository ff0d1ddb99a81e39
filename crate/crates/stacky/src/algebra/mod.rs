//! Finite groups, finite abelian groups and the integer linear algebra
//! behind them.

pub mod abelian;
pub mod catalog;
pub mod character;
pub mod extension;
pub mod group;
pub mod hom;
pub mod perm;
pub mod snf;
pub mod structure;
pub mod textfmt;

pub use abelian::{abelian_subgroup, AbelianPresentation, AbelianSubgroup, FinAbElement, FinAbGroup};
pub use character::{abelianization, qz, Character, CharacterGroup, Qz};
pub use extension::{cyclic_extension, CyclicExtension};
pub use group::{cyclic, FiniteGroup};
pub use hom::{automorphisms, extend_hom, homomorphisms, is_isomorphic, Automorphisms};
pub use perm::Perm;
pub use snf::{smith_normal_form, IntMatrix, Snf};
pub use structure::{center, centralizer, quotient};
