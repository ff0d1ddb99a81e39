//! Exact computations for orbifold and Deligne-Mumford curves.
//!
//! The crate is layered bottom-up:
//!
//! * [`algebra`]: finite groups, finite abelian groups, Smith normal form,
//!   characters, automorphisms and isomorphism testing.
//! * [`fpgroup`]: finitely presented groups, abelianization, homomorphism
//!   counting and Todd-Coxeter coset enumeration.
//! * [`orbifold`]: orbifold curve data, fundamental-group presentations,
//!   the hyperbolic/Euclidean/spherical trichotomy, triangle groups and
//!   footballs.
//! * [`gerbe`]: gerbes over stacky discs and weighted projective lines.
//! * [`twogroup`]: crossed modules, butterflies and group cohomology.
//! * [`wpgl`]: the weighted projective 2-groups and spherical curves.
//! * [`cli`]: the command-line front end.
//!
//! Run `cargo run --example <name>` for a tour; see `examples/`.

pub mod algebra;
pub mod cli;
pub mod error;
pub mod fpgroup;
pub mod gerbe;
pub mod limits;
pub mod orbifold;
pub mod twogroup;
pub mod wpgl;

pub use error::{Error, Result};
pub use limits::Limits;
