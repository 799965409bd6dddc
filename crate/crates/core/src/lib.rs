//! Exact computational group theory for rigidity of conjugacy-class tuples.
//!
//! Small groups are fully enumerated ([`group`]), split into conjugacy classes
//! ([`conjugacy`]) and given exact character tables ([`chartab`]). Class-tuple
//! solutions of `x_1 ⋯ x_s = 1` are counted both by the Frobenius character
//! sum and by brute force, then decomposed into orbits ([`counting`]).
//! [`qsymbolic`] holds exact arithmetic in an indeterminate `q` for counting
//! identities that hold for every field size at once.

pub mod chartab;
pub mod conjugacy;
pub mod counting;
pub mod cyclotomic;
pub mod element;
pub mod error;
pub mod group;
pub mod groupspec;
pub mod modp;
pub mod qsymbolic;
pub mod so3;

pub use conjugacy::{ClassTable, ConjugacyClass};
pub use cyclotomic::Cyclotomic;
pub use element::{Element, Permutation, PrimeFieldMatrix};
pub use error::{Error, Result};
pub use group::{closure_enumerate, Fingerprint, FiniteGroup, DEFAULT_CAP};
pub use groupspec::{parse_group_spec, GroupSpec};
pub use so3::{omega3_enumerate, so3_enumerate};
