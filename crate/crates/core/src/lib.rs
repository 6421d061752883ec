//! Exact arithmetic for finite skew braces and the groups attached to them.
//!
//! A skew brace is a set carrying two group operations `+` and `·` that share
//! an identity and satisfy the compatibility law `a·(b+c) = a·b - a + a·c`.
//! Everything here works with dense multiplication tables over the carrier
//! `{0, .., n-1}`, with `0` as the shared identity, so all questions are
//! decidable by finite search and every structural claim can be checked
//! exhaustively.
//!
//! Module map:
//!
//! * [`group`] — validated table groups, subgroup machinery, automorphisms,
//!   holomorphs and regular subgroups, brute-force group enumeration.
//! * [`smallgroups`] — constructions (cyclic, dihedral, dicyclic, products,
//!   semidirect products) and a registry of all groups of a given small order.
//! * [`brace`] — the [`brace::SkewBrace`] type: lambda maps, star products,
//!   ideals, socle/centre, commutator ideal, quotients.
//! * [`trifact`] — the group `G = [K]C` built from a brace, embeddings of
//!   subbraces, and the group-side engines for factorisation theorems.
//! * [`theorems`] — premise-checked verifiers for the structure theorems on
//!   factorised braces.
//! * [`enumerate`] — holomorph-method enumeration plus a brute-force oracle.
//! * [`io`] — the `.brace` text format and on-disk catalogs.
//! * [`ybe`] — the set-theoretic Yang-Baxter map attached to a brace.
//! * [`verify`] — batch verification suites over catalogs, used by the CLI.

pub mod brace;
pub mod enumerate;
pub mod group;
pub mod io;
pub mod smallgroups;
pub mod theorems;
pub mod trifact;
pub mod verify;
pub mod ybe;

pub use brace::{BraceError, SkewBrace, SubbraceFlags};
pub use enumerate::BraceCatalog;
pub use group::{Elem, ElementSet, FiniteGroup, GroupError};
