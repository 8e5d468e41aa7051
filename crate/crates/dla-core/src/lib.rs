//! Computational algebra for the dynamical Lie algebras (DLAs) generated by
//! the Pauli-string terms of 2-local spin-chain Hamiltonians.
//!
//! The library answers three kinds of question exactly, with no floating
//! point anywhere:
//!
//! - **Closure**: given Hamiltonian terms as Pauli strings, what is the
//!   smallest Lie algebra containing them? Since any two Pauli strings
//!   either commute or anticommute, such an algebra is spanned by the
//!   Pauli strings it contains, and [`close`] computes that basis by a
//!   worklist fixpoint over a bit-packed symplectic representation.
//! - **Structure**: what are its stabilizer, center, commuting ideals,
//!   frustration graph, involution fixed points ([`structure`])?
//! - **Classification**: for the named two-site generator families tiled
//!   over open, periodic, or all-to-all chains ([`catalog`]), do the
//!   computed closures match the known classification of their isomorphism
//!   classes ([`classify`])? The two-site inventory itself — 202
//!   subalgebras of su(4) in 36 symmetry orbits — is recomputed from
//!   scratch by [`orbits::scan_power_sets`].
//!
//! ```
//! use dla_core::{close, Topology};
//! use dla_core::catalog::{catalog_generators, extend};
//!
//! // the XY + XZ chain on 4 sites closes to sp(4), dimension 36
//! let gens2 = catalog_generators("a9".parse()?);
//! let gens = extend(&gens2, 4, Topology::Open)?;
//! assert_eq!(close(&gens)?.dimension(), 36);
//! # Ok::<(), Box<dyn std::error::Error>>(())
//! ```

pub mod catalog;
pub mod classify;
pub mod dla;
pub mod gf2;
pub mod oracle;
pub mod orbits;
pub mod pauli;
pub mod structure;

pub use catalog::{FamilyId, FamilyKind, ModelSpec, Topology};
pub use dla::{close, close_with_caps, Caps, DlaBasis};
pub use pauli::{Letter, PauliString, Phase, SignedPauli};
