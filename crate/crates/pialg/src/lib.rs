//! Exact-arithmetic computation of Quillen-style cohomology for truncated
//! stable homotopy algebras.
//!
//! The layers, bottom up:
//!
//! * [`int`], [`matrix`], [`snf`] — exact integer linear algebra with
//!   Smith normal form and lattice solvers;
//! * [`group`], [`hom`], [`complex`] — finitely generated abelian groups in
//!   invariant-factor form, their homs, chain complexes and homology;
//! * [`stems`] — the truncated composition ring of stable homotopy groups of
//!   spheres, the coefficient system everything acts through;
//! * [`algebra`] — truncated stable Pi-algebras, modules, maps, loop shift;
//! * [`resolution`] — free graded modules, free resolutions, greedy
//!   construction and chain-map lifting;
//! * [`cohomology`] — cochain complexes `Hom(V, M)`, cohomology of a map via
//!   a mapping cone, the long exact sequence, obstruction reports;
//! * [`toda`] — Toda brackets as cosets with computed indeterminacy;
//! * [`rp2`] — the suspended-projective-plane example used throughout the
//!   tests and shipped with the CLI;
//! * [`doc`] — the JSON input document and name resolution;
//! * [`sweep`] — exhaustive brute-force verification sweeps (data-parallel
//!   with the `parallel` feature).

pub mod int;
pub mod matrix;
pub mod snf;
pub mod group;
pub mod hom;
pub mod complex;
pub mod stems;
pub mod algebra;
pub mod resolution;
pub mod cohomology;
pub mod toda;
pub mod doc;
pub mod sweep;
pub mod rp2;

#[cfg(test)]
pub(crate) mod testutil;

pub use group::{FGAbelianGroup, GroupElement};
pub use hom::AbHom;
pub use int::Int;
pub use matrix::IntMatrix;
pub use snf::{smith_normal_form, SmithDecomposition};
