//! Exact symbolic models of the quantum affine algebras of classical type
//! (A, B, C, D untwisted), built for machine verification:
//!
//! - Drinfeld current presentation and the Chevalley presentation, linked by
//!   the standard isomorphism on the affine node;
//! - level-zero evaluation modules on the crystal-graph vector representations
//!   and their duals;
//! - level-one Fock space realizations (free bosons, a q-Clifford fermion for
//!   type B, lattice group algebras with a two-cocycle);
//! - the level -1/2 realization for type C with its two boson families;
//! - q-vertex operators (intertwiners of type I and II, with respect to both
//!   the evaluation module and its dual), built from one explicit seed
//!   component and propagated along the representation graph.
//!
//! Everything is computed exactly over Q(q^{1/8}); verification suites check
//! defining relations coefficient-by-coefficient on truncated graded bases
//! and report exact pass/fail.

pub mod cartan;
pub mod chevalley;
pub mod cnhalf;
pub mod drinfeld;
pub mod error;
pub mod evalmod;
pub mod fock;
pub mod frac;
pub mod lattice;
pub mod level1;
pub mod linmap;
pub mod par;
pub mod qvertex;
pub mod report;
pub mod runner;
pub mod scalar;
pub mod voexpr;

pub use cartan::{AffineData, Family, WeightVec};
pub use error::Error;
pub use scalar::{q_int, q_int_base, Scalar};
