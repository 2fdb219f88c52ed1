//! Exact computations with Farey-type tessellations of the disc, the
//! Ptolemy-Thompson group `T` and the Kashaev group `K` acting on them, the
//! embedding `T → K`, and the charge calculus that identifies the
//! dilogarithmic central extension of `T` coming from the Kashaev side.
//!
//! Everything except the quantum-dilogarithm evaluator is exact integer
//! arithmetic; group-theoretic identities are decided, not approximated.

pub mod charge;
pub mod dotted;
pub mod error;
pub mod extensions;
pub mod functor;
pub mod marked;
pub mod matrix;
pub mod ppsl2z;
pub mod qdilog;
pub mod rational;
pub mod sample;
pub mod tess;
pub mod verify;
pub mod words;

pub use error::{DottedError, MarkedError, NumError, PieceError, TessError};
pub use matrix::SL2ZMatrix;
pub use ppsl2z::{Arc, PPSL2ZMap};
pub use rational::{cyclic_less, er, is_farey_edge, mediant, ExtendedRational};
pub use tess::{Edge, Tessellation, Triangle};
