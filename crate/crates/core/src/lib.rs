//! Exact symbolic engine for the ν-Grassmannian supermanifolds: charts,
//! labels, transition maps, the reduced manifold and the bundle of
//! coordinate matrices, with cocycle verification.

pub mod arith;
pub mod atlas;
pub mod bundle;
pub mod error;
pub mod grassmann;
pub mod linalg;
pub mod reduced;
pub mod supermatrix;
pub mod transitions;
pub mod verify;

pub use arith::{Mono, Poly, Rat, RatFunc};
pub use error::{Error, Result};
pub use grassmann::{NuStructure, OddMask, Parity, SuperElem};
pub use supermatrix::{Alg, Entry, SMatrix, SlotParity};
pub use atlas::{build_label, enumerate_charts, ChartIndex, ChartLabel, Gen, GenKind, GrassSpec, Sym};
pub use transitions::{compose, compute_transition, substitute, TransitionMap};
