//! Exact determining numbers and determining indices of finite simple graphs.
//!
//! The crate is `no_std` and only needs `alloc`. It contains:
//!
//! * [`graph`]: an immutable bitset-backed graph type, constructors, graph
//!   operators and the fixture graphs used throughout the test-suites;
//! * [`symmetry`]: automorphism groups via partition backtracking, orbits and
//!   the symmetry predicates (transitivity, edge-flip invariance, twins);
//! * [`determining`]: vertex and edge determining sets, exact search for
//!   `det` and `det'`, and the constructive conversions between the two;
//! * [`families`]: closed-form values for the graph families where they are known;
//! * [`hypercube`]: characteristic matrices of vertex tuples of `Q_n` and the
//!   minimum edge determining set construction for hypercubes;
//! * [`distinguishing`]: brute-force distinguishing number and index.
//!
//! Every search takes a [`Budget`] so callers can bound the work and get an
//! explicit [`Error::BudgetExhausted`] instead of an unbounded run.

#![no_std]

extern crate alloc;

mod bitset;
mod budget;
mod error;
mod search;

pub mod determining;
pub mod distinguishing;
pub mod families;
pub mod graph;
pub mod hypercube;
pub mod perm;
pub mod symmetry;

#[cfg(any(test, feature = "oracle"))]
pub mod oracle;

pub use bitset::BitSet;
pub use budget::Budget;
pub use error::{Error, Result};
pub use graph::{Edge, Graph, NamedGraphId};
pub use perm::Permutation;
