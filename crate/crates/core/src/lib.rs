//! Generalized domination and packing functions on graphs.
//!
//! An instance is a graph with a quota `k` and a cap `u` per vertex. A
//! dominating function satisfies `f(v) <= u(v)` and `f(N[v]) >= k(v)` and is
//! minimized; a packing function satisfies `f(N[v]) <= k(v)` instead and is
//! maximized. The crate provides the instance model, value-preserving
//! transforms between instance families, elimination orderings, an exact
//! linear-time greedy solver for strongly chordal graphs and an exhaustive
//! oracle.
//!
//! Everything is generic over an unsigned [`Weight`]; the `*U32` and `*U64`
//! aliases fix the scalar.

mod error;
pub mod format;
pub mod generate;
mod graph;
mod instance;
mod labelled;
pub mod ordering;
mod scalar;
pub mod selftest;
pub mod solve;
pub mod transform;

pub use error::{Error, Result};
pub use graph::{Graph, VertexMap};
pub use instance::{Assignment, Constraint, GenInstance, Infeasibility, Sense};
pub use labelled::{Label, LabelLift, LabelledInstance};
pub use ordering::{EliminationOrder, OrderKind, Search, SearchConfig, Violation};
pub use scalar::Weight;
pub use solve::{BruteForce, GreedyOutcome, GreedyPacker, Method, Optimum, Solution, SolveOptions};
pub use transform::{LabelledReduction, Lift, Reduction, ValueMap};

pub type InstanceU32 = GenInstance<u32>;
pub type InstanceU64 = GenInstance<u64>;
pub type AssignmentU32 = Assignment<u32>;
pub type AssignmentU64 = Assignment<u64>;
pub type ReductionU32 = Reduction<u32>;
pub type ReductionU64 = Reduction<u64>;
