//! Power graphs of finite groups and optimal L(2,1)-labellings.
//!
//! The power graph of a finite group joins two distinct elements whenever
//! one is a positive integer power of the other. An L(2,1)-labelling gives
//! every vertex an integer so that adjacent vertices differ by at least two
//! and vertices at distance two differ at all; the lambda number of a group
//! is the least achievable span. Every power graph needs span at least the
//! group order, with equality exactly when the complement of the
//! identity-free power graph has a Hamiltonian path.
//!
//! This crate makes both sides of that criterion computable:
//!
//! * [`groups`] builds concrete permutation-backed groups from a catalog
//!   (`C6`, `D4`, `Q2`, `E3_2`, `S5`, `A7`, `PSL2_11`, products) or from
//!   raw generators;
//! * [`powergraph`] derives the power graph and its punctured complement;
//! * [`spectrum`] decomposes the group into cyclic classes and length
//!   strata, the structure the construction runs on;
//! * [`hampath`] assembles a Hamiltonian path of the complement
//!   constructively (class interleavings chained across strata) and hosts
//!   the backtracking oracle that independently finds or refutes paths;
//! * [`labelling`] turns paths into span-`|G|` labellings, verifies the two
//!   conditions literally, and settles small or irregular cases with an
//!   exhaustive solver;
//! * [`cli`] exposes all of it as the `pglambda` binary.
//!
//! ```
//! use pglambda::groups::build_from_str;
//! use pglambda::labelling::{lambda_of_group, Method};
//!
//! let (spec, group) = build_from_str("A5").unwrap();
//! let report = lambda_of_group(&group, &spec);
//! assert_eq!(report.lambda, Some(60));
//! assert_eq!(report.method, Method::Constructive);
//! assert!(report.verified);
//! ```
//!
//! The `book/` directory holds a narrative guide; its code blocks are
//! compiled and run as doc-tests below, so the guide stays in sync with
//! the crate.

pub mod arith;
pub mod cli;
pub mod groups;
pub mod hampath;
pub mod labelling;
pub mod powergraph;
pub mod spectrum;

pub use groups::{build_from_str, build_group, close_generators, FiniteGroup, GroupSpec};
pub use hampath::{build_constructive_hamiltonian, HamiltonianPath};
pub use labelling::{lambda_of_group, L21Labelling, LambdaReport};
pub use powergraph::{build_power_graph, punctured_complement, PowerGraph};
pub use spectrum::{cyclic_classes, ClassDecomposition};

// Every code block in the guide runs under `cargo test --doc`.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/groups.md")]
    mod groups {}
    #[doc = include_str!("../../../book/src/power-graphs.md")]
    mod power_graphs {}
    #[doc = include_str!("../../../book/src/classes-and-strata.md")]
    mod classes_and_strata {}
    #[doc = include_str!("../../../book/src/hamiltonian-paths.md")]
    mod hamiltonian_paths {}
    #[doc = include_str!("../../../book/src/labellings.md")]
    mod labellings {}
}
