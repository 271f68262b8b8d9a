#![forbid(unsafe_code)]

//! Constructive coloring for the hereditary class of graphs with no induced
//! P7, C4, or C5.
//!
//! Every graph in the class satisfies χ ≤ ⌈11ω/9⌉, and the two structures
//! arising from its decomposition — blowups of the emerald and 7-bracelets —
//! satisfy χ ≤ ⌈11ω/9⌉ and χ ≤ ⌈7ω/6⌉ respectively. This crate builds such
//! colorings explicitly and checks every construction against exact oracles
//! at desk scale.
//!
//! The pieces:
//!
//! * [`graph`], [`freeness`], [`twins`], [`iso`] — graph representation,
//!   class membership with witnesses, true-twin quotients, small-graph
//!   isomorphism, DIMACS I/O.
//! * [`oracle`] — exact clique number, chromatic number, weighted covering,
//!   bipartite matching with a König certificate, clique cutsets, strong
//!   stable sets.
//! * [`structure`] — the emerald catalog, blowup and bracelet specs,
//!   validation, recognition, JSON interchange.
//! * [`colorers`] — the constructive procedures, one per structural case,
//!   each verified against its color budget.
//! * [`generators`] — seeded instance families for tests and benchmarks.

pub mod bitset;
pub mod coloring;
pub mod colorers;
pub mod freeness;
pub mod generators;
pub mod graph;
pub mod iso;
pub mod oracle;
pub mod structure;
pub mod twins;

pub use coloring::{BoundKind, ColorBudget, Coloring};
pub use freeness::{check_freeness, FreenessReport};
pub use graph::Graph;
