//! Exact solver for Split Vertex Deletion.
//!
//! Given a graph `G` and a budget `k`, decide whether deleting at most `k`
//! vertices leaves a split graph (a graph whose vertices partition into a
//! clique and an independent set), and produce the deletion set plus a split
//! certificate when feasible.
//!
//! The main engine enumerates a quasipolynomial family of vertex
//! bipartitions with the guarantee that every clique/independent-set pair of
//! the target solution is covered by some member; for each candidate
//! bipartition the residual problem is a plain Vertex Cover instance handed
//! to a branch-and-reduce solver. A 5-way branching engine over forbidden
//! induced subgraphs (2K2, C4, C5) and small brute-force oracles back every
//! claim in the test suites.
//!
//! Crate layout:
//! - [`graph`]: immutable bitset graphs, parsing, induced/complement/union.
//! - [`split`]: split-graph recognition, certificates, forbidden witnesses.
//! - [`partition`]: the bipartition family generator and its bounds.
//! - [`vc`]: the pluggable Vertex Cover black box.
//! - [`kernel`]: hitting-set style preprocessing of SVD instances.
//! - [`solver`]: the end-to-end pipelines (partition, baseline, reduction).
//! - [`testkit`]: brute-force oracles and reproducible instance generators.
//!
//! With the default `parallel` feature the per-partition search fans out
//! over a rayon pool; without it every code path is sequential.

pub mod bitset;
pub mod graph;
pub mod kernel;
pub mod partition;
pub mod report;
pub mod solver;
pub mod split;
pub mod testkit;
pub mod vc;

pub use bitset::VertexSet;
pub use graph::{Graph, GraphError, ParseError};
pub use kernel::{KernelResult, KernelStats, KernelVerdict};
pub use partition::{GenStats, GeneratorState, Partition};
pub use report::RunReport;
pub use solver::{
    DeletionSolution, Engine, Parallelism, SolveOptions, SolveOutcome, SolveStats, SvdInstance,
};
pub use split::{ForbiddenKind, ForbiddenWitness, SplitCertificate, SplitRecognition};
pub use testkit::{OracleError, PlantedSpec, RandomInstanceSpec};
pub use vc::{VcInstance, VcKernelOutcome, VcSolution};
