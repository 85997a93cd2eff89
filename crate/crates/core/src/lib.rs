//! Hamiltonian cycles in balanced bipartite digraphs under Ore-type degree
//! conditions.
//!
//! The engine in [`hamilton`] either returns a Hamiltonian cycle or a pair of
//! vertices whose degree sum shows that the condition
//! `d⁺(u) + d⁻(v) ≥ a + 2` (for non-adjacent `u`, `v` in opposite classes)
//! fails. A witness does not mean the digraph is non-Hamiltonian: the
//! condition is sufficient, not necessary.
//!
//! [`oracle`] provides brute-force ground truth and the exhaustive
//! verification campaigns; [`generators`] builds the extremal families.

pub mod compatible;
pub mod conditions;
pub mod error;
pub mod generators;
pub mod graph;
pub mod hamilton;
pub mod matching;
pub mod oracle;

pub use conditions::{check, ConditionReport, ConditionSpec, Threshold, Violation};
pub use error::{Error, Result};
pub use graph::{BipartiteDigraph, DegreePair, Side, Vertex, VertexSet};
pub use hamilton::{
    find_hamiltonian, run_engine, scan_witness, verify_hamiltonian_cycle, EngineMode, Outcome, Witness, WitnessKind,
};
pub use matching::{complete_matching, hall_to_witness, HallViolator, Matching, MatchingResult};
