//! Sidon sets from the Bose-Chowla construction, the 4-cycle-free Cayley-sum
//! graphs they define, and a certified vertex-excision pipeline.
//!
//! For an odd prime power q the crate builds GF(q^2) explicitly, extracts the
//! q-element Sidon set A = {a : theta^a - theta lies in the base field} in
//! Z_{q^2 - 1}, forms the graph on Z_{q^2 - 1} joining i and j when i + j is
//! in A, and removes a chosen set of q + 1 vertices so that the survivor
//! keeps q^3/2 - q^2 - O(q) edges. Every structural claim along the way
//! (Sidon property, difference-set shape, 4-cycle-freeness, degree laws,
//! edge counts before and after excision) is re-verified by independent
//! brute-force scans; [`certify`] runs the whole chain for one q and returns
//! a [`CertificateReport`], [`sweep`] does a range in parallel.
//!
//! ```
//! let report = sidon_c4::certify(5, &sidon_c4::CertifyOptions::default()).unwrap();
//! assert!(report.all_ok());
//! assert_eq!(report.n_before, 24);
//! assert_eq!(report.n_after, 18);
//! ```

pub mod arith;
pub mod error;
pub mod excision;
pub mod field;
pub mod graph;
pub mod oracle;
pub mod pipeline;
pub mod report;
pub mod sidon;

pub use error::{Error, Result};
pub use excision::{
    abl_bound, build_plan, excise, select_k, write_excised_edge_list, CertificateReport,
    ExcisionPlan, LemmaChecks,
};
pub use field::{FieldElement, FieldParams};
pub use graph::BoseChowlaGraph;
pub use oracle::{
    count_c4, count_c4_naive, count_c4_with_work, scan_common_neighbor_iff, scan_pair_dichotomy,
    scan_triple_lemma, OracleResult,
};
pub use pipeline::{certify, certify_artifacts, sweep, CertifyOptions, PipelineArtifacts};
pub use report::{csv_row, render_csv, render_text, CSV_HEADER};
pub use sidon::{DifferenceSet, SidonSet};
