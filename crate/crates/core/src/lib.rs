//! Matching polynomials and matching energy of small simple graphs.
//!
//! The crate is organised bottom-up:
//!
//! * [`graph`], [`graph6`], [`canon`]: bitset graphs, the graph6 codec and
//!   exact canonical labelling.
//! * [`matching`]: k-matching counts, matching polynomials, the subdivision
//!   recurrence and the componentwise quasi-order.
//! * [`energy`]: matching energy by root isolation and by quadrature.
//! * [`families`]: named graph families and recurrence-defined count vectors.
//! * [`asymptotics`]: closed-form kernels comparing the two maximal
//!   tricyclic families for large orders.
//! * [`search`]: isomorph-free enumeration, matching-equivalence classes and
//!   extremal verification reports.

pub mod asymptotics;
pub mod canon;
pub mod energy;
pub mod error;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod matching;
pub mod poly;
pub mod search;

pub use asymptotics::{k0_polynomial, limit_ratio_integral, theorem4_verdict, FixedPolynomials};
pub use canon::{canonical_form, canonical_labelling, CanonicalForm};
pub use energy::{log_poly_eval, me_difference, me_quadrature, me_roots, EnergyResult, Method, QuadratureSettings};
pub use error::{Error, Result};
pub use families::{family_graph, family_me, family_mvector, FamilyId, Max10};
pub use graph::{EdgeRef, Graph, MAX_VERTICES};
pub use graph6::{from_graph6, to_graph6};
pub use matching::{
    insert_recurrence, match_vector, matching_polynomial, quasi_compare, MatchVector, MatchingPolynomial, QuasiOrdering,
};
pub use search::{class_report, enumerate, verify_claim, Claim, ClaimReport, ClassReport, CorpusSpec, SearchOptions};

/// Version tag written into every JSON report.
pub const REPORT_SCHEMA_VERSION: u32 = 1;

/// Rounds to the four decimals used for display.
pub fn round4(x: f64) -> f64 {
    (x * 1e4).round() / 1e4
}
