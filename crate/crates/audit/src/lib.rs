//! Expression language, queries and the corpus audit for `smul`.

pub mod claims;
pub mod corpus;
pub mod dsl;
pub mod query;
pub mod report;

pub use claims::{run_audit, AuditConfig};
pub use dsl::{parse_ideal, parse_ring, parse_set, Diagnostic};
pub use report::AuditReport;
