//! Verification harness: spec files, oracles, seeded suites and reports.

pub mod instances;
pub mod oracle;
pub mod report;
pub mod spec_file;
pub mod suites;

pub use oracle::oracle_max_subfiltration;
pub use report::{Check, Record, Report, REPORT_FORMAT};
pub use spec_file::{parse_spec, parse_spec_str, SpecFile};
pub use suites::{
    run_suite, verify_plain_adjunction, verify_scf_adjunction, verify_top_adjunction, SUITES,
};
