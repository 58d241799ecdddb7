//! File formats, reports and the verification harness built on
//! [`prefrat_core`].

pub mod analyze;
pub mod format;
pub mod report;
pub mod verify;
