//! Batch front end for the exact multigrading toolkit: file formats, job
//! dispatch and deterministic reports.

pub mod error;
pub mod formats;
pub mod report;
pub mod run;
pub mod seed;
