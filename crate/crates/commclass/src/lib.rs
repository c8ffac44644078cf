//! Verification harness, atom record files and command-line front end for
//! [`commclass_core`].

pub mod cli;
pub mod records;
pub mod report;
pub mod scan;
pub mod verify;
