//! File formats, parallel drivers and the command-line frontend for
//! [`sedf_core`].

pub mod cli;
pub mod instance;
pub mod parallel;
pub mod report;
pub mod verdict;
