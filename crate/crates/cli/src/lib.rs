//! File format and report types for the `hopfheap` command-line tool.

pub mod format;
pub mod reportfile;
