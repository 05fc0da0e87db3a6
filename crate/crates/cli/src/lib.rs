//! Library half of the `potentia` binary: scenario file handling, report
//! construction and rendering, and DOT export. Kept as a library so tests
//! can drive the same code paths as the binary.

pub mod commands;
pub mod dot;
pub mod report;
pub mod scenario;
