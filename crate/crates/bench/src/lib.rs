//! Benchmark-only crate; see `benches/contextuality.rs`.
