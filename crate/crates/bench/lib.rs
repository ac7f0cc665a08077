//! Benchmark-only crate; see `benches/garside.rs`.
