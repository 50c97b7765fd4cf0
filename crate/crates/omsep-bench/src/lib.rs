//! Criterion benchmarks for the engine live under `benches/`; this crate
//! has no library surface of its own.
