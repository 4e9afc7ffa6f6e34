//! Criterion benchmarks for `mckay-core`; see `benches/`.
