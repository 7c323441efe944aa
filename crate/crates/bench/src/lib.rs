//! Criterion benchmarks for betamat live under `benches/`.
