//! Benchmarks for `confocal-core` live under `benches/`.
