//! Criterion benchmarks for `fliess-core`; run with `cargo bench -p fliess-bench`.
