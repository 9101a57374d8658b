//! Criterion benchmarks for the enumeration oracle, the cut-and-join
//! recursion and the series kernels. See `benches/kernels.rs`.
