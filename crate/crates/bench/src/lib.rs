//! Benchmark fixtures shared by the criterion targets.

use hodge_core::Partition;

/// All partitions of `d`, the usual workload for per-size benchmarks.
pub fn workload(d: u32) -> Vec<Partition> {
    hodge_core::partition::enumerate_partitions(d)
}
