//! Deterministic inputs shared by the kernel benchmarks.

use coinvar::liealg::{random_matrix, sample_dual_b, sample_dual_c};
use coinvar::{DualPointB, DualPointC, Mat, Rng};

/// Coefficient bound of every fixture.
pub const BOUND: i64 = 5;

/// Sizes the benchmarks sweep over.
pub const SIZES: [usize; 4] = [2, 4, 6, 8];

fn rng(tag: u64, n: usize) -> Rng {
    Rng::new(0xbe7c).split(tag).split(n as u64)
}

/// A random integer `n × n` matrix.
pub fn square(n: usize) -> Mat {
    random_matrix(n, n, &mut rng(1, n), BOUND)
}

/// A random point of `b*`.
pub fn glvv_point(n: usize) -> DualPointB {
    sample_dual_b(n, &mut rng(2, n), BOUND)
}

/// A random point of `c*`.
pub fn so_point(n: usize) -> DualPointC {
    sample_dual_c(n, &mut rng(3, n), BOUND)
}

/// A fresh generator for benchmarks that sample internally.
pub fn bench_rng(n: usize) -> Rng {
    rng(4, n)
}
