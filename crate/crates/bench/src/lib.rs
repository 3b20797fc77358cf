//! Fixtures shared by the benchmarks.

use qtorus::lattice::IntMatrix;

/// A dense `rows x cols` integer matrix with entries in `[-bound, bound]`,
/// filled from a fixed linear congruential sequence.
pub fn dense_matrix(rows: usize, cols: usize, bound: i64) -> IntMatrix {
    let mut state: u64 = 0x2545_f491_4f6c_dd1d;
    let data: Vec<Vec<i64>> = (0..rows)
        .map(|_| {
            (0..cols)
                .map(|_| {
                    state = state
                        .wrapping_mul(6364136223846793005)
                        .wrapping_add(1442695040888963407);
                    ((state >> 33) % (2 * bound as u64 + 1)) as i64 - bound
                })
                .collect()
        })
        .collect();
    IntMatrix::from_rows(cols, &data)
}
