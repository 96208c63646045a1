//! Shared inputs for the benchmarks.

use scldpc_core::{known, SyndromeFormer};

/// The reference codes as syndrome formers, keyed by name.
pub fn reference_codes() -> Vec<(&'static str, SyndromeFormer)> {
    known::all()
        .into_iter()
        .map(|k| {
            (
                k.name,
                k.matrix
                    .to_syndrome_former()
                    .expect("reference codes are valid"),
            )
        })
        .collect()
}

/// Girth-8 search cases `(a, c, w)` that finish in milliseconds.
pub const SMALL_G8: [(u32, u32, u32); 4] = [(4, 1, 2), (6, 2, 2), (5, 3, 2), (4, 3, 3)];
