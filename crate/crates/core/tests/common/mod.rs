#![allow(dead_code)]

use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use scldpc_core::{DifferenceTable, PolyMatrix, SyndromeFormer};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_row(rng: &mut ChaCha8Rng, width: u32, w: u32) -> Vec<u32> {
    let mut row: Vec<u32> = index::sample(rng, width as usize, w.min(width) as usize)
        .into_iter()
        .map(|x| x as u32)
        .collect();
    row.sort_unstable();
    row
}

/// Random syndrome former with `a <= max_a`, `c <= max_c`, `L_h <= max_lh`
/// and row weights in `2..=4`. `L_h` is tight.
pub fn random_hs(rng: &mut ChaCha8Rng, max_a: u32, max_c: u32, max_lh: u32) -> SyndromeFormer {
    let c = rng.random_range(1..=max_c);
    let a = rng.random_range(1..=max_a);
    let width = rng.random_range(2..=max_lh);
    let rows = (0..a)
        .map(|_| {
            let w = rng.random_range(2..=4u32);
            random_row(rng, width, w)
        })
        .collect();
    SyndromeFormer::tight(c, rows).unwrap()
}

/// Same distribution conditioned on no 4-cycles.
pub fn random_hs_4free(
    rng: &mut ChaCha8Rng,
    max_a: u32,
    max_c: u32,
    max_lh: u32,
) -> SyndromeFormer {
    loop {
        let hs = random_hs(rng, max_a, max_c, max_lh);
        if DifferenceTable::from_hs(&hs).is_four_cycle_free() {
            return hs;
        }
    }
}

/// Canonical `H_s` whose width is a whole number of column blocks.
pub fn random_block_hs(
    rng: &mut ChaCha8Rng,
    max_a: u32,
    max_c: u32,
    max_mh: u32,
) -> SyndromeFormer {
    loop {
        let c = rng.random_range(1..=max_c);
        let a = rng.random_range(1..=max_a);
        let l_h = c * (rng.random_range(0..=max_mh) + 1);
        let rows: Vec<Vec<u32>> = (0..a)
            .map(|_| {
                let w = rng.random_range(1..=4u32);
                random_row(rng, l_h, w)
            })
            .collect();
        if let Ok(hs) = SyndromeFormer::new(c, l_h, rows) {
            return hs;
        }
    }
}

/// Random `c × a` polynomial matrix with at least one term per column.
pub fn random_poly(rng: &mut ChaCha8Rng, max_a: u32, max_c: u32, max_exp: u32) -> PolyMatrix {
    loop {
        let c = rng.random_range(1..=max_c) as usize;
        let a = rng.random_range(1..=max_a) as usize;
        let mut entries = vec![vec![Vec::new(); a]; c];
        for row in &mut entries {
            for e in row.iter_mut() {
                if rng.random_bool(0.6) {
                    let k = rng.random_range(1..=3u32);
                    *e = random_row(rng, max_exp + 1, k);
                }
            }
        }
        if (0..a).all(|j| (0..c).any(|r| !entries[r][j].is_empty())) {
            return PolyMatrix::new(entries).unwrap();
        }
    }
}
