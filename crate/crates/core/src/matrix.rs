//! Syndrome former `H_s`, polynomial matrix `H(x)`, and finite windows of the
//! semi-infinite parity-check matrix.
//!
//! Conventions used throughout the crate:
//!
//! * `H_s` has `a` rows and `L_h` columns. Row `i` is stored as its support,
//!   a strictly increasing list of column indices.
//! * In the semi-infinite matrix `H`, variable `(t, i)` (column `t·a + i`)
//!   is connected to checks `t·c + l` for every `l` in the support of row `i`.
//!   Checks are rows, variables are columns.

use crate::error::{Error, Result};
use crate::params::{CodeParams, Rate};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SyndromeFormer {
    params: CodeParams,
    rows: Vec<Vec<u32>>,
}

impl SyndromeFormer {
    /// Builds `H_s` from row supports. Rejects unsorted or duplicated
    /// indices, indices outside `[0, L_h)`, empty rows, and non-canonical
    /// widths (last length-`c` column block empty).
    pub fn new(c: u32, l_h: u32, rows: Vec<Vec<u32>>) -> Result<Self> {
        let a =
            u32::try_from(rows.len()).map_err(|_| Error::InvalidParams("too many rows".into()))?;
        let weights = rows.iter().map(|r| r.len() as u32).collect();
        let params = CodeParams::new(a, c, l_h, weights)?;
        for (i, row) in rows.iter().enumerate() {
            if row.windows(2).any(|p| p[0] >= p[1]) {
                return Err(Error::InvalidParams(format!(
                    "row {i} support is not strictly increasing"
                )));
            }
            if let Some(&last) = row.last() {
                if last >= l_h {
                    return Err(Error::InvalidParams(format!(
                        "row {i} index {last} outside [0, {l_h})"
                    )));
                }
            }
        }
        let last_block = params.m_h() * c;
        let max = rows.iter().filter_map(|r| r.last()).max().copied();
        if max.map_or(true, |m| m < last_block) {
            return Err(Error::NonCanonical(format!(
                "no support index in the last column block [{last_block}, {l_h})"
            )));
        }
        Ok(SyndromeFormer { params, rows })
    }

    /// Builds `H_s` with the tight width `L_h = max index + 1`.
    pub fn tight(c: u32, rows: Vec<Vec<u32>>) -> Result<Self> {
        let l_h = rows
            .iter()
            .filter_map(|r| r.last())
            .max()
            .map_or(0, |m| m + 1);
        Self::new(c, l_h, rows)
    }

    pub fn params(&self) -> &CodeParams {
        &self.params
    }

    pub fn a(&self) -> u32 {
        self.params.a()
    }

    pub fn c(&self) -> u32 {
        self.params.c()
    }

    pub fn l_h(&self) -> u32 {
        self.params.l_h()
    }

    pub fn m_h(&self) -> u32 {
        self.params.m_h()
    }

    pub fn v_s(&self) -> u64 {
        self.params.v_s()
    }

    pub fn rate(&self) -> Option<Rate> {
        self.params.rate()
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.rows[i]
    }

    pub fn ones(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// Largest support index plus one; never exceeds `L_h`.
    pub fn tight_width(&self) -> u32 {
        self.rows
            .iter()
            .filter_map(|r| r.last())
            .max()
            .map_or(0, |m| m + 1)
    }

    pub fn to_poly(&self) -> PolyMatrix {
        hs_to_poly(self)
    }

    pub fn expand_window(&self, blocks: u32) -> WindowMatrix {
        expand_window(self, blocks)
    }
}

/// `c × a` matrix over `F_2[x]`; each entry is the sorted set of exponents
/// with a nonzero coefficient. An empty entry is the null term.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PolyMatrix {
    c: u32,
    a: u32,
    entries: Vec<Vec<Vec<u32>>>,
}

impl PolyMatrix {
    /// `entries[i][j]` is `h_{i,j}(x)`; exponents must be strictly increasing.
    pub fn new(entries: Vec<Vec<Vec<u32>>>) -> Result<Self> {
        let c = entries.len();
        let a = entries.first().map_or(0, Vec::len);
        if c == 0 || a == 0 {
            return Err(Error::InvalidParams("H(x) needs c, a >= 1".into()));
        }
        for (i, row) in entries.iter().enumerate() {
            if row.len() != a {
                return Err(Error::InvalidParams(format!(
                    "row {i} has {} entries, expected {a}",
                    row.len()
                )));
            }
            for (j, e) in row.iter().enumerate() {
                if e.windows(2).any(|p| p[0] >= p[1]) {
                    return Err(Error::InvalidParams(format!(
                        "entry ({i},{j}) exponents not strictly increasing"
                    )));
                }
            }
        }
        Ok(PolyMatrix {
            c: c as u32,
            a: a as u32,
            entries,
        })
    }

    /// Convenience constructor for matrices whose entries are all monomials.
    pub fn from_monomials(exponents: &[&[u32]]) -> Result<Self> {
        Self::new(
            exponents
                .iter()
                .map(|row| row.iter().map(|&e| vec![e]).collect())
                .collect(),
        )
    }

    pub fn c(&self) -> u32 {
        self.c
    }

    pub fn a(&self) -> u32 {
        self.a
    }

    pub fn entry(&self, i: usize, j: usize) -> &[u32] {
        &self.entries[i][j]
    }

    pub fn entries(&self) -> &[Vec<Vec<u32>>] {
        &self.entries
    }

    pub fn max_exponent(&self) -> Option<u32> {
        self.entries
            .iter()
            .flatten()
            .filter_map(|e| e.last())
            .max()
            .copied()
    }

    pub fn to_syndrome_former(&self) -> Result<SyndromeFormer> {
        poly_to_hs(self)
    }
}

/// `H_s -> H(x)`: a one at row `j`, column `l` of `H_s` adds `x^(l / c)` to
/// entry `(l mod c, j)`.
pub fn hs_to_poly(hs: &SyndromeFormer) -> PolyMatrix {
    let c = hs.c();
    let mut entries = vec![vec![Vec::new(); hs.a() as usize]; c as usize];
    for (j, row) in hs.rows().iter().enumerate() {
        for &l in row {
            entries[(l % c) as usize][j].push(l / c);
        }
    }
    // Row supports are increasing, so each entry is already sorted.
    PolyMatrix {
        c,
        a: hs.a(),
        entries,
    }
}

/// `H(x) -> H_s`: exponent `e` in entry `(i, j)` puts a one at row `j`,
/// column `e·c + i`. The width is `L_h = c·(1 + max exponent)`.
pub fn poly_to_hs(poly: &PolyMatrix) -> Result<SyndromeFormer> {
    let max = poly.max_exponent().ok_or(Error::EmptyMatrix)?;
    let c = poly.c;
    let rows = (0..poly.a as usize)
        .map(|j| {
            let mut row: Vec<u32> = (0..c as usize)
                .flat_map(|i| poly.entries[i][j].iter().map(move |&e| e * c + i as u32))
                .collect();
            row.sort_unstable();
            row
        })
        .collect();
    SyndromeFormer::new(c, c * (max + 1), rows)
}

/// Leading `c·W × a·W` corner of the semi-infinite parity-check matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WindowMatrix {
    blocks: u32,
    n_checks: usize,
    /// Check indices adjacent to each variable, ascending.
    columns: Vec<Vec<u32>>,
}

impl WindowMatrix {
    pub fn blocks(&self) -> u32 {
        self.blocks
    }

    pub fn n_checks(&self) -> usize {
        self.n_checks
    }

    pub fn n_vars(&self) -> usize {
        self.columns.len()
    }

    pub fn column(&self, var: usize) -> &[u32] {
        &self.columns[var]
    }

    pub fn columns(&self) -> &[Vec<u32>] {
        &self.columns
    }

    pub fn get(&self, check: usize, var: usize) -> bool {
        self.columns[var].binary_search(&(check as u32)).is_ok()
    }

    pub fn ones(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    /// Variables adjacent to each check, ascending.
    pub fn rows(&self) -> Vec<Vec<u32>> {
        let mut rows = vec![Vec::new(); self.n_checks];
        for (v, col) in self.columns.iter().enumerate() {
            for &r in col {
                rows[r as usize].push(v as u32);
            }
        }
        rows
    }

    pub fn to_dense(&self) -> Vec<Vec<u8>> {
        let mut dense = vec![vec![0u8; self.n_vars()]; self.n_checks];
        for (v, col) in self.columns.iter().enumerate() {
            for &r in col {
                dense[r as usize][v] = 1;
            }
        }
        dense
    }
}

/// Expands `blocks` block columns of the semi-infinite matrix. Block column
/// `t` holds `H_s^T` shifted down by `t·c` rows; ones falling below row
/// `c·W` are dropped.
pub fn expand_window(hs: &SyndromeFormer, blocks: u32) -> WindowMatrix {
    let (a, c) = (hs.a(), hs.c());
    let n_checks = (c as usize) * (blocks as usize);
    let mut columns = Vec::with_capacity(a as usize * blocks as usize);
    for t in 0..blocks as usize {
        let base = t * c as usize;
        for row in hs.rows() {
            columns.push(
                row.iter()
                    .map(|&l| base + l as usize)
                    .take_while(|&r| r < n_checks)
                    .map(|r| r as u32)
                    .collect(),
            );
        }
    }
    WindowMatrix {
        blocks,
        n_checks,
        columns,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hs_to_poly_single_binomial() {
        let hs = SyndromeFormer::new(1, 2, vec![vec![0, 1]]).unwrap();
        assert_eq!(hs.to_poly().entry(0, 0), &[0, 1]);
    }

    #[test]
    fn hs_to_poly_splits_levels() {
        let hs = SyndromeFormer::new(2, 4, vec![vec![0, 3]]).unwrap();
        let p = hs.to_poly();
        assert_eq!(p.entry(0, 0), &[0]);
        assert_eq!(p.entry(1, 0), &[1]);
    }

    #[test]
    fn poly_to_hs_binomial() {
        let p = PolyMatrix::new(vec![vec![vec![0, 1]]]).unwrap();
        let hs = p.to_syndrome_former().unwrap();
        assert_eq!(hs.rows(), &[vec![0, 1]]);
        assert_eq!(hs.l_h(), 2);
    }

    #[test]
    fn poly_to_hs_rejects_null_matrix() {
        let p = PolyMatrix::new(vec![vec![vec![], vec![]]]).unwrap();
        assert_eq!(p.to_syndrome_former(), Err(Error::EmptyMatrix));
    }

    #[test]
    fn poly_with_empty_column_is_rejected() {
        let p = PolyMatrix::new(vec![vec![vec![0, 2], vec![]]]).unwrap();
        assert!(matches!(
            p.to_syndrome_former(),
            Err(Error::InvalidParams(_))
        ));
    }

    #[test]
    fn non_canonical_width_is_flagged() {
        // c = 3, L_h = 7: last block is column 6, which is empty.
        let err = SyndromeFormer::new(3, 7, vec![vec![0, 5], vec![1, 2]]).unwrap_err();
        assert!(matches!(err, Error::NonCanonical(_)));
        assert!(SyndromeFormer::new(3, 7, vec![vec![0, 6], vec![1, 2]]).is_ok());
    }

    #[test]
    fn rejects_malformed_rows() {
        assert!(SyndromeFormer::new(1, 4, vec![vec![2, 1]]).is_err());
        assert!(SyndromeFormer::new(1, 4, vec![vec![1, 1, 3]]).is_err());
        assert!(SyndromeFormer::new(1, 4, vec![vec![1, 4]]).is_err());
        assert!(SyndromeFormer::new(1, 4, vec![vec![3], vec![]]).is_err());
    }

    #[test]
    fn window_single_block_is_h0() {
        let hs = SyndromeFormer::new(2, 6, vec![vec![0, 3], vec![1, 5], vec![0, 1, 4]]).unwrap();
        let w = hs.expand_window(1);
        assert_eq!(w.to_dense(), vec![vec![1, 0, 1], vec![0, 1, 1]]);
    }

    #[test]
    fn window_hand_tiling() {
        let hs = SyndromeFormer::new(1, 3, vec![vec![0, 1], vec![0, 2]]).unwrap();
        let w = hs.expand_window(3);
        let expected: Vec<Vec<u8>> = vec![
            vec![1, 1, 0, 0, 0, 0],
            vec![1, 0, 1, 1, 0, 0],
            vec![0, 1, 1, 0, 1, 1],
        ];
        assert_eq!(w.to_dense(), expected);
    }

    #[test]
    fn full_block_columns_carry_row_weights() {
        let hs = SyndromeFormer::new(2, 6, vec![vec![0, 3], vec![1, 5], vec![0, 1, 4]]).unwrap();
        let w = hs.expand_window(6);
        // Block columns t with t·c + L_h <= c·W are complete.
        for t in 0..3usize {
            for i in 0..3usize {
                assert_eq!(w.column(t * 3 + i).len(), hs.row(i).len());
            }
        }
    }
}
