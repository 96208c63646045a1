//! Difference representation of `H_s` and cycle search by signed sums.
//!
//! Every pair of ones at columns `j < j + δ` of row `i` gives a record
//! `δ_{i,j}` with starting level `j mod c` and ending level `(j + δ) mod c`.
//! Walking through variable `(t, i)` from check `t·c + j` to check
//! `t·c + j + δ` adds `δ` to the running check position; walking the other
//! way subtracts it. A closed walk of `l` such steps is a cycle of length
//! `2l` exactly when the signed sum is zero, the levels chain, and no edge
//! of the Tanner graph is used twice. The first two conditions generate
//! candidates; the last is checked on the materialized walk.

use std::collections::HashMap;
use std::fmt;
use std::ops::ControlFlow;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, ParseError, Result};
use crate::matrix::SyndromeFormer;
use crate::parallel;
use crate::tanner::{window_blocks, Girth};

/// Longest cycle length accepted by [`find_cycles`].
pub const CYCLE_CAP: u32 = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Difference {
    pub row: u32,
    pub start_col: u32,
    pub delta: u32,
    pub l_s: u32,
    pub l_e: u32,
}

impl Difference {
    pub fn new(row: u32, start_col: u32, delta: u32, c: u32) -> Self {
        Difference {
            row,
            start_col,
            delta,
            l_s: start_col % c,
            l_e: (start_col + delta) % c,
        }
    }

    pub fn end_col(&self) -> u32 {
        self.start_col + self.delta
    }
}

/// All differences of a syndrome former, in `(row, start_col, delta)` order.
#[derive(Debug, Clone)]
pub struct DifferenceTable {
    c: u32,
    m_h: u32,
    records: Vec<Difference>,
    by_start: HashMap<(u32, u32), Vec<usize>>,
    by_end: HashMap<(u32, u32), Vec<usize>>,
    /// Per level: `(record, sign)` pairs that may continue a chain standing
    /// at that level, sorted by record then sign.
    moves: Vec<Vec<(usize, Sign)>>,
}

impl DifferenceTable {
    pub fn from_hs(hs: &SyndromeFormer) -> Self {
        Self::build(hs.c(), hs.m_h(), hs.rows())
    }

    /// Builds a table from raw row supports (each strictly increasing).
    /// Used for partial matrices during search.
    pub fn from_rows(c: u32, rows: &[Vec<u32>]) -> Self {
        let width = rows
            .iter()
            .filter_map(|r| r.last())
            .max()
            .map_or(1, |m| m + 1);
        Self::build(c, width.div_ceil(c) - 1, rows)
    }

    fn build(c: u32, m_h: u32, rows: &[Vec<u32>]) -> Self {
        let mut records = Vec::new();
        for (i, row) in rows.iter().enumerate() {
            for (k, &j) in row.iter().enumerate() {
                for &j2 in &row[k + 1..] {
                    records.push(Difference::new(i as u32, j, j2 - j, c));
                }
            }
        }
        let mut by_start: HashMap<(u32, u32), Vec<usize>> = HashMap::new();
        let mut by_end: HashMap<(u32, u32), Vec<usize>> = HashMap::new();
        let mut moves = vec![Vec::new(); c as usize];
        for (id, d) in records.iter().enumerate() {
            by_start.entry((d.l_s, d.delta)).or_default().push(id);
            by_end.entry((d.l_e, d.delta)).or_default().push(id);
            moves[d.l_s as usize].push((id, Sign::Plus));
            moves[d.l_e as usize].push((id, Sign::Minus));
        }
        for m in &mut moves {
            m.sort();
        }
        DifferenceTable {
            c,
            m_h,
            records,
            by_start,
            by_end,
            moves,
        }
    }

    pub fn c(&self) -> u32 {
        self.c
    }

    pub fn m_h(&self) -> u32 {
        self.m_h
    }

    pub fn records(&self) -> &[Difference] {
        &self.records
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    /// Records with the given starting level and value.
    pub fn starting(&self, l_s: u32, delta: u32) -> &[usize] {
        self.by_start.get(&(l_s, delta)).map_or(&[], Vec::as_slice)
    }

    /// Records with the given ending level and value.
    pub fn ending(&self, l_e: u32, delta: u32) -> &[usize] {
        self.by_end.get(&(l_e, delta)).map_or(&[], Vec::as_slice)
    }

    /// Pairs of distinct records with equal value and starting level; each
    /// is a cycle of length 4.
    pub fn four_cycle_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (id, d) in self.records.iter().enumerate() {
            for &other in self.starting(d.l_s, d.delta) {
                if other > id {
                    out.push((id, other));
                }
            }
        }
        out.sort();
        out
    }

    /// True when no two records share value and starting level.
    pub fn is_four_cycle_free(&self) -> bool {
        self.by_start.values().all(|v| v.len() == 1)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    fn flip(self) -> Self {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// One step of a materialized walk: enter variable `(block, row)` from
/// check `check_in` and leave it through `check_out`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct WalkStep {
    pub check_in: u64,
    pub block: u64,
    pub row: u32,
    pub check_out: u64,
}

/// A cycle given both as a signed difference chain and as an explicit walk
/// in the semi-infinite matrix, translated so that its leftmost variable
/// lies in block 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CycleWitness {
    pub terms: Vec<(Difference, Sign)>,
    pub walk: Vec<WalkStep>,
}

impl CycleWitness {
    pub fn len(&self) -> u32 {
        2 * self.terms.len() as u32
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn signed_sum(&self) -> i64 {
        self.terms
            .iter()
            .map(|(d, s)| match s {
                Sign::Plus => i64::from(d.delta),
                Sign::Minus => -i64::from(d.delta),
            })
            .sum()
    }

    /// Block of the first variable on the walk.
    pub fn anchor(&self) -> u64 {
        self.walk.first().map_or(0, |s| s.block)
    }

    /// Tanner graph edges `(check, block, row)` in walk order.
    pub fn edges(&self) -> Vec<(u64, u64, u32)> {
        self.walk
            .iter()
            .flat_map(|s| [(s.check_in, s.block, s.row), (s.check_out, s.block, s.row)])
            .collect()
    }

    pub fn report_line(&self) -> String {
        WitnessLine::from(self).to_string()
    }
}

/// Text form of a witness: `length; (row,j,±δ) ...; anchor`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessLine {
    pub length: u32,
    /// `(row, start_col, signed delta)`.
    pub terms: Vec<(u32, u32, i64)>,
    pub anchor: u64,
}

impl From<&CycleWitness> for WitnessLine {
    fn from(w: &CycleWitness) -> Self {
        WitnessLine {
            length: w.len(),
            terms: w
                .terms
                .iter()
                .map(|(d, s)| {
                    let v = i64::from(d.delta);
                    (d.row, d.start_col, if *s == Sign::Plus { v } else { -v })
                })
                .collect(),
            anchor: w.anchor(),
        }
    }
}

impl fmt::Display for WitnessLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};", self.length)?;
        for (row, j, d) in &self.terms {
            write!(
                f,
                " ({row},{j},{}{})",
                if *d >= 0 { '+' } else { '-' },
                d.abs()
            )?;
        }
        write!(f, "; {}", self.anchor)
    }
}

impl FromStr for WitnessLine {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        let bad = |msg: &str| ParseError::Syntax {
            line: 1,
            column: 1,
            message: format!("witness: {msg}"),
        };
        let parts: Vec<&str> = s.split(';').map(str::trim).collect();
        let [length, body, anchor] = parts[..] else {
            return Err(bad("expected `length; terms; anchor`"));
        };
        let length = length.parse().map_err(|_| bad("bad length"))?;
        let anchor = anchor.parse().map_err(|_| bad("bad anchor"))?;
        let mut terms = Vec::new();
        for t in body.split_whitespace() {
            let inner = t
                .strip_prefix('(')
                .and_then(|t| t.strip_suffix(')'))
                .ok_or_else(|| bad("term must be `(row,j,±δ)`"))?;
            let f: Vec<&str> = inner.split(',').collect();
            let [row, j, d] = f[..] else {
                return Err(bad("term must have three fields"));
            };
            let d = d.strip_prefix('+').unwrap_or(d);
            terms.push((
                row.parse().map_err(|_| bad("bad row"))?,
                j.parse().map_err(|_| bad("bad column"))?,
                d.parse().map_err(|_| bad("bad delta"))?,
            ));
        }
        if length as usize != 2 * terms.len() {
            return Err(bad("length does not match the number of terms"));
        }
        Ok(WitnessLine {
            length,
            terms,
            anchor,
        })
    }
}

type Chain = Vec<(usize, Sign)>;
/// `(check, block, row)` in the untranslated frame.
type Edge = (i64, i64, u32);

/// Depth-first enumeration of closed chains of a fixed number of terms whose
/// first term is `(first, +)` and whose other terms use records `>= first`.
/// Every cycle has such a representative: rotate it to start at its
/// smallest record and reverse it if that record is traversed backwards.
struct ChainDfs<'a> {
    table: &'a DifferenceTable,
    first: usize,
    terms: usize,
    max_delta: i64,
    origin: i64,
    chain: Chain,
    edges: Vec<Edge>,
}

impl<'a> ChainDfs<'a> {
    fn new(table: &'a DifferenceTable, first: usize, terms: usize) -> Self {
        let max_delta = table.records[first..]
            .iter()
            .map(|d| i64::from(d.delta))
            .max()
            .unwrap_or(0);
        ChainDfs {
            table,
            first,
            terms,
            max_delta,
            origin: i64::from(table.records[first].start_col),
            chain: Vec::with_capacity(terms),
            edges: Vec::with_capacity(2 * terms),
        }
    }

    /// Variable block and next position when taking `(id, sign)` from `pos`.
    fn step(&self, pos: i64, id: usize, sign: Sign) -> Option<(i64, i64)> {
        let d = &self.table.records[id];
        let c = i64::from(self.table.c);
        let (j, delta) = (i64::from(d.start_col), i64::from(d.delta));
        let (base, next) = match sign {
            Sign::Plus => (pos - j, pos + delta),
            Sign::Minus => (pos - j - delta, pos - delta),
        };
        (base.rem_euclid(c) == 0).then_some((base / c, next))
    }

    fn try_push(&mut self, pos: i64, id: usize, sign: Sign) -> Option<i64> {
        let (block, next) = self.step(pos, id, sign)?;
        let row = self.table.records[id].row;
        let e1 = (pos, block, row);
        let e2 = (next, block, row);
        if self.edges.iter().any(|e| *e == e1 || *e == e2) {
            return None;
        }
        self.edges.push(e1);
        self.edges.push(e2);
        self.chain.push((id, sign));
        Some(next)
    }

    fn pop(&mut self) {
        self.chain.pop();
        self.edges.truncate(self.edges.len() - 2);
    }

    fn run<F>(&mut self, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&Chain, &[Edge]) -> ControlFlow<()>,
    {
        let start = self.origin;
        let Some(pos) = self.try_push(start, self.first, Sign::Plus) else {
            return ControlFlow::Continue(());
        };
        let flow = self.extend(pos, visit);
        self.pop();
        flow
    }

    fn extend<F>(&mut self, pos: i64, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&Chain, &[Edge]) -> ControlFlow<()>,
    {
        let remaining = (self.terms - self.chain.len()) as i64;
        if (pos - self.origin).abs() > remaining * self.max_delta {
            return ControlFlow::Continue(());
        }
        let level = pos.rem_euclid(i64::from(self.table.c)) as u32;
        if remaining == 1 {
            let gap = self.origin - pos;
            let (sign, ids) = if gap > 0 {
                (Sign::Plus, self.table.starting(level, gap as u32))
            } else {
                (Sign::Minus, self.table.ending(level, (-gap) as u32))
            };
            for &id in ids {
                if id < self.first || self.try_push(pos, id, sign).is_none() {
                    continue;
                }
                let flow = visit(&self.chain, &self.edges);
                self.pop();
                flow?;
            }
            return ControlFlow::Continue(());
        }
        let table = self.table;
        let moves = &table.moves[level as usize];
        let from = moves.partition_point(|&(id, _)| id < self.first);
        for &(id, sign) in &moves[from..] {
            if let Some(next) = self.try_push(pos, id, sign) {
                let flow = self.extend(next, visit);
                self.pop();
                flow?;
            }
        }
        ControlFlow::Continue(())
    }
}

/// True when `chain` is the smallest among its rotations and reversals.
fn is_canonical(chain: &Chain) -> bool {
    let n = chain.len();
    let reversed: Chain = chain.iter().rev().map(|&(id, s)| (id, s.flip())).collect();
    for seq in [chain, &reversed] {
        for r in 0..n {
            let rotated = seq[r..].iter().chain(&seq[..r]);
            if rotated.cmp(chain.iter()).is_lt() {
                return false;
            }
        }
    }
    true
}

fn materialize(
    table: &DifferenceTable,
    chain: &Chain,
    edges: &[Edge],
    blocks: u32,
) -> Option<CycleWitness> {
    let c = i64::from(table.c);
    let shift = edges.iter().map(|e| e.1).min()?;
    let mut walk = Vec::with_capacity(chain.len());
    for pair in edges.chunks(2) {
        let (r_in, t, row) = pair[0];
        let r_out = pair[1].0;
        let t = t - shift;
        let (r_in, r_out) = (r_in - shift * c, r_out - shift * c);
        if t >= i64::from(blocks) || r_in.max(r_out) >= c * i64::from(blocks) || r_in.min(r_out) < 0
        {
            return None;
        }
        walk.push(WalkStep {
            check_in: r_in as u64,
            block: t as u64,
            row,
            check_out: r_out as u64,
        });
    }
    Some(CycleWitness {
        terms: chain
            .iter()
            .map(|&(id, s)| (table.records[id], s))
            .collect(),
        walk,
    })
}

/// All cycles of length 4 (equal value, equal starting level).
pub fn find_4cycles(table: &DifferenceTable) -> Vec<CycleWitness> {
    let blocks = window_blocks(table.m_h, 4);
    table
        .four_cycle_pairs()
        .into_iter()
        .filter_map(|(x, y)| {
            let mut dfs = ChainDfs::new(table, x, 2);
            let pos = dfs.try_push(dfs.origin, x, Sign::Plus)?;
            dfs.try_push(pos, y, Sign::Minus)?;
            materialize(table, &dfs.chain, &dfs.edges, blocks)
        })
        .collect()
}

fn check_cap(g_max: u32) -> Result<()> {
    if g_max > CYCLE_CAP {
        return Err(Error::CapExceeded {
            requested: g_max,
            cap: CYCLE_CAP,
        });
    }
    if g_max < 4 || g_max % 2 != 0 {
        return Err(Error::InvalidParams(format!(
            "cycle length bound {g_max} must be even and at least 4"
        )));
    }
    Ok(())
}

/// Every cycle of length `<= g_max`, one witness per cycle up to rotation,
/// reversal and translation. Sorted by length, then chain order.
pub fn find_cycles(hs: &SyndromeFormer, g_max: u32) -> Result<Vec<CycleWitness>> {
    find_cycles_with(&DifferenceTable::from_hs(hs), g_max, 1)
}

pub fn find_cycles_with(
    table: &DifferenceTable,
    g_max: u32,
    workers: usize,
) -> Result<Vec<CycleWitness>> {
    check_cap(g_max)?;
    let mut out = Vec::new();
    for terms in 2..=(g_max / 2) as usize {
        out.extend(cycles_of_length(table, terms, g_max, workers));
    }
    Ok(out)
}

/// Cycles with exactly `terms` differences, i.e. length `2·terms`.
pub fn cycles_of_length(
    table: &DifferenceTable,
    terms: usize,
    g_max: u32,
    workers: usize,
) -> Vec<CycleWitness> {
    let blocks = window_blocks(table.m_h, g_max);
    let firsts: Vec<usize> = (0..table.len()).collect();
    parallel::map_ordered(workers, &firsts, |&first| {
        let mut found = Vec::new();
        let mut dfs = ChainDfs::new(table, first, terms);
        let _ = dfs.run(&mut |chain, edges| {
            if is_canonical(chain) {
                if let Some(w) = materialize(table, chain, edges, blocks) {
                    found.push(w);
                }
            }
            ControlFlow::Continue(())
        });
        found
    })
    .into_iter()
    .flatten()
    .collect()
}

/// Smallest number of terms in a closed chain, searched up to `max_terms`.
fn shortest_chain(table: &DifferenceTable, max_terms: usize, workers: usize) -> Option<usize> {
    let firsts: Vec<usize> = (0..table.len()).collect();
    (2..=max_terms).find(|&terms| {
        let exists = |&first: &usize| {
            let mut dfs = ChainDfs::new(table, first, terms);
            dfs.run(&mut |_, _| ControlFlow::Break(())).is_break()
        };
        if workers <= 1 {
            firsts.iter().any(exists)
        } else {
            parallel::install(workers, || firsts.par_iter().any(exists))
        }
    })
}

/// Girth from the difference representation alone.
pub fn girth_via_differences(hs: &SyndromeFormer, cap: u32) -> Girth {
    girth_of_table(&DifferenceTable::from_hs(hs), cap, 1)
}

pub fn girth_of_table(table: &DifferenceTable, cap: u32, workers: usize) -> Girth {
    let cap = cap & !1;
    match shortest_chain(table, (cap / 2) as usize, workers) {
        Some(terms) => Girth::Exact(2 * terms as u32),
        None => Girth::AboveCap(cap),
    }
}

/// True when some cycle is shorter than `g`.
pub fn has_cycle_shorter_than(table: &DifferenceTable, g: u32) -> bool {
    if g <= 4 {
        return false;
    }
    if !table.is_four_cycle_free() {
        return true;
    }
    shortest_chain(table, ((g - 2) / 2) as usize, 1).is_some()
}
