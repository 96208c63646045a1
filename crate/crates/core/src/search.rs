//! Searches for syndrome formers of minimum memory order with girth `>= g`.
//!
//! Both searches work on normalized rows: every row's smallest support
//! index is below `c`. Shifting one row by `c` only relabels its variables
//! one block later, which leaves every cycle intact, so this loses nothing.

use std::time::{Duration, Instant};

use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bounds::{bound, BoundQuery};
use crate::diff::{self, DifferenceTable};
use crate::error::{Error, Progress, Result};
use crate::matrix::{PolyMatrix, SyndromeFormer};
use crate::parallel;
use crate::params::Rate;
use crate::tanner::{conv_girth_with, Girth, OracleConfig};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Exhaustive,
    Random,
}

/// How random candidates are proposed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Proposal {
    /// Each row is a uniform `w`-subset of the target width, shifted to
    /// normal form. Draws with an empty last column block are re-drawn.
    #[default]
    Uniform,
    /// Support indices are placed one at a time at random positions that
    /// close no cycle shorter than the target with what is already placed.
    Greedy,
}

/// Widths explored past the starting point when no upper limit is given.
pub const DEFAULT_LH_SPAN: u32 = 32;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchSpec {
    pub c: u32,
    pub row_weights: Vec<u32>,
    pub girth: u32,
    pub mode: Mode,
    pub proposal: Proposal,
    /// First width tried; defaults to the closed-form bound when one exists.
    pub lh_min: Option<u32>,
    /// Exhaustive: last width tried. Random: width of the first draws.
    pub lh_max: Option<u32>,
    pub budget: u64,
    pub seed: u64,
    pub workers: usize,
    /// Random mode emits a checkpoint every this many candidates.
    pub checkpoint_every: u64,
}

impl SearchSpec {
    pub fn new(c: u32, row_weights: Vec<u32>, girth: u32, mode: Mode) -> Self {
        SearchSpec {
            c,
            row_weights,
            girth,
            mode,
            proposal: Proposal::Uniform,
            lh_min: None,
            lh_max: None,
            budget: 50_000_000,
            seed: 0,
            workers: 1,
            checkpoint_every: 10_000,
        }
    }

    pub fn regular(a: u32, c: u32, w: u32, girth: u32, mode: Mode) -> Self {
        Self::new(c, vec![w; a as usize], girth, mode)
    }

    pub fn a(&self) -> u32 {
        self.row_weights.len() as u32
    }

    fn validate(&self) -> Result<()> {
        if self.c == 0 || self.row_weights.is_empty() {
            return Err(Error::InvalidParams(
                "need c >= 1 and at least one row".into(),
            ));
        }
        if self.row_weights.iter().any(|&w| w < 2) {
            return Err(Error::InvalidParams("search needs row weights >= 2".into()));
        }
        if self.girth < 4 || self.girth % 2 != 0 || self.girth > diff::CYCLE_CAP {
            return Err(Error::InvalidParams(format!(
                "girth target {} must be even and in [4, {}]",
                self.girth,
                diff::CYCLE_CAP
            )));
        }
        if self.budget == 0 {
            return Err(Error::InvalidParams("budget must be at least 1".into()));
        }
        Ok(())
    }

    /// Closed-form lower bound for this target, when one exists. Girth
    /// targets above 8 use the girth-8 bound, which they must also meet.
    pub fn lower_bound(&self) -> Option<u32> {
        if self.a() <= self.c {
            return None;
        }
        let q = BoundQuery {
            a: self.a(),
            c: self.c,
            row_weights: self.row_weights.clone(),
            girth: self.girth.min(8),
        };
        if q.girth < 6 {
            return None;
        }
        bound(&q).ok().and_then(|r| r.lh_lower)
    }

    fn trivial_min(&self) -> u32 {
        let w = self.row_weights.iter().copied().max().unwrap_or(1);
        w.max(self.c + 1).max(2)
    }

    /// `(first, last)` widths.
    pub fn range(&self) -> (u32, u32) {
        let lo = self
            .lh_min
            .unwrap_or_else(|| self.lower_bound().unwrap_or(0).max(self.trivial_min()));
        let hi = self.lh_max.unwrap_or(lo + DEFAULT_LH_SPAN);
        (lo, hi)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Checkpoint {
    pub candidates: u64,
    pub best_mh: Option<u32>,
    pub elapsed_s: f64,
}

#[derive(Debug, Clone)]
pub struct SearchOutcome {
    pub best: Option<SyndromeFormer>,
    /// Oracle girth of `best`, computed with cap `max(12, target)`.
    pub girth: Option<Girth>,
    pub candidates: u64,
    pub elapsed: Duration,
    /// True when the result is proven optimal over the searched range.
    pub complete: bool,
    pub checkpoints: Vec<Checkpoint>,
    /// Closed-form lower bound for the target, if any.
    pub bound: Option<u32>,
}

impl SearchOutcome {
    pub fn l_h(&self) -> Option<u32> {
        self.best.as_ref().map(SyndromeFormer::l_h)
    }

    pub fn m_h(&self) -> Option<u32> {
        self.best.as_ref().map(SyndromeFormer::m_h)
    }

    pub fn v_s(&self) -> Option<u64> {
        self.best.as_ref().map(SyndromeFormer::v_s)
    }

    /// True unless a result undercuts the closed-form bound.
    pub fn respects_bound(&self) -> bool {
        match (self.l_h(), self.bound) {
            (Some(l), Some(b)) => l >= b,
            _ => true,
        }
    }
}

/// Objective order: memory order, then width, then row supports.
fn objective(hs: &SyndromeFormer) -> (u32, u32, &[Vec<u32>]) {
    (hs.m_h(), hs.l_h(), hs.rows())
}

fn report_cap(girth: u32) -> u32 {
    girth.max(12)
}

fn oracle_accepts(hs: &SyndromeFormer, girth: u32) -> Result<bool> {
    Ok(conv_girth_with(hs, girth - 2, OracleConfig::default())?.at_least(girth))
}

/// All `w`-subsets of `[0, width)` whose smallest element is below `c`, in
/// lexicographic order.
fn normalized_rows(width: u32, w: u32, c: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(w as usize);
    fn rec(start: u32, width: u32, w: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == w as usize {
            out.push(cur.clone());
            return;
        }
        let need = w - cur.len() as u32;
        for x in start..=width.saturating_sub(need) {
            cur.push(x);
            rec(x + 1, width, w, cur, out);
            cur.pop();
        }
    }
    for first in 0..c.min(width) {
        cur.push(first);
        rec(first + 1, width, w, &mut cur, &mut out);
        cur.pop();
    }
    out
}

/// Depth-first enumeration of row multisets at a fixed width.
struct Enumerator<'a> {
    c: u32,
    width: u32,
    girth: u32,
    /// Only accept matrices using column `width - 1`.
    require_last: bool,
    weights: &'a [u32],
    pools: &'a [Vec<Vec<u32>>],
    /// `(l_s, δ)` pairs in use, indexed `l_s·width + δ`.
    occupied: Vec<bool>,
    chosen: Vec<usize>,
    rows: Vec<Vec<u32>>,
    nodes: u64,
    budget: u64,
}

enum Step {
    Found(Vec<Vec<u32>>),
    Exhausted,
    OutOfBudget,
}

impl<'a> Enumerator<'a> {
    fn pool_of(&self, pos: usize) -> &'a [Vec<u32>] {
        &self.pools[pos]
    }

    fn place(&mut self, row: &[u32]) -> bool {
        let mut marked = Vec::new();
        let mut ok = true;
        'outer: for (k, &j) in row.iter().enumerate() {
            for &j2 in &row[k + 1..] {
                let key = ((j % self.c) * self.width + (j2 - j)) as usize;
                if self.occupied[key] {
                    ok = false;
                    break 'outer;
                }
                self.occupied[key] = true;
                marked.push(key);
            }
        }
        if !ok {
            for key in marked {
                self.occupied[key] = false;
            }
        }
        ok
    }

    fn unplace(&mut self, row: &[u32]) {
        for (k, &j) in row.iter().enumerate() {
            for &j2 in &row[k + 1..] {
                self.occupied[((j % self.c) * self.width + (j2 - j)) as usize] = false;
            }
        }
    }

    fn partial_ok(&self) -> bool {
        self.girth <= 6
            || self.rows.len() < 2
            || !diff::has_cycle_shorter_than(
                &DifferenceTable::from_rows(self.c, &self.rows),
                self.girth,
            )
    }

    fn leaf_ok(&self) -> Result<bool> {
        if self.require_last
            && !self
                .rows
                .iter()
                .any(|r| r.last() == Some(&(self.width - 1)))
        {
            return Ok(false);
        }
        let Ok(hs) = SyndromeFormer::tight(self.c, self.rows.clone()) else {
            return Ok(false);
        };
        oracle_accepts(&hs, self.girth)
    }

    /// Tries pool entry `idx` at position `pos`, then recurses.
    fn try_row(&mut self, pos: usize, idx: usize) -> Result<Step> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Ok(Step::OutOfBudget);
        }
        let row = &self.pool_of(pos)[idx];
        if !self.place(row) {
            return Ok(Step::Exhausted);
        }
        self.rows.push(row.clone());
        self.chosen.push(idx);
        let step = if !self.partial_ok() {
            Step::Exhausted
        } else if pos + 1 == self.weights.len() {
            if self.leaf_ok()? {
                Step::Found(self.rows.clone())
            } else {
                Step::Exhausted
            }
        } else {
            self.descend(pos + 1)?
        };
        self.chosen.pop();
        self.rows.pop();
        self.unplace(row);
        Ok(step)
    }

    fn descend(&mut self, pos: usize) -> Result<Step> {
        // Rows of equal weight are interchangeable and identical rows of
        // weight >= 2 always form a 4-cycle, so indices strictly increase.
        let start = if pos > 0 && self.weights[pos] == self.weights[pos - 1] {
            self.chosen[pos - 1] + 1
        } else {
            0
        };
        for idx in start..self.pool_of(pos).len() {
            match self.try_row(pos, idx)? {
                Step::Exhausted => {}
                other => return Ok(other),
            }
        }
        Ok(Step::Exhausted)
    }
}

struct ChunkResult {
    found: Option<Vec<Vec<u32>>>,
    nodes: u64,
    out_of_budget: bool,
}

/// Smallest width with a syndrome former of girth `>= g`, by exhaustive
/// enumeration of normalized row multisets.
pub fn exhaustive_min_lh(spec: &SearchSpec) -> Result<SearchOutcome> {
    spec.validate()?;
    let started = Instant::now();
    let (lo, hi) = spec.range();
    let (c, girth) = (spec.c, spec.girth);

    // Enumerate in descending weight order; `slots` maps back to input rows.
    let mut slots: Vec<usize> = (0..spec.row_weights.len()).collect();
    slots.sort_by_key(|&i| (std::cmp::Reverse(spec.row_weights[i]), i));
    let weights: Vec<u32> = slots.iter().map(|&i| spec.row_weights[i]).collect();

    let mut candidates = 0u64;
    let mut checkpoints = Vec::new();
    for width in lo.max(1)..=hi {
        if weights.iter().any(|&w| w > width) {
            continue;
        }
        let pools: Vec<Vec<Vec<u32>>> = weights
            .iter()
            .map(|&w| normalized_rows(width, w, c))
            .collect();
        let remaining = spec.budget - candidates;
        let firsts: Vec<usize> = (0..pools[0].len()).collect();
        let run_chunk = |&idx: &usize| -> Result<ChunkResult> {
            let mut e = Enumerator {
                c,
                width,
                girth,
                require_last: width > lo,
                weights: &weights,
                pools: &pools,
                occupied: vec![false; (c * width) as usize],
                chosen: Vec::new(),
                rows: Vec::new(),
                nodes: 0,
                budget: remaining,
            };
            let step = e.try_row(0, idx)?;
            Ok(match step {
                Step::Found(rows) => ChunkResult {
                    found: Some(rows),
                    nodes: e.nodes,
                    out_of_budget: false,
                },
                Step::Exhausted => ChunkResult {
                    found: None,
                    nodes: e.nodes,
                    out_of_budget: false,
                },
                Step::OutOfBudget => ChunkResult {
                    found: None,
                    nodes: e.nodes,
                    out_of_budget: true,
                },
            })
        };
        // Chunks run independently; replaying them in order keeps the
        // outcome identical to a single-threaded run.
        let results: Vec<ChunkResult> = if spec.workers <= 1 {
            let mut out = Vec::new();
            let mut used = 0;
            for idx in &firsts {
                let r = run_chunk(idx)?;
                used += r.nodes;
                let stop = r.found.is_some() || r.out_of_budget || used > remaining;
                out.push(r);
                if stop {
                    break;
                }
            }
            out
        } else {
            parallel::map_ordered(spec.workers, &firsts, run_chunk)
                .into_iter()
                .collect::<Result<Vec<_>>>()?
        };
        let mut found = None;
        for r in results {
            candidates += r.nodes;
            if r.out_of_budget || candidates > spec.budget {
                return Err(Error::BudgetExceeded {
                    budget: spec.budget,
                    progress: Progress {
                        candidates: candidates.min(spec.budget),
                        completed_below_lh: width,
                    },
                });
            }
            if r.found.is_some() {
                found = r.found;
                break;
            }
        }
        checkpoints.push(Checkpoint {
            candidates,
            best_mh: None,
            elapsed_s: started.elapsed().as_secs_f64(),
        });
        if let Some(sorted_rows) = found {
            let mut rows = vec![Vec::new(); sorted_rows.len()];
            for (k, row) in sorted_rows.into_iter().enumerate() {
                rows[slots[k]] = row;
            }
            let hs = SyndromeFormer::tight(c, rows)?;
            let g = conv_girth_with(&hs, report_cap(girth), OracleConfig::default())?;
            if let Some(cp) = checkpoints.last_mut() {
                cp.best_mh = Some(hs.m_h());
            }
            return Ok(SearchOutcome {
                best: Some(hs),
                girth: Some(g),
                candidates,
                elapsed: started.elapsed(),
                complete: true,
                checkpoints,
                bound: spec.lower_bound(),
            });
        }
    }
    Ok(SearchOutcome {
        best: None,
        girth: None,
        candidates,
        elapsed: started.elapsed(),
        complete: true,
        checkpoints,
        bound: spec.lower_bound(),
    })
}

/// Draws one normalized candidate of width `width`, re-drawing until the
/// last column block is nonempty.
fn draw_uniform(rng: &mut ChaCha8Rng, c: u32, width: u32, weights: &[u32]) -> SyndromeFormer {
    let last_block = (width.div_ceil(c) - 1) * c;
    loop {
        let rows: Vec<Vec<u32>> = weights
            .iter()
            .map(|&w| {
                let mut row: Vec<u32> = index::sample(rng, width as usize, w as usize)
                    .into_iter()
                    .map(|x| x as u32)
                    .collect();
                row.sort_unstable();
                let shift = (row[0] / c) * c;
                row.iter_mut().for_each(|x| *x -= shift);
                row
            })
            .collect();
        if rows
            .iter()
            .any(|r| r.last().is_some_and(|&m| m >= last_block))
        {
            if let Ok(hs) = SyndromeFormer::tight(c, rows) {
                return hs;
            }
        }
    }
}

/// Tries per support index before a greedy draw gives up.
const PLACEMENT_TRIES: u32 = 16;

/// Builds a normalized candidate of width at most `width` one support index
/// at a time, placing each at a random position that closes no cycle
/// shorter than `girth` with what is already placed. Returns `None` when
/// some index cannot be placed.
fn draw_greedy(
    rng: &mut ChaCha8Rng,
    c: u32,
    width: u32,
    weights: &[u32],
    girth: u32,
) -> Option<SyndromeFormer> {
    let mut rows: Vec<Vec<u32>> = Vec::with_capacity(weights.len());
    for &w in weights {
        rows.push(vec![rng.random_range(0..c.min(width))]);
        for _ in 1..w {
            let k = rows.len() - 1;
            let mut placed = false;
            for _ in 0..PLACEMENT_TRIES {
                let x = rng.random_range(0..width);
                if rows[k].contains(&x) {
                    continue;
                }
                rows[k].push(x);
                rows[k].sort_unstable();
                if !diff::has_cycle_shorter_than(&DifferenceTable::from_rows(c, &rows), girth) {
                    placed = true;
                    break;
                }
                rows[k].retain(|&y| y != x);
            }
            if !placed {
                return None;
            }
        }
        let shift = (rows[rows.len() - 1][0] / c) * c;
        rows.last_mut()?.iter_mut().for_each(|x| *x -= shift);
    }
    SyndromeFormer::tight(c, rows).ok()
}

struct WorkerRun {
    best: Option<SyndromeFormer>,
    candidates: u64,
    checkpoints: Vec<Checkpoint>,
}

fn montecarlo_worker(
    spec: &SearchSpec,
    worker: u64,
    budget: u64,
    started: Instant,
) -> Result<WorkerRun> {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    rng.set_stream(worker);
    let (lo, hi) = spec.range();
    let c = spec.c;
    let floor = lo.max(spec.trivial_min());
    let mut width = hi;
    let mut best: Option<SyndromeFormer> = None;
    let mut checkpoints = Vec::new();
    let mut candidates = 0;
    while candidates < budget && width >= floor {
        candidates += 1;
        let mut improved = false;
        let drawn = match spec.proposal {
            Proposal::Uniform => {
                let hs = draw_uniform(&mut rng, c, width, &spec.row_weights);
                let table = DifferenceTable::from_hs(&hs);
                (table.is_four_cycle_free() && !diff::has_cycle_shorter_than(&table, spec.girth))
                    .then_some(hs)
            }
            Proposal::Greedy => draw_greedy(&mut rng, c, width, &spec.row_weights, spec.girth),
        };
        if let Some(hs) = drawn {
            if best
                .as_ref()
                .map_or(true, |b| objective(&hs) < objective(b))
                && oracle_accepts(&hs, spec.girth)?
            {
                // Next draws aim one memory order lower.
                width = c * hs.m_h();
                best = Some(hs);
                improved = true;
            }
        }
        if improved || candidates % spec.checkpoint_every.max(1) == 0 {
            checkpoints.push(Checkpoint {
                candidates,
                best_mh: best.as_ref().map(SyndromeFormer::m_h),
                elapsed_s: started.elapsed().as_secs_f64(),
            });
        }
    }
    Ok(WorkerRun {
        best,
        candidates,
        checkpoints,
    })
}

/// Randomized search. Each worker `k` draws from ChaCha8 seeded with
/// `seed_from_u64(seed)` on stream `k`, starting at the upper width and
/// lowering the target memory order after every success. Worker `k`
/// receives `budget / workers` candidates plus one if `k < budget % workers`.
pub fn montecarlo_search(spec: &SearchSpec) -> Result<SearchOutcome> {
    spec.validate()?;
    let started = Instant::now();
    let workers = spec.workers.max(1) as u64;
    let shares: Vec<(u64, u64)> = (0..workers)
        .map(|k| {
            (
                k,
                spec.budget / workers + u64::from(k < spec.budget % workers),
            )
        })
        .filter(|&(_, b)| b > 0)
        .collect();
    let runs = parallel::map_ordered(spec.workers, &shares, |&(k, b)| {
        montecarlo_worker(spec, k, b, started)
    })
    .into_iter()
    .collect::<Result<Vec<_>>>()?;
    let mut best: Option<SyndromeFormer> = None;
    let mut candidates = 0;
    let mut checkpoints = Vec::new();
    for run in runs {
        candidates += run.candidates;
        checkpoints.extend(run.checkpoints);
        if let Some(hs) = run.best {
            if best
                .as_ref()
                .map_or(true, |b| objective(&hs) < objective(b))
            {
                best = Some(hs);
            }
        }
    }
    let girth = match &best {
        Some(hs) => Some(conv_girth_with(
            hs,
            report_cap(spec.girth),
            OracleConfig::default(),
        )?),
        None => None,
    };
    Ok(SearchOutcome {
        best,
        girth,
        candidates,
        elapsed: started.elapsed(),
        complete: false,
        checkpoints,
        bound: spec.lower_bound(),
    })
}

/// Runs the search selected by `spec.mode`.
pub fn search(spec: &SearchSpec) -> Result<SearchOutcome> {
    match spec.mode {
        Mode::Exhaustive => exhaustive_min_lh(spec),
        Mode::Random => montecarlo_search(spec),
    }
}

#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub a: u32,
    pub c: u32,
    pub l_h: u32,
    pub m_h: u32,
    pub v_s: u64,
    pub rate: Option<Rate>,
    /// From the window oracle.
    pub girth: Girth,
    /// From the difference representation; must equal `girth`.
    pub girth_differences: Girth,
    /// Every cycle of the shortest length, one per translation class.
    pub witnesses: Vec<diff::CycleWitness>,
}

impl VerifyReport {
    pub fn consistent(&self) -> bool {
        self.girth == self.girth_differences
    }
}

pub fn verify(hs: &SyndromeFormer, cap: u32, workers: usize) -> Result<VerifyReport> {
    let cap = (cap & !1).min(diff::CYCLE_CAP);
    let girth = conv_girth_with(
        hs,
        cap,
        OracleConfig {
            workers,
            ..OracleConfig::default()
        },
    )?;
    let table = DifferenceTable::from_hs(hs);
    let girth_differences = diff::girth_of_table(&table, cap, workers);
    let witnesses = match girth.exact() {
        Some(g) => diff::cycles_of_length(&table, (g / 2) as usize, cap.max(4), workers),
        None => Vec::new(),
    };
    Ok(VerifyReport {
        a: hs.a(),
        c: hs.c(),
        l_h: hs.l_h(),
        m_h: hs.m_h(),
        v_s: hs.v_s(),
        rate: hs.rate(),
        girth,
        girth_differences,
        witnesses,
    })
}

pub fn verify_poly(p: &PolyMatrix, cap: u32, workers: usize) -> Result<VerifyReport> {
    verify(&p.to_syndrome_former()?, cap, workers)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalized_row_pool() {
        let rows = normalized_rows(4, 2, 2);
        assert_eq!(
            rows,
            vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3]]
        );
        assert_eq!(normalized_rows(3, 3, 1), vec![vec![0, 1, 2]]);
    }

    #[test]
    fn c1_w2_girth8_case_a3() {
        let out = exhaustive_min_lh(&SearchSpec::regular(3, 1, 2, 8, Mode::Exhaustive)).unwrap();
        assert_eq!(out.l_h(), Some(6));
        assert!(out.complete);
        assert!(out.girth.unwrap().at_least(8));
    }

    #[test]
    fn small_g6_case() {
        let out = exhaustive_min_lh(&SearchSpec::regular(2, 1, 2, 6, Mode::Exhaustive)).unwrap();
        assert_eq!(out.l_h(), Some(3));
        assert_eq!(out.best.unwrap().rows(), &[vec![0, 1], vec![0, 2]]);
    }

    #[test]
    fn budget_exceeded_reports_progress() {
        let mut spec = SearchSpec::regular(5, 2, 3, 6, Mode::Exhaustive);
        spec.budget = 10;
        match exhaustive_min_lh(&spec) {
            Err(Error::BudgetExceeded { budget, progress }) => {
                assert_eq!(budget, 10);
                assert!(progress.candidates <= 10);
            }
            other => panic!("expected budget error, got {other:?}"),
        }
    }

    #[test]
    fn random_budget_one() {
        let mut spec = SearchSpec::regular(4, 2, 2, 6, Mode::Random);
        spec.budget = 1;
        spec.lh_max = Some(20);
        let out = montecarlo_search(&spec).unwrap();
        assert_eq!(out.candidates, 1);
        assert!(!out.complete);
    }

    #[test]
    fn verify_weight_one_rows_is_a_forest() {
        let hs = SyndromeFormer::new(1, 1, vec![vec![0], vec![0]]).unwrap();
        let r = verify(&hs, 12, 1).unwrap();
        assert_eq!(r.girth, Girth::AboveCap(12));
        assert!(r.witnesses.is_empty());
    }
}
