//! Exhaustive, exact enumeration of placements and the statistics computed
//! over them.
//!
//! Every statistic streams over a [`PlacementSpace`], split into contiguous
//! rank ranges that run on a rayon pool. Each range keeps its own counters
//! and results are merged by addition in range order, so the output does
//! not depend on the worker count.

mod space;

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rayon::prelude::*;

use crate::combinatorics::{multinomial, ExactCount, ExactRatio};
use crate::error::{domain, Error, Result};
use crate::queue::{project_masks, FastRecorder, Placement, TypeVector};

pub use space::{placement_count, PlacementIter, PlacementSpace};

/// Default refusal threshold on `N`.
pub const DEFAULT_GUARD: usize = 24;
/// Environment variable overriding the guard.
pub const GUARD_ENV: &str = "MLQ_MAX_N";

/// Histogram of projected words over all placements of a type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WordDistribution {
    pub counts: BTreeMap<Vec<u32>, ExactCount>,
    pub total: ExactCount,
}

/// `c_{i,j}` for all ordered pairs of labels in `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorrelationTable {
    pub n: usize,
    pub entries: BTreeMap<(usize, usize), ExactRatio>,
}

impl CorrelationTable {
    pub(crate) fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> ExactRatio) -> Self {
        let mut entries = BTreeMap::new();
        for i in 1..=n {
            for j in 1..=n {
                let v = if i == j { BigRational::zero() } else { f(i, j) };
                entries.insert((i, j), v);
            }
        }
        CorrelationTable { n, entries }
    }

    pub fn get(&self, i: usize, j: usize) -> Option<&ExactRatio> {
        self.entries.get(&(i, j))
    }

    pub fn row_sum(&self, i: usize) -> ExactRatio {
        (1..=self.n)
            .filter_map(|j| self.get(i, j))
            .fold(BigRational::zero(), |acc, v| acc + v)
    }
}

/// Counts over three-species placements with `N` in the last row, keyed
/// by the first two word letters and the number of wraps out of the
/// second-to-last row (capped at 3).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairCounts {
    species: usize,
    cells: Vec<u64>,
}

impl PairCounts {
    fn new(species: usize) -> Self {
        PairCounts {
            species,
            cells: vec![0; species * species * 4],
        }
    }

    #[inline(always)]
    fn idx(&self, x: u32, y: u32, w: u8) -> usize {
        ((x as usize - 1) * self.species + (y as usize - 1)) * 4 + w.min(3) as usize
    }

    fn merge(&mut self, other: PairCounts) {
        for (a, b) in self.cells.iter_mut().zip(other.cells) {
            *a += b;
        }
    }

    fn valid(&self, x: u32) -> bool {
        x >= 1 && x as usize <= self.species
    }

    /// `n_{x,y}`.
    pub fn pair(&self, x: u32, y: u32) -> u64 {
        if !self.valid(x) || !self.valid(y) {
            return 0;
        }
        (0..4).map(|w| self.cells[self.idx(x, y, w)]).sum()
    }

    /// `n_{x,y}` restricted to exactly `w` wraps (`w = 3` means three or more).
    pub fn pair_with_wraps(&self, x: u32, y: u32, w: u8) -> u64 {
        if !self.valid(x) || !self.valid(y) {
            return 0;
        }
        self.cells[self.idx(x, y, w)]
    }

    /// `n_z`.
    pub fn first(&self, z: u32) -> u64 {
        (1..=self.species as u32).map(|y| self.pair(z, y)).sum()
    }

    pub fn total(&self) -> u64 {
        self.cells.iter().sum()
    }
}

#[derive(Clone)]
pub struct Engine {
    workers: usize,
    guard: usize,
    pool: Arc<rayon::ThreadPool>,
}

impl std::fmt::Debug for Engine {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Engine")
            .field("workers", &self.workers)
            .field("guard", &self.guard)
            .finish()
    }
}

impl Default for Engine {
    fn default() -> Self {
        Engine::new(default_workers(), guard_from_env())
    }
}

/// Available parallelism, or 1.
pub fn default_workers() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

/// Guard from [`GUARD_ENV`], falling back to [`DEFAULT_GUARD`].
pub fn guard_from_env() -> usize {
    std::env::var(GUARD_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_GUARD)
}

impl Engine {
    pub fn new(workers: usize, guard: usize) -> Self {
        let workers = workers.max(1);
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build()
            .expect("thread pool");
        Engine {
            workers,
            guard,
            pool: Arc::new(pool),
        }
    }

    pub fn workers(&self) -> usize {
        self.workers
    }

    pub fn guard(&self) -> usize {
        self.guard
    }

    pub fn check_guard(&self, tv: &TypeVector) -> Result<()> {
        if tv.total() > self.guard {
            return Err(Error::GuardExceeded {
                total: tv.total(),
                guard: self.guard,
                placements: placement_count(tv).to_string(),
            });
        }
        Ok(())
    }

    /// Streams all placements of `tv` in colex order.
    pub fn enumerate_placements(&self, tv: &TypeVector) -> Result<PlacementIter> {
        self.check_guard(tv)?;
        Ok(PlacementSpace::new(tv)?.iter())
    }

    /// Builds a space after checking the guard.
    pub fn space(&self, tv: &TypeVector, pins: &[(u32, usize)]) -> Result<PlacementSpace> {
        self.check_guard(tv)?;
        PlacementSpace::with_pins(tv, pins)
    }

    /// Parallel fold over a space. Ranges are processed independently and
    /// merged in rank order.
    pub fn fold<T, I, V, M>(&self, space: &PlacementSpace, init: I, visit: V, merge: M) -> T
    where
        T: Send,
        I: Fn() -> T + Sync,
        V: Fn(&mut T, &[u64]) + Sync,
        M: Fn(&mut T, T),
    {
        let chunks = space.chunks(self.workers * 4);
        let parts: Vec<T> = self.pool.install(|| {
            chunks
                .par_iter()
                .map(|&(start, len)| {
                    let mut acc = init();
                    space.for_each_mask_in_range(start, len, |m| visit(&mut acc, m));
                    acc
                })
                .collect()
        });
        let mut iter = parts.into_iter();
        let mut acc = iter.next().unwrap_or_else(&init);
        for part in iter {
            merge(&mut acc, part);
        }
        acc
    }

    fn count_where<V>(&self, space: &PlacementSpace, pred: V) -> u64
    where
        V: Fn(&[u64]) -> bool + Sync,
    {
        self.fold(
            space,
            || 0u64,
            |acc, m| *acc += pred(m) as u64,
            |a, b| *a += b,
        )
    }

    /// Exact histogram of projected words.
    pub fn word_distribution(&self, tv: &TypeVector) -> Result<WordDistribution> {
        let space = self.space(tv, &[])?;
        let counts = self.fold(
            &space,
            HashMap::<Vec<u32>, u64>::new,
            |acc, masks| {
                let rec = project(masks);
                *acc.entry(last_row_word(masks, &rec)).or_default() += 1;
            },
            |a, b| {
                for (k, v) in b {
                    *a.entry(k).or_default() += v;
                }
            },
        );
        let counts: BTreeMap<Vec<u32>, ExactCount> =
            counts.into_iter().map(|(k, v)| (k, BigInt::from(v))).collect();
        let total = counts.values().fold(BigInt::zero(), |a, b| a + b);
        Ok(WordDistribution { counts, total })
    }

    /// `c_{i,j}(n)` by direct enumeration over type `1^n`: the number of
    /// cyclically adjacent `(i, j)` pairs summed over placements, divided by
    /// the number of placements.
    pub fn correlations_direct(&self, n: usize) -> Result<CorrelationTable> {
        if n < 2 {
            return Err(domain("correlations_direct", &[n as i64], "n must be at least 2"));
        }
        let tv = TypeVector::ones(n)?;
        let space = self.space(&tv, &[])?;
        let counts = self.fold(
            &space,
            || vec![0u64; n * n],
            |acc, masks| {
                let rec = project(masks);
                let word = last_row_word(masks, &rec);
                for a in 0..n {
                    let (x, y) = (word[a] as usize - 1, word[(a + 1) % n] as usize - 1);
                    acc[x * n + y] += 1;
                }
            },
            |a, b| a.iter_mut().zip(b).for_each(|(x, y)| *x += y),
        );
        let total = BigInt::from(space.len());
        Ok(CorrelationTable::from_fn(n, |i, j| {
            BigRational::new(BigInt::from(counts[(i - 1) * n + (j - 1)]), total.clone())
        }))
    }

    /// First-two-letter counts over placements of `tv` with `N` in the last row.
    pub fn pair_counts(&self, tv: &TypeVector) -> Result<PairCounts> {
        let species = tv.species();
        if species < 2 || tv.row_sizes()[species - 1] < 2 {
            return Err(domain(
                "pair_counts",
                &tv.m().iter().map(|&x| x as i64).collect::<Vec<_>>(),
                "need at least two rows and two last-row entries",
            ));
        }
        let space = self.space(tv, &[(tv.total() as u32, species - 1)])?;
        let wrap_row = species - 2;
        Ok(self.fold(
            &space,
            || PairCounts::new(species),
            |acc, masks| {
                let rec = project(masks);
                let (x, y) = first_two(masks, &rec);
                let i = acc.idx(x, y, rec.wraps[wrap_row]);
                acc.cells[i] += 1;
            },
            PairCounts::merge,
        ))
    }

    fn three_species_pairs(&self, op: &'static str, s: usize, t: usize, n: usize) -> Result<PairCounts> {
        if s + t > n || n < 2 {
            return Err(domain(op, &[s as i64, t as i64, n as i64], "need s + t <= n and n >= 2"));
        }
        self.pair_counts(&TypeVector::three_species(s, t, n)?)
    }

    /// `n_{x,y}(s,t,n)`: placements of type `(s,t,n-s-t)` with `N` in the
    /// last row projecting to a word starting `x, y`.
    pub fn count_conditioned(&self, s: usize, t: usize, n: usize, x: u32, y: u32) -> Result<ExactCount> {
        check_labels("count_conditioned", &[x, y], 3)?;
        Ok(self.three_species_pairs("count_conditioned", s, t, n)?.pair(x, y).into())
    }

    /// `n_z(s,t,n)`.
    pub fn count_first_only(&self, s: usize, t: usize, n: usize, z: u32) -> Result<ExactCount> {
        check_labels("count_first_only", &[z], 3)?;
        Ok(self.three_species_pairs("count_first_only", s, t, n)?.first(z).into())
    }

    /// `(α_{1,3}, β_{1,3})(s,t,n)`: the `n_{1,3}` placements with zero and
    /// with exactly one wrap out of the second row.
    pub fn count_alpha_beta(&self, s: usize, t: usize, n: usize) -> Result<(ExactCount, ExactCount)> {
        if s < 1 {
            return Err(domain("count_alpha_beta", &[s as i64, t as i64, n as i64], "s must be at least 1"));
        }
        let pc = self.three_species_pairs("count_alpha_beta", s, t, n)?;
        Ok((pc.pair_with_wraps(1, 3, 0).into(), pc.pair_with_wraps(1, 3, 1).into()))
    }

    /// `δ_{c,d}(s,n)`, or `δ_c(s,n)` when `d` is `None`: two-species
    /// placements of type `(s, n-s)` with `N` in the last row.
    pub fn count_delta(&self, s: usize, n: usize, c: u32, d: Option<u32>) -> Result<ExactCount> {
        if s == 0 || s >= n {
            return Err(domain("count_delta", &[s as i64, n as i64], "need 0 < s < n"));
        }
        check_labels("count_delta", &[c], 2)?;
        if let Some(d) = d {
            check_labels("count_delta", &[d], 2)?;
        }
        let pc = self.pair_counts(&TypeVector::two_species(s, n)?)?;
        Ok(match d {
            Some(d) => pc.pair(c, d),
            None => pc.first(c),
        }
        .into())
    }

    /// Two-species placements with `N` in the last row and letter `c` at
    /// 1-based word position `a`.
    pub fn delta_at_position(&self, s: usize, n: usize, c: u32, a: usize) -> Result<ExactCount> {
        if s == 0 || s >= n || a == 0 || a > n {
            return Err(domain("delta_at_position", &[s as i64, n as i64, a as i64], "need 0 < s < n and 1 <= a <= n"));
        }
        let tv = TypeVector::two_species(s, n)?;
        let space = self.space(&tv, &[(tv.total() as u32, 1)])?;
        Ok(self
            .count_where(&space, |masks| {
                let rec = project(masks);
                nth_letter(masks, &rec, a - 1) == c
            })
            .into())
    }

    /// `γ^ℓ(s,n)`: type `(s,1,n-s-1)` with `N` in the last row, `c_2 = ℓ`,
    /// `b_1 > c_2` and word starting `1, 3`.
    pub fn count_gamma(&self, s: usize, n: usize, ell: usize) -> Result<ExactCount> {
        if ell < 2 || ell > s || s + 1 > n {
            return Err(domain("count_gamma", &[s as i64, n as i64, ell as i64], "need 2 <= ell <= s and s + 1 <= n"));
        }
        let tv = TypeVector::three_species(s, 1, n)?;
        let space = self.space(&tv, &[(tv.total() as u32, 2)])?;
        let ell = ell as u32;
        Ok(self
            .count_where(&space, |masks| {
                let c2 = nth_value(masks[2], 1);
                let b1 = nth_value(masks[1], 0);
                if c2 != ell || b1 <= c2 {
                    return false;
                }
                let rec = project(masks);
                first_two(masks, &rec) == (1, 3)
            })
            .into())
    }

    /// `ρ_{c,d}(s,n)`, or `ρ_d(s,n)` when `c` is `None`: type `(s,1,n-s-1)`
    /// with `1`, `2` and `N` in the last row.
    pub fn count_rho(&self, s: usize, n: usize, c: Option<u32>, d: u32) -> Result<ExactCount> {
        if n <= s + 1 {
            return Err(domain("count_rho", &[s as i64, n as i64], "need n > s + 1"));
        }
        check_labels("count_rho", &[d], 3)?;
        if let Some(c) = c {
            check_labels("count_rho", &[c], 3)?;
        }
        let tv = TypeVector::three_species(s, 1, n)?;
        let space = self.space(&tv, &[(1, 2), (2, 2), (tv.total() as u32, 2)])?;
        Ok(self
            .count_where(&space, |masks| {
                let rec = project(masks);
                let (x, y) = first_two(masks, &rec);
                y == d && c.is_none_or(|c| c == x)
            })
            .into())
    }

    /// Number of cyclically adjacent `(x, y)` letter pairs summed over all
    /// placements of `tv`, with no condition on where `N` sits.
    pub fn rotation_total(&self, tv: &TypeVector, x: u32, y: u32) -> Result<ExactCount> {
        let space = self.space(tv, &[])?;
        let last = tv.row_sizes()[tv.species() - 1];
        Ok(BigInt::from(self.fold(
            &space,
            || 0u64,
            |acc, masks| {
                let rec = project(masks);
                let word = last_row_word(masks, &rec);
                for a in 0..last {
                    *acc += (word[a] == x && word[(a + 1) % last] == y) as u64;
                }
            },
            |a, b| *a += b,
        )))
    }

    /// `T^<(s,t)` and `T^>(s,t)` from enumeration, with both values zero
    /// when `t = 0`, `s + t = n`, or an argument is negative.
    pub fn t_values(&self, s: i64, t: i64, n: usize) -> Result<(ExactRatio, ExactRatio)> {
        let zero = (BigRational::zero(), BigRational::zero());
        if s < 0 || t <= 0 || s + t >= n as i64 {
            return Ok(zero);
        }
        let (s, t) = (s as usize, t as usize);
        let pc = self.three_species_pairs("t_values", s, t, n)?;
        let total = multinomial((n + 2 * s + t) as i64, &[s as i64, (s + t) as i64, n as i64]);
        Ok((
            BigRational::new(pc.pair(2, 3).into(), total.clone()),
            BigRational::new(pc.pair(3, 2).into(), total),
        ))
    }

    /// `c_{i,j}(n)` assembled by inclusion–exclusion from three-species
    /// enumerations.
    pub fn correlations_via_projection(&self, n: usize) -> Result<CorrelationTable> {
        if n < 2 {
            return Err(domain("correlations_via_projection", &[n as i64], "n must be at least 2"));
        }
        let mut cache: HashMap<(i64, i64), (ExactRatio, ExactRatio)> = HashMap::new();
        let mut entries = BTreeMap::new();
        for i in 1..=n {
            for j in 1..=n {
                if i == j {
                    entries.insert((i, j), BigRational::zero());
                    continue;
                }
                let value = inclusion_exclusion(n, i, j, |s, t| {
                    if let Some(v) = cache.get(&(s, t)) {
                        return Ok(v.clone());
                    }
                    let v = self.t_values(s, t, n)?;
                    cache.insert((s, t), v.clone());
                    Ok(v)
                })?;
                entries.insert((i, j), value);
            }
        }
        Ok(CorrelationTable { n, entries })
    }
}

/// Combines `T^<` (for `i < j`) or `T^>` (for `i > j`) at the four shifted
/// arguments with the weights `(n+i+j-2, -(n+i+j-1), -(n+i+j-1), n+i+j)`.
pub fn inclusion_exclusion<F>(n: usize, i: usize, j: usize, mut t: F) -> Result<ExactRatio>
where
    F: FnMut(i64, i64) -> Result<(ExactRatio, ExactRatio)>,
{
    let (n, i, j) = (n as i64, i as i64, j as i64);
    let lo = i.min(j);
    let gap = (i - j).abs();
    let args = [(lo - 1, gap), (lo, gap - 1), (lo - 1, gap + 1), (lo, gap)];
    let weights = [n + i + j - 2, -(n + i + j - 1), -(n + i + j - 1), n + i + j];
    let mut acc = BigRational::zero();
    for (&(s, tt), &w) in args.iter().zip(&weights) {
        let (lt, gt) = t(s, tt)?;
        let v = if i < j { lt } else { gt };
        acc += v * BigRational::from_integer(w.into());
    }
    Ok(acc)
}

fn check_labels(op: &'static str, labels: &[u32], max: u32) -> Result<()> {
    if labels.iter().any(|&l| l == 0 || l > max) {
        return Err(domain(op, &labels.iter().map(|&l| l as i64).collect::<Vec<_>>(), "label out of range"));
    }
    Ok(())
}

#[inline(always)]
fn project(masks: &[u64]) -> FastRecorder {
    let mut rec = FastRecorder::new();
    project_masks(masks, false, &mut rec);
    rec
}

#[inline(always)]
fn nth_value(mut m: u64, k: usize) -> u32 {
    for _ in 0..k {
        m &= m.wrapping_sub(1);
    }
    m.trailing_zeros() + 1
}

#[inline(always)]
fn first_two(masks: &[u64], rec: &FastRecorder) -> (u32, u32) {
    let last = masks[masks.len() - 1];
    let a = last.trailing_zeros() + 1;
    let b = (last & (last - 1)).trailing_zeros() + 1;
    (rec.labels[a as usize] as u32, rec.labels[b as usize] as u32)
}

#[inline(always)]
fn nth_letter(masks: &[u64], rec: &FastRecorder, k: usize) -> u32 {
    rec.labels[nth_value(masks[masks.len() - 1], k) as usize] as u32
}

fn last_row_word(masks: &[u64], rec: &FastRecorder) -> Vec<u32> {
    let mut m = masks[masks.len() - 1];
    let mut word = Vec::with_capacity(m.count_ones() as usize);
    while m != 0 {
        word.push(rec.labels[m.trailing_zeros() as usize + 1] as u32);
        m &= m - 1;
    }
    word
}

/// Projected word via the fast kernel, for callers holding a placement.
pub fn fast_word(p: &Placement) -> Vec<u32> {
    let rec = project(p.masks());
    last_row_word(p.masks(), &rec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::queue::bully_project;

    fn engine() -> Engine {
        Engine::new(2, DEFAULT_GUARD)
    }

    fn r(p: i64, q: i64) -> ExactRatio {
        BigRational::new(p.into(), q.into())
    }

    #[test]
    fn small_word_distributions() {
        let e = engine();
        let d = e.word_distribution(&TypeVector::new(vec![1]).unwrap()).unwrap();
        assert_eq!(d.counts.len(), 1);
        assert_eq!(d.counts[&vec![1]], 1.into());
        let d = e.word_distribution(&TypeVector::new(vec![1, 1]).unwrap()).unwrap();
        assert_eq!(d.total, 3.into());
        assert!(d.counts.keys().all(|w| w == &vec![1, 2] || w == &vec![2, 1]));
        let d = e.word_distribution(&TypeVector::ones(3).unwrap()).unwrap();
        assert_eq!(d.total, 60.into());
    }

    #[test]
    fn word_distribution_matches_traced_projection() {
        let tv = TypeVector::new(vec![1, 2, 1]).unwrap();
        let e = engine();
        let d = e.word_distribution(&tv).unwrap();
        let mut hand: BTreeMap<Vec<u32>, ExactCount> = BTreeMap::new();
        for p in PlacementSpace::new(&tv).unwrap().iter() {
            *hand.entry(bully_project(&p).word).or_default() += 1;
        }
        assert_eq!(d.counts, hand);
    }

    #[test]
    fn direct_correlations_small() {
        let e = engine();
        let t2 = e.correlations_direct(2).unwrap();
        assert_eq!(t2.get(1, 2), Some(&r(1, 1)));
        assert_eq!(t2.get(2, 1), Some(&r(1, 1)));
        let t3 = e.correlations_direct(3).unwrap();
        let expected = [((1, 2), (4, 5)), ((1, 3), (1, 5)), ((2, 1), (1, 5)), ((2, 3), (4, 5)), ((3, 1), (4, 5)), ((3, 2), (1, 5))];
        for ((i, j), (p, q)) in expected {
            assert_eq!(t3.get(i, j), Some(&r(p, q)), "c({i},{j})");
        }
        for i in 1..=3 {
            assert_eq!(t3.row_sum(i), r(1, 1));
        }
    }

    #[test]
    fn projection_route_agrees_with_direct() {
        let e = engine();
        for n in 2..=4 {
            assert_eq!(e.correlations_via_projection(n).unwrap(), e.correlations_direct(n).unwrap());
        }
    }

    #[test]
    fn table_cells() {
        let e = engine();
        assert_eq!(e.count_conditioned(1, 1, 5, 1, 3).unwrap(), 9.into());
        assert_eq!(e.count_conditioned(2, 2, 5, 1, 3).unwrap(), 140.into());
        assert_eq!(e.count_conditioned(2, 3, 5, 1, 3).unwrap(), 0.into());
        assert_eq!(e.count_first_only(1, 1, 5, 3).unwrap(), 63.into());
        let (a, b) = e.count_alpha_beta(1, 1, 5).unwrap();
        assert_eq!((a, b), (9.into(), 0.into()));
        assert_eq!(e.count_alpha_beta(3, 1, 5).unwrap().1, 154.into());
    }

    #[test]
    fn delta_counts() {
        let e = engine();
        assert_eq!(e.count_delta(1, 3, 2, Some(2)).unwrap(), 1.into());
        assert_eq!(e.count_delta(2, 4, 1, None).unwrap(), 5.into());
        let d11 = e.count_delta(2, 4, 1, Some(1)).unwrap();
        let d12 = e.count_delta(2, 4, 1, Some(2)).unwrap();
        assert_eq!(d11 + d12, 5.into());
        for a in 1..=4 {
            assert_eq!(e.delta_at_position(2, 4, 1, a).unwrap(), 5.into());
        }
        assert!(e.count_delta(0, 3, 1, None).is_err());
    }

    #[test]
    fn gamma_and_rho() {
        let e = engine();
        assert_eq!(e.count_gamma(2, 4, 2).unwrap(), 5.into());
        assert_eq!(e.count_rho(1, 3, Some(2), 3).unwrap(), 3.into());
        assert_eq!(e.count_rho(2, 4, Some(2), 3).unwrap(), 40.into());
        assert!(e.count_rho(2, 3, Some(2), 3).is_err());
        assert!(e.count_gamma(2, 4, 3).is_err());
    }

    #[test]
    fn guard_refuses_large_types() {
        let e = Engine::new(1, 10);
        assert!(e.correlations_direct(4).is_ok());
        assert!(matches!(e.correlations_direct(5), Err(Error::GuardExceeded { total: 15, .. })));
        let tv = TypeVector::new(vec![2, 2, 2]).unwrap();
        assert!(matches!(e.word_distribution(&tv), Err(Error::GuardExceeded { total: 12, guard: 10, .. })));
    }

    #[test]
    fn worker_count_does_not_change_results() {
        let tv = TypeVector::three_species(2, 1, 4).unwrap();
        let one = Engine::new(1, 24).pair_counts(&tv).unwrap();
        let many = Engine::new(8, 24).pair_counts(&tv).unwrap();
        assert_eq!(one, many);
    }
}
