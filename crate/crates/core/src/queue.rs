//! Multiline queues and the bully-path projection.
//!
//! A placement stores each row as a bitmask over `1..=N` (value `v` is bit
//! `v - 1`), which keeps the projection kernel branch-light. Rows are
//! indexed from 0 throughout the API; row `r` produces label `r + 1`.

use std::fmt;

use crate::error::{Error, Result};

/// Largest `N` a placement may have (one `u64` mask per row).
pub const MAX_ENTRIES: usize = 64;
/// Largest number of rows the projection kernel handles.
pub const MAX_ROWS: usize = 16;

/// Species multiplicities `m = (m_1, …, m_n)` with prefix sums `S_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TypeVector {
    m: Vec<usize>,
    sizes: Vec<usize>,
    total: usize,
}

impl TypeVector {
    /// Zero multiplicities are allowed; at least one species is required.
    pub fn new(m: impl Into<Vec<usize>>) -> Result<Self> {
        let m = m.into();
        if m.is_empty() {
            return Err(Error::InvalidTypeVector {
                m: vec![],
                reason: "at least one species is required".into(),
            });
        }
        let sizes: Vec<usize> = m
            .iter()
            .scan(0, |acc, &x| {
                *acc += x;
                Some(*acc)
            })
            .collect();
        let total = sizes.iter().sum();
        Ok(TypeVector { m, sizes, total })
    }

    pub fn from_signed(m: &[i64]) -> Result<Self> {
        if m.iter().any(|&x| x < 0) {
            return Err(Error::InvalidTypeVector {
                m: m.to_vec(),
                reason: "multiplicities must be non-negative".into(),
            });
        }
        TypeVector::new(m.iter().map(|&x| x as usize).collect::<Vec<_>>())
    }

    /// `m_{s,t} = (s, t, n − s − t)`.
    pub fn three_species(s: usize, t: usize, n: usize) -> Result<Self> {
        TypeVector::from_signed(&[s as i64, t as i64, n as i64 - s as i64 - t as i64])
    }

    /// `(s, n − s)`.
    pub fn two_species(s: usize, n: usize) -> Result<Self> {
        TypeVector::from_signed(&[s as i64, n as i64 - s as i64])
    }

    /// `(1, 1, …, 1)` with `n` ones.
    pub fn ones(n: usize) -> Result<Self> {
        TypeVector::new(vec![1; n])
    }

    /// Type vector whose prefix sums are the given row lengths.
    pub fn from_row_lengths(lengths: &[usize]) -> Result<Self> {
        let mut m = Vec::with_capacity(lengths.len());
        let mut prev = 0;
        for &len in lengths {
            if len < prev {
                return Err(Error::InvalidTypeVector {
                    m: lengths.iter().map(|&x| x as i64).collect(),
                    reason: "row lengths must be weakly increasing".into(),
                });
            }
            m.push(len - prev);
            prev = len;
        }
        TypeVector::new(m)
    }

    pub fn m(&self) -> &[usize] {
        &self.m
    }

    /// Row lengths `S_1, …, S_n`.
    pub fn row_sizes(&self) -> &[usize] {
        &self.sizes
    }

    /// `N = Σ S_i`.
    pub fn total(&self) -> usize {
        self.total
    }

    /// Number of species `n`.
    pub fn species(&self) -> usize {
        self.m.len()
    }
}

impl fmt::Display for TypeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.m.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A continuous multiline queue: rows of distinct integers from `1..=N`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Placement {
    masks: Vec<u64>,
}

impl Placement {
    /// Builds and validates a placement from explicit rows. Each row must be
    /// strictly increasing, row lengths weakly increasing, and the entries
    /// a permutation of `1..=N`.
    pub fn from_rows(rows: &[Vec<u32>]) -> Result<Self> {
        let lengths: Vec<usize> = rows.iter().map(Vec::len).collect();
        let tv = TypeVector::from_row_lengths(&lengths)
            .map_err(|_| Error::InvalidPlacement("row lengths must be weakly increasing".into()))?;
        Placement::with_type(rows, &tv)
    }

    /// Like [`Placement::from_rows`] but checks against a given type.
    pub fn with_type(rows: &[Vec<u32>], tv: &TypeVector) -> Result<Self> {
        check_rows(rows, tv).map_err(Error::InvalidPlacement)?;
        Ok(Placement::from_rows_unchecked(rows))
    }

    /// No validation; callers guarantee the rows form a placement.
    pub fn from_rows_unchecked(rows: &[Vec<u32>]) -> Self {
        let masks = rows
            .iter()
            .map(|row| row.iter().fold(0u64, |m, &v| m | bit(v)))
            .collect();
        Placement { masks }
    }

    pub(crate) fn from_masks(masks: Vec<u64>) -> Self {
        Placement { masks }
    }

    /// Rank encoding of real positions: every entry is replaced by its rank
    /// among all entries. Rows may be given in any order; ties are rejected.
    pub fn from_positions<T: PartialOrd + Copy>(rows: &[Vec<T>]) -> Result<Self> {
        let mut all: Vec<(T, usize)> = rows
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().map(move |&x| (x, r)))
            .collect();
        if all.len() > MAX_ENTRIES {
            return Err(Error::InvalidPlacement(format!(
                "{} entries exceed the limit of {MAX_ENTRIES}",
                all.len()
            )));
        }
        let mut failed = false;
        all.sort_by(|a, b| {
            a.0.partial_cmp(&b.0).unwrap_or_else(|| {
                failed = true;
                std::cmp::Ordering::Equal
            })
        });
        if failed || all.windows(2).any(|w| w[0].0 >= w[1].0) {
            return Err(Error::InvalidPlacement(
                "positions must be distinct and comparable".into(),
            ));
        }
        let mut ranked: Vec<Vec<u32>> = vec![Vec::new(); rows.len()];
        for (rank, &(_, r)) in all.iter().enumerate() {
            ranked[r].push(rank as u32 + 1);
        }
        Placement::from_rows(&ranked)
    }

    pub fn rows(&self) -> Vec<Vec<u32>> {
        self.masks.iter().map(|&m| mask_values(m)).collect()
    }

    pub fn row(&self, r: usize) -> Vec<u32> {
        mask_values(self.masks[r])
    }

    pub fn masks(&self) -> &[u64] {
        &self.masks
    }

    pub fn species(&self) -> usize {
        self.masks.len()
    }

    pub fn total(&self) -> usize {
        self.masks.iter().map(|m| m.count_ones() as usize).sum()
    }

    pub fn type_vector(&self) -> TypeVector {
        let lengths: Vec<usize> = self.masks.iter().map(|m| m.count_ones() as usize).collect();
        TypeVector::from_row_lengths(&lengths).expect("placement row lengths are monotone")
    }

    /// Entry `M_{r,k}` (both 0-based).
    pub fn entry(&self, r: usize, k: usize) -> Option<u32> {
        self.row(r).get(k).copied()
    }

    /// True if the largest entry `N` lies in the last row.
    pub fn max_in_last_row(&self) -> bool {
        let n = self.total();
        n > 0 && self.masks.last().is_some_and(|&m| m & bit(n as u32) != 0)
    }

    /// Adds 1 mod `N` to every entry.
    pub fn shift(&self) -> Placement {
        let n = self.total() as u32;
        let top = bit(n);
        let masks = self
            .masks
            .iter()
            .map(|&m| {
                let wrapped = if m & top != 0 { 1 } else { 0 };
                ((m & !top) << 1) | wrapped
            })
            .collect();
        Placement { masks }
    }

    /// One row per line, entries separated by single spaces.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for row in self.rows() {
            let line: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }

    /// Parses the text format. Blank lines and lines starting with `#` are
    /// skipped; errors carry the 1-based line number.
    pub fn parse(text: &str) -> Result<Self> {
        let mut rows = Vec::new();
        let mut lines = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut row = Vec::new();
            for tok in line.split_whitespace() {
                let v: u32 = tok.parse().map_err(|_| Error::Parse {
                    line: idx + 1,
                    message: format!("expected a positive integer, found {tok:?}"),
                })?;
                row.push(v);
            }
            rows.push(row);
            lines.push(idx + 1);
        }
        if rows.is_empty() {
            return Err(Error::Parse {
                line: 0,
                message: "no rows found".into(),
            });
        }
        let total: usize = rows.iter().map(Vec::len).sum();
        for (row, &line) in rows.iter().zip(&lines) {
            if let Some(w) = row.windows(2).find(|w| w[0] >= w[1]) {
                return Err(Error::Parse {
                    line,
                    message: format!("row is not strictly increasing at {} {}", w[0], w[1]),
                });
            }
            if let Some(&v) = row.iter().find(|&&v| v == 0 || v as usize > total) {
                return Err(Error::Parse {
                    line,
                    message: format!("entry {v} is outside 1..={total}"),
                });
            }
        }
        for (k, w) in rows.windows(2).enumerate() {
            if w[1].len() < w[0].len() {
                return Err(Error::Parse {
                    line: lines[k + 1],
                    message: "row is shorter than the row above it".into(),
                });
            }
        }
        Placement::from_rows(&rows).map_err(|e| Error::Parse {
            line: *lines.last().unwrap(),
            message: e.to_string(),
        })
    }
}

impl fmt::Display for Placement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows()
            .iter()
            .map(|r| r.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" "))
            .collect();
        write!(f, "{}", rows.join(" / "))
    }
}

#[inline]
fn bit(v: u32) -> u64 {
    1u64 << (v - 1)
}

pub(crate) fn mask_values(mut m: u64) -> Vec<u32> {
    let mut out = Vec::with_capacity(m.count_ones() as usize);
    while m != 0 {
        out.push(m.trailing_zeros() + 1);
        m &= m - 1;
    }
    out
}

fn check_rows(rows: &[Vec<u32>], tv: &TypeVector) -> std::result::Result<(), String> {
    if rows.len() != tv.species() {
        return Err(format!("expected {} rows, found {}", tv.species(), rows.len()));
    }
    if tv.species() > MAX_ROWS {
        return Err(format!("{} rows exceed the limit of {MAX_ROWS}", tv.species()));
    }
    let total = tv.total();
    if total > MAX_ENTRIES {
        return Err(format!("N = {total} exceeds the limit of {MAX_ENTRIES}"));
    }
    let mut seen = 0u64;
    for (r, (row, &size)) in rows.iter().zip(tv.row_sizes()).enumerate() {
        if row.len() != size {
            return Err(format!("row {} has {} entries, expected {size}", r + 1, row.len()));
        }
        if row.windows(2).any(|w| w[0] >= w[1]) {
            return Err(format!("row {} is not strictly increasing", r + 1));
        }
        for &v in row {
            if v == 0 || v as usize > total {
                return Err(format!("entry {v} in row {} is outside 1..={total}", r + 1));
            }
            if seen & bit(v) != 0 {
                return Err(format!("entry {v} appears more than once"));
            }
            seen |= bit(v);
        }
    }
    Ok(())
}

/// True iff `rows` is a placement of type `tv`.
pub fn validate_placement(rows: &[Vec<u32>], tv: &TypeVector) -> bool {
    check_rows(rows, tv).is_ok()
}

/// One step of a bully path.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PathNode {
    pub row: usize,
    /// Entry value (continuous) or 1-based site index (discrete).
    pub value: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BullyPath {
    pub label: u32,
    pub nodes: Vec<PathNode>,
}

/// A step that found nothing larger and took the smallest available entry.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct WrapEvent {
    pub from_row: usize,
    /// The entry doing the bullying.
    pub value: u32,
    /// The entry it wrapped to in the next row.
    pub target: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectionResult {
    pub word: Vec<u32>,
    pub paths: Vec<BullyPath>,
    pub wraps: Vec<WrapEvent>,
}

impl ProjectionResult {
    /// The word as a digit string (labels above 9 are bracketed).
    pub fn word_string(&self) -> String {
        word_to_string(&self.word)
    }

    /// Target of the step leaving `(row, value)`, if any.
    pub fn bullies(&self, row: usize, value: u32) -> Option<u32> {
        self.paths.iter().find_map(|p| {
            p.nodes
                .windows(2)
                .find(|w| w[0].row == row && w[0].value == value)
                .map(|w| w[1].value)
        })
    }

    pub fn wrapped(&self, row: usize, value: u32) -> bool {
        self.wraps.iter().any(|w| w.from_row == row && w.value == value)
    }
}

pub fn word_to_string(word: &[u32]) -> String {
    word.iter()
        .map(|&l| if l < 10 { l.to_string() } else { format!("[{l}]") })
        .collect()
}

/// Number of wrap events leaving row `from_row` (0-based).
pub fn wrap_count(res: &ProjectionResult, from_row: usize) -> usize {
    res.wraps.iter().filter(|w| w.from_row == from_row).count()
}

/// Callbacks from the projection kernel.
pub(crate) trait Recorder {
    #[inline]
    fn begin(&mut self, _row: usize, _value: u32) {}
    #[inline]
    fn step(&mut self, _from_row: usize, _from: u32, _to: u32, _wrapped: bool) {}
    fn finish(&mut self, label: u32, last: u32);
}

/// Records only the label of each last-row entry and per-row wrap counts.
pub(crate) struct FastRecorder {
    pub labels: [u8; MAX_ENTRIES + 1],
    pub wraps: [u8; MAX_ROWS],
}

impl FastRecorder {
    pub fn new() -> Self {
        FastRecorder {
            labels: [0; MAX_ENTRIES + 1],
            wraps: [0; MAX_ROWS],
        }
    }
}

impl Recorder for FastRecorder {
    #[inline(always)]
    fn step(&mut self, from_row: usize, _from: u32, _to: u32, wrapped: bool) {
        self.wraps[from_row] += wrapped as u8;
    }
    #[inline(always)]
    fn finish(&mut self, label: u32, last: u32) {
        self.labels[last as usize] = label as u8;
    }
}

#[derive(Default)]
struct TraceRecorder {
    paths: Vec<BullyPath>,
    wraps: Vec<WrapEvent>,
    current: Vec<PathNode>,
}

impl Recorder for TraceRecorder {
    fn begin(&mut self, row: usize, value: u32) {
        self.current = vec![PathNode { row, value }];
    }
    fn step(&mut self, from_row: usize, from: u32, to: u32, wrapped: bool) {
        self.current.push(PathNode {
            row: from_row + 1,
            value: to,
        });
        if wrapped {
            self.wraps.push(WrapEvent {
                from_row,
                value: from,
                target: to,
            });
        }
    }
    fn finish(&mut self, label: u32, _last: u32) {
        self.paths.push(BullyPath {
            label,
            nodes: std::mem::take(&mut self.current),
        });
    }
}

/// Mask of bits strictly above value `v` (continuous) or at/above site `v`
/// (discrete, `inclusive`).
#[inline(always)]
fn above(avail: u64, v: u32, inclusive: bool) -> u64 {
    let shift = if inclusive { v - 1 } else { v };
    if shift >= 64 {
        0
    } else {
        avail & (!0u64 << shift)
    }
}

/// The projection kernel. Starts in each row are taken in increasing order.
#[inline(always)]
pub(crate) fn project_masks<R: Recorder>(masks: &[u64], inclusive: bool, rec: &mut R) {
    let n = masks.len();
    let mut avail = [0u64; MAX_ROWS];
    avail[..n].copy_from_slice(masks);
    for r in 0..n {
        let mut starts = avail[r];
        avail[r] = 0;
        while starts != 0 {
            let v = starts.trailing_zeros() + 1;
            starts &= starts - 1;
            rec.begin(r, v);
            let mut cur = v;
            for (rr, row_avail) in avail.iter_mut().enumerate().take(n).skip(r + 1) {
                let higher = above(*row_avail, cur, inclusive);
                let (next, wrapped) = if higher != 0 {
                    (higher.trailing_zeros() + 1, false)
                } else {
                    (row_avail.trailing_zeros() + 1, true)
                };
                *row_avail &= !(1u64 << (next - 1));
                rec.step(rr - 1, cur, next, wrapped);
                cur = next;
            }
            rec.finish(r as u32 + 1, cur);
        }
    }
}

/// Projection with a caller-chosen construction order inside each row.
/// `order[r]` is a permutation of `0..k` where `k` is the number of starts
/// still available in row `r` when that row is processed, listed in
/// increasing order of value.
fn project_masks_ordered<R: Recorder>(
    masks: &[u64],
    inclusive: bool,
    order: &[Vec<usize>],
    rec: &mut R,
) -> std::result::Result<(), String> {
    let n = masks.len();
    let mut avail = masks.to_vec();
    for r in 0..n {
        let starts = mask_values(avail[r]);
        avail[r] = 0;
        let perm = &order[r];
        let mut sorted = perm.clone();
        sorted.sort_unstable();
        if sorted != (0..starts.len()).collect::<Vec<_>>() {
            return Err(format!(
                "order for row {} must permute 0..{}",
                r + 1,
                starts.len()
            ));
        }
        for &idx in perm {
            let v = starts[idx];
            rec.begin(r, v);
            let mut cur = v;
            for rr in r + 1..n {
                let higher = above(avail[rr], cur, inclusive);
                let (next, wrapped) = if higher != 0 {
                    (higher.trailing_zeros() + 1, false)
                } else {
                    (avail[rr].trailing_zeros() + 1, true)
                };
                avail[rr] &= !(1u64 << (next - 1));
                rec.step(rr - 1, cur, next, wrapped);
                cur = next;
            }
            rec.finish(r as u32 + 1, cur);
        }
    }
    Ok(())
}

fn assemble(masks: &[u64], rec: TraceRecorder, word_len: Option<usize>, empty_label: u32) -> ProjectionResult {
    let last = *masks.last().unwrap_or(&0);
    let mut label_at = [0u32; MAX_ENTRIES + 1];
    for p in &rec.paths {
        label_at[p.nodes.last().unwrap().value as usize] = p.label;
    }
    let word = match word_len {
        None => mask_values(last).iter().map(|&v| label_at[v as usize]).collect(),
        Some(len) => (1..=len as u32)
            .map(|site| {
                if last & (1u64 << (site - 1)) != 0 {
                    label_at[site as usize]
                } else {
                    empty_label
                }
            })
            .collect(),
    };
    ProjectionResult {
        word,
        paths: rec.paths,
        wraps: rec.wraps,
    }
}

/// Bully-path projection of a placement with the full trace.
pub fn bully_project(p: &Placement) -> ProjectionResult {
    let mut rec = TraceRecorder::default();
    project_masks(p.masks(), false, &mut rec);
    assemble(p.masks(), rec, None, 0)
}

/// Projection of a placement checked against a type vector.
pub fn bully_project_typed(p: &Placement, tv: &TypeVector) -> Result<ProjectionResult> {
    check_rows(&p.rows(), tv).map_err(Error::InvalidPlacement)?;
    Ok(bully_project(p))
}

/// Projection with an explicit path construction order in every row.
pub fn bully_project_ordered(p: &Placement, order: &[Vec<usize>]) -> Result<ProjectionResult> {
    if order.len() != p.species() {
        return Err(Error::InvalidPlacement(format!(
            "expected an order for each of the {} rows",
            p.species()
        )));
    }
    let mut rec = TraceRecorder::default();
    project_masks_ordered(p.masks(), false, order, &mut rec).map_err(Error::InvalidPlacement)?;
    Ok(assemble(p.masks(), rec, None, 0))
}

/// Projected word only; avoids building the trace.
pub fn project_word(p: &Placement) -> Vec<u32> {
    let mut rec = FastRecorder::new();
    project_masks(p.masks(), false, &mut rec);
    mask_values(*p.masks().last().unwrap())
        .iter()
        .map(|&v| rec.labels[v as usize] as u32)
        .collect()
}

/// A discrete multiline queue on a ring of `L` sites.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DiscreteMlq {
    sites: usize,
    masks: Vec<u64>,
}

impl DiscreteMlq {
    /// `rows[r]` lists the occupied 1-based sites of row `r`.
    pub fn new(sites: usize, rows: &[Vec<u32>]) -> Result<Self> {
        if sites == 0 || sites > MAX_ENTRIES {
            return Err(Error::InvalidQueue(format!(
                "ring length must be in 1..={MAX_ENTRIES}, got {sites}"
            )));
        }
        if rows.is_empty() || rows.len() > MAX_ROWS {
            return Err(Error::InvalidQueue(format!(
                "number of rows must be in 1..={MAX_ROWS}"
            )));
        }
        let mut masks = Vec::with_capacity(rows.len());
        for (r, row) in rows.iter().enumerate() {
            if row.len() > sites {
                return Err(Error::InvalidQueue(format!(
                    "row {} has {} particles on {sites} sites",
                    r + 1,
                    row.len()
                )));
            }
            let mut m = 0u64;
            for &s in row {
                if s == 0 || s as usize > sites {
                    return Err(Error::InvalidQueue(format!(
                        "site {s} in row {} is outside 1..={sites}",
                        r + 1
                    )));
                }
                if m & bit(s) != 0 {
                    return Err(Error::InvalidQueue(format!(
                        "site {s} appears twice in row {}",
                        r + 1
                    )));
                }
                m |= bit(s);
            }
            masks.push(m);
        }
        let sizes: Vec<usize> = masks.iter().map(|m| m.count_ones() as usize).collect();
        if sizes.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidQueue(
                "row occupancies must be weakly increasing".into(),
            ));
        }
        Ok(DiscreteMlq { sites, masks })
    }

    /// One row per line; `x` marks an occupied site and `.` an empty one.
    pub fn parse(text: &str) -> Result<Self> {
        let mut rows = Vec::new();
        let mut width = None;
        for (idx, raw) in text.lines().enumerate() {
            let line: String = raw.chars().filter(|c| !c.is_whitespace()).collect();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut row = Vec::new();
            for (k, c) in line.chars().enumerate() {
                match c {
                    'x' | 'X' => row.push(k as u32 + 1),
                    '.' => {}
                    other => {
                        return Err(Error::Parse {
                            line: idx + 1,
                            message: format!("unexpected character {other:?}; use 'x' or '.'"),
                        })
                    }
                }
            }
            let len = line.chars().count();
            match width {
                None => width = Some(len),
                Some(w) if w != len => {
                    return Err(Error::Parse {
                        line: idx + 1,
                        message: format!("row has {len} sites, expected {w}"),
                    })
                }
                _ => {}
            }
            rows.push(row);
        }
        let Some(width) = width else {
            return Err(Error::Parse {
                line: 0,
                message: "no rows found".into(),
            });
        };
        DiscreteMlq::new(width, &rows).map_err(|e| Error::Parse {
            line: 0,
            message: e.to_string(),
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for &m in &self.masks {
            for s in 0..self.sites {
                out.push(if m >> s & 1 == 1 { 'x' } else { '.' });
            }
            out.push('\n');
        }
        out
    }

    pub fn sites(&self) -> usize {
        self.sites
    }

    pub fn rows(&self) -> Vec<Vec<u32>> {
        self.masks.iter().map(|&m| mask_values(m)).collect()
    }

    pub fn species(&self) -> usize {
        self.masks.len()
    }

    pub fn type_vector(&self) -> TypeVector {
        let lengths: Vec<usize> = self.masks.iter().map(|m| m.count_ones() as usize).collect();
        TypeVector::from_row_lengths(&lengths).expect("validated at construction")
    }

    /// Rank encoding as a placement, available when no site is occupied in
    /// more than one row.
    pub fn to_placement(&self) -> Option<Placement> {
        let mut seen = 0u64;
        for &m in &self.masks {
            if seen & m != 0 {
                return None;
            }
            seen |= m;
        }
        let rows: Vec<Vec<u32>> = self
            .masks
            .iter()
            .map(|&m| {
                mask_values(m)
                    .iter()
                    .map(|&s| (seen & ((1u64 << (s - 1)) - 1)).count_ones() + 1)
                    .collect()
            })
            .collect();
        Some(Placement::from_rows_unchecked(&rows))
    }
}

/// Discrete projection: a path at site `s` drops to the first available
/// particle at a site `≥ s` in the next row, cyclically. Unoccupied sites of
/// the last row receive label `n + 1`.
pub fn bully_project_discrete(q: &DiscreteMlq) -> ProjectionResult {
    let mut rec = TraceRecorder::default();
    project_masks(&q.masks, true, &mut rec);
    assemble(&q.masks, rec, Some(q.sites), q.species() as u32 + 1)
}

/// Discrete projection with an explicit construction order per row.
pub fn bully_project_discrete_ordered(q: &DiscreteMlq, order: &[Vec<usize>]) -> Result<ProjectionResult> {
    if order.len() != q.species() {
        return Err(Error::InvalidQueue(format!(
            "expected an order for each of the {} rows",
            q.species()
        )));
    }
    let mut rec = TraceRecorder::default();
    project_masks_ordered(&q.masks, true, order, &mut rec).map_err(Error::InvalidQueue)?;
    Ok(assemble(&q.masks, rec, Some(q.sites), q.species() as u32 + 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example() -> Placement {
        Placement::from_rows(&[
            vec![5],
            vec![1, 3, 7, 9],
            vec![8, 10, 13, 15, 16],
            vec![2, 4, 6, 11, 12, 14, 17],
        ])
        .unwrap()
    }

    #[test]
    fn type_vector_prefix_sums() {
        let tv = TypeVector::new(vec![1, 3, 1, 2]).unwrap();
        assert_eq!(tv.row_sizes(), &[1, 4, 5, 7]);
        assert_eq!(tv.total(), 17);
        assert_eq!(tv.species(), 4);
        assert_eq!(TypeVector::three_species(2, 0, 5).unwrap().m(), &[2, 0, 3]);
        assert!(TypeVector::three_species(3, 3, 5).is_err());
        assert!(TypeVector::new(Vec::new()).is_err());
    }

    #[test]
    fn validation() {
        let tv = TypeVector::new(vec![1, 3, 1, 2]).unwrap();
        let mut rows = example().rows();
        assert!(validate_placement(&rows, &tv));
        rows[1].swap(0, 1);
        assert!(!validate_placement(&rows, &tv));
        let dup = vec![vec![5], vec![1, 3, 7, 9], vec![8, 10, 13, 15, 16], vec![2, 4, 6, 11, 12, 14, 14]];
        assert!(!validate_placement(&dup, &tv));
        assert!(Placement::from_rows(&dup).is_err());
    }

    #[test]
    fn example_projection() {
        let res = bully_project(&example());
        assert_eq!(res.word_string(), "3441222");
        let first = &res.paths[0];
        assert_eq!(first.label, 1);
        let values: Vec<u32> = first.nodes.iter().map(|n| n.value).collect();
        assert_eq!(values, vec![5, 7, 8, 11]);
        assert_eq!(project_word(&example()), res.word);
    }

    #[test]
    fn example_shift() {
        let shifted = example().shift();
        assert_eq!(
            shifted.rows(),
            vec![
                vec![6],
                vec![2, 4, 8, 10],
                vec![9, 11, 14, 16, 17],
                vec![1, 3, 5, 7, 12, 13, 15]
            ]
        );
        let mut p = example();
        for _ in 0..17 {
            p = p.shift();
        }
        assert_eq!(p, example());
        let single = Placement::from_rows(&[vec![1, 2, 3, 4]]).unwrap();
        assert_eq!(single.shift(), single);
    }

    #[test]
    fn single_row_word_is_all_ones() {
        let p = Placement::from_rows(&[vec![1, 2, 3]]).unwrap();
        assert_eq!(bully_project(&p).word, vec![1, 1, 1]);
    }

    #[test]
    fn wrap_counts() {
        let p = Placement::from_rows(&[vec![3], vec![1, 2]]).unwrap();
        let res = bully_project(&p);
        assert_eq!(wrap_count(&res, 0), 1);
        assert_eq!(res.word, vec![1, 2]);
        let res = bully_project(&example());
        let traced: usize = (0..3).map(|r| res.wraps.iter().filter(|w| w.from_row == r).count()).sum();
        assert_eq!(traced, res.wraps.len());
        for w in &res.wraps {
            assert!(w.target < w.value);
            assert_eq!(res.bullies(w.from_row, w.value), Some(w.target));
        }
        // No-wrap staircase: each row sits strictly left of the row below.
        let stairs = Placement::from_rows(&[vec![2], vec![1, 4], vec![3, 5, 6]]).unwrap();
        let res = bully_project(&stairs);
        assert!(res.wraps.is_empty());
    }

    #[test]
    fn text_round_trip() {
        let p = example();
        let text = p.to_text();
        assert_eq!(Placement::parse(&text).unwrap(), p);
        assert_eq!(Placement::parse(&text).unwrap().to_text(), text);
        assert!(matches!(
            Placement::parse("5\n1 3 x 9\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            Placement::parse("2\n3 1\n"),
            Err(Error::Parse { line: 2, .. })
        ));
    }

    #[test]
    fn rank_encoding() {
        let p = Placement::from_positions(&[vec![0.5], vec![0.1, 0.9]]).unwrap();
        assert_eq!(p.rows(), vec![vec![2], vec![1, 3]]);
        assert!(Placement::from_positions(&[vec![0.5], vec![0.5, 0.9]]).is_err());
    }

    #[test]
    fn discrete_basics() {
        let q = DiscreteMlq::new(5, &[vec![2, 4]]).unwrap();
        assert_eq!(bully_project_discrete(&q).word, vec![2, 1, 2, 1, 2]);
        let q = DiscreteMlq::new(6, &[vec![2, 5], vec![2, 3, 5]]).unwrap();
        let res = bully_project_discrete(&q);
        assert_eq!(res.word, vec![3, 1, 2, 3, 1, 3]);
        assert!(DiscreteMlq::new(2, &[vec![1, 2, 3]]).is_err());
        let parsed = DiscreteMlq::parse(&q.to_text()).unwrap();
        assert_eq!(parsed, q);
    }

    #[test]
    fn discrete_wraps_cyclically() {
        let q = DiscreteMlq::new(4, &[vec![4], vec![1, 3]]).unwrap();
        let res = bully_project_discrete(&q);
        assert_eq!(res.word, vec![1, 3, 2, 3]);
        assert_eq!(wrap_count(&res, 0), 1);
    }
}
