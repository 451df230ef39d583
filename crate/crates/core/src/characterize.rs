//! Exhaustive checks of structural statements about the projection:
//! condition-set characterizations of word prefixes, the shift dichotomy,
//! construction-order independence and discrete/continuous agreement.

use crate::engine::Engine;
use crate::error::Result;
use crate::queue::{
    bully_project, bully_project_discrete, bully_project_ordered, project_masks, DiscreteMlq,
    Placement, Recorder, TypeVector, MAX_ENTRIES, MAX_ROWS,
};

/// A placement on which a characterization and the word disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub m: Vec<usize>,
    pub rows: Vec<Vec<u32>>,
    pub word: Vec<u32>,
    /// Value of the condition set.
    pub conditions: bool,
    /// Value of the word-based definition.
    pub word_holds: bool,
}

/// Outcome of one characterization over a family of placements.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CharacterizationReport {
    pub name: &'static str,
    /// Placements visited.
    pub checked: u64,
    /// Placements satisfying the statement's hypotheses.
    pub applicable: u64,
    pub violations: u64,
    /// Violations among types with at least one particle of species 2.
    pub violations_t_positive: u64,
    pub first_counterexample: Option<Counterexample>,
}

impl CharacterizationReport {
    fn new(name: &'static str) -> Self {
        CharacterizationReport {
            name,
            ..Default::default()
        }
    }

    pub fn passed(&self) -> bool {
        self.violations == 0
    }

    fn merge(&mut self, other: CharacterizationReport) {
        self.checked += other.checked;
        self.applicable += other.applicable;
        self.violations += other.violations;
        self.violations_t_positive += other.violations_t_positive;
        if self.first_counterexample.is_none() {
            self.first_counterexample = other.first_counterexample;
        }
    }
}

/// Successor of every entry along its bully path.
struct SuccessorRecorder {
    next: [u8; MAX_ENTRIES + 1],
    wrapped: [bool; MAX_ENTRIES + 1],
    wraps: [u8; MAX_ROWS],
    labels: [u8; MAX_ENTRIES + 1],
}

impl Recorder for SuccessorRecorder {
    #[inline(always)]
    fn step(&mut self, from_row: usize, from: u32, to: u32, wrapped: bool) {
        self.next[from as usize] = to as u8;
        self.wrapped[from as usize] = wrapped;
        self.wraps[from_row] += wrapped as u8;
    }
    #[inline(always)]
    fn finish(&mut self, label: u32, last: u32) {
        self.labels[last as usize] = label as u8;
    }
}

fn values(mut m: u64, out: &mut Vec<u32>) {
    out.clear();
    while m != 0 {
        out.push(m.trailing_zeros() + 1);
        m &= m - 1;
    }
}

/// Indices of the three characterizations in [`characterize_three_species`].
pub const WORD_STARTS_32: usize = 0;
pub const NO_WRAP_13: usize = 1;
pub const ONE_WRAP_13: usize = 2;

/// Condition values for one three-row placement, as `(conditions, word)`
/// pairs; `None` where the statement's hypotheses do not hold.
fn evaluate(masks: &[u64], a: &mut Vec<u32>, b: &mut Vec<u32>, c: &mut Vec<u32>) -> [Option<(bool, bool)>; 3] {
    let mut rec = SuccessorRecorder {
        next: [0; MAX_ENTRIES + 1],
        wrapped: [false; MAX_ENTRIES + 1],
        wraps: [0; MAX_ROWS],
        labels: [0; MAX_ENTRIES + 1],
    };
    project_masks(masks, false, &mut rec);
    values(masks[0], a);
    values(masks[1], b);
    values(masks[2], c);
    let next = |v: u32| rec.next[v as usize] as u32;
    let w1 = rec.labels[c[0] as usize];
    let w2 = rec.labels[c[1] as usize];

    // Word starts 3,2 iff: next(a_1) > c_2 (or no first row), c_1 = 1 and
    // b_1 = 2, and no wrapping out of the first two rows.
    let cond1 = a.is_empty() || next(a[0]) > c[1];
    let cond2 = !b.is_empty() && c[0] == 1 && b[0] == 2;
    let cond3 = rec.wraps[0] == 0 && rec.wraps[1] == 0;
    let starts_32 = Some((cond1 && cond2 && cond3, w1 == 3 && w2 == 2));

    let w13 = w1 == 1 && w2 == 3;
    let usable = !a.is_empty() && b.len() >= 2;

    // No wrapping out of the second row: starts 1,3 iff some a_i -> b_1,
    // b_1 -> c_1 and b_2 > c_2.
    let no_wrap = (usable && rec.wraps[1] == 0).then(|| {
        let conds = a.iter().any(|&x| next(x) == b[0]) && next(b[0]) == c[0] && b[1] > c[1];
        (conds, w13)
    });

    // Exactly one wrap out of the second row: starts 1,3 iff for some i,
    // a_i -> b_{-2} -> c_{-1} and a_{i+1} -> b_{-1} wrapping to c_1, and
    // b_1 > c_2.
    let one_wrap = (usable && rec.wraps[1] == 1).then(|| {
        let (bl2, bl1) = (b[b.len() - 2], b[b.len() - 1]);
        let (cl1, c1) = (c[c.len() - 1], c[0]);
        let chain = a.windows(2).any(|w| {
            next(w[0]) == bl2
                && next(bl2) == cl1
                && next(w[1]) == bl1
                && next(bl1) == c1
                && rec.wrapped[bl1 as usize]
        });
        (chain && b[0] > c[1], w13)
    });
    [starts_32, no_wrap, one_wrap]
}

/// Checks the three characterizations on every placement of every type
/// `(s, t, n-s-t)` with `N <= max_total`, `n >= 2`, and `N` in the last row.
pub fn characterize_three_species(engine: &Engine, max_total: usize) -> Result<[CharacterizationReport; 3]> {
    let names = ["word starts 3,2", "starts 1,3 without wrapping", "starts 1,3 with one wrap"];
    let mut out = names.map(CharacterizationReport::new);
    for n in 2..=max_total {
        for s in 0..=n {
            for t in 0..=n - s {
                let total = n + 2 * s + t;
                if total > max_total {
                    continue;
                }
                let tv = TypeVector::three_species(s, t, n)?;
                let space = engine.space(&tv, &[(total as u32, 2)])?;
                let m = tv.m().to_vec();
                let part = engine.fold(
                    &space,
                    || (names.map(CharacterizationReport::new), Vec::new(), Vec::new(), Vec::new()),
                    |(reps, a, b, c), masks| {
                        let res = evaluate(masks, a, b, c);
                        for (rep, r) in reps.iter_mut().zip(res) {
                            rep.checked += 1;
                            let Some((conds, word)) = r else { continue };
                            rep.applicable += 1;
                            if conds != word {
                                rep.violations += 1;
                                rep.violations_t_positive += (t > 0) as u64;
                                if rep.first_counterexample.is_none() {
                                    let p = Placement::from_masks(masks.to_vec());
                                    rep.first_counterexample = Some(Counterexample {
                                        m: m.clone(),
                                        rows: p.rows(),
                                        word: bully_project(&p).word,
                                        conditions: conds,
                                        word_holds: word,
                                    });
                                }
                            }
                        }
                    },
                    |acc, other| {
                        for (x, y) in acc.0.iter_mut().zip(other.0) {
                            x.merge(y);
                        }
                    },
                );
                for (x, y) in out.iter_mut().zip(part.0) {
                    x.merge(y);
                }
            }
        }
    }
    Ok(out)
}

/// Type vectors with positive first part, `N <= max_total` and at most
/// [`MAX_ROWS`] species, in lexicographic order.
pub fn types_up_to(max_total: usize) -> Vec<TypeVector> {
    fn rec(m: &mut Vec<usize>, size: usize, total: usize, max_total: usize, out: &mut Vec<Vec<usize>>) {
        if !m.is_empty() {
            out.push(m.clone());
        }
        if m.len() == MAX_ROWS {
            return;
        }
        let first = m.is_empty();
        for x in usize::from(first)..=max_total {
            let row = size + x;
            if total + row > max_total {
                break;
            }
            m.push(x);
            rec(m, row, total + row, max_total, out);
            m.pop();
        }
    }
    let mut raw = Vec::new();
    rec(&mut Vec::new(), 0, 0, max_total, &mut raw);
    raw.sort();
    raw.into_iter()
        .map(|m| TypeVector::new(m).expect("generated types are valid"))
        .collect()
}

/// Rotates a word one position to the right.
pub fn rotate_right(word: &[u32]) -> Vec<u32> {
    if word.is_empty() {
        return Vec::new();
    }
    let mut out = Vec::with_capacity(word.len());
    out.push(word[word.len() - 1]);
    out.extend_from_slice(&word[..word.len() - 1]);
    out
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ShiftReport {
    pub types: usize,
    pub checked: u64,
    /// Placements with `N` in the last row whose shifted word is not the
    /// right rotation.
    pub rotation_failures: u64,
    /// Placements with `N` elsewhere whose word changes under the shift.
    pub preservation_failures: u64,
    /// Placements for which `N` shifts do not return the original.
    pub period_failures: u64,
    pub first_failure: Option<(Vec<usize>, Vec<Vec<u32>>)>,
}

impl ShiftReport {
    pub fn passed(&self) -> bool {
        self.rotation_failures + self.preservation_failures + self.period_failures == 0
    }
}

/// The shift dichotomy and `shift^N = id` over every placement of every
/// type with `N <= max_total`.
pub fn shift_suite(engine: &Engine, max_total: usize) -> Result<ShiftReport> {
    let mut report = ShiftReport::default();
    for tv in types_up_to(max_total) {
        report.types += 1;
        let space = engine.space(&tv, &[])?;
        let total = tv.total();
        let top = 1u64 << (total - 1);
        let part = engine.fold(
            &space,
            ShiftReport::default,
            |acc, masks| {
                acc.checked += 1;
                let p = Placement::from_masks(masks.to_vec());
                let shifted = p.shift();
                let w = crate::engine::fast_word(&p);
                let ws = crate::engine::fast_word(&shifted);
                let in_last = masks[masks.len() - 1] & top != 0;
                let ok = if in_last {
                    let ok = ws == rotate_right(&w);
                    acc.rotation_failures += (!ok) as u64;
                    ok
                } else {
                    let ok = ws == w;
                    acc.preservation_failures += (!ok) as u64;
                    ok
                };
                let mut q = shifted;
                for _ in 1..total {
                    q = q.shift();
                }
                let periodic = q == p;
                acc.period_failures += (!periodic) as u64;
                if (!ok || !periodic) && acc.first_failure.is_none() {
                    acc.first_failure = Some((tv.m().to_vec(), p.rows()));
                }
            },
            |acc, other| {
                acc.checked += other.checked;
                acc.rotation_failures += other.rotation_failures;
                acc.preservation_failures += other.preservation_failures;
                acc.period_failures += other.period_failures;
                if acc.first_failure.is_none() {
                    acc.first_failure = other.first_failure;
                }
            },
        );
        report.checked += part.checked;
        report.rotation_failures += part.rotation_failures;
        report.preservation_failures += part.preservation_failures;
        report.period_failures += part.period_failures;
        if report.first_failure.is_none() {
            report.first_failure = part.first_failure;
        }
    }
    Ok(report)
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct OrderReport {
    pub checked: u64,
    pub orders_tried: u64,
    /// Violations per 0-based row whose construction order was permuted.
    pub violations_by_row: Vec<u64>,
    pub first_violation: Option<(Vec<Vec<u32>>, usize, Vec<usize>)>,
}

impl OrderReport {
    pub fn passed(&self) -> bool {
        self.violations_by_row.iter().all(|&v| v == 0)
    }

    pub fn first_row_violations(&self) -> u64 {
        self.violations_by_row.first().copied().unwrap_or(0)
    }
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        let mut i = k;
        while i > 1 && cur[i - 2] >= cur[i - 1] {
            i -= 1;
        }
        if i <= 1 {
            return out;
        }
        let mut j = k - 1;
        while cur[j] <= cur[i - 2] {
            j -= 1;
        }
        cur.swap(i - 2, j);
        cur[i - 1..].reverse();
    }
}

/// Permutes the path construction order inside one row at a time, over
/// every permutation, for every placement of every type with
/// `N <= max_total`, and compares the projected words.
pub fn order_independence(engine: &Engine, max_total: usize) -> Result<OrderReport> {
    let mut report = OrderReport {
        violations_by_row: vec![0; MAX_ROWS],
        ..Default::default()
    };
    let mut max_rows = 0;
    for tv in types_up_to(max_total) {
        let rows = tv.species();
        max_rows = max_rows.max(rows);
        // Starts available in row r when it is processed: m_r.
        let starts: Vec<usize> = tv.m().to_vec();
        let canonical: Vec<Vec<usize>> = starts.iter().map(|&k| (0..k).collect()).collect();
        let perms: Vec<Vec<Vec<usize>>> = starts.iter().map(|&k| permutations(k)).collect();
        for p in engine.enumerate_placements(&tv)? {
            report.checked += 1;
            let word = bully_project(&p).word;
            for r in 0..rows {
                for perm in perms[r].iter().skip(1) {
                    report.orders_tried += 1;
                    let mut order = canonical.clone();
                    order[r] = perm.clone();
                    let other = bully_project_ordered(&p, &order)?.word;
                    if other != word {
                        report.violations_by_row[r] += 1;
                        if report.first_violation.is_none() {
                            report.first_violation = Some((p.rows(), r, perm.clone()));
                        }
                    }
                }
            }
        }
    }
    report.violations_by_row.truncate(max_rows);
    Ok(report)
}

/// For a discrete queue whose occupied sites are distinct across rows, the
/// continuous projection of its rank encoding agrees with the discrete word
/// on the occupied last-row sites. `None` when some site is shared.
pub fn discrete_matches_continuous(q: &DiscreteMlq) -> Option<bool> {
    let p = q.to_placement()?;
    let discrete = bully_project_discrete(q).word;
    let last = q.rows().pop().unwrap_or_default();
    let occupied: Vec<u32> = last.iter().map(|&site| discrete[site as usize - 1]).collect();
    Some(occupied == bully_project(&p).word)
}
