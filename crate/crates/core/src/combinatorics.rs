//! Exact counting primitives: binomials, multinomials, hook lengths and
//! standard Young tableaux of straight and skew shapes.
//!
//! Everything here is arbitrary precision. Out-of-range arguments follow
//! the factorial convention `1/k! = 0` for `k < 0`, so binomials with a
//! negative lower index vanish instead of erroring.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Exact integer count.
pub type ExactCount = BigInt;
/// Exact rational in lowest terms with a positive denominator.
pub type ExactRatio = BigRational;

/// Cell limit for [`brute_force_syt`].
pub const BRUTE_FORCE_CELL_LIMIT: usize = 16;

pub fn factorial(n: u64) -> ExactCount {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// `C(n, k)`, zero whenever `k < 0`, `k > n` or `n < 0`.
pub fn binomial(n: i64, k: i64) -> ExactCount {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `n! / (p_1! ... p_k!)`, zero unless every part is non-negative and the
/// parts sum to `n`.
pub fn multinomial(n: i64, parts: &[i64]) -> ExactCount {
    if parts.iter().any(|&p| p < 0) || parts.iter().sum::<i64>() != n {
        return BigInt::zero();
    }
    let mut remaining = n;
    let mut acc = BigInt::one();
    for &p in parts {
        acc *= binomial(remaining, p);
        remaining -= p;
    }
    acc
}

/// An integer partition with weakly decreasing positive parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, dropping zero parts. Fails if the non-zero parts
    /// are not weakly decreasing or a zero sits between non-zero parts.
    pub fn new(parts: impl Into<Vec<usize>>) -> Result<Self> {
        let mut parts = parts.into();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::InvalidPartition {
                parts: parts.iter().map(|&p| p as i64).collect(),
            });
        }
        Ok(Partition { parts })
    }

    /// Signed constructor used by formula code; negative parts are rejected.
    pub fn from_signed(parts: &[i64]) -> Result<Self> {
        if parts.iter().any(|&p| p < 0) {
            return Err(Error::InvalidPartition {
                parts: parts.to_vec(),
            });
        }
        Partition::new(parts.iter().map(|&p| p as usize).collect::<Vec<_>>())
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of non-zero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        let parts = (0..width)
            .map(|j| self.parts.iter().take_while(|&&p| p > j).count())
            .collect();
        Partition { parts }
    }

    /// True if the diagram of `self` contains the diagram of `other`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && (0..other.len()).all(|i| other.parts[i] <= self.parts[i])
    }

    /// All partitions of `n`, in reverse lexicographic order.
    pub fn all_of(n: usize) -> Vec<Partition> {
        fn rec(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition {
                    parts: prefix.clone(),
                });
                return;
            }
            for p in (1..=n.min(max)).rev() {
                prefix.push(p);
                rec(n - p, p, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// All partitions fitting inside a `rows × cols` box, including the
    /// empty one.
    pub fn in_box(rows: usize, cols: usize) -> Vec<Partition> {
        fn rec(rows: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
            out.push(Partition {
                parts: prefix.clone(),
            });
            if prefix.len() == rows {
                return;
            }
            for p in 1..=max {
                prefix.push(p);
                rec(rows, p, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(rows, cols, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// A skew shape `outer / inner` with `inner ⊆ outer`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::InvalidSkewShape {
                outer: outer.parts.clone(),
                inner: inner.parts.clone(),
            });
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(shape: Partition) -> Self {
        SkewShape {
            outer: shape,
            inner: Partition::empty(),
        }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn cells(&self) -> usize {
        self.outer.weight() - self.inner.weight()
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.outer, self.inner)
    }
}

/// Hook length of every cell, row by row.
pub fn hook_lengths(shape: &Partition) -> Vec<Vec<usize>> {
    let conj = shape.conjugate();
    shape
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &len)| (0..len).map(|j| (len - j) + (conj.part(j) - i) - 1).collect())
        .collect()
}

/// Number of standard Young tableaux of a straight shape, by the hook
/// length formula.
pub fn count_syt(shape: &Partition) -> ExactCount {
    let hooks: ExactCount = hook_lengths(shape)
        .into_iter()
        .flatten()
        .fold(BigInt::one(), |acc, h| acc * h);
    factorial(shape.weight() as u64) / hooks
}

pub fn count_syt_two_row(a: usize, b: usize) -> Result<ExactCount> {
    if a < b {
        return Err(Error::InvalidPartition {
            parts: vec![a as i64, b as i64],
        });
    }
    let (a, b) = (a as i64, b as i64);
    Ok(binomial(a + b, a) * (a - b + 1) / (a + 1))
}

pub fn count_syt_three_row(a: usize, b: usize, c: usize) -> Result<ExactCount> {
    if a < b || b < c {
        return Err(Error::InvalidPartition {
            parts: vec![a as i64, b as i64, c as i64],
        });
    }
    let (a, b, c) = (a as i64, b as i64, c as i64);
    let num = multinomial(a + b + c, &[a, b, c]) * ((a - c + 2) * (a - b + 1) * (b - c + 1));
    Ok(num / ((a + 2) * (a + 1) * (b + 1)))
}

/// Number of standard Young tableaux of a skew shape via the determinant
/// `n! det(1/(λ_i − μ_j − i + j)!)`. The matrix is scaled row-wise to
/// integers and reduced with fraction-free (Bareiss) elimination.
pub fn count_syt_skew(shape: &SkewShape) -> ExactCount {
    let ell = shape.outer.len();
    if ell == 0 {
        return BigInt::one();
    }
    let lam: Vec<i64> = (0..ell).map(|i| shape.outer.part(i) as i64).collect();
    let mu: Vec<i64> = (0..ell).map(|i| shape.inner.part(i) as i64).collect();

    let mut scale = BigInt::one();
    let mut matrix = Vec::with_capacity(ell);
    for i in 0..ell {
        let ks: Vec<i64> = (0..ell).map(|j| lam[i] - mu[j] - i as i64 + j as i64).collect();
        let top = *ks.iter().max().unwrap();
        if top < 0 {
            return BigInt::zero();
        }
        let row_scale = factorial(top as u64);
        let row = ks
            .iter()
            .map(|&k| {
                if k < 0 {
                    BigInt::zero()
                } else {
                    &row_scale / factorial(k as u64)
                }
            })
            .collect::<Vec<_>>();
        scale *= &row_scale;
        matrix.push(row);
    }
    let det = bareiss_determinant(matrix);
    let value = factorial(shape.cells() as u64) * det;
    debug_assert!(value.is_multiple_of(&scale));
    value / scale
}

fn bareiss_determinant(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// Counts standard fillings of a skew shape by walking every chain of
/// shapes from `inner` to `outer`, one cell at a time, with the counts
/// memoized per intermediate shape. Edge-connected components are walked
/// separately and combined by the number of ways to interleave their
/// labels. Independent of the hook and determinant formulas; used as
/// their oracle.
pub fn brute_force_syt(shape: &SkewShape) -> Result<ExactCount> {
    let cells = shape.cells();
    if cells > BRUTE_FORCE_CELL_LIMIT {
        return Err(Error::TooManyCells {
            cells,
            limit: BRUTE_FORCE_CELL_LIMIT,
        });
    }
    let rows: Vec<(usize, usize)> = (0..shape.outer.len())
        .map(|i| (shape.inner.part(i), shape.outer.part(i)))
        .filter(|(m, l)| m < l)
        .collect();
    let mut total = BigInt::one();
    let mut placed = 0;
    let mut start = 0;
    for end in 1..=rows.len() {
        // Rows end and end-1 share a column iff the lower row reaches past
        // the start of the upper one.
        if end < rows.len() && rows[end].1 > rows[end - 1].0 {
            continue;
        }
        let part = &rows[start..end];
        let size: usize = part.iter().map(|(m, l)| l - m).sum();
        placed += size;
        total *= binomial(placed as i64, size as i64) * BigInt::from(walk_component(part));
        start = end;
    }
    Ok(total)
}

/// Chains from the inner to the outer boundary of a connected piece given
/// as `(inner, outer)` per row.
fn walk_component(rows: &[(usize, usize)]) -> u64 {
    // Filled frontier per row, packed 8 bits per row.
    fn place(rows: &[(usize, usize)], frontier: u128, left: usize, memo: &mut HashMap<u128, u64>) -> u64 {
        if left == 0 {
            return 1;
        }
        if let Some(&v) = memo.get(&frontier) {
            return v;
        }
        let at = |r: usize| (frontier >> (8 * r)) as usize & 0xff;
        let mut total = 0;
        for (r, &(_, end)) in rows.iter().enumerate() {
            let col = at(r);
            // The cell above must already be filled (or lie in the inner shape).
            if col < end && (r == 0 || col < at(r - 1)) {
                total += place(rows, frontier + (1u128 << (8 * r)), left - 1, memo);
            }
        }
        memo.insert(frontier, total);
        total
    }

    // A connected piece spans fewer columns than it has cells, so after
    // shifting to column zero every frontier fits in 8 bits.
    let left_edge = rows.last().map_or(0, |r| r.0);
    let rows: Vec<(usize, usize)> = rows.iter().map(|&(m, l)| (m - left_edge, l - left_edge)).collect();
    let mut frontier: u128 = 0;
    for (i, &(m, _)) in rows.iter().enumerate() {
        frontier |= (m as u128) << (8 * i);
    }
    let cells = rows.iter().map(|(m, l)| l - m).sum();
    place(&rows, frontier, cells, &mut HashMap::new())
}

/// Every skew shape with `1..=max_cells` cells and no empty row or column,
/// which is every skew shape up to deleting empty rows and columns (an
/// operation that does not change the number of standard fillings).
pub fn skew_shapes(max_cells: usize) -> Vec<SkewShape> {
    // Row i of the shape occupies columns inner[i]..outer[i].
    fn grow(outer: &mut Vec<usize>, inner: &mut Vec<usize>, left: usize, out: &mut Vec<SkewShape>) {
        let (lo, li) = (*outer.last().unwrap(), *inner.last().unwrap());
        if li == 0 {
            let o = Partition::new(outer.clone()).expect("decreasing");
            let i = Partition::new(inner.clone()).expect("decreasing");
            out.push(SkewShape::new(o, i).expect("contained"));
        }
        // Next row: ends at a column >= li so that no column is skipped.
        for m in 0..=li {
            for l in (m + 1).max(li)..=lo {
                let len = l - m;
                if len > left || left - len < m {
                    continue;
                }
                outer.push(l);
                inner.push(m);
                grow(outer, inner, left - len, out);
                outer.pop();
                inner.pop();
            }
        }
    }

    let mut out = Vec::new();
    for l in 1..=max_cells {
        for m in 0..l {
            let len = l - m;
            if len <= max_cells && max_cells - len >= m {
                grow(&mut vec![l], &mut vec![m], max_cells - len, &mut out);
            }
        }
    }
    out
}

/// `f_{λ/μ}` for possibly malformed integer data: a shape that is not a
/// partition, has negative parts, or fails containment counts as zero.
/// This is the convention the printed triple sums rely on.
pub fn syt_or_zero(outer: &[i64], inner: &[i64]) -> ExactCount {
    let Ok(lam) = Partition::from_signed(outer) else {
        return BigInt::zero();
    };
    let Ok(mu) = Partition::from_signed(inner) else {
        return BigInt::zero();
    };
    match SkewShape::new(lam, mu) {
        Ok(shape) => count_syt_skew(&shape),
        Err(_) => BigInt::zero(),
    }
}

/// `f_{(a,b)}` with the zero convention for `a < b` or negative parts.
pub fn two_row_or_zero(a: i64, b: i64) -> ExactCount {
    if b < 0 || a < b {
        return BigInt::zero();
    }
    count_syt_two_row(a as usize, b as usize).unwrap_or_default()
}

/// Converts an exact rational that must be an integer.
pub(crate) fn expect_integer(r: &ExactRatio, what: &str) -> ExactCount {
    assert!(r.is_integer(), "{what} is not an integer: {r}");
    r.to_integer()
}

pub(crate) fn ratio(num: impl Into<BigInt>, den: impl Into<BigInt>) -> ExactRatio {
    BigRational::new(num.into(), den.into())
}

/// `p/q` in lowest terms with a positive denominator, also for integers.
pub fn ratio_string(r: &ExactRatio) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `p/q` or a bare integer.
pub fn parse_ratio(text: &str) -> Option<ExactRatio> {
    let text = text.trim();
    match text.split_once('/') {
        Some((p, q)) => {
            let q: BigInt = q.trim().parse().ok()?;
            if q.is_zero() {
                return None;
            }
            Some(BigRational::new(p.trim().parse().ok()?, q))
        }
        None => Some(BigRational::from_integer(text.parse().ok()?)),
    }
}
