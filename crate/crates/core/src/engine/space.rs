//! The set of placements of a type, optionally with some values pinned to
//! rows, as a ranked sequence.
//!
//! A placement is an assignment of a row to every value. Free values are
//! read from the largest down, and the resulting row sequence is ordered
//! lexicographically, which is colexicographic order on the assignment of
//! values `1..=N`.

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::combinatorics::multinomial;
use crate::error::{Error, Result};
use crate::queue::{Placement, TypeVector, MAX_ENTRIES, MAX_ROWS};

#[derive(Clone, Debug)]
pub struct PlacementSpace {
    tv: TypeVector,
    pinned: Vec<u64>,
    /// Bit of the free value at sequence position `k` (largest value first).
    free_bits: Vec<u64>,
    /// Free slots per row.
    counts: Vec<usize>,
    size: u128,
}

impl PlacementSpace {
    pub fn new(tv: &TypeVector) -> Result<Self> {
        PlacementSpace::with_pins(tv, &[])
    }

    /// `pins` lists `(value, row)` pairs forced into the placement. Rows are
    /// 0-based. A pin set that no placement satisfies yields an empty space.
    pub fn with_pins(tv: &TypeVector, pins: &[(u32, usize)]) -> Result<Self> {
        let total = tv.total();
        let rows = tv.species();
        if total > MAX_ENTRIES || rows > MAX_ROWS {
            return Err(Error::InvalidTypeVector {
                m: tv.m().iter().map(|&x| x as i64).collect(),
                reason: format!("at most {MAX_ENTRIES} entries and {MAX_ROWS} rows are supported"),
            });
        }
        let mut pinned = vec![0u64; rows];
        let mut counts: Vec<i64> = tv.row_sizes().iter().map(|&x| x as i64).collect();
        let mut taken = 0u64;
        for &(v, r) in pins {
            if v == 0 || v as usize > total || r >= rows {
                return Err(Error::InvalidPlacement(format!(
                    "pin ({v}, row {r}) is outside the placement"
                )));
            }
            let b = 1u64 << (v - 1);
            if taken & b != 0 {
                return Err(Error::InvalidPlacement(format!("value {v} is pinned twice")));
            }
            taken |= b;
            pinned[r] |= b;
            counts[r] -= 1;
        }
        let free_bits: Vec<u64> = (1..=total as u32)
            .rev()
            .map(|v| 1u64 << (v - 1))
            .filter(|b| taken & b == 0)
            .collect();
        let feasible = counts.iter().all(|&c| c >= 0);
        let counts: Vec<usize> = counts.iter().map(|&c| c.max(0) as usize).collect();
        let size = if feasible {
            let parts: Vec<i64> = counts.iter().map(|&c| c as i64).collect();
            multinomial(free_bits.len() as i64, &parts)
                .to_u128()
                .ok_or_else(|| Error::InvalidTypeVector {
                    m: tv.m().iter().map(|&x| x as i64).collect(),
                    reason: "placement count does not fit in 128 bits".into(),
                })?
        } else {
            0
        };
        Ok(PlacementSpace {
            tv: tv.clone(),
            pinned,
            free_bits,
            counts,
            size,
        })
    }

    pub fn type_vector(&self) -> &TypeVector {
        &self.tv
    }

    /// Number of placements in the space.
    pub fn len(&self) -> u128 {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        self.size == 0
    }

    fn first_sequence(&self) -> Vec<u8> {
        let mut seq = Vec::with_capacity(self.free_bits.len());
        for (r, &c) in self.counts.iter().enumerate() {
            seq.extend(std::iter::repeat_n(r as u8, c));
        }
        seq
    }

    /// Sequence with the given lexicographic rank.
    fn unrank(&self, mut rank: u128) -> Vec<u8> {
        let mut counts = self.counts.clone();
        let mut left = self.free_bits.len();
        let mut seq = Vec::with_capacity(left);
        while left > 0 {
            for r in 0..counts.len() {
                if counts[r] == 0 {
                    continue;
                }
                counts[r] -= 1;
                let block = count_sequences(left - 1, &counts);
                if rank < block {
                    seq.push(r as u8);
                    break;
                }
                rank -= block;
                counts[r] += 1;
            }
            left -= 1;
        }
        seq
    }

    /// Lexicographic rank of a placement in this space.
    pub fn rank(&self, p: &Placement) -> Option<u128> {
        if p.species() != self.pinned.len() {
            return None;
        }
        let masks = p.masks();
        if masks.iter().zip(&self.pinned).any(|(m, pin)| m & pin != *pin) {
            return None;
        }
        let seq: Vec<u8> = self
            .free_bits
            .iter()
            .map(|b| masks.iter().position(|m| m & b != 0).map(|r| r as u8))
            .collect::<Option<_>>()?;
        let mut counts = self.counts.clone();
        for &r in &seq {
            if counts[r as usize] == 0 {
                return None;
            }
            counts[r as usize] -= 1;
        }
        let mut counts = self.counts.clone();
        let mut rank = 0u128;
        let mut left = seq.len();
        for &s in &seq {
            for r in 0..s as usize {
                if counts[r] > 0 {
                    counts[r] -= 1;
                    rank += count_sequences(left - 1, &counts);
                    counts[r] += 1;
                }
            }
            counts[s as usize] -= 1;
            left -= 1;
        }
        Some(rank)
    }

    /// Placement at the given rank.
    pub fn unrank_placement(&self, rank: u128) -> Option<Placement> {
        if rank >= self.size {
            return None;
        }
        let seq = self.unrank(rank);
        let mut masks = self.pinned.clone();
        self.fill(&seq, &mut masks);
        Some(Placement::from_masks(masks))
    }

    #[inline(always)]
    fn fill(&self, seq: &[u8], masks: &mut [u64]) {
        masks.copy_from_slice(&self.pinned);
        for (&r, &b) in seq.iter().zip(&self.free_bits) {
            masks[r as usize] |= b;
        }
    }

    /// Splits `0..len()` into at most `k` contiguous, nearly equal ranges.
    pub fn chunks(&self, k: usize) -> Vec<(u128, u128)> {
        let k = (k.max(1) as u128).min(self.size.max(1));
        let base = self.size / k;
        let extra = self.size % k;
        let mut out = Vec::with_capacity(k as usize);
        let mut start = 0;
        for i in 0..k {
            let len = base + u128::from(i < extra);
            out.push((start, len));
            start += len;
        }
        out
    }

    /// Calls `f` with the row masks of each placement of rank
    /// `start..start + len`, in order.
    pub fn for_each_mask_in_range(&self, start: u128, len: u128, mut f: impl FnMut(&[u64])) {
        if len == 0 || start >= self.size {
            return;
        }
        let len = len.min(self.size - start);
        let mut seq = if start == 0 {
            self.first_sequence()
        } else {
            self.unrank(start)
        };
        let mut masks = vec![0u64; self.pinned.len()];
        let mut left = len;
        loop {
            self.fill(&seq, &mut masks);
            f(&masks);
            left -= 1;
            if left == 0 || !next_permutation(&mut seq) {
                break;
            }
        }
    }

    pub fn for_each_mask(&self, f: impl FnMut(&[u64])) {
        self.for_each_mask_in_range(0, self.size, f);
    }

    /// Streams placements in order.
    pub fn iter(&self) -> PlacementIter {
        PlacementIter {
            space: self.clone(),
            seq: if self.size == 0 {
                None
            } else {
                Some(self.first_sequence())
            },
        }
    }
}

pub struct PlacementIter {
    space: PlacementSpace,
    seq: Option<Vec<u8>>,
}

impl Iterator for PlacementIter {
    type Item = Placement;

    fn next(&mut self) -> Option<Placement> {
        let seq = self.seq.as_mut()?;
        let mut masks = vec![0u64; self.space.pinned.len()];
        self.space.fill(seq, &mut masks);
        if !next_permutation(seq) {
            self.seq = None;
        }
        Some(Placement::from_masks(masks))
    }
}

fn count_sequences(len: usize, counts: &[usize]) -> u128 {
    let parts: Vec<i64> = counts.iter().map(|&c| c as i64).collect();
    multinomial(len as i64, &parts)
        .to_u128()
        .expect("sub-count is bounded by the space size")
}

/// Advances to the next multiset permutation in lexicographic order;
/// returns false after the last one.
#[inline]
fn next_permutation(seq: &mut [u8]) -> bool {
    let n = seq.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && seq[i - 1] >= seq[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while seq[j] <= seq[i - 1] {
        j -= 1;
    }
    seq.swap(i - 1, j);
    seq[i..].reverse();
    true
}

/// Placement count as an exact integer, used in guard messages.
pub fn placement_count(tv: &TypeVector) -> BigInt {
    let parts: Vec<i64> = tv.row_sizes().iter().map(|&x| x as i64).collect();
    multinomial(tv.total() as i64, &parts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn tv(m: &[usize]) -> TypeVector {
        TypeVector::new(m.to_vec()).unwrap()
    }

    #[test]
    fn counts_match_multinomials() {
        assert_eq!(PlacementSpace::new(&tv(&[1, 1])).unwrap().len(), 3);
        assert_eq!(PlacementSpace::new(&tv(&[2, 1, 2])).unwrap().len(), 2520);
        assert_eq!(
            PlacementSpace::new(&tv(&[1, 3, 1, 2])).unwrap().len(),
            (1..=17u128).product::<u128>() / (24 * 120 * 5040)
        );
    }

    #[test]
    fn iteration_is_exhaustive_and_valid() {
        let t = tv(&[1, 2, 1]);
        let space = PlacementSpace::new(&t).unwrap();
        let all: Vec<Placement> = space.iter().collect();
        assert_eq!(all.len() as u128, space.len());
        let distinct: HashSet<_> = all.iter().cloned().collect();
        assert_eq!(distinct.len(), all.len());
        for (k, p) in all.iter().enumerate() {
            assert!(crate::queue::validate_placement(&p.rows(), &t));
            assert_eq!(space.rank(p), Some(k as u128));
            assert_eq!(space.unrank_placement(k as u128).as_ref(), Some(p));
        }
    }

    #[test]
    fn colex_order_first_placements() {
        let space = PlacementSpace::new(&tv(&[1, 1])).unwrap();
        let rows: Vec<_> = space.iter().map(|p| p.rows()).collect();
        // Largest value assigned to the lowest row index first.
        assert_eq!(rows[0], vec![vec![3], vec![1, 2]]);
        assert_eq!(rows[1], vec![vec![2], vec![1, 3]]);
        assert_eq!(rows[2], vec![vec![1], vec![2, 3]]);
    }

    #[test]
    fn pins_restrict_the_space() {
        let t = tv(&[1, 1, 1]);
        let space = PlacementSpace::with_pins(&t, &[(6, 2)]).unwrap();
        assert_eq!(space.len(), 30);
        assert!(space.iter().all(|p| p.max_in_last_row()));
        let none = PlacementSpace::with_pins(&t, &[(1, 0), (2, 0)]).unwrap();
        assert!(none.is_empty());
        assert_eq!(none.iter().count(), 0);
    }

    #[test]
    fn chunks_cover_the_range() {
        let space = PlacementSpace::new(&tv(&[2, 1, 2])).unwrap();
        for k in [1, 2, 3, 7, 5000] {
            let mut seen = Vec::new();
            for (start, len) in space.chunks(k) {
                space.for_each_mask_in_range(start, len, |m| seen.push(m.to_vec()));
            }
            let whole: Vec<Vec<u64>> = space.iter().map(|p| p.masks().to_vec()).collect();
            assert_eq!(seen, whole);
        }
    }
}
