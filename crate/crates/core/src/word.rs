use std::cmp::Ordering;

/// A strictly increasing word of odd generators, stored as a bitmask over
/// variable indices (at most 32 variables).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word(u32);

/// Sign as `+1` / `-1`.
pub type Sign = i64;

fn parity(k: u32) -> Sign {
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

impl Word {
    pub const EMPTY: Word = Word(0);

    pub fn from_bits(bits: u32) -> Self {
        Word(bits)
    }

    pub fn single(v: usize) -> Self {
        Word(1 << v)
    }

    /// Sorted word from an arbitrary index list together with the sign of
    /// the sorting permutation; `None` on a repeated index.
    pub fn from_indices(indices: &[usize]) -> Option<(Sign, Word)> {
        let mut acc = (1, Word::EMPTY);
        for &v in indices.iter().rev() {
            let (s, w) = acc.1.insert_front(v)?;
            acc = (acc.0 * s, w);
        }
        Some(acc)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: usize) -> bool {
        self.0 & (1 << v) != 0
    }

    /// Indices in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }

    /// Number of letters strictly below `v`.
    pub fn count_below(self, v: usize) -> u32 {
        (self.0 & ((1u32 << v) - 1)).count_ones()
    }

    /// Number of letters strictly above `v`.
    pub fn count_above(self, v: usize) -> u32 {
        if v >= 31 {
            0
        } else {
            (self.0 >> (v + 1)).count_ones()
        }
    }

    /// `g_v ∧ self`, sorted.
    pub fn insert_front(self, v: usize) -> Option<(Sign, Word)> {
        if self.contains(v) {
            return None;
        }
        Some((parity(self.count_below(v)), Word(self.0 | (1 << v))))
    }

    /// Removes `g_v` after moving it to the front (left derivative).
    pub fn remove_left(self, v: usize) -> Option<(Sign, Word)> {
        if !self.contains(v) {
            return None;
        }
        Some((parity(self.count_below(v)), Word(self.0 & !(1 << v))))
    }

    /// Removes `g_v` after moving it to the back (right derivative).
    pub fn remove_right(self, v: usize) -> Option<(Sign, Word)> {
        if !self.contains(v) {
            return None;
        }
        Some((parity(self.count_above(v)), Word(self.0 & !(1 << v))))
    }

    /// `self ∧ other`, sorted; `None` when they share a letter.
    pub fn wedge(self, other: Word) -> Option<(Sign, Word)> {
        if self.0 & other.0 != 0 {
            return None;
        }
        let inversions: u32 = other.iter().map(|v| self.count_above(v)).sum();
        Some((parity(inversions), Word(self.0 | other.0)))
    }

    /// Full contraction `i_{∂_{s_1}} ∘ … ∘ i_{∂_{s_p}}` of the generators of
    /// `self` (as vectors) into `target` (as a form word).
    pub fn contract_into(self, target: Word) -> Option<(Sign, Word)> {
        if self.0 & !target.0 != 0 {
            return None;
        }
        let k: u32 = self.iter().map(|s| target.count_below(s)).sum();
        Some((parity(k), Word(target.0 & !self.0)))
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| {
            let diff = self.0 ^ other.0;
            if diff == 0 {
                Ordering::Equal
            } else if self.0 & (1 << diff.trailing_zeros()) != 0 {
                Ordering::Less
            } else {
                Ordering::Greater
            }
        })
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wedge_signs() {
        let a = Word::single(0);
        let b = Word::single(1);
        assert_eq!(a.wedge(b), Some((1, Word::from_bits(0b11))));
        assert_eq!(b.wedge(a), Some((-1, Word::from_bits(0b11))));
        assert_eq!(a.wedge(a), None);
        assert_eq!(Word::from_indices(&[2, 0, 1]), Some((1, Word::from_bits(0b111))));
        assert_eq!(Word::from_indices(&[1, 0, 2]), Some((-1, Word::from_bits(0b111))));
    }

    #[test]
    fn contraction_order() {
        // i_{∂0} i_{∂1} (g0 ∧ g1) = i_{∂0}(-g0) = -1
        let w = Word::from_bits(0b11);
        assert_eq!(w.contract_into(w), Some((-1, Word::EMPTY)));
        assert_eq!(Word::single(1).contract_into(w), Some((-1, Word::single(0))));
        assert_eq!(Word::single(0).contract_into(w), Some((1, Word::single(1))));
    }

    #[test]
    fn lexicographic_order_within_length() {
        let w01 = Word::from_bits(0b011);
        let w02 = Word::from_bits(0b101);
        let w12 = Word::from_bits(0b110);
        assert!(w01 < w02 && w02 < w12);
        assert!(Word::single(5) < w01);
    }
}
