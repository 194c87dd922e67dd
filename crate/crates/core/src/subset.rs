//! Fixed-width bitsets over a carrier of at most [`MAX_CARRIER`] elements.

use std::fmt;
use std::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign, Not, Sub};

const WORDS: usize = 4;

/// Largest carrier size supported by [`Subset`].
pub const MAX_CARRIER: usize = 64 * WORDS;

/// A set of element indices, all below [`MAX_CARRIER`].
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Subset([u64; WORDS]);

impl Subset {
    pub const EMPTY: Subset = Subset([0; WORDS]);

    pub fn empty() -> Self {
        Self::EMPTY
    }

    pub fn singleton(i: usize) -> Self {
        let mut s = Self::EMPTY;
        s.insert(i);
        s
    }

    /// `{0, 1, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_CARRIER, "carrier of size {n} exceeds {MAX_CARRIER}");
        let mut s = Self::EMPTY;
        for w in 0..WORDS {
            let lo = w * 64;
            if n >= lo + 64 {
                s.0[w] = u64::MAX;
            } else if n > lo {
                s.0[w] = (1u64 << (n - lo)) - 1;
            }
        }
        s
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> Self {
        let mut s = Self::EMPTY;
        for i in it {
            s.insert(i);
        }
        s
    }

    /// Builds a subset from the low 64 bits of a mask.
    pub fn from_bits(bits: u64) -> Self {
        let mut s = Self::EMPTY;
        s.0[0] = bits;
        s
    }

    /// The low 64 bits; only meaningful for carriers of size at most 64.
    pub fn low_bits(&self) -> u64 {
        self.0[0]
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        i < MAX_CARRIER && (self.0[i >> 6] >> (i & 63)) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        assert!(i < MAX_CARRIER, "index {i} exceeds {MAX_CARRIER}");
        self.0[i >> 6] |= 1u64 << (i & 63);
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        if i < MAX_CARRIER {
            self.0[i >> 6] &= !(1u64 << (i & 63));
        }
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn is_subset(&self, other: &Subset) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a & !b == 0)
    }

    #[inline]
    pub fn intersects(&self, other: &Subset) -> bool {
        self.0.iter().zip(other.0.iter()).any(|(a, b)| a & b != 0)
    }

    /// Least member, if any.
    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    /// Largest member, if any.
    pub fn last(&self) -> Option<usize> {
        for w in (0..WORDS).rev() {
            if self.0[w] != 0 {
                return Some(w * 64 + 63 - self.0[w].leading_zeros() as usize);
            }
        }
        None
    }

    /// Members in increasing order.
    pub fn iter(&self) -> Iter {
        Iter {
            words: self.0,
            word: 0,
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Whether every member is below `n`.
    pub fn fits(&self, n: usize) -> bool {
        self.is_subset(&Subset::full(n.min(MAX_CARRIER)))
    }

    /// Image under an index map.
    pub fn map(&self, f: &[usize]) -> Subset {
        let mut out = Subset::EMPTY;
        for i in self.iter() {
            out.insert(f[i]);
        }
        out
    }
}

/// Iterator over the members of a [`Subset`].
pub struct Iter {
    words: [u64; WORDS],
    word: usize,
}

impl Iterator for Iter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        while self.word < WORDS {
            let w = self.words[self.word];
            if w != 0 {
                let bit = w.trailing_zeros() as usize;
                self.words[self.word] = w & (w - 1);
                return Some(self.word * 64 + bit);
            }
            self.word += 1;
        }
        None
    }
}

impl FromIterator<usize> for Subset {
    fn from_iter<I: IntoIterator<Item = usize>>(it: I) -> Self {
        Subset::from_indices(it)
    }
}

impl BitOr for Subset {
    type Output = Subset;
    #[inline]
    fn bitor(mut self, rhs: Subset) -> Subset {
        self |= rhs;
        self
    }
}

impl BitOrAssign for Subset {
    #[inline]
    fn bitor_assign(&mut self, rhs: Subset) {
        for w in 0..WORDS {
            self.0[w] |= rhs.0[w];
        }
    }
}

impl BitAnd for Subset {
    type Output = Subset;
    #[inline]
    fn bitand(mut self, rhs: Subset) -> Subset {
        self &= rhs;
        self
    }
}

impl BitAndAssign for Subset {
    #[inline]
    fn bitand_assign(&mut self, rhs: Subset) {
        for w in 0..WORDS {
            self.0[w] &= rhs.0[w];
        }
    }
}

impl Sub for Subset {
    type Output = Subset;
    #[inline]
    fn sub(mut self, rhs: Subset) -> Subset {
        for w in 0..WORDS {
            self.0[w] &= !rhs.0[w];
        }
        self
    }
}

/// Complement within the full index range; intersect with [`Subset::full`]
/// to restrict to a carrier.
impl Not for Subset {
    type Output = Subset;
    fn not(mut self) -> Subset {
        for w in 0..WORDS {
            self.0[w] = !self.0[w];
        }
        self
    }
}

/// Orders subsets by their sorted member lists.
impl Ord for Subset {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for Subset {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_and_len() {
        for n in [0, 1, 63, 64, 65, 128, 200, 256] {
            let s = Subset::full(n);
            assert_eq!(s.len(), n);
            assert_eq!(s.last(), n.checked_sub(1));
        }
    }

    #[test]
    fn iter_is_sorted_across_words() {
        let s = Subset::from_indices([200, 3, 64, 63, 0]);
        assert_eq!(s.to_vec(), vec![0, 3, 63, 64, 200]);
        assert_eq!(s.first(), Some(0));
        assert_eq!(s.last(), Some(200));
    }

    #[test]
    fn set_algebra() {
        let a = Subset::from_indices([1, 2, 3]);
        let b = Subset::from_indices([3, 4]);
        assert_eq!((a | b).to_vec(), vec![1, 2, 3, 4]);
        assert_eq!((a & b).to_vec(), vec![3]);
        assert_eq!((a - b).to_vec(), vec![1, 2]);
        assert!(Subset::singleton(3).is_subset(&a));
        assert!(!b.is_subset(&a));
        assert!(a.intersects(&b));
        assert!(Subset::EMPTY.is_subset(&Subset::EMPTY));
    }

    #[test]
    fn ordering_is_lexicographic_on_members() {
        let a = Subset::from_indices([0, 5]);
        let b = Subset::from_indices([1]);
        let c = Subset::from_indices([0]);
        assert!(c < a && a < b);
        assert!(Subset::EMPTY < c);
    }

    #[test]
    fn map_image() {
        let s = Subset::from_indices([0, 1, 2]);
        assert_eq!(s.map(&[4, 4, 1]).to_vec(), vec![1, 4]);
    }
}
