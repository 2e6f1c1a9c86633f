//! Vertex sets over a fixed ground set `0..n`, stored as bit vectors.
//!
//! All solver state (clique sides, active sets, covers, deletion sets) is a
//! `VertexSet`. Binary operations require both operands to share the same
//! ground-set size and panic otherwise; out-of-range vertex ids panic.

use std::fmt;

const WORD_BITS: usize = 64;

/// A subset of the vertices `0..n` of some fixed graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    nbits: usize,
    words: Vec<u64>,
}

#[inline]
fn word_count(nbits: usize) -> usize {
    nbits.div_ceil(WORD_BITS)
}

impl VertexSet {
    /// The empty subset of a ground set of size `n`.
    pub fn empty(n: usize) -> Self {
        VertexSet {
            nbits: n,
            words: vec![0; word_count(n)],
        }
    }

    /// The full ground set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        let mut s = Self::empty(n);
        for w in s.words.iter_mut() {
            *w = u64::MAX;
        }
        s.clear_tail();
        s
    }

    /// Singleton `{v}` inside a ground set of size `n`.
    pub fn singleton(n: usize, v: usize) -> Self {
        let mut s = Self::empty(n);
        s.insert(v);
        s
    }

    /// Builds a set from an iterator of vertex ids.
    pub fn from_vertices(n: usize, vs: impl IntoIterator<Item = usize>) -> Self {
        let mut s = Self::empty(n);
        for v in vs {
            s.insert(v);
        }
        s
    }

    /// Size of the ground set this is a subset of (not the cardinality).
    #[inline]
    pub fn ground_size(&self) -> usize {
        self.nbits
    }

    /// Number of members.
    #[inline]
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        assert!(v < self.nbits, "vertex {v} out of range 0..{}", self.nbits);
        self.words[v / WORD_BITS] & (1 << (v % WORD_BITS)) != 0
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        assert!(v < self.nbits, "vertex {v} out of range 0..{}", self.nbits);
        self.words[v / WORD_BITS] |= 1 << (v % WORD_BITS);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        assert!(v < self.nbits, "vertex {v} out of range 0..{}", self.nbits);
        self.words[v / WORD_BITS] &= !(1 << (v % WORD_BITS));
    }

    pub fn clear(&mut self) {
        self.words.fill(0);
    }

    /// Smallest member, if any.
    pub fn first(&self) -> Option<usize> {
        for (i, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(i * WORD_BITS + w.trailing_zeros() as usize);
            }
        }
        None
    }

    fn check_same_ground(&self, other: &VertexSet) {
        assert_eq!(
            self.nbits, other.nbits,
            "vertex sets over different ground sets ({} vs {})",
            self.nbits, other.nbits
        );
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        self.check_same_ground(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &VertexSet) {
        self.check_same_ground(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn subtract(&mut self, other: &VertexSet) {
        self.check_same_ground(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.union_with(other);
        s
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.intersect_with(other);
        s
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.subtract(other);
        s
    }

    /// Complement within the ground set.
    pub fn complement(&self) -> VertexSet {
        let mut s = self.clone();
        for w in s.words.iter_mut() {
            *w = !*w;
        }
        s.clear_tail();
        s
    }

    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        self.check_same_ground(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint_from(&self, other: &VertexSet) -> bool {
        self.check_same_ground(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub fn intersection_len(&self, other: &VertexSet) -> usize {
        self.check_same_ground(other);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// Iterates members in ascending order.
    pub fn iter(&self) -> Iter<'_> {
        Iter {
            set: self,
            word_idx: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// The low 64 bits as a machine word; only valid for ground sets with n <= 64.
    pub fn as_mask_u64(&self) -> u64 {
        assert!(self.nbits <= 64, "mask view requires n <= 64");
        self.words.first().copied().unwrap_or(0)
    }

    fn clear_tail(&mut self) {
        let rem = self.nbits % WORD_BITS;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }
}

pub struct Iter<'a> {
    set: &'a VertexSet,
    word_idx: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.word_idx * WORD_BITS + bit);
            }
            self.word_idx += 1;
            if self.word_idx >= self.set.words.len() {
                return None;
            }
            self.current = self.set.words[self.word_idx];
        }
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = usize;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_membership() {
        let mut s = VertexSet::empty(70);
        assert!(s.is_empty());
        s.insert(0);
        s.insert(63);
        s.insert(69);
        assert_eq!(s.len(), 3);
        assert!(s.contains(63));
        assert!(!s.contains(1));
        s.remove(63);
        assert_eq!(s.to_vec(), vec![0, 69]);
    }

    #[test]
    fn full_and_complement() {
        let s = VertexSet::full(67);
        assert_eq!(s.len(), 67);
        assert!(s.complement().is_empty());
        let t = VertexSet::from_vertices(67, [1, 5, 66]);
        let c = t.complement();
        assert_eq!(c.len(), 64);
        assert!(c.is_disjoint_from(&t));
        assert_eq!(c.union(&t), s);
    }

    #[test]
    fn set_algebra() {
        let a = VertexSet::from_vertices(10, [1, 2, 3]);
        let b = VertexSet::from_vertices(10, [3, 4]);
        assert_eq!(a.union(&b).to_vec(), vec![1, 2, 3, 4]);
        assert_eq!(a.intersection(&b).to_vec(), vec![3]);
        assert_eq!(a.difference(&b).to_vec(), vec![1, 2]);
        assert!(a.intersection(&b).is_subset_of(&a));
        assert!(!a.is_disjoint_from(&b));
        assert_eq!(a.intersection_len(&b), 1);
    }

    #[test]
    fn iteration_order_is_ascending() {
        let s = VertexSet::from_vertices(130, [129, 0, 64, 65, 7]);
        assert_eq!(s.to_vec(), vec![0, 7, 64, 65, 129]);
        assert_eq!(s.first(), Some(0));
        assert_eq!(VertexSet::empty(3).first(), None);
    }

    #[test]
    #[should_panic(expected = "out of range")]
    fn insert_out_of_range_panics() {
        let mut s = VertexSet::empty(5);
        s.insert(5);
    }

    #[test]
    #[should_panic(expected = "different ground sets")]
    fn mixed_ground_sets_panic() {
        let a = VertexSet::empty(4);
        let b = VertexSet::empty(5);
        let _ = a.is_subset_of(&b);
    }

    #[test]
    fn zero_ground_set() {
        let s = VertexSet::empty(0);
        assert!(s.is_empty());
        assert_eq!(s.complement(), s);
        assert_eq!(s.len(), 0);
    }
}
