use std::fmt;

/// A set of vertices from a fixed universe 0..n, packed into 64-bit words.
///
/// All operations are O(n/64) or better. Sets over different universes never
/// compare equal and must not be combined.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    n: usize,
    words: Vec<u64>,
}

#[inline]
fn word_count(n: usize) -> usize {
    n.div_ceil(64)
}

impl VertexSet {
    pub fn new(n: usize) -> Self {
        VertexSet {
            n,
            words: vec![0; word_count(n)],
        }
    }

    pub fn full(n: usize) -> Self {
        let mut s = Self::new(n);
        for (i, w) in s.words.iter_mut().enumerate() {
            *w = !0u64;
            if (i + 1) * 64 > n {
                *w >>= (i + 1) * 64 - n;
            }
        }
        s
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(n: usize, indices: I) -> Self {
        let mut s = Self::new(n);
        for v in indices {
            s.insert(v);
        }
        s
    }

    /// Size of the universe, not of the set.
    pub fn universe(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < self.n);
        self.words[v / 64] |= 1 << (v % 64);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        debug_assert!(v < self.n);
        self.words[v / 64] &= !(1 << (v % 64));
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        debug_assert!(v < self.n);
        self.words[v / 64] >> (v % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.n, other.n);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.n, other.n);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn difference_with(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.n, other.n);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn complement(&self) -> VertexSet {
        let mut out = self.clone();
        for w in out.words.iter_mut() {
            *w = !*w;
        }
        if !self.n.is_multiple_of(64) {
            if let Some(last) = out.words.last_mut() {
                *last &= (1u64 << (self.n % 64)) - 1;
            }
        }
        out
    }

    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        debug_assert_eq!(self.n, other.n);
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint_from(&self, other: &VertexSet) -> bool {
        debug_assert_eq!(self.n, other.n);
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub fn intersects(&self, other: &VertexSet) -> bool {
        !self.is_disjoint_from(other)
    }

    pub fn intersection_len(&self, other: &VertexSet) -> usize {
        debug_assert_eq!(self.n, other.n);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// Lowest member, if any.
    pub fn first(&self) -> Option<usize> {
        for (i, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(i * 64 + w.trailing_zeros() as usize);
            }
        }
        None
    }

    pub fn iter(&self) -> Iter<'_> {
        Iter {
            set: self,
            word_idx: 0,
            bits: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

pub struct Iter<'a> {
    set: &'a VertexSet,
    word_idx: usize,
    bits: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        while self.bits == 0 {
            self.word_idx += 1;
            if self.word_idx >= self.set.words.len() {
                return None;
            }
            self.bits = self.set.words[self.word_idx];
        }
        let b = self.bits.trailing_zeros() as usize;
        self.bits &= self.bits - 1;
        Some(self.word_idx * 64 + b)
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
        write!(f, "{self}")
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn insert_contains_len() {
        let mut s = VertexSet::new(100);
        assert!(s.is_empty());
        s.insert(0);
        s.insert(64);
        s.insert(99);
        assert!(s.contains(0) && s.contains(64) && s.contains(99));
        assert!(!s.contains(1));
        assert_eq!(s.len(), 3);
        s.remove(64);
        assert_eq!(s.to_vec(), vec![0, 99]);
    }

    #[test]
    fn full_and_complement() {
        for n in [1, 63, 64, 65, 130] {
            let full = VertexSet::full(n);
            assert_eq!(full.len(), n);
            assert!(full.complement().is_empty());
            let mut s = VertexSet::new(n);
            s.insert(0);
            let c = s.complement();
            assert_eq!(c.len(), n - 1);
            assert!(!c.contains(0));
        }
    }

    #[test]
    fn set_ops() {
        let a = VertexSet::from_indices(10, [1, 3, 5]);
        let b = VertexSet::from_indices(10, [3, 4]);
        let mut u = a.clone();
        u.union_with(&b);
        assert_eq!(u.to_vec(), vec![1, 3, 4, 5]);
        let mut i = a.clone();
        i.intersect_with(&b);
        assert_eq!(i.to_vec(), vec![3]);
        assert!(i.is_subset_of(&a) && i.is_subset_of(&b));
        assert_eq!(a.intersection_len(&b), 1);
        assert!(a.intersects(&b));
        assert_eq!(a.first(), Some(1));
        assert_eq!(VertexSet::new(10).first(), None);
    }

    #[test]
    fn display() {
        let s = VertexSet::from_indices(8, [0, 2, 5]);
        assert_eq!(format!("{s}"), "{0, 2, 5}");
    }
}
