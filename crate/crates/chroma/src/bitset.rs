//! Fixed-capacity vertex sets backed by `u64` words.

/// A set of vertex ids in `0..capacity`, stored as a bit vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    words: Vec<u64>,
    capacity: usize,
}

impl VertexSet {
    pub fn new(capacity: usize) -> Self {
        VertexSet {
            words: vec![0; capacity.div_ceil(64)],
            capacity,
        }
    }

    pub fn full(capacity: usize) -> Self {
        let mut s = Self::new(capacity);
        for v in 0..capacity {
            s.insert(v);
        }
        s
    }

    pub fn capacity(&self) -> usize {
        self.capacity
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        debug_assert!(v < self.capacity);
        self.words[v / 64] >> (v % 64) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < self.capacity);
        self.words[v / 64] |= 1 << (v % 64);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        debug_assert!(v < self.capacity);
        self.words[v / 64] &= !(1 << (v % 64));
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        debug_assert_eq!(self.capacity, other.capacity);
        VertexSet {
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & b)
                .collect(),
            capacity: self.capacity,
        }
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        debug_assert_eq!(self.capacity, other.capacity);
        VertexSet {
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a | b)
                .collect(),
            capacity: self.capacity,
        }
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        debug_assert_eq!(self.capacity, other.capacity);
        VertexSet {
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & !b)
                .collect(),
            capacity: self.capacity,
        }
    }

    pub fn intersection_len(&self, other: &VertexSet) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    /// Iterate set members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(i * 64 + b)
                }
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }
}

impl FromIterator<usize> for VertexSet {
    /// Collects into a set sized to hold the largest element; prefer
    /// `from_members` when the capacity is known.
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let items: Vec<usize> = iter.into_iter().collect();
        let cap = items.iter().max().map_or(0, |&m| m + 1);
        let mut s = VertexSet::new(cap);
        for v in items {
            s.insert(v);
        }
        s
    }
}

impl VertexSet {
    pub fn from_members(capacity: usize, members: impl IntoIterator<Item = usize>) -> Self {
        let mut s = VertexSet::new(capacity);
        for v in members {
            s.insert(v);
        }
        s
    }
}

impl std::fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn insert_remove_iter() {
        let mut s = VertexSet::new(130);
        s.insert(0);
        s.insert(64);
        s.insert(129);
        assert_eq!(s.to_vec(), vec![0, 64, 129]);
        assert_eq!(s.len(), 3);
        s.remove(64);
        assert!(!s.contains(64));
        assert_eq!(s.len(), 2);
    }

    #[test]
    fn set_ops() {
        let a = VertexSet::from_members(10, [1, 3, 5]);
        let b = VertexSet::from_members(10, [3, 4, 5]);
        assert_eq!(a.intersection(&b).to_vec(), vec![3, 5]);
        assert_eq!(a.union(&b).to_vec(), vec![1, 3, 4, 5]);
        assert_eq!(a.difference(&b).to_vec(), vec![1]);
        assert_eq!(a.intersection_len(&b), 2);
        assert!(!a.is_disjoint(&b));
    }
}
