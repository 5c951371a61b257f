use alloc::vec;
use alloc::vec::Vec;

/// Fixed-capacity set of small integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BitSet {
    words: Vec<u64>,
    cap: usize,
}

impl BitSet {
    pub fn new(cap: usize) -> Self {
        BitSet {
            words: vec![0; cap.div_ceil(64)],
            cap,
        }
    }

    pub fn full(cap: usize) -> Self {
        let mut s = BitSet {
            words: vec![u64::MAX; cap.div_ceil(64)],
            cap,
        };
        if cap % 64 != 0 {
            if let Some(last) = s.words.last_mut() {
                *last = (1u64 << (cap % 64)) - 1;
            }
        }
        s
    }

    pub fn capacity(&self) -> usize {
        self.cap
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        debug_assert!(i < self.cap);
        self.words[i / 64] |= 1 << (i % 64);
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        self.words[i / 64] &= !(1 << (i % 64));
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        i < self.cap && self.words[i / 64] & (1 << (i % 64)) != 0
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn union_with(&mut self, other: &BitSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &BitSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn is_subset(&self, other: &BitSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &BitSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            core::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(wi * 64 + b)
                }
            })
        })
    }
}

impl FromIterator<usize> for BitSet {
    /// Capacity is one past the largest element.
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let items: Vec<usize> = iter.into_iter().collect();
        let cap = items.iter().max().map_or(0, |m| m + 1);
        let mut s = BitSet::new(cap);
        for i in items {
            s.insert(i);
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let mut a = BitSet::new(130);
        a.insert(0);
        a.insert(64);
        a.insert(129);
        assert_eq!(a.iter().collect::<Vec<_>>(), [0, 64, 129]);
        assert_eq!(a.len(), 3);
        let full = BitSet::full(130);
        assert_eq!(full.len(), 130);
        assert!(a.is_subset(&full));
        assert!(!full.is_subset(&a));
        a.remove(64);
        assert!(!a.contains(64));
        assert!(!a.contains(500));
        assert_eq!(BitSet::full(64).len(), 64);
    }
}
