use std::fmt;

/// A set of vertex indices below [`VSet::CAPACITY`], stored as a bit mask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VSet(u128);

impl VSet {
    pub const CAPACITY: usize = 128;

    pub const fn empty() -> Self {
        VSet(0)
    }

    pub fn singleton(i: usize) -> Self {
        VSet(1u128 << i)
    }

    /// The set `{0, 1, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        if n >= 128 {
            VSet(u128::MAX)
        } else {
            VSet((1u128 << n) - 1)
        }
    }

    pub fn from_bits(bits: u128) -> Self {
        VSet(bits)
    }

    pub fn bits(self) -> u128 {
        self.0
    }

    pub fn contains(self, i: usize) -> bool {
        i < 128 && self.0 >> i & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1u128 << i;
    }

    pub fn remove(&mut self, i: usize) {
        self.0 &= !(1u128 << i);
    }

    pub fn with(self, i: usize) -> Self {
        VSet(self.0 | 1u128 << i)
    }

    pub fn without(self, i: usize) -> Self {
        VSet(self.0 & !(1u128 << i))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Self) -> Self {
        VSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    /// Smallest element, if any.
    pub fn first(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    pub fn iter(self) -> VSetIter {
        VSetIter(self.0)
    }

    /// Every subset of `self`, including the empty set and `self`.
    pub fn subsets(self) -> impl Iterator<Item = VSet> {
        let full = self.0;
        let mut cur: Option<u128> = Some(0);
        std::iter::from_fn(move || {
            let out = cur?;
            cur = if out == full {
                None
            } else {
                Some((out.wrapping_sub(full)) & full)
            };
            Some(VSet(out))
        })
    }
}

impl FromIterator<usize> for VSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VSet::empty();
        for i in iter {
            s.insert(i);
        }
        s
    }
}

impl IntoIterator for VSet {
    type Item = usize;
    type IntoIter = VSetIter;
    fn into_iter(self) -> VSetIter {
        self.iter()
    }
}

pub struct VSetIter(u128);

impl Iterator for VSetIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for VSetIter {}

impl fmt::Debug for VSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subsets_enumerates_power_set() {
        let s: VSet = [1, 4, 6].into_iter().collect();
        let subs: Vec<VSet> = s.subsets().collect();
        assert_eq!(subs.len(), 8);
        assert!(subs.iter().all(|t| t.is_subset(s)));
        assert_eq!(VSet::empty().subsets().count(), 1);
    }

    #[test]
    fn iter_is_ascending() {
        let s: VSet = [127, 3, 64, 0].into_iter().collect();
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![0, 3, 64, 127]);
        assert_eq!(s.first(), Some(0));
        assert_eq!(VSet::full(128).len(), 128);
    }
}
