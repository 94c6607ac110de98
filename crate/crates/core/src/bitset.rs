//! Fixed-width membership masks over ring element indices.

use std::cmp::Ordering;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MemberSet {
    len: usize,
    words: Vec<u64>,
}

impl MemberSet {
    pub fn empty(len: usize) -> Self {
        MemberSet {
            len,
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub fn full(len: usize) -> Self {
        let mut set = Self::empty(len);
        for x in 0..len {
            set.insert(x);
        }
        set
    }

    pub fn from_indices(len: usize, items: impl IntoIterator<Item = usize>) -> Self {
        let mut set = Self::empty(len);
        for x in items {
            set.insert(x);
        }
        set
    }

    /// Capacity (the ring size), not the member count.
    pub fn universe(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn insert(&mut self, x: usize) -> bool {
        debug_assert!(x < self.len);
        let (w, b) = (x / 64, x % 64);
        let fresh = self.words[w] & (1 << b) == 0;
        self.words[w] |= 1 << b;
        fresh
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        x < self.len && self.words[x / 64] & (1 << (x % 64)) != 0
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_subset(&self, other: &MemberSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn intersection(&self, other: &MemberSet) -> MemberSet {
        MemberSet {
            len: self.len,
            words: self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect(),
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(w, &word)| {
            let mut bits = word;
            std::iter::from_fn(move || {
                if bits == 0 {
                    return None;
                }
                let b = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(w * 64 + b)
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Order by cardinality, then by the sorted member list.
    pub fn canonical_cmp(&self, other: &MemberSet) -> Ordering {
        self.count()
            .cmp(&other.count())
            .then_with(|| self.iter().cmp(other.iter()))
    }
}

impl std::fmt::Debug for MemberSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
