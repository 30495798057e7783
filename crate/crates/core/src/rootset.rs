use std::fmt;
use std::ops::{BitAnd, BitOr, Not};

/// Widest root system a [`RootSet`] can index.
pub const MAX_WIDTH: usize = 128;

/// A subset of Δ+ as a fixed-width bitset over the canonical root indices.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct RootSet {
    bits: u128,
    width: u8,
}

impl RootSet {
    pub fn empty(width: usize) -> Self {
        assert!(width <= MAX_WIDTH, "root set width {width} > {MAX_WIDTH}");
        RootSet {
            bits: 0,
            width: width as u8,
        }
    }

    pub fn full(width: usize) -> Self {
        let mut s = Self::empty(width);
        s.bits = Self::mask(width);
        s
    }

    /// Builds a set from raw bits; bits at or above `width` are dropped.
    pub fn from_bits(width: usize, bits: u128) -> Self {
        let mut s = Self::empty(width);
        s.bits = bits & Self::mask(width);
        s
    }

    pub fn from_indices(width: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut s = Self::empty(width);
        for i in indices {
            s.insert(i);
        }
        s
    }

    fn mask(width: usize) -> u128 {
        if width == MAX_WIDTH {
            u128::MAX
        } else {
            (1u128 << width) - 1
        }
    }

    pub fn width(&self) -> usize {
        self.width as usize
    }

    pub fn bits(&self) -> u128 {
        self.bits
    }

    pub fn contains(&self, i: usize) -> bool {
        i < self.width() && self.bits >> i & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        assert!(i < self.width(), "root index {i} out of range");
        self.bits |= 1 << i;
    }

    pub fn remove(&mut self, i: usize) {
        if i < self.width() {
            self.bits &= !(1 << i);
        }
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn is_subset(&self, other: &RootSet) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn intersects(&self, other: &RootSet) -> bool {
        self.bits & other.bits != 0
    }

    /// Member indices in ascending order.
    pub fn iter(&self) -> Iter {
        Iter { bits: self.bits }
    }
}

impl fmt::Debug for RootSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl BitOr for RootSet {
    type Output = RootSet;
    fn bitor(self, rhs: RootSet) -> RootSet {
        debug_assert_eq!(self.width, rhs.width);
        RootSet {
            bits: self.bits | rhs.bits,
            width: self.width,
        }
    }
}

impl BitAnd for RootSet {
    type Output = RootSet;
    fn bitand(self, rhs: RootSet) -> RootSet {
        debug_assert_eq!(self.width, rhs.width);
        RootSet {
            bits: self.bits & rhs.bits,
            width: self.width,
        }
    }
}

impl Not for RootSet {
    type Output = RootSet;
    fn not(self) -> RootSet {
        RootSet::from_bits(self.width(), !self.bits)
    }
}

impl IntoIterator for &RootSet {
    type Item = usize;
    type IntoIter = Iter;
    fn into_iter(self) -> Iter {
        self.iter()
    }
}

pub struct Iter {
    bits: u128,
}

impl Iterator for Iter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.bits == 0 {
            return None;
        }
        let i = self.bits.trailing_zeros() as usize;
        self.bits &= self.bits - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.bits.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}
