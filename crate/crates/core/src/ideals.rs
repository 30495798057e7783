//! Classifying filters of the root poset as ideals of standard parabolics.
//!
//! A filter Φ is an ad-nilpotent ideal of `p_I` iff for every `α ∈ I` the set
//! `{β − α : β ∈ Φ} ∩ (Δ+ ∪ {0})` lies in Φ. The set of simple roots for which this
//! holds is the filter's compatibility mask `J(Φ)`, and `Φ ∈ F_I ⟺ I ⊆ J(Φ)`.

use std::fmt;

use crate::error::{Error, Result};
use crate::poset::Poset;
use crate::rootset::RootSet;
use crate::rootsys::{RootSystem, Step};

/// A subset `I` of the simple roots. Bit `i` stands for `α_{i+1}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ParabolicMask {
    bits: u16,
    rank: u8,
}

impl ParabolicMask {
    pub const MAX_RANK: usize = 16;

    pub fn empty(rank: usize) -> Self {
        assert!(rank <= Self::MAX_RANK, "rank {rank} too large for a mask");
        ParabolicMask {
            bits: 0,
            rank: rank as u8,
        }
    }

    pub fn full(rank: usize) -> Self {
        Self::from_bits(rank, u16::MAX)
    }

    /// Bits at or above `rank` are dropped.
    pub fn from_bits(rank: usize, bits: u16) -> Self {
        let mut m = Self::empty(rank);
        m.bits = bits & Self::all_bits(rank);
        m
    }

    fn all_bits(rank: usize) -> u16 {
        ((1u32 << rank) - 1) as u16
    }

    /// From 1-based simple root numbers, as written `α_1 … α_l`.
    pub fn from_simple_numbers(rank: usize, numbers: &[usize]) -> Result<Self> {
        let mut m = Self::empty(rank);
        for &k in numbers {
            if k == 0 || k > rank {
                return Err(Error::SimpleIndexOutOfRange { index: k, rank });
            }
            m.bits |= 1 << (k - 1);
        }
        Ok(m)
    }

    pub fn bits(self) -> u16 {
        self.bits
    }

    pub fn rank(self) -> usize {
        self.rank as usize
    }

    pub fn contains(self, i: usize) -> bool {
        self.bits >> i & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        assert!(i < self.rank());
        self.bits |= 1 << i;
    }

    pub fn is_subset(self, other: ParabolicMask) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn len(self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.bits == 0
    }

    /// 1-based simple root numbers in ascending order.
    pub fn simple_numbers(self) -> Vec<usize> {
        (0..self.rank())
            .filter(|&i| self.contains(i))
            .map(|i| i + 1)
            .collect()
    }

    /// Every mask of the given rank, ascending.
    pub fn all(rank: usize) -> impl Iterator<Item = ParabolicMask> {
        (0..1u32 << rank).map(move |b| ParabolicMask::from_bits(rank, b as u16))
    }
}

impl fmt::Display for ParabolicMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("∅");
        }
        let parts: Vec<String> = self
            .simple_numbers()
            .iter()
            .map(|k| format!("α{k}"))
            .collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

impl fmt::Debug for ParabolicMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A filter Φ with everything the tables need to know about it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IdealRecord {
    pub phi: RootSet,
    pub min_roots: RootSet,
    pub compat: ParabolicMask,
    pub abelian: bool,
    pub size: usize,
}

impl IdealRecord {
    /// Classifies the filter generated by an antichain.
    pub fn from_antichain(rs: &RootSystem, poset: &Poset, antichain: RootSet) -> Self {
        let phi = poset.upward_closure(antichain);
        IdealRecord {
            phi,
            min_roots: antichain,
            compat: compatibility_mask(rs, phi),
            abelian: is_abelian(rs, phi),
            size: phi.len(),
        }
    }

    pub fn from_filter(rs: &RootSystem, poset: &Poset, phi: RootSet) -> Self {
        Self::from_antichain(rs, poset, poset.minimal_elements(phi))
    }

    /// Whether Φ is an ad-nilpotent ideal of `p_I`.
    pub fn is_ideal_of(&self, parabolic: ParabolicMask) -> bool {
        parabolic.is_subset(self.compat)
    }
}

/// Whether the filter `phi` is stable under the simple root `α_{i+1}`:
/// `α_i ∉ Φ`, and `β − α_i ∈ Δ+` implies `β − α_i ∈ Φ` for all `β ∈ Φ`.
pub fn parabolic_compatible(rs: &RootSystem, phi: RootSet, i: usize) -> bool {
    phi.iter().all(|b| match rs.step_down(b, i) {
        Step::Zero => false,
        Step::Root(k) => phi.contains(k),
        Step::None => true,
    })
}

pub fn compatibility_mask(rs: &RootSystem, phi: RootSet) -> ParabolicMask {
    let mut m = ParabolicMask::empty(rs.rank());
    for i in 0..rs.rank() {
        if parabolic_compatible(rs, phi, i) {
            m.insert(i);
        }
    }
    m
}

/// Φ is abelian iff θ is not a sum of two elements of Φ.
pub fn is_abelian(rs: &RootSystem, phi: RootSet) -> bool {
    let top = rs.theta().height();
    !phi.iter().any(|b| {
        2 * rs.root(b).height() <= top && rs.theta_minus(b).is_some_and(|c| phi.contains(c))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::SimpleType;

    fn g2() -> RootSystem {
        RootSystem::build(SimpleType::G2).unwrap()
    }

    fn set(idx: &[usize]) -> RootSet {
        RootSet::from_indices(6, idx.iter().copied())
    }

    // G2 indices: 0 α1, 1 α2, 2 α1+α2, 3 2α1+α2, 4 3α1+α2, 5 θ

    #[test]
    fn compatible_examples() {
        let rs = g2();
        for i in 0..2 {
            assert!(parabolic_compatible(&rs, set(&[]), i));
            assert!(!parabolic_compatible(&rs, RootSet::full(6), i));
        }
        assert!(parabolic_compatible(&rs, set(&[5]), 0));
        assert!(!parabolic_compatible(&rs, set(&[5]), 1));
    }

    #[test]
    fn mask_examples() {
        let rs = g2();
        assert_eq!(compatibility_mask(&rs, set(&[])), ParabolicMask::full(2));
        assert_eq!(
            compatibility_mask(&rs, RootSet::full(6)),
            ParabolicMask::empty(2)
        );
        assert_eq!(
            compatibility_mask(&rs, set(&[5, 4, 3, 2, 1])),
            ParabolicMask::from_simple_numbers(2, &[1]).unwrap()
        );
    }

    #[test]
    fn abelian_examples() {
        let rs = g2();
        assert!(is_abelian(&rs, set(&[])));
        assert!(is_abelian(&rs, set(&[5])));
        assert!(!is_abelian(&rs, set(&[5, 4, 3, 2, 1])));
        assert!(is_abelian(&rs, set(&[3, 4, 5])));
    }

    #[test]
    fn record_from_antichain() {
        let rs = g2();
        let p = Poset::new(&rs);
        let r = IdealRecord::from_antichain(&rs, &p, set(&[1]));
        assert_eq!(r.phi, set(&[1, 2, 3, 4, 5]));
        assert_eq!(r.size, 5);
        assert!(!r.abelian);
        assert!(r.is_ideal_of(ParabolicMask::from_simple_numbers(2, &[1]).unwrap()));
        assert!(!r.is_ideal_of(ParabolicMask::full(2)));
        assert_eq!(IdealRecord::from_filter(&rs, &p, r.phi), r);
    }

    #[test]
    fn mask_parsing_and_display() {
        let m = ParabolicMask::from_simple_numbers(6, &[2, 5]).unwrap();
        assert_eq!(m.bits(), 0b010010);
        assert_eq!(m.to_string(), "{α2,α5}");
        assert_eq!(ParabolicMask::empty(6).to_string(), "∅");
        assert_eq!(
            ParabolicMask::from_simple_numbers(2, &[3]),
            Err(Error::SimpleIndexOutOfRange { index: 3, rank: 2 })
        );
        assert!(ParabolicMask::from_simple_numbers(2, &[0]).is_err());
        assert_eq!(ParabolicMask::all(3).count(), 8);
    }
}
