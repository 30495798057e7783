//! Counting ad-nilpotent and abelian ideals for every standard parabolic.
//!
//! Each filter is classified once into a counter slot keyed by its compatibility
//! mask `J(Φ)`; the row for `I` is the sum over all slots `J ⊇ I`, which a
//! superset-sum transform produces for all `2^l` masks at once.

use std::fmt;
use std::ops::AddAssign;

use num_traits::{PrimInt, Unsigned, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::golden_data;
use crate::ideals::{IdealRecord, ParabolicMask};
use crate::poset::Poset;
use crate::rootset::RootSet;
use crate::rootsys::{RootSystem, SimpleType};

/// Unsigned integer type used for ideal counts.
pub trait Count: PrimInt + Unsigned + AddAssign + Send + Sync + fmt::Display + fmt::Debug {}

impl<T> Count for T where T: PrimInt + Unsigned + AddAssign + Send + Sync + fmt::Display + fmt::Debug
{}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Counts<C> {
    pub n: C,
    pub ab: C,
}

impl<C: Count> Zero for Counts<C> {
    fn zero() -> Self {
        Counts {
            n: C::zero(),
            ab: C::zero(),
        }
    }

    fn is_zero(&self) -> bool {
        self.n.is_zero() && self.ab.is_zero()
    }
}

impl<C: Count> std::ops::Add for Counts<C> {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        self += rhs;
        self
    }
}

impl<C: Count> AddAssign for Counts<C> {
    fn add_assign(&mut self, rhs: Self) {
        self.n += rhs.n;
        self.ab += rhs.ab;
    }
}

/// In place, `xs[m] ← Σ_{m' ⊇ m} xs[m']`. `xs.len()` must be a power of two.
pub fn superset_sums<T: Copy + AddAssign>(xs: &mut [T]) {
    assert!(xs.len().is_power_of_two());
    let mut bit = 1;
    while bit < xs.len() {
        for m in 0..xs.len() {
            if m & bit == 0 {
                let hi = xs[m | bit];
                xs[m] += hi;
            }
        }
        bit <<= 1;
    }
}

/// One line of a count table: `I`, `♯N_I`, `♯Ab_I`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TableRowOf<C> {
    pub mask: ParabolicMask,
    pub n_count: C,
    pub ab_count: C,
}

/// All `2^l` rows for one type, in ascending mask order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableOf<C> {
    simple_type: SimpleType,
    rows: Vec<TableRowOf<C>>,
}

impl<C: Count> TableOf<C> {
    /// Checks that `rows` has exactly one row per mask, ascending.
    pub fn new(simple_type: SimpleType, rows: Vec<TableRowOf<C>>) -> Result<Self> {
        let l = simple_type.rank();
        if rows.len() != 1 << l {
            return Err(Error::MalformedTable(format!(
                "{simple_type} needs {} rows, got {}",
                1 << l,
                rows.len()
            )));
        }
        for (k, row) in rows.iter().enumerate() {
            if row.mask.bits() as usize != k || row.mask.rank() != l {
                return Err(Error::MalformedTable(format!(
                    "{simple_type}: row {k} has mask {}",
                    row.mask
                )));
            }
        }
        Ok(TableOf { simple_type, rows })
    }

    pub fn simple_type(&self) -> SimpleType {
        self.simple_type
    }

    pub fn rows(&self) -> &[TableRowOf<C>] {
        &self.rows
    }

    pub fn row(&self, mask: ParabolicMask) -> &TableRowOf<C> {
        &self.rows[mask.bits() as usize]
    }

    pub fn rows_mut(&mut self) -> &mut [TableRowOf<C>] {
        &mut self.rows
    }

    fn from_slots(simple_type: SimpleType, mut slots: Vec<Counts<C>>) -> Self {
        superset_sums(&mut slots);
        let l = simple_type.rank();
        let rows = slots
            .into_iter()
            .enumerate()
            .map(|(m, c)| TableRowOf {
                mask: ParabolicMask::from_bits(l, m as u16),
                n_count: c.n,
                ab_count: c.ab,
            })
            .collect();
        TableOf { simple_type, rows }
    }
}

fn record_into<C: Count>(slots: &mut [Counts<C>], rec: &IdealRecord) {
    let slot = &mut slots[rec.compat.bits() as usize];
    slot.n += C::one();
    if rec.abelian {
        slot.ab += C::one();
    }
}

fn add_slots<C: Count>(mut a: Vec<Counts<C>>, b: Vec<Counts<C>>) -> Vec<Counts<C>> {
    for (x, y) in a.iter_mut().zip(b) {
        *x += y;
    }
    a
}

/// Counts on the calling thread.
pub fn tabulate_as<C: Count>(rs: &RootSystem, poset: &Poset) -> TableOf<C> {
    let mut slots = vec![Counts::<C>::zero(); 1 << rs.rank()];
    for a in poset.antichains() {
        record_into(&mut slots, &IdealRecord::from_antichain(rs, poset, a));
    }
    TableOf::from_slots(rs.simple_type(), slots)
}

/// Counts with the antichain tree split by smallest member across `threads`
/// workers. The result does not depend on `threads`.
pub fn tabulate_parallel_as<C: Count>(
    rs: &RootSystem,
    poset: &Poset,
    threads: usize,
) -> Result<TableOf<C>> {
    if threads <= 1 {
        return Ok(tabulate_as(rs, poset));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Error::ThreadPool(e.to_string()))?;
    let width = 1 << rs.rank();
    let slots = pool.install(|| {
        (0..poset.len())
            .into_par_iter()
            .map(|i| {
                let mut slots = vec![Counts::<C>::zero(); width];
                for a in poset.antichain_subtree(i) {
                    record_into(&mut slots, &IdealRecord::from_antichain(rs, poset, a));
                }
                slots
            })
            .reduce(|| vec![Counts::zero(); width], add_slots)
    });
    // the empty antichain sits outside every subtree
    let mut slots = slots;
    let empty = IdealRecord::from_antichain(rs, poset, RootSet::empty(poset.len()));
    record_into(&mut slots, &empty);
    Ok(TableOf::from_slots(rs.simple_type(), slots))
}

pub fn tabulate(rs: &RootSystem) -> TableOf<u64> {
    tabulate_as(rs, &Poset::new(rs))
}

/// Every ideal of `p_I`, ordered by `(|Φ|, member indices)`.
pub fn ideals_of(
    rs: &RootSystem,
    poset: &Poset,
    parabolic: ParabolicMask,
    abelian_only: bool,
) -> Vec<IdealRecord> {
    let mut out: Vec<IdealRecord> = poset
        .antichains()
        .map(|a| IdealRecord::from_antichain(rs, poset, a))
        .filter(|r| r.is_ideal_of(parabolic) && (r.abelian || !abelian_only))
        .collect();
    out.sort_by(listing_order);
    out
}

/// Listing order for ideals: by `|Φ|`, then by the ascending member indices.
pub fn listing_order(a: &IdealRecord, b: &IdealRecord) -> std::cmp::Ordering {
    a.size
        .cmp(&b.size)
        .then_with(|| a.phi.iter().cmp(b.phi.iter()))
}

/// The embedded table for an exceptional type.
pub fn golden(t: SimpleType) -> Result<TableOf<u64>> {
    let data: &[(u16, u64, u64)] = match t {
        SimpleType::G2 => &golden_data::G2,
        SimpleType::F4 => &golden_data::F4,
        SimpleType::E6 => &golden_data::E6,
        SimpleType::E7 => &golden_data::E7,
        SimpleType::E8 => &golden_data::E8,
        _ => return Err(Error::NoGolden(t)),
    };
    let rows = data
        .iter()
        .map(|&(m, n, ab)| TableRowOf {
            mask: ParabolicMask::from_bits(t.rank(), m),
            n_count: n,
            ab_count: ab,
        })
        .collect();
    TableOf::new(t, rows)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch<C> {
    pub mask: ParabolicMask,
    pub expected: (C, C),
    pub got: (C, C),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report<C> {
    pub simple_type: SimpleType,
    pub rows: usize,
    pub mismatches: Vec<Mismatch<C>>,
}

impl<C> Report<C> {
    pub fn is_match(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Row-by-row comparison of a computed table with an expected one.
pub fn compare<C: Count>(computed: &TableOf<C>, expected: &TableOf<C>) -> Result<Report<C>> {
    if computed.simple_type != expected.simple_type {
        return Err(Error::TypeMismatch {
            golden: expected.simple_type,
            actual: computed.simple_type,
        });
    }
    let mismatches = computed
        .rows
        .iter()
        .zip(&expected.rows)
        .filter(|(c, e)| (c.n_count, c.ab_count) != (e.n_count, e.ab_count))
        .map(|(c, e)| Mismatch {
            mask: c.mask,
            expected: (e.n_count, e.ab_count),
            got: (c.n_count, c.ab_count),
        })
        .collect();
    Ok(Report {
        simple_type: computed.simple_type,
        rows: computed.rows.len(),
        mismatches,
    })
}

pub fn verify_against_golden(rs: &RootSystem, golden: &TableOf<u64>) -> Result<Report<u64>> {
    if rs.simple_type() != golden.simple_type {
        return Err(Error::TypeMismatch {
            golden: golden.simple_type,
            actual: rs.simple_type(),
        });
    }
    compare(&tabulate(rs), golden)
}
