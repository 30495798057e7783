//! Brute-force reference implementations.
//!
//! Nothing here calls into the poset bitset machinery, the compatibility masks,
//! or the θ-decomposition shortcut. Roots are generated by reflections rather
//! than root strings, and ideal membership is checked against the closure
//! definition of `F_I` with explicit root arithmetic.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::ideals::ParabolicMask;
use crate::poset::Poset;
use crate::rootset::RootSet;
use crate::rootsys::{RootSystem, SimpleType};
use crate::tabulate::{TableOf, TableRowOf};

/// Largest |Δ+| the subset scans accept.
pub const SUBSET_SCAN_LIMIT: usize = 24;

/// Coordinates of Δ+ as the orbit of the simple roots under the simple
/// reflections `s_i(β) = β − ⟨β, α_i^∨⟩ α_i`, keeping the positive vectors.
pub fn reflection_closure(t: SimpleType) -> BTreeSet<Vec<i32>> {
    let a = t.cartan_matrix();
    let l = t.rank();
    let mut seen: BTreeSet<Vec<i32>> = BTreeSet::new();
    let mut queue: Vec<Vec<i32>> = (0..l)
        .map(|i| (0..l).map(|j| i32::from(i == j)).collect())
        .collect();
    while let Some(beta) = queue.pop() {
        if !seen.insert(beta.clone()) {
            continue;
        }
        for i in 0..l {
            let pairing: i32 = (0..l).map(|j| beta[j] * a[j][i]).sum();
            let mut image = beta.clone();
            image[i] -= pairing;
            if !seen.contains(&image) {
                queue.push(image);
            }
        }
    }
    seen.into_iter()
        .filter(|v| v.iter().all(|&c| c >= 0))
        .collect()
}

fn add(a: &[i32], b: &[i32]) -> Vec<i32> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// Φ² = {φ1 + φ2 ∈ Δ+ : φ1, φ2 ∈ Φ}, by scanning all pairs.
pub fn phi_squared(rs: &RootSystem, phi: RootSet) -> RootSet {
    let mut out = RootSet::empty(rs.len());
    for i in phi.iter() {
        for j in phi.iter() {
            let sum = add(rs.root(i).coords(), rs.root(j).coords());
            if let Some(r) = rs.find(&sum) {
                out.insert(r.index());
            }
        }
    }
    out
}

/// Positive roots in the span of `I`.
fn span_roots(rs: &RootSystem, parabolic: ParabolicMask) -> Vec<Vec<i32>> {
    rs.positive_roots()
        .iter()
        .filter(|r| {
            r.coords()
                .iter()
                .enumerate()
                .all(|(k, &c)| c == 0 || parabolic.contains(k))
        })
        .map(|r| r.coords().to_vec())
        .collect()
}

/// The shifts β allowed in the `F_I` closure: Δ+ together with ±(ℤI ∩ Δ+).
fn closure_shifts(rs: &RootSystem, parabolic: ParabolicMask) -> Vec<Vec<i32>> {
    let mut shifts: Vec<Vec<i32>> = rs
        .positive_roots()
        .iter()
        .map(|r| r.coords().to_vec())
        .collect();
    for v in span_roots(rs, parabolic) {
        shifts.push(v.iter().map(|c| -c).collect());
    }
    shifts
}

/// `Φ ∈ F_I`: Φ avoids Δ_I, and α ∈ Φ, β ∈ Δ+ ∪ Δ_I, α + β ∈ Δ+ imply α + β ∈ Φ.
pub fn is_filter_for(rs: &RootSystem, phi: RootSet, parabolic: ParabolicMask) -> bool {
    let delta_i = span_roots(rs, parabolic);
    if phi
        .iter()
        .any(|k| delta_i.iter().any(|v| v.as_slice() == rs.root(k).coords()))
    {
        return false;
    }
    let shifts = closure_shifts(rs, parabolic);
    phi.iter().all(|k| {
        shifts.iter().all(|beta| {
            let sum = add(rs.root(k).coords(), beta);
            rs.find(&sum).is_none_or(|r| phi.contains(r.index()))
        })
    })
}

fn check_size(n: usize) -> Result<()> {
    if n > SUBSET_SCAN_LIMIT {
        return Err(Error::TooLarge {
            what: "subset scan over positive roots",
            size: n,
            limit: SUBSET_SCAN_LIMIT,
        });
    }
    Ok(())
}

/// Number of subsets Φ ⊆ Δ+ with `α ∈ Φ, α ≤ β ⟹ β ∈ Φ`, over all `2^|Δ+|` subsets.
pub fn subset_scan_filters(p: &Poset) -> Result<u64> {
    let n = p.len();
    check_size(n)?;
    let up: Vec<u32> = (0..n)
        .map(|a| (0..n).filter(|&b| p.leq(a, b)).fold(0, |m, b| m | 1 << b))
        .collect();
    let mut count = 0;
    for s in 0..1u32 << n {
        if members(s).all(|a| up[a] & !s == 0) {
            count += 1;
        }
    }
    Ok(count)
}

fn members(mut s: u32) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (s != 0).then(|| {
            let i = s.trailing_zeros() as usize;
            s &= s - 1;
            i
        })
    })
}

/// Targets of the `F_I` closure from α: `{α + β ∈ Δ+ : β ∈ Δ+ ∪ Δ_I}` as a bitmask.
fn closure_targets(rs: &RootSystem, parabolic: ParabolicMask) -> Vec<u32> {
    let shifts = closure_shifts(rs, parabolic);
    rs.positive_roots()
        .iter()
        .map(|a| {
            shifts
                .iter()
                .filter_map(|beta| rs.find(&add(a.coords(), beta)))
                .fold(0u32, |m, r| m | 1 << r.index())
        })
        .collect()
}

/// All members of `F_∅`, found by testing the Δ+-closure on every subset.
fn scan_borel_filters(rs: &RootSystem) -> Result<Vec<RootSet>> {
    let n = rs.len();
    check_size(n)?;
    let targets = closure_targets(rs, ParabolicMask::empty(rs.rank()));
    Ok((0..1u32 << n)
        .filter(|&s| members(s).all(|a| targets[a] & !s == 0))
        .map(|s| RootSet::from_bits(n, u128::from(s)))
        .collect())
}

/// Members of `F_I` with their abelian flag (`Φ² = ∅`), in scan order.
pub fn brute_force_ideals(
    rs: &RootSystem,
    parabolic: ParabolicMask,
) -> Result<Vec<(RootSet, bool)>> {
    Ok(scan_borel_filters(rs)?
        .into_iter()
        .filter(|&phi| is_filter_for(rs, phi, parabolic))
        .map(|phi| (phi, phi_squared(rs, phi).is_empty()))
        .collect())
}

/// Every row of the count table from the `F_I` definition, by scanning all subsets.
pub fn brute_force_tabulate(rs: &RootSystem) -> Result<TableOf<u64>> {
    let filters = scan_borel_filters(rs)?;
    let rows = ParabolicMask::all(rs.rank())
        .map(|mask| {
            let forbidden: u32 = span_roots(rs, mask)
                .iter()
                .fold(0, |m, v| m | 1 << rs.find(v).unwrap().index());
            let targets = closure_targets(rs, mask);
            let mut row = TableRowOf {
                mask,
                n_count: 0u64,
                ab_count: 0u64,
            };
            for phi in &filters {
                let s = phi.bits() as u32;
                if s & forbidden == 0 && members(s).all(|a| targets[a] & !s == 0) {
                    row.n_count += 1;
                    row.ab_count += u64::from(phi_squared(rs, *phi).is_empty());
                }
            }
            row
        })
        .collect();
    TableOf::new(rs.simple_type(), rows)
}
