//! The root poset: α ≤ β iff β − α is a sum of positive roots.
//!
//! On Δ+ this is componentwise dominance of coordinates over the simple roots.
//! Filters (upward-closed sets) and antichains are in bijection through
//! [`Poset::upward_closure`] and [`Poset::minimal_elements`].

use crate::rootset::RootSet;
use crate::rootsys::RootSystem;

#[derive(Debug, Clone)]
pub struct Poset {
    n: usize,
    // up[i] = {j : i ≤ j}, down[i] = {j : j ≤ i}
    up: Vec<RootSet>,
    down: Vec<RootSet>,
    covers: Vec<Vec<usize>>,
}

impl Poset {
    pub fn new(rs: &RootSystem) -> Self {
        let n = rs.len();
        let roots = rs.positive_roots();
        let mut up = vec![RootSet::empty(n); n];
        let mut down = vec![RootSet::empty(n); n];
        for (i, a) in roots.iter().enumerate() {
            for (j, b) in roots.iter().enumerate() {
                if a.coords().iter().zip(b.coords()).all(|(x, y)| x <= y) {
                    up[i].insert(j);
                    down[j].insert(i);
                }
            }
        }
        let covers = (0..n)
            .map(|i| {
                let mut strictly_above = up[i];
                strictly_above.remove(i);
                strictly_above
                    .iter()
                    .filter(|&j| {
                        // nothing strictly between i and j
                        let mut between = strictly_above & down[j];
                        between.remove(j);
                        between.is_empty()
                    })
                    .collect()
            })
            .collect();
        Poset {
            n,
            up,
            down,
            covers,
        }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.up[i].contains(j)
    }

    pub fn comparable(&self, i: usize, j: usize) -> bool {
        self.leq(i, j) || self.leq(j, i)
    }

    /// `{j : i ≤ j}`.
    pub fn above(&self, i: usize) -> RootSet {
        self.up[i]
    }

    /// `{j : j ≤ i}`.
    pub fn below(&self, i: usize) -> RootSet {
        self.down[i]
    }

    /// Immediate successors of `i`.
    pub fn covers(&self, i: usize) -> &[usize] {
        &self.covers[i]
    }

    fn incomparable(&self, i: usize) -> RootSet {
        !(self.up[i] | self.down[i])
    }

    pub fn minimal_elements(&self, s: RootSet) -> RootSet {
        RootSet::from_indices(self.n, s.iter().filter(|&i| (self.down[i] & s).len() == 1))
    }

    pub fn upward_closure(&self, a: RootSet) -> RootSet {
        a.iter()
            .fold(RootSet::empty(self.n), |acc, i| acc | self.up[i])
    }

    pub fn is_antichain(&self, a: RootSet) -> bool {
        a.iter()
            .all(|i| ((self.up[i] | self.down[i]) & a).len() == 1)
    }

    pub fn is_filter(&self, s: RootSet) -> bool {
        s.iter().all(|i| self.up[i].is_subset(&s))
    }

    /// Every antichain exactly once, starting with ∅, in depth-first order over
    /// canonical indices: an antichain is only extended by incomparable roots of
    /// larger index than all its members.
    pub fn antichains(&self) -> Antichains<'_> {
        Antichains {
            poset: self,
            stack: Vec::new(),
            pending: Some(RootSet::empty(self.n)),
            root: None,
        }
    }

    /// The subtree of [`Poset::antichains`] whose smallest member is `i`.
    ///
    /// `∅` followed by the concatenation of `subtree(0), …, subtree(n − 1)` is
    /// exactly the full stream, so the subtrees can be processed independently.
    pub fn antichain_subtree(&self, i: usize) -> Antichains<'_> {
        assert!(i < self.n);
        let chosen = RootSet::from_indices(self.n, [i]);
        Antichains {
            poset: self,
            stack: Vec::new(),
            pending: Some(chosen),
            root: Some(i),
        }
    }
}

/// Lazy depth-first antichain stream. See [`Poset::antichains`].
pub struct Antichains<'a> {
    poset: &'a Poset,
    // (antichain, candidates that may still extend it)
    stack: Vec<(RootSet, RootSet)>,
    pending: Option<RootSet>,
    root: Option<usize>,
}

impl Antichains<'_> {
    fn candidates_after(&self, chosen: RootSet, last: Option<usize>) -> RootSet {
        let n = self.poset.n;
        let mut cand = RootSet::full(n);
        if let Some(j) = last {
            (0..=j).for_each(|k| cand.remove(k));
        }
        for i in chosen.iter() {
            cand = cand & self.poset.incomparable(i);
        }
        cand
    }
}

impl Iterator for Antichains<'_> {
    type Item = RootSet;

    fn next(&mut self) -> Option<RootSet> {
        if let Some(first) = self.pending.take() {
            let cand = self.candidates_after(first, self.root);
            self.stack.push((first, cand));
            return Some(first);
        }
        loop {
            let (chosen, cand) = self.stack.last_mut()?;
            let Some(j) = cand.iter().next() else {
                self.stack.pop();
                continue;
            };
            cand.remove(j);
            let mut next = *chosen;
            next.insert(j);
            // remaining candidates are all > j already
            let next_cand = *cand & self.poset.incomparable(j);
            self.stack.push((next, next_cand));
            return Some(next);
        }
    }
}
