//! Positive root systems of the simple types, built from their Cartan matrices.
//!
//! Roots are integer coordinate vectors over the simple roots. The positive roots
//! are indexed canonically by ascending height, then descending lexicographic
//! coordinates, so the simple roots occupy indices `0..rank` in diagram order.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::rootset::MAX_WIDTH;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Kind {
    pub fn letter(self) -> char {
        match self {
            Kind::A => 'A',
            Kind::B => 'B',
            Kind::C => 'C',
            Kind::D => 'D',
            Kind::E => 'E',
            Kind::F => 'F',
            Kind::G => 'G',
        }
    }

    fn from_letter(c: char) -> Option<Self> {
        Some(match c.to_ascii_uppercase() {
            'A' => Kind::A,
            'B' => Kind::B,
            'C' => Kind::C,
            'D' => Kind::D,
            'E' => Kind::E,
            'F' => Kind::F,
            'G' => Kind::G,
            _ => return None,
        })
    }
}

/// A Cartan type such as `E6` or `B3`. Construction validates the rank.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleType {
    kind: Kind,
    rank: usize,
}

impl SimpleType {
    pub const G2: SimpleType = SimpleType {
        kind: Kind::G,
        rank: 2,
    };
    pub const F4: SimpleType = SimpleType {
        kind: Kind::F,
        rank: 4,
    };
    pub const E6: SimpleType = SimpleType {
        kind: Kind::E,
        rank: 6,
    };
    pub const E7: SimpleType = SimpleType {
        kind: Kind::E,
        rank: 7,
    };
    pub const E8: SimpleType = SimpleType {
        kind: Kind::E,
        rank: 8,
    };

    /// The five exceptional types, in the order their tables are usually listed.
    pub const EXCEPTIONAL: [SimpleType; 5] = [
        SimpleType::G2,
        SimpleType::F4,
        SimpleType::E6,
        SimpleType::E7,
        SimpleType::E8,
    ];

    pub fn new(kind: Kind, rank: usize) -> Result<Self> {
        let valid = match kind {
            Kind::A => rank >= 1,
            Kind::B | Kind::C => rank >= 2,
            Kind::D => rank >= 3,
            Kind::E => (6..=8).contains(&rank),
            Kind::F => rank == 4,
            Kind::G => rank == 2,
        };
        if valid {
            Ok(SimpleType { kind, rank })
        } else {
            Err(Error::UnsupportedType {
                kind: kind.letter(),
                rank,
            })
        }
    }

    pub fn kind(self) -> Kind {
        self.kind
    }

    pub fn rank(self) -> usize {
        self.rank
    }

    pub fn is_exceptional(self) -> bool {
        matches!(self.kind, Kind::E | Kind::F | Kind::G)
    }

    /// Cartan matrix `a[i][j] = ⟨α_i, α_j^∨⟩`.
    ///
    /// E, G and the classical types use Bourbaki numbering. F4 is numbered so that
    /// the Dynkin chain reads `α2 - α4 => α3 - α1` (α2, α4 long), the labelling
    /// under which the published F4 count table is stated.
    pub fn cartan_matrix(self) -> Vec<Vec<i32>> {
        let l = self.rank;
        let mut a = vec![vec![0i32; l]; l];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        // 1-based node numbers; `ij` is ⟨α_i, α_j^∨⟩ and `ji` is ⟨α_j, α_i^∨⟩.
        let mut link = |i: usize, j: usize, ij: i32, ji: i32| {
            a[i - 1][j - 1] = ij;
            a[j - 1][i - 1] = ji;
        };
        match self.kind {
            Kind::A => {
                for i in 1..l {
                    link(i, i + 1, -1, -1);
                }
            }
            Kind::B => {
                for i in 1..l - 1 {
                    link(i, i + 1, -1, -1);
                }
                link(l - 1, l, -2, -1);
            }
            Kind::C => {
                for i in 1..l - 1 {
                    link(i, i + 1, -1, -1);
                }
                link(l - 1, l, -1, -2);
            }
            Kind::D => {
                for i in 1..l - 1 {
                    link(i, i + 1, -1, -1);
                }
                link(l - 2, l, -1, -1);
            }
            Kind::E => {
                link(1, 3, -1, -1);
                link(3, 4, -1, -1);
                link(2, 4, -1, -1);
                for i in 4..l {
                    link(i, i + 1, -1, -1);
                }
            }
            Kind::F => {
                link(2, 4, -1, -1);
                link(4, 3, -2, -1);
                link(3, 1, -1, -1);
            }
            Kind::G => link(1, 2, -1, -3),
        }
        a
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.kind.letter(), self.rank)
    }
}

impl FromStr for SimpleType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::BadTypeName(s.to_string());
        let s = s.trim();
        let mut chars = s.chars();
        let kind = chars.next().and_then(Kind::from_letter).ok_or_else(bad)?;
        let rank: usize = chars.as_str().parse().map_err(|_| bad())?;
        SimpleType::new(kind, rank)
    }
}

/// A positive root, as coefficients over the simple roots.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Root {
    coords: Vec<i32>,
    height: u32,
    index: usize,
}

impl Root {
    pub fn coords(&self) -> &[i32] {
        &self.coords
    }

    pub fn height(&self) -> u32 {
        self.height
    }

    pub fn index(&self) -> usize {
        self.index
    }

    pub fn is_simple(&self) -> bool {
        self.height == 1
    }
}

impl fmt::Display for Root {
    /// Writes e.g. `3α1+2α2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.coords.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                f.write_str("+")?;
            }
            first = false;
            if c != 1 {
                write!(f, "{c}")?;
            }
            write!(f, "α{}", i + 1)?;
        }
        Ok(())
    }
}

/// Outcome of subtracting a simple root from a positive root.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Difference<'a> {
    Zero,
    Root(&'a Root),
    NotARoot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Step {
    Zero,
    Root(usize),
    None,
}

#[derive(Debug, Clone)]
pub struct RootSystem {
    simple_type: SimpleType,
    cartan: Vec<Vec<i32>>,
    roots: Vec<Root>,
    theta: usize,
    lookup: HashMap<Vec<i32>, usize>,
    // minus_simple[b * rank + i]
    minus_simple: Vec<Step>,
    // theta_minus[b]: index of θ - root_b, if a positive root
    theta_minus: Vec<Option<usize>>,
}

impl RootSystem {
    /// Builds Δ+ level by level with root strings: for a root β of height h and a
    /// simple root α_i, β + α_i is a root iff `p - ⟨β, α_i^∨⟩ ≥ 1`, where `p` is
    /// the largest `k` with `β - kα_i ∈ Δ+ ∪ {0}`.
    pub fn build(t: SimpleType) -> Result<Self> {
        let l = t.rank();
        let cartan = t.cartan_matrix();

        let mut known: HashMap<Vec<i32>, ()> = HashMap::new();
        let mut all: Vec<Vec<i32>> = Vec::new();
        let mut layer: Vec<Vec<i32>> = (0..l)
            .map(|i| {
                let mut v = vec![0; l];
                v[i] = 1;
                v
            })
            .collect();
        for v in &layer {
            known.insert(v.clone(), ());
        }

        while !layer.is_empty() {
            let mut next = Vec::new();
            for beta in &layer {
                for i in 0..l {
                    let mut p = 0;
                    let mut probe = beta.clone();
                    loop {
                        probe[i] -= 1;
                        let is_zero = probe.iter().all(|&c| c == 0);
                        if is_zero || known.contains_key(&probe) {
                            p += 1;
                        } else {
                            break;
                        }
                        if is_zero {
                            break;
                        }
                    }
                    let pairing: i32 = (0..l).map(|j| beta[j] * cartan[j][i]).sum();
                    if p - pairing >= 1 {
                        let mut up = beta.clone();
                        up[i] += 1;
                        if !known.contains_key(&up) {
                            known.insert(up.clone(), ());
                            next.push(up);
                        }
                    }
                }
            }
            all.append(&mut layer);
            if all.len() + next.len() > MAX_WIDTH {
                return Err(Error::TooLarge {
                    what: "positive roots",
                    size: all.len() + next.len(),
                    limit: MAX_WIDTH,
                });
            }
            layer = next;
        }

        all.sort_by(|a, b| {
            let ha: i32 = a.iter().sum();
            let hb: i32 = b.iter().sum();
            ha.cmp(&hb).then_with(|| b.cmp(a))
        });

        let roots: Vec<Root> = all
            .into_iter()
            .enumerate()
            .map(|(index, coords)| Root {
                height: coords.iter().sum::<i32>() as u32,
                coords,
                index,
            })
            .collect();
        let lookup: HashMap<Vec<i32>, usize> =
            roots.iter().map(|r| (r.coords.clone(), r.index)).collect();
        let theta = roots.len() - 1;

        let mut minus_simple = Vec::with_capacity(roots.len() * l);
        for r in &roots {
            for i in 0..l {
                let mut v = r.coords.clone();
                v[i] -= 1;
                minus_simple.push(if r.height == 1 && r.coords[i] == 1 {
                    Step::Zero
                } else {
                    lookup.get(&v).map_or(Step::None, |&k| Step::Root(k))
                });
            }
        }
        let theta_minus = roots
            .iter()
            .map(|r| {
                let v: Vec<i32> = roots[theta]
                    .coords
                    .iter()
                    .zip(&r.coords)
                    .map(|(a, b)| a - b)
                    .collect();
                lookup.get(&v).copied()
            })
            .collect();

        Ok(RootSystem {
            simple_type: t,
            cartan,
            roots,
            theta,
            lookup,
            minus_simple,
            theta_minus,
        })
    }

    pub fn simple_type(&self) -> SimpleType {
        self.simple_type
    }

    pub fn rank(&self) -> usize {
        self.simple_type.rank()
    }

    pub fn cartan(&self) -> &[Vec<i32>] {
        &self.cartan
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.roots
    }

    /// |Δ+|.
    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn root(&self, index: usize) -> &Root {
        &self.roots[index]
    }

    /// The simple root α_{i+1} (0-based `i`).
    pub fn simple_root(&self, i: usize) -> &Root {
        &self.roots[i]
    }

    pub fn theta(&self) -> &Root {
        &self.roots[self.theta]
    }

    pub fn theta_index(&self) -> usize {
        self.theta
    }

    pub fn find(&self, coords: &[i32]) -> Option<&Root> {
        self.lookup.get(coords).map(|&i| &self.roots[i])
    }

    /// `a + b`, if it is a positive root.
    pub fn add_roots(&self, a: &Root, b: &Root) -> Option<&Root> {
        let sum: Vec<i32> = a.coords.iter().zip(&b.coords).map(|(x, y)| x + y).collect();
        self.find(&sum)
    }

    /// `b - α_{i+1}` classified against Δ+ ∪ {0}; `i` is 0-based.
    pub fn subtract_simple(&self, b: &Root, i: usize) -> Difference<'_> {
        match self.step_down(b.index, i) {
            Step::Zero => Difference::Zero,
            Step::Root(k) => Difference::Root(&self.roots[k]),
            Step::None => Difference::NotARoot,
        }
    }

    pub(crate) fn step_down(&self, b: usize, i: usize) -> Step {
        self.minus_simple[b * self.rank() + i]
    }

    /// Index of `θ - root_b` when that is a positive root.
    pub(crate) fn theta_minus(&self, b: usize) -> Option<usize> {
        self.theta_minus[b]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g2() -> RootSystem {
        RootSystem::build(SimpleType::G2).unwrap()
    }

    fn coords(rs: &RootSystem) -> Vec<Vec<i32>> {
        rs.positive_roots()
            .iter()
            .map(|r| r.coords().to_vec())
            .collect()
    }

    #[test]
    fn g2_roots_in_canonical_order() {
        let rs = g2();
        assert_eq!(
            coords(&rs),
            vec![
                vec![1, 0],
                vec![0, 1],
                vec![1, 1],
                vec![2, 1],
                vec![3, 1],
                vec![3, 2]
            ]
        );
        assert_eq!(rs.theta().coords(), &[3, 2]);
    }

    #[test]
    fn a1_single_root() {
        let rs = RootSystem::build("A1".parse().unwrap()).unwrap();
        assert_eq!(coords(&rs), vec![vec![1]]);
        assert_eq!(rs.theta_index(), 0);
    }

    #[test]
    fn exceptional_counts() {
        let counts: Vec<usize> = SimpleType::EXCEPTIONAL
            .iter()
            .map(|&t| RootSystem::build(t).unwrap().len())
            .collect();
        assert_eq!(counts, vec![6, 24, 36, 63, 120]);
    }

    #[test]
    fn invalid_ranks_rejected() {
        for name in ["E5", "E9", "F3", "G3", "B1", "C1", "D2", "A0"] {
            assert!(matches!(
                name.parse::<SimpleType>(),
                Err(Error::UnsupportedType { .. })
            ));
        }
        assert!(matches!(
            "X2".parse::<SimpleType>(),
            Err(Error::BadTypeName(_))
        ));
        assert!(matches!(
            "E".parse::<SimpleType>(),
            Err(Error::BadTypeName(_))
        ));
    }

    #[test]
    fn too_many_roots() {
        assert!(RootSystem::build("A15".parse().unwrap()).is_ok());
        assert!(matches!(
            RootSystem::build("A16".parse().unwrap()),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn g2_addition() {
        let rs = g2();
        let (a1, a2, theta) = (rs.root(0), rs.root(1), rs.theta());
        assert_eq!(rs.add_roots(a1, a2).unwrap().coords(), &[1, 1]);
        assert_eq!(rs.add_roots(theta, a1), None);
        assert_eq!(rs.add_roots(a1, a1), None);
    }

    #[test]
    fn g2_subtraction() {
        let rs = g2();
        let theta = rs.theta();
        match rs.subtract_simple(theta, 1) {
            Difference::Root(r) => assert_eq!(r.coords(), &[3, 1]),
            other => panic!("{other:?}"),
        }
        assert_eq!(rs.subtract_simple(rs.root(0), 0), Difference::Zero);
        assert_eq!(rs.subtract_simple(theta, 0), Difference::NotARoot);
        assert_eq!(rs.subtract_simple(rs.root(0), 1), Difference::NotARoot);
    }

    #[test]
    fn display() {
        let rs = g2();
        assert_eq!(rs.theta().to_string(), "3α1+2α2");
        assert_eq!(rs.root(1).to_string(), "α2");
        assert_eq!(SimpleType::E8.to_string(), "E8");
    }

    #[test]
    fn subtraction_zero_only_for_simple() {
        for t in SimpleType::EXCEPTIONAL {
            let rs = RootSystem::build(t).unwrap();
            for b in rs.positive_roots() {
                for i in 0..rs.rank() {
                    let zero = rs.subtract_simple(b, i) == Difference::Zero;
                    assert_eq!(zero, b.index() == i, "{t} {b} {i}");
                }
            }
        }
    }

    #[test]
    fn theta_dominates_and_sums_have_added_height() {
        for t in SimpleType::EXCEPTIONAL {
            let rs = RootSystem::build(t).unwrap();
            let theta = rs.theta();
            for a in rs.positive_roots() {
                assert!(a.coords().iter().zip(theta.coords()).all(|(x, y)| x <= y));
                for b in rs.positive_roots() {
                    let ab = rs.add_roots(a, b);
                    assert_eq!(ab, rs.add_roots(b, a));
                    if let Some(s) = ab {
                        assert_eq!(s.height(), a.height() + b.height());
                    }
                }
            }
        }
    }
}
