//! Young diagrams.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers. Trailing zeros are
/// stripped on construction, so the empty sequence is the unique empty
/// partition.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse(format!("parts {parts:?} are not weakly decreasing")));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    /// Single row `(k)`.
    pub fn row(k: u32) -> Self {
        if k == 0 {
            Self::empty()
        } else {
            Partition(vec![k])
        }
    }

    /// Single column `(1^k)`.
    pub fn column(k: usize) -> Self {
        Partition(vec![1; k])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of nonzero rows.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// `|λ|`
    pub fn size(&self) -> usize {
        self.0.iter().map(|&p| p as usize).sum()
    }

    /// Row `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Self {
        let width = self.part(0) as usize;
        let parts = (1..=width)
            .map(|j| self.0.iter().filter(|&&p| p as usize >= j).count() as u32)
            .collect();
        Partition(parts)
    }

    /// Diagram inclusion `self ⊆ other`.
    pub fn is_contained_in(&self, other: &Partition) -> bool {
        self.len() <= other.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Hook length of the cell in row `i`, column `j` (0-based).
    fn hook(&self, i: usize, j: usize, conj: &Partition) -> usize {
        (self.part(i) as usize - j - 1) + (conj.part(j) as usize - i - 1) + 1
    }

    /// Dimension of the irreducible symmetric-group module `Y_λ`, by the hook
    /// length formula.
    pub fn sym_group_dim(&self) -> BigUint {
        let conj = self.conjugate();
        let mut num = BigUint::one();
        for k in 2..=self.size() {
            num *= k;
        }
        let mut den = BigUint::one();
        for (i, &row) in self.0.iter().enumerate() {
            for j in 0..row as usize {
                den *= self.hook(i, j, &conj);
            }
        }
        num / den
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("-");
        }
        let mut first = true;
        for p in &self.0 {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "-" || s == "∅" {
            return Ok(Partition::empty());
        }
        if s.is_empty() {
            return Err(Error::Parse("empty partition string (use \"-\")".into()));
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad partition part {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// All partitions of `n`, in reverse lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn go(rest: usize, max: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p as u32);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// All partitions `κ ⊆ outer` with `|κ| = size`.
pub fn subpartitions(outer: &Partition, size: usize) -> Vec<Partition> {
    fn go(outer: &Partition, row: usize, rest: usize, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        if row >= outer.len() {
            return;
        }
        let cap = max.min(outer.part(row)).min(rest as u32);
        // remaining rows can hold at most this much
        let room: usize = outer.parts()[row..].iter().map(|&p| p.min(cap) as usize).sum();
        if room < rest {
            return;
        }
        for p in (1..=cap).rev() {
            cur.push(p);
            go(outer, row + 1, rest - p as usize, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(outer, 0, size, u32::MAX, &mut Vec::new(), &mut out);
    out
}

/// All partitions `κ ⊆ outer`, any size.
pub fn all_subpartitions(outer: &Partition) -> Vec<Partition> {
    (0..=outer.size()).flat_map(|s| subpartitions(outer, s)).collect()
}

/// Partitions `ν ⊇ inner` with `ν/inner` a horizontal strip of `k` boxes and
/// `ν ⊆ bound`.
pub(crate) fn horizontal_strips(inner: &Partition, k: usize, bound: &Partition) -> Vec<Partition> {
    let rows = inner.len() + 1;
    let mut out = Vec::new();
    let mut cur = vec![0u32; rows];
    fn go(
        inner: &Partition,
        bound: &Partition,
        row: usize,
        rest: usize,
        cur: &mut Vec<u32>,
        out: &mut Vec<Partition>,
    ) {
        if row == cur.len() {
            if rest == 0 {
                let mut parts = cur.clone();
                while parts.last() == Some(&0) {
                    parts.pop();
                }
                out.push(Partition(parts));
            }
            return;
        }
        let base = inner.part(row);
        // interlacing: ν_row ≤ inner_{row-1}
        let mut top = if row == 0 { u32::MAX } else { inner.part(row - 1) };
        top = top.min(bound.part(row));
        if top < base {
            return;
        }
        let extra_max = ((top - base) as usize).min(rest);
        for extra in 0..=extra_max {
            cur[row] = base + extra as u32;
            go(inner, bound, row + 1, rest - extra, cur, out);
        }
    }
    go(inner, bound, 0, k, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p("4").conjugate(), Partition::column(4));
        assert_eq!(p("3,2").conjugate(), p("2,2,1"));
        for n in 0..=7 {
            for lam in partitions_of(n) {
                assert_eq!(lam.conjugate().conjugate(), lam);
            }
        }
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(p("-"), Partition::empty());
        assert_eq!(p("3,2,1").to_string(), "3,2,1");
        assert_eq!(Partition::empty().to_string(), "-");
        assert_eq!(p("2,1,0,0"), p("2,1"));
        assert!("1,2".parse::<Partition>().is_err());
        assert!("".parse::<Partition>().is_err());
        assert!("a".parse::<Partition>().is_err());
    }

    #[test]
    fn sym_group_dims() {
        assert_eq!(p("5").sym_group_dim(), BigUint::from(1u32));
        assert_eq!(Partition::column(5).sym_group_dim(), BigUint::from(1u32));
        assert_eq!(p("2,1").sym_group_dim(), BigUint::from(2u32));
        assert_eq!(p("3,2").sym_group_dim(), BigUint::from(5u32));
        assert_eq!(Partition::empty().sym_group_dim(), BigUint::from(1u32));
    }

    #[test]
    fn sum_of_squared_dims_is_factorial() {
        let mut fact = BigUint::one();
        for n in 0..=8usize {
            if n > 0 {
                fact *= n;
            }
            let total: BigUint = partitions_of(n).iter().map(|l| l.sym_group_dim().pow(2)).sum();
            assert_eq!(total, fact, "n = {n}");
        }
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=8).map(|n| partitions_of(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
    }

    #[test]
    fn subpartition_enumeration() {
        let outer = p("3,1");
        let subs = all_subpartitions(&outer);
        // ∅, 1, 2, 11, 3, 21, 31
        assert_eq!(subs.len(), 7);
        assert!(subs.iter().all(|s| s.is_contained_in(&outer)));
        assert_eq!(subpartitions(&p("2,2"), 2), vec![p("2"), p("1,1")]);
    }

    #[test]
    fn horizontal_strip_pieri() {
        let strips = horizontal_strips(&p("1"), 1, &p("9,9,9"));
        assert_eq!(strips.len(), 2);
        let strips = horizontal_strips(&p("2,1"), 2, &p("9,9,9,9"));
        // (4,1), (3,2), (3,1,1), (2,2,1)
        assert_eq!(strips.len(), 4);
    }
}
