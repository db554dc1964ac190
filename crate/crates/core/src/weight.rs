//! Integral `gl(m|n)` weights, their ρ-shifted labels and the symmetric
//! group `S_m × S_n` acting on positions.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

fn write_list(f: &mut fmt::Formatter<'_>, xs: &[i64]) -> fmt::Result {
    for (i, x) in xs.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    Ok(())
}

fn parse_list(s: &str) -> Result<Vec<i64>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| t.trim().parse::<i64>().map_err(|_| Error::Parse(format!("bad integer {t:?}"))))
        .collect()
}

fn parse_split(s: &str) -> Result<(Vec<i64>, Vec<i64>)> {
    let (l, r) = s
        .split_once('|')
        .ok_or_else(|| Error::Parse(format!("expected \"a1,..,am|b1,..,bn\", got {s:?}")))?;
    Ok((parse_list(l)?, parse_list(r)?))
}

/// An integral weight `(λ_1..λ_m | λ_{m+1}..λ_{m+n})`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight {
    pub even: Vec<i64>,
    pub odd: Vec<i64>,
}

/// ρ-shifted coordinates of a weight: `a_i = λ̄_i` and `b_j = -λ̄_{m+j}`.
/// As a tensor label it stands for `v_{a_1}⊗…⊗v_{a_m}⊗v*_{b_1}⊗…⊗v*_{b_n}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct BarLabel {
    pub a: Vec<i64>,
    pub b: Vec<i64>,
}

impl Weight {
    pub fn new(even: Vec<i64>, odd: Vec<i64>) -> Self {
        Weight { even, odd }
    }

    pub fn m(&self) -> usize {
        self.even.len()
    }

    pub fn n(&self) -> usize {
        self.odd.len()
    }

    pub fn bar(&self) -> BarLabel {
        let r = rho(self.m(), self.n());
        let a = self.even.iter().zip(&r.even).map(|(x, s)| x + s).collect();
        let b = self.odd.iter().zip(&r.odd).map(|(x, s)| -(x + s)).collect();
        BarLabel { a, b }
    }

    pub fn supp_multiset(&self) -> BTreeMap<i64, usize> {
        self.bar().supp_multiset()
    }

    pub fn atypicality(&self) -> usize {
        self.bar().atypicality()
    }

    pub fn is_dominant(&self) -> bool {
        self.bar().is_dominant()
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, &self.even)?;
        f.write_str("|")?;
        write_list(f, &self.odd)
    }
}

impl FromStr for Weight {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (even, odd) = parse_split(s)?;
        Ok(Weight { even, odd })
    }
}

/// `ρ = (m-1,…,1,0 | 0,-1,…,1-n)`.
pub fn rho(m: usize, n: usize) -> Weight {
    Weight {
        even: (0..m).map(|i| (m - 1 - i) as i64).collect(),
        odd: (0..n).map(|j| -(j as i64)).collect(),
    }
}

impl BarLabel {
    pub fn new(a: Vec<i64>, b: Vec<i64>) -> Self {
        BarLabel { a, b }
    }

    pub fn m(&self) -> usize {
        self.a.len()
    }

    pub fn n(&self) -> usize {
        self.b.len()
    }

    pub fn unbar(&self) -> Weight {
        let r = rho(self.m(), self.n());
        let even = self.a.iter().zip(&r.even).map(|(x, s)| x - s).collect();
        let odd = self.b.iter().zip(&r.odd).map(|(x, s)| -x - s).collect();
        Weight { even, odd }
    }

    /// The multiset `{a_1..a_m, b_1..b_n}`, as value → count.
    pub fn supp_multiset(&self) -> BTreeMap<i64, usize> {
        let mut out = BTreeMap::new();
        for &x in self.a.iter().chain(&self.b) {
            *out.entry(x).or_insert(0) += 1;
        }
        out
    }

    /// Size of the multiset intersection `{a} ∩ {b}`.
    pub fn atypicality(&self) -> usize {
        let mut counts: BTreeMap<i64, usize> = BTreeMap::new();
        for &x in &self.a {
            *counts.entry(x).or_insert(0) += 1;
        }
        let mut matched = 0;
        for x in &self.b {
            if let Some(c) = counts.get_mut(x) {
                if *c > 0 {
                    *c -= 1;
                    matched += 1;
                }
            }
        }
        matched
    }

    /// `a` strictly decreasing and `b` strictly increasing.
    pub fn is_dominant(&self) -> bool {
        self.a.windows(2).all(|w| w[0] > w[1]) && self.b.windows(2).all(|w| w[0] < w[1])
    }

    /// Both blocks free of repeated entries.
    pub fn is_block_regular(&self) -> bool {
        fn distinct(xs: &[i64]) -> bool {
            let mut v = xs.to_vec();
            v.sort_unstable();
            v.windows(2).all(|w| w[0] != w[1])
        }
        distinct(&self.a) && distinct(&self.b)
    }

    /// Eigenvalue of `h_i = [e_i, f_i]`.
    pub fn weight_h(&self, i: i64) -> i64 {
        let count = |xs: &[i64], v: i64| xs.iter().filter(|&&x| x == v).count() as i64;
        count(&self.a, i) - count(&self.a, i + 1) - count(&self.b, i) + count(&self.b, i + 1)
    }

    /// Sort into dominant order, returning the sign of the sorting
    /// permutation, or `None` if a block has a repeated entry.
    pub fn wedge_canonical(&self) -> Option<(BarLabel, i64)> {
        let mut a = self.a.clone();
        let mut b = self.b.clone();
        let sa = sort_with_sign(&mut a, |x, y| y.cmp(x))?;
        let sb = sort_with_sign(&mut b, |x, y| x.cmp(y))?;
        Some((BarLabel { a, b }, sa * sb))
    }
}

impl fmt::Display for BarLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        write_list(f, &self.a)?;
        f.write_str("|")?;
        write_list(f, &self.b)?;
        f.write_str("]")
    }
}

impl FromStr for BarLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('[').trim_end_matches(']');
        let (a, b) = parse_split(s)?;
        Ok(BarLabel { a, b })
    }
}

/// Insertion sort counting transpositions; `None` on a tie.
fn sort_with_sign(v: &mut [i64], cmp: impl Fn(&i64, &i64) -> std::cmp::Ordering) -> Option<i64> {
    let mut sign = 1;
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 {
            match cmp(&v[j - 1], &v[j]) {
                std::cmp::Ordering::Greater => {
                    v.swap(j - 1, j);
                    sign = -sign;
                    j -= 1;
                }
                std::cmp::Ordering::Equal => return None,
                std::cmp::Ordering::Less => break,
            }
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some(sign)
}

/// A permutation of `0..len`, stored as its image list: position `i` moves
/// to position `images[i]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<usize>);

impl Perm {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || seen[i] {
                return Err(Error::InvalidPermutation(format!("{images:?}")));
            }
            seen[i] = true;
        }
        Ok(Perm(images))
    }

    pub fn identity(len: usize) -> Self {
        Perm((0..len).collect())
    }

    /// Transposition of positions `i` and `j`.
    pub fn transposition(len: usize, i: usize, j: usize) -> Self {
        let mut v: Vec<usize> = (0..len).collect();
        v.swap(i, j);
        Perm(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm(other.0.iter().map(|&i| self.0[i]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j] = i;
        }
        Perm(inv)
    }

    pub fn sign(&self) -> i64 {
        let mut seen = vec![false; self.0.len()];
        let mut sign = 1;
        for start in 0..self.0.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.0[i];
                len += 1;
            }
            if len % 2 == 0 {
                sign = -sign;
            }
        }
        sign
    }

    /// Place permutation: the entry at position `i` moves to `images[i]`.
    pub fn permute<T: Clone>(&self, xs: &[T]) -> Vec<T> {
        let mut out = xs.to_vec();
        for (i, x) in xs.iter().enumerate() {
            out[self.0[i]] = x.clone();
        }
        out
    }

    /// All permutations of `0..len` in lexicographic order.
    pub fn all(len: usize) -> Vec<Perm> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (0..len).collect();
        loop {
            out.push(Perm(cur.clone()));
            // next lexicographic permutation
            let Some(i) = (1..len).rev().find(|&i| cur[i - 1] < cur[i]) else {
                break;
            };
            let j = (i..len).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
            cur.swap(i - 1, j);
            cur[i..].reverse();
        }
        out
    }

    pub fn random<R: Rng + ?Sized>(len: usize, rng: &mut R) -> Perm {
        let mut v: Vec<usize> = (0..len).collect();
        v.shuffle(rng);
        Perm(v)
    }
}

/// An element of `S_m × S_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PermPair {
    pub even: Perm,
    pub odd: Perm,
}

impl PermPair {
    pub fn new(even: Perm, odd: Perm) -> Self {
        PermPair { even, odd }
    }

    pub fn identity(m: usize, n: usize) -> Self {
        PermPair { even: Perm::identity(m), odd: Perm::identity(n) }
    }

    pub fn compose(&self, other: &PermPair) -> PermPair {
        PermPair { even: self.even.compose(&other.even), odd: self.odd.compose(&other.odd) }
    }

    pub fn sign(&self) -> i64 {
        self.even.sign() * self.odd.sign()
    }

    pub fn apply(&self, label: &BarLabel) -> BarLabel {
        BarLabel { a: self.even.permute(&label.a), b: self.odd.permute(&label.b) }
    }

    /// Every element of `S_m × S_n`.
    pub fn all(m: usize, n: usize) -> Vec<PermPair> {
        let odd = Perm::all(n);
        Perm::all(m)
            .into_iter()
            .flat_map(|e| odd.iter().map(move |o| PermPair { even: e.clone(), odd: o.clone() }))
            .collect()
    }

    pub fn random<R: Rng + ?Sized>(m: usize, n: usize, rng: &mut R) -> PermPair {
        PermPair { even: Perm::random(m, rng), odd: Perm::random(n, rng) }
    }
}
