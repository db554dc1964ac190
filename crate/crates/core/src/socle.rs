//! Socle filtrations and Jordan–Hölder data of indecomposable injectives.
//!
//! `I^{λ,μ}` denotes the injective hull of the simple `V^{λ,μ}` in the
//! category of tensor-type `sl(∞)`-modules relative to a subalgebra with `r`
//! diagonal blocks. Everything here is a finite sum of products of
//! Littlewood–Richardson coefficients.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lr::{lr_coeff, multi_lr};
use crate::partition::{partitions_of, subpartitions, Partition};

/// A pair of Young diagrams labelling the simple module `V^{λ,μ}`.
pub type PartitionPair = (Partition, Partition);

/// A finite direct sum of simples `V^{λ',μ'}` with positive multiplicities.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SemisimpleDecomp {
    entries: BTreeMap<PartitionPair, BigUint>,
}

impl SemisimpleDecomp {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn singleton(lambda: Partition, mu: Partition, mult: impl Into<BigUint>) -> Self {
        let mut d = Self::new();
        d.add(lambda, mu, mult.into());
        d
    }

    pub fn add(&mut self, lambda: Partition, mu: Partition, mult: BigUint) {
        if mult.is_zero() {
            return;
        }
        *self.entries.entry((lambda, mu)).or_insert_with(BigUint::zero) += mult;
    }

    pub fn merge(&mut self, other: &SemisimpleDecomp) {
        for ((l, m), c) in &other.entries {
            self.add(l.clone(), m.clone(), c.clone());
        }
    }

    pub fn scaled(&self, factor: &BigUint) -> SemisimpleDecomp {
        let mut out = SemisimpleDecomp::new();
        for ((l, m), c) in &self.entries {
            out.add(l.clone(), m.clone(), c * factor);
        }
        out
    }

    pub fn multiplicity(&self, lambda: &Partition, mu: &Partition) -> BigUint {
        self.entries
            .get(&(lambda.clone(), mu.clone()))
            .cloned()
            .unwrap_or_default()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Number of distinct simple summands.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    /// Sum of all multiplicities.
    pub fn total(&self) -> BigUint {
        self.entries.values().sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &Partition, &BigUint)> {
        self.entries.iter().map(|((l, m), c)| (l, m, c))
    }
}

impl fmt::Display for SemisimpleDecomp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for ((l, m), c) in &self.entries {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            if c.is_one() {
                write!(f, "V[{l};{m}]")?;
            } else {
                write!(f, "{c}·V[{l};{m}]")?;
            }
        }
        Ok(())
    }
}

/// Componentwise minimum of two diagrams.
fn intersection(a: &Partition, b: &Partition) -> Partition {
    let parts = (0..a.len().min(b.len())).map(|i| a.part(i).min(b.part(i))).collect();
    Partition::new(parts).expect("min of partitions is a partition")
}

/// All `r`-tuples of diagrams inside `bound` with total size `k`.
fn gamma_tuples(bound: &Partition, r: usize, k: usize) -> Vec<Vec<Partition>> {
    fn go(bound: &Partition, r: usize, k: usize, cur: &mut Vec<Partition>, out: &mut Vec<Vec<Partition>>) {
        if cur.len() == r {
            if k == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let last = cur.len() + 1 == r;
        let sizes: Vec<usize> = if last { vec![k] } else { (0..=k).collect() };
        for s in sizes {
            for g in subpartitions(bound, s) {
                cur.push(g);
                go(bound, r, k - s, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    if k <= bound.size() * r {
        go(bound, r, k, &mut Vec::new(), &mut out);
    }
    out
}

/// Iterated skew expansion `λ ↦ Σ_{λ'} N^λ_{γ_1..γ_r,λ'} λ'`.
fn peel(lambda: &Partition, gammas: &[Partition]) -> BTreeMap<Partition, BigUint> {
    let removed: usize = gammas.iter().map(Partition::size).sum();
    let mut out = BTreeMap::new();
    if removed > lambda.size() {
        return out;
    }
    for rest in subpartitions(lambda, lambda.size() - removed) {
        let c = multi_lr(lambda, gammas, &rest);
        if !c.is_zero() {
            out.insert(rest, c);
        }
    }
    out
}

fn pair_sum_over(lambda: &Partition, mu: &Partition, tuples: &[Vec<Partition>]) -> SemisimpleDecomp {
    let mut out = SemisimpleDecomp::new();
    for gammas in tuples {
        let left = peel(lambda, gammas);
        if left.is_empty() {
            continue;
        }
        let right = peel(mu, gammas);
        for (l, cl) in &left {
            for (m, cm) in &right {
                out.add(l.clone(), m.clone(), cl * cm);
            }
        }
    }
    out
}

/// Layer `k` of the socle filtration of `I^{λ,μ}` for `r` blocks.
pub fn socle_layer_injective(lambda: &Partition, mu: &Partition, r: usize, k: usize) -> Result<SemisimpleDecomp> {
    if r == 0 {
        return Err(Error::ZeroBlocks);
    }
    if k > lambda.size().min(mu.size()) {
        return Ok(SemisimpleDecomp::new());
    }
    let tuples = gamma_tuples(&intersection(lambda, mu), r, k);
    Ok(pair_sum_over(lambda, mu, &tuples))
}

/// All socle layers of `I^{λ,μ}`, from `k = 0` to the last nonempty one.
pub fn socle_layers_injective(lambda: &Partition, mu: &Partition, r: usize) -> Result<Vec<SemisimpleDecomp>> {
    let top = lambda.size().min(mu.size());
    let mut layers = (0..=top)
        .map(|k| socle_layer_injective(lambda, mu, r, k))
        .collect::<Result<Vec<_>>>()?;
    while layers.len() > 1 && layers.last().is_some_and(SemisimpleDecomp::is_empty) {
        layers.pop();
    }
    Ok(layers)
}

/// Jordan–Hölder multiplicities of `I^{λ,μ}` for `r` blocks: every tuple
/// `γ_1..γ_r` at once, without grading by degree.
pub fn jh_injective(lambda: &Partition, mu: &Partition, r: usize) -> Result<SemisimpleDecomp> {
    if r == 0 {
        return Err(Error::ZeroBlocks);
    }
    let bound = intersection(lambda, mu);
    let tuples: Vec<Vec<Partition>> = (0..=bound.size() * r)
        .flat_map(|k| gamma_tuples(&bound, r, k))
        .collect();
    Ok(pair_sum_over(lambda, mu, &tuples))
}

/// `A^{λ,μ}_{λ',μ'} = Σ_γ N^λ_{λ',γ} N^μ_{μ',γ}`.
pub fn branching_matrix_entry(lambda: &Partition, mu: &Partition, lambda1: &Partition, mu1: &Partition) -> BigUint {
    if lambda1.size() > lambda.size() || mu1.size() > mu.size() {
        return BigUint::zero();
    }
    let k = lambda.size() - lambda1.size();
    if mu.size() - mu1.size() != k {
        return BigUint::zero();
    }
    subpartitions(&intersection(lambda, mu), k)
        .iter()
        .map(|g| lr_coeff(lambda, lambda1, g) * lr_coeff(mu, mu1, g))
        .sum()
}

/// Row `(λ,μ)` of the `r`-th power of the branching matrix, computed by
/// repeated vector–matrix products over the pairs below `(λ,μ)`.
pub fn branching_power_row(lambda: &Partition, mu: &Partition, r: usize) -> SemisimpleDecomp {
    let mut state = SemisimpleDecomp::singleton(lambda.clone(), mu.clone(), 1u32);
    for _ in 0..r {
        let mut next = SemisimpleDecomp::new();
        for (l, m, c) in state.iter() {
            let drop_max = l.size().min(m.size());
            for k in 0..=drop_max {
                for l1 in subpartitions(l, l.size() - k) {
                    for m1 in subpartitions(m, m.size() - k) {
                        let a = branching_matrix_entry(l, m, &l1, &m1);
                        if !a.is_zero() {
                            next.add(l1.clone(), m1, c * a);
                        }
                    }
                }
            }
        }
        state = next;
    }
    state
}

fn check_rank(m: usize, n: usize) -> Result<()> {
    if (m == 0 || n == 0) && !cfg!(feature = "degenerate-rank") {
        return Err(Error::DegenerateRank { m, n });
    }
    Ok(())
}

/// Socle layers of `K_{m|n}`, the complexified Grothendieck group of integral
/// category O for `gl(m|n)`.
pub fn socle_layers_k(m: usize, n: usize) -> Result<Vec<SemisimpleDecomp>> {
    check_rank(m, n)?;
    let top = m.min(n);
    let mut layers = vec![SemisimpleDecomp::new(); top + 1];
    for lambda in partitions_of(m) {
        let dl = lambda.sym_group_dim();
        for mu in partitions_of(n) {
            let factor = &dl * mu.sym_group_dim();
            for (k, layer) in layers.iter_mut().enumerate() {
                layer.merge(&socle_layer_injective(&lambda, &mu, 2, k)?.scaled(&factor));
            }
        }
    }
    while layers.len() > 1 && layers.last().is_some_and(SemisimpleDecomp::is_empty) {
        layers.pop();
    }
    Ok(layers)
}

/// Socle layers of `J_{m|n}`, the Grothendieck group of finite-dimensional
/// modules: layer `i` is `(i+1)` copies of `V^{(1^{m-i}),(1^{n-i})}`.
pub fn socle_layers_j(m: usize, n: usize) -> Result<Vec<SemisimpleDecomp>> {
    check_rank(m, n)?;
    Ok((0..=m.min(n))
        .map(|i| SemisimpleDecomp::singleton(Partition::column(m - i), Partition::column(n - i), (i + 1) as u32))
        .collect())
}
