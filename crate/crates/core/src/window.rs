//! Exact socle computations on finite windows of `V^{⊗m} ⊗ V_*^{⊗n}`.
//!
//! The socle of the tensor module is the joint kernel of all contraction
//! maps. Restricted to labels whose entries lie in a window `[lo, hi]` this
//! is a finite linear problem. Contractions preserve the `sl(∞)`-weight, so
//! the kernel is computed one weight block at a time.

use std::collections::{BTreeMap, HashMap, HashSet};

use crate::error::{Error, Result};
use crate::groth::{contract_label, BasisKind, GrothVec};
use crate::linalg::{kernel, Echelon, SparseVec};
use crate::scalar::Field;
use crate::weight::BarLabel;

/// Environment variable capping window widths for kernel computations.
pub const MAX_WINDOW_ENV: &str = "SOCLE_LAB_MAX_WINDOW";
pub const DEFAULT_MAX_WINDOW: usize = 32;

/// The bound from [`MAX_WINDOW_ENV`], or [`DEFAULT_MAX_WINDOW`].
pub fn max_window_from_env() -> usize {
    std::env::var(MAX_WINDOW_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_MAX_WINDOW)
}

/// Closed integer interval `[lo, hi]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Window {
    pub lo: i64,
    pub hi: i64,
}

impl Window {
    pub fn new(lo: i64, hi: i64) -> Result<Self> {
        if lo > hi {
            return Err(Error::EmptyWindow { lo, hi });
        }
        Ok(Window { lo, hi })
    }

    /// `[-n, n]`
    pub fn symmetric(n: i64) -> Self {
        Window { lo: -n, hi: n }
    }

    pub fn width(&self) -> usize {
        (self.hi - self.lo + 1) as usize
    }

    fn check(&self, bound: usize) -> Result<()> {
        if self.width() > bound {
            return Err(Error::WindowTooLarge { width: self.width(), bound });
        }
        Ok(())
    }

    fn values(&self) -> impl Iterator<Item = i64> {
        self.lo..=self.hi
    }
}

/// `sl(∞)`-weight of a label: value ↦ (#a − #b), zeros dropped.
type WeightKey = Vec<(i64, i64)>;

fn weight_key(a: &[i64], b: &[i64]) -> WeightKey {
    let mut w: BTreeMap<i64, i64> = BTreeMap::new();
    for &x in a {
        *w.entry(x).or_insert(0) += 1;
    }
    for &x in b {
        *w.entry(x).or_insert(0) -= 1;
    }
    w.into_iter().filter(|&(_, c)| c != 0).collect()
}

/// Every label of shape `(m|n)` with entries drawn from `values`.
fn all_labels(m: usize, n: usize, values: &[i64]) -> Vec<BarLabel> {
    let k = m + n;
    let mut out = Vec::with_capacity(values.len().pow(k as u32));
    let mut idx = vec![0usize; k];
    if values.is_empty() && k > 0 {
        return out;
    }
    loop {
        let entries: Vec<i64> = idx.iter().map(|&i| values[i]).collect();
        out.push(BarLabel::new(entries[..m].to_vec(), entries[m..].to_vec()));
        let mut pos = k;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < values.len() {
                break;
            }
            idx[pos] = 0;
        }
    }
}

fn blocks_by_weight(labels: Vec<BarLabel>) -> BTreeMap<WeightKey, Vec<BarLabel>> {
    let mut blocks: BTreeMap<WeightKey, Vec<BarLabel>> = BTreeMap::new();
    for l in labels {
        blocks.entry(weight_key(&l.a, &l.b)).or_default().push(l);
    }
    blocks
}

/// Joint kernel of all contractions on the span of `labels` (one weight
/// block), as sparse vectors over the local column order.
fn contraction_kernel<F: Field>(labels: &[BarLabel]) -> Vec<SparseVec<F>> {
    let mut rows: HashMap<(usize, usize, BarLabel), SparseVec<F>> = HashMap::new();
    for (col, l) in labels.iter().enumerate() {
        for i in 0..l.m() {
            for j in 0..l.n() {
                if let Some(target) = contract_label(l, i, j) {
                    let row = rows.entry((i, j, target)).or_default();
                    let x = row.remove(&col).unwrap_or_else(F::zero) + F::one();
                    row.insert(col, x);
                }
            }
        }
    }
    kernel(labels.len(), rows.into_values())
}

fn to_groth<F: Field>(m: usize, n: usize, labels: &[BarLabel], v: &SparseVec<F>) -> GrothVec<F> {
    let mut g = GrothVec::zero(m, n, BasisKind::Verma);
    for (&c, x) in v {
        g.add_term(labels[c].clone(), x.clone());
    }
    g
}

/// Basis of the socle of `V^{⊗m} ⊗ V_*^{⊗n}` truncated to labels with all
/// entries in `window`.
pub fn socle_t_window<F: Field>(m: usize, n: usize, window: Window, bound: usize) -> Result<Vec<GrothVec<F>>> {
    window.check(bound)?;
    let values: Vec<i64> = window.values().collect();
    let mut basis = Vec::new();
    for labels in blocks_by_weight(all_labels(m, n, &values)).into_values() {
        for v in contraction_kernel::<F>(&labels) {
            basis.push(to_groth(m, n, &labels, &v));
        }
    }
    Ok(basis)
}

/// Dimension of the truncated socle, without materializing the basis as
/// Grothendieck vectors.
pub fn socle_t_window_dim<F: Field>(m: usize, n: usize, window: Window, bound: usize) -> Result<usize> {
    window.check(bound)?;
    let values: Vec<i64> = window.values().collect();
    Ok(blocks_by_weight(all_labels(m, n, &values))
        .into_values()
        .map(|labels| contraction_kernel::<F>(&labels).len())
        .sum())
}

/// Outcome of [`appendix_inclusion_check`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AppendixReport {
    pub holds: bool,
    /// Dimension of the span `Y` of labels with an entry below the split.
    pub y_dim: usize,
    /// Dimension of `soc ∩ Y`.
    pub socle_dim: usize,
    /// Basis vectors of `soc ∩ Y` that fall outside `𝔰·Y`.
    pub failures: usize,
}

/// Local coordinates of the `W_1`-entries of a label: `p` covariant and `q`
/// contravariant slots.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct LocalLabel {
    a: Vec<i64>,
    b: Vec<i64>,
}

/// `𝔰·(W_1^{⊗p} ⊗ W_{1*}^{⊗q})`, one weight block at a time, for
/// `𝔰 = sl(W_1)`.
struct TracelessImage<F> {
    w1: Vec<i64>,
    blocks: HashMap<(usize, usize, WeightKey), (HashMap<LocalLabel, usize>, Echelon<F>)>,
}

impl<F: Field> TracelessImage<F> {
    fn new(w1: Vec<i64>) -> Self {
        TracelessImage { w1, blocks: HashMap::new() }
    }

    /// `E_{uv}` with `u ≠ v`: `v_v ↦ v_u` on covariant slots and
    /// `v*_u ↦ -v*_v` on contravariant ones.
    fn apply_root(u: i64, v: i64, y: &LocalLabel, out: &mut Vec<(LocalLabel, F)>) {
        for pos in 0..y.a.len() {
            if y.a[pos] == v {
                let mut x = y.clone();
                x.a[pos] = u;
                out.push((x, F::one()));
            }
        }
        for pos in 0..y.b.len() {
            if y.b[pos] == u {
                let mut x = y.clone();
                x.b[pos] = v;
                out.push((x, -F::one()));
            }
        }
    }

    fn block(&mut self, p: usize, q: usize, wt: &WeightKey) -> &(HashMap<LocalLabel, usize>, Echelon<F>) {
        let key = (p, q, wt.clone());
        if !self.blocks.contains_key(&key) {
            let built = self.build(p, q, wt);
            self.blocks.insert(key.clone(), built);
        }
        &self.blocks[&key]
    }

    fn build(&self, p: usize, q: usize, wt: &WeightKey) -> (HashMap<LocalLabel, usize>, Echelon<F>) {
        let members: Vec<LocalLabel> = all_labels(p, q, &self.w1)
            .into_iter()
            .filter(|l| &weight_key(&l.a, &l.b) == wt)
            .map(|l| LocalLabel { a: l.a, b: l.b })
            .collect();
        let index: HashMap<LocalLabel, usize> = members.iter().cloned().enumerate().map(|(i, l)| (l, i)).collect();
        let mut ech = Echelon::new();
        let full = members.len();

        // Cartan part: E_cc − E_{c+1,c+1}
        for x in &members {
            for pair in self.w1.windows(2) {
                let count = |c: i64| {
                    x.a.iter().filter(|&&e| e == c).count() as i64 - x.b.iter().filter(|&&e| e == c).count() as i64
                };
                let h = count(pair[0]) - count(pair[1]);
                if h != 0 {
                    let mut v = SparseVec::new();
                    v.insert(index[x], F::from_int(h));
                    ech.insert(&v);
                }
            }
            if ech.rank() == full {
                return (index, ech);
            }
        }

        // root vectors: every preimage one slot away from a block member
        let mut seen: HashSet<(i64, i64, LocalLabel)> = HashSet::new();
        let mut images = Vec::new();
        for x in &members {
            for pos in 0..p + q {
                for &c in &self.w1 {
                    let mut y = x.clone();
                    let (u, v) = if pos < p {
                        if x.a[pos] == c {
                            continue;
                        }
                        y.a[pos] = c;
                        (x.a[pos], c)
                    } else {
                        let t = x.b[pos - p];
                        if t == c {
                            continue;
                        }
                        y.b[pos - p] = c;
                        (c, t)
                    };
                    if !seen.insert((u, v, y.clone())) {
                        continue;
                    }
                    images.clear();
                    Self::apply_root(u, v, &y, &mut images);
                    let mut vec = SparseVec::new();
                    for (lab, coef) in images.drain(..) {
                        let col = index[&lab];
                        let cur = vec.remove(&col).unwrap_or_else(F::zero) + coef;
                        if !cur.is_zero() {
                            vec.insert(col, cur);
                        }
                    }
                    ech.insert(&vec);
                    if ech.rank() == full {
                        return (index, ech);
                    }
                }
            }
        }
        (index, ech)
    }
}

/// Check `(soc T) ∩ Y ⊆ 𝔰·Y` on the window truncation, where the window is
/// split into `W_1 = [lo, q)` and `W_2 = [q, hi]`, `Y` is spanned by labels
/// with at least one entry in `W_1`, and `𝔰` is the traceless part of
/// `gl(W_1)`.
///
/// With `W_1` empty, `Y = 0` and the inclusion holds vacuously; an empty
/// `W_2` is rejected.
pub fn appendix_inclusion_check<F: Field>(
    m: usize,
    n: usize,
    window: Window,
    q: i64,
    bound: usize,
) -> Result<AppendixReport> {
    window.check(bound)?;
    if q > window.hi {
        return Err(Error::DegenerateSplit { lo: window.lo, hi: window.hi, q });
    }
    if q <= window.lo {
        return Ok(AppendixReport { holds: true, y_dim: 0, socle_dim: 0, failures: 0 });
    }
    let values: Vec<i64> = window.values().collect();
    let w1: Vec<i64> = values.iter().copied().filter(|&v| v < q).collect();
    let in_y = |l: &BarLabel| l.a.iter().chain(&l.b).any(|&v| v < q);
    let labels: Vec<BarLabel> = all_labels(m, n, &values).into_iter().filter(in_y).collect();
    let y_dim = labels.len();

    let mut image: TracelessImage<F> = TracelessImage::new(w1);
    let mut socle_dim = 0;
    let mut failures = 0;
    for block in blocks_by_weight(labels).into_values() {
        for v in contraction_kernel::<F>(&block) {
            socle_dim += 1;
            // split by which slots hold W_1 entries and what sits in the others
            let mut pieces: BTreeMap<(Vec<bool>, Vec<i64>), Vec<(LocalLabel, F)>> = BTreeMap::new();
            for (&col, x) in &v {
                let l = &block[col];
                let mask: Vec<bool> = l.a.iter().chain(&l.b).map(|&e| e < q).collect();
                let outside: Vec<i64> = l.a.iter().chain(&l.b).copied().filter(|&e| e >= q).collect();
                let local = LocalLabel {
                    a: l.a.iter().copied().filter(|&e| e < q).collect(),
                    b: l.b.iter().copied().filter(|&e| e < q).collect(),
                };
                pieces.entry((mask, outside)).or_default().push((local, x.clone()));
            }
            let mut inside = true;
            for entries in pieces.into_values() {
                let (p, qq) = (entries[0].0.a.len(), entries[0].0.b.len());
                let wt = weight_key(&entries[0].0.a, &entries[0].0.b);
                let (index, ech) = image.block(p, qq, &wt);
                let local: SparseVec<F> = entries.iter().map(|(l, x)| (index[l], x.clone())).collect();
                if !ech.contains(&local) {
                    inside = false;
                    break;
                }
            }
            if !inside {
                failures += 1;
            }
        }
    }
    Ok(AppendixReport { holds: failures == 0, y_dim, socle_dim, failures })
}
