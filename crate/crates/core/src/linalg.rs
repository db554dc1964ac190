//! Sparse reduced row echelon form over an exact field.

use std::collections::BTreeMap;

use crate::scalar::Field;

pub type SparseVec<F> = BTreeMap<usize, F>;

/// A subspace held as fully reduced rows: each row has pivot entry 1 and is
/// zero in every other row's pivot column.
#[derive(Debug, Clone)]
pub struct Echelon<F> {
    rows: BTreeMap<usize, SparseVec<F>>,
}

impl<F: Field> Default for Echelon<F> {
    fn default() -> Self {
        Echelon { rows: BTreeMap::new() }
    }
}

fn axpy<F: Field>(target: &mut SparseVec<F>, factor: &F, row: &SparseVec<F>) {
    for (&c, x) in row {
        let delta = factor.clone() * x.clone();
        match target.get_mut(&c) {
            Some(v) => {
                *v = v.clone() - delta;
                if v.is_negligible() {
                    target.remove(&c);
                }
            }
            None => {
                if !delta.is_negligible() {
                    target.insert(c, -delta);
                }
            }
        }
    }
}

impl<F: Field> Echelon<F> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    pub fn rows(&self) -> impl Iterator<Item = (usize, &SparseVec<F>)> {
        self.rows.iter().map(|(&p, r)| (p, r))
    }

    /// Remainder of `v` modulo the span.
    pub fn reduce(&self, v: &SparseVec<F>) -> SparseVec<F> {
        let mut v: SparseVec<F> = v.iter().filter(|(_, x)| !x.is_negligible()).map(|(&c, x)| (c, x.clone())).collect();
        let hits: Vec<usize> = v.keys().copied().filter(|c| self.rows.contains_key(c)).collect();
        for p in hits {
            if let Some(coef) = v.get(&p).cloned() {
                axpy(&mut v, &coef, &self.rows[&p]);
            }
        }
        v
    }

    pub fn contains(&self, v: &SparseVec<F>) -> bool {
        self.reduce(v).is_empty()
    }

    /// Add `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, v: &SparseVec<F>) -> bool {
        let mut r = self.reduce(v);
        let Some((&pivot, lead)) = r.iter().next() else {
            return false;
        };
        let inv = F::one() / lead.clone();
        for x in r.values_mut() {
            *x = x.clone() * inv.clone();
        }
        r.insert(pivot, F::one());
        for row in self.rows.values_mut() {
            if let Some(coef) = row.get(&pivot).cloned() {
                axpy(row, &coef, &r);
                row.remove(&pivot);
            }
        }
        self.rows.insert(pivot, r);
        true
    }
}

/// Basis of `{x : M x = 0}` for a matrix with `cols` columns given by its
/// sparse rows.
pub fn kernel<F: Field>(cols: usize, rows: impl IntoIterator<Item = SparseVec<F>>) -> Vec<SparseVec<F>> {
    let mut ech = Echelon::new();
    for r in rows {
        ech.insert(&r);
    }
    let mut basis = Vec::new();
    for free in (0..cols).filter(|c| !ech.rows.contains_key(c)) {
        let mut v = SparseVec::new();
        v.insert(free, F::one());
        for (&p, row) in &ech.rows {
            if let Some(x) = row.get(&free) {
                v.insert(p, -x.clone());
            }
        }
        basis.push(v);
    }
    basis
}
