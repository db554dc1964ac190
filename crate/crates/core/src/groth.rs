//! Grothendieck-group vectors in the Verma basis `m_λ` and the Kac basis
//! `k_λ`, with the Chevalley operators `e_i`, `f_i` of `sl(∞)`.
//!
//! Verma vectors live in `V^{⊗m} ⊗ V_*^{⊗n}`: a label `(a | b)` is the pure
//! tensor `v_{a_1}⊗…⊗v_{a_m}⊗v*_{b_1}⊗…⊗v*_{b_n}`. Kac vectors live in
//! `Λ^m V ⊗ Λ^n V_*` and are stored under dominant labels only.
//!
//! On `V`: `e_i v_{i+1} = v_i`, `f_i v_i = v_{i+1}`. On `V_*` the pairing
//! `⟨v_i, v*_j⟩ = δ_ij` forces `e_i v*_i = -v*_{i+1}` and
//! `f_i v*_{i+1} = -v*_i`. Every `i ∈ ℤ` is allowed; no truncation.

use std::collections::{btree_map::Entry, BTreeMap, BTreeSet};
use std::fmt;


use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::weight::{BarLabel, PermPair};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BasisKind {
    Verma,
    Kac,
}

impl BasisKind {
    pub fn name(self) -> &'static str {
        match self {
            BasisKind::Verma => "verma",
            BasisKind::Kac => "kac",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "verma" => Ok(BasisKind::Verma),
            "kac" => Ok(BasisKind::Kac),
            other => Err(Error::Parse(format!("unknown basis {other:?}"))),
        }
    }
}

/// Which Chevalley generator to apply.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Chevalley {
    E,
    F,
}

/// A finitely supported linear combination of basis labels.
#[derive(Debug, Clone, PartialEq)]
pub struct GrothVec<C> {
    m: usize,
    n: usize,
    kind: BasisKind,
    terms: BTreeMap<BarLabel, C>,
}

impl<C: Scalar> GrothVec<C> {
    pub fn zero(m: usize, n: usize, kind: BasisKind) -> Self {
        GrothVec { m, n, kind, terms: BTreeMap::new() }
    }

    /// `m_ℓ` for a label of any shape.
    pub fn verma(label: BarLabel) -> Self {
        let mut v = Self::zero(label.m(), label.n(), BasisKind::Verma);
        v.terms.insert(label, C::one());
        v
    }

    /// `k_ℓ` for a dominant label.
    pub fn kac(label: BarLabel) -> Result<Self> {
        if !label.is_dominant() {
            return Err(Error::NonDominant(label.to_string()));
        }
        let mut v = Self::zero(label.m(), label.n(), BasisKind::Kac);
        v.terms.insert(label, C::one());
        Ok(v)
    }

    /// The wedge `v_{a_1}∧…∧v_{a_m} ⊗ v*_{b_1}∧…∧v*_{b_n}` of an arbitrary
    /// label, rewritten in the dominant basis.
    pub fn wedge(label: &BarLabel) -> Self {
        let mut v = Self::zero(label.m(), label.n(), BasisKind::Kac);
        v.add_wedge(label, C::one());
        v
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> BasisKind {
        self.kind
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, label: &BarLabel) -> C {
        self.terms.get(label).cloned().unwrap_or_else(C::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BarLabel, &C)> {
        self.terms.iter()
    }

    /// Build from explicit terms, checking shapes and (for Kac) dominance.
    pub fn from_terms(
        m: usize,
        n: usize,
        kind: BasisKind,
        terms: impl IntoIterator<Item = (BarLabel, C)>,
    ) -> Result<Self> {
        let mut v = Self::zero(m, n, kind);
        for (label, c) in terms {
            v.check_shape(&label)?;
            if kind == BasisKind::Kac && !label.is_dominant() {
                return Err(Error::NonDominant(label.to_string()));
            }
            v.add_term(label, c);
        }
        Ok(v)
    }

    fn check_shape(&self, label: &BarLabel) -> Result<()> {
        if label.m() != self.m || label.n() != self.n {
            return Err(Error::ShapeMismatch { m: self.m, n: self.n, found_m: label.m(), found_n: label.n() });
        }
        Ok(())
    }

    /// Add `c · label`, keeping no zero coefficients.
    pub fn add_term(&mut self, label: BarLabel, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(label) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    fn add_wedge(&mut self, label: &BarLabel, c: C) {
        if let Some((canon, sign)) = label.wedge_canonical() {
            let c = if sign < 0 { -c } else { c };
            self.add_term(canon, c);
        }
    }

    fn same_space(&self, other: &Self) -> Result<()> {
        if self.kind != other.kind {
            return Err(Error::BasisMismatch { expected: self.kind.name(), found: other.kind.name() });
        }
        if self.m != other.m || self.n != other.n {
            return Err(Error::ShapeMismatch { m: self.m, n: self.n, found_m: other.m, found_n: other.n });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_space(other)?;
        let mut out = self.clone();
        for (l, c) in &other.terms {
            out.add_term(l.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-C::one()))
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::zero(self.m, self.n, self.kind);
        for (l, x) in &self.terms {
            out.add_term(l.clone(), x.clone() * c.clone());
        }
        out
    }

    pub(crate) fn require(&self, kind: BasisKind) -> Result<()> {
        if self.kind != kind {
            return Err(Error::BasisMismatch { expected: kind.name(), found: self.kind.name() });
        }
        Ok(())
    }

    fn apply_generator(&self, gen: Chevalley, i: i64) -> Self {
        // (from, to) on V, and (from, to) with sign -1 on V_*
        let (va, vb) = match gen {
            Chevalley::E => ((i + 1, i), (i, i + 1)),
            Chevalley::F => ((i, i + 1), (i + 1, i)),
        };
        let mut out = Self::zero(self.m, self.n, self.kind);
        for (label, c) in &self.terms {
            for pos in 0..label.a.len() {
                if label.a[pos] == va.0 {
                    let mut l = label.clone();
                    l.a[pos] = va.1;
                    out.push_image(l, c.clone());
                }
            }
            for pos in 0..label.b.len() {
                if label.b[pos] == vb.0 {
                    let mut l = label.clone();
                    l.b[pos] = vb.1;
                    out.push_image(l, -c.clone());
                }
            }
        }
        out
    }

    fn push_image(&mut self, label: BarLabel, c: C) {
        match self.kind {
            BasisKind::Verma => self.add_term(label, c),
            BasisKind::Kac => self.add_wedge(&label, c),
        }
    }

    pub fn apply_e(&self, i: i64) -> Self {
        self.apply_generator(Chevalley::E, i)
    }

    pub fn apply_f(&self, i: i64) -> Self {
        self.apply_generator(Chevalley::F, i)
    }

    pub fn apply(&self, gen: Chevalley, i: i64) -> Self {
        self.apply_generator(gen, i)
    }

    /// `h_i = [e_i, f_i]` acting diagonally.
    pub fn apply_h(&self, i: i64) -> Self {
        let mut out = Self::zero(self.m, self.n, self.kind);
        for (l, c) in &self.terms {
            out.add_term(l.clone(), c.clone() * C::from_int(l.weight_h(i)));
        }
        out
    }

    /// Place permutation of tensor factors. Verma basis only.
    pub fn sym_act(&self, s: &PermPair) -> Result<Self> {
        self.require(BasisKind::Verma)?;
        if s.even.len() != self.m || s.odd.len() != self.n {
            return Err(Error::ShapeMismatch { m: self.m, n: self.n, found_m: s.even.len(), found_n: s.odd.len() });
        }
        let mut out = Self::zero(self.m, self.n, BasisKind::Verma);
        for (l, c) in &self.terms {
            out.add_term(s.apply(l), c.clone());
        }
        Ok(out)
    }

    /// Antisymmetrization `Λ^m V ⊗ Λ^n V_* ↪ V^{⊗m} ⊗ V_*^{⊗n}`:
    /// `k_ℓ ↦ Σ_s sgn(s) m_{s·ℓ}`.
    pub fn iota_kac(&self) -> Result<Self> {
        self.require(BasisKind::Kac)?;
        let group = PermPair::all(self.m, self.n);
        let mut out = Self::zero(self.m, self.n, BasisKind::Verma);
        for (l, c) in &self.terms {
            if !l.is_dominant() {
                return Err(Error::NonDominant(l.to_string()));
            }
            for s in &group {
                let c = if s.sign() < 0 { -c.clone() } else { c.clone() };
                out.add_term(s.apply(l), c);
            }
        }
        Ok(out)
    }

    /// Contraction `Φ_ij` pairing the `i`-th factor of `V` with the `j`-th
    /// factor of `V_*` (both 1-based). Verma basis only.
    pub fn contraction(&self, i: usize, j: usize) -> Result<Self> {
        self.require(BasisKind::Verma)?;
        if i == 0 || i > self.m {
            return Err(Error::IndexOutOfRange { index: i, bound: self.m });
        }
        if j == 0 || j > self.n {
            return Err(Error::IndexOutOfRange { index: j, bound: self.n });
        }
        let mut out = Self::zero(self.m - 1, self.n - 1, BasisKind::Verma);
        for (l, c) in &self.terms {
            if let Some(r) = contract_label(l, i - 1, j - 1) {
                out.add_term(r, c.clone());
            }
        }
        Ok(out)
    }

    /// `{i : e_i v ≠ 0 or f_i v ≠ 0}`.
    pub fn annihilator_support(&self) -> BTreeSet<i64> {
        let mut candidates = BTreeSet::new();
        for l in self.terms.keys() {
            for &x in l.a.iter().chain(&l.b) {
                candidates.insert(x);
                candidates.insert(x - 1);
            }
        }
        candidates
            .into_iter()
            .filter(|&i| !self.apply_e(i).is_zero() || !self.apply_f(i).is_zero())
            .collect()
    }

    /// Convert coefficients into another scalar type.
    pub fn map_coeffs<D: Scalar>(&self, f: impl Fn(&C) -> D) -> GrothVec<D> {
        let mut out = GrothVec::zero(self.m, self.n, self.kind);
        for (l, c) in &self.terms {
            out.add_term(l.clone(), f(c));
        }
        out
    }
}

/// Contract positions `i` of `a` and `j` of `b` (0-based); `None` when the
/// pairing vanishes.
pub(crate) fn contract_label(l: &BarLabel, i: usize, j: usize) -> Option<BarLabel> {
    if l.a[i] != l.b[j] {
        return None;
    }
    let mut a = l.a.clone();
    let mut b = l.b.clone();
    a.remove(i);
    b.remove(j);
    Some(BarLabel { a, b })
}

/// [`GrothVec::annihilator_support`] of a single basis label.
pub fn annihilator_support<C: Scalar>(kind: BasisKind, label: &BarLabel) -> Result<BTreeSet<i64>> {
    let v: GrothVec<C> = match kind {
        BasisKind::Verma => GrothVec::verma(label.clone()),
        BasisKind::Kac => GrothVec::kac(label.clone())?,
    };
    Ok(v.annihilator_support())
}

impl<C: Scalar> fmt::Display for GrothVec<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let sym = match self.kind {
            BasisKind::Verma => "m",
            BasisKind::Kac => "k",
        };
        let mut first = true;
        for (l, c) in &self.terms {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            if c.is_one() {
                write!(f, "{sym}{l}")?;
            } else {
                write!(f, "({c}){sym}{l}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weight::{Perm, Weight};
    use num_bigint::BigInt;
    use num_rational::BigRational;

    type V = GrothVec<BigRational>;

    fn lab(a: &[i64], b: &[i64]) -> BarLabel {
        BarLabel::new(a.to_vec(), b.to_vec())
    }

    fn q(v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }

    #[test]
    fn e_on_rank_one_tensor() {
        let v = V::verma("3|-2".parse::<Weight>().unwrap().bar());
        let got = v.apply_e(2);
        let mut want = V::verma("2|-2".parse::<Weight>().unwrap().bar());
        want.add_term("3|-3".parse::<Weight>().unwrap().bar(), q(-1));
        assert_eq!(got, want);
    }

    #[test]
    fn e_kills_far_labels() {
        let v = V::verma(lab(&[5, 1], &[0]));
        assert!(v.apply_e(7).is_zero());
        assert!(v.apply_f(-4).is_zero());
    }

    #[test]
    fn f_on_wedge() {
        let v = V::kac(lab(&[3, 2], &[])).unwrap();
        assert_eq!(v.apply_f(3), V::kac(lab(&[4, 2], &[])).unwrap());
        // 2 -> 3 collides with the existing 3
        assert!(v.apply_f(2).is_zero());
    }

    #[test]
    fn wedge_sign() {
        let v = V::wedge(&lab(&[2, 4], &[]));
        assert_eq!(v.coeff(&lab(&[4, 2], &[])), q(-1));
        assert!(V::wedge(&lab(&[1, 1], &[])).is_zero());
    }

    #[test]
    fn kac_requires_dominant() {
        assert!(V::kac(lab(&[2, 4], &[])).is_err());
        assert!(V::from_terms(2, 0, BasisKind::Kac, [(lab(&[1, 1], &[]), q(1))]).is_err());
    }

    #[test]
    fn basis_mismatch_errors() {
        let v = V::verma(lab(&[1], &[1]));
        let k = V::kac(lab(&[1], &[1])).unwrap();
        assert!(v.add(&k).is_err());
        assert!(v.iota_kac().is_err());
        assert!(k.sym_act(&PermPair::identity(1, 1)).is_err());
        assert!(k.contraction(1, 1).is_err());
    }

    #[test]
    fn iota_examples() {
        let k = V::kac(lab(&[7], &[3])).unwrap();
        assert_eq!(k.iota_kac().unwrap(), V::verma(lab(&[7], &[3])));
        let k = V::kac(lab(&[4, 3], &[])).unwrap();
        let mut want = V::verma(lab(&[4, 3], &[]));
        want.add_term(lab(&[3, 4], &[]), q(-1));
        assert_eq!(k.iota_kac().unwrap(), want);
    }

    #[test]
    fn contraction_examples() {
        let v = V::verma(lab(&[3], &[3]));
        assert_eq!(v.contraction(1, 1).unwrap(), V::verma(lab(&[], &[])));
        assert!(V::verma(lab(&[3], &[2])).contraction(1, 1).unwrap().is_zero());
        assert!(v.contraction(2, 1).is_err());
        assert!(v.contraction(1, 0).is_err());
        let v = V::verma(lab(&[1, 4], &[4, 9]));
        assert_eq!(v.contraction(2, 1).unwrap(), V::verma(lab(&[1], &[9])));
    }

    #[test]
    fn sym_act_swaps() {
        let s = PermPair::new(Perm::transposition(2, 0, 1), Perm::identity(1));
        let v = V::verma(lab(&[5, 3], &[2]));
        assert_eq!(v.sym_act(&s).unwrap(), V::verma(lab(&[3, 5], &[2])));
        assert_eq!(v.sym_act(&PermPair::identity(2, 1)).unwrap(), v);
    }

    #[test]
    fn annihilator_support_examples() {
        let s = annihilator_support::<BigRational>(BasisKind::Verma, &lab(&[3], &[2])).unwrap();
        assert_eq!(s.into_iter().collect::<Vec<_>>(), vec![1, 2, 3]);
        let s = annihilator_support::<BigRational>(BasisKind::Verma, &lab(&[], &[])).unwrap();
        assert!(s.is_empty());
    }

    #[test]
    fn h_matches_commutator_on_basis() {
        let v = V::verma(lab(&[2, 3], &[3]));
        for i in -1..5 {
            let lhs = v.apply_f(i).apply_e(i).sub(&v.apply_e(i).apply_f(i)).unwrap();
            assert_eq!(lhs, v.apply_h(i), "i = {i}");
        }
    }
}
