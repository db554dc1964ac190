//! Laurent polynomials in two alphabets `x_1..x_m` and `y_1..y_n`.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{parse_coeff, Scalar};

/// Exponents `(e_1..e_m | f_1..f_n)`.
pub type Monomial = (Vec<i64>, Vec<i64>);

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "PolyRepr", into = "PolyRepr", bound = "C: Scalar")]
pub struct SuperPoly<C> {
    m: usize,
    n: usize,
    terms: BTreeMap<Monomial, C>,
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    x: Vec<i64>,
    y: Vec<i64>,
    c: String,
}

#[derive(Serialize, Deserialize)]
struct PolyRepr {
    m: usize,
    n: usize,
    terms: Vec<TermRepr>,
}

impl<C: Scalar> TryFrom<PolyRepr> for SuperPoly<C> {
    type Error = Error;

    fn try_from(r: PolyRepr) -> Result<Self> {
        let mut p = SuperPoly::zero(r.m, r.n);
        for t in r.terms {
            if t.x.len() != r.m || t.y.len() != r.n {
                return Err(Error::ShapeMismatch { m: r.m, n: r.n, found_m: t.x.len(), found_n: t.y.len() });
            }
            let c = parse_coeff(&t.c).ok_or_else(|| Error::Parse(format!("bad coefficient {:?}", t.c)))?;
            p.add_term((t.x, t.y), c);
        }
        Ok(p)
    }
}

impl<C: Scalar> From<SuperPoly<C>> for PolyRepr {
    fn from(p: SuperPoly<C>) -> Self {
        PolyRepr {
            m: p.m,
            n: p.n,
            terms: p.terms.into_iter().map(|((x, y), c)| TermRepr { x, y, c: c.to_string() }).collect(),
        }
    }
}

impl<C: Scalar> SuperPoly<C> {
    pub fn zero(m: usize, n: usize) -> Self {
        SuperPoly { m, n, terms: BTreeMap::new() }
    }

    pub fn constant(m: usize, n: usize, c: C) -> Self {
        let mut p = Self::zero(m, n);
        p.add_term((vec![0; m], vec![0; n]), c);
        p
    }

    pub fn one(m: usize, n: usize) -> Self {
        Self::constant(m, n, C::one())
    }

    pub fn monomial(x: Vec<i64>, y: Vec<i64>, c: C) -> Self {
        let mut p = Self::zero(x.len(), y.len());
        p.add_term((x, y), c);
        p
    }

    /// `x_i`, 1-based.
    pub fn x(m: usize, n: usize, i: usize) -> Self {
        let mut e = vec![0; m];
        e[i - 1] = 1;
        Self::monomial(e, vec![0; n], C::one())
    }

    /// `y_j`, 1-based.
    pub fn y(m: usize, n: usize, j: usize) -> Self {
        let mut f = vec![0; n];
        f[j - 1] = 1;
        Self::monomial(vec![0; m], f, C::one())
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
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

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    pub fn coeff(&self, x: &[i64], y: &[i64]) -> C {
        self.terms.get(&(x.to_vec(), y.to_vec())).cloned().unwrap_or_else(C::zero)
    }

    pub fn add_term(&mut self, mono: Monomial, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
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

    fn check_shape(&self, other: &Self) -> Result<()> {
        if self.m != other.m || self.n != other.n {
            return Err(Error::ShapeMismatch { m: self.m, n: self.n, found_m: other.m, found_n: other.n });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-C::one()))
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::zero(self.m, self.n);
        for (k, x) in &self.terms {
            out.add_term(k.clone(), x.clone() * c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        let mut out = Self::zero(self.m, self.n);
        for ((x1, y1), c1) in &self.terms {
            for ((x2, y2), c2) in &other.terms {
                let x = x1.iter().zip(x2).map(|(a, b)| a + b).collect();
                let y = y1.iter().zip(y2).map(|(a, b)| a + b).collect();
                out.add_term((x, y), c1.clone() * c2.clone());
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one(self.m, self.n);
        for _ in 0..k {
            out = out.mul(self).expect("same shape");
        }
        out
    }

    /// Rename variables: `x_i ↦ x_{sx[i]}`, `y_j ↦ y_{sy[j]}` (0-based).
    pub fn permute_vars(&self, sx: &[usize], sy: &[usize]) -> Self {
        let mut out = Self::zero(self.m, self.n);
        for ((x, y), c) in &self.terms {
            let mut nx = vec![0; self.m];
            let mut ny = vec![0; self.n];
            for (i, &e) in x.iter().enumerate() {
                nx[sx[i]] = e;
            }
            for (j, &f) in y.iter().enumerate() {
                ny[sy[j]] = f;
            }
            out.add_term((nx, ny), c.clone());
        }
        out
    }

    /// Symmetric in the `x`'s and, separately, in the `y`'s: every adjacent
    /// transposition maps each term to a term with the same coefficient.
    pub fn is_doubly_symmetric(&self) -> bool {
        let mut key: Monomial = (Vec::with_capacity(self.m), Vec::with_capacity(self.n));
        for ((x, y), c) in &self.terms {
            for i in 0..self.m.saturating_sub(1) {
                if x[i] == x[i + 1] {
                    continue;
                }
                key.0.clone_from(x);
                key.0.swap(i, i + 1);
                key.1.clone_from(y);
                if self.terms.get(&key) != Some(c) {
                    return false;
                }
            }
            for j in 0..self.n.saturating_sub(1) {
                if y[j] == y[j + 1] {
                    continue;
                }
                key.0.clone_from(x);
                key.1.clone_from(y);
                key.1.swap(j, j + 1);
                if self.terms.get(&key) != Some(c) {
                    return false;
                }
            }
        }
        true
    }

    /// Substitute `x_i = y_j = t` (0-based) and group by the power of `t`.
    pub fn substitute_pair(&self, i: usize, j: usize) -> BTreeMap<i64, SuperPoly<C>> {
        let mut out: BTreeMap<i64, SuperPoly<C>> = BTreeMap::new();
        for ((x, y), c) in &self.terms {
            let t = x[i] + y[j];
            let mut rx = x.clone();
            let mut ry = y.clone();
            rx.remove(i);
            ry.remove(j);
            out.entry(t)
                .or_insert_with(|| SuperPoly::zero(self.m - 1, self.n - 1))
                .add_term((rx, ry), c.clone());
        }
        out.retain(|_, p| !p.is_zero());
        out
    }

    /// Multiply by `(x_1..x_m)^k`, the shift used to clear Laurent
    /// denominators.
    pub fn shift_x(&self, k: i64) -> Self {
        let mut out = Self::zero(self.m, self.n);
        for ((x, y), c) in &self.terms {
            out.add_term((x.iter().map(|e| e + k).collect(), y.clone()), c.clone());
        }
        out
    }

    pub fn map_coeffs<D: Scalar>(&self, f: impl Fn(&C) -> D) -> SuperPoly<D> {
        let mut out = SuperPoly::zero(self.m, self.n);
        for (k, c) in &self.terms {
            out.add_term(k.clone(), f(c));
        }
        out
    }
}

fn write_var(f: &mut fmt::Formatter<'_>, name: char, idx: usize, e: i64) -> fmt::Result {
    match e {
        0 => Ok(()),
        1 => write!(f, "{name}{idx}"),
        _ => write!(f, "{name}{idx}^{e}"),
    }
}

impl<C: Scalar> fmt::Display for SuperPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, ((x, y), c)) in self.terms.iter().enumerate() {
            let constant = x.iter().chain(y).all(|&e| e == 0);
            let s = c.to_string();
            let (neg, mag) = match s.strip_prefix('-') {
                Some(r) => (true, r.to_string()),
                None => (false, s),
            };
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if constant || mag != "1" {
                write!(f, "{mag}")?;
                if !constant {
                    write!(f, "*")?;
                }
            }
            let mut first = true;
            for (i, &e) in x.iter().enumerate() {
                if e != 0 {
                    if !first {
                        write!(f, "*")?;
                    }
                    write_var(f, 'x', i + 1, e)?;
                    first = false;
                }
            }
            for (j, &e) in y.iter().enumerate() {
                if e != 0 {
                    if !first {
                        write!(f, "*")?;
                    }
                    write_var(f, 'y', j + 1, e)?;
                    first = false;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type P = SuperPoly<BigInt>;

    fn int(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn ring_operations() {
        let x = P::x(1, 1, 1);
        let y = P::y(1, 1, 1);
        let d = x.sub(&y).unwrap();
        let sq = d.mul(&d).unwrap();
        assert_eq!(sq.coeff(&[2], &[0]), int(1));
        assert_eq!(sq.coeff(&[1], &[1]), int(-2));
        assert_eq!(sq, d.pow(2));
        assert!(d.sub(&d).unwrap().is_zero());
        assert!(x.add(&P::x(2, 1, 1)).is_err());
    }

    #[test]
    fn symmetry_and_substitution() {
        let p = P::x(2, 1, 1).add(&P::x(2, 1, 2)).unwrap().sub(&P::y(2, 1, 1)).unwrap();
        assert!(p.is_doubly_symmetric());
        assert!(!P::x(2, 1, 1).is_doubly_symmetric());
        let sub = p.substitute_pair(1, 0);
        assert_eq!(sub.len(), 1);
        assert_eq!(sub[&0], P::x(1, 0, 1));
    }

    #[test]
    fn json_round_trip() {
        let p = P::x(2, 1, 1).sub(&P::y(2, 1, 1).scale(&int(3))).unwrap().shift_x(-1);
        let s = serde_json::to_string(&p).unwrap();
        assert!(s.starts_with(r#"{"m":2,"n":1,"terms":[{"#));
        let back: P = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
        let bad = r#"{"m":2,"n":1,"terms":[{"x":[1],"y":[0],"c":"1"}]}"#;
        assert!(serde_json::from_str::<P>(bad).is_err());
    }

    #[test]
    fn display() {
        let p = P::one(1, 1).sub(&P::monomial(vec![-1], vec![1], int(1))).unwrap();
        assert_eq!(p.to_string(), "-x1^-1*y1 + 1");
        assert_eq!(P::zero(1, 1).to_string(), "0");
    }
}
