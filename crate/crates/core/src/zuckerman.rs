//! The Zuckerman Euler map as the signed symmetrizer over `S_m × S_n`.
//!
//! In bar coordinates the dot action `s·λ = s(λ+ρ)−ρ` is plain permutation
//! of entries, so `γ(m_λ) = Σ_s sgn(s) m_{s·λ}`.

use num_bigint::BigUint;

use crate::error::Result;
use crate::groth::{BasisKind, GrothVec};
use crate::scalar::{Field, Scalar};
use crate::weight::{PermPair, Weight};

/// `s·λ = s(λ+ρ)−ρ`.
pub fn dot_action(s: &PermPair, lambda: &Weight) -> Weight {
    s.apply(&lambda.bar()).unbar()
}

/// `m! · n!`
pub fn group_order(m: usize, n: usize) -> BigUint {
    (1..=m).chain(1..=n).map(BigUint::from).product()
}

/// `γ = Σ_{s ∈ S_m×S_n} sgn(s)·s` on the Verma basis.
pub fn gamma<C: Scalar>(v: &GrothVec<C>) -> Result<GrothVec<C>> {
    v.require(BasisKind::Verma)?;
    let mut out = GrothVec::zero(v.m(), v.n(), BasisKind::Verma);
    let group = PermPair::all(v.m(), v.n());
    for (l, c) in v.terms() {
        // singular labels cancel pairwise; skip the group sum
        if !l.is_block_regular() {
            continue;
        }
        for s in &group {
            let c = if s.sign() < 0 { -c.clone() } else { c.clone() };
            out.add_term(s.apply(l), c);
        }
    }
    Ok(out)
}

/// `γ / (m!·n!)`, the idempotent onto the antisymmetric part.
pub fn wedge_projector<F: Field>(v: &GrothVec<F>) -> Result<GrothVec<F>> {
    let order = F::from_str(&group_order(v.m(), v.n()).to_string())
        .unwrap_or_else(|_| panic!("coefficient field cannot hold m!n!"));
    Ok(gamma(v)?.scale(&(F::one() / order)))
}
