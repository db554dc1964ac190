//! Littlewood–Richardson coefficients.
//!
//! [`lr_coeff`] expands `s_ν` by the Jacobi–Trudi determinant into products
//! of complete homogeneous functions and multiplies them into `s_μ` with the
//! Pieri rule, discarding every diagram that escapes `λ`. The tableau count in
//! [`lr_coeff_oracle`] shares no code with it.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Mutex, OnceLock};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::partition::{horizontal_strips, subpartitions, Partition};

type LrKey = (Partition, Partition, Partition);

fn cache() -> &'static Mutex<HashMap<LrKey, BigUint>> {
    static CACHE: OnceLock<Mutex<HashMap<LrKey, BigUint>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// `N^λ_{μ,ν}`: the multiplicity of `S_λ` in `S_μ ⊗ S_ν`.
pub fn lr_coeff(lambda: &Partition, mu: &Partition, nu: &Partition) -> BigUint {
    if lambda.size() != mu.size() + nu.size() || !mu.is_contained_in(lambda) || !nu.is_contained_in(lambda) {
        return BigUint::zero();
    }
    if nu.is_empty() || mu.is_empty() {
        return BigUint::one();
    }
    // symmetric in μ, ν; expand the shorter one
    let (mu, nu) = if nu.len() <= mu.len() { (mu, nu) } else { (nu, mu) };
    let key = (lambda.clone(), mu.clone(), nu.clone());
    if let Some(v) = cache().lock().unwrap().get(&key) {
        return v.clone();
    }
    let value = jacobi_trudi_pieri(lambda, mu, nu);
    cache().lock().unwrap().insert(key, value.clone());
    value
}

fn jacobi_trudi_pieri(lambda: &Partition, mu: &Partition, nu: &Partition) -> BigUint {
    let l = nu.len();
    // signed count of permutations per sorted multiset of h-degrees
    let mut terms: BTreeMap<Vec<usize>, i64> = BTreeMap::new();
    let mut perm: Vec<usize> = (0..l).collect();
    for_each_permutation(&mut perm, 0, 1, &mut |sigma, sign| {
        let mut degrees = Vec::with_capacity(l);
        for (i, &s) in sigma.iter().enumerate() {
            let d = nu.part(i) as i64 - i as i64 + s as i64;
            if d < 0 {
                return;
            }
            if d > 0 {
                degrees.push(d as usize);
            }
        }
        degrees.sort_unstable();
        *terms.entry(degrees).or_insert(0) += sign;
    });

    let mut total = BigInt::zero();
    for (degrees, sign) in terms {
        if sign == 0 {
            continue;
        }
        let mut state: BTreeMap<Partition, BigInt> = BTreeMap::new();
        state.insert(mu.clone(), BigInt::one());
        // largest strips first keeps the intermediate diagrams few
        for &d in degrees.iter().rev() {
            let mut next: BTreeMap<Partition, BigInt> = BTreeMap::new();
            for (shape, c) in &state {
                for grown in horizontal_strips(shape, d, lambda) {
                    *next.entry(grown).or_insert_with(BigInt::zero) += c;
                }
            }
            state = next;
            if state.is_empty() {
                break;
            }
        }
        if let Some(c) = state.get(lambda) {
            total += c * BigInt::from(sign);
        }
    }
    debug_assert!(!total.is_negative());
    total.to_biguint().unwrap_or_default()
}

/// Heap-free recursive permutation walk, passing the sign along.
fn for_each_permutation(perm: &mut Vec<usize>, start: usize, sign: i64, f: &mut impl FnMut(&[usize], i64)) {
    if start == perm.len() {
        f(perm, sign);
        return;
    }
    for i in start..perm.len() {
        perm.swap(start, i);
        let s = if i == start { sign } else { -sign };
        for_each_permutation(perm, start + 1, s, f);
        perm.swap(start, i);
    }
}

/// Independent count: semistandard fillings of `λ/μ` with content `ν` whose
/// reverse reading word is a lattice word.
pub fn lr_coeff_oracle(lambda: &Partition, mu: &Partition, nu: &Partition) -> BigUint {
    if lambda.size() != mu.size() + nu.size() || !mu.is_contained_in(lambda) {
        return BigUint::zero();
    }
    let cells: Vec<(usize, usize)> = (0..lambda.len())
        .flat_map(|i| (mu.part(i) as usize..lambda.part(i) as usize).map(move |j| (i, j)))
        .collect();
    let mut filling: HashMap<(usize, usize), usize> = HashMap::new();
    let mut remaining: Vec<u32> = nu.parts().to_vec();
    let mut count = 0u64;
    fill_skew(&cells, 0, mu, &mut filling, &mut remaining, &mut |filling| {
        if is_lattice_reading(lambda, mu, filling) {
            count += 1;
        }
    });
    BigUint::from(count)
}

fn fill_skew(
    cells: &[(usize, usize)],
    idx: usize,
    mu: &Partition,
    filling: &mut HashMap<(usize, usize), usize>,
    remaining: &mut Vec<u32>,
    visit: &mut impl FnMut(&HashMap<(usize, usize), usize>),
) {
    if idx == cells.len() {
        visit(filling);
        return;
    }
    let (i, j) = cells[idx];
    let left = if j > mu.part(i) as usize { filling.get(&(i, j - 1)).copied() } else { None };
    let above = if i > 0 && j >= mu.part(i - 1) as usize { filling.get(&(i - 1, j)).copied() } else { None };
    for v in 0..remaining.len() {
        if remaining[v] == 0 {
            continue;
        }
        if left.is_some_and(|l| v < l) || above.is_some_and(|a| v <= a) {
            continue;
        }
        remaining[v] -= 1;
        filling.insert((i, j), v);
        fill_skew(cells, idx + 1, mu, filling, remaining, visit);
        filling.remove(&(i, j));
        remaining[v] += 1;
    }
}

fn is_lattice_reading(lambda: &Partition, mu: &Partition, filling: &HashMap<(usize, usize), usize>) -> bool {
    let mut seen = vec![0usize; lambda.size() + 1];
    for i in 0..lambda.len() {
        for j in (mu.part(i) as usize..lambda.part(i) as usize).rev() {
            let v = filling[&(i, j)];
            seen[v] += 1;
            if v > 0 && seen[v] > seen[v - 1] {
                return false;
            }
        }
    }
    true
}

/// `N^λ_{γ_1,…,γ_r,λ'}`: the multiplicity of `S_{γ_1} ⊗ … ⊗ S_{γ_r} ⊗ S_{λ'}`
/// in the iterated expansion of `S_λ`, peeling off the `γ`'s in order.
pub fn multi_lr(lambda: &Partition, gammas: &[Partition], rest: &Partition) -> BigUint {
    let total: usize = gammas.iter().map(Partition::size).sum::<usize>() + rest.size();
    if total != lambda.size() {
        return BigUint::zero();
    }
    let mut state: BTreeMap<Partition, BigUint> = BTreeMap::new();
    state.insert(lambda.clone(), BigUint::one());
    for gamma in gammas {
        let mut next: BTreeMap<Partition, BigUint> = BTreeMap::new();
        for (kappa, c) in &state {
            if kappa.size() < gamma.size() {
                continue;
            }
            for inner in subpartitions(kappa, kappa.size() - gamma.size()) {
                let n = lr_coeff(kappa, gamma, &inner);
                if !n.is_zero() {
                    *next.entry(inner).or_insert_with(BigUint::zero) += c * n;
                }
            }
        }
        state = next;
    }
    state.remove(rest).unwrap_or_default()
}

/// Convenience for tests and reports.
pub fn to_u64(n: &BigUint) -> u64 {
    n.to_u64().expect("coefficient exceeds u64")
}
