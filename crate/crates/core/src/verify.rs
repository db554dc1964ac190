//! Randomized and exhaustive invariant suites, driven by a fixed seed so
//! that every run is reproducible.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::groth::{BasisKind, GrothVec};
use crate::linalg::{Echelon, SparseVec};
use crate::partition::{partitions_of, Partition};
use crate::superchar::{ds_eval, ds_power, is_supersymmetric, kac_supercharacter, pair_independence_check, super_schur};
use crate::superpoly::SuperPoly;
use crate::weight::{BarLabel, PermPair, Weight};
use crate::window::{appendix_inclusion_check, socle_t_window_dim, Window};
use crate::zuckerman::{gamma, group_order, wedge_projector};

pub const DEFAULT_SEED: u64 = 0x5eed_2024;

type Q = BigRational;
type P = SuperPoly<BigInt>;

fn q(v: i64) -> Q {
    Q::from_integer(BigInt::from(v))
}

/// Outcome of one suite: how many identities were checked and which failed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: &'static str,
    pub seed: Option<u64>,
    pub checks: usize,
    pub failed: usize,
    /// The first few failures, for diagnostics.
    pub examples: Vec<String>,
}

impl SuiteReport {
    fn new(name: &'static str, seed: Option<u64>) -> Self {
        SuiteReport { name, seed, checks: 0, failed: 0, examples: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.failed == 0
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failed += 1;
            if self.examples.len() < 10 {
                self.examples.push(what());
            }
        }
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {} checks, {} failed", self.name, self.checks, self.failed)?;
        if let Some(s) = self.seed {
            write!(f, " (seed {s})")?;
        }
        for e in &self.examples {
            write!(f, "\n  {e}")?;
        }
        Ok(())
    }
}

fn random_entries<R: Rng>(rng: &mut R, len: usize, lo: i64, hi: i64) -> Vec<i64> {
    (0..len).map(|_| rng.gen_range(lo..=hi)).collect()
}

fn random_coeff<R: Rng>(rng: &mut R) -> Q {
    let mut p = rng.gen_range(-5..=5);
    if p == 0 {
        p = 1;
    }
    Q::new(BigInt::from(p), BigInt::from(rng.gen_range(1..=3)))
}

/// A sparse Verma vector with up to `terms` labels, entries in `[lo, hi]`.
pub fn random_verma<R: Rng>(rng: &mut R, m: usize, n: usize, terms: usize, lo: i64, hi: i64) -> GrothVec<Q> {
    let mut v = GrothVec::zero(m, n, BasisKind::Verma);
    for _ in 0..rng.gen_range(1..=terms) {
        let l = BarLabel::new(random_entries(rng, m, lo, hi), random_entries(rng, n, lo, hi));
        v.add_term(l, random_coeff(rng));
    }
    v
}

/// A sparse Kac vector; labels are drawn with distinct entries and sorted
/// into dominant position.
pub fn random_kac<R: Rng>(rng: &mut R, m: usize, n: usize, terms: usize, lo: i64, hi: i64) -> GrothVec<Q> {
    let pool: Vec<i64> = (lo..=hi).collect();
    let mut v = GrothVec::zero(m, n, BasisKind::Kac);
    for _ in 0..rng.gen_range(1..=terms) {
        let mut a: Vec<i64> = rand::seq::index::sample(rng, pool.len(), m).iter().map(|i| pool[i]).collect();
        let mut b: Vec<i64> = rand::seq::index::sample(rng, pool.len(), n).iter().map(|i| pool[i]).collect();
        a.sort_unstable_by(|x, y| y.cmp(x));
        b.sort_unstable();
        v.add_term(BarLabel::new(a, b), random_coeff(rng));
    }
    v
}

const RELATION_RANGE: std::ops::RangeInclusive<i64> = -6..=6;

fn relation_checks(report: &mut SuiteReport, space: &str, v: &GrothVec<Q>) {
    let idx: Vec<i64> = RELATION_RANGE.collect();
    let ev: Vec<GrothVec<Q>> = idx.iter().map(|&i| v.apply_e(i)).collect();
    let fv: Vec<GrothVec<Q>> = idx.iter().map(|&i| v.apply_f(i)).collect();
    for (a, &i) in idx.iter().enumerate() {
        for (b, &j) in idx.iter().enumerate() {
            let comm = fv[b].apply_e(i).sub(&ev[a].apply_f(j)).expect("same space");
            let expect = if i == j { v.apply_h(i) } else { GrothVec::zero(v.m(), v.n(), v.kind()) };
            report.check(comm == expect, || format!("{space}: [e_{i}, f_{j}] on {v}"));
            let d = (i - j).abs();
            if d >= 2 {
                report.check(ev[b].apply_e(i) == ev[a].apply_e(j), || format!("{space}: [e_{i}, e_{j}] on {v}"));
                report.check(fv[b].apply_f(i) == fv[a].apply_f(j), || format!("{space}: [f_{i}, f_{j}] on {v}"));
            } else if d == 1 {
                // [x_i, [x_i, x_j]] = x_i x_i x_j − 2 x_i x_j x_i + x_j x_i x_i
                let serre = |xv: &[GrothVec<Q>], op: &dyn Fn(&GrothVec<Q>, i64) -> GrothVec<Q>| {
                    let t1 = op(&op(&xv[b], i), i);
                    let t2 = op(&op(&xv[a], j), i).scale(&q(2));
                    let t3 = op(&op(&xv[a], i), j);
                    t1.sub(&t2).and_then(|t| t.add(&t3)).expect("same space").is_zero()
                };
                report.check(serre(&ev, &|w, k| w.apply_e(k)), || format!("{space}: e-Serre ({i},{j}) on {v}"));
                report.check(serre(&fv, &|w, k| w.apply_f(k)), || format!("{space}: f-Serre ({i},{j}) on {v}"));
            }
        }
    }
}

/// Chevalley and Serre relations on `size` random vectors in each of
/// `T_{1|1}`, `T_{2|1}`, `T_{2|2}` (Verma) and `W_{2|2}` (Kac), for all
/// `i, j ∈ [−6, 6]`.
pub fn relations_suite(seed: u64, size: usize) -> SuiteReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = SuiteReport::new("relations", Some(seed));
    for (m, n, kind) in [(1, 1, BasisKind::Verma), (2, 1, BasisKind::Verma), (2, 2, BasisKind::Verma), (2, 2, BasisKind::Kac)]
    {
        let space = format!("{}_{{{m}|{n}}}", if kind == BasisKind::Verma { "T" } else { "W" });
        for _ in 0..size {
            let v = match kind {
                BasisKind::Verma => random_verma(&mut rng, m, n, 4, -7, 7),
                BasisKind::Kac => random_kac(&mut rng, m, n, 4, -7, 7),
            };
            relation_checks(&mut report, &space, &v);
        }
    }
    report
}

/// `γ² = m!n!γ`, `γ` commutes with `e_i, f_i`, `γ∘s = sgn(s)γ`,
/// `γ∘ι = m!n!ι`, `γ` kills singular labels, the projector is idempotent,
/// and on a window the image of `γ` is the image of `ι`. All `m, n ≤ 3`.
pub fn gamma_suite(seed: u64, size: usize) -> SuiteReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = SuiteReport::new("gamma", Some(seed));
    for m in 0..=3 {
        for n in 0..=3 {
            let order = Q::from_integer(BigInt::from(group_order(m, n)));
            for _ in 0..size {
                let v = random_verma(&mut rng, m, n, 4, -3, 3);
                let g = gamma(&v).expect("verma");
                report.check(gamma(&g).expect("verma") == g.scale(&order), || format!("γ² on {v}"));
                for i in -4..=3 {
                    report.check(gamma(&v.apply_e(i)).expect("verma") == g.apply_e(i), || format!("γ e_{i} on {v}"));
                    report.check(gamma(&v.apply_f(i)).expect("verma") == g.apply_f(i), || format!("γ f_{i} on {v}"));
                }
                let s = PermPair::random(m, n, &mut rng);
                let lhs = gamma(&v.sym_act(&s).expect("shape")).expect("verma");
                report.check(lhs == g.scale(&q(s.sign())), || format!("γ∘s on {v}"));
                let p = wedge_projector(&v).expect("verma");
                report.check(wedge_projector(&p).expect("verma") == p, || format!("projector on {v}"));

                let k = random_kac(&mut rng, m, n, 3, -3, 3);
                let i = k.iota_kac().expect("kac");
                report.check(gamma(&i).expect("verma") == i.scale(&order), || format!("γ∘ι on {k}"));

                if m >= 2 || n >= 2 {
                    let mut l = BarLabel::new(random_entries(&mut rng, m, -3, 3), random_entries(&mut rng, n, -3, 3));
                    if m >= 2 {
                        l.a[1] = l.a[0];
                    } else {
                        l.b[1] = l.b[0];
                    }
                    let zero = gamma(&GrothVec::<Q>::verma(l.clone())).expect("verma").is_zero();
                    report.check(zero, || format!("γ on singular {l}"));
                }
            }
            image_check(&mut report, m, n);
        }
    }
    report
}

/// On all labels with entries in `[−1, 1]`: `γ(m_ℓ)` is zero exactly for
/// singular `ℓ`, equals `±ι(k_dominant)` otherwise, and the images of `γ`
/// and `ι` coincide.
fn image_check(report: &mut SuiteReport, m: usize, n: usize) {
    let values = [-1i64, 0, 1];
    let mut labels = vec![BarLabel::new(Vec::new(), Vec::new())];
    for pos in 0..m + n {
        labels = labels
            .into_iter()
            .flat_map(|l| {
                values.iter().map(move |&x| {
                    let mut l = l.clone();
                    if pos < m {
                        l.a.push(x);
                    } else {
                        l.b.push(x);
                    }
                    l
                })
            })
            .collect();
    }
    let index: std::collections::HashMap<BarLabel, usize> =
        labels.iter().cloned().enumerate().map(|(i, l)| (l, i)).collect();
    let to_sparse = |v: &GrothVec<Q>| -> SparseVec<Q> { v.terms().map(|(l, c)| (index[l], c.clone())).collect() };
    let mut gamma_image = Echelon::new();
    let mut iota_image = Echelon::new();
    for l in &labels {
        let g = gamma(&GrothVec::<Q>::verma(l.clone())).expect("verma");
        match l.wedge_canonical() {
            None => report.check(g.is_zero(), || format!("γ(m_{l}) should vanish")),
            Some((dom, sign)) => {
                let i = GrothVec::<Q>::kac(dom).expect("dominant").iota_kac().expect("kac");
                report.check(g == i.scale(&q(sign)), || format!("γ(m_{l}) = ±ι"));
                iota_image.insert(&to_sparse(&i));
            }
        }
        gamma_image.insert(&to_sparse(&g));
    }
    let same = gamma_image.rank() == iota_image.rank() && iota_image.rows().all(|(_, r)| gamma_image.contains(r));
    report.check(same, || format!("image γ = image ι on ({m}|{n}) window [-1,1]"));
}

fn random_supersymmetric<R: Rng>(rng: &mut R, m: usize, n: usize) -> P {
    let mut f = P::zero(m, n);
    for _ in 0..rng.gen_range(1..=3) {
        let size = rng.gen_range(0..=3);
        let parts = partitions_of(size);
        let lam = &parts[rng.gen_range(0..parts.len())];
        let c = BigInt::from(rng.gen_range(-3..=3));
        f = f.add(&super_schur::<BigInt>(lam, m, n).scale(&c)).expect("same shape");
    }
    if rng.gen_bool(0.5) {
        let w = random_dominant(rng, m, n, -1, 1);
        f = f.add(&kac_supercharacter(&w, m, n).expect("dominant")).expect("same shape");
    }
    f
}

fn random_dominant<R: Rng>(rng: &mut R, m: usize, n: usize, lo: i64, hi: i64) -> Weight {
    let mut even = random_entries(rng, m, lo, hi);
    let mut odd = random_entries(rng, n, lo, hi);
    even.sort_unstable_by(|x, y| y.cmp(x));
    odd.sort_unstable_by(|x, y| y.cmp(x));
    Weight::new(even, odd)
}

/// Supersymmetry of super Schur functions, `ds` stability, `ds` of Kac
/// supercharacters, pair independence, the ring homomorphism property and
/// independence of the order in which pairs are substituted.
pub fn ds_suite(seed: u64, size: usize) -> SuiteReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = SuiteReport::new("ds", Some(seed));
    let small: Vec<Partition> = (0..=5).flat_map(partitions_of).collect();
    for m in 0..=3 {
        for n in 0..=3 {
            for lam in &small {
                let s: P = super_schur(lam, m, n);
                report.check(is_supersymmetric(&s), || format!("s_{lam} in ({m}|{n}) supersymmetric"));
                if m >= 1 && n >= 1 {
                    let lower: P = super_schur(lam, m - 1, n - 1);
                    report.check(ds_eval(&s).is_ok_and(|d| d == lower), || format!("ds(s_{lam}) in ({m}|{n})"));
                    if lam.size() <= 4 {
                        for i in 1..=m {
                            for j in 1..=n {
                                let ok = pair_independence_check(&s, i, j).unwrap_or(false);
                                report.check(ok, || format!("pair ({i},{j}) for s_{lam} in ({m}|{n})"));
                            }
                        }
                    }
                }
            }
        }
    }
    for _ in 0..size.max(50) {
        let (m, n) = (rng.gen_range(1..=3), rng.gen_range(1..=3));
        let w = random_dominant(&mut rng, m, n, -2, 2);
        let k: P = kac_supercharacter(&w, m, n).expect("dominant");
        report.check(ds_eval(&k).is_ok_and(|d| d.is_zero()), || format!("ds(sch K({w})) in ({m}|{n})"));
        for i in 1..=m {
            for j in 1..=n {
                let ok = pair_independence_check(&k, i, j).unwrap_or(false);
                report.check(ok, || format!("pair ({i},{j}) for sch K({w})"));
            }
        }
    }
    for _ in 0..size.max(100) {
        let (m, n) = (rng.gen_range(1..=3), rng.gen_range(1..=3));
        let f = random_supersymmetric(&mut rng, m, n);
        let g = random_supersymmetric(&mut rng, m, n);
        let (df, dg) = (ds_eval(&f).expect("supersymmetric"), ds_eval(&g).expect("supersymmetric"));
        let prod = ds_eval(&f.mul(&g).expect("shape")).expect("supersymmetric");
        report.check(prod == df.mul(&dg).expect("shape"), || format!("ds(fg) for {f} and {g}"));
        let sum = ds_eval(&f.add(&g).expect("shape")).expect("supersymmetric");
        report.check(sum == df.add(&dg).expect("shape"), || format!("ds(f+g) for {f} and {g}"));

        // substitute k pairs in a random order
        let k = rng.gen_range(1..=m.min(n));
        let mut h = f.clone();
        for _ in 0..k {
            let (i, j) = (rng.gen_range(0..h.m()), rng.gen_range(0..h.n()));
            let mut parts = h.substitute_pair(i, j);
            h = parts.remove(&0).unwrap_or_else(|| P::zero(h.m() - 1, h.n() - 1));
        }
        report.check(ds_power(&f, k).is_ok_and(|d| d == h), || format!("ds^{k} order for {f}"));
    }
    report
}

/// Contraction socles on rank-one windows, contraction equivariance, and the
/// inclusion `(soc T) ∩ Y ⊆ 𝔰Y` for all `m, n ≤ 2` on windows whose two parts
/// each have `2(m+n)` entries.
pub fn appendix_suite(seed: u64, size: usize, bound: usize) -> Result<SuiteReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = SuiteReport::new("appendix", Some(seed));
    for big_n in 0..=4i64 {
        let d = socle_t_window_dim::<Q>(1, 1, Window::symmetric(big_n), bound)?;
        let w = (2 * big_n + 1) as usize;
        report.check(d == w * w - 1, || format!("dim soc on [-{big_n},{big_n}] is {d}"));
    }
    for (m, n) in [(1, 1), (2, 1), (1, 2), (2, 2)] {
        for _ in 0..size {
            let v = random_verma(&mut rng, m, n, 4, -4, 4);
            let (i, j) = (rng.gen_range(1..=m), rng.gen_range(1..=n));
            let c = v.contraction(i, j)?;
            for k in -5..=4 {
                let ok = v.apply_e(k).contraction(i, j)? == c.apply_e(k) && v.apply_f(k).contraction(i, j)? == c.apply_f(k);
                report.check(ok, || format!("Φ_{i}{j} commutes with e_{k}, f_{k} on {v}"));
            }
        }
    }
    for m in 0..=2usize {
        for n in 0..=2usize {
            if m + n == 0 {
                continue;
            }
            let part = 2 * (m + n) as i64;
            let window = Window::new(-part, part - 1)?;
            let r = appendix_inclusion_check::<Q>(m, n, window, 0, bound)?;
            report.check(r.holds, || {
                format!("({m}|{n}) on [{}, {}] split at 0: {} of {} socle vectors outside", -part, part - 1, r.failures, r.socle_dim)
            });
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suites_pass() {
        for r in [relations_suite(1, 3), gamma_suite(2, 2)] {
            assert!(r.passed(), "{r}");
            assert!(r.checks > 0);
        }
    }

    #[test]
    fn reports_are_deterministic() {
        assert_eq!(relations_suite(9, 2), relations_suite(9, 2));
    }

    #[test]
    fn report_display() {
        let mut r = SuiteReport::new("demo", Some(3));
        r.check(true, String::new);
        r.check(false, || "boom".into());
        assert_eq!(r.to_string(), "demo: 2 checks, 1 failed (seed 3)\n  boom");
    }
}
