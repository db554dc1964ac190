//! Acceptance criteria, one PASS/FAIL line each. All comparisons are exact.

use std::process::ExitCode;
use std::time::Instant;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use socle_lab::partition::partitions_of;
use socle_lab::verify::{self, random_verma, DEFAULT_SEED};
use socle_lab::window::{socle_t_window_dim, DEFAULT_MAX_WINDOW};
use socle_lab::{
    appendix_inclusion_check, branching_power_row, jh_injective, lr_coeff, lr_coeff_oracle, socle_layer_injective,
    socle_layers_injective, socle_layers_j, socle_layers_k, tensor_filtration_shadow, BarLabel, Partition, Rational,
    SemisimpleDecomp, Window,
};

type Outcome = Result<String, String>;

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

fn upto(n: usize) -> Vec<Partition> {
    (0..=n).flat_map(partitions_of).collect()
}

fn lr_oracle_equivalence() -> Outcome {
    let mut count = 0;
    for lam in upto(6) {
        for mu in upto(lam.size()) {
            for nu in upto(lam.size()) {
                let fast = lr_coeff(&lam, &mu, &nu);
                let slow = lr_coeff_oracle(&lam, &mu, &nu);
                if fast != slow {
                    return Err(format!("N^{lam}_{{{mu},{nu}}}: {fast} vs oracle {slow}"));
                }
                count += 1;
            }
        }
    }
    Ok(format!("{count} triples"))
}

fn adjoint_hull() -> Outcome {
    let one = p("1");
    for r in 1..=5u32 {
        let got = socle_layer_injective(&one, &one, r as usize, 1).map_err(|e| e.to_string())?;
        if got != SemisimpleDecomp::singleton(Partition::empty(), Partition::empty(), r) {
            return Err(format!("r={r}: {got}"));
        }
    }
    Ok("r = 1..5".into())
}

fn j_closed_form() -> Outcome {
    for m in 1..=6 {
        for n in 1..=6 {
            let j = socle_layers_j(m, n).map_err(|e| e.to_string())?;
            let general = socle_layers_injective(&Partition::column(m), &Partition::column(n), 2).map_err(|e| e.to_string())?;
            if j != general {
                return Err(format!("({m}|{n}): closed form differs from the two-block layers"));
            }
            for (i, layer) in j.iter().enumerate() {
                let expect = SemisimpleDecomp::singleton(Partition::column(m - i), Partition::column(n - i), (i + 1) as u32);
                if *layer != expect {
                    return Err(format!("({m}|{n}) layer {i}: {layer}"));
                }
            }
        }
    }
    Ok("m, n ≤ 6".into())
}

/// One-block layers straight from the oracle: Σ_{|γ|=k} N^λ_{γλ'} N^μ_{γμ'}.
fn one_block_oracle(lam: &Partition, mu: &Partition, k: usize) -> SemisimpleDecomp {
    let mut out = SemisimpleDecomp::new();
    if k > lam.size() || k > mu.size() {
        return out;
    }
    for g in partitions_of(k) {
        for l1 in partitions_of(lam.size() - k) {
            let a = lr_coeff_oracle(lam, &g, &l1);
            if a.is_zero() {
                continue;
            }
            for m1 in partitions_of(mu.size() - k) {
                let b = lr_coeff_oracle(mu, &g, &m1);
                if !b.is_zero() {
                    out.add(l1.clone(), m1, &a * b);
                }
            }
        }
    }
    out
}

fn one_block_degeneration() -> Outcome {
    let one = p("1");
    let spot = socle_layers_injective(&one, &one, 1).map_err(|e| e.to_string())?;
    let expect = vec![
        SemisimpleDecomp::singleton(one.clone(), one.clone(), 1u32),
        SemisimpleDecomp::singleton(Partition::empty(), Partition::empty(), 1u32),
    ];
    if spot != expect {
        return Err(format!("V⊗V_*: {spot:?}"));
    }
    let mut count = 0;
    for lam in upto(4) {
        for mu in upto(4) {
            for k in 0..=4 {
                let got = socle_layer_injective(&lam, &mu, 1, k).map_err(|e| e.to_string())?;
                if got != one_block_oracle(&lam, &mu, k) {
                    return Err(format!("({lam};{mu}) layer {k}: {got}"));
                }
                count += 1;
            }
        }
    }
    Ok(format!("V⊗V_* and {count} layers with |λ|,|μ| ≤ 4"))
}

fn jh_consistency() -> Outcome {
    let mut count = 0;
    for lam in upto(6) {
        for mu in upto(6 - lam.size()) {
            for r in 1..=3 {
                let mut summed = SemisimpleDecomp::new();
                for layer in socle_layers_injective(&lam, &mu, r).map_err(|e| e.to_string())? {
                    summed.merge(&layer);
                }
                let jh = jh_injective(&lam, &mu, r).map_err(|e| e.to_string())?;
                let power = branching_power_row(&lam, &mu, r);
                if summed != jh || jh != power {
                    return Err(format!("({lam};{mu}) r={r}: layers {summed}, JH {jh}, A^r {power}"));
                }
                count += 1;
            }
        }
    }
    Ok(format!("{count} cases"))
}

fn suite(r: verify::SuiteReport) -> Outcome {
    if r.passed() {
        Ok(r.to_string())
    } else {
        Err(r.to_string())
    }
}

fn contraction_socle() -> Outcome {
    for big_n in 0..=4i64 {
        let d = socle_t_window_dim::<Rational>(1, 1, Window::symmetric(big_n), DEFAULT_MAX_WINDOW).map_err(|e| e.to_string())?;
        let w = (2 * big_n + 1) as usize;
        if d != w * w - 1 {
            return Err(format!("N={big_n}: dimension {d}"));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
    let mut checks = 0;
    for (m, n) in [(1, 1), (2, 1), (1, 2), (2, 2), (3, 2)] {
        for _ in 0..50 {
            let v = random_verma(&mut rng, m, n, 4, -4, 4);
            let (i, j) = (rng.gen_range(1..=m), rng.gen_range(1..=n));
            let c = v.contraction(i, j).map_err(|e| e.to_string())?;
            for k in -5..=4 {
                let e = v.apply_e(k).contraction(i, j).map_err(|e| e.to_string())?;
                let f = v.apply_f(k).contraction(i, j).map_err(|e| e.to_string())?;
                if e != c.apply_e(k) || f != c.apply_f(k) {
                    return Err(format!("Φ_{i}{j} vs e/f_{k} on {v}"));
                }
                checks += 1;
            }
        }
    }
    Ok(format!("dims for N ≤ 4, {checks} equivariance checks (seed {DEFAULT_SEED})"))
}

fn appendix_inclusion() -> Outcome {
    let mut done = Vec::new();
    let mut bad = Vec::new();
    for m in 0..=2usize {
        for n in 0..=2usize {
            if m + n == 0 {
                continue;
            }
            let part = 2 * (m + n) as i64;
            let window = Window::new(-part, part - 1).map_err(|e| e.to_string())?;
            let r = appendix_inclusion_check::<Rational>(m, n, window, 0, DEFAULT_MAX_WINDOW).map_err(|e| e.to_string())?;
            let tag = format!("({m}|{n}) parts of {part}: socle∩Y dim {}", r.socle_dim);
            if r.holds {
                done.push(tag);
            } else {
                bad.push(format!("{tag}, {} outside 𝔰Y", r.failures));
            }
        }
    }
    if bad.is_empty() {
        Ok(done.join("; "))
    } else {
        Err(bad.join("; "))
    }
}

fn shadow() -> Outcome {
    let mut total = 0;
    for m in 1..=3 {
        for n in 1..=3 {
            for d in 0..=4 {
                let r = tensor_filtration_shadow(m, n, d).map_err(|e| e.to_string())?;
                if !r.passed() {
                    return Err(format!("({m}|{n}) d={d}:\n{r}"));
                }
                total += r.checks.len();
            }
        }
    }
    Ok(format!("{total} checks"))
}

fn atypicality_shadow() -> Outcome {
    let mut count = 0;
    for m in 1..=4 {
        for n in 1..=4 {
            let layers = socle_layers_k(m, n).map_err(|e| e.to_string())?;
            for (k, layer) in layers.iter().enumerate() {
                for (l, mu, _) in layer.iter() {
                    if m - l.size() != k || n - mu.size() != k {
                        return Err(format!("({m}|{n}) layer {k} holds V[{l};{mu}]"));
                    }
                    // a label realizing the summand: free rows of λ' and μ' plus k matched pairs
                    let mut a: Vec<i64> = (0..l.len()).flat_map(|i| vec![i as i64 + 1; l.part(i) as usize]).collect();
                    let mut b: Vec<i64> = (0..mu.len()).flat_map(|j| vec![-(j as i64) - 1; mu.part(j) as usize]).collect();
                    a.extend(std::iter::repeat(0).take(k));
                    b.extend(std::iter::repeat(0).take(k));
                    let atyp = BarLabel::new(a, b).unbar().atypicality();
                    if atyp != k {
                        return Err(format!("({m}|{n}) layer {k}: atypicality {atyp} for V[{l};{mu}]"));
                    }
                    count += 1;
                }
            }
        }
    }
    Ok(format!("{count} summands, m, n ≤ 4"))
}

fn main() -> ExitCode {
    let criteria: Vec<(&str, fn() -> Outcome)> = vec![
        ("LR oracle equivalence", lr_oracle_equivalence),
        ("adjoint hull example", adjoint_hull),
        ("J socle closed form", j_closed_form),
        ("one-block degeneration", one_block_degeneration),
        ("JH, layers and A^r agree", jh_consistency),
        ("Chevalley and Serre relations", || suite(verify::relations_suite(DEFAULT_SEED, 200))),
        ("γ suite", || suite(verify::gamma_suite(DEFAULT_SEED, 20))),
        ("contraction socle", contraction_socle),
        ("appendix inclusion", appendix_inclusion),
        ("supersymmetric suite", || suite(verify::ds_suite(DEFAULT_SEED, 100))),
        ("tensor filtration shadow", shadow),
        ("atypicality shadow", atypicality_shadow),
    ];
    let filter: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let mut failed = 0;
    for (no, (name, run)) in criteria.iter().enumerate() {
        let no = no + 1;
        if !filter.is_empty() && !filter.iter().any(|f| name.contains(f.as_str()) || *f == no.to_string()) {
            continue;
        }
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS criterion {no:>2} {name} [{secs:.1}s]: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {no:>2} {name} [{secs:.1}s]: {detail}");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
