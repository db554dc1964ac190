use std::fs;
use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use socle_lab::json::{decomp_json, groth_to_lines, layers_json, parse_groth_lines, socle_json};
use socle_lab::superchar::tensor_filtration_shadow;
use socle_lab::verify::{self, DEFAULT_SEED};
use socle_lab::window::{max_window_from_env, socle_t_window, Window};
use socle_lab::{
    appendix_inclusion_check, ds_power, gamma, jh_injective, kac_supercharacter, lr_coeff, multi_lr,
    socle_layers_injective, socle_layers_j, socle_layers_k, super_schur, Error, IntPoly, Partition, RatVec, Rational,
    SemisimpleDecomp, Weight,
};

#[derive(Parser)]
#[command(name = "socle-lab", version, about = "Exact socle filtrations, Grothendieck-group actions and supercharacters")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Gen {
    E,
    F,
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Relations,
    Gamma,
    Ds,
    Appendix,
    Shadow,
    All,
}

#[derive(Subcommand)]
enum Cmd {
    /// Littlewood–Richardson coefficient N^λ_{μν}
    Lr { lambda: Partition, mu: Partition, nu: Partition },
    /// Iterated coefficient N^λ_{γ1..γr,λ'}; the last partition is λ'
    MultiLr {
        lambda: Partition,
        #[arg(num_args = 1.., required = true)]
        rest: Vec<Partition>,
    },
    /// Socle layers of the injective hull of V^{λ,μ} for r blocks
    Socle {
        #[arg(long, allow_hyphen_values = true)]
        lambda: Partition,
        #[arg(long, allow_hyphen_values = true)]
        mu: Partition,
        #[arg(long)]
        blocks: usize,
        #[arg(long)]
        json: bool,
    },
    /// Jordan–Hölder multiplicities of the injective hull
    Jh {
        #[arg(long, allow_hyphen_values = true)]
        lambda: Partition,
        #[arg(long, allow_hyphen_values = true)]
        mu: Partition,
        #[arg(long)]
        blocks: usize,
        #[arg(long)]
        json: bool,
    },
    /// Socle layers of the Grothendieck group of integral category O
    SocleK {
        m: usize,
        n: usize,
        #[arg(long)]
        json: bool,
    },
    /// Socle layers of the Grothendieck group of finite-dimensional modules
    SocleJ {
        m: usize,
        n: usize,
        #[arg(long)]
        json: bool,
    },
    /// Apply e_i or f_i to a vector file
    Act {
        generator: Gen,
        #[arg(allow_negative_numbers = true)]
        i: i64,
        #[arg(long)]
        file: String,
    },
    /// Zuckerman Euler map on a Verma vector file
    Gamma {
        #[arg(long)]
        file: String,
    },
    /// Embed a Kac vector into the Verma model
    Iota {
        #[arg(long)]
        file: String,
    },
    /// Contraction pairing factor i of V with factor j of V_* (1-based)
    Contract {
        i: usize,
        j: usize,
        #[arg(long)]
        file: String,
    },
    /// Joint kernel of the contractions on a window
    SocleWindow {
        m: usize,
        n: usize,
        #[arg(allow_negative_numbers = true)]
        lo: i64,
        #[arg(allow_negative_numbers = true)]
        hi: i64,
        /// also print a basis, one vector per block of lines
        #[arg(long)]
        basis: bool,
    },
    /// Check (soc T) ∩ Y ⊆ 𝔰Y with the window split at q
    AppendixCheck {
        m: usize,
        n: usize,
        #[arg(allow_negative_numbers = true)]
        lo: i64,
        #[arg(allow_negative_numbers = true)]
        hi: i64,
        #[arg(allow_negative_numbers = true)]
        q: i64,
    },
    /// Degree of atypicality of a weight "a1,..,am|b1,..,bn"
    Atyp {
        #[arg(allow_hyphen_values = true)]
        weight: Weight,
    },
    /// Supersymmetric Schur function of λ in (m|n) variables
    Superschur {
        lambda: Partition,
        m: usize,
        n: usize,
        #[arg(long)]
        json: bool,
    },
    /// Kac supercharacter of a dominant weight
    KacSch {
        #[arg(allow_hyphen_values = true)]
        weight: Weight,
        m: usize,
        n: usize,
        #[arg(long)]
        json: bool,
    },
    /// Duflo–Serganova evaluation of a supercharacter file
    Ds {
        #[arg(long)]
        file: String,
        #[arg(long, default_value_t = 1)]
        power: usize,
    },
    /// Run invariant suites
    Verify {
        suite: Suite,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// random cases per family
        #[arg(long, default_value_t = 200)]
        size: usize,
    },
}

/// A failure with its exit status: 2 for malformed input, 1 otherwise.
struct Failure {
    code: u8,
    msg: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if matches!(e, Error::Parse(_)) { 2 } else { 1 };
        Failure { code, msg: e.to_string() }
    }
}

fn read_input(path: &str) -> Result<String, Failure> {
    let mut s = String::new();
    let res = if path == "-" {
        std::io::stdin().read_to_string(&mut s).map(|_| ())
    } else {
        fs::read_to_string(path).map(|t| s = t)
    };
    res.map_err(|e| Failure { code: 1, msg: format!("{path}: {e}") })?;
    Ok(s)
}

fn read_vec(path: &str) -> Result<RatVec, Failure> {
    Ok(parse_groth_lines(&read_input(path)?)?)
}

fn read_poly(path: &str) -> Result<IntPoly, Failure> {
    serde_json::from_str(&read_input(path)?).map_err(|e| Failure { code: 2, msg: format!("{path}: {e}") })
}

fn print_layers(layers: &[SemisimpleDecomp]) {
    for (k, d) in layers.iter().enumerate() {
        println!("layer {k}: {d}");
    }
}

fn print_vec(v: &RatVec) {
    print!("{}", groth_to_lines(v));
}

fn pretty(v: &serde_json::Value) -> String {
    serde_json::to_string(v).expect("json values serialize")
}

fn run(cli: Cli) -> Result<bool, Failure> {
    match cli.cmd {
        Cmd::Lr { lambda, mu, nu } => println!("{}", lr_coeff(&lambda, &mu, &nu)),
        Cmd::MultiLr { lambda, mut rest } => {
            let last = rest.pop().expect("at least one partition");
            println!("{}", multi_lr(&lambda, &rest, &last));
        }
        Cmd::Socle { lambda, mu, blocks, json } => {
            let layers = socle_layers_injective(&lambda, &mu, blocks)?;
            if json {
                println!("{}", pretty(&socle_json(&lambda, &mu, blocks, &layers)));
            } else {
                print_layers(&layers);
            }
        }
        Cmd::Jh { lambda, mu, blocks, json } => {
            let d = jh_injective(&lambda, &mu, blocks)?;
            if json {
                println!("{}", pretty(&decomp_json(&d)));
            } else {
                println!("{d}");
            }
        }
        Cmd::SocleK { m, n, json } => {
            let layers = socle_layers_k(m, n)?;
            if json {
                println!("{}", pretty(&layers_json(m, n, &layers)));
            } else {
                print_layers(&layers);
            }
        }
        Cmd::SocleJ { m, n, json } => {
            let layers = socle_layers_j(m, n)?;
            if json {
                println!("{}", pretty(&layers_json(m, n, &layers)));
            } else {
                print_layers(&layers);
            }
        }
        Cmd::Act { generator, i, file } => {
            let v = read_vec(&file)?;
            print_vec(&match generator {
                Gen::E => v.apply_e(i),
                Gen::F => v.apply_f(i),
            });
        }
        Cmd::Gamma { file } => print_vec(&gamma(&read_vec(&file)?)?),
        Cmd::Iota { file } => print_vec(&read_vec(&file)?.iota_kac()?),
        Cmd::Contract { i, j, file } => print_vec(&read_vec(&file)?.contraction(i, j)?),
        Cmd::SocleWindow { m, n, lo, hi, basis } => {
            let b = socle_t_window::<Rational>(m, n, Window::new(lo, hi)?, max_window_from_env())?;
            println!("dimension {}", b.len());
            if basis {
                for v in &b {
                    println!();
                    print_vec(v);
                }
            }
        }
        Cmd::AppendixCheck { m, n, lo, hi, q } => {
            let r = appendix_inclusion_check::<Rational>(m, n, Window::new(lo, hi)?, q, max_window_from_env())?;
            println!("{}", r.holds);
            println!("dim Y {}, dim soc∩Y {}, outside 𝔰Y {}", r.y_dim, r.socle_dim, r.failures);
        }
        Cmd::Atyp { weight } => println!("{}", weight.atypicality()),
        Cmd::Superschur { lambda, m, n, json } => {
            let p: IntPoly = super_schur(&lambda, m, n);
            if json {
                println!("{}", serde_json::to_string(&p).expect("poly serializes"));
            } else {
                println!("{p}");
            }
        }
        Cmd::KacSch { weight, m, n, json } => {
            let p: IntPoly = kac_supercharacter(&weight, m, n)?;
            if json {
                println!("{}", serde_json::to_string(&p).expect("poly serializes"));
            } else {
                println!("{p}");
            }
        }
        Cmd::Ds { file, power } => {
            let p = ds_power(&read_poly(&file)?, power)?;
            println!("{}", serde_json::to_string(&p).expect("poly serializes"));
        }
        Cmd::Verify { suite, seed, size } => return verify_suites(suite, seed, size),
    }
    Ok(true)
}

fn verify_suites(suite: Suite, seed: u64, size: usize) -> Result<bool, Failure> {
    let want = |s: Suite| matches!(suite, Suite::All) || std::mem::discriminant(&suite) == std::mem::discriminant(&s);
    let mut ok = true;
    let mut report = |r: verify::SuiteReport| {
        ok &= r.passed();
        println!("{r}");
    };
    if want(Suite::Relations) {
        report(verify::relations_suite(seed, size));
    }
    if want(Suite::Gamma) {
        report(verify::gamma_suite(seed, size.div_ceil(10)));
    }
    if want(Suite::Ds) {
        report(verify::ds_suite(seed, size.div_ceil(2)));
    }
    if want(Suite::Appendix) {
        report(verify::appendix_suite(seed, size.div_ceil(4), max_window_from_env())?);
    }
    if want(Suite::Shadow) {
        let mut checks = 0;
        let mut failed = Vec::new();
        for m in 1..=3 {
            for n in 1..=3 {
                for d in 0..=4 {
                    let r = tensor_filtration_shadow(m, n, d)?;
                    checks += r.checks.len();
                    failed.extend(r.checks.into_iter().filter(|c| !c.passed).map(|c| format!("({m}|{n}) d={d}: {}", c.name)));
                }
            }
        }
        ok &= failed.is_empty();
        println!("shadow: {checks} checks, {} failed", failed.len());
        for f in failed.iter().take(10) {
            println!("  {f}");
        }
    }
    Ok(ok)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(f) => {
            eprintln!("error: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}
