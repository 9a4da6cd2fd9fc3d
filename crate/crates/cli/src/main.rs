use std::path::Path;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use tga_core::acceptance;
use tga_core::algebra::{AlgebraElement, TwistedAlgebra};
use tga_core::classification::{self, EnumerationMode};
use tga_core::cohomology;
use tga_core::deformations;
use tga_core::groups::{BasisConvention, FiniteGroup};
use tga_core::identities::{identity_space, DegreePattern};
use tga_core::norms::{self, IteratedNormSpec, KeySide};
use tga_core::scalar::{parse_q, Q};
use tga_core::structure;
use tga_core::Error;

#[derive(Parser, Debug)]
#[command(name = "tga", version, about = "Twisted group algebra toolkit")]
struct Cli {
    /// Worker threads; defaults to all cores.
    #[arg(long, global = true, env = "TGA_THREADS")]
    threads: Option<usize>,
    /// Seed for every randomized check.
    #[arg(long, global = true, default_value_t = acceptance::ACCEPTANCE_SEED)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Md,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Side {
    Left,
    Right,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Enumerate unital sign constants and classify them.
    Classify {
        #[arg(long)]
        group: String,
        #[arg(long, default_value = "left")]
        basis: String,
        #[arg(long, default_value = "shaped")]
        mode: String,
        #[arg(long, value_enum, default_value_t = Format::Md)]
        format: Format,
    },
    /// r- and q-functions, coboundaries and separability.
    Cohomology {
        /// Algebra name or path to an algebra JSON file.
        #[arg(long, default_value = "tes")]
        algebra: String,
        #[arg(long, value_delimiter = ',')]
        show: Vec<String>,
        #[arg(long, value_delimiter = ',')]
        check: Vec<String>,
    },
    /// Identity space of a degree pattern.
    Identities {
        #[arg(long, default_value = "tes")]
        algebra: String,
        #[arg(long)]
        pattern: String,
        /// Write the basis JSON to this file.
        #[arg(long)]
        emit: Option<String>,
    },
    /// Commutator/anticommutator structure and inverses.
    Analyze {
        #[arg(long, default_value = "tes")]
        algebra: String,
        #[arg(long, value_delimiter = ',', default_value = "lie,jordan,series,inverses")]
        report: Vec<String>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long, default_value_t = 50)]
        samples: usize,
    },
    /// Norm checks on the tesseranions and the iterated norms.
    Norms {
        #[arg(long, value_delimiter = ',', default_value = "schwarz")]
        check: Vec<String>,
        #[arg(long, default_value_t = norms::TRIANGLE_SAMPLES)]
        samples: usize,
        /// Restrict the triangle check to one level.
        #[arg(long)]
        j: Option<u32>,
        #[arg(long)]
        n: Option<usize>,
    },
    /// One-parameter deformations.
    Deform {
        #[arg(long)]
        family: u8,
        #[arg(long)]
        k: String,
        #[arg(long, value_delimiter = ',', default_value = "neccons,witness,inverse-iso,commutator")]
        checks: Vec<String>,
    },
    /// Encrypt (or decrypt with --cipher) over Z_p.
    Encrypt {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        key: String,
        #[arg(long)]
        msg: Option<String>,
        #[arg(long)]
        cipher: Option<String>,
        #[arg(long, value_enum, default_value_t = Side::Left)]
        side: Side,
    },
    /// Run the acceptance criteria.
    Accept {
        /// Run only these criteria.
        #[arg(long, value_delimiter = ',')]
        only: Vec<u8>,
        #[arg(long, value_enum, default_value_t = Format::Md)]
        format: Format,
    },
}

enum Failure {
    Usage(String),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) | Error::Json(_) | Error::InvalidModulus(_) | Error::UnsupportedGroup(_) => {
                Failure::Usage(e.to_string())
            }
            other => Failure::Check(other.to_string()),
        }
    }
}

type Outcome = Result<bool, Failure>;

fn load_algebra(sel: &str) -> Result<TwistedAlgebra, Failure> {
    if sel.ends_with(".json") || Path::new(sel).is_file() {
        let text = std::fs::read_to_string(sel).map_err(|e| Failure::Usage(format!("{sel}: {e}")))?;
        return Ok(TwistedAlgebra::from_json(&text)?);
    }
    Ok(TwistedAlgebra::by_name(sel)?)
}

fn parse_element(s: &str) -> Result<AlgebraElement<Q>, Failure> {
    Ok(AlgebraElement::parse(s)?)
}

fn print(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("json"));
}

fn classify_cmd(group: &str, basis: &str, mode: &str, format: Format) -> Outcome {
    let g = FiniteGroup::by_name(group)?;
    let conv: BasisConvention = basis.parse()?;
    let mode: EnumerationMode = mode.parse()?;
    let order = g.order();
    if order > 1 && order % 2 == 1 {
        let c = tga_core::algebra::StructureConstant::from_ints(
            g.clone().shared(),
            &vec![vec![1i64; order]; order],
            conv,
        )?;
        let w = classification::odd_order_zero_divisor(&c)?;
        print(&json!({
            "group": group,
            "survivor_count": 0,
            "odd_order_witness": {
                "prime": w.prime,
                "polynomial": format!("{:?}", w.polynomial.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>()),
                "sturm_roots": w.sturm_roots,
                "root_interval": [w.root.lo.to_string(), w.root.hi.to_string()],
                "verified": w.verify(),
            }
        }));
        return Ok(w.verify());
    }
    let r = classification::classify(&g, conv, mode)?;
    match format {
        Format::Json => print(&r.to_json()),
        Format::Md => {
            println!(
                "{} {} {}: {} candidates, {} survivors, {} rejected, {} undetermined\n",
                r.group,
                conv.label(),
                mode,
                r.candidates_examined,
                r.survivors.len(),
                r.rejected.len(),
                r.undetermined.len()
            );
            for (i, s) in r.survivors.iter().enumerate() {
                println!("{}", s.candidate.constant.to_markdown(&format!("C{}", i + 1)));
                println!("det M^L = {}", s.det_left);
                println!("det M^R = {}\n", s.det_right);
            }
        }
    }
    Ok(r.verify() && r.undetermined.is_empty())
}

fn cohomology_cmd(algebra: &str, show: &[String], check: &[String]) -> Outcome {
    let alg = load_algebra(algebra)?;
    let rep = cohomology::analyze(&alg)?;
    let full = rep.to_json();
    let mut out = serde_json::Map::new();
    out.insert("algebra".into(), json!(rep.algebra));
    if show.is_empty() && check.is_empty() {
        print(&full);
        return Ok(true);
    }
    for s in show {
        let key = match s.as_str() {
            "r" | "q" | "kappa" => s.as_str(),
            other => return Err(Failure::Usage(format!("unknown --show value {other:?}"))),
        };
        out.insert(key.into(), full[key].clone());
    }
    let mut ok = true;
    for c in check {
        let v = match c.as_str() {
            "cocycle" => rep.cocycle,
            "coboundary" => rep.kappa.is_some(),
            "separable" => rep.separable,
            other => return Err(Failure::Usage(format!("unknown --check value {other:?}"))),
        };
        ok &= v;
        out.insert(c.clone(), json!(v));
        if c == "separable" {
            out.insert("separability_violation".into(), json!(rep.separability_violation));
        }
    }
    print(&Value::Object(out));
    Ok(ok)
}

fn identities_cmd(algebra: &str, pattern: &str, emit: Option<&str>) -> Outcome {
    let alg = load_algebra(algebra)?;
    let pat: DegreePattern = pattern.parse()?;
    let space = identity_space(&alg, &pat)?;
    let j = space.to_json();
    if let Some(path) = emit {
        let text = serde_json::to_string_pretty(&j).expect("json");
        std::fs::write(path, text).map_err(|e| Failure::Usage(format!("{path}: {e}")))?;
    }
    print(&json!({
        "algebra": alg.label(),
        "pattern": pat.to_string(),
        "monomials": space.monomials.len(),
        "dimension": space.dimension(),
        "emitted": emit,
    }));
    Ok(true)
}

fn analyze_cmd(algebra: &str, report: &[String], format: Format, samples: usize, seed: u64) -> Outcome {
    let alg = load_algebra(algebra)?;
    let full = structure::analyze_report(&alg, samples, seed)?;
    let mut out = serde_json::Map::new();
    out.insert("algebra".into(), full["algebra"].clone());
    for r in report {
        match r.as_str() {
            "lie" | "jordan" | "series" | "inverses" => {
                out.insert(r.clone(), full[r.as_str()].clone());
            }
            other => return Err(Failure::Usage(format!("unknown report section {other:?}"))),
        }
    }
    let v = Value::Object(out);
    match format {
        Format::Json => print(&v),
        Format::Md => {
            for (k, section) in v.as_object().expect("object") {
                println!("## {k}\n");
                match section.as_object() {
                    Some(m) => {
                        for (field, val) in m {
                            println!("- {field}: {val}");
                        }
                    }
                    None => println!("{section}"),
                }
                println!();
            }
        }
    }
    Ok(true)
}

fn norms_cmd(checks: &[String], samples: usize, j: Option<u32>, n: Option<usize>, seed: u64) -> Outcome {
    let mut out = serde_json::Map::new();
    let mut ok = true;
    let e = AlgebraElement::from_ints;
    for c in checks {
        match c.as_str() {
            "schwarz" => {
                let (p, q, s, t) = (e(&[1, 1, 0, 0]), e(&[1, -1, 0, 0]), e(&[1, 1, 1, 0]), e(&[1, -1, 1, 0]));
                let d = [norms::schwarz_defect4(&p, &p)?, norms::schwarz_defect4(&p, &q)?, norms::schwarz_defect4(&s, &t)?];
                let pure = norms::schwarz_equality_pure_symbolic(false)? && norms::schwarz_equality_pure_symbolic(true)?;
                let h = norms::quaternion_schwarz_symbolic()?;
                ok &= pure && h;
                out.insert(
                    "schwarz".into(),
                    json!({
                        "convention": "|x|^4 |y|^4 - |x.y|^4",
                        "p_p": d[0].to_string(),
                        "p_q": d[1].to_string(),
                        "s_t": d[2].to_string(),
                        "pure_factor_equality": pure,
                        "quaternion_equality": h,
                        "defect_p_q": norms::triangle_defect(&p, &q)?,
                        "defect_s_t": norms::triangle_defect(&s, &t)?,
                    }),
                );
            }
            "triangle" => {
                let specs: Vec<IteratedNormSpec> = match (j, n) {
                    (Some(j), Some(n)) => vec![IteratedNormSpec::new(j, n)?],
                    (None, None) => (1..=4)
                        .flat_map(|j| (1..=3).map(move |n| IteratedNormSpec::new(j, n)))
                        .collect::<Result<_, _>>()?,
                    _ => return Err(Failure::Usage("--j and --n go together".into())),
                };
                let mut rows = Vec::new();
                for spec in specs {
                    let r = norms::triangle_check(spec, samples, seed)?;
                    let hom = norms::positive_homogeneity_check(spec, samples.min(1000), seed)?;
                    ok &= r.holds() && hom;
                    rows.push(json!({ "j": spec.j, "n": spec.n, "report": r, "homogeneity": hom }));
                }
                out.insert("triangle".into(), json!(rows));
            }
            "inverses" => {
                let v = norms::inverse_formulas_verified(&e(&[2, -1, 3, 5]))? && norms::pure_even_associativity()?;
                ok &= v;
                out.insert("inverses".into(), json!(v));
            }
            "generation" => {
                let v = norms::generation_check(samples.min(1000), seed)?;
                ok &= v;
                out.insert("generation".into(), json!(v));
            }
            other => return Err(Failure::Usage(format!("unknown norms check {other:?}"))),
        }
    }
    print(&Value::Object(out));
    Ok(ok)
}

fn deform_cmd(family: u8, k: &str, checks: &[String]) -> Outcome {
    let k = parse_q(k).map_err(|e| Failure::Usage(e.to_string()))?;
    let names: Vec<&str> = checks.iter().map(|s| s.as_str()).collect();
    let v = deformations::deform_report(family, &k, &names)?;
    print(&v);
    let failed = v.get("inverse-iso").and_then(|x| x.get("holds")).is_some_and(|h| h == &json!(false))
        || v.get("commutator").and_then(|x| x.get("corrected_matches")).is_some_and(|h| h == &json!(false));
    Ok(!failed)
}

fn zp_list(x: &AlgebraElement<tga_core::scalar::Zp>) -> Vec<u64> {
    x.coeffs.iter().map(|c| c.value).collect()
}

fn encrypt_cmd(p: u64, key: &str, msg: Option<&str>, cipher: Option<&str>, side: Side) -> Outcome {
    let side = match side {
        Side::Left => KeySide::Left,
        Side::Right => KeySide::Right,
    };
    let a = parse_element(key)?;
    match (msg, cipher) {
        (Some(m), None) => {
            let c = parse_element(m)?;
            let x = norms::encrypt(&a, &c, p, side)?;
            let back = norms::decrypt(&a, &x, p, side)?;
            let ok = back == c.to_zp(p)?;
            println!("{}", zp_list(&x).iter().map(|v| v.to_string()).collect::<Vec<_>>().join(","));
            eprintln!("round trip: {}", if ok { "ok" } else { "FAILED" });
            Ok(ok)
        }
        (None, Some(x)) => {
            let x = parse_element(x)?.to_zp(p)?;
            let c = norms::decrypt(&a, &x, p, side)?;
            println!("{}", zp_list(&c).iter().map(|v| v.to_string()).collect::<Vec<_>>().join(","));
            Ok(true)
        }
        _ => Err(Failure::Usage("give exactly one of --msg and --cipher".into())),
    }
}

fn accept_cmd(only: &[u8], format: Format) -> Outcome {
    let ids: Vec<u8> = if only.is_empty() { acceptance::CRITERIA.iter().map(|(i, _)| *i).collect() } else { only.to_vec() };
    let mut results = Vec::new();
    for id in ids {
        let r = acceptance::run_criterion(id);
        if let Format::Md = format {
            println!("{}", r.line());
        }
        results.push(r);
    }
    let ok = results.iter().all(|r| r.passed);
    if let Format::Json = format {
        print(&json!({ "passed": ok, "criteria": results }));
    }
    Ok(ok)
}

fn run(cli: Cli) -> Outcome {
    let seed = cli.seed;
    match cli.command {
        Command::Classify { group, basis, mode, format } => classify_cmd(&group, &basis, &mode, format),
        Command::Cohomology { algebra, show, check } => cohomology_cmd(&algebra, &show, &check),
        Command::Identities { algebra, pattern, emit } => identities_cmd(&algebra, &pattern, emit.as_deref()),
        Command::Analyze { algebra, report, format, samples } => analyze_cmd(&algebra, &report, format, samples, seed),
        Command::Norms { check, samples, j, n } => norms_cmd(&check, samples, j, n, seed),
        Command::Deform { family, k, checks } => deform_cmd(family, &k, &checks),
        Command::Encrypt { p, key, msg, cipher, side } => {
            encrypt_cmd(p, &key, msg.as_deref(), cipher.as_deref(), side)
        }
        Command::Accept { only, format } => accept_cmd(&only, format),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Check(m)) => {
            eprintln!("check failed: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
    }
}
