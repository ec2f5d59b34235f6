//! Command-line driver.
//!
//! Every command builds one JSON value holding all the numbers it computed
//! plus a `passed` flag. `--format structured` prints that value; `--format
//! text` renders the same value as indented `key: value` lines, so both
//! formats carry identical numeric content.
//!
//! Exit status: 0 when every asserted identity or inequality holds, 2 on
//! input errors, 3 when an assertion fails.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::complex::{enumerate_complexes, random_complex, SimplicialComplex, MAX_ENUMERATION};
use crate::compress::{compress, Policy};
use crate::error::{Error, Result};
use crate::freeness::{hc_verify, is_free, max_free_rank_real, orbit_free_on_cells, rank_bound, GroupKind, SubgroupSpec, MAX_SEARCH};
use crate::hochster::{betti_table, check_parity_identity, check_support_bound};
use crate::io::{read_complex_file, read_subgroup_file};
use crate::linalg::FieldTag;
use crate::macx::{poincare_generalized, poincare_rzk, poincare_zk, DegreeVector};
use crate::oracle::{cross_validate, MAX_ORACLE};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_ASSERTION: i32 = 3;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Structured,
}

#[derive(Debug, Parser)]
#[command(name = "moment-angle", version, about = "Möbius transforms, Hochster Betti numbers and moment-angle cohomology")]
pub struct JobConfig {
    #[command(subcommand)]
    pub command: Command,

    /// Coefficient field: GF2 or Rational.
    #[arg(long, global = true, default_value = "GF2", value_parser = parse_field)]
    pub field: FieldTag,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Möbius transform of the complex's indicator function.
    Mobius { input: PathBuf },
    /// Bigraded Betti table with the parity identity and support bound.
    Betti { input: PathBuf },
    /// Poincaré polynomials of the moment-angle complexes.
    Poincare {
        input: PathBuf,
        /// Per-vertex sphere dimensions, comma separated.
        #[arg(long, value_delimiter = ',')]
        kappa: Option<Vec<u32>>,
    },
    /// Compression certificate for the Möbius support lower bound.
    Compress {
        input: PathBuf,
        #[arg(long, default_value = "smallest-k", value_parser = parse_policy)]
        policy: Policy,
    },
    /// Cross-check Betti-derived polynomials against the cellular models.
    OracleCheck { input: PathBuf },
    /// Freeness of a coordinate subgroup action.
    Freeness {
        input: PathBuf,
        #[arg(long)]
        subgroup: Option<PathBuf>,
    },
    /// Cohomology lower bound for a free subgroup action.
    HcVerify {
        input: PathBuf,
        #[arg(long)]
        subgroup: Option<PathBuf>,
    },
    /// Run every check over many complexes.
    Sweep {
        #[arg(long)]
        m: usize,
        /// Every complex on [m] (m <= 4).
        #[arg(long)]
        exhaustive: bool,
        /// Number of random complexes.
        #[arg(long)]
        random: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
    },
}

fn parse_field(s: &str) -> std::result::Result<FieldTag, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_policy(s: &str) -> std::result::Result<Policy, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Exit status and everything to print on standard output.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub status: i32,
    pub output: String,
}

pub fn run(config: &JobConfig) -> Outcome {
    match report(config) {
        Ok(value) => {
            let passed = value.get("passed").and_then(Value::as_bool).unwrap_or(false);
            Outcome {
                status: if passed { EXIT_OK } else { EXIT_ASSERTION },
                output: render(&value, config.format),
            }
        }
        Err(e) => Outcome {
            status: EXIT_INPUT,
            output: match config.format {
                Format::Text => format!("error: {e}\n"),
                Format::Structured => format!("{}\n", json!({ "error": e.to_string(), "passed": false })),
            },
        },
    }
}

pub fn render(value: &Value, format: Format) -> String {
    match format {
        Format::Structured => format!("{}\n", serde_json::to_string_pretty(value).expect("values serialize")),
        Format::Text => {
            let mut out = String::new();
            render_text(value, 0, &mut out);
            out
        }
    }
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("none".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(items) if items.iter().all(|i| !i.is_object() && !i.is_array() || is_flat_array(i)) => {
            let parts: Vec<String> = items.iter().filter_map(scalar).collect();
            Some(format!("[{}]", parts.join(", ")))
        }
        Value::Object(map) if map.values().all(|v| scalar(v).is_some() && !v.is_object()) => {
            let parts: Vec<String> = map.iter().map(|(k, v)| format!("{k}: {}", scalar(v).unwrap())).collect();
            Some(format!("{{{}}}", parts.join(", ")))
        }
        _ => None,
    }
}

fn is_flat_array(v: &Value) -> bool {
    matches!(v, Value::Array(items) if items.iter().all(|i| !i.is_object() && !i.is_array()))
}

fn render_text(value: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match value {
        Value::Object(map) => {
            for (k, v) in map {
                match scalar(v) {
                    Some(s) if !v.is_object() => {
                        let _ = writeln!(out, "{pad}{k}: {s}");
                    }
                    _ => {
                        let _ = writeln!(out, "{pad}{k}:");
                        render_text(v, indent + 1, out);
                    }
                }
            }
        }
        Value::Array(items) => {
            for item in items {
                match scalar(item) {
                    Some(s) => {
                        let _ = writeln!(out, "{pad}- {s}");
                    }
                    None => {
                        let _ = writeln!(out, "{pad}-");
                        render_text(item, indent + 1, out);
                    }
                }
            }
        }
        other => {
            let _ = writeln!(out, "{pad}{}", scalar(other).unwrap_or_default());
        }
    }
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("reports serialize")
}

fn load(input: &Path) -> Result<(SimplicialComplex, Option<crate::io::SubgroupFile>)> {
    let file = read_complex_file(input)?;
    Ok((file.complex()?, file.subgroup))
}

fn load_subgroup(
    k: &SimplicialComplex,
    embedded: Option<crate::io::SubgroupFile>,
    flag: &Option<PathBuf>,
) -> Result<SubgroupSpec> {
    let file = match flag {
        Some(path) => read_subgroup_file(path)?,
        None => embedded.ok_or_else(|| {
            Error::Input("no subgroup: pass --subgroup FILE or add a `subgroup` block".into())
        })?,
    };
    file.spec(k.ground_set())
}

fn complex_summary(k: &SimplicialComplex) -> Value {
    json!({
        "m": k.ground_set(),
        "maximal_faces": k.maximal_faces(),
        "face_count": k.face_count(),
        "dim": k.dim(),
        "no_ghost_vertices": k.has_no_ghost_vertices(),
    })
}

fn report(config: &JobConfig) -> Result<Value> {
    let field = config.field;
    let mut out = Map::new();
    let passed = match &config.command {
        Command::Mobius { input } => {
            let (k, _) = load(input)?;
            let f = k.indicator();
            let g = f.mobius();
            out.insert("complex".into(), complex_summary(&k));
            out.insert("support_size".into(), json!(f.support_size()));
            out.insert("mobius_support".into(), to_value(&g.support()));
            out.insert("mobius_support_size".into(), json!(g.support_size()));
            let involution = &g.mobius() == f;
            out.insert("involution_holds".into(), json!(involution));
            involution
        }
        Command::Betti { input } => {
            let (k, _) = load(input)?;
            let t = betti_table(&k, field);
            let parity = check_parity_identity(&k, &t);
            let bound = check_support_bound(&k, &t);
            out.insert("complex".into(), complex_summary(&k));
            out.insert("betti".into(), to_value(&t.report()));
            out.insert("parity_identity".into(), to_value(&parity));
            out.insert("support_bound".into(), to_value(&bound));
            parity.holds && bound.holds
        }
        Command::Poincare { input, kappa } => {
            let (k, _) = load(input)?;
            out.insert("complex".into(), complex_summary(&k));
            out.insert("field".into(), to_value(&field));
            match kappa {
                Some(kappa) => {
                    let t = betti_table(&k, field);
                    let kappa = DegreeVector::new(kappa.clone());
                    let p = poincare_generalized(&t, &kappa)?;
                    out.insert("kappa".into(), to_value(&kappa));
                    out.insert("polynomial".into(), json!(p.to_string()));
                    out.insert("poincare".into(), to_value(&p.report()));
                    let agrees = p.total_dim() == t.total();
                    out.insert("total_matches_betti_sum".into(), json!(agrees));
                    agrees
                }
                None => {
                    let zk = poincare_zk(&k, field);
                    let rzk = poincare_rzk(&k, field);
                    out.insert("zk_polynomial".into(), json!(zk.to_string()));
                    out.insert("zk".into(), to_value(&zk.report()));
                    out.insert("rzk_polynomial".into(), json!(rzk.to_string()));
                    out.insert("rzk".into(), to_value(&rzk.report()));
                    let equal = zk.total_dim() == rzk.total_dim();
                    out.insert("totals_equal".into(), json!(equal));
                    equal
                }
            }
        }
        Command::Compress { input, policy } => {
            let (k, _) = load(input)?;
            let c = compress(k.indicator(), *policy)?;
            out.insert("complex".into(), complex_summary(&k));
            out.insert("certificate".into(), to_value(&c));
            c.holds
        }
        Command::OracleCheck { input } => {
            let (k, _) = load(input)?;
            let r = cross_validate(&k, field)?;
            out.insert("complex".into(), complex_summary(&k));
            out.insert("cross_validation".into(), to_value(&r));
            r.all_match
        }
        Command::Freeness { input, subgroup } => {
            let (k, embedded) = load(input)?;
            let h = load_subgroup(&k, embedded, subgroup)?;
            let free = is_free(&h, &k)?;
            out.insert("complex".into(), complex_summary(&k));
            out.insert("kind".into(), to_value(&h.kind()));
            out.insert("generators".into(), to_value(&h.rows()));
            out.insert("r".into(), json!(h.rank()));
            out.insert("free".into(), json!(free));
            out.insert("rank_bound".into(), json!(rank_bound(&k)));
            let mut ok = !free || h.rank() as i64 <= rank_bound(&k);
            if h.kind() == GroupKind::Real && k.ground_set() <= MAX_ORACLE {
                let literal = orbit_free_on_cells(&h, &k)?;
                out.insert("orbit_check_free".into(), json!(literal));
                ok &= literal == free;
            }
            if k.ground_set() <= MAX_SEARCH {
                let (r, witness) = max_free_rank_real(&k)?;
                out.insert("max_free_rank_real".into(), json!(r));
                out.insert("max_free_rank_witness".into(), to_value(&witness.rows()));
                ok &= r as i64 <= rank_bound(&k);
            }
            ok
        }
        Command::HcVerify { input, subgroup } => {
            let (k, embedded) = load(input)?;
            let h = load_subgroup(&k, embedded, subgroup)?;
            let r = hc_verify(&k, &h, field)?;
            out.insert("complex".into(), complex_summary(&k));
            out.insert("hc".into(), to_value(&r));
            r.holds()
        }
        Command::Sweep { m, exhaustive, random, seed } => {
            let summary = sweep(*m, *exhaustive, *random, *seed, config.format)?;
            let ok = summary.violations == 0;
            out.insert("sweep".into(), to_value(&summary));
            ok
        }
    };
    out.insert("command".into(), json!(command_name(&config.command)));
    out.insert("passed".into(), json!(passed));
    Ok(Value::Object(out))
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Mobius { .. } => "mobius",
        Command::Betti { .. } => "betti",
        Command::Poincare { .. } => "poincare",
        Command::Compress { .. } => "compress",
        Command::OracleCheck { .. } => "oracle-check",
        Command::Freeness { .. } => "freeness",
        Command::HcVerify { .. } => "hc-verify",
        Command::Sweep { .. } => "sweep",
    }
}

/// Results of running every check over a batch of complexes.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct SweepSummary {
    pub m: usize,
    pub exhaustive_count: usize,
    pub random_count: usize,
    pub seed: Option<u64>,
    pub parity_identity_checks: usize,
    pub support_bound_checks: usize,
    pub certificate_checks: usize,
    pub oracle_checks: usize,
    pub violations: usize,
    /// Up to ten complexes that failed some check.
    pub failures: Vec<SweepFailure>,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct SweepFailure {
    pub maximal_faces: Vec<Vec<usize>>,
    pub check: String,
}

#[derive(Default)]
struct JobTally {
    parity: usize,
    support: usize,
    certificates: usize,
    oracle: usize,
    failures: Vec<String>,
}

fn check_one(k: &SimplicialComplex) -> Result<JobTally> {
    let mut t = JobTally::default();
    for field in FieldTag::ALL {
        let table = betti_table(k, field);
        t.parity += 1;
        if !check_parity_identity(k, &table).holds {
            t.failures.push(format!("parity identity over {field}"));
        }
        t.support += 1;
        if !check_support_bound(k, &table).holds {
            t.failures.push(format!("support bound over {field}"));
        }
        if k.ground_set() <= MAX_ORACLE {
            t.oracle += 1;
            if !cross_validate(k, field)?.all_match {
                t.failures.push(format!("oracle over {field}"));
            }
        }
    }
    for policy in Policy::ALL {
        t.certificates += 1;
        if !compress(k.indicator(), policy)?.holds {
            t.failures.push(format!("certificate with {policy}"));
        }
    }
    Ok(t)
}

pub fn sweep(m: usize, exhaustive: bool, random: Option<usize>, seed: Option<u64>, format: Format) -> Result<SweepSummary> {
    if !exhaustive && random.is_none() {
        return Err(Error::Input("sweep needs --exhaustive and/or --random N".into()));
    }
    if exhaustive && m > MAX_ENUMERATION {
        return Err(Error::Input(format!("--exhaustive supports m <= {MAX_ENUMERATION}")));
    }
    let mut complexes: Vec<SimplicialComplex> = Vec::new();
    if exhaustive {
        complexes.extend(enumerate_complexes(m)?);
    }
    let exhaustive_count = complexes.len();
    let mut used_seed = None;
    if let Some(n) = random {
        let seed = match (seed, format) {
            (Some(s), _) => s,
            (None, Format::Structured) => {
                return Err(Error::Input("--seed is required for random sweeps with structured output".into()))
            }
            (None, Format::Text) => rand::thread_rng().gen(),
        };
        used_seed = Some(seed);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..n {
            complexes.push(random_complex(m, &mut rng)?);
        }
    }
    let tallies: Vec<(SimplicialComplex, JobTally)> = complexes
        .into_par_iter()
        .map(|k| check_one(&k).map(|t| (k, t)))
        .collect::<Result<_>>()?;
    let mut summary = SweepSummary {
        m,
        exhaustive_count,
        random_count: random.unwrap_or(0),
        seed: used_seed,
        parity_identity_checks: 0,
        support_bound_checks: 0,
        certificate_checks: 0,
        oracle_checks: 0,
        violations: 0,
        failures: Vec::new(),
    };
    for (k, t) in tallies {
        summary.parity_identity_checks += t.parity;
        summary.support_bound_checks += t.support;
        summary.certificate_checks += t.certificates;
        summary.oracle_checks += t.oracle;
        summary.violations += t.failures.len();
        for check in t.failures {
            if summary.failures.len() < 10 {
                summary.failures.push(SweepFailure {
                    maximal_faces: k.facets(),
                    check,
                });
            }
        }
    }
    Ok(summary)
}
