//! Command-line front end: load algebras and homomorphisms from JSON files,
//! run spectra and adjointness analyses, reproduce the shipped examples,
//! and drive the seeded fuzzer.
//!
//! Exit codes: 0 = success (and, for analyze/check-3-15, adjoint);
//! 1 = mathematical negative (non-adjoint, or a failing example);
//! 2 = internal inconsistency between independently computed conditions;
//! 3 = usage, parse, or validation errors.

use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use crate::algebra::Algebra;
use crate::correspondence::{analyze_with, HomAnalysis, HomContext};
use crate::error::{Error, Result};
use crate::exactlin::FieldSpec;
use crate::harness::{
    all_fixtures, fixture, generate_instance, oracle_cross_check, InstanceSpec,
};
use crate::ideals::{jacobson_radical, nilpotency_index, zero_ideal};
use crate::io;
use crate::spectrum::{all_closed_sets, goldie_rank, spec, v_of, SpecSet};

#[derive(Parser)]
#[command(
    name = "ncspec",
    about = "prime spectra, Zariski closed sets, and adjointness analysis for finite-dimensional algebras",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct OutputOpts {
    /// Emit a JSON report instead of human-readable text.
    #[arg(long)]
    json: bool,
    /// Suppress informational output.
    #[arg(long)]
    quiet: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Print the prime spectrum, radical, quotient dimensions, Goldie
    /// ranks, and closed-set count of an algebra file.
    Spec {
        algebra_file: PathBuf,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Print the radical and its nilpotency index.
    Radical {
        algebra_file: PathBuf,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Enumerate every two-sided ideal (small finite-field algebras only).
    Ideals {
        algebra_file: PathBuf,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Full correspondence and adjointness analysis of a homomorphism file.
    Analyze {
        hom_file: PathBuf,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Decide the equivalent adjointness conditions and verify that they
    /// agree; exit 0 = adjoint, 1 = not adjoint, 2 = conditions disagree.
    #[command(name = "check-3-15")]
    Check315 {
        hom_file: PathBuf,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Run or list the shipped examples.
    Examples {
        #[command(subcommand)]
        action: ExamplesAction,
    },
    /// Analyze deterministic seeded instances and print one JSON line per
    /// instance.
    Fuzz {
        /// First seed.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of instances.
        #[arg(long, default_value_t = 500)]
        count: u64,
        /// Skip instances whose ambient dimension exceeds this bound.
        #[arg(long = "max-dim", default_value_t = 9)]
        max_dim: usize,
        /// Restrict to one field ("Q" or "Fp:<p>").
        #[arg(long)]
        field: Option<String>,
        #[arg(long)]
        quiet: bool,
    },
    /// Validate an algebra or homomorphism file.
    Validate {
        file: PathBuf,
        /// Print the canonical form of the file to stdout.
        #[arg(long)]
        canonicalize: bool,
        #[arg(long)]
        quiet: bool,
    },
}

#[derive(Subcommand)]
enum ExamplesAction {
    /// List the shipped examples.
    List,
    /// Run one example by name, or "all".
    Run {
        name: String,
        #[command(flatten)]
        out: OutputOpts,
    },
}

/// Entry point used by the binary and by tests; returns the process exit
/// code instead of exiting.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // clap renders its own help/usage text
            let _ = e.print();
            return if e.use_stderr() { 3 } else { 0 };
        }
    };
    let outcome = match cli.command {
        Command::Spec { algebra_file, out } => cmd_spec(&algebra_file, &out),
        Command::Radical { algebra_file, out } => cmd_radical(&algebra_file, &out),
        Command::Ideals { algebra_file, out } => cmd_ideals(&algebra_file, &out),
        Command::Analyze { hom_file, out } | Command::Check315 { hom_file, out } => {
            cmd_analyze(&hom_file, &out)
        }
        Command::Examples { action } => cmd_examples(action),
        Command::Fuzz { seed, count, max_dim, field, quiet } => {
            cmd_fuzz(seed, count, max_dim, field.as_deref(), quiet)
        }
        Command::Validate { file, canonicalize, quiet } => {
            cmd_validate(&file, canonicalize, quiet)
        }
    };
    match outcome {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            3
        }
    }
}

#[derive(Serialize)]
struct PrimeReport {
    basis: Vec<Vec<String>>,
    quotient_dim: usize,
    goldie_rank: Option<usize>,
    rank_certificate: Option<usize>,
}

#[derive(Serialize)]
struct SpecReport {
    field: String,
    dim: usize,
    basis: Vec<String>,
    radical_basis: Vec<Vec<String>>,
    radical_nilpotency_index: Option<usize>,
    primes: Vec<PrimeReport>,
    closed_set_count: usize,
}

fn ideal_rows(i: &crate::ideals::Ideal) -> Vec<Vec<String>> {
    i.carrier()
        .basis_rows()
        .iter()
        .map(|r| r.iter().map(|s| s.to_string()).collect())
        .collect()
}

fn spec_report(a: &Algebra) -> Result<(SpecSet, SpecReport)> {
    let s = spec(a)?;
    let rad = jacobson_radical(a);
    let nilpotency = nilpotency_index(&rad, &zero_ideal(a))?;
    let mut primes = Vec::new();
    for p in s.primes() {
        let rank = goldie_rank(a, p).ok();
        primes.push(PrimeReport {
            basis: ideal_rows(p.ideal()),
            quotient_dim: p.quotient_dim(),
            goldie_rank: rank.map(|(r, _)| r),
            rank_certificate: rank.map(|(_, c)| c),
        });
    }
    let closed = all_closed_sets(&s)?;
    let report = SpecReport {
        field: a.field().to_string(),
        dim: a.dim(),
        basis: a.labels().to_vec(),
        radical_basis: ideal_rows(&rad),
        radical_nilpotency_index: nilpotency,
        primes,
        closed_set_count: closed.closed_sets().len(),
    };
    Ok((s, report))
}

fn print_spec_human(a: &Algebra, report: &SpecReport) {
    println!("algebra: dim {} over {}", report.dim, report.field);
    println!("basis: [{}]", report.basis.join(", "));
    let rad_desc = if report.radical_basis.is_empty() {
        "0".to_string()
    } else {
        let rad = jacobson_radical(a);
        rad.carrier()
            .basis_rows()
            .iter()
            .map(|r| a.format_vector(r))
            .collect::<Vec<_>>()
            .join(", ")
    };
    println!(
        "radical: span{{{}}} (nilpotency index {})",
        rad_desc,
        report
            .radical_nilpotency_index
            .map_or("-".to_string(), |t| t.to_string())
    );
    println!("spec: {} prime(s)", report.primes.len());
    let s = spec(a).expect("spec already computed");
    for (k, p) in report.primes.iter().enumerate() {
        let basis_desc = if p.basis.is_empty() {
            "0".to_string()
        } else {
            s.prime(k)
                .ideal()
                .carrier()
                .basis_rows()
                .iter()
                .map(|r| a.format_vector(r))
                .collect::<Vec<_>>()
                .join(", ")
        };
        println!(
            "  P{k}: span{{{basis_desc}}}; quotient dim {}; rank {}",
            p.quotient_dim,
            p.goldie_rank.map_or("?".into(), |r| r.to_string())
        );
    }
    println!("closed sets: {}", report.closed_set_count);
}

fn cmd_spec(path: &PathBuf, out: &OutputOpts) -> Result<i32> {
    let a = io::load_algebra(path)?;
    let (_, report) = spec_report(&a)?;
    if out.json {
        println!("{}", serde_json::to_string_pretty(&report).expect("serializable"));
    } else if !out.quiet {
        print_spec_human(&a, &report);
    }
    Ok(0)
}

fn cmd_radical(path: &PathBuf, out: &OutputOpts) -> Result<i32> {
    let a = io::load_algebra(path)?;
    let rad = jacobson_radical(&a);
    let nilpotency = nilpotency_index(&rad, &zero_ideal(&a))?;
    if out.json {
        let v = json!({
            "field": a.field().to_string(),
            "dim": a.dim(),
            "radical_basis": ideal_rows(&rad),
            "radical_dim": rad.dim(),
            "nilpotency_index": nilpotency,
        });
        println!("{}", serde_json::to_string_pretty(&v).expect("serializable"));
    } else if !out.quiet {
        let desc = if rad.is_zero() {
            "0".to_string()
        } else {
            rad.carrier()
                .basis_rows()
                .iter()
                .map(|r| a.format_vector(r))
                .collect::<Vec<_>>()
                .join(", ")
        };
        println!(
            "radical: span{{{desc}}} (dim {}, nilpotency index {})",
            rad.dim(),
            nilpotency.map_or("-".to_string(), |t| t.to_string())
        );
    }
    Ok(0)
}

fn cmd_ideals(path: &PathBuf, out: &OutputOpts) -> Result<i32> {
    let a = io::load_algebra(path)?;
    let ideals = crate::harness::exhaustive_ideal_enumeration(&a)?;
    if out.json {
        let v = json!({
            "count": ideals.len(),
            "ideals": ideals.iter().map(|i| json!({
                "dim": i.dim(),
                "basis": ideal_rows(i),
            })).collect::<Vec<_>>(),
        });
        println!("{}", serde_json::to_string_pretty(&v).expect("serializable"));
    } else if !out.quiet {
        println!("{} two-sided ideal(s)", ideals.len());
        for i in &ideals {
            let desc = if i.is_zero() {
                "0".to_string()
            } else {
                i.carrier()
                    .basis_rows()
                    .iter()
                    .map(|r| a.format_vector(r))
                    .collect::<Vec<_>>()
                    .join(", ")
            };
            println!("  dim {}: span{{{desc}}}", i.dim());
        }
    }
    Ok(0)
}

#[derive(Serialize)]
struct AnalyzeReport {
    domain: SpecReport,
    codomain: SpecReport,
    analysis: HomAnalysis,
}

fn print_analysis_human(ctx: &HomContext, analysis: &HomAnalysis) {
    let r_alg = ctx.f.source();
    let s_alg = ctx.f.target();
    println!(
        "hom: {}-dim -> {}-dim over {}",
        r_alg.dim(),
        s_alg.dim(),
        r_alg.field()
    );
    println!(
        "spec(domain): {} prime(s); spec(codomain): {} prime(s)",
        ctx.spec_r.len(),
        ctx.spec_s.len()
    );
    println!("correspondence (codomain prime -> domain primes):");
    for (i, img) in analysis.correspondence.iter().enumerate() {
        let members: Vec<String> = img.iter().map(|k| format!("Q{k}")).collect();
        println!("  P{i} -> {{{}}}", members.join(", "));
    }
    let f = &analysis.flags;
    println!(
        "flags: single_valued={} continuous={} strong_preimage_identity={} adjoint={}",
        f.single_valued, f.continuous, f.strong_preimage_identity, f.adjoint
    );
    println!(
        "       prime_pair_criterion={} nearly_centralizing(primes)={} nearly_centralizing(ideals)={} centralizing={}",
        f.prime_pair_criterion, f.nearly_centralizing_primes, f.nearly_centralizing_ideals, f.centralizing
    );
    let ts: Vec<String> = analysis
        .per_prime_t
        .iter()
        .enumerate()
        .map(|(k, t)| format!("Q{k}: {}", t.map_or("none".into(), |t| format!("t = {t}"))))
        .collect();
    println!("nearly-centralizing exponents: {}", ts.join("; "));
    if let Some(w) = &analysis.witnesses.single_valued {
        println!(
            "witness (single-valued fails): P{} -> {} primes",
            w.index,
            w.members.len()
        );
    }
    if let Some(w) = &analysis.witnesses.strong_preimage {
        println!(
            "witness (strong-preimage identity fails): subset {:?}, lhs {:?} != rhs {:?}",
            w.subset, w.lhs, w.rhs
        );
    }
    if let Some(w) = &analysis.witnesses.adjoint {
        println!(
            "witness (adjunction fails): U = {:?}, V = {:?}",
            w.u_members, w.v_members
        );
    }
    if let Some(w) = &analysis.witnesses.prime_pair {
        println!("witness (prime-pair criterion fails): (P{}, Q{})", w.p_index, w.q_index);
    }
    let verdict = if !analysis.consistent {
        "INTERNAL INCONSISTENCY: equivalent conditions disagree"
    } else if f.adjoint {
        "adjoint"
    } else {
        "not adjoint"
    };
    println!("verdict: {verdict}");
}

fn cmd_analyze(path: &PathBuf, out: &OutputOpts) -> Result<i32> {
    let f = io::load_hom(path)?;
    let ctx = HomContext::new(&f)?;
    let analysis = analyze_with(&ctx)?;
    if out.json {
        let (_, domain) = spec_report(f.source())?;
        let (_, codomain) = spec_report(f.target())?;
        let report = AnalyzeReport { domain, codomain, analysis: analysis.clone() };
        println!("{}", serde_json::to_string_pretty(&report).expect("serializable"));
    } else if !out.quiet {
        print_analysis_human(&ctx, &analysis);
    }
    Ok(if !analysis.consistent {
        2
    } else if analysis.flags.adjoint {
        0
    } else {
        1
    })
}

fn run_one_example(name: &str, out: &OutputOpts) -> Result<bool> {
    let fx = fixture(name)?;
    let (analysis, diffs) = fx.verify()?;
    let pass = diffs.is_empty();
    if out.json {
        let v = json!({
            "name": fx.name,
            "alias": fx.alias,
            "description": fx.description,
            "pass": pass,
            "diffs": diffs,
            "analysis": analysis,
        });
        println!("{}", serde_json::to_string(&v).expect("serializable"));
        return Ok(pass);
    }
    if !out.quiet {
        println!("== {} ({})", fx.name, fx.description);
        if fx.name == "ex1" {
            // the headline computation: the strong preimage of V(rad R) is
            // the whole one-point Spec S, while the ideal generated by the
            // image of rad R is everything, so V of it is empty
            let ctx = HomContext::new(&fx.hom)?;
            let rad = jacobson_radical(&fx.domain);
            let v_mask = v_of(&ctx.spec_r, &rad).mask();
            let strong = ctx.r.finite.strong_preimage(v_mask);
            let image = fx.hom.image_subspace(rad.carrier());
            let generated =
                crate::ideals::ideal_generated_by_subspace(&fx.codomain, &image);
            let v_gen = v_of(&ctx.spec_s, &generated).mask();
            println!(
                "  strong preimage of V(I): {{{}}}  vs  V(<f(I)>): {{{}}}",
                mask_names(strong, ctx.spec_s.len(), 'P'),
                mask_names(v_gen, ctx.spec_s.len(), 'P'),
            );
        }
        for d in &diffs {
            println!("  MISMATCH {d}");
        }
        println!("  flags: adjoint={} single_valued={} continuous={} strong_preimage_identity={}",
            analysis.flags.adjoint,
            analysis.flags.single_valued,
            analysis.flags.continuous,
            analysis.flags.strong_preimage_identity);
        println!("  {}", if pass { "PASS" } else { "FAIL" });
    }
    Ok(pass)
}

fn mask_names(mask: u32, points: usize, prefix: char) -> String {
    (0..points)
        .filter(|&k| mask >> k & 1 == 1)
        .map(|k| format!("{prefix}{k}"))
        .collect::<Vec<_>>()
        .join(", ")
}

fn cmd_examples(action: ExamplesAction) -> Result<i32> {
    match action {
        ExamplesAction::List => {
            for f in all_fixtures() {
                println!("{} (alias {}): {}", f.name, f.alias, f.description);
            }
            Ok(0)
        }
        ExamplesAction::Run { name, out } => {
            let names: Vec<String> = if name == "all" {
                all_fixtures().iter().map(|f| f.name.to_string()).collect()
            } else {
                vec![name]
            };
            let mut all_pass = true;
            for n in &names {
                all_pass &= run_one_example(n, &out)?;
            }
            if !out.quiet && !out.json {
                let passed = if all_pass { names.len() } else { 0 };
                println!("{}/{} examples PASS", passed, names.len());
            }
            Ok(if all_pass { 0 } else { 1 })
        }
    }
}

fn cmd_fuzz(
    seed: u64,
    count: u64,
    max_dim: usize,
    field: Option<&str>,
    quiet: bool,
) -> Result<i32> {
    let field_filter = field.map(FieldSpec::parse_name).transpose()?;
    let mut worst = 0i32;
    let mut produced = 0u64;
    let mut next_seed = seed;
    while produced < count {
        let current = next_seed;
        next_seed += 1;
        let mut spec_inst = InstanceSpec::from_seed(current);
        if let Some(fld) = field_filter {
            spec_inst.field = fld;
        }
        let started = Instant::now();
        let line = match generate_instance(&spec_inst)
            .and_then(|(r, s, f)| oracle_cross_check(&f).map(|rep| (r, s, rep)))
        {
            Ok((r, s, report)) => {
                if s.dim() > max_dim && r.dim() > max_dim {
                    continue;
                }
                if !report.consistent {
                    worst = worst.max(2);
                } else if !report.failures.is_empty() {
                    worst = worst.max(2);
                }
                json!({
                    "seed": current,
                    "kind": spec_inst.kind.name(),
                    "field": spec_inst.field.to_string(),
                    "dims": [r.dim(), s.dim()],
                    "flags": report.flags,
                    "consistent": report.consistent,
                    "failures": report.failures,
                    "ms": started.elapsed().as_secs_f64() * 1e3,
                })
            }
            Err(e) => {
                worst = worst.max(2);
                json!({
                    "seed": current,
                    "kind": spec_inst.kind.name(),
                    "field": spec_inst.field.to_string(),
                    "error": e.to_string(),
                    "ms": started.elapsed().as_secs_f64() * 1e3,
                })
            }
        };
        produced += 1;
        if !quiet {
            println!("{}", serde_json::to_string(&line).expect("serializable"));
        }
    }
    Ok(worst)
}

fn cmd_validate(path: &PathBuf, canonicalize: bool, quiet: bool) -> Result<i32> {
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })?;
    let value: serde_json::Value = serde_json::from_str(&text).map_err(|e| Error::Parse {
        context: path.display().to_string(),
        message: e.to_string(),
    })?;
    if io::looks_like_hom(&value) {
        let base = path.parent().unwrap_or_else(|| std::path::Path::new("."));
        let f = io::hom_from_json(&value, base)?;
        if canonicalize {
            // canonical hom form: matrix entries re-rendered
            let rows: Vec<Vec<String>> = (0..f.target().dim())
                .map(|r| {
                    (0..f.source().dim())
                        .map(|c| f.matrix().get(r, c).to_string())
                        .collect()
                })
                .collect();
            let obj = value.as_object().expect("validated object");
            let v = json!({
                "source": obj["source"],
                "target": obj["target"],
                "matrix": rows,
            });
            println!("{}", serde_json::to_string_pretty(&v).expect("serializable"));
        } else if !quiet {
            println!(
                "hom OK: {}-dim -> {}-dim over {}",
                f.source().dim(),
                f.target().dim(),
                f.source().field()
            );
        }
    } else {
        let a = io::algebra_from_json(&value)?;
        if canonicalize {
            println!(
                "{}",
                serde_json::to_string_pretty(&io::algebra_to_json(&a)).expect("serializable")
            );
        } else if !quiet {
            println!("algebra OK: dim {} over {}", a.dim(), a.field());
        }
    }
    Ok(0)
}
