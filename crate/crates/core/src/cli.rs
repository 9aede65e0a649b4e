//! Command-line front end. Exit codes: 0 all checks pass, 1 a check or
//! golden comparison fails, 2 usage or configuration error.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::algebra::{build_algebra, gradation_and_pmax, has_terminal_so3, max_links, realization_check, Series};
use crate::chain::{
    carrier_basis, chain_inverse, chain_matrix, coproduct_table_check, primitivity_and_so_g3, verify_twist_equation,
    ChainSpec, ChainStyle,
};
use crate::error::{Error, Result};
use crate::frobenius::{gen_form_functional, gram_and_nondegeneracy, omega_forms, subalgebra_lkm, cocycle_tests};
use crate::io::{emit_matrix, golden_compare, load_golden, parse_matrix, render_text, ChainConfig, Erratum};
use crate::linalg::Scalar;
use crate::parallel::{parallel_map, thread_count};
use crate::report::VerificationReport;
use crate::rmatrix::{
    cybe_check_matrix, expected_classical_r, r_from_chain, semiclassical_extract, spectral_ybe_check, unitarity_check,
    ybe_check, RMatrix, YangianTwist, LOCKED_K,
};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "twistforge", version, about = "Exact twist chains and R-matrices for so(M)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Root data and realization checks of so(M).
    Algebra {
        #[command(subcommand)]
        command: AlgebraCommand,
    },
    /// Chain construction.
    Chain {
        #[command(subcommand)]
        command: ChainCommand,
    },
    /// Emit the R-matrix of a chain.
    Rmatrix {
        #[arg(long)]
        config: PathBuf,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run verification suites.
    Verify(VerifyArgs),
    /// Spectral Yang–Baxter check of R(u).
    Yangian {
        #[arg(long)]
        config: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        u: String,
        #[arg(long, allow_hyphen_values = true)]
        v: String,
        #[arg(long)]
        untwisted: bool,
    },
    /// Reference-matrix comparison.
    Golden {
        #[command(subcommand)]
        command: GoldenCommand,
    },
}

#[derive(Subcommand, Debug)]
enum AlgebraCommand {
    Info {
        #[arg(long)]
        series: SeriesArg,
        #[arg(long)]
        rank: usize,
    },
}

#[derive(Subcommand, Debug)]
enum ChainCommand {
    Build {
        #[arg(long)]
        config: PathBuf,
    },
}

#[derive(Subcommand, Debug)]
enum GoldenCommand {
    Compare {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        golden: PathBuf,
        /// Known mismatches; the comparison passes when the diff equals this list.
        #[arg(long)]
        erratum: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
#[group(skip)]
#[command(group(clap::ArgGroup::new("input").required(true).args(["config", "matrix"])))]
struct VerifyArgs {
    #[arg(long)]
    config: Option<PathBuf>,
    /// A raw R-matrix document, for the ybe and unitarity suites.
    #[arg(long)]
    matrix: Option<PathBuf>,
    #[arg(long, value_enum)]
    suite: Suite,
    /// Print the reports as JSON.
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SeriesArg {
    #[value(name = "B", alias = "b")]
    B,
    #[value(name = "D", alias = "d")]
    D,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Suite {
    TwistEq,
    Ybe,
    Unitarity,
    Cybe,
    Coproducts,
    Frobenius,
    All,
}

const ALL_SUITES: [Suite; 6] =
    [Suite::TwistEq, Suite::Ybe, Suite::Unitarity, Suite::Cybe, Suite::Coproducts, Suite::Frobenius];

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Config(format!("{}: {e}", path.display())))
}

fn load_chain(path: &Path) -> Result<(ChainConfig, ChainSpec)> {
    let cfg = ChainConfig::parse(&read(path)?)?;
    let chain = cfg.build()?;
    Ok((cfg, chain))
}

fn report_line(r: &VerificationReport) -> String {
    let mut s = if r.pass { format!("PASS {}", r.name) } else { format!("FAIL {} residual={}", r.name, r.residual) };
    for f in &r.failures {
        s.push_str(&format!("\n    - {f}"));
    }
    s
}

fn reports_json(rs: &[VerificationReport]) -> String {
    let v: Vec<serde_json::Value> = rs
        .iter()
        .map(|r| serde_json::json!({"name": r.name, "pass": r.pass, "residual": r.residual, "failures": r.failures}))
        .collect();
    serde_json::to_string_pretty(&v).expect("plain data serializes")
}

fn algebra_info(out: &mut dyn Write, series: SeriesArg, rank: usize) -> Result<i32> {
    let s = match series {
        SeriesArg::B => Series::B,
        SeriesArg::D => Series::D,
    };
    let model = build_algebra(s, rank)?;
    let m = model.dim();
    let grad = gradation_and_pmax(&model)?;
    let real = realization_check(&model)?;
    let lines = [
        format!("algebra so({m}) series {s:?} rank {rank}"),
        format!("dim {}", model.algebra_dim()),
        format!("positive roots {}", model.positive_roots().len()),
        format!("borel dim {}", model.borel_basis().len()),
        format!("max links {}", max_links(m)),
        format!("p_max {}", grad.p_max),
        format!("terminal so(3) {}", if has_terminal_so3(m) { "yes" } else { "no" }),
        report_line(&real),
        report_line(&grad.checks),
    ];
    writeln!(out, "{}", lines.join("\n")).ok();
    Ok(if real.pass && grad.checks.pass { EXIT_PASS } else { EXIT_FAIL })
}

fn chain_build(out: &mut dyn Write, config: &Path) -> Result<i32> {
    let (cfg, chain) = load_chain(config)?;
    let carrier = carrier_basis(&chain)?;
    writeln!(out, "chain so({}) style {}", chain.model().dim(), cfg.style).ok();
    writeln!(out, "factors {}", chain.factors().len()).ok();
    for (i, f) in chain.factors().iter().enumerate() {
        writeln!(out, "  {i}: {}", f.kind).ok();
    }
    writeln!(out, "tensor dim {}", chain.tensor_dim()).ok();
    writeln!(out, "carrier dim {} (borel {})", carrier.dim, carrier.borel_dim).ok();
    Ok(EXIT_PASS)
}

fn rmatrix_cmd(out: &mut dyn Write, config: &Path, format: Format, dest: Option<&Path>) -> Result<i32> {
    let (_, chain) = load_chain(config)?;
    let (r, _) = r_from_chain(&chain)?;
    let text = match format {
        Format::Json => emit_matrix(&r.mat),
        Format::Text => render_text(&r.mat)?,
    };
    match dest {
        Some(p) => std::fs::write(p, text + "\n").map_err(|e| Error::Config(format!("{}: {e}", p.display())))?,
        None => {
            writeln!(out, "{text}").ok();
        }
    }
    Ok(EXIT_PASS)
}

fn chain_suite(cfg: &ChainConfig, chain: &ChainSpec, suite: Suite) -> Result<Vec<VerificationReport>> {
    let model = &chain.model_arc();
    let style = cfg.style()?;
    Ok(match suite {
        Suite::TwistEq => vec![verify_twist_equation(chain)?],
        Suite::Ybe => vec![ybe_check(&r_from_chain(chain)?.0)?],
        Suite::Unitarity => vec![r_from_chain(chain)?.1],
        Suite::Cybe => {
            let params = cfg.params()?;
            let r = expected_classical_r(model, style, &params)?;
            let semi = semiclassical_extract(model.clone(), style, &params, None)?;
            vec![cybe_check_matrix(&r, model.dim())?, semi.report]
        }
        Suite::Coproducts => {
            let mut v = Vec::new();
            for l in &cfg.links {
                v.push(coproduct_table_check(model, l.k)?);
                v.push(primitivity_and_so_g3(model, l.k)?);
            }
            v
        }
        Suite::Frobenius => {
            let links = cfg.links.iter().map(|l| l.k + 1).max().unwrap_or(0);
            let mut present = vec![false; links];
            for l in &cfg.links {
                present[l.k] = true;
            }
            let delta: Vec<bool> = match style {
                ChainStyle::Full => present.clone(),
                ChainStyle::Canonical => vec![false; links],
            };
            let (s, w) = omega_forms(chain, &present, &delta, cfg.terminal_short_jordanian.is_some(), &[])?;
            let mut rep = VerificationReport::passed(format!("carrier 2-cocycle so({}) dim {}", model.dim(), s.dim()));
            if !w.is_nondegenerate() {
                rep.fail("form is degenerate on the carrier");
            }
            if !cocycle_tests(&w, &s).0 {
                rep.fail("form is not a cocycle");
            }
            let mut v = vec![rep];
            let k = model.dim() / 2 / 2;
            if k >= 1 {
                let l = subalgebra_lkm(model, k)?;
                let (_, nd) = gram_and_nondegeneracy(&gen_form_functional(model, k)?, &l)?;
                let mut rep = VerificationReport::passed(format!("L_({k},{}) Frobenius", model.dim()));
                if !nd {
                    rep.fail("Gram determinant is zero");
                }
                v.push(rep);
            }
            v
        }
        Suite::All => unreachable!("expanded by the caller"),
    })
}

fn verify_cmd(out: &mut dyn Write, args: &VerifyArgs) -> Result<i32> {
    let suites: Vec<Suite> = if args.suite == Suite::All { ALL_SUITES.to_vec() } else { vec![args.suite] };
    let threads = thread_count()?;
    let results: Vec<Result<Vec<VerificationReport>>> = if let Some(p) = &args.matrix {
        let r = RMatrix::from_matrix(parse_matrix(&read(p)?)?)?;
        if suites.iter().any(|s| !matches!(s, Suite::Ybe | Suite::Unitarity)) {
            return Err(Error::Config("--matrix supports only the ybe and unitarity suites".into()));
        }
        parallel_map(&suites, threads, |s| match s {
            Suite::Ybe => ybe_check(&r).map(|x| vec![x]),
            _ => unitarity_check(&r).map(|x| vec![x]),
        })
    } else {
        let path = args.config.as_ref().expect("clap enforces one input");
        let (cfg, chain) = load_chain(path)?;
        parallel_map(&suites, threads, |s| chain_suite(&cfg, &chain, *s))
    };
    let mut reports = Vec::new();
    for r in results {
        reports.extend(r?);
    }
    if args.json {
        writeln!(out, "{}", reports_json(&reports)).ok();
    } else {
        for r in &reports {
            writeln!(out, "{}", report_line(r)).ok();
        }
    }
    Ok(if reports.iter().all(|r| r.pass) { EXIT_PASS } else { EXIT_FAIL })
}

fn yangian_cmd(out: &mut dyn Write, config: &Path, u: &str, v: &str, untwisted: bool) -> Result<i32> {
    let (_, chain) = load_chain(config)?;
    let model = chain.model();
    let u: Scalar = u.parse().map_err(|e: Error| Error::Config(format!("--u: {e}")))?;
    let v: Scalar = v.parse().map_err(|e: Error| Error::Config(format!("--v: {e}")))?;
    let twist = if untwisted {
        YangianTwist::identity(model.dim())
    } else {
        YangianTwist::new(&chain_matrix(&chain)?, &chain_inverse(&chain)?, model.dim())?
    };
    let rep = spectral_ybe_check(model, &twist, &u, &v, LOCKED_K)?;
    writeln!(out, "{}", report_line(&rep)).ok();
    Ok(if rep.pass { EXIT_PASS } else { EXIT_FAIL })
}

fn golden_cmd(out: &mut dyn Write, config: &Path, golden: &Path, erratum: Option<&Path>) -> Result<i32> {
    let (_, chain) = load_chain(config)?;
    let (r, _) = r_from_chain(&chain)?;
    let (g, _) = load_golden(&read(golden)?)?;
    let diff = golden_compare(&r.mat, &g)?;
    writeln!(out, "mismatches {}", diff.mismatches.len()).ok();
    for l in diff.lines() {
        writeln!(out, "  {l}").ok();
    }
    let known = match erratum {
        Some(p) => Erratum::parse(&read(p)?)? == Erratum::from_diff(&diff),
        None => diff.is_match(),
    };
    if erratum.is_some() {
        writeln!(out, "erratum {}", if known { "matches" } else { "differs" }).ok();
    }
    Ok(if known { EXIT_PASS } else { EXIT_FAIL })
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> Result<i32> {
    match cli.command {
        Command::Algebra { command: AlgebraCommand::Info { series, rank } } => algebra_info(out, series, rank),
        Command::Chain { command: ChainCommand::Build { config } } => chain_build(out, &config),
        Command::Rmatrix { config, format, out: dest } => rmatrix_cmd(out, &config, format, dest.as_deref()),
        Command::Verify(args) => verify_cmd(out, &args),
        Command::Yangian { config, u, v, untwisted } => yangian_cmd(out, &config, &u, &v, untwisted),
        Command::Golden { command: GoldenCommand::Compare { config, golden, erratum } } => {
            golden_cmd(out, &config, &golden, erratum.as_deref())
        }
    }
}

/// Runs the CLI on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            write!(target, "{}", e.render()).ok();
            return code;
        }
    };
    match dispatch(cli, out) {
        Ok(code) => code,
        Err(e) => {
            writeln!(err, "error: {e}").ok();
            EXIT_USAGE
        }
    }
}
