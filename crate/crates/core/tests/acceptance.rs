//! Acceptance criteria 1–9. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any criterion fails.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::sync::Arc;
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use twistforge::algebra::{a_matrix, build_algebra, gradation_and_pmax, AlgebraModel, Root, Series};
use twistforge::chain::*;
use twistforge::cli::{run, EXIT_FAIL, EXIT_PASS};
use twistforge::frobenius::*;
use twistforge::io::{emit_matrix, golden_compare, load_golden, parse_matrix, Erratum};
use twistforge::linalg::{flip_and_k, Scalar, SparseMat, TransposeForm};
use twistforge::rmatrix::*;

type Outcome = Result<String, String>;

fn model(m: usize) -> Arc<AlgebraModel> {
    let (s, n) = Series::from_dim(m);
    Arc::new(build_algebra(s, n).expect("valid rank"))
}

fn data(rel: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(rel)
}

fn ensure(ok: bool, what: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what.into())
    }
}

fn e<T, E: std::fmt::Display>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|x| x.to_string())
}

fn within(start: Instant, limit: Duration, what: &str) -> Result<(), String> {
    let t = start.elapsed();
    ensure(t <= limit, format!("{what} took {:.1}s, limit {}s", t.as_secs_f64(), limit.as_secs()))
}

fn q(n: i64, d: i64) -> Scalar {
    Scalar::frac(n, d)
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let chain = e(build_chain(model(5), ChainStyle::Full, &ChainParams::unit(0)))?;
    let (r, unit) = e(r_from_chain(&chain))?;
    ensure(r.mat.shape() == (25, 25), "R is not 25x25")?;
    let ybe = e(ybe_check(&r))?;
    ensure(ybe.pass, format!("(a) {ybe}"))?;
    ensure(unit.pass, format!("(b) {unit}"))?;
    let (golden, _) = e(load_golden(&e(std::fs::read_to_string(data("golden/so5_full_chain_R.json")))?))?;
    let diff = e(golden_compare(&r.mat, &golden))?;
    let erratum = e(Erratum::parse(&e(std::fs::read_to_string(data("golden/so5_full_chain_R.erratum.json")))?))?;
    ensure(Erratum::from_diff(&diff) == erratum, "(c) golden mismatches differ from the shipped erratum")?;
    within(start, Duration::from_secs(10), "so(5) appendix run")?;
    Ok(format!(
        "QYBE dim 125 and R21 R = 1 exact; golden diff: {} mismatches, all enumerated in the erratum",
        diff.mismatches.len()
    ))
}

fn criterion_2() -> Outcome {
    let sets = [(Scalar::one(), Scalar::one()), (q(2, 3), q(-1, 5))];
    let mut m9 = Duration::ZERO;
    let mut count = 0;
    for m in [5, 7, 8, 9] {
        let md = model(m);
        let p = twistforge::algebra::max_links(m) - 1;
        for style in [ChainStyle::Canonical, ChainStyle::Full] {
            for (eta, tau) in &sets {
                let start = Instant::now();
                let c = e(build_chain(md.clone(), style, &ChainParams::uniform(p, eta.clone(), tau.clone())))?;
                let r = e(verify_twist_equation(&c))?;
                ensure(r.pass, format!("so({m}) {style:?} ({eta}, {tau}): {r}"))?;
                count += c.factors().len();
                if m == 9 {
                    m9 += start.elapsed();
                }
            }
        }
    }
    ensure(m9 <= Duration::from_secs(300), format!("so(9) took {:.1}s", m9.as_secs_f64()))?;
    Ok(format!("{count} prefixes exact in dimension M^3; so(9) in {:.1}s", m9.as_secs_f64()))
}

fn criterion_3() -> Outcome {
    for (m, k) in [(5, 0), (7, 0), (9, 0), (9, 1)] {
        let r = e(coproduct_table_check(&model(m), k))?;
        ensure(r.pass, format!("so({m}) k={k}: {r}"))?;
    }
    Ok("jordanian, extended and invariant coproduct tables exact for (5,0), (7,0), (9,0), (9,1)".into())
}

fn criterion_4() -> Outcome {
    for m in [5, 7, 9] {
        let md = model(m);
        for k in 0..twistforge::algebra::max_links(m) {
            let r = e(primitivity_and_so_g3(&md, k))?;
            ensure(r.pass, format!("so({m}) k={k}: {r}"))?;
        }
        if m >= 7 {
            ensure(!e(e_minus_is_primitive(&md, 0))?, format!("so({m}): E_(1-2) unexpectedly primitive"))?;
        }
    }
    Ok("H_(1-2), G_(1-2), G_(2-1) primitive; so_G(3) relations; matreshka and commutation exact for M = 5, 7, 9".into())
}

fn criterion_5() -> Outcome {
    for (k, m) in [(1, 5), (1, 6), (2, 8), (2, 9), (2, 10)] {
        let md = model(m);
        let l = e(subalgebra_lkm(&md, k))?;
        ensure(l.dim() == 2 * k * m - 4 * k * k, format!("dim L_({k},{m}) = {}", l.dim()))?;
        let (_, nd) = e(gram_and_nondegeneracy(&e(gen_form_functional(&md, k))?, &l))?;
        ensure(nd, format!("Gram of L_({k},{m}) is degenerate"))?;
    }
    for (k, m, expect) in [(1, 5, 0), (2, 9, 6)] {
        let md = model(m);
        let l = e(subalgebra_lkm(&md, k))?;
        let (s, n) = lkm_split(&l);
        let a0 = LinearFunctional::new(e(a_matrix(m, 2, 1).add(&a_matrix(m, m - 1, 1)))?);
        let st = e(stationary_and_transitivity(&l, &s, &n, &a0))?;
        ensure(st.transitive, format!("L_({k},{m}) not transitive"))?;
        ensure(st.dim() == expect, format!("stationary dim {} for L_({k},{m}), expected {expect}", st.dim()))?;
    }
    for (k, m) in [(1, 5), (2, 9)] {
        let md = model(m);
        let l = e(subalgebra_lkm(&md, k))?;
        for i in 1..=2 * k {
            for j in i + 1..=2 * k {
                let w = e(TwoCochain::wedge(&l, &e(h_star(&md, i))?, &e(h_star(&md, j))?))?;
                ensure(cocycle_tests(&w, &l) == (true, false), format!("H{i}*^H{j}* on L_({k},{m})"))?;
            }
        }
    }
    for (m, p) in [(5, 0), (8, 1), (9, 1)] {
        let c = e(build_chain(model(m), ChainStyle::Full, &ChainParams::unit(p)))?;
        let ones = vec![true; p + 1];
        let (_, both) = e(omega_forms(&c, &ones, &ones, false, &[]))?;
        let (_, plus) = e(omega_forms(&c, &ones, &vec![false; p + 1], false, &[]))?;
        ensure(both.is_nondegenerate(), format!("omega+- degenerate on so({m}) carrier"))?;
        ensure(!plus.is_nondegenerate(), format!("omega+ nondegenerate on so({m}) carrier"))?;
    }
    Ok("Gram, stationary, cocycle/coboundary and carrier-form checks exact".into())
}

fn criterion_6() -> Outcome {
    for m in [5, 8] {
        let md = model(m);
        let p = twistforge::algebra::max_links(m) - 1;
        let base = ChainParams::uniform(p, q(2, 3), q(-1, 5));
        let mut with_zeta = base.clone();
        with_zeta.reshetikhin.push(ReshetikhinTerm { i: SigmaName::Plus(0), j: SigmaName::G(p), zeta: q(3, 7) });
        for (name, params) in [("r_G", &base), ("r_RG", &with_zeta)] {
            let r = e(expected_classical_r(&md, ChainStyle::Full, params))?;
            let rep = e(cybe_check_matrix(&r, m))?;
            ensure(rep.pass, format!("{name} so({m}): {rep}"))?;
            let s = e(semiclassical_extract(md.clone(), ChainStyle::Full, params, None))?;
            ensure(s.report.pass, format!("semiclassical {name} so({m}): {}", s.report))?;
        }
    }
    Ok(format!("r_G, r_RG antisymmetric and CYBE-exact in dim M^3 for M = 5, 8; linear term of R(t) = {KAPPA}·r"))
}

fn criterion_7() -> Outcome {
    let md = model(5);
    let pts = [(q(2, 1), q(1, 1)), (q(1, 2), q(1, 3)), (q(-3, 1), q(5, 7))];
    let plain = YangianTwist::identity(5);
    let (p, _) = flip_and_k(5, TransposeForm::Plain);
    ensure(e(yangian_r(&md, &plain, &Scalar::zero(), LOCKED_K))? == p, "R(0) != P")?;
    for (u, v) in &pts {
        ensure(e(spectral_ybe_check(&md, &plain, u, v, LOCKED_K))?.pass, format!("untwisted at ({u}, {v})"))?;
    }
    let c = e(build_chain(md.clone(), ChainStyle::Full, &ChainParams::unit(0)))?;
    let tw = e(YangianTwist::new(&e(chain_matrix(&c))?, &e(chain_inverse(&c))?, 5))?;
    let passing = e(passing_k_conventions(&md, &tw, &pts))?;
    ensure(passing == vec![LOCKED_K], format!("passing K conventions {passing:?}"))?;
    Ok(format!("spectral YBE exact at 3 points, untwisted and twisted; R(0) = P; unique K = {LOCKED_K:?}"))
}

fn criterion_8() -> Outcome {
    for m in 5..=12 {
        let md = model(m);
        let g = e(gradation_and_pmax(&md))?;
        ensure(g.p_max == m / 4 + (m + 1) / 4, format!("p_max(so({m})) = {}", g.p_max))?;
        let mut seen: BTreeMap<Root, usize> = BTreeMap::new();
        for piece in &g.pieces {
            for r in std::iter::once(&piece.initial).chain(&piece.constituents) {
                *seen.entry(r.clone()).or_default() += 1;
            }
        }
        ensure(
            seen.len() == md.positive_roots().len() && md.positive_roots().iter().all(|r| seen.get(r) == Some(&1)),
            format!("gradation of so({m}) is not a partition of the positive roots"),
        )?;
        if m >= 7 {
            let (series, n) = Series::from_dim(m);
            let count = |r: usize| if series == Series::B { r * r } else { r * (r - 1) };
            ensure(md.positive_roots().len() == count(n), format!("|N+| of so({m})"))?;
            let diff = count(n) - count(n - 2);
            ensure(diff == 2 * (m - 3), format!("dim relation fails for so({m})"))?;
        }
        ensure(g.checks.pass, format!("{}", g.checks))?;
    }
    let mut dims = Vec::new();
    for (m, terminal, missing) in [(5, false, 0), (7, true, 0), (8, false, 0), (9, false, 0), (6, false, 1), (10, false, 1)] {
        let md = model(m);
        let mut params = ChainParams::unit(twistforge::algebra::max_links(m) - 1);
        if terminal {
            params.terminal = Some(Scalar::one());
        }
        let c = e(build_chain(md.clone(), ChainStyle::Full, &params))?;
        let carrier = e(carrier_basis(&c))?;
        let borel = md.borel_basis().len();
        ensure(carrier.dim + missing == borel, format!("carrier so({m}) dim {} vs borel {borel}", carrier.dim))?;
        dims.push(format!("so({m})={}", carrier.dim));
    }
    Ok(format!("p_max, gradation and dim relation for M = 5..12; carriers {}", dims.join(" ")))
}

fn cli(args: &[&str]) -> (i32, Vec<u8>) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(std::iter::once("twistforge").chain(args.iter().copied()), &mut out, &mut err);
    (code, out)
}

fn criterion_9() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x7715_7f0e);
    for _ in 0..100 {
        let (r, c) = (rng.gen_range(1..=64), rng.gen_range(1..=64));
        let n = rng.gen_range(0..=r * c / 4 + 1);
        let trip = (0..n).map(|_| {
            let re = q(rng.gen_range(-99..=99), rng.gen_range(1..=40));
            let im = q(rng.gen_range(-3..=3), rng.gen_range(1..=5));
            (rng.gen_range(0..r), rng.gen_range(0..c), Scalar::new(re.re().clone(), im.re().clone()))
        });
        let m = SparseMat::from_triplets(r, c, trip);
        let text = emit_matrix(&m);
        let back = e(parse_matrix(&text))?;
        ensure(back == m && emit_matrix(&back) == text, "JSON round trip is not the identity")?;
    }
    let cfg = data("configs/so5_full.json");
    let cfg = cfg.to_str().expect("utf-8 path");
    let a = cli(&["rmatrix", "--config", cfg, "--format", "json"]);
    let b = cli(&["rmatrix", "--config", cfg, "--format", "json"]);
    ensure(a == b && a.0 == EXIT_PASS, "rmatrix output is not byte-identical across runs")?;
    let pass = cli(&["verify", "--config", cfg, "--suite", "ybe"]);
    ensure(pass.0 == EXIT_PASS, format!("ybe suite exit {}", pass.0))?;
    let x = SparseMat::unit(5, 5, 0, 1);
    let bad = e(SparseMat::identity(25).add(&x.kron(&x.transpose())))?;
    let path = std::env::temp_dir().join(format!("twistforge-acceptance-{}.json", std::process::id()));
    e(std::fs::write(&path, emit_matrix(&bad)))?;
    let fail = cli(&["verify", "--matrix", path.to_str().expect("utf-8 path"), "--suite", "ybe"]);
    std::fs::remove_file(&path).ok();
    ensure(fail.0 == EXIT_FAIL, format!("negative control exit {}", fail.0))?;
    Ok("100 random JSON round trips; byte-identical reruns; exit 0 on pass, 1 on the ybe negative control".into())
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("1 appendix reproduction", criterion_1),
        ("2 twist equation", criterion_2),
        ("3 coproduct tables", criterion_3),
        ("4 deformed carrier", criterion_4),
        ("5 frobenius", criterion_5),
        ("6 classical limits", criterion_6),
        ("7 yangian", criterion_7),
        ("8 combinatorics", criterion_8),
        ("9 infrastructure", criterion_9),
    ];
    let mut failed = 0;
    for (name, f) in criteria {
        let start = Instant::now();
        let outcome = f();
        let t = start.elapsed().as_secs_f64();
        match outcome {
            Ok(msg) => println!("PASS criterion {name} ({t:.2}s): {msg}"),
            Err(msg) => {
                failed += 1;
                println!("FAIL criterion {name} ({t:.2}s): {msg}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 9 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
