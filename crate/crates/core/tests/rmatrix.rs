use std::sync::Arc;

use twistforge::algebra::{build_algebra, AlgebraModel, Series};
use twistforge::chain::*;
use twistforge::expr::SigmaRef;
use twistforge::linalg::{flip_and_k, Scalar, SparseMat, TransposeForm};
use twistforge::rmatrix::*;

fn model(m: usize) -> Arc<AlgebraModel> {
    let (s, n) = Series::from_dim(m);
    Arc::new(build_algebra(s, n).unwrap())
}

fn q(n: i64, d: i64) -> Scalar {
    Scalar::frac(n, d)
}

fn with_zeta(mut p: ChainParams, zeta: Scalar) -> ChainParams {
    p.reshetikhin.push(ReshetikhinTerm { i: SigmaName::Plus(0), j: SigmaName::G(0), zeta });
    p
}

#[test]
fn so5_full_chain_r_is_triangular_solution() {
    let c = build_chain(model(5), ChainStyle::Full, &ChainParams::unit(0)).unwrap();
    let (r, _) = r_from_chain(&c).unwrap();
    assert_eq!(r.mat.shape(), (25, 25));
    assert!(ybe_check(&r).unwrap().pass);
    assert!(unitarity_check(&r).unwrap().pass);
}

#[test]
fn identity_twist_gives_identity_r() {
    let (r, rep) = r_from_twist(&SparseMat::identity(9)).unwrap();
    assert!(rep.pass);
    assert!(r.mat.is_identity());
}

#[test]
fn flip_solves_ybe() {
    let (p, _) = flip_and_k(3, TransposeForm::Plain);
    assert!(ybe_check(&RMatrix::from_matrix(p).unwrap()).unwrap().pass);
}

fn one_plus(x: &SparseMat, y: &SparseMat) -> RMatrix {
    let n = x.nrows() * y.nrows();
    RMatrix::from_matrix(SparseMat::identity(n).add(&x.kron(y)).unwrap()).unwrap()
}

#[test]
fn ybe_square_zero_ansatz_passes() {
    // every cross term of 1 + X⊗X carries X² = 0
    let e = SparseMat::unit(5, 5, 0, 1);
    assert!(ybe_check(&one_plus(&e, &e)).unwrap().pass);
}

#[test]
fn ybe_negative_control() {
    let e = SparseMat::unit(5, 5, 0, 1);
    let rep = ybe_check(&one_plus(&e, &e.transpose())).unwrap();
    assert!(!rep.pass);
}

#[test]
fn reshetikhin_chain_twist_equation() {
    let p = with_zeta(ChainParams::uniform(0, q(2, 3), q(-1, 5)), q(3, 7));
    let c = build_chain(model(5), ChainStyle::Full, &p).unwrap();
    assert!(verify_twist_equation(&c).unwrap().pass);
    let (r, _) = r_from_chain(&c).unwrap();
    assert!(ybe_check(&r).unwrap().pass);
    assert!(unitarity_check(&r).unwrap().pass);
}

#[test]
fn canonical_chain_rejects_sigma_g() {
    let p = with_zeta(ChainParams::unit(0), Scalar::one());
    assert!(build_chain(model(5), ChainStyle::Canonical, &p).is_err());
}

fn classical(m: usize, zeta: bool) -> SparseMat {
    let md = model(m);
    let p = if zeta { with_zeta(ChainParams::uniform(0, q(2, 3), q(-1, 5)), q(3, 7)) } else { ChainParams::unit(md.rank() / 2 - 1) };
    expected_classical_r(&md, ChainStyle::Full, &p).unwrap()
}

#[test]
fn classical_r_cybe_so5_so8() {
    for m in [5, 8] {
        for z in [false, true] {
            let r = classical(m, z);
            let rep = cybe_check_matrix(&r, m).unwrap();
            assert!(rep.pass, "so({m}) zeta={z}: {rep}");
        }
    }
}

#[test]
fn classical_r_direct_build() {
    let md = model(5);
    let zeta = [(
        SigmaRef::Plus { k: 0, eta: Scalar::one() },
        SigmaRef::G { k: 0, eta: Scalar::one(), tau: Scalar::one() },
        Scalar::int(2),
    )];
    let r = classical_r_build(&md, &[ClassicalLink { k: 0, eta: Scalar::one(), xi: Some(Scalar::one()) }], &zeta).unwrap();
    assert!(cybe_check(&r, &md).unwrap().pass);
}

#[test]
fn cybe_negative_control() {
    let e = SparseMat::unit(2, 2, 0, 1);
    let h = SparseMat::unit(2, 2, 0, 0);
    let r = h.kron(&e).sub(&e.kron(&h)).unwrap().add(&e.transpose().kron(&e).sub(&e.kron(&e.transpose())).unwrap()).unwrap();
    assert!(!cybe_check_matrix(&r, 2).unwrap().pass);
}

#[test]
fn semiclassical_so5_full() {
    let p = ChainParams::uniform(0, q(2, 3), q(-1, 5));
    let s = semiclassical_extract(model(5), ChainStyle::Full, &p, None).unwrap();
    assert!(s.report.pass, "{}", s.report);
    assert_eq!(KAPPA, -1);
}

#[test]
fn semiclassical_so5_reshetikhin() {
    let p = with_zeta(ChainParams::uniform(0, q(2, 3), q(-1, 5)), q(3, 7));
    let s = semiclassical_extract(model(5), ChainStyle::Full, &p, None).unwrap();
    assert!(s.report.pass, "{}", s.report);
}

#[test]
fn semiclassical_so5_canonical() {
    let s = semiclassical_extract(model(5), ChainStyle::Canonical, &ChainParams::unit(0), None).unwrap();
    assert!(s.report.pass, "{}", s.report);
}

#[test]
fn semiclassical_degree_overflow_detected() {
    let p = ChainParams::unit(0);
    let e = semiclassical_extract(model(5), ChainStyle::Full, &p, Some(1));
    assert!(e.is_err());
}

fn points() -> Vec<(Scalar, Scalar)> {
    vec![(q(2, 1), q(1, 1)), (q(1, 2), q(1, 3)), (q(-3, 1), q(5, 7))]
}

#[test]
fn yangian_untwisted() {
    let md = model(5);
    let tw = YangianTwist::identity(5);
    let (p, _) = flip_and_k(5, TransposeForm::Plain);
    assert_eq!(yangian_r(&md, &tw, &Scalar::zero(), LOCKED_K).unwrap(), p);
    for (u, v) in points() {
        assert!(spectral_ybe_check(&md, &tw, &u, &v, LOCKED_K).unwrap().pass);
    }
    assert!(yangian_polynomiality_check(&md, &tw, LOCKED_K).unwrap().pass);
}

#[test]
fn yangian_twisted_locks_antidiagonal_k() {
    let md = model(5);
    let c = build_chain(md.clone(), ChainStyle::Full, &ChainParams::unit(0)).unwrap();
    let tw = YangianTwist::new(&chain_matrix(&c).unwrap(), &chain_inverse(&c).unwrap(), 5).unwrap();
    let pass = passing_k_conventions(&md, &tw, &points()).unwrap();
    assert_eq!(pass, vec![TransposeForm::Antidiagonal]);
    assert_eq!(LOCKED_K, TransposeForm::Antidiagonal);
}

#[test]
fn yangian_pole_is_error() {
    let md = model(5);
    assert!(yangian_r(&md, &YangianTwist::identity(5), &q(-3, 2), LOCKED_K).is_err());
}
