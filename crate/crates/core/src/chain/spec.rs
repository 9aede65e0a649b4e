//! Chain specifications: ordered products of twist factors.

use std::sync::Arc;

use crate::algebra::{has_terminal_so3, max_links, AlgebraModel};
use crate::error::{Error, Result};
use crate::expr::{eval_in_rep, factor_exponent, FactorKind, SigmaRef, TwistFactor};
use crate::linalg::{Scalar, SparseMat};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ChainStyle {
    /// Jordanian and extension factors per link.
    Canonical,
    /// Canonical plus one deformed jordanian factor per link.
    Full,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkParams {
    pub k: usize,
    pub eta: Scalar,
    pub tau: Scalar,
}

impl LinkParams {
    pub fn unit(k: usize) -> Self {
        LinkParams { k, eta: Scalar::one(), tau: Scalar::one() }
    }
}

/// Which commuting primitive a Reshetikhin term refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SigmaName {
    Plus(usize),
    G(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReshetikhinTerm {
    pub i: SigmaName,
    pub j: SigmaName,
    pub zeta: Scalar,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainParams {
    pub links: Vec<LinkParams>,
    pub reshetikhin: Vec<ReshetikhinTerm>,
    /// η of the terminal short jordanian, if included.
    pub terminal: Option<Scalar>,
}

impl ChainParams {
    /// Links `0..=p` at η = τ = 1, nothing else.
    pub fn unit(p: usize) -> Self {
        ChainParams { links: (0..=p).map(LinkParams::unit).collect(), reshetikhin: Vec::new(), terminal: None }
    }

    /// Links `0..=p` with the same (η, τ) on every link.
    pub fn uniform(p: usize, eta: Scalar, tau: Scalar) -> Self {
        ChainParams {
            links: (0..=p).map(|k| LinkParams { k, eta: eta.clone(), tau: tau.clone() }).collect(),
            reshetikhin: Vec::new(),
            terminal: None,
        }
    }
}

fn check_sigmas_commute(model: &AlgebraModel, terms: &[(SigmaRef, SigmaRef, Scalar)]) -> Result<()> {
    let mut sigmas: Vec<(String, SparseMat)> = Vec::new();
    for (a, b, _) in terms {
        for s in [a, b] {
            let name = s.to_string();
            if !sigmas.iter().any(|(n, _)| *n == name) {
                sigmas.push((name, eval_in_rep(&s.expr(model)?, model)?));
            }
        }
    }
    for (i, (na, a)) in sigmas.iter().enumerate() {
        for (nb, b) in &sigmas[i + 1..] {
            if !a.commutator(b)?.is_zero() {
                return Err(Error::InvalidChain(format!("{na} and {nb} do not commute")));
            }
        }
    }
    Ok(())
}

/// Ordered product of twist factors, leftmost first; the rightmost factor
/// acts first.
#[derive(Clone, Debug)]
pub struct ChainSpec {
    model: Arc<AlgebraModel>,
    style: Option<ChainStyle>,
    factors: Vec<TwistFactor>,
}

pub fn build_chain(model: Arc<AlgebraModel>, style: ChainStyle, params: &ChainParams) -> Result<ChainSpec> {
    let m = model.dim();
    let max = max_links(m);
    if !params.links.windows(2).all(|w| w[0].k < w[1].k) {
        return Err(Error::InvalidChain("link indices must be strictly increasing".into()));
    }
    if let Some(l) = params.links.iter().find(|l| l.k >= max) {
        return Err(Error::LinkOutOfRange { k: l.k, m, max });
    }
    let link = |k: usize| params.links.iter().find(|l| l.k == k);
    let mut factors = Vec::new();

    if !params.reshetikhin.is_empty() {
        let mut terms = Vec::new();
        for t in &params.reshetikhin {
            let resolve = |s: SigmaName| -> Result<SigmaRef> {
                let k = match s {
                    SigmaName::Plus(k) | SigmaName::G(k) => k,
                };
                let l = link(k).ok_or_else(|| Error::InvalidChain(format!("Reshetikhin term references absent link {k}")))?;
                match s {
                    SigmaName::Plus(_) => Ok(SigmaRef::Plus { k, eta: l.eta.clone() }),
                    SigmaName::G(_) if style == ChainStyle::Full => {
                        Ok(SigmaRef::G { k, eta: l.eta.clone(), tau: l.tau.clone() })
                    }
                    SigmaName::G(_) => {
                        Err(Error::InvalidChain(format!("sigma_g:{k} does not exist in a canonical chain")))
                    }
                }
            };
            terms.push((resolve(t.i)?, resolve(t.j)?, t.zeta.clone()));
        }
        check_sigmas_commute(&model, &terms)?;
        factors.push(factor_exponent(&model, FactorKind::Reshetikhin { terms })?);
    }
    if let Some(eta) = &params.terminal {
        if !has_terminal_so3(m) {
            return Err(Error::InvalidChain(format!("so({m}) has no terminal so(3)")));
        }
        factors.push(factor_exponent(&model, FactorKind::TerminalShortJordanian { eta: eta.clone() })?);
    }
    for l in params.links.iter().rev() {
        if style == ChainStyle::Full {
            let kind = FactorKind::DeformedJordanian { k: l.k, eta: l.eta.clone(), tau: l.tau.clone() };
            factors.push(factor_exponent(&model, kind)?);
        }
        factors.push(factor_exponent(&model, FactorKind::Extension { k: l.k, eta: l.eta.clone() })?);
        factors.push(factor_exponent(&model, FactorKind::Jordanian { k: l.k, eta: l.eta.clone() })?);
    }
    let chain = ChainSpec { model, style: Some(style), factors };
    chain.validate()?;
    Ok(chain)
}

impl ChainSpec {
    /// A chain from explicit factors (leftmost first), e.g. for reordered
    /// negative controls. Parameter consistency is still enforced.
    pub fn from_factors(model: Arc<AlgebraModel>, factors: Vec<TwistFactor>) -> Result<Self> {
        let chain = ChainSpec { model, style: None, factors };
        chain.validate()?;
        Ok(chain)
    }

    /// Factors of one link must share η.
    fn validate(&self) -> Result<()> {
        let mut seen: Vec<(usize, &Scalar)> = Vec::new();
        for f in &self.factors {
            if let (Some(k), Some(eta)) = (f.kind.link(), f.kind.eta()) {
                match seen.iter().find(|(j, _)| *j == k) {
                    Some((_, e)) if *e != eta => {
                        return Err(Error::IncompatibleParams(format!("link {k} uses eta = {e} and eta = {eta}")));
                    }
                    Some(_) => {}
                    None => seen.push((k, eta)),
                }
            }
        }
        Ok(())
    }

    pub fn model(&self) -> &AlgebraModel {
        &self.model
    }

    pub fn model_arc(&self) -> Arc<AlgebraModel> {
        self.model.clone()
    }

    pub fn style(&self) -> Option<ChainStyle> {
        self.style
    }

    pub fn factors(&self) -> &[TwistFactor] {
        &self.factors
    }

    /// The product of the rightmost `n` factors.
    pub fn prefix(&self, n: usize) -> ChainSpec {
        let len = self.factors.len();
        ChainSpec { model: self.model.clone(), style: None, factors: self.factors[len - n..].to_vec() }
    }

    /// Dimension `M²` of the carrier space `V⊗V`.
    pub fn tensor_dim(&self) -> usize {
        self.model.dim() * self.model.dim()
    }
}

/// `F` on `V⊗V`: the ordered product of the factor matrices.
pub fn chain_matrix(chain: &ChainSpec) -> Result<SparseMat> {
    let mut acc = SparseMat::identity(chain.tensor_dim());
    for f in chain.factors() {
        acc = acc.mul(&f.matrix(chain.model())?)?;
    }
    Ok(acc)
}

/// `F⁻¹`, as the reversed product of the factor inverses.
pub fn chain_inverse(chain: &ChainSpec) -> Result<SparseMat> {
    let mut acc = SparseMat::identity(chain.tensor_dim());
    for f in chain.factors() {
        acc = f.inverse_matrix(chain.model())?.mul(&acc)?;
    }
    Ok(acc)
}
