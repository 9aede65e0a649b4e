//! Chain specification documents.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::algebra::{build_algebra, AlgebraModel, Series};
use crate::chain::{build_chain, ChainParams, ChainSpec, ChainStyle, LinkParams, ReshetikhinTerm, SigmaName};
use crate::error::{Error, Result};
use crate::linalg::Scalar;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraSection {
    pub series: String,
    #[serde(rename = "N")]
    pub n: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LinkSection {
    pub k: usize,
    pub eta: String,
    pub tau: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReshetikhinSection {
    pub i: String,
    pub j: String,
    pub zeta: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TerminalSection {
    pub eta: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChainConfig {
    pub algebra: AlgebraSection,
    pub style: String,
    pub links: Vec<LinkSection>,
    #[serde(default)]
    pub reshetikhin: Vec<ReshetikhinSection>,
    #[serde(default)]
    pub terminal_short_jordanian: Option<TerminalSection>,
}

fn scalar(field: &str, s: &str) -> Result<Scalar> {
    s.parse().map_err(|e: Error| Error::Config(format!("{field}: {e}")))
}

fn sigma_name(s: &str) -> Result<SigmaName> {
    let bad = || Error::Config(format!("unknown sigma {s:?}; expected sigma_plus:k or sigma_g:k"));
    let (kind, k) = s.split_once(':').ok_or_else(bad)?;
    let k: usize = k.parse().map_err(|_| bad())?;
    match kind {
        "sigma_plus" => Ok(SigmaName::Plus(k)),
        "sigma_g" => Ok(SigmaName::G(k)),
        _ => Err(bad()),
    }
}

impl ChainConfig {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Config(e.to_string()))
    }

    pub fn model(&self) -> Result<Arc<AlgebraModel>> {
        let series = match self.algebra.series.as_str() {
            "B" => Series::B,
            "D" => Series::D,
            s => return Err(Error::Config(format!("unknown series {s:?}"))),
        };
        Ok(Arc::new(build_algebra(series, self.algebra.n)?))
    }

    pub fn style(&self) -> Result<ChainStyle> {
        match self.style.as_str() {
            "canonical" => Ok(ChainStyle::Canonical),
            "full" => Ok(ChainStyle::Full),
            s => Err(Error::Config(format!("unknown style {s:?}"))),
        }
    }

    pub fn params(&self) -> Result<ChainParams> {
        let links = self
            .links
            .iter()
            .map(|l| Ok(LinkParams { k: l.k, eta: scalar("eta", &l.eta)?, tau: scalar("tau", &l.tau)? }))
            .collect::<Result<_>>()?;
        let reshetikhin = self
            .reshetikhin
            .iter()
            .map(|r| Ok(ReshetikhinTerm { i: sigma_name(&r.i)?, j: sigma_name(&r.j)?, zeta: scalar("zeta", &r.zeta)? }))
            .collect::<Result<_>>()?;
        let terminal = self.terminal_short_jordanian.as_ref().map(|t| scalar("eta", &t.eta)).transpose()?;
        Ok(ChainParams { links, reshetikhin, terminal })
    }

    pub fn build(&self) -> Result<ChainSpec> {
        build_chain(self.model()?, self.style()?, &self.params()?)
    }
}
