//! Family selection shared by the command line and the service.

use clap::Args;
use graceful_core::{FamilySpec, StrategyId};
use serde::{Deserialize, Serialize};

use crate::AppError;

/// One entry of the family catalog.
#[derive(Debug, Clone, Serialize)]
pub struct FamilyInfo {
    pub family: &'static str,
    /// Parameter names in the order the family takes them.
    pub params: &'static [&'static str],
    /// Smallest admissible value of each parameter.
    pub min: &'static [usize],
    pub example: &'static str,
}

pub const CATALOG: [FamilyInfo; 13] = [
    FamilyInfo { family: "path", params: &["n"], min: &[1], example: "path(5)" },
    FamilyInfo { family: "cycle", params: &["n"], min: &[3], example: "cycle(4)" },
    FamilyInfo { family: "complete", params: &["n"], min: &[1], example: "complete(4)" },
    FamilyInfo { family: "bipartite", params: &["p", "q"], min: &[1, 1], example: "bipartite(2,3)" },
    FamilyInfo { family: "star", params: &["q"], min: &[1], example: "star(3)" },
    FamilyInfo { family: "caterpillar", params: &["legs"], min: &[0], example: "caterpillar(1,2)" },
    FamilyInfo { family: "wheel", params: &["n"], min: &[3], example: "wheel(4)" },
    FamilyInfo { family: "gear", params: &["n"], min: &[3], example: "gear(3)" },
    FamilyInfo { family: "helm", params: &["n"], min: &[3], example: "helm(3)" },
    FamilyInfo { family: "web", params: &["t", "n"], min: &[2, 3], example: "web(2,3)" },
    FamilyInfo { family: "hypercube", params: &["n"], min: &[1], example: "hypercube(3)" },
    FamilyInfo { family: "prism", params: &["r"], min: &[3], example: "prism(3)" },
    FamilyInfo { family: "pathpower", params: &["n", "k"], min: &[1, 1], example: "pathpower(5,2)" },
];

/// A family keyword with named parameters, or a full spec such as `wheel(4)`
/// in `family`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Args, Serialize, Deserialize)]
pub struct FamilyArgs {
    /// Family keyword (path, cycle, wheel, ...) or a full spec like `wheel(4)`.
    #[arg(long)]
    pub family: Option<String>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub p: Option<usize>,
    #[arg(long)]
    pub q: Option<usize>,
    #[arg(long)]
    pub r: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub t: Option<usize>,
    /// Caterpillar leaf counts, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub legs: Option<Vec<usize>>,
}

impl FamilyArgs {
    fn get(&self, name: &str) -> Option<usize> {
        match name {
            "n" => self.n,
            "p" => self.p,
            "q" => self.q,
            "r" => self.r,
            "k" => self.k,
            "t" => self.t,
            _ => None,
        }
    }

    /// The selected family. `fallback` names the family when none is given.
    pub fn resolve(&self, fallback: Option<&str>) -> Result<FamilySpec, AppError> {
        let family = self
            .family
            .as_deref()
            .or(fallback)
            .ok_or_else(|| AppError::BadInput("no family given".into()))?;
        let spec = if family.contains('(') {
            family.parse::<FamilySpec>()?
        } else {
            let info = CATALOG
                .iter()
                .find(|i| i.family == family.to_ascii_lowercase())
                .ok_or_else(|| AppError::BadInput(format!("unknown family {family:?}")))?;
            let params = if info.family == "caterpillar" {
                self.legs.clone().ok_or_else(|| AppError::BadInput("caterpillar needs --legs".into()))?
            } else {
                info.params
                    .iter()
                    .map(|&name| {
                        self.get(name)
                            .ok_or_else(|| AppError::BadInput(format!("{} needs parameter {name}", info.family)))
                    })
                    .collect::<Result<_, _>>()?
            };
            FamilySpec::from_parts(info.family, &params)?
        };
        spec.validate()?;
        Ok(spec)
    }
}

/// Family a strategy is usually checked on, when the caller names none.
pub fn default_family(id: StrategyId) -> &'static str {
    match id {
        StrategyId::AliceP1p2 | StrategyId::AliceP3First | StrategyId::BobPath | StrategyId::BobP3First => "path",
        StrategyId::AliceK3 | StrategyId::BobK4 => "complete",
        StrategyId::AliceStarFirst => "star",
        StrategyId::BobCycle => "cycle",
        StrategyId::BobBipartite => "bipartite",
        StrategyId::BobCaterpillar => "caterpillar",
        StrategyId::BobWheelFirst | StrategyId::BobWheelW3w4w5 => "wheel",
        StrategyId::BobGear => "gear",
        StrategyId::BobHelm => "helm",
        StrategyId::BobWeb => "web",
        StrategyId::BobHypercube => "hypercube",
        StrategyId::BobPrism => "prism",
        StrategyId::BobPathpower2 => "pathpower",
    }
}
