//! Run configuration: command-line flags layered over an optional JSON file.

use std::path::Path;

use flagherm::flag::FlagManifold;
use flagherm::rootsys::Family;
use flagherm::scalar::{parse_rational, Rational};
use flagherm::{Error, Result};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub enum LambdaSpec {
    /// One Killing-normalized metric (all parameters 1).
    #[default]
    Killing,
    Explicit(Vec<String>),
    /// Seeded draws with numerators and denominators in `1..=20`.
    Random,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub enum EpsilonSpec {
    /// All classes `+1` (the canonical structure).
    #[default]
    Canonical,
    Explicit(Vec<i8>),
    /// Every one of the `2^classes` assignments.
    All,
}

/// How much of the sub-flag certificate to compute.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CertifyLevel {
    /// Second fundamental form, mean curvature and coderivatives.
    Core,
    /// Adds the Gauss formula, normal terms and class inheritance.
    Full,
}

impl std::str::FromStr for CertifyLevel {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "core" => Ok(Self::Core),
            "full" => Ok(Self::Full),
            other => Err(Error::Config(format!("certify level {other:?} is not core or full"))),
        }
    }
}

/// Everything a command needs; simple-root indices are 1-based here.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RunConfig {
    pub family: Family,
    pub rank: usize,
    pub theta: Vec<usize>,
    pub theta_prime: Option<Vec<usize>>,
    #[serde(with = "lambda_text")]
    pub lambda: LambdaSpec,
    #[serde(with = "epsilon_text")]
    pub epsilon: EpsilonSpec,
    pub seed: u64,
    /// Random metric draws per configuration; each command has a default.
    pub samples: Option<usize>,
    pub max_rank: usize,
    /// Sweep every `Theta` as well (sub-flag verification).
    pub sweep: bool,
    pub certify: Option<CertifyLevel>,
    pub json: bool,
    pub approx: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            family: Family::A,
            rank: 2,
            theta: Vec::new(),
            theta_prime: None,
            lambda: LambdaSpec::Killing,
            epsilon: EpsilonSpec::Canonical,
            seed: 0,
            samples: None,
            max_rank: 3,
            sweep: false,
            certify: None,
            json: false,
            approx: false,
        }
    }
}

impl RunConfig {
    pub fn samples_or(&self, default: usize) -> usize {
        self.samples.unwrap_or(default).max(1)
    }

    pub fn from_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Config(e.to_string()))
    }

    /// 0-based `Theta` after range checks.
    pub fn theta0(&self) -> Result<Vec<usize>> {
        to_zero_based(&self.theta, self.rank)
    }

    pub fn theta_prime0(&self) -> Result<Option<Vec<usize>>> {
        self.theta_prime.as_deref().map(|t| to_zero_based(t, self.rank)).transpose()
    }

    /// Explicit metric parameters, checked against the flag's class count.
    pub fn explicit_lambda(&self, flag: &FlagManifold) -> Result<Option<Vec<Rational>>> {
        match &self.lambda {
            LambdaSpec::Killing => Ok(Some(vec![Rational::from_integer(1.into()); flag.num_classes()])),
            LambdaSpec::Explicit(v) => v.iter().map(|s| parse_rational(s)).collect::<Result<_>>().map(Some),
            LambdaSpec::Random => Ok(None),
        }
    }
}

fn to_zero_based(one_based: &[usize], rank: usize) -> Result<Vec<usize>> {
    one_based
        .iter()
        .map(|&i| {
            if (1..=rank).contains(&i) {
                Ok(i - 1)
            } else {
                Err(Error::ThetaOutOfRange { index: i, rank })
            }
        })
        .collect()
}

/// `"1,2,5"`; the empty string is the empty set.
pub fn parse_index_list(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| Error::Config(format!("bad simple-root index {t:?}"))))
        .collect()
}

/// `"1,1,2"`, `"random"` or `"killing"`.
pub fn parse_lambda(s: &str) -> Result<LambdaSpec> {
    match s.trim() {
        "random" => Ok(LambdaSpec::Random),
        "killing" => Ok(LambdaSpec::Killing),
        list => {
            let items: Vec<String> = list.split(',').map(|t| t.trim().to_string()).collect();
            for t in &items {
                parse_rational(t)?;
            }
            Ok(LambdaSpec::Explicit(items))
        }
    }
}

/// `"+,-,+"` (also `1,-1,1`) or `"all"`.
pub fn parse_epsilon(s: &str) -> Result<EpsilonSpec> {
    match s.trim() {
        "all" => Ok(EpsilonSpec::All),
        "canonical" => Ok(EpsilonSpec::Canonical),
        list => list
            .split(',')
            .map(|t| match t.trim() {
                "+" | "1" | "+1" => Ok(1),
                "-" | "-1" => Ok(-1),
                other => Err(Error::Config(format!("bad sign {other:?}"))),
            })
            .collect::<Result<_>>()
            .map(EpsilonSpec::Explicit),
    }
}

mod lambda_text {
    use super::*;
    use serde::{Deserializer, Serializer};

    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Raw {
        Word(String),
        List(Vec<serde_json::Value>),
    }

    pub fn serialize<S: Serializer>(v: &LambdaSpec, s: S) -> std::result::Result<S::Ok, S::Error> {
        match v {
            LambdaSpec::Killing => s.serialize_str("killing"),
            LambdaSpec::Random => s.serialize_str("random"),
            LambdaSpec::Explicit(list) => list.serialize(s),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<LambdaSpec, D::Error> {
        use serde::de::Error as _;
        match Raw::deserialize(d)? {
            Raw::Word(w) => parse_lambda(&w).map_err(D::Error::custom),
            Raw::List(items) => items
                .into_iter()
                .map(|v| match v {
                    serde_json::Value::String(t) => Ok(t),
                    serde_json::Value::Number(n) if n.is_i64() => Ok(n.to_string()),
                    other => Err(D::Error::custom(format!("metric parameter {other} is not a rational"))),
                })
                .collect::<std::result::Result<Vec<_>, _>>()
                .and_then(|v| parse_lambda(&v.join(",")).map_err(D::Error::custom)),
        }
    }
}

mod epsilon_text {
    use super::*;
    use serde::{Deserializer, Serializer};

    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Raw {
        Word(String),
        List(Vec<i8>),
    }

    pub fn serialize<S: Serializer>(v: &EpsilonSpec, s: S) -> std::result::Result<S::Ok, S::Error> {
        match v {
            EpsilonSpec::Canonical => s.serialize_str("canonical"),
            EpsilonSpec::All => s.serialize_str("all"),
            EpsilonSpec::Explicit(list) => list.serialize(s),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<EpsilonSpec, D::Error> {
        use serde::de::Error as _;
        match Raw::deserialize(d)? {
            Raw::Word(w) => parse_epsilon(&w).map_err(D::Error::custom),
            Raw::List(v) => Ok(EpsilonSpec::Explicit(v)),
        }
    }
}
