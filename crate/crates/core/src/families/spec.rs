use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use super::*;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// A family name plus `key=value` parameters, e.g. `stellated_wheel m=10`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilySpec {
    pub family: String,
    pub params: BTreeMap<String, u64>,
}

pub const FAMILY_NAMES: &[&str] = &[
    "path",
    "cycle",
    "complete",
    "empty",
    "star",
    "wheel",
    "stellated_wheel",
    "full_binary_tree",
    "max_capture_hn",
    "grid",
    "hypercube",
    "projective_incidence",
    "meyniel_extremal",
    "petersen",
    "random_tree",
    "random_unicyclic",
    "fig2_tree",
    "fig3_unicyclic",
    "fig4_tree",
];

impl FamilySpec {
    pub fn new(family: &str, params: &[(&str, u64)]) -> Self {
        FamilySpec {
            family: family.to_string(),
            params: params.iter().map(|&(k, v)| (k.to_string(), v)).collect(),
        }
    }

    /// Parses the family name followed by `key=value` tokens.
    pub fn from_tokens<S: AsRef<str>>(tokens: &[S]) -> Result<Self> {
        let (name, rest) = tokens
            .split_first()
            .ok_or_else(|| Error::InvalidParameter("missing family name".into()))?;
        let mut params = BTreeMap::new();
        for tok in rest.iter().flat_map(|t| t.as_ref().split_whitespace()) {
            let (k, v) = tok.split_once('=').ok_or_else(|| {
                Error::InvalidParameter(format!("expected key=value, got `{tok}`"))
            })?;
            let v: u64 = v
                .parse()
                .map_err(|_| Error::InvalidParameter(format!("`{v}` is not an integer")))?;
            params.insert(k.to_string(), v);
        }
        Ok(FamilySpec {
            family: name.as_ref().to_string(),
            params,
        })
    }

    fn get(&self, key: &str) -> Result<usize> {
        self.params
            .get(key)
            .map(|&v| v as usize)
            .ok_or_else(|| Error::InvalidParameter(format!("{} needs `{key}=`", self.family)))
    }

    fn seed(&self) -> u64 {
        self.params.get("seed").copied().unwrap_or(0)
    }

    pub fn build(&self) -> Result<Graph> {
        match self.family.as_str() {
            "path" => path(self.get("n")?),
            "cycle" => cycle(self.get("n")?),
            "complete" => complete(self.get("n")?),
            "empty" => empty(self.get("n")?),
            "star" => star(self.get("k")?),
            "wheel" => wheel(self.get("m")?),
            "stellated_wheel" => stellated_wheel(self.get("m")?),
            "full_binary_tree" => full_binary_tree(self.get("h")?),
            "max_capture_hn" => max_capture_hn(self.get("n")?),
            "grid" => grid(self.get("a")?, self.get("b")?),
            "hypercube" => hypercube(self.get("m")?),
            "projective_incidence" => projective_incidence(self.get("q")?),
            "meyniel_extremal" => meyniel_extremal(self.get("n")?).map(|(g, _)| g),
            "petersen" => Ok(petersen()),
            "random_tree" => random_tree(self.get("n")?, self.seed()),
            "random_unicyclic" => random_unicyclic(self.get("n")?, self.seed()),
            "fig2_tree" => Ok(fixtures::fig2_tree()),
            "fig3_unicyclic" => Ok(fixtures::fig3_unicyclic()),
            "fig4_tree" => Ok(fixtures::fig4_tree()),
            other => Err(Error::UnknownFamily(other.to_string())),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let tokens: Vec<&str> = s.split_whitespace().collect();
        FamilySpec::from_tokens(&tokens)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.family)?;
        for (k, v) in &self.params {
            write!(f, " {k}={v}")?;
        }
        Ok(())
    }
}
