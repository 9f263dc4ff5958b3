//! JSON file formats and built-in variety names.
//!
//! Faces are written 1-based everywhere, exponent vectors as plain arrays.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::face::Face;
use crate::monomial::{Monomial, MonomialIdeal};
use crate::regularity::{KUpset, RegularityAssumption};
use crate::stanley::StanleyPair;
use crate::toric::{hirzebruch, product_of_projective_spaces, projective_space, BuildOptions, DegreeVector, Fan, ToricVariety};

fn parse_err(e: impl std::fmt::Display) -> Error {
    Error::Parse(e.to_string())
}

/// `{"rays": [[..]], "max_cones": [[..]]}`, optionally with an explicit `"grading"`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VarietyFile {
    pub rays: Vec<Vec<i64>>,
    pub max_cones: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub grading: Option<Vec<Vec<i64>>>,
}

impl VarietyFile {
    pub fn from_variety(x: &ToricVariety) -> Self {
        VarietyFile {
            rays: x.fan().rays.clone(),
            max_cones: x.fan().max_cones.iter().map(|f| f.to_one_based()).collect(),
            grading: Some(x.grading().clone()),
        }
    }

    pub fn build(&self, assume_complete: bool) -> Result<ToricVariety> {
        let n = self.rays.len();
        let mut cones = Vec::with_capacity(self.max_cones.len());
        for c in &self.max_cones {
            if c.iter().any(|&i| i == 0 || i > n) {
                return Err(Error::InvalidFan(format!("cone {c:?} refers to a ray outside 1..={n}")));
            }
            cones.push(Face::from_one_based(c.iter().copied()));
        }
        ToricVariety::build(Fan::new(self.rays.clone(), cones), BuildOptions { assume_complete, grading: self.grading.clone() })
    }
}

/// `P(d)`, `PxP(a,b)` or `Hirzebruch(l)`; `None` if `name` is not of that shape.
pub fn builtin_variety(name: &str) -> Option<Result<ToricVariety>> {
    let name: String = name.chars().filter(|c| !c.is_whitespace()).collect();
    let (head, rest) = name.split_once('(')?;
    let args: Vec<&str> = rest.strip_suffix(')')?.split(',').collect();
    let ints = |k: usize| -> Result<Vec<i64>> {
        if args.len() != k {
            return Err(Error::Parse(format!("{head} takes {k} argument(s)")));
        }
        args.iter().map(|a| a.parse::<i64>().map_err(parse_err)).collect()
    };
    let nonneg = |v: i64| -> Result<usize> {
        if (1..=30).contains(&v) {
            Ok(v as usize)
        } else {
            Err(Error::Parse(format!("dimension {v} is out of range 1..=30")))
        }
    };
    let built = match head {
        "P" => ints(1).and_then(|a| projective_space(nonneg(a[0])?)),
        "PxP" => ints(2).and_then(|a| product_of_projective_spaces(nonneg(a[0])?, nonneg(a[1])?)),
        "Hirzebruch" | "F" => ints(1).and_then(|a| hirzebruch(a[0])),
        _ => return None,
    };
    Some(built)
}

/// A builtin name or the JSON text of a [`VarietyFile`].
pub fn parse_variety(text: &str, assume_complete: bool) -> Result<ToricVariety> {
    if let Some(v) = builtin_variety(text) {
        return v;
    }
    let file: VarietyFile = serde_json::from_str(text).map_err(parse_err)?;
    file.build(assume_complete)
}

/// `{"generators": [[..]]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealFile {
    pub generators: Vec<Vec<u32>>,
}

impl IdealFile {
    pub fn from_ideal(i: &MonomialIdeal) -> Self {
        IdealFile { generators: i.to_exponents() }
    }

    pub fn to_ideal(&self, n: usize) -> Result<MonomialIdeal> {
        if let Some(g) = self.generators.iter().find(|g| g.len() != n) {
            return Err(Error::Parse(format!("generator {g:?} does not have {n} exponents")));
        }
        MonomialIdeal::from_exponents(n, self.generators.clone())
    }
}

/// Ideal given either as JSON or in the text form `x1^2*x2, x3`.
pub fn parse_ideal(text: &str, n: usize) -> Result<MonomialIdeal> {
    if text.trim_start().starts_with('{') {
        let file: IdealFile = serde_json::from_str(text).map_err(parse_err)?;
        return file.to_ideal(n);
    }
    MonomialIdeal::parse(text, n)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairFile {
    pub shift: Vec<u32>,
    pub face: Vec<usize>,
}

/// `{"generators": [[..]], "pairs": [{"shift": [..], "face": [..]}]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiltrationFile {
    #[serde(default)]
    pub generators: Vec<Vec<u32>>,
    pub pairs: Vec<PairFile>,
}

impl FiltrationFile {
    pub fn new(ideal: &MonomialIdeal, pairs: &[StanleyPair]) -> Self {
        FiltrationFile {
            generators: ideal.to_exponents(),
            pairs: pairs.iter().map(|p| PairFile { shift: p.shift.exponents().to_vec(), face: p.face.to_one_based() }).collect(),
        }
    }

    pub fn to_pairs(&self, n: usize) -> Result<Vec<StanleyPair>> {
        self.pairs
            .iter()
            .map(|p| {
                if p.shift.len() != n || p.face.iter().any(|&i| i == 0 || i > n) {
                    return Err(Error::Parse(format!("pair {:?} does not fit {n} variables", p.shift)));
                }
                Ok(StanleyPair::new(Monomial::new(p.shift.clone()), Face::from_one_based(p.face.iter().copied())))
            })
            .collect()
    }
}

/// `{"generators": [[..]], "assumed_baselines": "default-K"}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UpsetFile {
    pub generators: Vec<Vec<i64>>,
    pub assumed_baselines: String,
}

impl UpsetFile {
    pub fn new(u: &KUpset, assume: &RegularityAssumption) -> Result<Self> {
        Ok(UpsetFile {
            generators: u.generators()?.iter().map(|g| g.0.clone()).collect(),
            assumed_baselines: assume.describe().to_string(),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BaselineEntry {
    /// `sigma`, 1-based.
    pub face: Vec<usize>,
    pub generators: Vec<Vec<i64>>,
}

/// `{"default_nef": true, "baselines": [{"face": [..], "generators": [[..]]}]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BaselineFile {
    #[serde(default)]
    pub default_nef: bool,
    #[serde(default)]
    pub baselines: Vec<BaselineEntry>,
}

impl BaselineFile {
    pub fn to_assumption(&self, x: &ToricVariety) -> Result<RegularityAssumption> {
        let n = x.n();
        let mut baselines = HashMap::new();
        for e in &self.baselines {
            if e.face.iter().any(|&i| i == 0 || i > n) || e.generators.iter().any(|g| g.len() != x.r()) {
                return Err(Error::Parse(format!("baseline for {:?} does not fit the variety", e.face)));
            }
            let face = Face::from_one_based(e.face.iter().copied());
            baselines.insert(face, e.generators.iter().map(|g| DegreeVector(g.clone())).collect());
        }
        Ok(RegularityAssumption { baselines, default_nef: self.default_nef })
    }
}

/// `default-K` or the JSON text of a [`BaselineFile`].
pub fn parse_assumption(text: &str, x: &ToricVariety) -> Result<RegularityAssumption> {
    if text.trim() == "default-K" {
        return Ok(RegularityAssumption::default_k());
    }
    let file: BaselineFile = serde_json::from_str(text).map_err(parse_err)?;
    file.to_assumption(x)
}
