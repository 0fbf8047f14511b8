use std::collections::{BTreeMap, HashSet};

use serde::{Deserialize, Serialize};

use super::ScriptError;
use crate::exprparse::{parse, parse_word};

/// A proof script: header plus ordered steps.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProofScript {
    pub name: String,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub base_field: String,
    pub vars: Vec<String>,
    #[serde(default)]
    pub maps: BTreeMap<String, MapDef>,
    pub steps: Vec<Step>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapDef {
    pub twist: String,
    pub images: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Step {
    pub id: String,
    #[serde(flatten)]
    pub kind: StepKind,
}

// `flatten` ignores deny_unknown_fields, so split off the id by hand and let
// StepKind reject stray fields.
impl<'de> Deserialize<'de> for Step {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let mut m = serde_json::Map::deserialize(d)?;
        let id = match m.remove("id") {
            Some(serde_json::Value::String(s)) => s,
            Some(_) => return Err(D::Error::custom("step id must be a string")),
            None => return Err(D::Error::missing_field("id")),
        };
        let kind = StepKind::deserialize(serde_json::Value::Object(m))
            .map_err(|e| D::Error::custom(format!("step {id}: {e}")))?;
        Ok(Step { id, kind })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ImageCheck {
    pub element: String,
    pub claim: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WordRelation {
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum StepKind {
    Define {
        name: String,
        expr: String,
    },
    VerifyImage {
        map: String,
        checks: Vec<ImageCheck>,
    },
    VerifyInvariant {
        maps: Vec<String>,
        elements: Vec<String>,
    },
    VerifyRelation {
        expr: String,
    },
    VerifyActionRelations {
        relations: Vec<WordRelation>,
    },
    ApplyAhk {
        maps: Vec<String>,
        var: String,
        base: Vec<String>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        candidate: Option<String>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        name: Option<String>,
    },
    ApplyHk {
        maps: Vec<String>,
        base: Vec<String>,
        vars: Vec<String>,
    },
    ApplyYamasaki {
        map: String,
        x: String,
        y: String,
        a: String,
        emit: [String; 2],
    },
    ApplyMasuda {
        map: String,
        x: String,
        y: String,
        z: String,
        emit: [String; 2],
        #[serde(default, skip_serializing_if = "Option::is_none")]
        s1: Option<String>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        claims: Option<[String; 2]>,
    },
    MonomialInvariantCheck {
        maps: Vec<String>,
        vars: Vec<String>,
        candidates: Vec<String>,
    },
    VerifyIndependence {
        elements: Vec<String>,
        rank: usize,
    },
    DenominatorAudit {},
    Cited {
        text: String,
    },
    /// Moves to new coordinates: the listed elements become the variables.
    Rebase {
        vars: Vec<String>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        maps: Option<Vec<String>>,
        #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
        inverse: BTreeMap<String, String>,
    },
    /// Finite group facts computed by matrix algebra.
    GroupCheck {
        check: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        rep: Option<String>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        n: Option<usize>,
    },
}

impl StepKind {
    pub fn name(&self) -> &'static str {
        match self {
            StepKind::Define { .. } => "define",
            StepKind::VerifyImage { .. } => "verify_image",
            StepKind::VerifyInvariant { .. } => "verify_invariant",
            StepKind::VerifyRelation { .. } => "verify_relation",
            StepKind::VerifyActionRelations { .. } => "verify_action_relations",
            StepKind::ApplyAhk { .. } => "apply_ahk",
            StepKind::ApplyHk { .. } => "apply_hk",
            StepKind::ApplyYamasaki { .. } => "apply_yamasaki",
            StepKind::ApplyMasuda { .. } => "apply_masuda",
            StepKind::MonomialInvariantCheck { .. } => "monomial_invariant_check",
            StepKind::VerifyIndependence { .. } => "verify_independence",
            StepKind::DenominatorAudit {} => "denominator_audit",
            StepKind::Cited { .. } => "cited",
            StepKind::Rebase { .. } => "rebase",
            StepKind::GroupCheck { .. } => "group_check",
        }
    }

    fn exprs(&self) -> Vec<&str> {
        let mut v: Vec<&str> = Vec::new();
        match self {
            StepKind::Define { expr, .. } | StepKind::VerifyRelation { expr } => v.push(expr),
            StepKind::VerifyImage { checks, .. } => {
                for c in checks {
                    v.push(&c.element);
                    v.push(&c.claim);
                }
            }
            StepKind::VerifyInvariant { elements, .. } | StepKind::VerifyIndependence { elements, .. } => {
                v.extend(elements.iter().map(String::as_str))
            }
            StepKind::ApplyAhk { candidate, .. } => v.extend(candidate.as_deref()),
            StepKind::ApplyYamasaki { x, y, a, .. } => v.extend([x.as_str(), y, a]),
            StepKind::ApplyMasuda { x, y, z, claims, .. } => {
                v.extend([x.as_str(), y, z]);
                if let Some([u, w]) = claims {
                    v.extend([u.as_str(), w]);
                }
            }
            StepKind::MonomialInvariantCheck { candidates, .. } => v.extend(candidates.iter().map(String::as_str)),
            StepKind::Rebase { inverse, .. } => v.extend(inverse.values().map(String::as_str)),
            _ => {}
        }
        v
    }

    fn words(&self) -> Vec<&str> {
        let mut v: Vec<&str> = Vec::new();
        match self {
            StepKind::VerifyImage { map, .. }
            | StepKind::ApplyYamasaki { map, .. }
            | StepKind::ApplyMasuda { map, .. } => v.push(map),
            StepKind::VerifyInvariant { maps, .. }
            | StepKind::ApplyAhk { maps, .. }
            | StepKind::ApplyHk { maps, .. }
            | StepKind::MonomialInvariantCheck { maps, .. } => v.extend(maps.iter().map(String::as_str)),
            StepKind::VerifyActionRelations { relations } => {
                for r in relations {
                    v.push(&r.lhs);
                    v.push(&r.rhs);
                }
            }
            StepKind::Rebase { maps: Some(maps), .. } => {
                v.extend(maps.iter().map(|m| m.split_once('=').map_or(m.as_str(), |(_, w)| w)))
            }
            _ => {}
        }
        v
    }
}

impl ProofScript {
    pub fn from_json(src: &str) -> Result<ProofScript, ScriptError> {
        let s: ProofScript = serde_json::from_str(src).map_err(|e| ScriptError::Json(e.to_string()))?;
        s.validate()?;
        Ok(s)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("script serializes")
    }

    /// Static checks: unique ids, well-formed expressions and map words.
    pub fn validate(&self) -> Result<(), ScriptError> {
        let mut seen = HashSet::new();
        for (name, m) in &self.maps {
            if m.twist.parse::<crate::exactfield::GaloisAut>().is_err() {
                return Err(ScriptError::Header(format!("map {name}: unknown twist '{}'", m.twist)));
            }
            if m.images.len() != self.vars.len() {
                return Err(ScriptError::Header(format!(
                    "map {name}: {} images for {} variables",
                    m.images.len(),
                    self.vars.len()
                )));
            }
            for src in &m.images {
                parse(src).map_err(|e| ScriptError::Expr {
                    step: format!("map {name}"),
                    src: src.clone(),
                    err: e,
                })?;
            }
        }
        for step in &self.steps {
            if !seen.insert(step.id.as_str()) {
                return Err(ScriptError::DuplicateId(step.id.clone()));
            }
            for src in step.kind.exprs() {
                parse(src).map_err(|e| ScriptError::Expr {
                    step: step.id.clone(),
                    src: src.to_string(),
                    err: e,
                })?;
            }
            for src in step.kind.words() {
                parse_word(src).map_err(|e| ScriptError::Expr {
                    step: step.id.clone(),
                    src: src.to_string(),
                    err: e,
                })?;
            }
        }
        Ok(())
    }
}
