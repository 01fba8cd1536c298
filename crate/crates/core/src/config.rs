//! Run configuration: group, `μ`, `σ`, level and output format, read from
//! command-line flags and optionally a JSON file.
//!
//! ```json
//! {"group": {"preset": "GL", "n": 3}, "mu": [1, 0, 0], "sigma": "flip", "level": ["s1", "s2"]}
//! ```
//!
//! `group` may also be a compact name such as `"GSp4"` or an explicit datum
//! `{"simple_roots": [...], "simple_coroots": [...], "rank": r}`.

use serde::{Deserialize, Serialize};

use crate::affine_weyl::{AffineWeylGroup, ParahoricLevel};
use crate::error::{Error, Result};
use crate::root_datum::{Cocharacter, GroupSpec, RootDatum};
use crate::sigma::SigmaAction;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Table,
    Tsv,
    Json,
    Dot,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupField {
    Name(String),
    Spec(GroupSpec),
}

impl GroupField {
    pub fn to_spec(&self) -> Result<GroupSpec> {
        match self {
            GroupField::Name(s) => GroupSpec::parse_name(s),
            GroupField::Spec(s) => Ok(s.clone()),
        }
    }
}

/// Unresolved configuration. Every field is optional so that flags and a
/// file can be layered.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupConfig {
    pub group: Option<GroupField>,
    pub mu: Option<Cocharacter>,
    pub sigma: Option<String>,
    pub level: Option<Vec<String>>,
    pub format: Option<OutputFormat>,
}

/// A validated `(G, σ, K)` triple plus the optional `μ`.
#[derive(Clone, Debug)]
pub struct Setup {
    pub group: AffineWeylGroup,
    pub sigma: SigmaAction,
    pub level: ParahoricLevel,
    pub mu: Option<Cocharacter>,
    pub format: Option<OutputFormat>,
}

fn field_err(field: &str, e: impl ToString) -> Error {
    Error::Config {
        field: field.into(),
        reason: e.to_string(),
    }
}

impl GroupConfig {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| {
            let field = match e.classify() {
                serde_json::error::Category::Syntax | serde_json::error::Category::Eof => "<syntax>",
                _ => "<document>",
            };
            field_err(field, e)
        })
    }

    pub fn from_path(path: &std::path::Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| field_err("<file>", format!("{}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    /// Fields set in `other` win.
    pub fn overridden_by(self, other: GroupConfig) -> GroupConfig {
        GroupConfig {
            group: other.group.or(self.group),
            mu: other.mu.or(self.mu),
            sigma: other.sigma.or(self.sigma),
            level: other.level.or(self.level),
            format: other.format.or(self.format),
        }
    }

    pub fn resolve(&self) -> Result<Setup> {
        let spec = self
            .group
            .as_ref()
            .ok_or_else(|| field_err("group", "missing"))?
            .to_spec()
            .map_err(|e| field_err("group", e))?;
        let rd = RootDatum::from_spec(&spec).map_err(|e| field_err("group", e))?;
        let group = AffineWeylGroup::new(rd);
        let sigma = match self.sigma.as_deref().unwrap_or("id") {
            "id" => SigmaAction::identity(group.datum()),
            "flip" => SigmaAction::flip(group.datum(), group.weyl()).map_err(|e| field_err("sigma", e))?,
            other => return Err(field_err("sigma", format!("expected `id` or `flip`, got `{other}`"))),
        };
        let level = match &self.level {
            None => ParahoricLevel::iwahori(),
            Some(names) => {
                ParahoricLevel::from_names(&group, names, &sigma).map_err(|e| field_err("level", e))?
            }
        };
        if let Some(mu) = &self.mu {
            if mu.len() != group.rank() {
                return Err(field_err(
                    "mu",
                    format!("{} coordinates given, the lattice has rank {}", mu.len(), group.rank()),
                ));
            }
        }
        Ok(Setup {
            group,
            sigma,
            level,
            mu: self.mu.clone(),
            format: self.format,
        })
    }
}

/// Parses `1,0,-1` (brackets optional).
pub fn parse_vector(s: &str) -> Result<Cocharacter> {
    let body = s.trim().trim_start_matches('[').trim_end_matches(']');
    if body.trim().is_empty() {
        return Ok(Vec::new());
    }
    body.split(',')
        .map(|c| {
            c.trim()
                .parse::<i64>()
                .map_err(|e| Error::Parse {
                    input: s.to_string(),
                    reason: format!("bad coordinate `{}`: {e}", c.trim()),
                })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn preset_object_and_name() {
        let c = GroupConfig::from_json(r#"{"group": {"preset": "GL", "n": 3}, "mu": [1,0,0], "sigma": "flip"}"#).unwrap();
        let s = c.resolve().unwrap();
        assert_eq!(s.group.datum().name(), "GL3");
        assert_eq!(s.sigma.name(), "flip");
        let c = GroupConfig::from_json(r#"{"group": "GSp4", "format": "json"}"#).unwrap();
        assert_eq!(c.resolve().unwrap().format, Some(OutputFormat::Json));
    }

    #[test]
    fn explicit_datum() {
        let c = GroupConfig::from_json(
            r#"{"group": {"simple_roots": [[1,-1]], "simple_coroots": [[1,-1]], "rank": 2}}"#,
        )
        .unwrap();
        let s = c.resolve().unwrap();
        assert_eq!(s.group.datum().positive_roots().len(), 1);
    }

    #[test]
    fn diagnostics_name_the_field() {
        let bad = |json: &str| match GroupConfig::from_json(json).and_then(|c| c.resolve().map(|_| ())) {
            Err(Error::Config { field, .. }) => field,
            other => panic!("expected a config error, got {other:?}"),
        };
        assert_eq!(bad(r#"{"group": "GL3", "mu": [1,0]}"#), "mu");
        assert_eq!(bad(r#"{"group": "XY3"}"#), "group");
        assert_eq!(bad(r#"{"group": "GL3", "sigma": "frob"}"#), "sigma");
        assert_eq!(bad(r#"{"group": "GL3", "level": ["s0","s1","s2"]}"#), "level");
        assert_eq!(bad(r#"{"mu": [1]}"#), "group");
        assert_eq!(bad(r#"{"group": "GL3",}"#), "<syntax>");
        let e = GroupConfig::from_json(r#"{"group": "GL3", "muu": [1]}"#).unwrap_err();
        assert!(e.to_string().contains("muu"), "{e}");
        assert!(e.to_string().contains("line 1"), "{e}");
    }

    #[test]
    fn layering() {
        let flags = GroupConfig {
            group: Some(GroupField::Name("GL2".into())),
            mu: Some(vec![1, 0]),
            ..Default::default()
        };
        let file = GroupConfig {
            mu: Some(vec![2, 0]),
            ..Default::default()
        };
        let c = flags.overridden_by(file);
        assert_eq!(c.mu, Some(vec![2, 0]));
        assert_eq!(c.group, Some(GroupField::Name("GL2".into())));
    }

    #[test]
    fn vectors() {
        assert_eq!(parse_vector("1,0,-1").unwrap(), vec![1, 0, -1]);
        assert_eq!(parse_vector("[2, 1]").unwrap(), vec![2, 1]);
        assert!(parse_vector("1,x").is_err());
    }
}
