//! Scenario files: the cuspidal families and the index `d` of the inner form.

use std::fmt;
use std::path::Path;

use jlring::AlgebraContext;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FamilySpec {
    pub name: String,
    pub p: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s: Option<i64>,
}

/// The JSON form of a scenario, normalized with families sorted by name.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioSpec {
    pub d: i64,
    pub families: Vec<FamilySpec>,
}

#[derive(Debug, Clone)]
pub struct Scenario {
    spec: ScenarioSpec,
    ctx: AlgebraContext,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ScenarioError {
    Io(String),
    Json(String),
    Invalid { path: String, reason: String },
}

impl fmt::Display for ScenarioError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScenarioError::Io(e) => write!(f, "cannot read scenario: {e}"),
            ScenarioError::Json(e) => write!(f, "malformed scenario JSON: {e}"),
            ScenarioError::Invalid { path, reason } => {
                write!(f, "invalid scenario at {path}: {reason}")
            }
        }
    }
}

impl std::error::Error for ScenarioError {}

fn invalid(path: impl Into<String>, reason: impl Into<String>) -> ScenarioError {
    ScenarioError::Invalid {
        path: path.into(),
        reason: reason.into(),
    }
}

fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Scenario {
    /// d = 2 with one family `rho`, p = 1, s = 2.
    pub fn default_scenario() -> Self {
        Scenario::from_spec(ScenarioSpec {
            d: 2,
            families: vec![FamilySpec {
                name: "rho".into(),
                p: 1,
                s: Some(2),
            }],
        })
        .expect("default scenario is valid")
    }

    pub fn from_json(text: &str) -> Result<Self, ScenarioError> {
        let spec: ScenarioSpec =
            serde_json::from_str(text).map_err(|e| ScenarioError::Json(e.to_string()))?;
        Scenario::from_spec(spec)
    }

    pub fn load(path: &Path) -> Result<Self, ScenarioError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| ScenarioError::Io(format!("{}: {e}", path.display())))?;
        Scenario::from_json(&text)
    }

    pub fn from_spec(mut spec: ScenarioSpec) -> Result<Self, ScenarioError> {
        if spec.d < 1 {
            return Err(invalid(
                "d",
                format!("must be a positive integer, got {}", spec.d),
            ));
        }
        if spec.families.is_empty() {
            return Err(invalid("families", "at least one family is required"));
        }
        let d = spec.d as u64;
        for (i, fam) in spec.families.iter().enumerate() {
            let at = |field: &str| format!("families[{i}].{field}");
            if !is_identifier(&fam.name) {
                return Err(invalid(
                    at("name"),
                    format!("`{}` is not an identifier", fam.name),
                ));
            }
            if spec.families[..i].iter().any(|g| g.name == fam.name) {
                return Err(invalid(
                    at("name"),
                    format!("duplicate family `{}`", fam.name),
                ));
            }
            if fam.p < 1 {
                return Err(invalid(
                    at("p"),
                    format!("must be a positive integer, got {}", fam.p),
                ));
            }
            if let Some(s) = fam.s {
                if s < 1 {
                    return Err(invalid(
                        at("s"),
                        format!("must be a positive integer, got {s}"),
                    ));
                }
                let ps = fam.p as u64 * s as u64;
                if !ps.is_multiple_of(d) {
                    return Err(invalid(
                        at("s"),
                        format!("d = {d} does not divide p·s = {ps}"),
                    ));
                }
            }
        }
        let ctx = AlgebraContext::new(
            d,
            spec.families
                .iter()
                .map(|f| (f.name.clone(), f.p as u64, f.s.map(|s| s as u64))),
        )
        .map_err(|e| invalid("families", e.to_string()))?;
        spec.families.sort_by(|a, b| a.name.cmp(&b.name));
        Ok(Scenario { spec, ctx })
    }

    pub fn spec(&self) -> &ScenarioSpec {
        &self.spec
    }

    pub fn ctx(&self) -> &AlgebraContext {
        &self.ctx
    }
}

impl Default for Scenario {
    fn default() -> Self {
        Scenario::default_scenario()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let s = Scenario::from_json(r#"{"d":2,"families":[{"name":"rho","p":1,"s":2}]}"#).unwrap();
        assert_eq!(s.spec(), Scenario::default_scenario().spec());
        let split = Scenario::from_json(r#"{"d":1,"families":[{"name":"rho","p":1,"s":1}]}"#);
        assert_eq!(split.unwrap().ctx().d(), 1);
        let bad = Scenario::from_json(r#"{"d":2,"families":[{"name":"rho","p":1,"s":3}]}"#);
        assert_eq!(
            bad.unwrap_err(),
            invalid("families[0].s", "d = 2 does not divide p·s = 3")
        );
    }

    #[test]
    fn errors_carry_paths() {
        let e = Scenario::from_json(r#"{"d":0,"families":[]}"#).unwrap_err();
        assert!(matches!(e, ScenarioError::Invalid { ref path, .. } if path == "d"));
        let e =
            Scenario::from_json(r#"{"d":1,"families":[{"name":"a","p":1},{"name":"a","p":2}]}"#)
                .unwrap_err();
        assert!(matches!(e, ScenarioError::Invalid { ref path, .. } if path == "families[1].name"));
        let e = Scenario::from_json(r#"{"d":1,"families":[{"name":"a","p":-1}]}"#).unwrap_err();
        assert!(matches!(e, ScenarioError::Invalid { ref path, .. } if path == "families[0].p"));
        assert!(matches!(
            Scenario::from_json("{"),
            Err(ScenarioError::Json(_))
        ));
        assert!(matches!(
            Scenario::from_json(r#"{"d":1,"families":[],"x":1}"#),
            Err(ScenarioError::Json(_))
        ));
    }

    #[test]
    fn families_are_sorted() {
        let s = Scenario::from_json(
            r#"{"d":2,"families":[{"name":"tau","p":2},{"name":"rho","p":1,"s":2}]}"#,
        )
        .unwrap();
        let names: Vec<_> = s.spec().families.iter().map(|f| f.name.as_str()).collect();
        assert_eq!(names, ["rho", "tau"]);
    }
}
