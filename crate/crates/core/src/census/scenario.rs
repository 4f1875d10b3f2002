//! Scenarios: named rule pipelines stored as versioned JSON data.

use serde::{Deserialize, Serialize};

use super::{CensusContext, CensusError, CoradicalCandidate, RuleId, Tri};

/// Restricts a step to some shapes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ShapeFilter {
    /// Every block is M*(p) where N = p³.
    PureP,
}

impl ShapeFilter {
    pub fn matches(self, c: &CoradicalCandidate, ctx: &CensusContext) -> bool {
        match self {
            ShapeFilter::PureP => ctx.p.is_some_and(|p| !c.blocks.is_empty() && c.blocks.keys().all(|&d| d == p)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Step {
    pub rule: RuleId,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub only: Option<ShapeFilter>,
}

impl Step {
    pub fn all(rule: RuleId) -> Step {
        Step { rule, only: None }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Branch {
    pub label: String,
    pub grouplikes: Vec<u64>,
    #[serde(default)]
    pub taft_sub: Tri,
    #[serde(default)]
    pub taft_quotient: Tri,
    #[serde(default)]
    pub citation: String,
    pub steps: Vec<Step>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Scenario {
    pub name: String,
    pub version: u32,
    #[serde(default)]
    pub description: String,
    pub dim: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub conclusion: Option<String>,
    pub branches: Vec<Branch>,
}

/// (name, JSON source).
pub const BUILTIN_SCENARIOS: [(&str, &str); 2] = [
    ("thm-27", include_str!("../../scenarios/thm-27.json")),
    ("both-taft-125", include_str!("../../scenarios/both-taft-125.json")),
];

const ALIASES: [(&str, &str); 1] = [("paper-thm-27", "thm-27")];

pub fn builtin_scenario(name: &str) -> Result<Scenario, CensusError> {
    let name = ALIASES.iter().find(|(a, _)| *a == name).map_or(name, |(_, n)| n);
    let (_, src) = BUILTIN_SCENARIOS
        .iter()
        .find(|(n, _)| *n == name)
        .ok_or_else(|| CensusError::UnknownScenario(name.to_string()))?;
    Scenario::from_json(src)
}

/// Rules in the order of the dimension-27 argument, then the type (p,p) rules.
pub fn default_steps() -> Vec<Step> {
    vec![
        Step::all(RuleId::Nz),
        Step::all(RuleId::Dim4Pcube),
        Step { rule: RuleId::OnePlusE, only: Some(ShapeFilter::PureP) },
        Step::all(RuleId::SkewfreeBound),
        Step::all(RuleId::OnePlusE),
        Step::all(RuleId::Final27),
        Step::all(RuleId::TypePpTaft),
        Step::all(RuleId::MpMinus1),
        Step::all(RuleId::MpMinus2),
    ]
}

impl Scenario {
    pub fn from_json(src: &str) -> Result<Scenario, CensusError> {
        let s: Scenario = serde_json::from_str(src).map_err(|e| CensusError::Scenario(e.to_string()))?;
        if s.branches.iter().any(|b| b.grouplikes.iter().any(|&g| g == 0 || !s.dim.is_multiple_of(g))) {
            return Err(CensusError::Scenario("grouplike counts must divide dim".into()));
        }
        Ok(s)
    }

    pub fn default_for(n: u64, grouplikes: Vec<u64>) -> Scenario {
        Scenario {
            name: "default".into(),
            version: 1,
            description: "standing hypotheses, every rule".into(),
            dim: n,
            conclusion: None,
            branches: vec![Branch {
                label: "standing hypotheses".into(),
                grouplikes,
                taft_sub: Tri::No,
                taft_quotient: Tri::No,
                citation: "nonsemisimple, nonpointed, non-copointed".into(),
                steps: default_steps(),
            }],
        }
    }

    /// The same pipeline with one rule removed everywhere.
    pub fn without_rule(&self, id: RuleId) -> Scenario {
        let mut s = self.clone();
        for b in &mut s.branches {
            b.steps.retain(|st| st.rule != id);
        }
        s.name = format!("{} without {}", self.name, id);
        s
    }

    pub fn with_taft_flags(&self, sub: Tri, quotient: Tri) -> Scenario {
        let mut s = self.clone();
        for b in &mut s.branches {
            b.taft_sub = sub;
            b.taft_quotient = quotient;
        }
        s
    }
}
