//! Candidate coradicals of an N-dimensional Hopf algebra with |G(H)| = g,
//! and the dimension rules that eliminate them.

mod fukuda;
mod report;
mod rules;
mod scenario;

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub use fukuda::{fukuda_chain_check, FukudaFailure, FukudaReport};
pub use report::render_text;
pub use rules::{evaluate, rule, Rule, RULES};
pub use scenario::{builtin_scenario, Branch, Scenario, ShapeFilter, Step, BUILTIN_SCENARIOS};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CensusError {
    #[error("|G(H)| = {g} does not divide N = {n}")]
    BadDivisibility { n: u64, g: u64 },
    #[error("unknown scenario {0:?}")]
    UnknownScenario(String),
    #[error("scenario: {0}")]
    Scenario(String),
}

/// k·G ⊕ ⊕_d M*(d)^{t_d}.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CoradicalCandidate {
    pub n: u64,
    pub g: u64,
    /// d ↦ t_d, d ≥ 2, t_d ≥ 1.
    pub blocks: BTreeMap<u64, u64>,
}

impl CoradicalCandidate {
    pub fn new(n: u64, g: u64, blocks: impl IntoIterator<Item = (u64, u64)>) -> Self {
        let blocks = blocks.into_iter().filter(|&(_, t)| t > 0).collect();
        CoradicalCandidate { n, g, blocks }
    }

    pub fn dim_h0(&self) -> u64 {
        self.g + self.blocks.iter().map(|(d, t)| t * d * d).sum::<u64>()
    }

    pub fn t(&self, d: u64) -> u64 {
        self.blocks.get(&d).copied().unwrap_or(0)
    }

    pub fn min_block(&self) -> Option<u64> {
        self.blocks.keys().next().copied()
    }

    pub fn with_block(&self, d: u64) -> Self {
        let mut c = self.clone();
        *c.blocks.entry(d).or_insert(0) += 1;
        c
    }

    /// Case label of the table of coradicals for N = 27, |G(H)| = 1.
    pub fn table27_case(&self) -> Option<&'static str> {
        if self.n != 27 || self.g != 1 || self.blocks.is_empty() {
            return None;
        }
        let ds: Vec<u64> = self.blocks.keys().copied().collect();
        Some(match ds.as_slice() {
            [2] => "i",
            [3] => "ii",
            [4] if self.t(4) == 1 => "iii",
            [5] => "iv",
            [2, 3] => "v",
            _ if self.t(4) == 1 && ds.iter().all(|&d| d <= 4) => "vi",
            _ => return None,
        })
    }
}

impl fmt::Display for CoradicalCandidate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.g {
            1 => write!(f, "k1")?,
            g if is_prime(g) => write!(f, "kC_{g}")?,
            g => write!(f, "kG_{g}")?,
        }
        for (d, t) in &self.blocks {
            match t {
                1 => write!(f, " ⊕ M*({d})")?,
                _ => write!(f, " ⊕ M*({d})^{t}")?,
            }
        }
        Ok(())
    }
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|k| k * k <= n).all(|k| !n.is_multiple_of(k))
}

/// p with N = p³, p prime.
pub fn prime_cube_root(n: u64) -> Option<u64> {
    let p = (1..).take_while(|k: &u64| k * k * k <= n).last()?;
    (p * p * p == n && is_prime(p)).then_some(p)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Tri {
    #[default]
    No,
    Yes,
    /// Not assumed, but follows from the scenario's own reasoning.
    Derived,
}

impl Tri {
    pub fn holds(self) -> bool {
        self != Tri::No
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CensusContext {
    pub assume_nonsemisimple: bool,
    pub assume_nonpointed: bool,
    pub assume_noncopointed: bool,
    pub p: Option<u64>,
    #[serde(default)]
    pub taft_sub: Tri,
    #[serde(default)]
    pub taft_quotient: Tri,
}

impl CensusContext {
    /// Nonsemisimple, nonpointed and non-copointed.
    pub fn standing(n: u64) -> Self {
        CensusContext {
            assume_nonsemisimple: true,
            assume_nonpointed: true,
            assume_noncopointed: true,
            p: prime_cube_root(n),
            taft_sub: Tri::No,
            taft_quotient: Tri::No,
        }
    }

    pub fn flags(&self) -> String {
        let mut v = Vec::new();
        if self.assume_nonsemisimple {
            v.push("nonsemisimple".to_string());
        }
        if self.assume_nonpointed {
            v.push("nonpointed".to_string());
        }
        if self.assume_noncopointed {
            v.push("non-copointed".to_string());
        }
        if let Some(p) = self.p {
            v.push(format!("p = {p}"));
        }
        let tri = |t: Tri| match t {
            Tri::No => "no",
            Tri::Yes => "yes",
            Tri::Derived => "derived",
        };
        v.push(format!("taft_sub = {}", tri(self.taft_sub)));
        v.push(format!("taft_quotient = {}", tri(self.taft_quotient)));
        v.join(", ")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum RuleId {
    #[serde(rename = "NZ")]
    Nz,
    #[serde(rename = "dim4_pcube")]
    Dim4Pcube,
    #[serde(rename = "one_plus_E")]
    OnePlusE,
    #[serde(rename = "skewfree_bound")]
    SkewfreeBound,
    #[serde(rename = "27_final_case")]
    Final27,
    #[serde(rename = "type_pp_taft")]
    TypePpTaft,
    #[serde(rename = "Mp_minus_1")]
    MpMinus1,
    #[serde(rename = "Mp_minus_2")]
    MpMinus2,
}

impl RuleId {
    pub fn name(self) -> &'static str {
        rule(self).name
    }

    pub fn parse(s: &str) -> Option<RuleId> {
        let s = s.strip_prefix("rule_").unwrap_or(s);
        RULES.iter().find(|r| r.name == s).map(|r| r.id)
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Status {
    Eliminated,
    Survives,
    Inapplicable,
}

/// Facts a rule can establish for the rules after it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DerivedFact {
    TaftSub,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RuleVerdict {
    pub rule: RuleId,
    pub status: Status,
    pub bound_computed: Option<u64>,
    pub citation: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub derived: Option<DerivedFact>,
}

/// Candidates with g + Σ t_d d² < N (≤ N when semisimplicity is not
/// excluded), g | t_d d² for each d, and at least one block when nonpointed.
pub fn enumerate_candidates(n: u64, g: u64, ctx: &CensusContext) -> Result<Vec<CoradicalCandidate>, CensusError> {
    if g == 0 || !n.is_multiple_of(g) {
        return Err(CensusError::BadDivisibility { n, g });
    }
    let limit = if ctx.assume_nonsemisimple { n.saturating_sub(1) } else { n };
    if g > limit {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut blocks = Vec::new();
    fn rec(d: u64, room: u64, g: u64, n: u64, blocks: &mut Vec<(u64, u64)>, out: &mut Vec<CoradicalCandidate>) {
        if d * d > room {
            out.push(CoradicalCandidate::new(n, g, blocks.iter().copied()));
            return;
        }
        rec(d + 1, room, g, n, blocks, out);
        let mut t = 1;
        while t * d * d <= room {
            if (t * d * d).is_multiple_of(g) {
                blocks.push((d, t));
                rec(d + 1, room - t * d * d, g, n, blocks, out);
                blocks.pop();
            }
            t += 1;
        }
    }
    rec(2, limit - g, g, n, &mut blocks, &mut out);
    if ctx.assume_nonpointed {
        out.retain(|c| !c.blocks.is_empty());
    }
    out.sort_by(|a, b| (a.dim_h0(), &a.blocks).cmp(&(b.dim_h0(), &b.blocks)));
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CandidateReport {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub case: Option<String>,
    pub shape: String,
    pub candidate: CoradicalCandidate,
    pub dim_h0: u64,
    pub status: Status,
    /// First eliminating step of the pipeline.
    pub attributed: Option<RuleId>,
    pub verdicts: Vec<RuleVerdict>,
}

impl CandidateReport {
    pub fn eliminated(&self) -> bool {
        self.status == Status::Eliminated
    }

    pub fn verdict(&self, id: RuleId) -> Option<&RuleVerdict> {
        self.verdicts.iter().find(|v| v.rule == id)
    }
}

/// Evaluates the steps in order; the first elimination is attributed, later
/// steps are still evaluated so every verdict is visible.
pub fn judge(c: &CoradicalCandidate, ctx: &CensusContext, steps: &[Step]) -> CandidateReport {
    let mut ctx = ctx.clone();
    let mut verdicts: Vec<RuleVerdict> = Vec::new();
    let mut attributed = None;
    for step in steps {
        if step.only.is_some_and(|f| !f.matches(c, &ctx)) {
            continue;
        }
        if verdicts.iter().any(|v| v.rule == step.rule && v.status == Status::Eliminated) {
            continue;
        }
        let v = evaluate(step.rule, c, &ctx);
        if v.derived == Some(DerivedFact::TaftSub) && ctx.taft_sub == Tri::No {
            ctx.taft_sub = Tri::Derived;
        }
        if v.status == Status::Eliminated && attributed.is_none() {
            attributed = Some(step.rule);
        }
        verdicts.retain(|old| old.rule != v.rule);
        verdicts.push(v);
    }
    CandidateReport {
        case: c.table27_case().map(str::to_string),
        shape: c.to_string(),
        dim_h0: c.dim_h0(),
        status: if attributed.is_some() { Status::Eliminated } else { Status::Survives },
        attributed,
        verdicts,
        candidate: c.clone(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BranchReport {
    pub label: String,
    pub grouplikes: Vec<u64>,
    pub context: CensusContext,
    pub citation: String,
    pub candidates: Vec<CandidateReport>,
}

impl BranchReport {
    pub fn survivors(&self) -> impl Iterator<Item = &CandidateReport> {
        self.candidates.iter().filter(|c| !c.eliminated())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusReport {
    pub n: u64,
    pub scenario: String,
    pub branches: Vec<BranchReport>,
    pub survivors: usize,
    pub conclusion: String,
}

impl CensusReport {
    pub fn all_candidates(&self) -> impl Iterator<Item = &CandidateReport> {
        self.branches.iter().flat_map(|b| b.candidates.iter())
    }

    pub fn survivors(&self) -> impl Iterator<Item = &CandidateReport> {
        self.branches.iter().flat_map(|b| b.survivors())
    }
}

/// One branch: enumerate for every listed g and judge in parallel; the merge
/// keeps canonical candidate order.
pub fn run_branch(n: u64, branch: &Branch) -> Result<BranchReport, CensusError> {
    let mut ctx = CensusContext::standing(n);
    ctx.taft_sub = branch.taft_sub;
    ctx.taft_quotient = branch.taft_quotient;
    let mut all = Vec::new();
    for &g in &branch.grouplikes {
        all.extend(enumerate_candidates(n, g, &ctx)?);
    }
    let candidates: Vec<CandidateReport> = all.par_iter().map(|c| judge(c, &ctx, &branch.steps)).collect();
    Ok(BranchReport {
        label: branch.label.clone(),
        grouplikes: branch.grouplikes.clone(),
        context: ctx,
        citation: branch.citation.clone(),
        candidates,
    })
}

pub fn run_scenario(s: &Scenario) -> Result<CensusReport, CensusError> {
    let branches = s.branches.iter().map(|b| run_branch(s.dim, b)).collect::<Result<Vec<_>, _>>()?;
    let survivors = branches.iter().map(|b| b.survivors().count()).sum();
    let conclusion = if survivors == 0 {
        match &s.conclusion {
            Some(c) => format!("all eliminated; conclusion: {c}"),
            None => "all eliminated".to_string(),
        }
    } else {
        format!("{survivors} surviving candidate(s)")
    };
    Ok(CensusReport { n: s.dim, scenario: s.name.clone(), branches, survivors, conclusion })
}

/// Proper divisors g < N of N, or the given one.
pub fn grouplike_choices(n: u64, g: Option<u64>) -> Result<Vec<u64>, CensusError> {
    match g {
        Some(g) if g == 0 || !n.is_multiple_of(g) => Err(CensusError::BadDivisibility { n, g }),
        Some(g) => Ok(vec![g]),
        None => Ok((1..n).filter(|g| n.is_multiple_of(*g)).collect()),
    }
}

/// Census with the default pipeline and the standing hypotheses.
pub fn run_census(n: u64, g: Option<u64>) -> Result<CensusReport, CensusError> {
    run_scenario(&Scenario::default_for(n, grouplike_choices(n, g)?))
}
