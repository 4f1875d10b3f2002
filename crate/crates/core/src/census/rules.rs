//! The rule catalog: (id, hypothesis, citation, evaluation).

use num_integer::Integer;

use super::{CensusContext, CoradicalCandidate, DerivedFact, RuleId, RuleVerdict, Status};

pub struct Rule {
    pub id: RuleId,
    pub name: &'static str,
    pub hypothesis: &'static str,
    pub citation: &'static str,
    pub eval: fn(&CoradicalCandidate, &CensusContext) -> Outcome,
}

/// Status, bound, note, derived fact.
pub struct Outcome(Status, Option<u64>, Option<String>, Option<DerivedFact>);

fn inapplicable(why: &str) -> Outcome {
    Outcome(Status::Inapplicable, None, Some(why.to_string()), None)
}

fn structural(note: &str) -> Outcome {
    Outcome(Status::Eliminated, None, Some(note.to_string()), None)
}

/// Eliminated iff the bound strictly exceeds N.
fn by_bound(c: &CoradicalCandidate, bound: u64, note: Option<String>) -> Outcome {
    let s = if bound > c.n { Status::Eliminated } else { Status::Survives };
    Outcome(s, Some(bound), note, None)
}

pub static RULES: [Rule; 8] = [
    Rule {
        id: RuleId::Nz,
        name: "NZ",
        hypothesis: "always",
        citation: "Nichols–Zoeller: |G(H)| divides dim H_{0,d}",
        eval: nz,
    },
    Rule {
        id: RuleId::Dim4Pcube,
        name: "dim4_pcube",
        hypothesis: "N = p³, p odd, non-copointed, |G(H)| = 1, t_2 ≥ 1",
        citation: "no S-stable M*(2) in a non-copointed Hopf algebra of dimension p³; k1 ⊕ M*(2)^t needs dim H ≥ dim H_0 + 22 (p ≡ 3 mod 4) or + 24 (p ≡ 1 mod 4)",
        eval: dim4_pcube,
    },
    Rule {
        id: RuleId::OnePlusE,
        name: "one_plus_E",
        hypothesis: "|G(H)| = 1, every simple block dimension divisible by N'² for some N' > 1, e ≠ 1",
        citation: "H_0 = k1 ⊕ E: dim H ≥ dim H_0 + 4N' + 2N'² + e",
        eval: one_plus_e,
    },
    Rule {
        id: RuleId::SkewfreeBound,
        name: "skewfree_bound",
        hypothesis: "no nontrivial skew-primitives (automatic for |G(H)| = 1)",
        citation: "no skew-primitives: dim H ≥ dim H_0 + (2n+1)|G(H)| + n², n the smallest block",
        eval: skewfree_bound,
    },
    Rule {
        id: RuleId::Final27,
        name: "27_final_case",
        hypothesis: "N = 27, H_0 = k1 ⊕ M*(2)² ⊕ M*(3)",
        citation: "S pairs the two M*(2) blocks; Fukuda's lemma forces dim H ≥ 18 + 1 + 8 + 8 = 35",
        eval: final_27,
    },
    Rule {
        id: RuleId::TypePpTaft,
        name: "type_pp_taft",
        hypothesis: "N = p³, |G(H)| = p, Taft sub-Hopf algebra and Taft quotient",
        citation: "with a Taft subalgebra and a Taft quotient there is no simple M*(2), no M*(p), and no M*(3) for p = 5, 7",
        eval: type_pp_taft,
    },
    Rule {
        id: RuleId::MpMinus1,
        name: "Mp_minus_1",
        hypothesis: "N = p³, |G(H)| = p, standing hypotheses",
        citation: "|G(H)| = p: H_0 ≇ kC_p ⊕ M*(p−1)^{sp} ⊕ M*(p)^t",
        eval: mp_minus_1,
    },
    Rule {
        id: RuleId::MpMinus2,
        name: "Mp_minus_2",
        hypothesis: "N = p³, p ≥ 7, |G(H)| = p, standing hypotheses",
        citation: "p ≥ 7, |G(H)| = p: H_0 ≇ kC_p ⊕ M*(p−2)^{sp}",
        eval: mp_minus_2,
    },
];

pub fn rule(id: RuleId) -> &'static Rule {
    RULES.iter().find(|r| r.id == id).expect("every id is in the catalog")
}

pub fn evaluate(id: RuleId, c: &CoradicalCandidate, ctx: &CensusContext) -> RuleVerdict {
    let r = rule(id);
    let Outcome(status, bound_computed, note, derived) = (r.eval)(c, ctx);
    RuleVerdict { rule: id, status, bound_computed, citation: r.citation.to_string(), note, derived }
}

fn nz(c: &CoradicalCandidate, _: &CensusContext) -> Outcome {
    if !c.n.is_multiple_of(c.g) {
        return structural(&format!("{} ∤ {}", c.g, c.n));
    }
    match c.blocks.iter().find(|(d, t)| (*t * *d * *d) % c.g != 0) {
        Some((d, t)) => structural(&format!("{} ∤ {}·{}²", c.g, t, d)),
        None => Outcome(Status::Survives, None, None, None),
    }
}

fn dim4_pcube(c: &CoradicalCandidate, ctx: &CensusContext) -> Outcome {
    let Some(p) = ctx.p.filter(|&p| p % 2 == 1) else {
        return inapplicable("N is not p³ with p an odd prime");
    };
    if !ctx.assume_noncopointed {
        return inapplicable("non-copointed is not assumed");
    }
    if c.g != 1 || c.t(2) == 0 {
        return inapplicable("needs |G(H)| = 1 and a block M*(2)");
    }
    if c.t(2) == 1 {
        return structural("the only M*(2) block would be S-stable");
    }
    if c.blocks.len() > 1 {
        return inapplicable("the t > 1 bound needs H_0 = k1 ⊕ M*(2)^t");
    }
    by_bound(c, c.dim_h0() + if p % 4 == 1 { 24 } else { 22 }, None)
}

/// Largest bound over the admissible N'.
fn one_plus_e(c: &CoradicalCandidate, _: &CensusContext) -> Outcome {
    if c.g != 1 || c.blocks.is_empty() {
        return inapplicable("needs |G(H)| = 1 and a block of dimension > 1");
    }
    let g = c.blocks.keys().fold(0u64, |acc, d| acc.gcd(d));
    let best = (2..=g)
        .filter(|m| g % m == 0)
        .filter_map(|m| {
            let d = c.n % m;
            let e = match (d + m - 1) % m {
                0 => m,
                r => r,
            };
            (e != 1).then(|| (c.dim_h0() + 4 * m + 2 * m * m + e, m, e))
        })
        .max();
    match best {
        Some((bound, m, e)) => by_bound(c, bound, Some(format!("N' = {m}, e = {e}"))),
        None => inapplicable("no N' > 1 with e ≠ 1"),
    }
}

fn skewfree_bound(c: &CoradicalCandidate, _: &CensusContext) -> Outcome {
    let Some(n) = c.min_block() else {
        return inapplicable("cosemisimple part only");
    };
    let bound = c.dim_h0() + (2 * n + 1) * c.g + n * n;
    if c.g == 1 {
        let note = "auxiliary: |G(H)| = 1 gives no nontrivial skew-primitives in characteristic 0".to_string();
        return by_bound(c, bound, Some(note));
    }
    // With grouplikes the skew-free hypothesis is a branch: exceeding N
    // refutes it, so H has a skew-primitive and a Taft subalgebra.
    if bound > c.n {
        let note = "bound exceeds N, so H has a nontrivial skew-primitive and contains a Taft subalgebra".to_string();
        Outcome(Status::Inapplicable, Some(bound), Some(note), Some(DerivedFact::TaftSub))
    } else {
        Outcome(Status::Inapplicable, Some(bound), Some("skew-free branch not excluded".to_string()), None)
    }
}

fn final_27(c: &CoradicalCandidate, _: &CensusContext) -> Outcome {
    let shape = CoradicalCandidate::new(27, 1, [(2, 2), (3, 1)]);
    if *c != shape {
        return inapplicable("shape is not k1 ⊕ M*(2)² ⊕ M*(3) at N = 27");
    }
    by_bound(c, 35, None)
}

fn type_pp_taft(c: &CoradicalCandidate, ctx: &CensusContext) -> Outcome {
    let Some(p) = ctx.p else {
        return inapplicable("N is not p³");
    };
    if c.g != p {
        return inapplicable("needs |G(H)| = p");
    }
    if !(ctx.taft_sub.holds() && ctx.taft_quotient.holds()) {
        return inapplicable("hypothesis missing: Taft sub-Hopf algebra and Taft quotient flags");
    }
    let excluded = |d: u64| d == 2 || d == p || (d == 3 && (p == 5 || p == 7));
    match c.blocks.keys().find(|&&d| excluded(d)) {
        Some(d) => structural(&format!("no simple M*({d})")),
        None if c.blocks.is_empty() => {
            Outcome(Status::Survives, None, Some("H_0 = kG(H), so H is pointed: contradiction with the hypotheses".into()), None)
        }
        None => Outcome(Status::Survives, None, None, None),
    }
}

fn standing(ctx: &CensusContext) -> bool {
    ctx.assume_nonsemisimple && ctx.assume_nonpointed && ctx.assume_noncopointed
}

fn mp_minus_1(c: &CoradicalCandidate, ctx: &CensusContext) -> Outcome {
    let Some(p) = ctx.p.filter(|_| standing(ctx)) else {
        return inapplicable("needs N = p³ and the standing hypotheses");
    };
    let t = c.t(p - 1);
    let others_ok = c.blocks.keys().all(|&d| d == p - 1 || d == p);
    if c.g == p && p >= 3 && t > 0 && t.is_multiple_of(p) && others_ok {
        structural(&format!("s = {}", t / p))
    } else {
        inapplicable("shape mismatch")
    }
}

fn mp_minus_2(c: &CoradicalCandidate, ctx: &CensusContext) -> Outcome {
    let Some(p) = ctx.p.filter(|&p| p >= 7 && standing(ctx)) else {
        return inapplicable("needs N = p³ with p ≥ 7 and the standing hypotheses");
    };
    let t = c.t(p - 2);
    if c.g == p && t > 0 && t.is_multiple_of(p) && c.blocks.len() == 1 {
        structural(&format!("s = {}", t / p))
    } else {
        inapplicable("shape mismatch")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cand(n: u64, g: u64, b: &[(u64, u64)]) -> CoradicalCandidate {
        CoradicalCandidate::new(n, g, b.iter().copied())
    }

    fn run(id: RuleId, c: &CoradicalCandidate) -> RuleVerdict {
        evaluate(id, c, &CensusContext::standing(c.n))
    }

    #[test]
    fn nz_examples() {
        assert_eq!(run(RuleId::Nz, &cand(27, 3, &[(2, 1)])).status, Status::Eliminated);
        assert_eq!(run(RuleId::Nz, &cand(27, 1, &[(2, 1)])).status, Status::Survives);
        assert_eq!(run(RuleId::Nz, &cand(27, 3, &[(2, 3)])).status, Status::Survives);
    }

    #[test]
    fn skewfree_examples() {
        let v = run(RuleId::SkewfreeBound, &cand(27, 1, &[(4, 1)]));
        assert_eq!((v.status, v.bound_computed), (Status::Eliminated, Some(42)));
        let v = run(RuleId::SkewfreeBound, &cand(27, 1, &[(5, 1)]));
        assert_eq!((v.status, v.bound_computed), (Status::Eliminated, Some(62)));
        let v = run(RuleId::SkewfreeBound, &cand(27, 1, &[(2, 2), (3, 1)]));
        assert_eq!((v.status, v.bound_computed), (Status::Survives, Some(27)));
    }

    #[test]
    fn one_plus_e_examples() {
        let v = run(RuleId::OnePlusE, &cand(27, 1, &[(3, 1)]));
        assert_eq!((v.status, v.bound_computed), (Status::Eliminated, Some(42)));
        let v = run(RuleId::OnePlusE, &cand(27, 1, &[(3, 2)]));
        assert_eq!((v.status, v.bound_computed), (Status::Eliminated, Some(51)));
        assert_eq!(run(RuleId::OnePlusE, &cand(125, 1, &[(5, 3)])).status, Status::Eliminated);
        assert_eq!(run(RuleId::OnePlusE, &cand(125, 1, &[(5, 4)])).status, Status::Eliminated);
        assert_eq!(run(RuleId::OnePlusE, &cand(27, 1, &[(2, 1), (3, 1)])).status, Status::Inapplicable);
    }

    #[test]
    fn dim4_examples() {
        assert_eq!(run(RuleId::Dim4Pcube, &cand(27, 1, &[(2, 1), (3, 2)])).status, Status::Eliminated);
        for t in 2..=6 {
            let v = run(RuleId::Dim4Pcube, &cand(27, 1, &[(2, t)]));
            assert_eq!((v.status, v.bound_computed), (Status::Eliminated, Some(1 + 4 * t + 22)));
        }
        let v = run(RuleId::Dim4Pcube, &cand(125, 1, &[(2, 2)]));
        assert_eq!((v.status, v.bound_computed), (Status::Survives, Some(33)));
    }

    #[test]
    fn final_case_examples() {
        let v = run(RuleId::Final27, &cand(27, 1, &[(2, 2), (3, 1)]));
        assert_eq!((v.status, v.bound_computed), (Status::Eliminated, Some(35)));
        assert_eq!(run(RuleId::Final27, &cand(27, 1, &[(2, 3), (3, 1)])).status, Status::Inapplicable);
        assert_eq!(run(RuleId::Final27, &cand(125, 1, &[(2, 2), (3, 1)])).status, Status::Inapplicable);
    }

    #[test]
    fn type_pp_examples() {
        let mut ctx = CensusContext::standing(27);
        assert_eq!(evaluate(RuleId::TypePpTaft, &cand(27, 3, &[(2, 3)]), &ctx).status, Status::Inapplicable);
        ctx.taft_sub = super::super::Tri::Yes;
        ctx.taft_quotient = super::super::Tri::Derived;
        assert_eq!(evaluate(RuleId::TypePpTaft, &cand(27, 3, &[(2, 3)]), &ctx).status, Status::Eliminated);
        assert_eq!(evaluate(RuleId::TypePpTaft, &cand(27, 3, &[(3, 1)]), &ctx).status, Status::Eliminated);
        assert_eq!(evaluate(RuleId::TypePpTaft, &cand(27, 3, &[(3, 2)]), &ctx).status, Status::Eliminated);
        let v = evaluate(RuleId::TypePpTaft, &cand(27, 3, &[]), &ctx);
        assert_eq!(v.status, Status::Survives);
        assert!(v.note.unwrap().contains("pointed"));
    }

    #[test]
    fn mp_examples() {
        assert_eq!(run(RuleId::MpMinus1, &cand(125, 5, &[(4, 5)])).status, Status::Eliminated);
        assert_eq!(run(RuleId::MpMinus2, &cand(343, 7, &[(5, 7)])).status, Status::Eliminated);
        assert_eq!(run(RuleId::MpMinus1, &cand(125, 5, &[(3, 5)])).status, Status::Inapplicable);
        assert_eq!(run(RuleId::MpMinus2, &cand(125, 5, &[(3, 5)])).status, Status::Inapplicable);
    }
}
