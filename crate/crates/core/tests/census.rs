use std::collections::{BTreeMap, BTreeSet};

use hopfkit::catalog::{taft, uq_sl2, RootOfUnity};
use hopfkit::census::*;
use hopfkit::coalgebra::full_filtration;
use proptest::prelude::*;

fn cand(n: u64, g: u64, b: &[(u64, u64)]) -> CoradicalCandidate {
    CoradicalCandidate::new(n, g, b.iter().copied())
}

#[test]
fn table_27_attributions_follow_the_case_analysis() {
    let r = run_census(27, Some(1)).unwrap();
    assert_eq!(r.survivors, 0);
    let mut by_case: BTreeMap<String, BTreeSet<(u64, RuleId)>> = BTreeMap::new();
    for c in r.all_candidates() {
        by_case.entry(c.case.clone().unwrap()).or_default().insert((c.dim_h0, c.attributed.unwrap()));
    }
    use RuleId::*;
    let dims = |case: &str| by_case[case].iter().map(|(d, _)| *d).collect::<Vec<_>>();
    assert_eq!(dims("i"), (1..=6).map(|n| 1 + 4 * n).collect::<Vec<_>>());
    assert_eq!(dims("ii"), vec![10, 19]);
    assert_eq!(dims("iii"), vec![17]);
    assert_eq!(dims("iv"), vec![26]);
    assert!(by_case["i"].iter().all(|(_, r)| *r == Dim4Pcube));
    assert!(by_case["ii"].iter().all(|(_, r)| *r == OnePlusE));
    assert!(by_case["iii"].iter().chain(&by_case["iv"]).all(|(_, r)| *r == SkewfreeBound));
    for c in r.all_candidates().filter(|c| matches!(c.case.as_deref(), Some("v" | "vi"))) {
        let want = if c.candidate.t(2) == 1 {
            Dim4Pcube
        } else if c.candidate == cand(27, 1, &[(2, 2), (3, 1)]) {
            Final27
        } else {
            SkewfreeBound
        };
        assert_eq!(c.attributed, Some(want), "{}", c.shape);
    }
}

#[test]
fn theorem_27_scenario_closes() {
    let s = builtin_scenario("paper-thm-27").unwrap();
    let r = run_scenario(&s).unwrap();
    assert_eq!(r.survivors, 0);
    assert_eq!(r.conclusion, "all eliminated; conclusion: semisimple, pointed or copointed");
    let g3 = &r.branches[0];
    assert_eq!(g3.candidates.len(), 4);
    assert!(g3.candidates.iter().all(|c| c.attributed == Some(RuleId::TypePpTaft)));
}

#[test]
fn final_case_rule_is_necessary() {
    let s = builtin_scenario("thm-27").unwrap().without_rule(RuleId::Final27);
    let r = run_scenario(&s).unwrap();
    let surv: Vec<_> = r.survivors().map(|c| c.candidate.clone()).collect();
    assert_eq!(surv, vec![cand(27, 1, &[(2, 2), (3, 1)])]);
}

#[test]
fn equality_does_not_eliminate() {
    let c = cand(27, 1, &[(2, 2), (3, 1)]);
    let v = evaluate(RuleId::SkewfreeBound, &c, &CensusContext::standing(27));
    assert_eq!(v.bound_computed, Some(27));
    assert_eq!(v.status, Status::Survives);
}

#[test]
fn p5_reports_survivors_honestly() {
    let r = run_census(125, None).unwrap();
    assert!(r.survivors > 0);
    let shape = cand(125, 5, &[(2, 5)]);
    let c = r.all_candidates().find(|c| c.candidate == shape).unwrap();
    assert!(!c.eliminated());
    assert_eq!(c.verdict(RuleId::TypePpTaft).unwrap().status, Status::Inapplicable);

    let both = run_scenario(&builtin_scenario("both-taft-125").unwrap()).unwrap();
    let c = both.all_candidates().find(|c| c.candidate == shape).unwrap();
    assert_eq!(c.attributed, Some(RuleId::TypePpTaft));
    let m4 = both.all_candidates().find(|c| c.candidate == cand(125, 5, &[(4, 5)])).unwrap();
    assert!(m4.eliminated());
}

#[test]
fn p5_examples() {
    let r = run_census(125, Some(1)).unwrap();
    for t in [3, 4] {
        let c = r.all_candidates().find(|c| c.candidate == cand(125, 1, &[(5, t)])).unwrap();
        assert!(c.eliminated());
    }
    let c = r.all_candidates().find(|c| c.candidate == cand(125, 1, &[(2, 2)])).unwrap();
    assert_eq!(c.verdict(RuleId::Dim4Pcube).unwrap().status, Status::Survives);
}

#[test]
fn report_independent_of_worker_count() {
    let run = |k| {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(k).build().unwrap();
        pool.install(|| serde_json::to_string(&run_census(125, None).unwrap()).unwrap())
    };
    assert_eq!(run(1), run(4));
}

#[test]
fn text_table_lists_every_candidate() {
    let r = run_census(27, Some(1)).unwrap();
    let t = render_text(&r);
    assert_eq!(t.lines().filter(|l| l.contains("Eliminated")).count(), 18);
    assert!(t.contains("(vi)"));
}

#[test]
fn fukuda_chains_on_small_examples() {
    let h = taft(3, RootOfUnity::new(3, 1)).unwrap();
    let (f, dec) = full_filtration(h.coalgebra()).unwrap();
    let r = fukuda_chain_check(&f.nondegenerate, dec.blocks.len());
    assert!(r.checked > 0);
    assert!(r.consistent(), "{:?}", r.failures);

    let h = uq_sl2(RootOfUnity::new(3, 1)).unwrap();
    let (f, dec) = full_filtration(h.coalgebra()).unwrap();
    let r = fukuda_chain_check(&f.nondegenerate, dec.blocks.len());
    assert!(r.checked > 0);
    assert!(r.consistent(), "{:?}", r.failures);
}

fn shape() -> impl Strategy<Value = CoradicalCandidate> {
    (prop::sample::select(vec![27u64, 64, 125]), prop::collection::btree_map(2u64..7, 1u64..4, 0..3))
        .prop_map(|(n, b)| CoradicalCandidate::new(n, 1, b))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn eliminations_are_sound(c in shape()) {
        let ctx = CensusContext::standing(c.n);
        for r in RULES.iter() {
            let v = evaluate(r.id, &c, &ctx);
            if v.status == Status::Eliminated {
                if let Some(b) = v.bound_computed {
                    prop_assert!(b > c.n);
                } else {
                    prop_assert!(v.note.is_some());
                }
            }
            if v.status == Status::Survives {
                if let Some(b) = v.bound_computed {
                    prop_assert!(b <= c.n);
                }
            }
        }
    }

    #[test]
    fn bounds_monotone_in_blocks(c in shape(), extra in 2u64..7) {
        let ctx = CensusContext::standing(c.n);
        // Bounds depend on the shape through the smallest block (skew-free)
        // and the gcd of block sizes (1 ⊕ E); keep those fixed.
        let bigger = c.with_block(extra);
        let gcd = c.blocks.keys().fold(0u64, |a, &d| num_integer::gcd(a, d));
        for r in RULES.iter() {
            if r.id == RuleId::SkewfreeBound && c.min_block().is_some_and(|m| extra < m) {
                continue;
            }
            if r.id == RuleId::OnePlusE && gcd != 0 && extra % gcd != 0 {
                continue;
            }
            let (a, b) = (evaluate(r.id, &c, &ctx).bound_computed, evaluate(r.id, &bigger, &ctx).bound_computed);
            if let (Some(a), Some(b)) = (a, b) {
                prop_assert!(b >= a, "{} {} -> {}", r.name, a, b);
            }
        }
    }
}
