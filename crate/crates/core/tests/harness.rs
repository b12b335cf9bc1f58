use cppo::atlas::{build_named, GroupSpec};
use cppo::harness::{
    classify, load_results, parse_results, persist_results, render_results, run_lemma_suite, run_theorem_suite,
    theorem1_verdict, ClassificationReport, Field, Status, TOO_LARGE,
};
use cppo::Permutation;
use proptest::prelude::*;

fn specs(names: &[&str]) -> Vec<GroupSpec> {
    names.iter().map(|n| GroupSpec::atlas(n).unwrap()).collect()
}

#[test]
fn soluble_corpus_all_pass() {
    let suite = run_theorem_suite(&specs(&["s4", "sl2_3", "agl1(5)", "agl1(7)", "dihedral(12)"]), None).unwrap();
    for r in &suite.reports {
        assert_eq!(r.theorem1.status, Status::Pass, "{}", r.name);
        assert_eq!(r.theorem2.status, Status::NotApplicable, "{}", r.name);
    }
    assert_eq!(suite.theorem1.pass, 5);
    assert!(suite.violations(true).is_empty());
}

#[test]
fn insoluble_eppo_corpus_passes_theorem2() {
    let names = ["asl2_4", "m10", "psl2(4)", "psl2(7)", "psl2(8)", "psl2(9)", "psl2(17)", "psl3_4", "sz8"];
    let suite = run_theorem_suite(&specs(&names), None).unwrap();
    let got: Vec<&str> = suite.reports.iter().map(|r| r.name.as_str()).collect();
    assert_eq!(got, names);
    for r in &suite.reports {
        assert_eq!(r.theorem2.status, Status::Pass, "{}: {}", r.name, r.theorem2.detail);
    }
}

#[test]
fn psl34_g1_is_not_applicable_with_witness() {
    let suite = run_theorem_suite(&specs(&["psl34_g1"]), None).unwrap();
    let r = &suite.reports[0];
    assert_eq!(r.theorem2.status, Status::NotApplicable);
    assert!(r.theorem2.detail.contains("not CPPO"));
    let w = r.cppo_witness.as_ref().unwrap();
    assert_eq!(w.order, 6);
    assert!(w.recheck(r.degree).unwrap());
}

#[test]
fn failing_witnesses_recheck_in_isolation() {
    for name in ["alt(7)", "psl2(11)", "gl2_3"] {
        let g = build_named(name).unwrap();
        let r = classify(&g, name);
        let w = r.cppo_witness.as_ref().unwrap();
        let x = Permutation::parse(&w.x, r.degree).unwrap();
        let y = Permutation::parse(&w.y, r.degree).unwrap();
        let c = cppo::commutator(&x, &y).unwrap();
        assert_eq!(c.to_string(), w.commutator);
        assert_eq!(c.order(), w.order);
    }
}

#[test]
fn persist_round_trip() {
    let suite = run_theorem_suite(&specs(&["s4", "m10", "psl34_g1"]), None).unwrap();
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("reports.json");
    persist_results(&suite.reports, &path).unwrap();
    let back: Vec<ClassificationReport> = load_results(&path).unwrap();
    assert_eq!(back, suite.reports);
}

#[test]
fn empty_document_has_schema_header() {
    let doc = render_results::<ClassificationReport>(&[]).unwrap();
    let v: serde_json::Value = serde_json::from_str(&doc).unwrap();
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["reports"], serde_json::json!([]));
    assert!(parse_results::<ClassificationReport>(&doc).unwrap().is_empty());
}

#[test]
fn skip_markers_survive_persistence() {
    let g = build_named("sym(6)").unwrap().with_cap(100);
    let r = classify(&g, "sym(6) capped");
    assert!(r.is_cppo.is_skipped());
    let doc = render_results(std::slice::from_ref(&r)).unwrap();
    assert!(doc.contains(TOO_LARGE));
    let back: Vec<ClassificationReport> = parse_results(&doc).unwrap();
    assert_eq!(back[0], r);
    assert_eq!(back[0].is_cppo, Field::Skipped(TOO_LARGE.to_string()));
}

#[test]
fn wrong_schema_version_is_rejected() {
    assert!(parse_results::<ClassificationReport>(r#"{"schema_version": 99, "reports": []}"#).is_err());
}

#[test]
fn lemma_suite_is_seed_deterministic() {
    let a = run_lemma_suite(&["cc_i", "acnoncop", "orderofav"], 11).unwrap();
    let b = run_lemma_suite(&["cc_i", "acnoncop", "orderofav"], 11).unwrap();
    assert_eq!(render_results(&[a]).unwrap(), render_results(&[b]).unwrap());
}

proptest! {
    #[test]
    fn theorem1_logic(soluble: bool, cppo: bool, h in 0usize..6, k in 0usize..6) {
        let primes: Vec<u64> = [2, 3, 5, 7, 11, 13][..k].to_vec();
        let v = theorem1_verdict(soluble, &Field::Value(cppo), &Field::Value(h), &primes);
        let expected = !soluble || !cppo || (h <= 3 && k <= 3);
        prop_assert_eq!(v.holds(), expected);
        prop_assert_eq!(v.status == Status::Pass, soluble && cppo && h <= 3 && k <= 3);
    }
}
