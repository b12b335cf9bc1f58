//! One line per acceptance criterion; exits non-zero if any fails.

use std::collections::{BTreeSet, VecDeque};
use std::path::Path;
use std::time::{Duration, Instant};

use cppo::atlas::build_named;
use cppo::atlas::spec::load_corpus;
use cppo::atlas::{exceptional_automorphism_witness, reproduce_psl34_commutators, GroupSpec};
use cppo::harness::{
    lemma_ids, render_results, run_lemma_suite, run_theorem_suite, ClassificationReport, Field, Status,
};
use cppo::structure::{fitting_height, is_soluble, SimpleEppoId};
use cppo::towers::{find_max_tower, p3_noncyclic_holds, probe_towers, validate_tower, ProbeLimits, Tower};
use cppo::{FiniteGroup, Permutation};

type Outcome = Result<String, String>;

fn corpus() -> Vec<GroupSpec> {
    load_corpus(&Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data/corpus.json")).expect("corpus loads")
}

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    ensure(start.elapsed() < limit, format!("took {:.1?}, limit {limit:?}", start.elapsed()))
}

fn e<T, E: std::fmt::Display>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

/// Breadth-first closure of the generators, independent of the stabiliser chain.
fn closure(g: &FiniteGroup) -> Vec<Permutation> {
    let id = Permutation::identity(g.degree());
    let mut seen = BTreeSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for s in g.generators() {
            let y = x.mul(s);
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    seen.into_iter().collect()
}

fn oracle_commutators(g: &FiniteGroup) -> BTreeSet<Permutation> {
    let els = closure(g);
    let inv: Vec<Permutation> = els.iter().map(Permutation::inverse).collect();
    let mut out = BTreeSet::new();
    for (x, xi) in els.iter().zip(&inv) {
        for (y, yi) in els.iter().zip(&inv) {
            out.insert(xi.mul(yi).mul(x).mul(y));
        }
    }
    out
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let mut names = Vec::new();
    for spec in corpus() {
        let g = e(spec.build())?;
        if g.group.order() > 200 {
            continue;
        }
        let ours: BTreeSet<Permutation> = e(g.group.commutator_set())?.into_iter().collect();
        ensure(ours == oracle_commutators(&g.group), format!("{} differs from brute force", g.name))?;
        names.push(g.name);
    }
    ensure(names.len() >= 25, format!("only {} groups of order at most 200", names.len()))?;
    for want in ["cyclic(12)", "dihedral(8)", "s4", "sl2_3", "q8", "extraspecial(3,+)", "extraspecial(2,+,2)", "agl1(5)", "agl1(7)", "alt(5)"] {
        ensure(names.iter().any(|n| n == want), format!("corpus lacks {want}"))?;
    }
    within(start, Duration::from_secs(60))?;
    Ok(format!("{} groups match the all-pairs oracle in {:.1?}", names.len(), start.elapsed()))
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    for name in ["psl2(4)", "psl2(7)", "psl2(8)", "psl2(9)", "psl2(17)", "psl3_4", "sz8"] {
        ensure(e(build_named(name).and_then(|g| g.is_eppo()))?, format!("{name} should be EPPO"))?;
    }
    for name in ["psl2(11)", "psl2(13)", "alt(7)", "alt(8)"] {
        ensure(!e(build_named(name).and_then(|g| g.is_eppo()))?, format!("{name} should not be EPPO"))?;
    }
    within(start, Duration::from_secs(180))?;
    Ok(format!("7 EPPO, 4 not EPPO in {:.1?}", start.elapsed()))
}

fn criterion_3() -> Outcome {
    for q in [4, 5, 7, 8, 9] {
        let g = e(build_named(&format!("psl2({q})")))?;
        let set: BTreeSet<Permutation> = e(g.commutator_set())?.into_iter().collect();
        let all: BTreeSet<Permutation> = e(g.elements())?.iter().cloned().collect();
        ensure(set == all, format!("PSL(2,{q}) has {} commutators, order {}", set.len(), g.order()))?;
    }
    Ok("every element of PSL(2,q), q = 4,5,7,8,9, is a commutator".into())
}

fn run_corpus_suite() -> Result<Vec<ClassificationReport>, String> {
    e(run_theorem_suite(&corpus(), None)).map(|s| s.reports)
}

fn criterion_4(reports: &[ClassificationReport]) -> Outcome {
    let mut checked = 0;
    for r in reports {
        ensure(r.theorem1.status != Status::Fail, format!("{}: {}", r.name, r.theorem1.detail))?;
        if r.is_soluble && r.is_cppo == Field::Value(true) {
            let h = r.fitting_height.value().copied().ok_or(format!("{}: no height", r.name))?;
            ensure(h <= 3 && r.derived_primes.len() <= 3, format!("{} violates the bound", r.name))?;
            checked += 1;
        }
    }
    let s4 = reports.iter().find(|r| r.name == "s4").ok_or("s4 missing")?;
    ensure(s4.fitting_height == Field::Value(3) && s4.theorem1.status == Status::Pass, "S4 does not reach h = 3")?;
    Ok(format!("{checked} soluble CPPO groups within bounds, S4 has h = 3"))
}

fn criterion_5(reports: &[ClassificationReport]) -> Outcome {
    for r in reports {
        ensure(r.theorem2.status != Status::Fail, format!("{}: {}", r.name, r.theorem2.detail))?;
    }
    for (name, want) in [("asl2_4", SimpleEppoId::PSL2_4), ("m10", SimpleEppoId::PSL2_9)] {
        let g = e(build_named(name))?;
        let r = cppo::harness::classify(&g, name);
        ensure(r.second_derived_is_derived == Field::Value(true), format!("{name}: G' not perfect"))?;
        ensure(r.derived_radical_is_commutator == Field::Value(true), format!("{name}: R(G') != [G',R(G)]"))?;
        ensure(r.derived_radical_is_2group == Field::Value(true), format!("{name}: R(G') not a 2-group"))?;
        ensure(r.simple_quotient == Field::Value(Some(want)), format!("{name}: wrong quotient"))?;
        ensure(r.theorem2.status == Status::Pass, format!("{name}: {}", r.theorem2.detail))?;
    }
    Ok("ASL(2,4) gives PSL2_4, M10 gives PSL2_9".into())
}

fn criterion_6() -> Outcome {
    let start = Instant::now();
    let c = e(reproduce_psl34_commutators())?;
    ensure(c.c1_matrix == vec![vec![1, 0, 0], vec![0, 1, 1], vec![0, 0, 1]], format!("[A1,phi] = {:?}", c.c1_matrix))?;
    ensure(c.c1_order == 2, "[A1,phi] order")?;
    ensure(c.g1_witness_order == 6, format!("G1 witness order {}", c.g1_witness_order))?;
    ensure(c.c2_order == 2, "[A2,beta] order")?;
    ensure(c.g2_witness_order == 6, format!("G2 witness order {}", c.g2_witness_order))?;
    for (name, want) in [("psl34_g1", false), ("psl34_g2", false), ("psl34_phi_ext", true)] {
        ensure(e(build_named(name).and_then(|g| g.is_cppo()))? == want, format!("is_cppo({name}) != {want}"))?;
    }
    within(start, Duration::from_secs(120))?;
    Ok(format!("matrices and orders 2, 6, 2, 6 reproduced; G1, G2 not CPPO; phi extension CPPO ({:.1?})", start.elapsed()))
}

fn criterion_7() -> Outcome {
    let w = e(exceptional_automorphism_witness())?;
    let degree = e(build_named("pgammal2_9"))?.degree();
    let x = e(Permutation::parse(&w.x, degree))?;
    let y = e(Permutation::parse(&w.phi_y, degree))?;
    let c = x.inverse().mul(&y.inverse()).mul(&x).mul(&y);
    ensure(c.to_string() == w.commutator, "commutator does not recheck")?;
    ensure(w.commutator_order == 3 && c.order() == 3, format!("order {}", w.commutator_order))?;
    Ok(format!("[{}, {}] has order 3", w.x, w.phi_y))
}

fn criterion_8() -> Outcome {
    let start = Instant::now();
    let mut count = 0;
    let mut p3 = 0;
    for spec in corpus() {
        let g = e(spec.build())?;
        if g.group.order() == 1 || g.group.order() > 500 || !is_soluble(&g.group) {
            continue;
        }
        let (h, t) = e(find_max_tower(&g.group))?;
        let fh = e(fitting_height(&g.group))?;
        ensure(h == fh, format!("{}: tower height {h}, Fitting height {fh}", g.name))?;
        ensure(validate_tower(&t).valid, format!("{}: constructed tower invalid", g.name))?;
        if h >= 3 {
            ensure(e(p3_noncyclic_holds(&t))?, format!("{}: cyclic stage at 3 or later", g.name))?;
            p3 += 1;
        }
        let probe = e(probe_towers(&g.group, h + 1, ProbeLimits::default()))?;
        ensure(probe.complete, format!("{}: probe incomplete", g.name))?;
        ensure(probe.taller.is_none(), format!("{}: probe found a tower of height {}", g.name, h + 1))?;
        ensure(probe.p3_violations.is_empty(), format!("{}: probed tower with cyclic P3", g.name))?;
        p3 += probe.p3_checked;
        count += 1;
    }
    let s4 = e(build_named("s4"))?;
    let w = e(Tower::from_generators(
        &s4,
        vec![
            (2, vec![e(Permutation::parse("(1 2)", 4))?]),
            (3, vec![e(Permutation::parse("(1 2 3)", 4))?]),
            (2, vec![e(Permutation::parse("(1 2)(3 4)", 4))?, e(Permutation::parse("(1 3)(2 4)", 4))?]),
        ],
    ))?;
    ensure(validate_tower(&w).valid, "S4 witness tower invalid")?;
    // The probe must find towers that do exist.
    let control = e(probe_towers(&s4, 3, ProbeLimits::default()))?;
    ensure(control.complete && control.taller.is_some(), "probe misses the S4 tower of height 3")?;
    within(start, Duration::from_secs(300))?;
    Ok(format!("{count} soluble groups certified, {p3} height-3 towers checked ({:.1?})", start.elapsed()))
}

fn criterion_9() -> Outcome {
    let r = e(run_lemma_suite(&[], 1))?;
    for id in [
        "autodoquaternion", "autoofextra", "acnoncop", "orderofav", "kurzweil", "cc_i", "cc_ii", "cc_iii", "cc_v", "cc_vi",
        "opelinha", "aaa_scenario", "quasisimple_negative",
    ] {
        ensure(r.checks.iter().any(|c| c.lemma == id), format!("no instances for {id}"))?;
    }
    ensure(
        r.checks.iter().any(|c| c.lemma == "kurzweil" && c.instance.contains("quaternion exception")),
        "quaternion exception instance missing",
    )?;
    ensure(r.checks.len() >= 100, format!("only {} instances", r.checks.len()))?;
    ensure(r.failed == 0 && r.undecided == 0, format!("{} failed, {} undecided", r.failed, r.undecided))?;
    Ok(format!("{} instances over {} lemmas, all pass", r.checks.len(), lemma_ids().len()))
}

fn criterion_10() -> Outcome {
    let run = || -> Result<(String, String), String> {
        let t = e(run_theorem_suite(&corpus(), None))?;
        let l = e(run_lemma_suite(&[], 7))?;
        Ok((e(render_results(&[t]))?, e(render_results(&[l]))?))
    };
    let a = run()?;
    let b = run()?;
    ensure(a == b, "reports differ between runs")?;
    Ok(format!("two runs agree byte for byte ({} + {} bytes)", a.0.len(), a.1.len()))
}

fn main() {
    let reports = run_corpus_suite();
    let criteria: Vec<(&str, Box<dyn Fn() -> Outcome>)> = vec![
        ("oracle equivalence", Box::new(criterion_1)),
        ("EPPO list", Box::new(criterion_2)),
        ("Ore spot check", Box::new(criterion_3)),
        ("soluble CPPO bound", Box::new(|| criterion_4(reports.as_ref().map_err(Clone::clone)?))),
        ("insoluble CPPO structure", Box::new(|| criterion_5(reports.as_ref().map_err(Clone::clone)?))),
        ("PSL(3,4) extensions", Box::new(criterion_6)),
        ("A6 exceptional automorphism", Box::new(criterion_7)),
        ("tower certification", Box::new(criterion_8)),
        ("lemma micro-suite", Box::new(criterion_9)),
        ("determinism", Box::new(criterion_10)),
    ];
    let mut failed = 0;
    for (i, (label, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(detail) => println!("criterion {:>2} PASS  {label}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {label}: {why}", i + 1);
            }
        }
    }
    if failed > 0 {
        eprintln!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
