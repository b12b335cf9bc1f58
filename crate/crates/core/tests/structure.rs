use std::collections::BTreeSet;

use cppo::atlas::{build_named, small};
use cppo::structure::*;
use cppo::{commutator, FiniteGroup, Permutation};

fn g(name: &str) -> FiniteGroup {
    build_named(name).unwrap()
}

fn closure(degree: usize, seed: &BTreeSet<Permutation>) -> BTreeSet<Permutation> {
    let mut set: BTreeSet<Permutation> = seed.clone();
    set.insert(Permutation::identity(degree));
    loop {
        let mut add = Vec::new();
        for a in &set {
            for b in seed {
                let c = a.mul(b);
                if !set.contains(&c) {
                    add.push(c);
                }
            }
        }
        if add.is_empty() {
            return set;
        }
        set.extend(add);
    }
}

fn derived_oracle(g: &FiniteGroup) -> usize {
    let els = g.elements().unwrap();
    let comms: BTreeSet<_> = els
        .iter()
        .flat_map(|x| els.iter().map(move |y| commutator(x, y).unwrap()))
        .collect();
    closure(g.degree(), &comms).len()
}

#[test]
fn derived_subgroup_matches_closure() {
    for name in ["sym(4)", "sl2_3", "q8", "agl1(7)", "dihedral(12)", "alt(5)", "extraspecial(3,-)"] {
        let grp = g(name);
        assert_eq!(grp.derived_subgroup().order() as usize, derived_oracle(&grp), "{name}");
    }
}

#[test]
fn s4_series() {
    let s4 = g("sym(4)");
    assert_eq!(derived_series(&s4).orders(), vec![24, 12, 4, 1]);
    assert_eq!(lower_central_series(&s4).orders(), vec![24, 12]);
    assert_eq!(upper_fitting_series(&s4).unwrap().orders(), vec![1, 4, 12, 24]);
    assert_eq!(fitting_height(&s4).unwrap(), 3);
    assert!(is_soluble(&s4) && !is_nilpotent(&s4) && !is_perfect(&s4));
}

#[test]
fn sl23_and_q8() {
    let sl = g("sl2_3");
    assert_eq!(gamma_infinity(&sl).order(), 8);
    assert!(gamma_infinity(&sl).p_group_prime() == Some(2));
    assert_eq!(fitting_subgroup(&sl).unwrap().order(), 8);
    assert_eq!(fitting_height(&sl).unwrap(), 2);
    let q8 = g("q8");
    assert!(is_nilpotent(&q8));
    assert_eq!(fitting_height(&q8).unwrap(), 1);
    assert_eq!(frattini_of_p_group(&q8).unwrap().order(), 2);
    assert!(is_extraspecial(&q8).unwrap());
    assert!(!is_extraspecial(&g("dihedral(16)")).unwrap());
}

#[test]
fn sylow_orders() {
    for (name, p, o) in [("sym(4)", 2, 8), ("sym(4)", 3, 3), ("alt(5)", 5, 5), ("psl2(7)", 2, 8), ("agl1(7)", 5, 1), ("sym(6)", 3, 9)] {
        let grp = g(name);
        let s = sylow_subgroup(&grp, p).unwrap();
        assert_eq!(s.order(), o, "{name} {p}");
        assert!(s.is_subgroup_of(&grp));
    }
    assert!(sylow_subgroup(&g("sym(4)"), 4).is_err());
}

#[test]
fn cores_and_fitting() {
    assert_eq!(p_core(&g("asl2_4"), 2).unwrap().order(), 16);
    assert_eq!(fitting_subgroup(&g("agl1(7)")).unwrap().order(), 7);
    assert_eq!(fitting_subgroup(&g("alt(5)")).unwrap().order(), 1);
    assert_eq!(p_core(&g("sym(4)"), 3).unwrap().order(), 1);
    let dp = small::direct_product(&g("q8"), &g("cyclic(3)"));
    assert_eq!(p_prime_part_of_nilpotent(&dp, 2).unwrap().order(), 3);
    assert!(p_prime_part_of_nilpotent(&g("sym(3)"), 2).is_err());
}

#[test]
fn radicals_and_socles() {
    let m10 = g("m10");
    assert_eq!(soluble_radical(&m10).unwrap().order(), 1);
    assert_eq!(socle(&m10).unwrap().order(), 360);
    assert_eq!(minimal_normal_subgroups(&m10).unwrap().len(), 1);
    let asl = g("asl2_4");
    assert_eq!(soluble_radical(&asl).unwrap().order(), 16);
    assert!(fitting_height(&asl).is_err());
    let s4 = g("sym(4)");
    let orders: Vec<u128> = normal_subgroups(&s4).unwrap().iter().map(|n| n.order()).collect();
    assert_eq!(orders, vec![1, 4, 12, 24]);
}

#[test]
fn simplicity() {
    for name in ["alt(5)", "psl2(7)", "psl2(8)", "psl2(11)", "alt(7)"] {
        assert!(is_simple(&g(name)).unwrap(), "{name}");
    }
    for name in ["sym(5)", "sl2_5", "m10", "cyclic(5)", "sym(4)"] {
        assert!(!is_simple(&g(name)).unwrap(), "{name}");
    }
    assert!(is_simple_with(&g("cyclic(5)"), true).unwrap());
    assert!(is_quasisimple(&g("sl2_5")).unwrap());
    assert!(is_quasisimple(&g("alt(5)")).unwrap());
    assert!(!is_quasisimple(&g("sym(5)")).unwrap());
}

#[test]
fn fingerprint_table_matches_atlas() {
    for (name, id) in [
        ("psl2(4)", SimpleEppoId::PSL2_4),
        ("psl2(5)", SimpleEppoId::PSL2_4),
        ("psl2(7)", SimpleEppoId::PSL2_7),
        ("psl2(8)", SimpleEppoId::PSL2_8),
        ("psl2(9)", SimpleEppoId::PSL2_9),
        ("alt(6)", SimpleEppoId::PSL2_9),
        ("psl2(17)", SimpleEppoId::PSL2_17),
        ("psl3_4", SimpleEppoId::PSL3_4),
        ("sz8", SimpleEppoId::Sz8),
    ] {
        let grp = g(name);
        assert_eq!(identify_simple_eppo(&grp).unwrap(), id, "{name}");
        let (order, fp) = id.fingerprint().unwrap();
        assert_eq!(grp.order(), order);
        assert_eq!(grp.class_orders().unwrap(), fp, "{name}");
    }
    for name in ["alt(8)", "psl2(13)", "psl2(11)", "alt(7)"] {
        assert_eq!(identify_simple_eppo(&g(name)).unwrap(), SimpleEppoId::NotInList, "{name}");
    }
    assert!(identify_simple_eppo(&g("sym(5)")).is_err());
}
