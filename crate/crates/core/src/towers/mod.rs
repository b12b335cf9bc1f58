//! Turull towers: effective quotients, validity, irreducibility,
//! containment and tower search.
//!
//! A tower `(P₁, …, P_h)` is listed top-down. Kernels run the other way:
//! `K_h = 1` and `K_i = { x ∈ P_i : [y, x] ∈ K_{i+1} for y ∈ P_{i+1} }`, so
//! that `P̄_i = P_i / K_i`.

mod checks;
mod irreducible;
mod probe;
mod search;

use serde::{Deserialize, Serialize};

use crate::arith::is_prime;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::perm::{commutator_unchecked, Permutation};
use crate::quotient::quotient_by_normal;

pub use checks::{
    casolo_quotient_instances, centralizer_property_holds, kernel_monotonicity_holds, p3_noncyclic_holds,
    CasoloInstance,
};
pub use irreducible::{is_irreducible_tower, is_irreducible_tower_with, IrreducibilityReport, SearchCaps, Verdict};
pub use probe::{probe_towers, ProbeLimits, ProbeReport, DEFAULT_PROBE_ORDER};
pub use search::find_max_tower;

#[derive(Clone, Debug)]
pub struct Stage {
    pub prime: u64,
    pub group: FiniteGroup,
}

/// Stages in an ambient group, top first.
#[derive(Clone, Debug)]
pub struct Tower<'a> {
    ambient: &'a FiniteGroup,
    stages: Vec<Stage>,
}

/// Serialised form: primes with generators in cycle notation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StageRecord {
    pub prime: u64,
    pub generators: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TowerRecord {
    pub height: usize,
    pub stages: Vec<StageRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ItemCheck {
    pub item: u8,
    pub holds: bool,
    pub detail: String,
}

/// Outcome of `validate_tower`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TowerValidity {
    pub valid: bool,
    pub height: usize,
    pub primes: Vec<u64>,
    pub items: Vec<ItemCheck>,
    /// First failing item and its witness, if any.
    pub failure: Option<ItemCheck>,
}

impl<'a> Tower<'a> {
    /// Stages must be subgroups of `ambient`; the tower conditions are not
    /// checked here.
    pub fn new(ambient: &'a FiniteGroup, stages: Vec<(u64, FiniteGroup)>) -> Result<Self> {
        for (_, p) in &stages {
            if p.degree() != ambient.degree() {
                return Err(Error::DegreeMismatch {
                    left: ambient.degree(),
                    right: p.degree(),
                });
            }
            if let Some(x) = p.generators().iter().find(|x| !ambient.has(x)) {
                return Err(Error::NotMember(x.to_string()));
            }
        }
        Ok(Tower {
            ambient,
            stages: stages
                .into_iter()
                .map(|(prime, group)| Stage { prime, group })
                .collect(),
        })
    }

    /// Stages given by generator lists.
    pub fn from_generators(ambient: &'a FiniteGroup, stages: Vec<(u64, Vec<Permutation>)>) -> Result<Self> {
        let stages = stages
            .into_iter()
            .map(|(p, gens)| (p, ambient.sub(gens)))
            .collect();
        Tower::new(ambient, stages)
    }

    pub fn ambient(&self) -> &'a FiniteGroup {
        self.ambient
    }

    pub fn stages(&self) -> &[Stage] {
        &self.stages
    }

    pub fn height(&self) -> usize {
        self.stages.len()
    }

    pub fn primes(&self) -> Vec<u64> {
        self.stages.iter().map(|s| s.prime).collect()
    }

    pub fn stage(&self, i: usize) -> &FiniteGroup {
        &self.stages[i].group
    }

    pub fn record(&self) -> TowerRecord {
        TowerRecord {
            height: self.height(),
            stages: self
                .stages
                .iter()
                .map(|s| StageRecord {
                    prime: s.prime,
                    generators: s.group.generators().iter().map(|g| g.to_string()).collect(),
                })
                .collect(),
        }
    }

    pub fn from_record(ambient: &'a FiniteGroup, rec: &TowerRecord) -> Result<Self> {
        let mut stages = Vec::new();
        for s in &rec.stages {
            let gens = s
                .generators
                .iter()
                .map(|g| Permutation::parse(g, ambient.degree()))
                .collect::<Result<Vec<_>>>()?;
            stages.push((s.prime, gens));
        }
        Tower::from_generators(ambient, stages)
    }

    /// Items 1, 2 and 4: prime-power stages, normalisation downward,
    /// distinct adjacent primes.
    fn structural_items(&self) -> Vec<ItemCheck> {
        let mut items = Vec::new();
        let bad = self.stages.iter().enumerate().find(|(_, s)| {
            !is_prime(s.prime) || !s.group.is_p_group(s.prime)
        });
        items.push(match bad {
            None => ItemCheck { item: 1, holds: true, detail: String::new() },
            Some((i, s)) => ItemCheck {
                item: 1,
                holds: false,
                detail: format!("P{} of order {} is not a {}-group", i + 1, s.group.order(), s.prime),
            },
        });
        let mut item2 = ItemCheck { item: 2, holds: true, detail: String::new() };
        'outer: for i in 0..self.stages.len() {
            let gens = self.stages[i].group.reduced_generators();
            for j in i + 1..self.stages.len() {
                let pj = &self.stages[j].group;
                if let Some(x) = gens.iter().find(|x| !pj.is_normalized_by(std::slice::from_ref(x))) {
                    item2 = ItemCheck {
                        item: 2,
                        holds: false,
                        detail: format!("{x} in P{} does not normalise P{}", i + 1, j + 1),
                    };
                    break 'outer;
                }
            }
        }
        items.push(item2);
        let clash = (1..self.stages.len()).find(|&i| self.stages[i - 1].prime == self.stages[i].prime);
        items.push(ItemCheck {
            item: 4,
            holds: clash.is_none(),
            detail: clash
                .map(|i| format!("P{} and P{} share the prime {}", i, i + 1, self.stages[i].prime))
                .unwrap_or_default(),
        });
        items
    }

    /// `K_i` for every stage, from the bottom up. Requires items 1, 2, 4.
    pub fn kernels(&self) -> Result<Vec<FiniteGroup>> {
        if let Some(f) = self.structural_items().into_iter().find(|c| !c.holds) {
            return Err(Error::InvalidTower { item: f.item, detail: f.detail });
        }
        Ok(self.kernels_unchecked()?)
    }

    /// Kernels computed set-wise, with no structural checks.
    pub(crate) fn kernels_unchecked(&self) -> Result<Vec<FiniteGroup>> {
        let h = self.stages.len();
        let mut kernels = vec![FiniteGroup::trivial(self.ambient.degree()); h];
        for i in (0..h.saturating_sub(1)).rev() {
            let below = self.stages[i + 1].group.reduced_generators();
            let kb = &kernels[i + 1];
            let kept: Vec<Permutation> = self.stages[i]
                .group
                .elements()?
                .iter()
                .filter(|x| below.iter().all(|y| kb.has(&commutator_unchecked(y, x))))
                .cloned()
                .collect();
            kernels[i] = self.ambient.sub(kept);
        }
        Ok(kernels)
    }

    /// Number of stages with nontrivial effective quotient.
    pub fn effective_height(&self) -> Result<usize> {
        let k = self.kernels_unchecked()?;
        Ok(self
            .stages
            .iter()
            .zip(&k)
            .filter(|(s, k)| s.group.order() > k.order())
            .count())
    }

    /// The groups `P̄_i = P_i / K_i`, as coset actions.
    pub fn effective_quotients(&self) -> Result<Vec<FiniteGroup>> {
        let kernels = self.kernels()?;
        self.stages
            .iter()
            .zip(&kernels)
            .map(|(s, k)| Ok(quotient_by_normal(&s.group, k)?.into_group()))
            .collect()
    }
}

/// Checks the four tower conditions and reports the first failure.
pub fn validate_tower(t: &Tower<'_>) -> TowerValidity {
    let mut items = t.structural_items();
    // Kernels need only items 1 and 2.
    let structural_ok = items[0].holds && items[1].holds;
    let item3 = if t.stages.is_empty() {
        ItemCheck { item: 3, holds: false, detail: "empty tower".into() }
    } else if !structural_ok {
        ItemCheck { item: 3, holds: false, detail: "not evaluated".into() }
    } else {
        match t.kernels_unchecked() {
            Err(e) => ItemCheck { item: 3, holds: false, detail: e.to_string() },
            Ok(k) => match t.stages.iter().zip(&k).position(|(s, k)| s.group.order() == k.order()) {
                None => ItemCheck { item: 3, holds: true, detail: String::new() },
                Some(i) => ItemCheck {
                    item: 3,
                    holds: false,
                    detail: format!("effective quotient of P{} is trivial", i + 1),
                },
            },
        }
    };
    items.insert(2, item3);
    let failure = items.iter().find(|c| !c.holds).cloned();
    TowerValidity {
        valid: failure.is_none(),
        height: t.height(),
        primes: t.primes(),
        items,
        failure,
    }
}

/// The increasing map `f` (0-based) with `t1_i ⊆ t2_{f(i)}`, if one exists.
/// Greedy matching is optimal for subsequence embedding.
pub fn tower_containment(t1: &Tower<'_>, t2: &Tower<'_>) -> Option<Vec<usize>> {
    let mut f = Vec::with_capacity(t1.height());
    let mut j = 0;
    for s in &t1.stages {
        while j < t2.height() && !s.group.is_subgroup_of(&t2.stages[j].group) {
            j += 1;
        }
        if j == t2.height() {
            return None;
        }
        f.push(j);
        j += 1;
    }
    Some(f)
}

pub fn tower_contains(t1: &Tower<'_>, t2: &Tower<'_>) -> bool {
    tower_containment(t1, t2).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::atlas::small::sym;

    fn p(s: &str, n: usize) -> Permutation {
        Permutation::parse(s, n).unwrap()
    }

    pub(crate) fn s4_tower(s4: &FiniteGroup) -> Tower<'_> {
        Tower::from_generators(
            s4,
            vec![
                (2, vec![p("(1 2)", 4)]),
                (3, vec![p("(1 2 3)", 4)]),
                (2, vec![p("(1 2)(3 4)", 4), p("(1 3)(2 4)", 4)]),
            ],
        )
        .unwrap()
    }

    #[test]
    fn s4_kernels_are_trivial() {
        let s4 = sym(4).unwrap();
        let t = s4_tower(&s4);
        assert!(t.kernels().unwrap().iter().all(|k| k.is_trivial()));
        let q: Vec<u128> = t.effective_quotients().unwrap().iter().map(|g| g.order()).collect();
        assert_eq!(q, vec![2, 3, 4]);
        let v = validate_tower(&t);
        assert!(v.valid);
        assert_eq!((v.height, v.primes.clone()), (3, vec![2, 3, 2]));
    }

    #[test]
    fn height_one_and_invalid_towers() {
        let s4 = sym(4).unwrap();
        let syl = crate::structure::sylow_subgroup(&s4, 2).unwrap().into_group();
        let t = Tower::new(&s4, vec![(2, syl.clone())]).unwrap();
        assert!(validate_tower(&t).valid);
        assert_eq!(t.effective_quotients().unwrap()[0].order(), 8);

        let s5 = sym(5).unwrap();
        let t = Tower::from_generators(&s5, vec![(2, vec![p("(1 2)", 5)]), (3, vec![p("(3 4 5)", 5)])]).unwrap();
        let k = t.kernels().unwrap();
        assert_eq!(k[0].order(), 2);
        let v = validate_tower(&t);
        assert_eq!(v.failure.unwrap().item, 3);

        let t = Tower::from_generators(
            &s4,
            vec![(2, vec![p("(1 2)", 4)]), (2, vec![p("(1 2)(3 4)", 4), p("(1 3)(2 4)", 4)])],
        )
        .unwrap();
        assert_eq!(validate_tower(&t).failure.unwrap().item, 4);
        assert!(matches!(t.kernels(), Err(Error::InvalidTower { item: 4, .. })));

        let t = Tower::from_generators(&s4, vec![(3, vec![p("(1 2 3)", 4)]), (2, vec![p("(1 2)", 4)])]).unwrap();
        assert_eq!(validate_tower(&t).failure.unwrap().item, 2);
        let t = Tower::from_generators(&s4, vec![(3, vec![p("(1 2)", 4)])]).unwrap();
        assert_eq!(validate_tower(&t).failure.unwrap().item, 1);
    }

    #[test]
    fn containment() {
        let s4 = sym(4).unwrap();
        let t = s4_tower(&s4);
        assert_eq!(tower_containment(&t, &t), Some(vec![0, 1, 2]));
        let t2 = Tower::from_generators(
            &s4,
            vec![(3, vec![p("(1 2 3)", 4)]), (2, vec![p("(1 2)(3 4)", 4), p("(1 3)(2 4)", 4)])],
        )
        .unwrap();
        assert_eq!(tower_containment(&t2, &t), Some(vec![1, 2]));
        assert!(!tower_contains(&t, &t2));
    }

    #[test]
    fn record_round_trip() {
        let s4 = sym(4).unwrap();
        let t = s4_tower(&s4);
        let r = t.record();
        let back = Tower::from_record(&s4, &r).unwrap();
        assert_eq!(back.record(), r);
        assert!(validate_tower(&back).valid);
    }
}
