use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::arith::is_prime;
use crate::error::{Error, Result};
use crate::group::{normal_closure_under, FiniteGroup};
use crate::perm::{commutator_unchecked, Permutation};
use crate::structure::frattini_of_p_group;

use super::{validate_tower, ItemCheck, Tower};

/// Bounds on the search for elementary abelian `H_i ≤ P̄_{i-1}`.
#[derive(Clone, Copy, Debug)]
pub struct SearchCaps {
    /// Below this quotient order every elementary abelian subgroup is tried.
    pub exhaustive_below: u128,
    /// Otherwise only subgroups on at most this many generators.
    pub max_generators: usize,
}

impl Default for SearchCaps {
    fn default() -> Self {
        SearchCaps {
            exhaustive_below: 256,
            max_generators: 3,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
    Undecided,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IrreducibilityReport {
    pub verdict: Verdict,
    pub items: Vec<ItemCheck>,
    /// Item whose search hit a cap.
    pub undecided: Option<ItemCheck>,
}

impl IrreducibilityReport {
    pub fn is_irreducible(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn first_failure(&self) -> Option<&ItemCheck> {
        self.items.iter().find(|c| !c.holds)
    }
}

struct StageData {
    p: u64,
    group: FiniteGroup,
    kernel: FiniteGroup,
    /// Preimage of `Φ(P̄)`.
    frattini: FiniteGroup,
}

fn all_in(members: &[Permutation], k: &FiniteGroup, f: impl Fn(&Permutation) -> Permutation) -> bool {
    members.iter().all(|x| k.has(&f(x)))
}

fn pass(item: u8) -> ItemCheck {
    ItemCheck { item, holds: true, detail: String::new() }
}

fn fail(item: u8, detail: String) -> ItemCheck {
    ItemCheck { item, holds: false, detail }
}

pub fn is_irreducible_tower(t: &Tower<'_>) -> Result<IrreducibilityReport> {
    is_irreducible_tower_with(t, SearchCaps::default())
}

pub fn is_irreducible_tower_with(t: &Tower<'_>, caps: SearchCaps) -> Result<IrreducibilityReport> {
    let v = validate_tower(t);
    if let Some(f) = v.failure {
        return Err(Error::InvalidTower { item: f.item, detail: f.detail });
    }
    let kernels = t.kernels_unchecked()?;
    let g = t.ambient();
    let data: Vec<StageData> = t
        .stages()
        .iter()
        .zip(kernels)
        .map(|(s, kernel)| {
            let mut gens = frattini_of_p_group(&s.group)?.reduced_generators();
            gens.extend(kernel.generators().iter().cloned());
            Ok(StageData {
                p: s.prime,
                frattini: g.sub(gens),
                group: s.group.clone(),
                kernel,
            })
        })
        .collect::<Result<_>>()?;

    let item1 = item_one(&data)?;
    let item2 = item_two(&data);
    let (item3, undecided) = item_three(g, &data, caps)?;
    let item4 = item_four(g, &data)?;
    let items = vec![item1, item2, item3, item4];
    let verdict = if items.iter().any(|c| !c.holds) {
        Verdict::Fail
    } else if undecided.is_some() {
        Verdict::Undecided
    } else {
        Verdict::Pass
    };
    Ok(IrreducibilityReport { verdict, items, undecided })
}

fn item_one(data: &[StageData]) -> Result<ItemCheck> {
    for (i, s) in data.iter().enumerate() {
        let phi_f = frattini_of_p_group(&s.frattini)?;
        if !all_in(&phi_f.reduced_generators(), &s.kernel, Clone::clone) {
            return Ok(fail(1, format!("Φ(Φ(P̄{})) is nontrivial", i + 1)));
        }
        let pg = s.group.reduced_generators();
        let fg = s.frattini.reduced_generators();
        if !fg.iter().all(|x| all_in(&pg, &s.kernel, |y| commutator_unchecked(x, y))) {
            return Ok(fail(1, format!("Φ(P̄{}) is not central", i + 1)));
        }
        if s.p != 2 {
            let p = s.p as i64;
            if let Some(x) = s.group.elements()?.iter().find(|x| !s.kernel.has(&x.pow(p))) {
                return Ok(fail(1, format!("P̄{} has exponent above {}: {x}", i + 1, s.p)));
            }
        }
        if i > 0 {
            let above = data[i - 1].group.reduced_generators();
            if !above.iter().all(|a| all_in(&fg, &s.kernel, |y| commutator_unchecked(y, a))) {
                return Ok(fail(1, format!("P{} does not centralise Φ(P̄{})", i, i + 1)));
            }
        }
    }
    Ok(pass(1))
}

fn item_two(data: &[StageData]) -> ItemCheck {
    let top = &data[0];
    let cyclic = top.group.element_orders().map_or(false, |o| o.iter().any(|&o| o as u128 == top.group.order()));
    if !cyclic {
        return fail(2, format!("P1 of order {} is not cyclic", top.group.order()));
    }
    let q = top.group.order() / top.kernel.order();
    if !is_prime(q as u64) {
        return fail(2, format!("P̄1 has order {q}"));
    }
    pass(2)
}

/// `[H, P̄_i] = P̄_i` with `H` given by a preimage in `P_{i-1}`.
fn covers(h: &[Permutation], s: &StageData) -> bool {
    let pg = s.group.reduced_generators();
    let mut comms = Vec::new();
    for x in h {
        for y in &pg {
            comms.push(commutator_unchecked(x, y));
        }
    }
    let mut by = h.to_vec();
    by.extend(pg.iter().cloned());
    comms.extend(s.kernel.generators().iter().cloned());
    normal_closure_under(s.group.degree(), &comms, &by).order() == s.group.order()
}

fn item_three(g: &FiniteGroup, data: &[StageData], caps: SearchCaps) -> Result<(ItemCheck, Option<ItemCheck>)> {
    for i in 1..data.len() {
        let above = &data[i - 1];
        let p = above.p as i64;
        let k = &above.kernel;
        let candidates: Vec<Permutation> = above
            .group
            .elements()?
            .iter()
            .filter(|x| !k.has(x) && k.has(&x.pow(p)))
            .cloned()
            .collect();
        let exhaustive = above.group.order() / k.order() < caps.exhaustive_below;
        let depth = if exhaustive { usize::MAX } else { caps.max_generators };
        let mut seen = BTreeSet::new();
        let mut truncated = false;
        let found = search_elementary(g, &candidates, k, &data[i], &mut Vec::new(), depth, &mut seen, &mut truncated);
        if !found {
            if truncated {
                let c = fail(3, format!("no H for P̄{} within {} generators", i + 1, caps.max_generators));
                return Ok((pass(3), Some(c)));
            }
            return Ok((fail(3, format!("no elementary abelian H ≤ P̄{i} with [H, P̄{}] = P̄{}", i + 1, i + 1)), None));
        }
    }
    Ok((pass(3), None))
}

#[allow(clippy::too_many_arguments)]
fn search_elementary(
    g: &FiniteGroup,
    candidates: &[Permutation],
    k: &FiniteGroup,
    below: &StageData,
    chosen: &mut Vec<Permutation>,
    depth: usize,
    seen: &mut BTreeSet<Vec<Permutation>>,
    truncated: &mut bool,
) -> bool {
    let mut gens = chosen.clone();
    gens.extend(k.generators().iter().cloned());
    let h = g.sub(gens.clone());
    if !chosen.is_empty() && covers(&gens, below) {
        return true;
    }
    let extensions: Vec<&Permutation> = candidates
        .iter()
        .filter(|x| !h.has(x) && chosen.iter().all(|c| k.has(&commutator_unchecked(c, x))))
        .collect();
    if extensions.is_empty() {
        return false;
    }
    if chosen.len() >= depth {
        *truncated = true;
        return false;
    }
    for x in extensions {
        chosen.push(x.clone());
        let mut key_gens = chosen.clone();
        key_gens.extend(k.generators().iter().cloned());
        let mut key = g.sub(key_gens).chain().elements();
        key.sort();
        if seen.insert(key) && search_elementary(g, candidates, k, below, chosen, depth, seen, truncated) {
            return true;
        }
        chosen.pop();
    }
    false
}

fn item_four(g: &FiniteGroup, data: &[StageData]) -> Result<ItemCheck> {
    let mut by: Vec<Permutation> = Vec::new();
    for (i, s) in data.iter().enumerate() {
        for x in s.group.elements()? {
            if s.frattini.has(x) {
                continue;
            }
            let c = normal_closure_under(g.degree(), std::slice::from_ref(x), &by);
            if c.order() != s.group.order() {
                return Ok(fail(
                    4,
                    format!("invariant closure of {x} has order {} < |P{}| = {}", c.order(), i + 1, s.group.order()),
                ));
            }
        }
        by.extend(s.group.reduced_generators());
    }
    Ok(pass(4))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::atlas::small::sym;

    fn p(s: &str, n: usize) -> Permutation {
        Permutation::parse(s, n).unwrap()
    }

    #[test]
    fn s4_tower_is_irreducible() {
        let s4 = sym(4).unwrap();
        let t = super::super::tests::s4_tower(&s4);
        let r = is_irreducible_tower(&t).unwrap();
        assert_eq!(r.verdict, Verdict::Pass, "{r:?}");
    }

    #[test]
    fn noncyclic_top_fails_item_two() {
        let g = FiniteGroup::new(vec![p("(1 2)", 5), p("(1 2 3)", 5), p("(4 5)", 5)]).unwrap();
        let t = Tower::from_generators(&g, vec![(2, vec![p("(1 2)", 5), p("(4 5)", 5)]), (3, vec![p("(1 2 3)", 5)])])
            .unwrap();
        let r = is_irreducible_tower(&t).unwrap();
        assert_eq!(r.verdict, Verdict::Fail);
        assert_eq!(r.first_failure().unwrap().item, 2);
    }

    #[test]
    fn reducible_action_fails_item_four() {
        // a inverts both factors of C3 × C3, so ⟨(1 2 3)⟩ is invariant.
        let a = p("(2 3)(5 6)", 6);
        let g = FiniteGroup::new(vec![a.clone(), p("(1 2 3)", 6), p("(4 5 6)", 6)]).unwrap();
        let t = Tower::from_generators(&g, vec![(2, vec![a]), (3, vec![p("(1 2 3)", 6), p("(4 5 6)", 6)])]).unwrap();
        assert!(validate_tower(&t).valid);
        let r = is_irreducible_tower(&t).unwrap();
        assert_eq!(r.verdict, Verdict::Fail);
        assert!(r.items[0].holds && r.items[1].holds && r.items[2].holds);
        assert_eq!(r.first_failure().unwrap().item, 4);
    }

    #[test]
    fn invalid_tower_is_an_error() {
        let s4 = sym(4).unwrap();
        let t = Tower::from_generators(&s4, vec![(2, vec![p("(1 2)", 4)]), (2, vec![p("(3 4)", 4)])]).unwrap();
        assert!(is_irreducible_tower(&t).is_err());
    }
}
