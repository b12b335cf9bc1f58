use std::collections::{BTreeMap, HashMap};

use fixedbitset::FixedBitSet;

use crate::arith::is_prime;
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Subgroup};

/// Default bound on the number of classes for lattice computations.
pub const DEFAULT_CLASS_CAP: usize = 60;

/// All normal subgroups, sorted by order and then by the classes they
/// contain.
///
/// A normal subgroup is a union of classes, hence the join of the normal
/// closures of its classes; the list is the join-closure of those.
pub fn normal_subgroups(g: &FiniteGroup) -> Result<Vec<Subgroup<'_>>> {
    normal_subgroups_capped(g, DEFAULT_CLASS_CAP)
}

pub fn normal_subgroups_capped(g: &FiniteGroup, class_cap: usize) -> Result<Vec<Subgroup<'_>>> {
    let classes = g.conjugacy_classes()?;
    if classes.len() > class_cap {
        return Err(Error::TooManyClasses {
            count: classes.len(),
            cap: class_cap,
        });
    }
    let reps: Vec<_> = classes.iter().map(|c| c.representative.clone()).collect();
    let mask_of = |h: &FiniteGroup| {
        let mut m = FixedBitSet::with_capacity(reps.len());
        for (i, r) in reps.iter().enumerate() {
            if h.has(r) {
                m.insert(i);
            }
        }
        m
    };
    let mut found: BTreeMap<FixedBitSet, FiniteGroup> = BTreeMap::new();
    let mut list: Vec<FixedBitSet> = Vec::new();
    let trivial = g.sub(Vec::new());
    let m = mask_of(&trivial);
    found.insert(m.clone(), trivial);
    list.push(m);
    for r in &reps {
        let n = g.normal_closure_unchecked(std::slice::from_ref(r));
        let m = mask_of(&n);
        if !found.contains_key(&m) {
            found.insert(m.clone(), n);
            list.push(m);
        }
    }
    let mut joined: HashMap<FixedBitSet, FixedBitSet> = HashMap::new();
    let mut i = 0;
    while i < list.len() {
        for j in 0..i {
            let mut union = list[i].clone();
            union.union_with(&list[j]);
            if found.contains_key(&union) || joined.contains_key(&union) {
                continue;
            }
            let mut gens = found[&list[i]].generators().to_vec();
            gens.extend(found[&list[j]].generators().iter().cloned());
            let n = g.sub(gens);
            let m = mask_of(&n);
            joined.insert(union, m.clone());
            if !found.contains_key(&m) {
                found.insert(m.clone(), n);
                list.push(m);
            }
        }
        i += 1;
    }
    let mut out: Vec<(FixedBitSet, FiniteGroup)> = found.into_iter().collect();
    out.sort_by(|a, b| a.1.order().cmp(&b.1.order()).then_with(|| a.0.cmp(&b.0)));
    Ok(out.into_iter().map(|(_, n)| Subgroup::new(g, n)).collect())
}

/// Nonabelian simplicity, with prime-order groups optionally admitted.
///
/// Checked as: perfect, and the normal closure of every nontrivial class is
/// the whole group. This agrees with the lattice `{1, G}` without needing
/// the class cap.
pub fn is_simple_with(g: &FiniteGroup, allow_abelian: bool) -> Result<bool> {
    if g.is_abelian() {
        return Ok(allow_abelian && is_prime(g.order() as u64));
    }
    if g.derived_subgroup().order() != g.order() {
        return Ok(false);
    }
    for class in g.conjugacy_classes()? {
        let r = &class.representative;
        if !r.is_identity()
            && g.normal_closure_unchecked(std::slice::from_ref(r)).order() != g.order()
        {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn is_simple(g: &FiniteGroup) -> Result<bool> {
    is_simple_with(g, false)
}

/// Nontrivial normal subgroups containing no smaller nontrivial one.
pub fn minimal_normal_subgroups(g: &FiniteGroup) -> Result<Vec<Subgroup<'_>>> {
    let all = normal_subgroups(g)?;
    let nontrivial: Vec<_> = all.into_iter().filter(|n| !n.is_trivial()).collect();
    let minimal = nontrivial
        .iter()
        .filter(|n| {
            !nontrivial
                .iter()
                .any(|m| m.order() < n.order() && m.is_subgroup_of(n))
        })
        .cloned()
        .collect();
    Ok(minimal)
}

/// Join of the minimal normal subgroups.
pub fn socle(g: &FiniteGroup) -> Result<Subgroup<'_>> {
    let gens = minimal_normal_subgroups(g)?
        .iter()
        .flat_map(|n| n.generators().to_vec())
        .collect();
    Ok(Subgroup::new(g, g.sub(gens)))
}
