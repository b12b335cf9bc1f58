//! Property checks on constructed towers.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::group::FiniteGroup;
use crate::quotient::quotient_by_normal;
use crate::structure::{frattini_of_p_group, normal_subgroups};

use super::{validate_tower, Tower};

/// No stage at position 3 or later is cyclic.
pub fn p3_noncyclic_holds(t: &Tower<'_>) -> Result<bool> {
    for s in t.stages().iter().skip(2) {
        let n = s.group.order();
        if s.group.element_orders()?.iter().any(|&o| o as u128 == n) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `C_{P_i}(P_j) ≤ K_i` for all `i < j`.
pub fn centralizer_property_holds(t: &Tower<'_>) -> Result<bool> {
    let kernels = t.kernels()?;
    for i in 0..t.height() {
        for j in i + 1..t.height() {
            let gens = t.stage(j).reduced_generators();
            let c = t.stage(i).centralizer(&gens)?;
            if !c.generators().iter().all(|x| kernels[i].has(x)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Replacing a stage by a subgroup the upper stages still normalise never
/// raises the number of nontrivial effective quotients.
pub fn kernel_monotonicity_holds(t: &Tower<'_>) -> Result<bool> {
    let base = t.effective_height()?;
    let kernels = t.kernels()?;
    for j in 0..t.height() {
        let pj = t.stage(j);
        let mut replacements = vec![
            FiniteGroup::trivial(pj.degree()),
            kernels[j].clone(),
            frattini_of_p_group(pj)?.into_group(),
            pj.center()?.into_group(),
        ];
        if j == 0 {
            replacements.extend(pj.elements()?.iter().map(|x| t.ambient().sub(vec![x.clone()])));
        }
        for r in replacements {
            let mut stages: Vec<(u64, FiniteGroup)> =
                t.stages().iter().map(|s| (s.prime, s.group.clone())).collect();
            stages[j].1 = r;
            if Tower::new(t.ambient(), stages)?.effective_height()? > base {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// One normal subgroup tested against the quotient-tower property.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CasoloInstance {
    pub kernel_order: u128,
    pub image_height: usize,
    pub image_valid: bool,
}

/// For each normal `N` with `N ∩ P_i ≤ C_{P_i}(P_h)` for `i < h`, the images
/// of `P_1, …, P_{h-1}` in `G/N` and whether they form a tower.
pub fn casolo_quotient_instances(t: &Tower<'_>) -> Result<Vec<CasoloInstance>> {
    let h = t.height();
    if h < 2 {
        return Ok(Vec::new());
    }
    let g = t.ambient();
    let bottom = t.stage(h - 1).reduced_generators();
    let mut out = Vec::new();
    for n in normal_subgroups(g)? {
        let hyp = (0..h - 1).try_fold(true, |ok, i| -> Result<bool> {
            Ok(ok
                && t.stage(i)
                    .elements()?
                    .iter()
                    .filter(|x| n.has(x))
                    .all(|x| bottom.iter().all(|y| x.mul(y) == y.mul(x))))
        })?;
        if !hyp {
            continue;
        }
        let q = quotient_by_normal(g, &n)?;
        let stages = (0..h - 1)
            .map(|i| {
                let gens = t.stage(i).generators().iter().map(|x| q.project(x)).collect();
                (t.stages()[i].prime, gens)
            })
            .collect();
        let image = Tower::from_generators(q.group(), stages)?;
        out.push(CasoloInstance {
            kernel_order: n.order(),
            image_height: image.height(),
            image_valid: validate_tower(&image).valid,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::atlas::small::sym;
    use crate::towers::find_max_tower;

    #[test]
    fn s4_properties() {
        let s4 = sym(4).unwrap();
        let t = crate::towers::tests::s4_tower(&s4);
        assert!(p3_noncyclic_holds(&t).unwrap());
        assert!(centralizer_property_holds(&t).unwrap());
        assert!(kernel_monotonicity_holds(&t).unwrap());
        let inst = casolo_quotient_instances(&t).unwrap();
        // N = 1 and N = V4 satisfy the hypothesis.
        assert_eq!(inst.iter().map(|c| c.kernel_order).collect::<Vec<_>>(), vec![1, 4]);
        assert!(inst.iter().all(|c| c.image_valid));
        let (_, w) = find_max_tower(&s4).unwrap();
        assert!(centralizer_property_holds(&w).unwrap());
    }
}
