use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::perm::commutator_unchecked;
use crate::structure::{fitting_height, p_core, sylow_subgroup};

use super::probe::{find_tower_exhaustive, ProbeLimits};
use super::{validate_tower, Tower};

/// Fallback exhaustive search runs up to this order.
const EXHAUSTIVE_FALLBACK_ORDER: u128 = 2000;

struct Partial {
    prime: u64,
    group: FiniteGroup,
    kernel: FiniteGroup,
}

/// Bottom-up: `O_p(G)` at the bottom, then at each step the Sylow subgroup,
/// for the smallest workable prime, of the common normaliser of the stages
/// so far.
fn greedy(g: &FiniteGroup, below: &mut Vec<Partial>, normaliser: &FiniteGroup, remaining: usize) -> Result<bool> {
    if remaining == 0 {
        return Ok(true);
    }
    let last = below.last().expect("bottom stage chosen");
    let (last_prime, last_kernel) = (last.prime, last.kernel.clone());
    let bg = last.group.reduced_generators();
    for p in normaliser.prime_divisors() {
        if p == last_prime {
            continue;
        }
        let s = sylow_subgroup(normaliser, p)?.into_group();
        let kept: Vec<_> = s
            .elements()?
            .iter()
            .filter(|x| bg.iter().all(|y| last_kernel.has(&commutator_unchecked(y, x))))
            .cloned()
            .collect();
        if kept.len() as u128 == s.order() {
            continue;
        }
        let kernel = g.sub(kept);
        let next = normaliser.normalizer(&s)?.into_group();
        below.push(Partial { prime: p, group: s, kernel });
        if greedy(g, below, &next, remaining - 1)? {
            return Ok(true);
        }
        below.pop();
    }
    Ok(false)
}

fn greedy_tower(g: &FiniteGroup, h: usize) -> Result<Option<Vec<(u64, FiniteGroup)>>> {
    for p in g.prime_divisors() {
        let core = p_core(g, p)?.into_group();
        if core.is_trivial() {
            continue;
        }
        let mut below = vec![Partial {
            prime: p,
            kernel: FiniteGroup::trivial(g.degree()),
            group: core.clone(),
        }];
        let n = g.normalizer(&core)?.into_group();
        if greedy(g, &mut below, &n, h - 1)? {
            return Ok(Some(below.into_iter().rev().map(|s| (s.prime, s.group)).collect()));
        }
    }
    Ok(None)
}

/// A tower of height `h(G)` for soluble `G`, validated before returning.
pub fn find_max_tower(g: &FiniteGroup) -> Result<(usize, Tower<'_>)> {
    let h = fitting_height(g)?;
    if h == 0 {
        return Ok((0, Tower::new(g, Vec::new())?));
    }
    let stages = match greedy_tower(g, h)? {
        Some(s) => s,
        None if g.order() <= EXHAUSTIVE_FALLBACK_ORDER => {
            let limits = ProbeLimits {
                max_order: EXHAUSTIVE_FALLBACK_ORDER,
                ..ProbeLimits::default()
            };
            let found = find_tower_exhaustive(g, h, limits)?
                .ok_or_else(|| Error::Defect(format!("no tower of height {h} found")))?;
            found.into_iter().map(|(p, gens)| (p, g.sub(gens))).collect()
        }
        None => return Err(Error::Defect(format!("tower search did not reach height {h}"))),
    };
    let t = Tower::new(g, stages)?;
    let v = validate_tower(&t);
    if let Some(f) = v.failure {
        return Err(Error::Defect(format!("constructed tower fails item {}: {}", f.item, f.detail)));
    }
    if t.height() != h {
        return Err(Error::Defect(format!("tower height {} differs from fitting height {h}", t.height())));
    }
    Ok((h, t))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::atlas::build_named;

    #[test]
    fn heights_of_small_groups() {
        for (name, h) in [("sym(4)", 3), ("sl2_3", 2), ("q8", 1), ("cyclic(6)", 1), ("agl1(7)", 2), ("sym(3)", 2), ("gl2_3", 3)] {
            let g = build_named(name).unwrap();
            let (height, t) = find_max_tower(&g).unwrap();
            assert_eq!(height, h, "{name}");
            assert!(validate_tower(&t).valid);
        }
    }

    #[test]
    fn nilpotent_witness_is_smallest_sylow() {
        let g = build_named("cyclic(6)").unwrap();
        let (_, t) = find_max_tower(&g).unwrap();
        assert_eq!((t.primes(), t.stage(0).order()), (vec![2], 2));
    }

    #[test]
    fn s4_witness_shape() {
        let g = build_named("sym(4)").unwrap();
        let (_, t) = find_max_tower(&g).unwrap();
        assert_eq!(t.primes(), vec![2, 3, 2]);
        assert_eq!(t.stages().iter().map(|s| s.group.order()).collect::<Vec<_>>(), vec![2, 3, 4]);
        assert!(t.stage(2).is_normal_in(&g));
    }

    #[test]
    fn insoluble_is_an_error() {
        let g = build_named("alt(5)").unwrap();
        assert!(matches!(find_max_tower(&g), Err(Error::Insoluble)));
    }
}
