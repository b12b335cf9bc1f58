use crate::arith::{is_power_of, is_prime, p_part};
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Subgroup};

use super::series::is_nilpotent;

/// A Sylow `p`-subgroup by normaliser ascent: repeatedly adjoin the least
/// `p`-element outside `P` that normalises `P`.
pub fn sylow_subgroup(g: &FiniteGroup, p: u64) -> Result<Subgroup<'_>> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let target = p_part(g.order(), p);
    let mut sylow = g.sub(Vec::new());
    if target == 1 {
        return Ok(Subgroup::new(g, sylow));
    }
    let elements = g.elements()?;
    let orders = g.element_orders()?;
    while sylow.order() < target {
        let gens = sylow.reduced_generators();
        let x = elements
            .iter()
            .zip(orders)
            .find(|(x, &o)| {
                o > 1
                    && is_power_of(o as u128, p)
                    && !sylow.has(x)
                    && gens.iter().all(|h| sylow.has(&h.conjugate(x)))
            })
            .map(|(x, _)| x.clone())
            .ok_or_else(|| Error::Defect("normaliser ascent stalled".into()))?;
        let mut next = sylow.generators().to_vec();
        next.push(x);
        sylow = g.sub(next);
    }
    Ok(Subgroup::new(g, sylow))
}

/// `O_p(G)`: the core of a Sylow `p`-subgroup, reached by intersecting with
/// conjugates under the generators until stable.
pub fn p_core(g: &FiniteGroup, p: u64) -> Result<Subgroup<'_>> {
    let mut k = sylow_subgroup(g, p)?.into_group();
    let gens = g.reduced_generators();
    let inverses: Vec<_> = gens.iter().map(|s| s.inverse()).collect();
    while !k.is_trivial() {
        let elements = k.chain().elements();
        let kept: Vec<_> = elements
            .into_iter()
            .filter(|x| {
                gens.iter()
                    .zip(&inverses)
                    .all(|(s, si)| k.has(&s.mul(x).mul(si)))
            })
            .collect();
        if kept.len() as u128 == k.order() {
            break;
        }
        k = g.sub(kept);
    }
    Ok(Subgroup::new(g, k))
}

/// `F(G)`, generated by the `p`-cores.
pub fn fitting_subgroup(g: &FiniteGroup) -> Result<Subgroup<'_>> {
    let mut gens = Vec::new();
    for p in g.prime_divisors() {
        gens.extend(p_core(g, p)?.generators().iter().cloned());
    }
    Ok(Subgroup::new(g, g.sub(gens)))
}

/// `O_{p′}(N)` of a nilpotent `N`: the product of its other Sylow subgroups.
pub fn p_prime_part_of_nilpotent(n: &FiniteGroup, p: u64) -> Result<Subgroup<'_>> {
    if !is_nilpotent(n) {
        return Err(Error::NotNilpotent);
    }
    let mut gens = Vec::new();
    for q in n.prime_divisors() {
        if q != p {
            gens.extend(sylow_subgroup(n, q)?.generators().iter().cloned());
        }
    }
    Ok(Subgroup::new(n, n.sub(gens)))
}

/// `Φ(P) = P′·Pᵖ`. Modulo `P′` the `p`-th powers are generated by those of
/// the generators, so no enumeration is needed.
pub fn frattini_of_p_group(pg: &FiniteGroup) -> Result<Subgroup<'_>> {
    if pg.is_trivial() {
        return Ok(Subgroup::new(pg, pg.sub(Vec::new())));
    }
    let p = pg.p_group_prime().ok_or(Error::NotPGroup)?;
    let mut gens = pg.derived_subgroup().generators().to_vec();
    for s in pg.reduced_generators() {
        gens.push(s.pow(p as i64));
    }
    Ok(Subgroup::new(pg, pg.sub(gens)))
}

/// `|Z(P)| = p`, `Z(P) = Φ(P)` and `P/Z(P)` nontrivial.
pub fn is_extraspecial(pg: &FiniteGroup) -> Result<bool> {
    let Some(p) = pg.p_group_prime() else {
        return if pg.is_trivial() {
            Ok(false)
        } else {
            Err(Error::NotPGroup)
        };
    };
    if pg.order() == p as u128 {
        return Ok(false);
    }
    let z = pg.center()?;
    if z.order() != p as u128 {
        return Ok(false);
    }
    Ok(frattini_of_p_group(pg)?.same_as(&z))
}
