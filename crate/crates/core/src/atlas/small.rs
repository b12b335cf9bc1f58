//! Combinatorial constructions and regular representations.

use std::hash::Hash;

use rustc_hash::FxHashMap;

use crate::arith::is_prime;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::perm::Permutation;

fn perm(degree: usize, cycles: &[Vec<usize>]) -> Permutation {
    Permutation::from_cycles(degree, cycles).expect("well-formed cycles")
}

fn cycle(start: usize, len: usize) -> Vec<usize> {
    (start..start + len).collect()
}

pub fn cyclic(n: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Error::BadParameter("cyclic(0)".into()));
    }
    FiniteGroup::generated(n, vec![perm(n, &[cycle(0, n)])])
}

/// `C_p^k` as `k` disjoint `p`-cycles.
pub fn elem_abelian(p: usize, k: usize) -> Result<FiniteGroup> {
    if !is_prime(p as u64) || k == 0 {
        return Err(Error::BadParameter(format!("elem_abelian({p},{k})")));
    }
    let n = p * k;
    FiniteGroup::generated(n, (0..k).map(|i| perm(n, &[cycle(i * p, p)])).collect())
}

/// Dihedral group of order `n` (so `dihedral(12)` has order 12).
pub fn dihedral(n: usize) -> Result<FiniteGroup> {
    if n < 2 || n % 2 == 1 {
        return Err(Error::BadParameter(format!("dihedral({n}): order must be even")));
    }
    let m = n / 2;
    match m {
        1 => cyclic(2),
        2 => FiniteGroup::generated(4, vec![perm(4, &[vec![0, 1]]), perm(4, &[vec![2, 3]])]),
        _ => {
            let reflection: Vec<Vec<usize>> = (1..m).map(|i| (i, m - i)).filter(|(i, j)| i < j).map(|(i, j)| vec![i, j]).collect();
            FiniteGroup::generated(m, vec![perm(m, &[cycle(0, m)]), perm(m, &reflection)])
        }
    }
}

pub fn sym(n: usize) -> Result<FiniteGroup> {
    match n {
        0 => Err(Error::BadParameter("sym(0)".into())),
        1 => Ok(FiniteGroup::trivial(1)),
        2 => FiniteGroup::generated(2, vec![perm(2, &[vec![0, 1]])]),
        _ => FiniteGroup::generated(n, vec![perm(n, &[vec![0, 1]]), perm(n, &[cycle(0, n)])]),
    }
}

/// Generated by the 3-cycles `(1 2 i)`.
pub fn alt(n: usize) -> Result<FiniteGroup> {
    match n {
        0 => Err(Error::BadParameter("alt(0)".into())),
        1 | 2 => Ok(FiniteGroup::trivial(n)),
        _ => FiniteGroup::generated(n, (2..n).map(|i| perm(n, &[vec![0, 1, i]])).collect()),
    }
}

/// Degrees of `g` and `h` side by side.
pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> FiniteGroup {
    let (m, n) = (g.degree(), h.degree());
    let shift = |p: &Permutation, off: usize| {
        let mut images: Vec<u32> = (0..(m + n) as u32).collect();
        for i in 0..p.degree() {
            images[i + off] = (p.image(i) + off) as u32;
        }
        Permutation::from_images_unchecked(images)
    };
    let mut gens: Vec<Permutation> = g.generators().iter().map(|p| shift(p, 0)).collect();
    gens.extend(h.generators().iter().map(|p| shift(p, m)));
    FiniteGroup::generated(m + n, gens).expect("shifted generators share a degree")
}

/// Right regular representation of the group generated by `gens` under
/// `mul`, elements numbered in breadth-first order from `identity`.
pub fn regular_representation<T, F>(identity: T, gens: &[T], mul: F) -> FiniteGroup
where
    T: Clone + Eq + Hash,
    F: Fn(&T, &T) -> T,
{
    let mut elements = vec![identity.clone()];
    let mut index: FxHashMap<T, usize> = FxHashMap::default();
    index.insert(identity, 0);
    let mut head = 0;
    while head < elements.len() {
        let x = elements[head].clone();
        head += 1;
        for g in gens {
            let y = mul(&x, g);
            if !index.contains_key(&y) {
                index.insert(y.clone(), elements.len());
                elements.push(y);
            }
        }
    }
    let n = elements.len();
    let perms = gens
        .iter()
        .map(|g| {
            let images = elements.iter().map(|x| index[&mul(x, g)] as u32).collect();
            Permutation::from_images_unchecked(images)
        })
        .collect();
    FiniteGroup::generated(n, perms).expect("regular generators share a degree")
}

/// Extraspecial group `p^{1+2r}` of the given sign, regular representation.
///
/// Elements are `(v, z)` with `v ∈ F_p^{2r}`, `z ∈ F_p` and
/// `(v,z)(w,z') = (v+w, z+z'+β(v,w))`, `β(v,w) = Σ v_{2i}w_{2i+1}`. For
/// `p = 2` the minus type adds `v_{2r-2}w_{2r-2} + v_{2r-1}w_{2r-1}` so the
/// last pair carries the anisotropic form `x² + xy + y²`. For odd `p` the
/// plus type has exponent `p`; the minus type (rank 1 only) is
/// `C_{p²} ⋊ C_p` with `b⁻¹ab = a^{1+p}`.
pub fn extraspecial(p: usize, plus: bool, rank: usize) -> Result<FiniteGroup> {
    if !is_prime(p as u64) || rank == 0 {
        return Err(Error::BadParameter(format!("extraspecial({p}, rank {rank})")));
    }
    if p != 2 && !plus {
        if rank != 1 {
            return Err(Error::BadParameter("odd minus type is built for rank 1".into()));
        }
        let m = p * p;
        let mul = |x: &(usize, usize), y: &(usize, usize)| {
            let mut twist = y.0;
            for _ in 0..x.1 {
                twist = twist * (1 + p) % m;
            }
            ((x.0 + twist) % m, (x.1 + y.1) % p)
        };
        return Ok(regular_representation((0, 0), &[(1, 0), (0, 1)], mul));
    }
    let d = 2 * rank;
    let beta = move |v: &[usize], w: &[usize]| {
        let mut s: usize = (0..rank).map(|i| v[2 * i] * w[2 * i + 1]).sum();
        if p == 2 && !plus {
            s += v[d - 2] * w[d - 2] + v[d - 1] * w[d - 1];
        }
        s % p
    };
    let mul = |x: &(Vec<usize>, usize), y: &(Vec<usize>, usize)| {
        let v: Vec<usize> = x.0.iter().zip(&y.0).map(|(a, b)| (a + b) % p).collect();
        (v, (x.1 + y.1 + beta(&x.0, &y.0)) % p)
    };
    let gens: Vec<(Vec<usize>, usize)> = (0..d)
        .map(|i| {
            let mut e = vec![0; d];
            e[i] = 1;
            (e, 0)
        })
        .collect();
    Ok(regular_representation((vec![0; d], 0), &gens, mul))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_orders() {
        assert_eq!(cyclic(7).unwrap().order(), 7);
        assert_eq!(elem_abelian(2, 4).unwrap().order(), 16);
        for n in [2, 4, 6, 8, 12, 20] {
            assert_eq!(dihedral(n).unwrap().order(), n as u128);
        }
        assert!(dihedral(7).is_err());
        assert_eq!(sym(5).unwrap().order(), 120);
        assert_eq!(alt(6).unwrap().order(), 360);
        assert_eq!(alt(7).unwrap().order(), 2520);
        assert!(alt(2).unwrap().is_trivial());
        let d = direct_product(&sym(3).unwrap(), &cyclic(4).unwrap());
        assert_eq!((d.degree(), d.order()), (7, 24));
    }

    #[test]
    fn extraspecial_orders_and_centres() {
        for (p, plus, r, order) in [(2, true, 1, 8), (2, false, 1, 8), (3, true, 1, 27), (3, false, 1, 27), (5, true, 1, 125), (2, true, 2, 32), (2, false, 2, 32)] {
            let g = extraspecial(p, plus, r).unwrap();
            assert_eq!(g.order(), order);
            assert_eq!(g.center().unwrap().order(), p as u128);
            assert!(!g.is_abelian());
        }
        let q8 = extraspecial(2, false, 1).unwrap();
        let invols = q8.element_orders().unwrap().iter().filter(|&&o| o == 2).count();
        assert_eq!(invols, 1);
        assert_eq!(extraspecial(3, true, 1).unwrap().exponent().unwrap(), 3);
        assert_eq!(extraspecial(3, false, 1).unwrap().exponent().unwrap(), 9);
    }
}
