//! Concrete groups with coprime actions for the lemma suite.
//!
//! Each [`Setting`] holds a module `G` inside an ambient permutation group
//! and a pool of elements normalising `G` whose orders are prime to `|G|`.
//! Acting groups are sampled from the pool with a seeded generator.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::arith::coprime;
use crate::atlas::build_named;
use crate::atlas::field::Field;
use crate::atlas::linear::{affine_group, gl_generators};
use crate::atlas::matrix::Matrix;
use crate::error::Result;
use crate::group::FiniteGroup;
use crate::perm::Permutation;
use crate::structure::p_core;

pub(crate) struct Setting {
    pub label: String,
    pub ambient: FiniteGroup,
    pub module: FiniteGroup,
    pub pool: Vec<Permutation>,
}

impl Setting {
    fn new(label: String, ambient: FiniteGroup, module: FiniteGroup, candidates: &[Permutation]) -> Setting {
        let n = module.order();
        let pool = candidates
            .iter()
            .filter(|x| !x.is_identity() && coprime(x.order() as u128, n))
            .cloned()
            .collect();
        Setting {
            label,
            ambient,
            module,
            pool,
        }
    }

    /// A subgroup on one to `max_gens` pool elements with order prime to
    /// `|G|`.
    pub fn sample(&self, rng: &mut ChaCha8Rng, max_gens: usize) -> Option<FiniteGroup> {
        if self.pool.is_empty() {
            return None;
        }
        for _ in 0..40 {
            let k = rng.gen_range(1..=max_gens);
            let gens: Vec<Permutation> = (0..k).map(|_| self.pool.choose(rng).unwrap().clone()).collect();
            let a = self.ambient.sub(gens);
            if coprime(a.order(), self.module.order()) {
                return Some(a);
            }
        }
        None
    }

    /// A noncyclic abelian subgroup on two commuting pool elements.
    pub fn sample_noncyclic_abelian(&self, rng: &mut ChaCha8Rng) -> Option<FiniteGroup> {
        if self.pool.is_empty() {
            return None;
        }
        for _ in 0..40 {
            let x = self.pool.choose(rng).unwrap();
            let partners: Vec<&Permutation> = self.pool.iter().filter(|y| x.mul(y) == y.mul(x)).collect();
            let y = partners.choose(rng).unwrap();
            let a = self.ambient.sub(vec![x.clone(), (*y).clone()]);
            if !coprime(a.order(), self.module.order()) {
                continue;
            }
            let cyclic = a.elements().map_or(true, |els| els.iter().any(|e| e.order() as u128 == a.order()));
            if !cyclic {
                return Some(a);
            }
        }
        None
    }
}

/// Short description of a subgroup for instance labels.
pub(crate) fn describe(a: &FiniteGroup) -> String {
    let gens: Vec<String> = a.reduced_generators().iter().map(|g| g.to_string()).collect();
    format!("|A| = {}, A = <{}>", a.order(), gens.join(", "))
}

/// `V = F_q^n` as translations in `AGL(n,q)`, pool `GL(n,q)`.
pub(crate) fn affine(n: usize, q: usize) -> Result<Setting> {
    let f = Field::new(q)?;
    let g = affine_group(&f, n, &gl_generators(&f, n))?;
    let nt = f.degree() * n;
    let v = g.sub(g.generators()[..nt].to_vec());
    let l = g.sub(g.generators()[nt..].to_vec());
    let pool = l.elements()?.to_vec();
    Ok(Setting::new(format!("F_{q}^{n} in AGL({n},{q})"), g, v, &pool))
}

/// `V ⋊ ⟨λ⟩` with `λ` scalar of order `d`, inside `AGL(n,q)`; the whole of
/// `GL(n,q)` normalises it.
pub(crate) fn scalar_extension(n: usize, q: usize, d: usize) -> Result<Setting> {
    let f = Field::new(q)?;
    let g = affine_group(&f, n, &gl_generators(&f, n))?;
    let nt = f.degree() * n;
    let lambda = f.pow(f.primitive(), ((q - 1) / d) as i64);
    let scalar = affine_group(&f, n, &[Matrix::diagonal(&vec![lambda; n])])?;
    let mut gens = g.generators()[..nt].to_vec();
    gens.push(scalar.generators()[nt].clone());
    let module = g.sub(gens);
    let l = g.sub(g.generators()[nt..].to_vec());
    let pool = l.elements()?.to_vec();
    Ok(Setting::new(format!("F_{q}^{n} x| C_{d} in AGL({n},{q})"), g, module, &pool))
}

/// `AGL(1,q)` normalised by the field automorphisms in `AΓL(1,q)`.
pub(crate) fn semilinear(q: usize) -> Result<Setting> {
    let f = Field::new(q)?;
    let agl = affine_group(&f, 1, &[Matrix::diagonal(&[f.primitive()])])?;
    let sigma = Permutation::from_images(f.elements().map(|x| f.frobenius(x) as u32).collect())?;
    let mut gens = agl.generators().to_vec();
    gens.push(sigma);
    let ambient = FiniteGroup::generated(q, gens)?;
    let module = ambient.sub(agl.generators().to_vec());
    let pool = ambient.elements()?.to_vec();
    Ok(Setting::new(format!("AGL(1,{q}) in AGammaL(1,{q})"), ambient, module, &pool))
}

/// The Heisenberg group `p^{1+2}` (odd `p`) in its right regular action,
/// with automorphisms induced from `GL(2,p)`.
///
/// Elements are `(x,y,z)` with `(x,y,z)(x',y',z') = (x+x', y+y', z+z'+xy')`,
/// numbered `x p² + y p + z`. For `M = [[a,b],[c,d]]` acting on row vectors,
/// `(x,y,z) ↦ (ax+cy, bx+dy, det·z + ab x²/2 + bc xy + cd y²/2)` is an
/// automorphism.
pub(crate) fn heisenberg(p: usize) -> Result<Setting> {
    let pi = p as i64;
    let md = |v: i64| v.rem_euclid(pi);
    let idx = |x: i64, y: i64, z: i64| (md(x) * pi * pi + md(y) * pi + md(z)) as u32;
    let points: Vec<(i64, i64, i64)> = (0..pi)
        .flat_map(|x| (0..pi).flat_map(move |y| (0..pi).map(move |z| (x, y, z))))
        .collect();
    let right = |t: (i64, i64, i64)| {
        let images = points.iter().map(|&(x, y, z)| idx(x + t.0, y + t.1, z + t.2 + x * t.1)).collect();
        Permutation::from_images_unchecked(images)
    };
    let half = (pi + 1) / 2;
    let auto = |a: i64, b: i64, c: i64, d: i64| {
        let det = a * d - b * c;
        let images = points
            .iter()
            .map(|&(x, y, z)| {
                let q = half * (a * b * x * x + c * d * y * y) + b * c * x * y;
                idx(a * x + c * y, b * x + d * y, det * z + q)
            })
            .collect();
        Permutation::from_images_unchecked(images)
    };
    let w = Field::new(p)?.primitive() as i64;
    let n = p * p * p;
    let module = FiniteGroup::generated(n, vec![right((1, 0, 0)), right((0, 1, 0))])?;
    let autos = vec![auto(1, 1, 0, 1), auto(1, 0, 1, 1), auto(w, 0, 0, 1)];
    let l = FiniteGroup::generated(n, autos.clone())?;
    let mut gens = module.generators().to_vec();
    gens.extend(autos);
    let ambient = FiniteGroup::generated(n, gens)?;
    let pool = l.elements()?.to_vec();
    let module = ambient.sub(module.generators().to_vec());
    Ok(Setting::new(format!("{p}^(1+2) with GL(2,{p}) automorphisms"), ambient, module, &pool))
}

/// `Q8 = O_2(SL(2,3))` acted on by conjugation.
pub(crate) fn q8_in_sl23() -> Result<Setting> {
    let g = build_named("sl2_3")?;
    let q8 = p_core(&g, 2)?.into_group();
    let pool = g.elements()?.to_vec();
    let module = g.sub(q8.generators().to_vec());
    Ok(Setting::new("Q8 in SL(2,3)".to_string(), g, module, &pool))
}

/// Generalised quaternion: a noncyclic 2-group with one involution.
pub(crate) fn is_quaternion(a: &FiniteGroup) -> Result<bool> {
    if !a.is_p_group(2) || a.order() < 8 {
        return Ok(false);
    }
    let orders = a.element_orders()?;
    let involutions = orders.iter().filter(|&&o| o == 2).count();
    let cyclic = orders.iter().any(|&o| o as u128 == a.order());
    Ok(involutions == 1 && !cyclic)
}

/// The quaternion subgroup of `GL(2,3)` acting on `F_3^2`, which is
/// fixed-point-free and noncyclic.
pub(crate) fn q8_on_f3_squared(s: &Setting) -> Result<Option<FiniteGroup>> {
    let fours: Vec<&Permutation> = s.pool.iter().filter(|x| x.order() == 4).collect();
    for (i, x) in fours.iter().enumerate() {
        for y in &fours[i + 1..] {
            let a = s.ambient.sub(vec![(*x).clone(), (*y).clone()]);
            if a.order() == 8 && is_quaternion(&a)? {
                return Ok(Some(a));
            }
        }
    }
    Ok(None)
}

/// `(P₁, P₂, P₃)` inside `C_r ≀ H`: `H = P₂ ⋊ P₁` permutes `n` blocks of
/// size `r` and `P₃` is the base group or its sum-zero part.
pub(crate) struct WreathTower {
    pub label: String,
    pub ambient: FiniteGroup,
    pub stages: Vec<(u64, Vec<Permutation>)>,
}

fn lift(h: &Permutation, r: usize) -> Permutation {
    let n = h.degree();
    let images = (0..n * r).map(|pt| (h.image(pt / r) * r + pt % r) as u32).collect();
    Permutation::from_images_unchecked(images)
}

fn block_cycle(n: usize, r: usize, b: usize, inverse: bool) -> Permutation {
    let images = (0..n * r)
        .map(|pt| {
            if pt / r != b {
                pt as u32
            } else {
                let c = pt % r;
                let c2 = if inverse { (c + r - 1) % r } else { (c + 1) % r };
                (b * r + c2) as u32
            }
        })
        .collect();
    Permutation::from_images_unchecked(images)
}

/// Builds the tower with `P₁ = ⟨a⟩` and `P₂ = ⟨p2⟩` given on `n` points.
pub(crate) fn wreath_tower(
    label: &str,
    a: (u64, Permutation),
    p2: (u64, Vec<Permutation>),
    r: usize,
    sum_zero: bool,
) -> Result<WreathTower> {
    let n = a.1.degree();
    let p3: Vec<Permutation> = if sum_zero {
        (0..n - 1)
            .map(|b| block_cycle(n, r, b, false).mul(&block_cycle(n, r, b + 1, true)))
            .collect()
    } else {
        (0..n).map(|b| block_cycle(n, r, b, false)).collect()
    };
    let s1 = vec![lift(&a.1, r)];
    let s2: Vec<Permutation> = p2.1.iter().map(|x| lift(x, r)).collect();
    let mut gens = s1.clone();
    gens.extend(s2.iter().cloned());
    gens.extend(p3.iter().cloned());
    let ambient = FiniteGroup::generated(n * r, gens)?;
    let part = if sum_zero { "sum-zero" } else { "full" };
    Ok(WreathTower {
        label: format!("{label}, P3 = {part} F_{r}-module, P1 = <{}>", a.1),
        ambient,
        stages: vec![(a.0, s1), (p2.0, s2), (r as u64, p3)],
    })
}

/// Affine maps of `F_3^2` on 9 points: translations and `v ↦ vM + t`.
pub(crate) fn affine_f3(m: [[i64; 2]; 2], t: (i64, i64)) -> Permutation {
    let images = (0..9i64)
        .map(|c| {
            let (x, y) = (c / 3, c % 3);
            let nx = (x * m[0][0] + y * m[1][0] + t.0).rem_euclid(3);
            let ny = (x * m[0][1] + y * m[1][1] + t.1).rem_euclid(3);
            (nx * 3 + ny) as u32
        })
        .collect();
    Permutation::from_images_unchecked(images)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn heisenberg_automorphisms_normalise() {
        for p in [3, 5] {
            let s = heisenberg(p).unwrap();
            assert_eq!(s.module.order(), (p * p * p) as u128);
            assert!(!s.module.is_abelian());
            let gens = s.ambient.generators()[2..].to_vec();
            assert!(s.module.is_normalized_by(&gens));
            assert!(!s.pool.is_empty());
        }
    }

    #[test]
    fn settings_sample_coprime_groups() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for s in [affine(2, 3).unwrap(), scalar_extension(2, 5, 4).unwrap(), semilinear(8).unwrap(), q8_in_sl23().unwrap()] {
            let a = s.sample(&mut rng, 2).unwrap();
            assert!(coprime(a.order(), s.module.order()));
            assert!(s.module.is_normalized_by(a.generators()), "{}", s.label);
        }
        let s = affine(2, 3).unwrap();
        let q = q8_on_f3_squared(&s).unwrap().unwrap();
        assert!(is_quaternion(&q).unwrap());
        assert!(s.sample_noncyclic_abelian(&mut rng).is_some());
    }

    #[test]
    fn wreath_tower_is_valid() {
        let a = Permutation::parse("(2 3 4)", 4).unwrap();
        let v = vec![Permutation::parse("(1 2)(3 4)", 4).unwrap(), Permutation::parse("(1 3)(2 4)", 4).unwrap()];
        let w = wreath_tower("A4", (3, a), (2, v), 3, true).unwrap();
        assert_eq!(w.ambient.order(), 27 * 12);
        let t = crate::towers::Tower::from_generators(&w.ambient, w.stages.clone()).unwrap();
        assert!(crate::towers::validate_tower(&t).valid);
    }
}
