//! Groups from matrix actions over finite fields.

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::perm::Permutation;

use super::field::{Fe, Field};
use super::matrix::Matrix;
use super::projective::{Domain, ProjectiveSpace};
use super::small::regular_representation;

/// Powers `1, x, …, x^{k-1}`: an additive basis of `F_q` over `F_p`.
fn additive_basis(f: &Field) -> Vec<Fe> {
    let x = f.generator();
    (0..f.degree()).map(|i| f.pow(x, i as i64)).collect()
}

/// Elementary transvections `I + λE_ij` (i ≠ j, λ in the additive basis),
/// which generate `SL(n, q)`.
pub fn sl_generators(f: &Field, n: usize) -> Vec<Matrix> {
    let mut gens = Vec::new();
    for &l in &additive_basis(f) {
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    let mut m = Matrix::identity(n);
                    m.set(i, j, l);
                    gens.push(m);
                }
            }
        }
    }
    gens
}

/// `SL(n,q)` generators plus `diag(ω, 1, …, 1)`.
pub fn gl_generators(f: &Field, n: usize) -> Vec<Matrix> {
    let mut gens = sl_generators(f, n);
    let mut d = vec![1; n];
    d[0] = f.primitive();
    gens.push(Matrix::diagonal(&d));
    gens
}

fn projective_group(
    f: &Field,
    n: usize,
    mats: &[Matrix],
    frobenius: &[(Matrix, u32)],
    domain: Domain,
) -> Result<FiniteGroup> {
    let space = ProjectiveSpace::new(f.clone(), n);
    let mut gens = mats
        .iter()
        .map(|m| space.permutation(m, domain))
        .collect::<Result<Vec<_>>>()?;
    for (m, e) in frobenius {
        gens.push(space.semilinear_permutation(m, *e, domain)?);
    }
    let degree = gens[0].degree();
    FiniteGroup::generated(degree, gens)
}

/// `PSL(2,q)` on the `q+1` points of the projective line.
pub fn psl2(q: usize) -> Result<FiniteGroup> {
    let f = Field::new(q)?;
    projective_group(&f, 2, &sl_generators(&f, 2), &[], Domain::Points)
}

pub fn pgl2(q: usize) -> Result<FiniteGroup> {
    let f = Field::new(q)?;
    projective_group(&f, 2, &gl_generators(&f, 2), &[], Domain::Points)
}

/// `PSL(2,q)` extended by the field automorphism `σ` composed with `M`.
pub fn psl2_semilinear(q: usize, extra: &[(Matrix, u32)]) -> Result<FiniteGroup> {
    let f = Field::new(q)?;
    projective_group(&f, 2, &sl_generators(&f, 2), extra, Domain::Points)
}

pub fn psl3_4() -> Result<FiniteGroup> {
    let f = Field::new(4)?;
    projective_group(&f, 3, &sl_generators(&f, 3), &[], Domain::Points)
}

/// Affine group `{ v ↦ vM + t }` on `q^n` points, `M` ranging over the group
/// generated by `linear`. Point `v` is numbered `Σ vᵢ q^{n-1-i}`.
pub fn affine_group(f: &Field, n: usize, linear: &[Matrix]) -> Result<FiniteGroup> {
    let q = f.order();
    let total = q.pow(n as u32);
    let decode = |mut c: usize| {
        let mut v = vec![0 as Fe; n];
        for x in v.iter_mut().rev() {
            *x = (c % q) as Fe;
            c /= q;
        }
        v
    };
    let encode = |v: &[Fe]| v.iter().fold(0usize, |acc, &x| acc * q + x as usize);
    let points: Vec<Vec<Fe>> = (0..total).map(decode).collect();
    let mut gens = Vec::new();
    for &l in &additive_basis(f) {
        for i in 0..n {
            let images = points
                .iter()
                .map(|v| {
                    let mut w = v.clone();
                    w[i] = f.add(w[i], l);
                    encode(&w) as u32
                })
                .collect();
            gens.push(Permutation::from_images(images)?);
        }
    }
    for m in linear {
        if m.size() != n {
            return Err(Error::BadParameter("affine matrix size".into()));
        }
        m.inverse(f)?;
        let images = points.iter().map(|v| encode(&m.apply(f, v)) as u32).collect();
        gens.push(Permutation::from_images(images)?);
    }
    FiniteGroup::generated(total, gens)
}

pub fn agl1(q: usize) -> Result<FiniteGroup> {
    let f = Field::new(q)?;
    if q == 2 {
        return affine_group(&f, 1, &[]);
    }
    affine_group(&f, 1, &[Matrix::diagonal(&[f.primitive()])])
}

pub fn agl(n: usize, q: usize) -> Result<FiniteGroup> {
    let f = Field::new(q)?;
    affine_group(&f, n, &gl_generators(&f, n))
}

pub fn asl(n: usize, q: usize) -> Result<FiniteGroup> {
    let f = Field::new(q)?;
    affine_group(&f, n, &sl_generators(&f, n))
}

/// `GL(n,q)` on the `qⁿ − 1` nonzero vectors.
pub fn gl_on_vectors(n: usize, q: usize) -> Result<FiniteGroup> {
    let f = Field::new(q)?;
    let total = q.pow(n as u32);
    let decode = |mut c: usize| {
        let mut v = vec![0 as Fe; n];
        for x in v.iter_mut().rev() {
            *x = (c % q) as Fe;
            c /= q;
        }
        v
    };
    let encode = |v: &[Fe]| v.iter().fold(0usize, |acc, &x| acc * q + x as usize);
    let gens = gl_generators(&f, n)
        .iter()
        .map(|m| {
            let images = (1..total).map(|c| (encode(&m.apply(&f, &decode(c))) - 1) as u32).collect();
            Permutation::from_images(images)
        })
        .collect::<Result<Vec<_>>>()?;
    FiniteGroup::generated(total - 1, gens)
}

/// `SL(2,q)` as a regular permutation group of degree `q(q²−1)`.
pub fn sl2_regular(q: usize) -> Result<FiniteGroup> {
    let f = Field::new(q)?;
    let gens = sl_generators(&f, 2);
    Ok(regular_representation(Matrix::identity(2), &gens, |a, b| a.mul(&f, b)))
}

/// `T(a,b)` for `Sz(8)`, with `θ: x ↦ x⁴` (so `θ²` is the Frobenius).
fn suzuki_t(f: &Field, a: Fe, b: Fe) -> Matrix {
    let th = |x: Fe| f.pow(x, 4);
    let m = |x: Fe, y: Fe| f.mul(x, y);
    let a_th = th(a);
    let r3 = [
        f.add(f.add(m(f.mul(a, a), a_th), m(a, b)), th(b)),
        f.add(m(a, a_th), b),
        a,
        1,
    ];
    Matrix::from_rows(&[&[1, 0, 0, 0], &[a, 1, 0, 0], &[b, a_th, 1, 0], &r3])
}

/// Generators of `Sz(8) ≤ Sp(4,8)`: the `T(a,b)`, `diag(λ³, λ², λ⁻², λ⁻³)`
/// and the antidiagonal involution.
pub fn suzuki_generators(f: &Field) -> Vec<Matrix> {
    let l = f.primitive();
    let mut gens: Vec<Matrix> = additive_basis(f).iter().map(|&a| suzuki_t(f, a, 0)).collect();
    gens.extend(additive_basis(f).iter().map(|&b| suzuki_t(f, 0, b)));
    gens.push(Matrix::diagonal(&[f.pow(l, 3), f.pow(l, 2), f.pow(l, -2), f.pow(l, -3)]));
    gens.push(Matrix::from_rows(&[&[0, 0, 0, 1], &[0, 0, 1, 0], &[0, 1, 0, 0], &[1, 0, 0, 0]]));
    gens
}

/// `Sz(8)` on the 65 points of the orbit of `⟨(1,0,0,0)⟩` in `PG(3,8)`.
pub fn sz8() -> Result<FiniteGroup> {
    let f = Field::new(8)?;
    let space = ProjectiveSpace::new(f.clone(), 4);
    let gens = suzuki_generators(&f);
    let start = space.index_of(&[1, 0, 0, 0]).expect("a point");
    let mut orbit = vec![start];
    let mut pos = vec![usize::MAX; space.len()];
    pos[start] = 0;
    let mut head = 0;
    while head < orbit.len() {
        let v = space.points()[orbit[head]].clone();
        head += 1;
        for m in &gens {
            let w = space.index_of(&m.apply(&f, &v)).expect("nonzero");
            if pos[w] == usize::MAX {
                pos[w] = orbit.len();
                orbit.push(w);
            }
        }
    }
    let perms = gens
        .iter()
        .map(|m| {
            let images = orbit
                .iter()
                .map(|&i| pos[space.index_of(&m.apply(&f, &space.points()[i])).unwrap()] as u32)
                .collect();
            Permutation::from_images(images)
        })
        .collect::<Result<Vec<_>>>()?;
    FiniteGroup::generated(orbit.len(), perms)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn linear_orders() {
        assert_eq!(psl2(7).unwrap().order(), 168);
        assert_eq!(psl2(7).unwrap().degree(), 8);
        assert_eq!(psl2(9).unwrap().order(), 360);
        assert_eq!(psl2(8).unwrap().order(), 504);
        assert_eq!(psl2(4).unwrap().order(), 60);
        assert_eq!(pgl2(9).unwrap().order(), 720);
        assert_eq!(psl3_4().unwrap().order(), 20160);
        assert_eq!(agl1(7).unwrap().order(), 42);
        assert_eq!(agl1(8).unwrap().order(), 56);
        assert_eq!(asl(2, 4).unwrap().order(), 960);
        assert_eq!(gl_on_vectors(2, 3).unwrap().order(), 48);
        assert_eq!(sl2_regular(3).unwrap().order(), 24);
    }

    #[test]
    fn suzuki_group_on_the_ovoid() {
        let g = sz8().unwrap();
        assert_eq!(g.degree(), 65);
        assert_eq!(g.order(), 29120);
    }
}
