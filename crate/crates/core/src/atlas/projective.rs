use rustc_hash::FxHashMap;

use crate::error::{Error, Result};
use crate::perm::Permutation;

use super::field::{Fe, Field};
use super::matrix::Matrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Domain {
    Points,
    /// Points `0..N` followed by the lines `N..2N`; line `i` is the
    /// hyperplane `v·wᵢᵀ = 0` for the `i`-th normalised vector `wᵢ`.
    PointsAndLines,
}

/// Projective space of row vectors of length `n` over `F_q`.
///
/// Points are normalised (first nonzero coordinate `1`) and sorted
/// lexicographically by encoded coordinates.
#[derive(Clone, Debug)]
pub struct ProjectiveSpace {
    field: Field,
    n: usize,
    points: Vec<Vec<Fe>>,
    index: FxHashMap<Vec<Fe>, usize>,
}

impl ProjectiveSpace {
    pub fn new(field: Field, n: usize) -> Self {
        let q = field.order();
        let total = q.pow(n as u32);
        let mut points = Vec::new();
        for code in 1..total {
            let mut v = vec![0; n];
            let mut c = code;
            for x in v.iter_mut().rev() {
                *x = (c % q) as Fe;
                c /= q;
            }
            if v.iter().find(|&&x| x != 0) == Some(&1) {
                points.push(v);
            }
        }
        points.sort();
        let index = points.iter().cloned().enumerate().map(|(i, v)| (v, i)).collect();
        ProjectiveSpace {
            field,
            n,
            points,
            index,
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn dimension(&self) -> usize {
        self.n
    }

    pub fn points(&self) -> &[Vec<Fe>] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn normalize(&self, v: &[Fe]) -> Option<Vec<Fe>> {
        let lead = *v.iter().find(|&&x| x != 0)?;
        let s = self.field.inv(lead);
        Some(v.iter().map(|&x| self.field.mul(s, x)).collect())
    }

    pub fn index_of(&self, v: &[Fe]) -> Option<usize> {
        self.index.get(&self.normalize(v)?).copied()
    }

    fn map_points(&self, f: impl Fn(&[Fe]) -> Vec<Fe>) -> Vec<u32> {
        self.points
            .iter()
            .map(|v| self.index_of(&f(v)).expect("nonzero image") as u32)
            .collect()
    }

    /// `⟨v⟩ ↦ ⟨v^{σ^e} M⟩` for the Frobenius `σ`.
    fn semilinear_images(&self, m: &Matrix, e: u32) -> Vec<u32> {
        let f = &self.field;
        self.map_points(|v| {
            let w: Vec<Fe> = v.iter().map(|&x| frob_pow(f, x, e)).collect();
            m.apply(f, &w)
        })
    }

    /// The collineation `v ↦ v^{σ^e} M` on the chosen domain.
    pub fn semilinear_permutation(&self, m: &Matrix, e: u32, domain: Domain) -> Result<Permutation> {
        if m.size() != self.n {
            return Err(Error::DegreeMismatch {
                left: self.n,
                right: m.size(),
            });
        }
        if m.det(&self.field) == 0 {
            return Err(Error::SingularMatrix);
        }
        let mut images = self.semilinear_images(m, e);
        if domain == Domain::PointsAndLines {
            // v·wᵀ = 0 iff v^σ M · (w^σ M^{-T})ᵀ = 0
            let dual = m.inverse_transpose(&self.field)?;
            let n = self.len() as u32;
            images.extend(self.semilinear_images(&dual, e).into_iter().map(|i| i + n));
        }
        Permutation::from_images(images)
    }

    pub fn permutation(&self, m: &Matrix, domain: Domain) -> Result<Permutation> {
        self.semilinear_permutation(m, 0, domain)
    }

    /// Coordinatewise Frobenius on points (and lines).
    pub fn frobenius_permutation(&self, domain: Domain) -> Permutation {
        self.semilinear_permutation(&Matrix::identity(self.n), 1, domain)
            .expect("identity is invertible")
    }

    /// The polarity swapping point `⟨v⟩` with the line `v^⊥`.
    pub fn duality(&self) -> Permutation {
        let n = self.len();
        let images = (0..2 * n).map(|i| ((i + n) % (2 * n)) as u32).collect();
        Permutation::from_images(images).expect("swap of two halves")
    }
}

fn frob_pow(f: &Field, x: Fe, e: u32) -> Fe {
    let mut y = x;
    for _ in 0..e {
        y = f.frobenius(y);
    }
    y
}

/// Permutation induced by an invertible `M` on the points of `PG(n-1, q)`
/// (or points and lines).
pub fn projective_permutation(field: &Field, m: &Matrix, domain: Domain) -> Result<Permutation> {
    ProjectiveSpace::new(field.clone(), m.size()).permutation(m, domain)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pg24_counts_and_actions() {
        let f = Field::new(4).unwrap();
        let a = f.generator();
        let s = ProjectiveSpace::new(f.clone(), 3);
        assert_eq!(s.len(), 21);
        let id = s.permutation(&Matrix::identity(3), Domain::PointsAndLines).unwrap();
        assert!(id.is_identity());
        let a1 = Matrix::from_rows(&[&[1, 0, 0], &[0, 1, a], &[0, 0, 1]]);
        let p = s.permutation(&a1, Domain::Points).unwrap();
        assert_eq!(p.order(), 2);
        let d = s.permutation(&Matrix::diagonal(&[a, 1, 1]), Domain::PointsAndLines).unwrap();
        assert_eq!(d.order(), 3);
        assert_eq!(
            s.permutation(&Matrix::from_rows(&[&[1, 1, 0], &[1, 1, 0], &[0, 0, 1]]), Domain::Points),
            Err(Error::SingularMatrix)
        );
    }

    #[test]
    fn incidence_is_preserved() {
        let f = Field::new(4).unwrap();
        let a = f.generator();
        let s = ProjectiveSpace::new(f.clone(), 3);
        let n = s.len();
        let m = Matrix::from_rows(&[&[1, a, 0], &[0, 1, 1], &[a, 0, 1]]);
        let g = s.permutation(&m, Domain::PointsAndLines).unwrap();
        let phi = s.frobenius_permutation(Domain::PointsAndLines);
        let beta = s.duality();
        let dot = |v: &[Fe], w: &[Fe]| v.iter().zip(w).fold(0, |acc, (&x, &y)| f.add(acc, f.mul(x, y)));
        for h in [&g, &phi, &beta] {
            for i in 0..n {
                for j in 0..n {
                    let on = dot(&s.points()[i], &s.points()[j]) == 0;
                    let (pi, lj) = (h.image(i), h.image(n + j));
                    // the duality swaps the halves; incidence is symmetric
                    let (pt, ln) = if pi < n { (pi, lj - n) } else { (lj, pi - n) };
                    assert_eq!(on, dot(&s.points()[pt], &s.points()[ln]) == 0);
                }
            }
        }
    }

    #[test]
    fn projective_line() {
        let f = Field::new(7).unwrap();
        let s = ProjectiveSpace::new(f, 2);
        assert_eq!(s.len(), 8);
    }
}
