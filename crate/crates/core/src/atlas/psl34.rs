//! Extensions of `PSL(3,4)` by diagonal, field and graph automorphisms,
//! acting on the 21 points and 21 lines of `PG(2,4)`.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::group::FiniteGroup;
use crate::perm::{commutator, Permutation};

use super::field::{Fe, Field};
use super::linear::sl_generators;
use super::matrix::Matrix;
use super::projective::{Domain, ProjectiveSpace};

/// `PG(2,4)` with the named automorphisms as permutations of degree 42.
pub struct Psl34Setting {
    field: Field,
    space: ProjectiveSpace,
    a: Fe,
}

impl Psl34Setting {
    pub fn new() -> Result<Self> {
        let field = Field::new(4)?;
        let a = field.generator();
        let space = ProjectiveSpace::new(field.clone(), 3);
        Ok(Psl34Setting { field, space, a })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    /// The element `a` of `F₄ = {0, 1, a, a²}`.
    pub fn a(&self) -> Fe {
        self.a
    }

    pub fn bar(&self, m: &Matrix) -> Result<Permutation> {
        self.space.permutation(m, Domain::PointsAndLines)
    }

    pub fn delta_matrix(&self) -> Matrix {
        Matrix::diagonal(&[self.a, 1, 1])
    }

    pub fn delta(&self) -> Permutation {
        self.bar(&self.delta_matrix()).expect("invertible")
    }

    pub fn phi(&self) -> Permutation {
        self.space.frobenius_permutation(Domain::PointsAndLines)
    }

    pub fn beta(&self) -> Permutation {
        self.space.duality()
    }

    /// `H ≅ PSL(3,4)` acting on points and lines.
    pub fn h_generators(&self) -> Result<Vec<Permutation>> {
        sl_generators(&self.field, 3).iter().map(|m| self.bar(m)).collect()
    }

    fn extension(&self, extra: Vec<Permutation>) -> Result<FiniteGroup> {
        let mut gens = self.h_generators()?;
        gens.extend(extra);
        FiniteGroup::generated(42, gens)
    }

    pub fn h(&self) -> Result<FiniteGroup> {
        self.extension(Vec::new())
    }

    /// `H⟨δ̄, φ̄⟩`.
    pub fn g1(&self) -> Result<FiniteGroup> {
        self.extension(vec![self.delta(), self.phi()])
    }

    /// `H⟨δ̄, β̄⟩`.
    pub fn g2(&self) -> Result<FiniteGroup> {
        self.extension(vec![self.delta(), self.beta()])
    }

    /// `H⟨φ̄⟩`, with abelian quotient by `H`.
    pub fn phi_ext(&self) -> Result<FiniteGroup> {
        self.extension(vec![self.phi()])
    }

    pub fn a1(&self) -> Matrix {
        Matrix::from_rows(&[&[1, 0, 0], &[0, 1, self.a], &[0, 0, 1]])
    }

    pub fn a2(&self) -> Matrix {
        let a2 = self.field.mul(self.a, self.a);
        Matrix::from_rows(&[&[1, 0, 0], &[0, self.a, 1], &[0, 0, a2]])
    }
}

/// Matrix and permutation commutators around `G₁` and `G₂`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Psl34Commutators {
    /// `[A₁, φ] = A₁⁻¹A₁^φ`, rows of encoded `F₄` elements.
    pub c1_matrix: Vec<Vec<Fe>>,
    pub c1_expected: bool,
    pub c1_order: u64,
    pub c1_delta_commutes: bool,
    /// `[Ā₁δ̄, φ̄]` computed on 42 points.
    pub g1_witness_order: u64,
    pub g1_witness_is_c1_delta: bool,
    /// `[A₂, β] = A₂⁻¹A₂^{-T}`.
    pub c2_matrix: Vec<Vec<Fe>>,
    pub c2_expected: bool,
    pub c2_order: u64,
    pub c2_delta_commutes: bool,
    /// `[Ā₂δ̄, β̄]`.
    pub g2_witness_order: u64,
    pub g2_witness_is_c2_delta: bool,
}

pub fn reproduce_psl34_commutators() -> Result<Psl34Commutators> {
    let s = Psl34Setting::new()?;
    let f = &s.field;
    let a = s.a;
    let a2 = f.mul(a, a);
    let delta = s.delta_matrix();

    let a1 = s.a1();
    let c1 = a1.inverse(f)?.mul(f, &a1.frobenius(f));
    let c1_expected = c1 == Matrix::from_rows(&[&[1, 0, 0], &[0, 1, 1], &[0, 0, 1]]);
    let w1 = commutator(&s.bar(&a1)?.mul(&s.delta()), &s.phi())?;

    let m2 = s.a2();
    let c2 = m2.inverse(f)?.mul(f, &m2.inverse_transpose(f)?);
    let c2_expected = c2 == Matrix::from_rows(&[&[1, 0, 0], &[0, a2, a], &[0, a, a2]]);
    let w2 = commutator(&s.bar(&m2)?.mul(&s.delta()), &s.beta())?;

    Ok(Psl34Commutators {
        c1_matrix: c1.rows(),
        c1_expected,
        c1_order: c1.order(f)?,
        c1_delta_commutes: c1.mul(f, &delta) == delta.mul(f, &c1),
        g1_witness_order: w1.order(),
        g1_witness_is_c1_delta: w1 == s.bar(&c1)?.mul(&s.delta()),
        c2_matrix: c2.rows(),
        c2_expected,
        c2_order: c2.order(f)?,
        c2_delta_commutes: c2.mul(f, &delta) == delta.mul(f, &c2),
        g2_witness_order: w2.order(),
        g2_witness_is_c2_delta: w2 == s.bar(&c2)?.mul(&s.delta()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_orders_and_relations() {
        let s = Psl34Setting::new().unwrap();
        let (d, phi, beta) = (s.delta(), s.phi(), s.beta());
        assert_eq!(d.order(), 3);
        assert_eq!(phi.order(), 2);
        assert_eq!(beta.order(), 2);
        // δ^φ = δ^β = δ⁻¹
        assert_eq!(d.conjugate(&phi), d.inverse());
        assert_eq!(d.conjugate(&beta), d.inverse());
        assert_eq!(s.bar(&s.a1()).unwrap().order(), 2);
        let h = s.h().unwrap();
        assert_eq!(h.order(), 20160);
        assert!(!h.contains(&d).unwrap());
    }

    #[test]
    fn commutators_match() {
        let r = reproduce_psl34_commutators().unwrap();
        assert!(r.c1_expected && r.c2_expected);
        assert_eq!((r.c1_order, r.c2_order), (2, 2));
        assert!(r.c1_delta_commutes && r.c2_delta_commutes);
        assert_eq!((r.g1_witness_order, r.g2_witness_order), (6, 6));
        assert!(r.g1_witness_is_c1_delta && r.g2_witness_is_c2_delta);
    }
}
