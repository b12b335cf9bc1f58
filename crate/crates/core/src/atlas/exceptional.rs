//! Overgroups of `PSL(2,9) ≅ A₆` on the 10 points of the projective line,
//! and the search for an odd-order commutator twisted by an exceptional
//! automorphism of `S₆ ≅ PΣL(2,9)`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::perm::{commutator, Permutation};

use super::field::Field;
use super::linear::psl2_semilinear;
use super::matrix::Matrix;

fn diag_w() -> Result<Matrix> {
    let f = Field::new(9)?;
    Ok(Matrix::diagonal(&[f.primitive(), 1]))
}

/// `PGL(2,9) = PSL(2,9)⟨diag(ω,1)⟩`.
pub fn pgl2_9() -> Result<FiniteGroup> {
    psl2_semilinear(9, &[(diag_w()?, 0)])
}

/// `PΣL(2,9) = PSL(2,9)⟨σ⟩ ≅ S₆`.
pub fn psigmal2_9() -> Result<FiniteGroup> {
    psl2_semilinear(9, &[(Matrix::identity(2), 1)])
}

/// `M₁₀ = PSL(2,9)⟨σ·diag(ω,1)⟩`.
pub fn m10() -> Result<FiniteGroup> {
    psl2_semilinear(9, &[(diag_w()?, 1)])
}

pub fn pgammal2_9() -> Result<FiniteGroup> {
    psl2_semilinear(9, &[(diag_w()?, 0), (Matrix::identity(2), 1)])
}

/// `Γ = PΓL(2,9)`, `H = PΣL(2,9)`, `A = PSL(2,9)` and the least element `φ`
/// of `Γ` outside `H`.
pub struct A6Setting {
    pub gamma: FiniteGroup,
    pub h: FiniteGroup,
    pub a: FiniteGroup,
    pub phi: Permutation,
}

impl A6Setting {
    pub fn new() -> Result<Self> {
        let gamma = pgammal2_9()?;
        let h = psigmal2_9()?;
        let a = psl2_semilinear(9, &[])?;
        let phi = gamma
            .elements()?
            .iter()
            .find(|g| !h.has(g))
            .cloned()
            .ok_or_else(|| Error::Defect("PΣL(2,9) has index 2 in PΓL(2,9)".into()))?;
        Ok(A6Setting { gamma, h, a, phi })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExceptionalWitness {
    pub x: String,
    pub phi: String,
    pub y: String,
    pub phi_y: String,
    pub commutator: String,
    pub commutator_order: u64,
}

/// Searches `x ∈ H∖A`, `y ∈ A` for `[x, φy]` of odd order greater than 1.
/// Witnesses are ranked by commutator order, then by `(x, y)` in element
/// order; the first of least order is returned.
pub fn exceptional_witness_with(s: &A6Setting, phi: &Permutation) -> Result<Option<ExceptionalWitness>> {
    let a_elements = s.a.elements()?;
    let mut best: Option<(u64, &Permutation, &Permutation)> = None;
    'search: for x in s.h.elements()? {
        if s.a.has(x) {
            continue;
        }
        for y in a_elements {
            let o = commutator(x, &phi.mul(y))?.order();
            if o > 1 && o % 2 == 1 && best.map_or(true, |(b, _, _)| o < b) {
                best = Some((o, x, y));
                if o == 3 {
                    break 'search;
                }
            }
        }
    }
    Ok(best.map(|(o, x, y)| {
        let phi_y = phi.mul(y);
        ExceptionalWitness {
            x: x.to_string(),
            phi: phi.to_string(),
            y: y.to_string(),
            commutator: commutator(x, &phi_y).expect("same degree").to_string(),
            phi_y: phi_y.to_string(),
            commutator_order: o,
        }
    }))
}

pub fn exceptional_automorphism_witness() -> Result<ExceptionalWitness> {
    let s = A6Setting::new()?;
    exceptional_witness_with(&s, &s.phi)?
        .ok_or_else(|| Error::Defect("no odd-order twisted commutator".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quotient::quotient_by_normal;

    #[test]
    fn overgroup_orders() {
        assert_eq!(pgl2_9().unwrap().order(), 720);
        assert_eq!(psigmal2_9().unwrap().order(), 720);
        assert_eq!(m10().unwrap().order(), 720);
        assert_eq!(pgammal2_9().unwrap().order(), 1440);
    }

    #[test]
    fn phi_is_outer() {
        let s = A6Setting::new().unwrap();
        assert!(!s.h.contains(&s.phi).unwrap());
        assert!(s.h.is_normalized_by(std::slice::from_ref(&s.phi)));
        let hg = s.h.reduced_generators();
        assert!(s.gamma.centralizer(&hg).unwrap().is_trivial());
        let q = quotient_by_normal(&s.gamma, &s.a).unwrap();
        assert_eq!(q.group().order(), 4);
        assert_eq!(q.group().exponent().unwrap(), 2);
    }

    #[test]
    fn witness_has_order_three() {
        let w = exceptional_automorphism_witness().unwrap();
        assert_eq!(w.commutator_order, 3);
    }
}
