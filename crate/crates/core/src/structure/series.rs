use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Subgroup};
use crate::quotient::QuotientOrSelf;

use super::sylow::fitting_subgroup;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesKind {
    Derived,
    LowerCentral,
    UpperFitting,
}

/// A chain of normal subgroups of one group.
///
/// Derived and lower central series run downward from `G`; the upper
/// Fitting series runs upward from `1`. The stable term appears once.
#[derive(Clone, Debug)]
pub struct SeriesChain<'a> {
    pub kind: SeriesKind,
    pub terms: Vec<Subgroup<'a>>,
    pub stabilized: bool,
}

impl<'a> SeriesChain<'a> {
    /// The stationary term.
    pub fn last(&self) -> &Subgroup<'a> {
        self.terms.last().expect("a series has at least one term")
    }

    /// Number of proper steps.
    pub fn length(&self) -> usize {
        self.terms.len() - 1
    }

    pub fn orders(&self) -> Vec<u128> {
        self.terms.iter().map(|t| t.order()).collect()
    }
}

fn descending<'a>(
    g: &'a FiniteGroup,
    kind: SeriesKind,
    step: impl Fn(&FiniteGroup) -> FiniteGroup,
) -> SeriesChain<'a> {
    let mut terms = vec![Subgroup::new(g, g.shallow())];
    loop {
        let next = step(terms.last().unwrap());
        if next.order() == terms.last().unwrap().order() {
            break;
        }
        terms.push(Subgroup::new(g, next));
    }
    SeriesChain {
        kind,
        terms,
        stabilized: true,
    }
}

pub fn derived_series(g: &FiniteGroup) -> SeriesChain<'_> {
    descending(g, SeriesKind::Derived, |h| h.derived_subgroup().into_group())
}

pub fn is_soluble(g: &FiniteGroup) -> bool {
    derived_series(g).last().is_trivial()
}

pub fn is_perfect(g: &FiniteGroup) -> bool {
    g.derived_subgroup().order() == g.order()
}

/// `γ₁ = G`, `γᵢ₊₁ = [γᵢ, G]`.
pub fn lower_central_series(g: &FiniteGroup) -> SeriesChain<'_> {
    descending(g, SeriesKind::LowerCentral, |h| {
        g.commutator_subgroup(h, g).into_group()
    })
}

pub fn gamma_infinity(g: &FiniteGroup) -> Subgroup<'_> {
    lower_central_series(g).terms.pop().unwrap()
}

pub fn is_nilpotent(g: &FiniteGroup) -> bool {
    g.is_abelian() || gamma_infinity(g).is_trivial()
}

/// `1 = F₀ ≤ F₁ ≤ …` with `Fᵢ₊₁/Fᵢ = F(G/Fᵢ)`.
///
/// The stationary term `R` has `F(G/R) = 1`. A nontrivial soluble normal
/// subgroup of `G/R` would contain an elementary abelian minimal normal
/// subgroup, which lies in `F(G/R)`; so `R` is the soluble radical.
pub fn upper_fitting_series(g: &FiniteGroup) -> Result<SeriesChain<'_>> {
    let mut terms = vec![Subgroup::new(g, g.sub(Vec::new()))];
    loop {
        let current = terms.last().unwrap().group();
        if current.order() == g.order() {
            break;
        }
        let q = QuotientOrSelf::new(g, current)?;
        let f = fitting_subgroup(q.group())?;
        if f.is_trivial() {
            break;
        }
        let next = q.preimage(&f);
        terms.push(Subgroup::new(g, next));
    }
    Ok(SeriesChain {
        kind: SeriesKind::UpperFitting,
        terms,
        stabilized: true,
    })
}

/// Fitting height; defined for soluble groups only.
pub fn fitting_height(g: &FiniteGroup) -> Result<usize> {
    let series = upper_fitting_series(g)?;
    if series.last().order() != g.order() {
        return Err(Error::Insoluble);
    }
    Ok(series.length())
}

/// `R(G)`, the largest soluble normal subgroup.
pub fn soluble_radical(g: &FiniteGroup) -> Result<Subgroup<'_>> {
    Ok(upper_fitting_series(g)?.terms.pop().unwrap())
}
