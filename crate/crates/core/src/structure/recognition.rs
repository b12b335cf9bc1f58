use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::quotient::QuotientOrSelf;

use super::normal::is_simple;
use super::series::is_perfect;

/// The nonabelian simple groups all of whose elements have prime-power order.
#[allow(non_camel_case_types)]
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SimpleEppoId {
    PSL2_4,
    PSL2_7,
    PSL2_8,
    PSL2_9,
    PSL2_17,
    PSL3_4,
    Sz8,
    Sz32,
    NotInList,
}

pub const SZ32_ORDER: u128 = 32_537_600;

/// `(id, order, ascending orders of class representatives)`, generated from
/// the atlas constructions.
const FINGERPRINTS: [(SimpleEppoId, u128, &[u64]); 7] = [
    (SimpleEppoId::PSL2_4, 60, &[1, 2, 3, 5, 5]),
    (SimpleEppoId::PSL2_7, 168, &[1, 2, 3, 4, 7, 7]),
    (SimpleEppoId::PSL2_8, 504, &[1, 2, 3, 7, 7, 7, 9, 9, 9]),
    (SimpleEppoId::PSL2_9, 360, &[1, 2, 3, 3, 4, 5, 5]),
    (SimpleEppoId::PSL2_17, 2448, &[1, 2, 3, 4, 8, 8, 9, 9, 9, 17, 17]),
    (SimpleEppoId::PSL3_4, 20160, &[1, 2, 3, 4, 4, 4, 5, 5, 7, 7]),
    (SimpleEppoId::Sz8, 29120, &[1, 2, 4, 4, 5, 7, 7, 7, 13, 13, 13]),
];

impl SimpleEppoId {
    pub fn name(self) -> &'static str {
        match self {
            SimpleEppoId::PSL2_4 => "PSL(2,4)",
            SimpleEppoId::PSL2_7 => "PSL(2,7)",
            SimpleEppoId::PSL2_8 => "PSL(2,8)",
            SimpleEppoId::PSL2_9 => "PSL(2,9)",
            SimpleEppoId::PSL2_17 => "PSL(2,17)",
            SimpleEppoId::PSL3_4 => "PSL(3,4)",
            SimpleEppoId::Sz8 => "Sz(8)",
            SimpleEppoId::Sz32 => "Sz(32)",
            SimpleEppoId::NotInList => "not in list",
        }
    }

    /// Sz(32) is recognised by its order alone.
    pub fn order_only(self) -> bool {
        self == SimpleEppoId::Sz32
    }

    pub fn in_list(self) -> bool {
        self != SimpleEppoId::NotInList
    }

    pub fn fingerprint(self) -> Option<(u128, &'static [u64])> {
        FINGERPRINTS
            .iter()
            .find(|(id, _, _)| *id == self)
            .map(|&(_, o, f)| (o, f))
    }
}

impl fmt::Display for SimpleEppoId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Matches `(|G|, class-representative orders)` against the table.
///
/// A group of order `|Sz(32)|` is beyond enumeration and is matched on the
/// order without a simplicity check.
pub fn identify_simple_eppo(g: &FiniteGroup) -> Result<SimpleEppoId> {
    let order = g.order();
    if order == SZ32_ORDER {
        return Ok(SimpleEppoId::Sz32);
    }
    if !is_simple(g)? {
        return Err(Error::NotSimple);
    }
    let Some(&(id, _, expected)) = FINGERPRINTS.iter().find(|(_, o, _)| *o == order) else {
        return Ok(SimpleEppoId::NotInList);
    };
    if g.class_orders()? == expected {
        Ok(id)
    } else {
        Ok(SimpleEppoId::NotInList)
    }
}

/// Perfect with nonabelian simple central quotient.
pub fn is_quasisimple(g: &FiniteGroup) -> Result<bool> {
    if g.is_trivial() || !is_perfect(g) {
        return Ok(false);
    }
    let z = g.center()?;
    let q = QuotientOrSelf::new(g, &z)?;
    is_simple(q.group())
}
