//! Per-group classification reports and the verdict logic for the two
//! structure theorems on CPPO-groups.

use serde::{Deserialize, Serialize};

use crate::arith::prime_divisors;
use crate::error::{Error, Result};
use crate::group::{CommutatorWitness, FiniteGroup};
use crate::perm::Permutation;
use crate::quotient::QuotientOrSelf;
use crate::structure::{fitting_height, identify_simple_eppo, is_perfect, is_soluble, soluble_radical, SimpleEppoId};
use crate::towers::{find_max_tower, TowerRecord};

/// Marker stored for fields that need an enumeration past the cap.
pub const TOO_LARGE: &str = "skipped: too large";

/// A report field that may be skipped or meaningless for the group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Field<T> {
    Value(T),
    Skipped(String),
    NotApplicable,
}

impl<T> Field<T> {
    pub fn from_result(r: Result<T>) -> Self {
        match r {
            Ok(v) => Field::Value(v),
            Err(Error::TooLarge { .. }) => Field::Skipped(TOO_LARGE.to_string()),
            Err(e) => Field::Skipped(format!("skipped: {e}")),
        }
    }

    pub fn value(&self) -> Option<&T> {
        match self {
            Field::Value(v) => Some(v),
            _ => None,
        }
    }

    pub fn is_skipped(&self) -> bool {
        matches!(self, Field::Skipped(_))
    }

    fn map<U>(self, f: impl FnOnce(T) -> U) -> Field<U> {
        match self {
            Field::Value(v) => Field::Value(f(v)),
            Field::Skipped(s) => Field::Skipped(s),
            Field::NotApplicable => Field::NotApplicable,
        }
    }
}

/// An element and its order, in cycle notation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementRecord {
    pub element: String,
    pub order: u64,
}

/// `[x, y]` with its order, in cycle notation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CommutatorRecord {
    pub x: String,
    pub y: String,
    pub commutator: String,
    pub order: u64,
}

impl CommutatorRecord {
    pub fn from_witness(w: &CommutatorWitness) -> Self {
        CommutatorRecord {
            x: w.x.to_string(),
            y: w.y.to_string(),
            commutator: w.commutator.to_string(),
            order: w.order,
        }
    }

    /// Recomputes `[x, y]` and its order from the stored strings.
    pub fn recheck(&self, degree: usize) -> Result<bool> {
        let x = Permutation::parse(&self.x, degree)?;
        let y = Permutation::parse(&self.y, degree)?;
        let c = crate::perm::commutator(&x, &y)?;
        Ok(c.to_string() == self.commutator && c.order() == self.order)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    NotApplicable,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremVerdict {
    pub status: Status,
    pub detail: String,
}

impl TheoremVerdict {
    fn new(status: Status, detail: impl Into<String>) -> Self {
        TheoremVerdict {
            status,
            detail: detail.into(),
        }
    }

    /// Pass or not applicable.
    pub fn holds(&self) -> bool {
        matches!(self.status, Status::Pass | Status::NotApplicable)
    }

    /// Whether this verdict fails the run; with `strict`, skips do too.
    pub fn is_violation(&self, strict: bool) -> bool {
        self.status == Status::Fail || (strict && self.status == Status::Skipped)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub name: String,
    pub degree: usize,
    pub order: u128,
    pub primes: Vec<u64>,
    pub is_eppo: Field<bool>,
    pub eppo_witness: Option<ElementRecord>,
    pub is_cppo: Field<bool>,
    pub cppo_witness: Option<CommutatorRecord>,
    pub is_soluble: bool,
    pub is_perfect: bool,
    pub fitting_height: Field<usize>,
    pub derived_order: u128,
    pub derived_primes: Vec<u64>,
    pub soluble_radical_order: Field<u128>,
    /// `G″ = G′`.
    pub second_derived_is_derived: Field<bool>,
    /// `|R(G′)|`.
    pub derived_radical_order: Field<u128>,
    pub derived_radical_is_2group: Field<bool>,
    /// `|[G′, R(G)]|`.
    pub derived_radical_commutator_order: Field<u128>,
    /// `R(G′) = [G′, R(G)]`.
    pub derived_radical_is_commutator: Field<bool>,
    /// Identification of `G′/R(G′)`; `None` when that quotient is not simple.
    pub simple_quotient: Field<Option<SimpleEppoId>>,
    pub tower: Field<TowerRecord>,
    /// Recorded for CPPO groups only, with no verdict attached.
    pub derived_is_eppo: Field<bool>,
    pub theorem1: TheoremVerdict,
    pub theorem2: TheoremVerdict,
}

struct InsolubleData {
    second_derived_is_derived: bool,
    radical_order: u128,
    radical_is_2group: bool,
    commutator_order: u128,
    radical_is_commutator: bool,
    simple_quotient: Field<Option<SimpleEppoId>>,
}

fn insoluble_data(g: &FiniteGroup, d: &FiniteGroup) -> Result<InsolubleData> {
    let r = soluble_radical(g)?.into_group();
    let rd = soluble_radical(d)?.into_group();
    let dd = d.derived_subgroup();
    // [G′, R(G)]: normal closure of commutators of generators.
    let c = g.commutator_subgroup(d, &r).into_group();
    let q = QuotientOrSelf::new(d, &rd)?;
    let simple_quotient = match identify_simple_eppo(q.group()) {
        Ok(id) => Field::Value(Some(id)),
        Err(Error::NotSimple) => Field::Value(None),
        Err(e) => Field::from_result(Err(e)),
    };
    Ok(InsolubleData {
        second_derived_is_derived: dd.order() == d.order(),
        radical_order: rd.order(),
        radical_is_2group: rd.is_p_group(2),
        commutator_order: c.order(),
        radical_is_commutator: c.same_as(&rd),
        simple_quotient,
    })
}

/// All report fields for `g`. Nothing here is fatal: fields that cannot be
/// computed within the enumeration cap carry a skip marker.
pub fn classify(g: &FiniteGroup, name: &str) -> ClassificationReport {
    let soluble = is_soluble(g);
    let d = g.derived_subgroup().into_group();
    let eppo = Field::from_result(g.eppo_witness());
    let cppo = Field::from_result(g.cppo_witness());
    let eppo_witness = eppo.value().and_then(|w| w.as_ref()).map(|(x, o)| ElementRecord {
        element: x.to_string(),
        order: *o,
    });
    let cppo_witness = cppo.value().and_then(|w| w.as_ref()).map(CommutatorRecord::from_witness);
    let is_cppo = cppo.map(|w| w.is_none());
    let derived_primes = prime_divisors(d.order());

    let (h, tower) = if soluble {
        let h = Field::from_result(fitting_height(g));
        let tower = match h {
            Field::Value(_) => Field::from_result(find_max_tower(g).map(|(_, t)| t.record())),
            Field::Skipped(ref s) => Field::Skipped(s.clone()),
            Field::NotApplicable => Field::NotApplicable,
        };
        (h, tower)
    } else {
        (Field::NotApplicable, Field::NotApplicable)
    };

    let radical_order = Field::from_result(soluble_radical(g).map(|r| r.order()));
    let ins = if soluble {
        Field::NotApplicable
    } else {
        Field::from_result(insoluble_data(g, &d))
    };
    let pick = |f: &dyn Fn(&InsolubleData) -> Field<_>| -> Field<_> {
        match &ins {
            Field::Value(data) => f(data),
            Field::Skipped(s) => Field::Skipped(s.clone()),
            Field::NotApplicable => Field::NotApplicable,
        }
    };
    let second_derived_is_derived = pick(&|x| Field::Value(x.second_derived_is_derived));
    let pick_u = |f: &dyn Fn(&InsolubleData) -> u128| -> Field<u128> {
        match &ins {
            Field::Value(data) => Field::Value(f(data)),
            Field::Skipped(s) => Field::Skipped(s.clone()),
            Field::NotApplicable => Field::NotApplicable,
        }
    };
    let derived_radical_order = pick_u(&|x| x.radical_order);
    let derived_radical_commutator_order = pick_u(&|x| x.commutator_order);
    let derived_radical_is_2group = pick(&|x| Field::Value(x.radical_is_2group));
    let derived_radical_is_commutator = pick(&|x| Field::Value(x.radical_is_commutator));
    let simple_quotient = match &ins {
        Field::Value(data) => data.simple_quotient.clone(),
        Field::Skipped(s) => Field::Skipped(s.clone()),
        Field::NotApplicable => Field::NotApplicable,
    };

    let derived_is_eppo = match is_cppo {
        Field::Value(true) => Field::from_result(d.is_eppo()),
        _ => Field::NotApplicable,
    };

    let mut report = ClassificationReport {
        name: name.to_string(),
        degree: g.degree(),
        order: g.order(),
        primes: g.prime_divisors(),
        is_eppo: eppo.map(|w| w.is_none()),
        eppo_witness,
        is_cppo,
        cppo_witness,
        is_soluble: soluble,
        is_perfect: is_perfect(g),
        fitting_height: h,
        derived_order: d.order(),
        derived_primes,
        soluble_radical_order: radical_order,
        second_derived_is_derived,
        derived_radical_order,
        derived_radical_is_2group,
        derived_radical_commutator_order,
        derived_radical_is_commutator,
        simple_quotient,
        tower,
        derived_is_eppo,
        theorem1: TheoremVerdict::new(Status::NotApplicable, ""),
        theorem2: TheoremVerdict::new(Status::NotApplicable, ""),
    };
    report.theorem1 = theorem1_verdict(
        report.is_soluble,
        &report.is_cppo,
        &report.fitting_height,
        &report.derived_primes,
    );
    report.theorem2 = theorem2_verdict(&report);
    report
}

/// Soluble CPPO groups have Fitting height at most 3 and `|π(G′)| ≤ 3`.
pub fn theorem1_verdict(
    soluble: bool,
    is_cppo: &Field<bool>,
    fitting_height: &Field<usize>,
    derived_primes: &[u64],
) -> TheoremVerdict {
    if !soluble {
        return TheoremVerdict::new(Status::NotApplicable, "insoluble");
    }
    match is_cppo {
        Field::Value(true) => {}
        Field::Value(false) => return TheoremVerdict::new(Status::NotApplicable, "not CPPO"),
        _ => return TheoremVerdict::new(Status::Skipped, "CPPO check skipped"),
    }
    let Some(&h) = fitting_height.value() else {
        return TheoremVerdict::new(Status::Skipped, "Fitting height skipped");
    };
    let k = derived_primes.len();
    let mut bad = Vec::new();
    if h > 3 {
        bad.push(format!("Fitting height {h} > 3"));
    }
    if k > 3 {
        bad.push(format!("|π(G′)| = {k} > 3"));
    }
    if bad.is_empty() {
        TheoremVerdict::new(Status::Pass, format!("h = {h}, |π(G′)| = {k}"))
    } else {
        TheoremVerdict::new(Status::Fail, bad.join("; "))
    }
}

/// Insoluble CPPO groups have `G″ = G′`, `R(G′) = [G′, R(G)]` a 2-group and
/// `G′/R(G′)` a simple EPPO-group from the list.
pub fn theorem2_verdict(r: &ClassificationReport) -> TheoremVerdict {
    if r.is_soluble {
        return TheoremVerdict::new(Status::NotApplicable, "soluble");
    }
    match r.is_cppo {
        Field::Value(true) => {}
        Field::Value(false) => return TheoremVerdict::new(Status::NotApplicable, "not CPPO"),
        _ => return TheoremVerdict::new(Status::Skipped, "CPPO check skipped"),
    }
    let (Field::Value(perfect), Field::Value(equal), Field::Value(two), Field::Value(id)) = (
        &r.second_derived_is_derived,
        &r.derived_radical_is_commutator,
        &r.derived_radical_is_2group,
        &r.simple_quotient,
    ) else {
        return TheoremVerdict::new(Status::Skipped, "structure fields skipped");
    };
    let mut bad = Vec::new();
    if !perfect {
        bad.push("G′ is not perfect".to_string());
    }
    if !equal {
        bad.push(format!(
            "|R(G′)| = {} but |[G′,R(G)]| = {}",
            r.derived_radical_order.value().copied().unwrap_or(0),
            r.derived_radical_commutator_order.value().copied().unwrap_or(0)
        ));
    }
    if !two {
        bad.push("R(G′) is not a 2-group".to_string());
    }
    match id {
        Some(id) if id.in_list() => {}
        Some(_) => bad.push("G′/R(G′) is not in the list".to_string()),
        None => bad.push("G′/R(G′) is not simple".to_string()),
    }
    if bad.is_empty() {
        let id = id.expect("checked above");
        TheoremVerdict::new(Status::Pass, format!("G′/R(G′) ≅ {id}"))
    } else {
        TheoremVerdict::new(Status::Fail, bad.join("; "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::atlas::build_named;

    #[test]
    fn s4_report() {
        let g = build_named("sym(4)").unwrap();
        let r = classify(&g, "S4");
        assert_eq!(r.is_cppo, Field::Value(true));
        assert_eq!(r.is_eppo, Field::Value(true));
        assert_eq!(r.fitting_height, Field::Value(3));
        assert_eq!(r.derived_primes, vec![2, 3]);
        assert_eq!(r.theorem1.status, Status::Pass);
        assert_eq!(r.theorem2.status, Status::NotApplicable);
        assert_eq!(r.tower.value().unwrap().height, 3);
        assert_eq!(r.soluble_radical_order, Field::Value(24));
    }

    #[test]
    fn asl24_report() {
        let g = build_named("asl2_4").unwrap();
        let r = classify(&g, "ASL(2,4)");
        assert!(!r.is_soluble && r.is_perfect);
        assert_eq!(r.is_cppo, Field::Value(true));
        assert_eq!(r.derived_radical_order, Field::Value(16));
        assert_eq!(r.derived_radical_is_2group, Field::Value(true));
        assert_eq!(r.simple_quotient, Field::Value(Some(SimpleEppoId::PSL2_4)));
        assert_eq!(r.theorem2.status, Status::Pass, "{:?}", r.theorem2);
    }

    #[test]
    fn non_cppo_has_a_rechecked_witness() {
        let g = build_named("alt(7)").unwrap();
        let r = classify(&g, "A7");
        assert_eq!(r.is_cppo, Field::Value(false));
        let w = r.cppo_witness.as_ref().unwrap();
        assert!(w.recheck(7).unwrap());
        assert!(!crate::arith::is_prime_power(w.order));
        assert_eq!(r.theorem2.status, Status::NotApplicable);
        assert_eq!(r.simple_quotient, Field::Value(Some(SimpleEppoId::NotInList)));
    }

    #[test]
    fn s5_is_cppo_over_a5() {
        let g = build_named("sym(5)").unwrap();
        let r = classify(&g, "S5");
        assert_eq!((r.is_cppo.clone(), r.is_eppo.clone()), (Field::Value(true), Field::Value(false)));
        assert_eq!(r.eppo_witness.as_ref().unwrap().order, 6);
        assert_eq!(r.derived_is_eppo, Field::Value(true));
        assert_eq!(r.simple_quotient, Field::Value(Some(SimpleEppoId::PSL2_4)));
        assert_eq!(r.theorem2.status, Status::Pass);
    }

    #[test]
    fn skipped_fields_past_the_cap() {
        let g = build_named("sym(6)").unwrap().with_cap(100);
        let r = classify(&g, "S6");
        assert_eq!(r.is_cppo, Field::Skipped(TOO_LARGE.to_string()));
        assert_eq!(r.theorem2.status, Status::Skipped);
        assert!(!r.theorem2.is_violation(false) && r.theorem2.is_violation(true));
    }

    #[test]
    fn theorem1_logic_on_synthetic_fields() {
        for soluble in [false, true] {
            for cppo in [false, true] {
                for h in 0..6usize {
                    for k in 0..6usize {
                        let primes: Vec<u64> = [2, 3, 5, 7, 11][..k.min(5)].to_vec();
                        let v = theorem1_verdict(soluble, &Field::Value(cppo), &Field::Value(h), &primes);
                        let expected = !soluble || !cppo || (h <= 3 && primes.len() <= 3);
                        assert_eq!(v.holds(), expected);
                    }
                }
            }
        }
    }
}
