use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use serde::{Deserialize, Serialize};

use crate::atlas::GroupSpec;
use crate::error::Result;

use super::report::{classify, ClassificationReport, Status};

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictCounts {
    pub pass: usize,
    pub fail: usize,
    pub not_applicable: usize,
    pub skipped: usize,
}

impl VerdictCounts {
    fn add(&mut self, s: Status) {
        match s {
            Status::Pass => self.pass += 1,
            Status::Fail => self.fail += 1,
            Status::NotApplicable => self.not_applicable += 1,
            Status::Skipped => self.skipped += 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremSuiteReport {
    pub reports: Vec<ClassificationReport>,
    pub theorem1: VerdictCounts,
    pub theorem2: VerdictCounts,
}

impl TheoremSuiteReport {
    pub fn from_reports(reports: Vec<ClassificationReport>) -> Self {
        let mut theorem1 = VerdictCounts::default();
        let mut theorem2 = VerdictCounts::default();
        for r in &reports {
            theorem1.add(r.theorem1.status);
            theorem2.add(r.theorem2.status);
        }
        TheoremSuiteReport {
            reports,
            theorem1,
            theorem2,
        }
    }

    /// Names and details of the failing verdicts.
    pub fn violations(&self, strict: bool) -> Vec<String> {
        let mut out = Vec::new();
        for r in &self.reports {
            for (label, v) in [("theorem 1", &r.theorem1), ("theorem 2", &r.theorem2)] {
                if v.is_violation(strict) {
                    out.push(format!("{}: {label}: {}", r.name, v.detail));
                }
            }
        }
        out
    }
}

/// Classifies every corpus group, optionally with a custom enumeration cap.
/// Groups are spread over worker threads; the report keeps corpus order.
pub fn run_theorem_suite(corpus: &[GroupSpec], cap: Option<usize>) -> Result<TheoremSuiteReport> {
    let workers = std::thread::available_parallelism().map_or(1, |n| n.get()).min(corpus.len()).max(1);
    let next = AtomicUsize::new(0);
    let slots: Mutex<Vec<Option<Result<ClassificationReport>>>> = Mutex::new((0..corpus.len()).map(|_| None).collect());
    std::thread::scope(|s| {
        for _ in 0..workers {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= corpus.len() {
                    break;
                }
                let result = corpus[i].build().map(|named| {
                    let g = match cap {
                        Some(c) => named.group.with_cap(c),
                        None => named.group,
                    };
                    classify(&g, &named.name)
                });
                slots.lock().unwrap()[i] = Some(result);
            });
        }
    });
    let reports = slots
        .into_inner()
        .unwrap()
        .into_iter()
        .map(|r| r.expect("every slot filled"))
        .collect::<Result<Vec<_>>>()?;
    Ok(TheoremSuiteReport::from_reports(reports))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_soluble_corpus_passes() {
        let corpus: Vec<GroupSpec> = ["sym(4)", "sl2_3", "agl1(5)", "agl1(7)", "dihedral(12)"]
            .iter()
            .map(|s| GroupSpec::atlas(s).unwrap())
            .collect();
        let r = run_theorem_suite(&corpus, None).unwrap();
        assert_eq!(r.reports.len(), 5);
        assert_eq!(r.theorem1.fail, 0);
        assert_eq!(r.theorem1.pass, 5);
        assert!(r.violations(true).is_empty());
        assert_eq!(r.reports[0].name, "sym(4)");
    }
}
