//! The full pipeline for one degree: enumerate, merge, test each class for
//! smooth members, and sort the classes into the published table and the
//! rest.

use serde::Serialize;

use crate::canonical::{dedupe, TypeOrbit};
use crate::error::Result;
use crate::normal_form::NormalForm;
use crate::types::{enumerate_candidates, CaseId, CyclicType};
use crate::verification::{locus_nonempty, LocusStatus, LocusVerdict, DEFAULT_PRIMES, DEFAULT_TRIALS};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyOptions {
    pub primes: Vec<u64>,
    pub trials: usize,
    pub seed: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            primes: DEFAULT_PRIMES.to_vec(),
            trials: DEFAULT_TRIALS,
            seed: 0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RecordStatus {
    /// Has a smooth member and belongs in the table.
    Tabulated,
    /// Every member is divisible by a coordinate.
    Reducible,
    /// No smooth member found.
    PresumedEmpty,
    /// Has smooth members, but comes only from the Klein-type or Fermat-type
    /// case at an order below that case's maximal order. Such loci are not
    /// listed in the classical tables.
    UntabulatedOrder,
}

#[derive(Debug, Clone)]
pub struct LocusRecord {
    pub orbit: TypeOrbit,
    pub verdict: LocusVerdict,
    pub status: RecordStatus,
}

impl LocusRecord {
    pub fn form(&self) -> &NormalForm {
        &self.orbit.form
    }
}

fn below_maximal_c3_c6(orbit: &TypeOrbit, d: u64) -> bool {
    orbit
        .candidates
        .iter()
        .all(|c| matches!(c.case, CaseId::C3 | CaseId::C6) && c.ty.m() < c.case.divisor_integer(d))
}

/// Classify every class of degree `d`, in table order.
pub fn classify(d: u64, opts: &VerifyOptions) -> Result<Vec<LocusRecord>> {
    let orbits = dedupe(&enumerate_candidates(d)?)?;
    orbits
        .into_iter()
        .map(|orbit| {
            let verdict = locus_nonempty(&orbit.form, opts.trials, &opts.primes, opts.seed)?;
            let status = match verdict.status {
                LocusStatus::ReducibleAlways => RecordStatus::Reducible,
                LocusStatus::PresumedEmpty => RecordStatus::PresumedEmpty,
                LocusStatus::SmoothWitnessFound if below_maximal_c3_c6(&orbit, d) => RecordStatus::UntabulatedOrder,
                LocusStatus::SmoothWitnessFound => RecordStatus::Tabulated,
            };
            Ok(LocusRecord { orbit, verdict, status })
        })
        .collect()
}

/// Machine-readable view of a record.
#[derive(Debug, Clone, Serialize)]
pub struct RecordJson {
    pub canonical: CyclicType,
    pub status: RecordStatus,
    pub cases: Vec<CaseId>,
    pub members: Vec<CyclicType>,
    pub verdict: LocusStatus,
    pub trials: usize,
    pub witness_prime: Option<u64>,
    pub witness_seed: Option<u64>,
    pub form: NormalForm,
}

impl From<&LocusRecord> for RecordJson {
    fn from(r: &LocusRecord) -> Self {
        RecordJson {
            canonical: r.orbit.representative,
            status: r.status,
            cases: r.orbit.provenance.iter().copied().collect(),
            members: r.orbit.members.iter().copied().collect(),
            verdict: r.verdict.status,
            trials: r.verdict.trials,
            witness_prime: r.verdict.witness.as_ref().map(|w| w.p()),
            witness_seed: r.verdict.witness_seed,
            form: r.orbit.form.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quartics_all_tabulated() {
        let recs = classify(4, &VerifyOptions::default()).unwrap();
        assert_eq!(recs.len(), 10);
        assert!(recs.iter().all(|r| r.status == RecordStatus::Tabulated));
    }

    #[test]
    fn quintic_reducible_class() {
        let recs = classify(5, &VerifyOptions::default()).unwrap();
        let reducible: Vec<_> = recs.iter().filter(|r| r.status == RecordStatus::Reducible).collect();
        assert_eq!(reducible.len(), 1);
        assert_eq!(
            reducible[0].orbit.provenance.iter().copied().collect::<Vec<_>>(),
            vec![CaseId::C43]
        );
        assert_eq!(recs.iter().filter(|r| r.status == RecordStatus::Tabulated).count(), 12);
    }

    #[test]
    fn sextic_untabulated_orders_have_smooth_members() {
        let recs = classify(6, &VerifyOptions::default()).unwrap();
        let extra: Vec<_> = recs
            .iter()
            .filter(|r| r.status == RecordStatus::UntabulatedOrder)
            .collect();
        assert_eq!(extra.len(), 3);
        for r in extra {
            assert!(r.verdict.witness.is_some());
            let m = r.orbit.representative.m();
            assert!(m == 7 || m == 3);
        }
    }
}
