//! Grid-relative stabilization detection for sequences of prime sets.
//!
//! A finite scan can never certify asymptotic stability, so everything here
//! is phrased against the scanned grid: an index `k` is *valid* when the
//! sequence equals its value at `k` on every grid point ≥ k (componentwise).
//! The grid corner is always vacuously valid, so the `stable` verdict
//! additionally demands that the cone above the reported `k` contains at
//! least two grid points (a single-point grid being the degenerate
//! exception).

use crate::filtration::MultiIndex;
use crate::prime::AssSet;
use std::collections::BTreeMap;

pub type AssSequence = BTreeMap<MultiIndex, AssSet>;

/// A pair `earlier ≤ later` where the earlier set is not contained in the
/// later one.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MonotonicityViolation {
    pub earlier: MultiIndex,
    pub later: MultiIndex,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StabilizationReport {
    pub sequence: AssSequence,
    pub stable: bool,
    /// Lexicographically least componentwise-minimal valid index.
    pub k: Option<MultiIndex>,
    /// All componentwise-minimal valid indices (ties in the product order).
    pub minimal_k: Vec<MultiIndex>,
    pub stable_set: Option<AssSet>,
    /// Least index from which the sequence is monotone nondecreasing.
    pub monotone_from: Option<MultiIndex>,
    pub violations: Vec<MonotonicityViolation>,
}

impl StabilizationReport {
    /// Union of every set in the sequence.
    pub fn union(&self) -> AssSet {
        let mut out = AssSet::new();
        for set in self.sequence.values() {
            out.extend(set.iter().cloned());
        }
        out
    }
}

fn cone_size(points: &[MultiIndex], k: &MultiIndex) -> usize {
    points.iter().filter(|n| k.leq(n)).count()
}

/// Keep only the componentwise-minimal elements, preserving lex order.
fn minimal_points(mut valid: Vec<MultiIndex>) -> Vec<MultiIndex> {
    valid.sort();
    let mut out: Vec<MultiIndex> = Vec::new();
    for p in valid {
        if !out.iter().any(|q| q.leq(&p)) {
            out.push(p);
        }
    }
    out
}

pub fn analyze_sequence(sequence: AssSequence) -> StabilizationReport {
    let points: Vec<MultiIndex> = sequence.keys().cloned().collect();

    let valid: Vec<MultiIndex> = points
        .iter()
        .filter(|k| {
            let at_k = &sequence[*k];
            points.iter().filter(|n| k.leq(n)).all(|n| &sequence[n] == at_k)
        })
        .cloned()
        .collect();
    let minimal_k = minimal_points(valid);
    let k = minimal_k.first().cloned();
    let stable = match &k {
        Some(k) => cone_size(&points, k) >= 2 || points.len() == 1,
        None => false,
    };
    let stable_set = k.as_ref().map(|k| sequence[k].clone());

    let mut violations = Vec::new();
    for m in &points {
        for n in &points {
            if m != n && m.leq(n) && !sequence[m].is_subset(&sequence[n]) {
                violations.push(MonotonicityViolation { earlier: m.clone(), later: n.clone() });
            }
        }
    }

    let monotone_valid: Vec<MultiIndex> = points
        .iter()
        .filter(|b| {
            violations
                .iter()
                .all(|viol| !(b.leq(&viol.earlier) && b.leq(&viol.later)))
        })
        .cloned()
        .collect();
    let monotone_from = minimal_points(monotone_valid).first().cloned();

    StabilizationReport { sequence, stable, k, minimal_k, stable_set, monotone_from, violations }
}
