//! Monomial primes `(x_i : i ∈ S)` and sets of them.

use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::ring::RingContext;
use std::collections::BTreeSet;

/// A prime generated by a subset of the variables; the empty support is the
/// zero prime `(0)`.
///
/// The derived `Ord` is lexicographic on the sorted support, which fixes the
/// serialization order of prime sets.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct MonomialPrime {
    support: Vec<usize>,
}

impl MonomialPrime {
    pub fn new(mut support: Vec<usize>) -> Self {
        support.sort_unstable();
        support.dedup();
        MonomialPrime { support }
    }

    pub fn zero_prime() -> Self {
        MonomialPrime { support: vec![] }
    }

    pub fn support(&self) -> &[usize] {
        &self.support
    }

    pub fn is_zero_prime(&self) -> bool {
        self.support.is_empty()
    }

    /// The prime as a monomial ideal in `vars` variables.
    pub fn to_ideal(&self, vars: usize) -> MonomialIdeal {
        let gens = self.support.iter().map(|&i| Monomial::var(i, vars)).collect();
        MonomialIdeal::from_gens(vars, gens).expect("support indices in range")
    }

    /// `ideal ⊆ self`: every generator involves some variable of the support.
    pub fn contains_ideal(&self, ideal: &MonomialIdeal) -> bool {
        ideal
            .gens()
            .iter()
            .all(|g| g.support().iter().any(|i| self.support.binary_search(i).is_ok()))
    }

    /// Render as `(x,y)`; the zero prime renders as `(0)`.
    pub fn display(&self, ring: &RingContext) -> String {
        if self.support.is_empty() {
            return "(0)".to_string();
        }
        let names: Vec<&str> = self.support.iter().map(|&i| ring.name(i)).collect();
        format!("({})", names.join(","))
    }
}

/// A set of monomial primes in canonical (lexicographic-support) order.
pub type AssSet = BTreeSet<MonomialPrime>;
