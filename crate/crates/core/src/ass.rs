//! Associated primes of monomial subquotients `U/B`.
//!
//! A monomial prime `P_S = (x_i : i ∈ S)` is associated to `U/B` exactly when
//! the localization at `P_S` (invert the variables outside `S`) has a socle
//! element: a monomial `m` supported on `S` with `m ∈ U_S`, `m ∉ B_S`, and
//! `x_i·m ∈ B_S` for every `i ∈ S`. Such an `m` has annihilator exactly
//! `P_S`, since a monomial avoiding `S` can only multiply `m` into `B_S` if
//! `m` was already there.
//!
//! Witnesses are found by exact ideal arithmetic: the socle candidates are
//! `(∩_{i∈S} (B_S : x_i)) ∩ U_S`, and a witness exists iff that ideal is not
//! contained in `B_S`.
//!
//! Cap lemma (keeps every witness inside a finite box, and is what makes the
//! brute-force oracle complete): let `c_i` be the maximum exponent of `x_i`
//! over the generators of `U_S` and `B_S`, and let `m' = min(m, c)`
//! componentwise. If `m` is a witness so is `m'`: any generator of `U_S`
//! dividing `m` has exponents ≤ c, hence divides `m'`; a generator of `B_S`
//! dividing `m'` would divide `m`; and a generator dividing `x_i·m` has
//! exponents ≤ c away from `i` and ≤ c_i ≤ m'_i + 1 at `i`, hence divides
//! `x_i·m'`.

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::par;
use crate::prime::{AssSet, MonomialPrime};

/// Hard guard for the `2^v` localization loop; configuration layers should
/// reject large rings long before this.
pub const MAX_ASS_VARS: usize = 16;

/// The module `U/B` for monomial ideals `B ⊆ U`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subquotient {
    numerator: MonomialIdeal,
    denominator: MonomialIdeal,
}

impl Subquotient {
    pub fn new(numerator: MonomialIdeal, denominator: MonomialIdeal) -> Result<Self> {
        if numerator.vars() != denominator.vars() {
            return Err(Error::DimensionMismatch {
                expected: numerator.vars(),
                got: denominator.vars(),
            });
        }
        if !denominator.is_subset_of(&numerator) {
            return Err(Error::DenominatorNotContained);
        }
        Ok(Subquotient { numerator, denominator })
    }

    /// The cyclic module `A/B`.
    pub fn cyclic(denominator: MonomialIdeal) -> Self {
        let numerator = MonomialIdeal::unit(denominator.vars());
        Subquotient { numerator, denominator }
    }

    pub fn numerator(&self) -> &MonomialIdeal {
        &self.numerator
    }

    pub fn denominator(&self) -> &MonomialIdeal {
        &self.denominator
    }

    pub fn vars(&self) -> usize {
        self.numerator.vars()
    }

    /// The module is zero iff the two ideals coincide.
    pub fn is_zero(&self) -> bool {
        self.numerator == self.denominator
    }

    pub fn localize(&self, keep: &[usize]) -> Self {
        Subquotient {
            numerator: self.numerator.localize(keep),
            denominator: self.denominator.localize(keep),
        }
    }
}

/// Per-variable exponent caps over the generators of both ideals.
fn caps(u: &MonomialIdeal, b: &MonomialIdeal) -> Vec<u32> {
    u.max_exponents()
        .iter()
        .zip(b.max_exponents())
        .map(|(&a, bb)| a.max(bb))
        .collect()
}

/// Find a socle element of `U_S/B_S` at the maximal prime of the variables
/// `S`, if one exists. Inputs must already be localized to `S`. The returned
/// witness is capped into the box `m_i ≤ c_i` via the cap lemma above.
pub fn socle_witness(
    support: &[usize],
    u_loc: &MonomialIdeal,
    b_loc: &MonomialIdeal,
) -> Option<Monomial> {
    let v = u_loc.vars();
    assert_eq!(v, b_loc.vars());

    // candidates = (∩_i (B_S : x_i)) ∩ U_S
    let mut candidates = u_loc.clone();
    for &i in support {
        candidates = candidates.intersect(&b_loc.colon_monomial(&Monomial::var(i, v)));
        if candidates.is_zero() {
            return None;
        }
    }
    let witness = candidates.gens().iter().find(|m| !b_loc.contains(m))?.clone();

    let cap = Monomial::new(caps(u_loc, b_loc));
    let capped = witness.gcd(&cap);
    debug_assert!(u_loc.contains(&capped));
    debug_assert!(!b_loc.contains(&capped));
    debug_assert!(support
        .iter()
        .all(|&i| b_loc.contains(&capped.mul(&Monomial::var(i, v)))));
    Some(capped)
}

/// `Ass(U/B)` by scanning the `2^v` variable subsets.
pub fn assoc_primes(q: &Subquotient) -> AssSet {
    assoc_primes_impl(q, true)
}

/// Sequential variant of [`assoc_primes`]; same result, no rayon.
pub fn assoc_primes_seq(q: &Subquotient) -> AssSet {
    assoc_primes_impl(q, false)
}

fn assoc_primes_impl(q: &Subquotient, parallel: bool) -> AssSet {
    let v = q.vars();
    assert!(v <= MAX_ASS_VARS, "too many variables for the subset scan");
    let masks: Vec<u32> = (0..(1u32 << v)).collect();
    let found = par::map(masks, parallel, |mask| {
        let support: Vec<usize> = (0..v).filter(|i| mask >> i & 1 == 1).collect();
        let u_loc = q.numerator().localize(&support);
        let b_loc = q.denominator().localize(&support);
        if u_loc == b_loc {
            return None;
        }
        socle_witness(&support, &u_loc, &b_loc).map(|_| MonomialPrime::new(support))
    });
    found.into_iter().flatten().collect()
}

/// Definitional brute force, used as the independent oracle: enumerate every
/// monomial in the cap box (plus `slack`), keep those in `U \ B`, and collect
/// `(B : m)` whenever it is a monomial prime. By the cap lemma the result is
/// independent of `slack`.
pub fn assoc_primes_big_oracle(q: &Subquotient, slack: u32) -> AssSet {
    let v = q.vars();
    let caps: Vec<u32> = caps(q.numerator(), q.denominator())
        .iter()
        .map(|c| c + slack)
        .collect();

    let mut out = AssSet::new();
    let mut point = vec![0u32; v];
    loop {
        let m = Monomial::new(point.clone());
        if q.numerator().contains(&m) && !q.denominator().contains(&m) {
            let ann = q.denominator().colon_monomial(&m);
            if let Some(p) = as_prime(&ann) {
                out.insert(p);
            }
        }
        let mut i = 0;
        loop {
            if i == v {
                break;
            }
            if point[i] < caps[i] {
                point[i] += 1;
                break;
            }
            point[i] = 0;
            i += 1;
        }
        if i == v {
            break;
        }
    }
    out
}

/// Recognize an ideal of the shape `(x_i : i ∈ S)` (the zero ideal is the
/// zero prime; the unit ideal is not a prime).
fn as_prime(ideal: &MonomialIdeal) -> Option<MonomialPrime> {
    if ideal.is_zero() {
        return Some(MonomialPrime::zero_prime());
    }
    let mut support = Vec::with_capacity(ideal.gens().len());
    for g in ideal.gens() {
        if g.degree() != 1 {
            return None;
        }
        support.push(g.support()[0]);
    }
    Some(MonomialPrime::new(support))
}
