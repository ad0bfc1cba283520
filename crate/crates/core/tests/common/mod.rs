//! Shared oracles and random generators for the integration suites.
//!
//! Everything here recomputes results from definitions, independently of the
//! library's own algorithms: divisibility brute force for powers, cap-box
//! grid search for socle elements, and the valuative criterion for integral
//! closure.

#![allow(dead_code)]

use asymprime_core::{
    BaseModule, ExperimentSpec, FiltrationSpec, IdealFamily, Monomial, MonomialIdeal, MultiIndex,
    RingContext, Subquotient,
};
use num::{BigInt, BigRational, One};
use rand::prelude::*;
use std::collections::HashMap;

pub fn ideal(v: usize, exps: &[&[u32]]) -> MonomialIdeal {
    MonomialIdeal::from_exps(v, exps)
}

/// Enumerate the box `0 ≤ p_i ≤ caps_i`.
pub fn box_points(caps: &[u32]) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for &c in caps {
        let mut next = Vec::with_capacity(out.len() * (c as usize + 1));
        for p in &out {
            for e in 0..=c {
                let mut q = p.clone();
                q.push(e);
                next.push(q);
            }
        }
        out = next;
    }
    out
}

fn caps_over(u: &MonomialIdeal, b: &MonomialIdeal) -> Vec<u32> {
    u.max_exponents()
        .iter()
        .zip(b.max_exponents())
        .map(|(&x, y)| x.max(y))
        .collect()
}

/// The cap-box grid search for a socle element: enumerate every monomial
/// supported on `support` within the per-variable caps and test the three
/// defining conditions directly.
pub fn socle_witness_box_oracle(
    support: &[usize],
    u_loc: &MonomialIdeal,
    b_loc: &MonomialIdeal,
) -> Option<Monomial> {
    let v = u_loc.vars();
    let caps_full = caps_over(u_loc, b_loc);
    let caps: Vec<u32> = support.iter().map(|&i| caps_full[i]).collect();
    for point in box_points(&caps) {
        let mut exps = vec![0u32; v];
        for (&i, &e) in support.iter().zip(&point) {
            exps[i] = e;
        }
        let m = Monomial::new(exps);
        if !u_loc.contains(&m) || b_loc.contains(&m) {
            continue;
        }
        if support
            .iter()
            .all(|&i| b_loc.contains(&m.mul(&Monomial::var(i, v))))
        {
            return Some(m);
        }
    }
    None
}

/// Membership `x^target ∈ I^m` by definitional recursion: peel off one
/// generator at a time. Exponential in principle, memoized in practice.
pub fn power_contains(ideal: &MonomialIdeal, m: u32, target: &Monomial) -> bool {
    fn go(
        ideal: &MonomialIdeal,
        m: u32,
        target: &[u32],
        memo: &mut HashMap<(Vec<u32>, u32), bool>,
    ) -> bool {
        if m == 0 {
            return true;
        }
        let total: u64 = target.iter().map(|&e| e as u64).sum();
        let min_deg = ideal.gens().iter().map(|g| g.degree()).min().unwrap_or(u64::MAX);
        if total < m as u64 * min_deg {
            return false;
        }
        if let Some(&hit) = memo.get(&(target.to_vec(), m)) {
            return hit;
        }
        let mut found = false;
        for g in ideal.gens() {
            if g.exponents().iter().zip(target).all(|(a, b)| a <= b) {
                let rest: Vec<u32> =
                    target.iter().zip(g.exponents()).map(|(b, a)| b - a).collect();
                if go(ideal, m - 1, &rest, memo) {
                    found = true;
                    break;
                }
            }
        }
        memo.insert((target.to_vec(), m), found);
        found
    }
    let mut memo = HashMap::new();
    go(ideal, m, target.exponents(), &mut memo)
}

/// Valuative cross-check of a Newton-polyhedron membership answer.
///
/// Membership with witness λ: clearing denominators with `k` must exhibit
/// `x^{k·a} ∈ I^{k·n}` (skipped when `k·n` is too large to recurse).
/// Non-membership: no `k ≤ 6` may exhibit it.
pub fn valuative_agrees(
    ideal: &MonomialIdeal,
    a: &Monomial,
    n: u32,
    witness: &Option<Vec<BigRational>>,
) -> bool {
    match witness {
        Some(lambda) => {
            let mut k = BigInt::one();
            for l in lambda {
                let d = l.denom();
                if (&k % d) != BigInt::from(0) {
                    k *= d;
                }
            }
            let k: u32 = match k.try_into() {
                Ok(k) => k,
                Err(_) => return true,
            };
            if k * n > 24 {
                return true;
            }
            power_contains(ideal, k * n, &a.pow(k))
        }
        None => (1..=6u32).all(|k| !power_contains(ideal, k * n, &a.pow(k))),
    }
}

pub fn ring_for(v: usize) -> RingContext {
    let names = ["x", "y", "z", "w"][..v].iter().map(|s| s.to_string()).collect();
    RingContext::new(names).unwrap()
}

/// A random monomial with exponents in `0..=max_exp`, not the identity.
pub fn random_monomial(rng: &mut impl Rng, v: usize, max_exp: u32) -> Monomial {
    loop {
        let exps: Vec<u32> = (0..v).map(|_| rng.gen_range(0..=max_exp)).collect();
        if exps.iter().any(|&e| e > 0) {
            return Monomial::new(exps);
        }
    }
}

/// A random nonzero proper monomial ideal.
pub fn random_proper_ideal(
    rng: &mut impl Rng,
    v: usize,
    max_gens: usize,
    max_exp: u32,
) -> MonomialIdeal {
    let count = rng.gen_range(1..=max_gens);
    let gens = (0..count).map(|_| random_monomial(rng, v, max_exp)).collect();
    MonomialIdeal::from_gens(v, gens).unwrap()
}

/// A random monomial ideal that may be zero (never the unit ideal).
pub fn random_ideal_or_zero(
    rng: &mut impl Rng,
    v: usize,
    max_gens: usize,
    max_exp: u32,
) -> MonomialIdeal {
    if rng.gen_bool(0.2) {
        MonomialIdeal::zero(v)
    } else {
        random_proper_ideal(rng, v, max_gens, max_exp)
    }
}

/// A random subquotient `U/B` with `B ⊆ U`, covering zero modules, cyclic
/// modules, and proper subquotients.
pub fn random_subquotient(rng: &mut impl Rng, v: usize, max_gens: usize, max_exp: u32) -> Subquotient {
    let b = random_ideal_or_zero(rng, v, max_gens, max_exp);
    match rng.gen_range(0..4) {
        0 => Subquotient::new(b.clone(), b).unwrap(),
        1 => Subquotient::cyclic(b),
        _ => {
            let extra = random_proper_ideal(rng, v, max_gens, max_exp);
            Subquotient::new(b.sum(&extra), b).unwrap()
        }
    }
}

/// A random valid experiment: the filtration variant is drawn first and the
/// graded family is derived so that axiom (ii) holds by construction.
pub fn random_experiment(rng: &mut impl Rng, grid: u32) -> ExperimentSpec {
    let v = rng.gen_range(1..=3usize);
    let d = rng.gen_range(1..=2usize);
    let ring = ring_for(v);
    let base = if rng.gen_bool(0.5) {
        BaseModule::free(v)
    } else {
        BaseModule::new(random_proper_ideal(rng, v, 2, 2)).unwrap()
    };

    let (family, filtration) = if d == 1 {
        let (j, filtration) = random_axis_pair(rng, v);
        (IdealFamily::new(vec![j]).unwrap(), filtration)
    } else {
        let (j1, f1) = random_axis_pair(rng, v);
        let (j2, f2) = random_axis_pair(rng, v);
        let family = IdealFamily::new(vec![j1, j2]).unwrap();
        let filtration = if rng.gen_bool(0.3) {
            FiltrationSpec::Trivial { vars: v }
        } else {
            FiltrationSpec::product(vec![f1, f2]).unwrap()
        };
        (family, filtration)
    };

    let bound = MultiIndex::new(vec![grid; d]);
    ExperimentSpec::new(ring, family, filtration, base, bound).unwrap()
}

/// A one-dimensional filtration together with a graded ideal `J` for which
/// axiom (ii) `J^n ⊆ I_n` holds by construction.
fn random_axis_pair(rng: &mut impl Rng, v: usize) -> (MonomialIdeal, FiltrationSpec) {
    match rng.gen_range(0..5) {
        0 => {
            let j = random_proper_ideal(rng, v, 3, 2);
            let f = FiltrationSpec::Powers(IdealFamily::new(vec![j.clone()]).unwrap());
            (j, f)
        }
        1 => (random_proper_ideal(rng, v, 3, 2), FiltrationSpec::Trivial { vars: v }),
        2 => {
            let j = random_proper_ideal(rng, v, 3, 2);
            let k = random_proper_ideal(rng, v, 2, 2);
            let f =
                FiltrationSpec::saturation(IdealFamily::new(vec![j.clone()]).unwrap(), k).unwrap();
            (j, f)
        }
        3 => {
            // closure of a superset of J keeps J^n inside the values
            let j = random_proper_ideal(rng, v, 3, 2);
            let base = if rng.gen_bool(0.5) {
                j.clone()
            } else {
                j.sum(&MonomialIdeal::principal(random_monomial(rng, v, 2)))
            };
            (j, FiltrationSpec::closure(base).unwrap())
        }
        _ => {
            // J = ∩ components, so J^n ⊆ (∩ I_i)^n ⊆ ∩ I_i^n
            let count = rng.gen_range(2..=3);
            let comps: Vec<MonomialIdeal> =
                (0..count).map(|_| random_proper_ideal(rng, v, 2, 2)).collect();
            let j = comps
                .iter()
                .cloned()
                .reduce(|a, b| a.intersect(&b))
                .expect("at least two components");
            let f = FiltrationSpec::intersection_powers(comps).unwrap();
            (j, f)
        }
    }
}
