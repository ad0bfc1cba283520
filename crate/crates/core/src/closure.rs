//! Integral closures of powers of monomial ideals via Newton polyhedra.
//!
//! For a nonzero monomial ideal `I` with generator exponents `G`, the
//! integral closure of `I^n` consists of the monomials `x^a` with `a` in
//! `n·conv(G) + R_{≥0}^v`. Membership is exact rational feasibility:
//! λ ≥ 0, Σλ_g = n, Σλ_g·g ≤ a.

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::lp;
use crate::monomial::Monomial;
use crate::par;
use num::BigRational;

/// Exact membership of `x^a` in `n·NP(I) + orthant`.
pub fn np_member(a: &Monomial, ideal: &MonomialIdeal, n: u32) -> Result<bool> {
    np_member_witness(a, ideal, n).map(|w| w.is_some())
}

/// Like [`np_member`], but returns the rational coefficients on the
/// generators when the point is a member. The witness certifies membership:
/// clearing denominators exhibits `x^{k·a} ∈ I^{k·n}`.
pub fn np_member_witness(
    a: &Monomial,
    ideal: &MonomialIdeal,
    n: u32,
) -> Result<Option<Vec<BigRational>>> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdealClosure);
    }
    assert!(n >= 1, "dilation factor must be positive");
    assert_eq!(a.vars(), ideal.vars());

    // cheap filters before the LP
    let min_deg = ideal.gens().iter().map(|g| g.degree()).min().expect("nonzero ideal");
    if a.degree() < (n as u64) * min_deg {
        return Ok(None);
    }
    for (j, g) in ideal.gens().iter().enumerate() {
        if g.pow(n).divides(a) {
            let mut lambda = vec![BigRational::from_integer(0.into()); ideal.gens().len()];
            lambda[j] = BigRational::from_integer(n.into());
            return Ok(Some(lambda));
        }
    }

    let gens: Vec<&[u32]> = ideal.gens().iter().map(|g| g.exponents()).collect();
    Ok(lp::feasible_combination(&gens, a.exponents(), n))
}

/// Minimal generators of the integral closure of `I^n`.
///
/// Soundness of the search box `0 ≤ a_i ≤ n·max_g g_i`: if `a` exceeds the
/// bound in coordinate `i`, then `a_i - 1 ≥ n·max_g g_i ≥ Σλ_g g_i` for any
/// witness λ, so `a - e_i` is still a member and `a` is not minimal. Hence
/// every minimal member lies in the box.
pub fn closure_of_power(ideal: &MonomialIdeal, n: u32) -> Result<MonomialIdeal> {
    closure_impl(ideal, n, true)
}

/// Sequential variant of [`closure_of_power`]; same result, no rayon.
pub fn closure_of_power_seq(ideal: &MonomialIdeal, n: u32) -> Result<MonomialIdeal> {
    closure_impl(ideal, n, false)
}

fn closure_impl(ideal: &MonomialIdeal, n: u32, parallel: bool) -> Result<MonomialIdeal> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdealClosure);
    }
    assert!(n >= 1, "dilation factor must be positive");
    let v = ideal.vars();
    let caps: Vec<u32> = ideal
        .max_exponents()
        .iter()
        .map(|&c| c.checked_mul(n).expect("exponent overflow"))
        .collect();

    // enumerate the box grouped by total degree; within a degree no point
    // divides another, so earlier-accepted generators prune whole layers
    let mut by_degree: Vec<Vec<Monomial>> = Vec::new();
    let mut point = vec![0u32; v];
    loop {
        let m = Monomial::new(point.clone());
        let d = m.degree() as usize;
        if by_degree.len() <= d {
            by_degree.resize_with(d + 1, Vec::new);
        }
        by_degree[d].push(m);
        // odometer over the box
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

    let mut accepted: Vec<Monomial> = Vec::new();
    for layer in by_degree {
        let candidates: Vec<Monomial> = layer
            .into_iter()
            .filter(|m| !accepted.iter().any(|g| g.divides(m)))
            .collect();
        let hits = par::map(candidates, parallel, |m| {
            let member = np_member(&m, ideal, n).expect("ideal is nonzero");
            (m, member)
        });
        for (m, member) in hits {
            if member {
                accepted.push(m);
            }
        }
    }
    MonomialIdeal::from_gens(v, accepted)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(v: usize, exps: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_exps(v, exps)
    }

    #[test]
    fn membership_examples() {
        let i = ideal(2, &[&[2, 0], &[0, 2]]);
        assert!(np_member(&Monomial::new(vec![2, 2]), &i, 2).unwrap());
        let x = ideal(1, &[&[1]]);
        assert!(np_member(&Monomial::new(vec![1]), &x, 1).unwrap());
        // xyz lies in the closure of (xy, yz, xz) but not in 2·NP
        let sq = ideal(3, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]);
        assert!(np_member(&Monomial::new(vec![1, 1, 1]), &sq, 1).unwrap());
        assert!(!np_member(&Monomial::new(vec![1, 1, 1]), &sq, 2).unwrap());
    }

    #[test]
    fn zero_ideal_is_rejected() {
        let z = MonomialIdeal::zero(2);
        assert!(matches!(
            np_member(&Monomial::one(2), &z, 1),
            Err(Error::ZeroIdealClosure)
        ));
        assert!(closure_of_power(&z, 1).is_err());
    }

    #[test]
    fn closure_examples() {
        let i = ideal(2, &[&[2, 0], &[0, 2]]);
        assert_eq!(
            closure_of_power(&i, 1).unwrap(),
            ideal(2, &[&[2, 0], &[1, 1], &[0, 2]])
        );
        // degree-4 slab for n = 2
        assert_eq!(
            closure_of_power(&i, 2).unwrap(),
            ideal(2, &[&[4, 0], &[3, 1], &[2, 2], &[1, 3], &[0, 4]])
        );
        // principal ideals are integrally closed
        let x = ideal(1, &[&[1]]);
        assert_eq!(closure_of_power(&x, 3).unwrap(), ideal(1, &[&[3]]));
    }

    #[test]
    fn seq_matches_parallel() {
        let i = ideal(3, &[&[2, 0, 1], &[0, 2, 0], &[1, 1, 1]]);
        for n in 1..=3 {
            assert_eq!(
                closure_of_power(&i, n).unwrap(),
                closure_of_power_seq(&i, n).unwrap()
            );
        }
    }
}
