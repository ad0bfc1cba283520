//! Monomial ideals in canonical minimal-generator form.
//!
//! A monomial ideal is stored as the antichain of its minimal generators,
//! sorted in graded-lex order. Canonical form is unique, so structural
//! equality is ideal equality. The zero ideal is the empty antichain and the
//! unit ideal is `{1}`; every operation is total over these encodings.

use crate::error::{Error, Result};
use crate::monomial::Monomial;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MonomialIdeal {
    vars: usize,
    gens: Vec<Monomial>,
}

/// Drop every monomial divisible by an earlier-sorted one.
///
/// After the graded-lex sort any proper divisor of `g` appears before `g`,
/// so a single pass against the kept prefix yields the minimal antichain.
fn canonicalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort();
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|h| h.divides(&g)) {
            out.push(g);
        }
    }
    out
}

impl MonomialIdeal {
    pub fn zero(vars: usize) -> Self {
        MonomialIdeal { vars, gens: vec![] }
    }

    pub fn unit(vars: usize) -> Self {
        MonomialIdeal { vars, gens: vec![Monomial::one(vars)] }
    }

    /// Principal ideal `(m)`.
    pub fn principal(m: Monomial) -> Self {
        let vars = m.vars();
        MonomialIdeal { vars, gens: vec![m] }
    }

    /// Canonicalize a generating set into the unique minimal antichain.
    pub fn from_gens(vars: usize, gens: Vec<Monomial>) -> Result<Self> {
        for g in &gens {
            if g.vars() != vars {
                return Err(Error::DimensionMismatch { expected: vars, got: g.vars() });
            }
        }
        Ok(MonomialIdeal { vars, gens: canonicalize(gens) })
    }

    /// Test helper: build from raw exponent vectors.
    pub fn from_exps(vars: usize, exps: &[&[u32]]) -> Self {
        let gens = exps.iter().map(|e| Monomial::new(e.to_vec())).collect();
        Self::from_gens(vars, gens).expect("exponent vectors of the wrong length")
    }

    fn wrap(vars: usize, gens: Vec<Monomial>) -> Self {
        MonomialIdeal { vars, gens: canonicalize(gens) }
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    pub fn is_proper(&self) -> bool {
        !self.is_unit()
    }

    /// Membership: some generator divides `m`.
    pub fn contains(&self, m: &Monomial) -> bool {
        assert_eq!(self.vars, m.vars());
        let deg = m.degree();
        // gens are sorted by degree; a divisor can't have larger degree
        self.gens
            .iter()
            .take_while(|g| g.degree() <= deg)
            .any(|g| g.divides(m))
    }

    pub fn sum(&self, other: &Self) -> Self {
        assert_eq!(self.vars, other.vars);
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Self::wrap(self.vars, gens)
    }

    pub fn product(&self, other: &Self) -> Self {
        assert_eq!(self.vars, other.vars);
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for g in &self.gens {
            for h in &other.gens {
                gens.push(g.mul(h));
            }
        }
        Self::wrap(self.vars, gens)
    }

    /// `I^n`, with `I^0` the unit ideal.
    pub fn pow(&self, n: u32) -> Self {
        let mut result = Self::unit(self.vars);
        let mut base = self.clone();
        let mut k = n;
        while k > 0 {
            if k & 1 == 1 {
                result = result.product(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.product(&base);
            }
        }
        result
    }

    /// Pairwise lcm of generators.
    pub fn intersect(&self, other: &Self) -> Self {
        assert_eq!(self.vars, other.vars);
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for g in &self.gens {
            for h in &other.gens {
                gens.push(g.lcm(h));
            }
        }
        Self::wrap(self.vars, gens)
    }

    /// `(I : m)` for a single monomial `m`.
    pub fn colon_monomial(&self, m: &Monomial) -> Self {
        assert_eq!(self.vars, m.vars());
        let gens = self.gens.iter().map(|g| g.quotient(m)).collect();
        Self::wrap(self.vars, gens)
    }

    /// `(I : J) = ∩_{g ∈ gens(J)} (I : g)`; colon by the zero ideal is the unit ideal.
    pub fn colon(&self, other: &Self) -> Self {
        assert_eq!(self.vars, other.vars);
        if other.is_zero() {
            return Self::unit(self.vars);
        }
        let mut parts: Vec<Self> = other.gens.iter().map(|g| self.colon_monomial(g)).collect();
        // fold the smallest antichains first to keep intermediates small
        parts.sort_by_key(|p| p.gens.len());
        let mut it = parts.into_iter();
        let first = it.next().expect("nonzero ideal has generators");
        it.fold(first, |acc, p| acc.intersect(&p))
    }

    /// `(I : J^∞)`: stable value of the ascending chain `(I : J^t)`.
    ///
    /// The chain is exact under the one-repeat stop: `(I : J^{t+1}) = ((I : J^t) : J)`,
    /// so a repeat makes every later term equal.
    pub fn saturate(&self, other: &Self) -> Result<Self> {
        assert_eq!(self.vars, other.vars);
        if other.is_zero() {
            return Err(Error::SaturateByZero);
        }
        let mut current = self.clone();
        loop {
            let next = current.colon(other);
            if next == current {
                return Ok(current);
            }
            current = next;
        }
    }

    /// Ideal generated by the supports of the generators.
    pub fn radical(&self) -> Self {
        let gens = self.gens.iter().map(|g| g.radical()).collect();
        Self::wrap(self.vars, gens)
    }

    /// Image under inverting every variable outside `keep`: exponents of the
    /// inverted variables are zeroed, then the antichain is re-minimalized.
    pub fn localize(&self, keep: &[usize]) -> Self {
        let mut mask = vec![false; self.vars];
        for &i in keep {
            assert!(i < self.vars, "localization index out of range");
            mask[i] = true;
        }
        let gens = self.gens.iter().map(|g| g.restrict(&mask)).collect();
        Self::wrap(self.vars, gens)
    }

    /// Containment test: every generator of `self` lies in `other`.
    pub fn is_subset_of(&self, other: &Self) -> bool {
        assert_eq!(self.vars, other.vars);
        self.gens.iter().all(|g| other.contains(g))
    }

    /// Per-variable maximum exponent over the generators.
    pub fn max_exponents(&self) -> Vec<u32> {
        let mut caps = vec![0u32; self.vars];
        for g in &self.gens {
            for (c, &e) in caps.iter_mut().zip(g.exponents()) {
                *c = (*c).max(e);
            }
        }
        caps
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(v: usize, exps: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_exps(v, exps)
    }

    #[test]
    fn canonicalize_prunes_divisible_generators() {
        // {x^2, x^3, y} -> {x^2, y}
        let i = ideal(2, &[&[2, 0], &[3, 0], &[0, 1]]);
        assert_eq!(i, ideal(2, &[&[2, 0], &[0, 1]]));
        // {xy, x, y} -> {x, y}
        let j = ideal(2, &[&[1, 1], &[1, 0], &[0, 1]]);
        assert_eq!(j, ideal(2, &[&[1, 0], &[0, 1]]));
        // {} -> zero ideal
        assert!(MonomialIdeal::from_gens(2, vec![]).unwrap().is_zero());
    }

    #[test]
    fn from_gens_rejects_dimension_mismatch() {
        let gens = vec![Monomial::new(vec![1, 0, 0])];
        assert!(matches!(
            MonomialIdeal::from_gens(2, gens),
            Err(Error::DimensionMismatch { expected: 2, got: 3 })
        ));
    }

    #[test]
    fn membership() {
        let i = ideal(2, &[&[2, 0], &[1, 1]]); // (x^2, xy)
        assert!(i.contains(&Monomial::new(vec![2, 1]))); // x^2 y
        assert!(!i.contains(&Monomial::new(vec![0, 3]))); // y^3
        assert!(!MonomialIdeal::zero(2).contains(&Monomial::one(2)));
    }

    #[test]
    fn sum_product_power() {
        let x = ideal(2, &[&[1, 0]]);
        let y = ideal(2, &[&[0, 1]]);
        assert_eq!(x.sum(&y), ideal(2, &[&[1, 0], &[0, 1]]));
        let xy = x.sum(&y);
        assert_eq!(xy.product(&xy), ideal(2, &[&[2, 0], &[1, 1], &[0, 2]]));
        // (x^2, xy)^2 = (x^4, x^3 y, x^2 y^2)
        let i = ideal(2, &[&[2, 0], &[1, 1]]);
        assert_eq!(i.pow(2), ideal(2, &[&[4, 0], &[3, 1], &[2, 2]]));
        assert!(i.pow(0).is_unit());
        assert!(MonomialIdeal::zero(2).pow(0).is_unit());
        assert!(MonomialIdeal::zero(2).pow(3).is_zero());
    }

    #[test]
    fn intersection() {
        // (x,y) ∩ (y,z) = (y, xz)
        let a = ideal(3, &[&[1, 0, 0], &[0, 1, 0]]);
        let b = ideal(3, &[&[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(a.intersect(&b), ideal(3, &[&[0, 1, 0], &[1, 0, 1]]));
        // I ∩ unit = I
        let i = ideal(2, &[&[2, 0], &[1, 1]]);
        assert_eq!(i.intersect(&MonomialIdeal::unit(2)), i);
        // (x^n) ∩ (y^n) = (x^n y^n)
        for n in 1..=4 {
            let xn = ideal(2, &[&[n, 0]]);
            let yn = ideal(2, &[&[0, n]]);
            assert_eq!(xn.intersect(&yn), ideal(2, &[&[n, n]]));
        }
    }

    #[test]
    fn colon() {
        // ((xy) : (x)) = (y)
        let xy = ideal(2, &[&[1, 1]]);
        let x = ideal(2, &[&[1, 0]]);
        assert_eq!(xy.colon(&x), ideal(2, &[&[0, 1]]));
        // ((x^2, xy) : (x)) = (x, y)
        let i = ideal(2, &[&[2, 0], &[1, 1]]);
        assert_eq!(i.colon(&x), ideal(2, &[&[1, 0], &[0, 1]]));
        // (I : unit) = I
        assert_eq!(i.colon(&MonomialIdeal::unit(2)), i);
        // (I : zero) = unit
        assert!(i.colon(&MonomialIdeal::zero(2)).is_unit());
        // (zero : J) = zero
        assert!(MonomialIdeal::zero(2).colon(&x).is_zero());
    }

    #[test]
    fn saturation() {
        // ((x^2 y) : (y)^∞) = (x^2)
        let i = ideal(2, &[&[2, 1]]);
        let y = ideal(2, &[&[0, 1]]);
        assert_eq!(i.saturate(&y).unwrap(), ideal(2, &[&[2, 0]]));
        // saturation by the unit ideal is the identity: (I : (1)^t) = I
        let j = ideal(2, &[&[1, 0]]);
        assert_eq!(j.saturate(&MonomialIdeal::unit(2)).unwrap(), j);
        // ((x^2, xy)^n : (x,y)^∞) = (x^n)
        let jj = ideal(2, &[&[2, 0], &[1, 1]]);
        let m = ideal(2, &[&[1, 0], &[0, 1]]);
        for n in 1..=6 {
            assert_eq!(jj.pow(n).saturate(&m).unwrap(), ideal(2, &[&[n, 0]]));
        }
        assert!(i.saturate(&MonomialIdeal::zero(2)).is_err());
    }

    #[test]
    fn radical() {
        assert_eq!(ideal(2, &[&[2, 0], &[0, 3]]).radical(), ideal(2, &[&[1, 0], &[0, 1]]));
        assert!(MonomialIdeal::zero(2).radical().is_zero());
        assert_eq!(ideal(2, &[&[2, 1]]).radical(), ideal(2, &[&[1, 1]]));
    }

    #[test]
    fn localization() {
        // localize((x^2 y, z), {x}) = unit (z -> 1)
        let i = ideal(3, &[&[2, 1, 0], &[0, 0, 1]]);
        assert!(i.localize(&[0]).is_unit());
        // localize(I, all) = I
        assert_eq!(i.localize(&[0, 1, 2]), i);
        // localize((xy, y^2), {y}) = (y)
        let j = ideal(2, &[&[1, 1], &[0, 2]]);
        assert_eq!(j.localize(&[1]), ideal(2, &[&[0, 1]]));
    }

    #[test]
    fn subset_and_equality() {
        let i = ideal(2, &[&[2, 0], &[1, 1]]);
        let x = ideal(2, &[&[1, 0]]);
        assert!(i.is_subset_of(&x));
        assert!(!x.is_subset_of(&i));
        let canon = MonomialIdeal::from_gens(
            2,
            vec![Monomial::new(vec![1, 0]), Monomial::new(vec![2, 0])],
        )
        .unwrap();
        assert_eq!(canon, x);
    }
}
