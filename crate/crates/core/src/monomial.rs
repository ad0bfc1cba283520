//! Monomials as exponent vectors over a fixed variable count.

use std::cmp::Ordering;

/// A monomial `x_1^{e_1} ... x_v^{e_v}`, stored as its exponent vector.
///
/// Exponent arithmetic is checked; overflow panics rather than wrapping.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    /// The identity monomial `1` in `v` variables.
    pub fn one(vars: usize) -> Self {
        Monomial { exps: vec![0; vars] }
    }

    /// The single variable `x_i`.
    pub fn var(i: usize, vars: usize) -> Self {
        assert!(i < vars, "variable index out of range");
        let mut exps = vec![0; vars];
        exps[i] = 1;
        Monomial { exps }
    }

    pub fn vars(&self) -> usize {
        self.exps.len()
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.vars(), other.vars());
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
            .collect();
        Monomial { exps }
    }

    pub fn pow(&self, k: u32) -> Self {
        let exps = self
            .exps
            .iter()
            .map(|a| a.checked_mul(k).expect("exponent overflow"))
            .collect();
        Monomial { exps }
    }

    /// True iff `self` divides `other` (componentwise `<=`).
    pub fn divides(&self, other: &Self) -> bool {
        assert_eq!(self.vars(), other.vars());
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// Componentwise `max(self - other, 0)`: the generator of `(self) : other`.
    pub fn quotient(&self, other: &Self) -> Self {
        assert_eq!(self.vars(), other.vars());
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a.saturating_sub(*b))
            .collect();
        Monomial { exps }
    }

    /// Componentwise maximum.
    pub fn lcm(&self, other: &Self) -> Self {
        assert_eq!(self.vars(), other.vars());
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| *a.max(b))
            .collect();
        Monomial { exps }
    }

    /// Componentwise minimum.
    pub fn gcd(&self, other: &Self) -> Self {
        assert_eq!(self.vars(), other.vars());
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| *a.min(b))
            .collect();
        Monomial { exps }
    }

    /// Indices of variables with positive exponent.
    pub fn support(&self) -> Vec<usize> {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
            .collect()
    }

    /// Exponents clamped to 0/1.
    pub fn radical(&self) -> Self {
        let exps = self.exps.iter().map(|&e| e.min(1)).collect();
        Monomial { exps }
    }

    /// Zero out the exponents of variables not flagged in `keep`.
    pub fn restrict(&self, keep: &[bool]) -> Self {
        assert_eq!(self.vars(), keep.len());
        let exps = self
            .exps
            .iter()
            .zip(keep)
            .map(|(&e, &k)| if k { e } else { 0 })
            .collect();
        Monomial { exps }
    }
}

// Canonical ordering: total degree first, then exponents lexicographically.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
