//! The ambient polynomial ring, reduced to its variable names.
//!
//! No coefficient arithmetic ever happens; the ring exists so that values can
//! be rendered and so that every object agrees on the variable count.

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

/// A polynomial ring `K[x_1, ..., x_v]` identified by its variable names.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RingContext {
    names: Vec<String>,
}

impl RingContext {
    pub fn new(names: Vec<String>) -> Result<Self> {
        if names.is_empty() {
            return Err(Error::BadRingNames);
        }
        for (i, n) in names.iter().enumerate() {
            if n.is_empty() || names[..i].contains(n) {
                return Err(Error::BadRingNames);
            }
        }
        Ok(RingContext { names })
    }

    pub fn vars(&self) -> usize {
        self.names.len()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// Render a monomial in `x^2*y` form; the identity renders as `1`.
    pub fn monomial_string(&self, m: &Monomial) -> String {
        assert_eq!(m.vars(), self.vars());
        let factors: Vec<String> = m
            .exponents()
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| {
                if e == 1 {
                    self.names[i].clone()
                } else {
                    format!("{}^{}", self.names[i], e)
                }
            })
            .collect();
        if factors.is_empty() {
            "1".to_string()
        } else {
            factors.join("*")
        }
    }

    /// Render an ideal as `(g1, g2, ...)`; zero renders as `(0)`.
    pub fn ideal_string(&self, ideal: &MonomialIdeal) -> String {
        if ideal.is_zero() {
            return "(0)".to_string();
        }
        let gens: Vec<String> = ideal.gens().iter().map(|g| self.monomial_string(g)).collect();
        format!("({})", gens.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_names() {
        assert!(RingContext::new(vec![]).is_err());
        assert!(RingContext::new(vec!["x".into(), "x".into()]).is_err());
        assert!(RingContext::new(vec!["x".into(), "".into()]).is_err());
    }

    #[test]
    fn renders_monomials() {
        let ring = RingContext::new(vec!["x".into(), "y".into()]).unwrap();
        assert_eq!(ring.monomial_string(&Monomial::new(vec![2, 1])), "x^2*y");
        assert_eq!(ring.monomial_string(&Monomial::one(2)), "1");
    }
}
