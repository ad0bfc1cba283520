//! Closed-form multi-filtrations `n ↦ I_n` and the axiom validator.
//!
//! A family `J_1, ..., J_d` of nonzero proper ideals fixes the graded side:
//! `J^n = J_1^{n_1} ⋯ J_d^{n_d}`. A filtration rule produces `I_n` in closed
//! form. All values are computed relative to a base ideal `N` (the module is
//! `C = A/N`); rules that quotient, like saturation, take their ideal
//! quotients in `C` by lifting to `A`, so that with `N = 0` they reduce to
//! the plain formulas.

use crate::closure;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use std::collections::HashMap;
use std::fmt;
use std::sync::Mutex;

/// A point of `N_0^d` with the componentwise partial order.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct MultiIndex(Vec<u32>);

impl MultiIndex {
    pub fn new(entries: Vec<u32>) -> Self {
        assert!(!entries.is_empty(), "multi-index needs at least one entry");
        MultiIndex(entries)
    }

    pub fn zero(dims: usize) -> Self {
        Self::new(vec![0; dims])
    }

    pub fn dims(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn entry(&self, i: usize) -> u32 {
        self.0[i]
    }

    /// Componentwise order; distinct from the derived lexicographic `Ord`.
    pub fn leq(&self, other: &Self) -> bool {
        assert_eq!(self.dims(), other.dims());
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.dims(), other.dims());
        MultiIndex(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `n + t·(1,...,1)`.
    pub fn shift_diag(&self, t: u32) -> Self {
        MultiIndex(self.0.iter().map(|a| a + t).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&a| a == 0)
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|a| a.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// All points `0 ≤ p ≤ bound`, in lexicographic order.
pub fn grid_points(bound: &MultiIndex) -> Vec<MultiIndex> {
    let d = bound.dims();
    let mut out = Vec::new();
    let mut point = vec![0u32; d];
    'outer: loop {
        out.push(MultiIndex::new(point.clone()));
        for i in (0..d).rev() {
            if point[i] < bound.entry(i) {
                point[i] += 1;
                continue 'outer;
            }
            point[i] = 0;
        }
        return out;
    }
}

/// The fixed ideals `J_1, ..., J_d`; each must be nonzero and proper.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IdealFamily {
    ideals: Vec<MonomialIdeal>,
}

impl IdealFamily {
    pub fn new(ideals: Vec<MonomialIdeal>) -> Result<Self> {
        if ideals.is_empty() {
            return Err(Error::EmptyFiltrationData { kind: "ideal family" });
        }
        let vars = ideals[0].vars();
        for (index, ideal) in ideals.iter().enumerate() {
            if ideal.vars() != vars {
                return Err(Error::DimensionMismatch { expected: vars, got: ideal.vars() });
            }
            if ideal.is_zero() || ideal.is_unit() {
                return Err(Error::BadFamilyMember { index });
            }
        }
        Ok(IdealFamily { ideals })
    }

    pub fn dims(&self) -> usize {
        self.ideals.len()
    }

    pub fn vars(&self) -> usize {
        self.ideals[0].vars()
    }

    pub fn ideals(&self) -> &[MonomialIdeal] {
        &self.ideals
    }

    /// `J^n = J_1^{n_1} ⋯ J_d^{n_d}`.
    pub fn power(&self, n: &MultiIndex) -> MonomialIdeal {
        assert_eq!(n.dims(), self.dims());
        let mut out = MonomialIdeal::unit(self.vars());
        for (ideal, &e) in self.ideals.iter().zip(n.entries()) {
            out = out.product(&ideal.pow(e));
        }
        out
    }

    /// `J_1 ⋯ J_d`, the degree-(1,...,1) piece that generates `R_+`.
    pub fn product_ideal(&self) -> MonomialIdeal {
        self.power(&MultiIndex::new(vec![1; self.dims()]))
    }
}

/// A closed-form rule `n ↦ I_n`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum FiltrationSpec {
    /// `I_n = J'^n` for a family `J'` (often the graded family itself).
    Powers(IdealFamily),
    /// `I_n = A` for all `n`.
    Trivial { vars: usize },
    /// `I_n = (J'^n C :_C K^∞)`, lifted to `A` as `(J'^n + N) : K^∞`.
    Saturation { family: IdealFamily, by: MonomialIdeal },
    /// `I_n` = integral closure of `I^n`; one-dimensional.
    Closure { base: MonomialIdeal },
    /// `I_n = ∩_i I_i^n`; one-dimensional.
    IntersectionPowers { components: Vec<MonomialIdeal> },
    /// `I_n = I_{1,n_1} ⋯ I_{d,n_d}` from one-dimensional axes.
    Product { axes: Vec<FiltrationSpec> },
    /// `I_n = J'^{n + offset}`: deliberately violates axiom (i) for
    /// `offset > 0`; a negative control for the validator.
    OffsetPowers { family: IdealFamily, offset: u32 },
}

impl FiltrationSpec {
    pub fn saturation(family: IdealFamily, by: MonomialIdeal) -> Result<Self> {
        if by.is_zero() {
            return Err(Error::SaturateByZero);
        }
        Ok(FiltrationSpec::Saturation { family, by })
    }

    pub fn closure(base: MonomialIdeal) -> Result<Self> {
        if base.is_zero() {
            return Err(Error::ZeroIdealClosure);
        }
        Ok(FiltrationSpec::Closure { base })
    }

    pub fn intersection_powers(components: Vec<MonomialIdeal>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::EmptyFiltrationData { kind: "intersection" });
        }
        if components.iter().any(|c| c.is_zero()) {
            return Err(Error::EmptyFiltrationData { kind: "nonzero intersection" });
        }
        Ok(FiltrationSpec::IntersectionPowers { components })
    }

    pub fn product(axes: Vec<FiltrationSpec>) -> Result<Self> {
        if axes.is_empty() {
            return Err(Error::EmptyFiltrationData { kind: "product axes" });
        }
        for axis in &axes {
            if axis.dims().map_or(false, |d| d != 1) {
                return Err(Error::ProductAxisDimension);
            }
        }
        Ok(FiltrationSpec::Product { axes })
    }

    /// Index dimension; `None` for the trivial rule, which fits any `d`.
    pub fn dims(&self) -> Option<usize> {
        match self {
            FiltrationSpec::Powers(f) => Some(f.dims()),
            FiltrationSpec::Trivial { .. } => None,
            FiltrationSpec::Saturation { family, .. } => Some(family.dims()),
            FiltrationSpec::Closure { .. } => Some(1),
            FiltrationSpec::IntersectionPowers { .. } => Some(1),
            FiltrationSpec::Product { axes } => Some(axes.len()),
            FiltrationSpec::OffsetPowers { family, .. } => Some(family.dims()),
        }
    }

    pub fn vars(&self) -> usize {
        match self {
            FiltrationSpec::Powers(f) => f.vars(),
            FiltrationSpec::Trivial { vars } => *vars,
            FiltrationSpec::Saturation { family, .. } => family.vars(),
            FiltrationSpec::Closure { base } => base.vars(),
            FiltrationSpec::IntersectionPowers { components } => components[0].vars(),
            FiltrationSpec::Product { axes } => axes[0].vars(),
            FiltrationSpec::OffsetPowers { family, .. } => family.vars(),
        }
    }

    /// Evaluate `I_n` relative to the base ideal `N` (`base`).
    pub fn eval(&self, n: &MultiIndex, base: &MonomialIdeal) -> Result<MonomialIdeal> {
        if let Some(d) = self.dims() {
            if n.dims() != d {
                return Err(Error::IndexDimension { expected: d, got: n.dims() });
            }
        }
        match self {
            FiltrationSpec::Powers(f) => Ok(f.power(n)),
            FiltrationSpec::Trivial { vars } => Ok(MonomialIdeal::unit(*vars)),
            FiltrationSpec::Saturation { family, by } => {
                family.power(n).sum(base).saturate(by)
            }
            FiltrationSpec::Closure { base: ideal } => {
                let k = n.entry(0);
                if k == 0 {
                    Ok(MonomialIdeal::unit(ideal.vars()))
                } else {
                    closure::closure_of_power(ideal, k)
                }
            }
            FiltrationSpec::IntersectionPowers { components } => {
                let k = n.entry(0);
                let mut parts: Vec<MonomialIdeal> =
                    components.iter().map(|c| c.pow(k)).collect();
                parts.sort_by_key(|p| p.gens().len());
                let mut it = parts.into_iter();
                let first = it.next().expect("components are nonempty");
                Ok(it.fold(first, |acc, p| acc.intersect(&p)))
            }
            FiltrationSpec::Product { axes } => {
                let mut out = MonomialIdeal::unit(self.vars());
                for (axis, &e) in axes.iter().zip(n.entries()) {
                    let value = axis.eval(&MultiIndex::new(vec![e]), base)?;
                    out = out.product(&value);
                }
                Ok(out)
            }
            FiltrationSpec::OffsetPowers { family, offset } => {
                let shifted = n.shift_diag(*offset);
                Ok(family.power(&shifted))
            }
        }
    }
}

/// Memoized evaluation of a filtration rule against a fixed base ideal.
///
/// Grid scans revisit indices; the cache is a mutex-guarded map so that
/// parallel scanners share it. A racing miss recomputes the same pure value.
pub struct EvalCache {
    spec: FiltrationSpec,
    base: MonomialIdeal,
    memo: Mutex<HashMap<MultiIndex, MonomialIdeal>>,
}

impl EvalCache {
    pub fn new(spec: FiltrationSpec, base: MonomialIdeal) -> Self {
        EvalCache { spec, base, memo: Mutex::new(HashMap::new()) }
    }

    pub fn spec(&self) -> &FiltrationSpec {
        &self.spec
    }

    pub fn eval(&self, n: &MultiIndex) -> Result<MonomialIdeal> {
        if let Some(hit) = self.memo.lock().expect("cache poisoned").get(n) {
            return Ok(hit.clone());
        }
        let value = self.spec.eval(n, &self.base)?;
        self.memo
            .lock()
            .expect("cache poisoned")
            .insert(n.clone(), value.clone());
        Ok(value)
    }
}

/// Which of the four multi-filtration axioms failed.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Axiom {
    UnitAtZero,
    ContainsPowers,
    Decreasing,
    Multiplicative,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let label = match self {
            Axiom::UnitAtZero => "(i) I_0 = A",
            Axiom::ContainsPowers => "(ii) J^n ⊆ I_n",
            Axiom::Decreasing => "(iii) m ≤ n ⇒ I_n ⊆ I_m",
            Axiom::Multiplicative => "(iv) J^n·I_h ⊆ I_{n+h}",
        };
        write!(f, "{label}")
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AxiomViolation {
    pub axiom: Axiom,
    /// The indices witnessing the first failure found for this axiom.
    pub at: Vec<MultiIndex>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ValidationReport {
    pub grid: MultiIndex,
    pub violations: Vec<AxiomViolation>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Check the four axioms on the finite grid `0 ≤ n ≤ bound`. A pass is
/// evidence on the grid, never a proof. Violations are data, not errors; the
/// first witnessing tuple per axiom is recorded.
pub fn validate_multifiltration(
    cache: &EvalCache,
    family: &IdealFamily,
    bound: &MultiIndex,
) -> Result<ValidationReport> {
    let points = grid_points(bound);
    let mut violations = Vec::new();

    let zero = MultiIndex::zero(bound.dims());
    if !cache.eval(&zero)?.is_unit() {
        violations.push(AxiomViolation { axiom: Axiom::UnitAtZero, at: vec![zero.clone()] });
    }

    'axiom2: for n in &points {
        if !family.power(n).is_subset_of(&cache.eval(n)?) {
            violations.push(AxiomViolation { axiom: Axiom::ContainsPowers, at: vec![n.clone()] });
            break 'axiom2;
        }
    }

    'axiom3: for m in &points {
        for n in &points {
            if m.leq(n) && !cache.eval(n)?.is_subset_of(&cache.eval(m)?) {
                violations.push(AxiomViolation {
                    axiom: Axiom::Decreasing,
                    at: vec![m.clone(), n.clone()],
                });
                break 'axiom3;
            }
        }
    }

    'axiom4: for n in &points {
        for h in &points {
            let lhs = family.power(n).product(&cache.eval(h)?);
            if !lhs.is_subset_of(&cache.eval(&n.add(h))?) {
                violations.push(AxiomViolation {
                    axiom: Axiom::Multiplicative,
                    at: vec![n.clone(), h.clone()],
                });
                break 'axiom4;
            }
        }
    }

    Ok(ValidationReport { grid: bound.clone(), violations })
}
