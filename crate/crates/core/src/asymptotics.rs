//! Grid scans of `Ass(I_nC/J^nC)`, the obstruction sequences `L_n` and
//! `L'_n`, and the empirical stability checkers.
//!
//! The graded algebra `⊕ J^n` is never materialized: the module `C = A/N`
//! lifts everything to ideals of `A`, so the degree-`n` component of
//! `I_nC/J^nC` is the subquotient `(I_n + N)/(J^n + N)`, and the action of
//! the degree-(1,...,1) piece is multiplication by `J_1⋯J_d`.

use crate::ass::{assoc_primes, assoc_primes_seq, Subquotient, MAX_ASS_VARS};
use crate::error::{Error, Result};
use crate::filtration::{
    grid_points, validate_multifiltration, EvalCache, FiltrationSpec, IdealFamily, MultiIndex,
    ValidationReport,
};
use crate::ideal::MonomialIdeal;
use crate::par;
use crate::prime::{AssSet, MonomialPrime};
use crate::ring::RingContext;
use crate::stability::{analyze_sequence, AssSequence, StabilizationReport};
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Mutex;

/// The base module `C = A/N`; `N` must be proper or zero.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BaseModule {
    ideal: MonomialIdeal,
}

impl BaseModule {
    pub fn new(ideal: MonomialIdeal) -> Result<Self> {
        if ideal.is_unit() {
            return Err(Error::BaseModuleNotProper);
        }
        Ok(BaseModule { ideal })
    }

    /// `C = A`.
    pub fn free(vars: usize) -> Self {
        BaseModule { ideal: MonomialIdeal::zero(vars) }
    }

    pub fn ideal(&self) -> &MonomialIdeal {
        &self.ideal
    }
}

pub const DEFAULT_R_WINDOW: u32 = 2;
pub const DEFAULT_R_MAX: u32 = 10;

/// Everything a grid scan needs: ring, graded family, filtration rule, base
/// module, grid bound, and the stopping policy for the `L_n` chains.
#[derive(Clone, Debug)]
pub struct ExperimentSpec {
    pub ring: RingContext,
    pub family: IdealFamily,
    pub filtration: FiltrationSpec,
    pub base: BaseModule,
    pub grid: MultiIndex,
    pub r_window: u32,
    pub r_max: u32,
}

impl ExperimentSpec {
    pub fn new(
        ring: RingContext,
        family: IdealFamily,
        filtration: FiltrationSpec,
        base: BaseModule,
        grid: MultiIndex,
    ) -> Result<Self> {
        let vars = ring.vars();
        if vars > MAX_ASS_VARS {
            return Err(Error::TooManyVariables { got: vars, max: MAX_ASS_VARS });
        }
        for other in [family.vars(), filtration.vars(), base.ideal().vars()] {
            if other != vars {
                return Err(Error::DimensionMismatch { expected: vars, got: other });
            }
        }
        if grid.dims() != family.dims() {
            return Err(Error::IndexDimension { expected: family.dims(), got: grid.dims() });
        }
        if let Some(d) = filtration.dims() {
            if d != family.dims() {
                return Err(Error::FiltrationDimension { expected: family.dims(), got: d });
            }
        }
        if grid.entries().iter().any(|&g| g < 1) {
            return Err(Error::GridBoundTooSmall);
        }
        Ok(ExperimentSpec {
            ring,
            family,
            filtration,
            base,
            grid,
            r_window: DEFAULT_R_WINDOW,
            r_max: DEFAULT_R_MAX,
        })
    }

    pub fn with_chain_limits(mut self, r_window: u32, r_max: u32) -> Result<Self> {
        if r_window < 1 {
            return Err(Error::BadChainWindow);
        }
        self.r_window = r_window;
        self.r_max = r_max;
        Ok(self)
    }
}

/// `grade(I, A/N) > 0`: `I` avoids every associated prime of `A/N`, i.e.
/// contains a nonzerodivisor on the base module.
pub fn grade_positive(ideal: &MonomialIdeal, base: &MonomialIdeal) -> bool {
    let quotient = Subquotient::cyclic(base.clone());
    assoc_primes(&quotient).iter().all(|p| !p.contains_ideal(ideal))
}

/// Outcome of the ideal-cancellation scan.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum CancellationOutcome {
    /// Some `J_i` has grade zero on `C`; the lemma does not apply.
    Inapplicable,
    /// No grid index works.
    NotFound,
    Found { k: MultiIndex },
}

/// An `L_n` value together with how its colon chain terminated.
#[derive(Clone, Debug)]
pub struct LModule {
    pub module: Subquotient,
    /// False when the chain hit `r_max` without the window of equalities.
    pub stabilized: bool,
    /// Number of chain steps actually computed.
    pub steps: u32,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ImplicationViolation {
    /// `Ass(L'_n)` stabilized on the grid but `Ass(L_n)` did not.
    LPrimeButNotL,
    /// `Ass(L_n)` stabilized on the grid but `Ass(M_n)` did not.
    LButNotM,
}

impl fmt::Display for ImplicationViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ImplicationViolation::LPrimeButNotL => write!(f, "L' stable but L not stable"),
            ImplicationViolation::LButNotM => write!(f, "L stable but M not stable"),
        }
    }
}

/// A shifted-containment scan: for each prime in a source set at index `n`,
/// look for it in the target sequence at some `n + s` inside the grid.
/// Absence is inconclusive — the shift may live beyond the grid.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct ShiftCheck {
    pub verified: usize,
    pub inconclusive: Vec<(MultiIndex, MonomialPrime)>,
}

#[derive(Clone, Debug)]
pub struct ChainReport {
    pub lprime: StabilizationReport,
    pub l: StabilizationReport,
    pub m: StabilizationReport,
    /// `Ass(M_n/L_n)` per index.
    pub quotient_sequence: AssSequence,
    pub implication_violations: Vec<ImplicationViolation>,
    /// `Ass(L_n) ⊆ ∪_s Ass(L'_{n+s})`, shifts within the grid.
    pub l_in_lprime_shifts: ShiftCheck,
    /// `Ass(M_n/L_n) ⊆ ∪_s Ass(M_{n+s})`, shifts within the grid.
    pub quotient_in_m_shifts: ShiftCheck,
    /// Indices whose `L_n` chain hit `r_max` without stabilizing.
    pub unstabilized_chains: Vec<MultiIndex>,
    /// Indices where the chain value was compared against the torsion
    /// closed form `J^n + (I_n ∩ T) + N`.
    pub two_path_checked: usize,
    pub two_path_mismatches: Vec<MultiIndex>,
}

/// A spec plus its memoized caches; the unit of execution for all scans.
pub struct Experiment {
    spec: ExperimentSpec,
    values: EvalCache,
    j_powers: Mutex<HashMap<MultiIndex, MonomialIdeal>>,
    j_product: MonomialIdeal,
    torsion: MonomialIdeal,
}

impl Experiment {
    pub fn new(spec: ExperimentSpec) -> Self {
        let values = EvalCache::new(spec.filtration.clone(), spec.base.ideal().clone());
        let j_product = spec.family.product_ideal();
        let torsion = spec
            .base
            .ideal()
            .saturate(&j_product)
            .expect("family members are nonzero");
        Experiment { spec, values, j_powers: Mutex::new(HashMap::new()), j_product, torsion }
    }

    pub fn spec(&self) -> &ExperimentSpec {
        &self.spec
    }


    /// `J^n`, memoized.
    pub fn j_power(&self, n: &MultiIndex) -> MonomialIdeal {
        if let Some(hit) = self.j_powers.lock().expect("cache poisoned").get(n) {
            return hit.clone();
        }
        let value = self.spec.family.power(n);
        self.j_powers
            .lock()
            .expect("cache poisoned")
            .insert(n.clone(), value.clone());
        value
    }

    /// `I_n`, memoized.
    pub fn filtration_value(&self, n: &MultiIndex) -> Result<MonomialIdeal> {
        self.values.eval(n)
    }

    /// Run the axiom validator over this experiment's grid.
    pub fn validate(&self) -> Result<ValidationReport> {
        validate_multifiltration(&self.values, &self.spec.family, &self.spec.grid)
    }

    /// The degree-`n` component `(I_n + N)/(J^n + N)`.
    pub fn component(&self, n: &MultiIndex) -> Result<Subquotient> {
        let base = self.spec.base.ideal();
        let numerator = self.filtration_value(n)?.sum(base);
        let denominator = self.j_power(n).sum(base);
        Subquotient::new(numerator, denominator)
            .map_err(|_| Error::AxiomTwoViolated { at: n.clone() })
    }

    /// `Ass` of every grid component, with stabilization detection.
    pub fn ass_sequence(&self) -> Result<StabilizationReport> {
        self.ass_sequence_impl(true)
    }

    /// Sequential variant of [`Experiment::ass_sequence`].
    pub fn ass_sequence_seq(&self) -> Result<StabilizationReport> {
        self.ass_sequence_impl(false)
    }

    fn ass_sequence_impl(&self, parallel: bool) -> Result<StabilizationReport> {
        let points = grid_points(&self.spec.grid);
        let rows = par::map(points, parallel, |n| {
            let component = self.component(&n)?;
            let ass = if parallel { assoc_primes(&component) } else { assoc_primes_seq(&component) };
            Ok((n, ass))
        });
        let mut sequence = AssSequence::new();
        for row in rows {
            let (n, ass) = row?;
            sequence.insert(n, ass);
        }
        Ok(analyze_sequence(sequence))
    }

    /// The ideal `T'` with `H^0_J(C) = T'/N`, i.e. `(N : (J_1⋯J_d)^∞)`.
    pub fn torsion_ideal(&self) -> &MonomialIdeal {
        &self.torsion
    }

    /// `((J^{n+t·1} + N) : (J_1⋯J_d)^t) ∩ (I_n + N)`.
    fn chain_value(&self, n: &MultiIndex, t: u32) -> Result<MonomialIdeal> {
        let base = self.spec.base.ideal();
        let mut value = self.j_power(&n.shift_diag(t)).sum(base);
        for _ in 0..t {
            value = value.colon(&self.j_product);
        }
        Ok(value.intersect(&self.filtration_value(n)?.sum(base)))
    }

    /// The degree-`n` part of `L = H^0_{R_+}(M)`, taken from the ascending
    /// colon chain once `r_window` consecutive equalities appear, or at
    /// `r_max` with `stabilized = false`.
    pub fn l_module(&self, n: &MultiIndex) -> Result<LModule> {
        let base = self.spec.base.ideal();
        let denominator = self.j_power(n).sum(base);
        let mut run = 0u32;
        let mut previous: Option<MonomialIdeal> = None;
        let mut t = 0u32;
        loop {
            let value = self.chain_value(n, t)?;
            if previous.as_ref() == Some(&value) {
                run += 1;
            } else {
                run = 0;
            }
            let done = run >= self.spec.r_window;
            if done || t == self.spec.r_max {
                let module = Subquotient::new(value, denominator)
                    .map_err(|_| Error::AxiomTwoViolated { at: n.clone() })?;
                return Ok(LModule { module, stabilized: done, steps: t });
            }
            previous = Some(value);
            t += 1;
        }
    }

    /// The degree-`n` part of `L' = (0 :_M R_+)`: one colon by `J_1⋯J_d`.
    pub fn lprime_module(&self, n: &MultiIndex) -> Result<Subquotient> {
        let base = self.spec.base.ideal();
        let numerator = self
            .j_power(&n.shift_diag(1))
            .sum(base)
            .colon(&self.j_product)
            .intersect(&self.filtration_value(n)?.sum(base));
        let denominator = self.j_power(n).sum(base);
        Subquotient::new(numerator, denominator)
            .map_err(|_| Error::AxiomTwoViolated { at: n.clone() })
    }

    /// Per-axis `grade(J_i, C) > 0` flags.
    pub fn grade_positive_axes(&self) -> Vec<bool> {
        let base = self.spec.base.ideal();
        self.spec
            .family
            .ideals()
            .iter()
            .map(|j| grade_positive(j, base))
            .collect()
    }

    /// Least grid `k` with `((J^{n+r} + N) : J^r) = J^n + N` for all grid
    /// `n ≥ k` and all grid `r`; requires positive grade on every axis.
    pub fn cancellation_index(&self) -> CancellationOutcome {
        if self.grade_positive_axes().iter().any(|&g| !g) {
            return CancellationOutcome::Inapplicable;
        }
        match self.least_index_where(|n| self.cancellation_holds_at(n, self.spec.base.ideal())) {
            Some(k) => CancellationOutcome::Found { k },
            None => CancellationOutcome::NotFound,
        }
    }

    fn cancellation_holds_at(&self, n: &MultiIndex, modulus: &MonomialIdeal) -> bool {
        let expected = self.j_power(n).sum(modulus);
        for r in grid_points(&self.spec.grid) {
            let mut value = self.j_power(&n.add(&r)).sum(modulus);
            for (axis, &e) in self.spec.family.ideals().iter().zip(r.entries()) {
                for _ in 0..e {
                    value = value.colon(axis);
                }
            }
            if value != expected {
                return false;
            }
        }
        true
    }

    /// Least grid `k` with `T' ∩ (J^n + N) ⊆ N` for all grid `n ≥ k`.
    pub fn artin_rees_index(&self) -> Option<MultiIndex> {
        let base = self.spec.base.ideal();
        self.least_index_where(|n| {
            self.torsion.intersect(&self.j_power(n).sum(base)).is_subset_of(base)
        })
    }

    /// Least grid `k` such that `ok(n)` holds for every grid `n ≥ k`.
    ///
    /// The set of such `k` is upward closed, so its lexicographically first
    /// element is also componentwise-minimal.
    fn least_index_where<F>(&self, ok: F) -> Option<MultiIndex>
    where
        F: Fn(&MultiIndex) -> bool + Sync + Send,
    {
        let points = grid_points(&self.spec.grid);
        let flags: BTreeMap<MultiIndex, bool> = par::map(points.clone(), true, |n| {
            let f = ok(&n);
            (n, f)
        })
        .into_iter()
        .collect();
        points
            .iter()
            .find(|k| points.iter().filter(|n| k.leq(n)).all(|n| flags[n]))
            .cloned()
    }

    /// Diagonal cancellation index modulo torsion: least grid `k` with
    /// `((J^{n+t·1} + T') : (J_1⋯J_d)^t) = J^n + T'` for all grid `n ≥ k` and
    /// `t ≤ r_max`. Always applicable because `(T' : J_i) = T'`.
    fn torsion_cancellation_index(&self) -> Option<MultiIndex> {
        self.least_index_where(|n| {
            let expected = self.j_power(n).sum(&self.torsion);
            for t in 1..=self.spec.r_max {
                let mut value = self.j_power(&n.shift_diag(t)).sum(&self.torsion);
                for _ in 0..t {
                    value = value.colon(&self.j_product);
                }
                if value != expected {
                    return false;
                }
            }
            true
        })
    }

    /// The closed form `J^n + (I_n + N) ∩ T' + N` for the `L_n` numerator,
    /// valid once cancellation-modulo-torsion and Artin–Rees have kicked in.
    fn l_closed_form(&self, n: &MultiIndex) -> Result<MonomialIdeal> {
        let base = self.spec.base.ideal();
        let i_full = self.filtration_value(n)?.sum(base);
        Ok(self.j_power(n).sum(base).sum(&i_full.intersect(&self.torsion)))
    }

    /// Scan `Ass(L'_n)`, `Ass(L_n)`, `Ass(M_n)` and `Ass(M_n/L_n)`, check the
    /// stabilization implication chain and the shifted containments, and
    /// cross-check the chain-computed `L_n` against its torsion closed form.
    pub fn check_chain(&self) -> Result<ChainReport> {
        let points = grid_points(&self.spec.grid);
        struct Point {
            n: MultiIndex,
            ass_m: AssSet,
            ass_l: AssSet,
            ass_lp: AssSet,
            ass_quotient: AssSet,
            l_numerator: MonomialIdeal,
            l_stabilized: bool,
        }
        let rows = par::map(points, true, |n| -> Result<Point> {
            let m = self.component(&n)?;
            let l = self.l_module(&n)?;
            let lp = self.lprime_module(&n)?;
            let quotient =
                Subquotient::new(m.numerator().clone(), l.module.numerator().clone())
                    .expect("L_n numerator is contained in M_n numerator");
            Ok(Point {
                ass_m: assoc_primes(&m),
                ass_l: assoc_primes(&l.module),
                ass_lp: assoc_primes(&lp),
                ass_quotient: assoc_primes(&quotient),
                l_numerator: l.module.numerator().clone(),
                l_stabilized: l.stabilized,
                n,
            })
        });

        let mut m_seq = AssSequence::new();
        let mut l_seq = AssSequence::new();
        let mut lp_seq = AssSequence::new();
        let mut quotient_sequence = AssSequence::new();
        let mut unstabilized_chains = Vec::new();
        let mut l_numerators: BTreeMap<MultiIndex, (MonomialIdeal, bool)> = BTreeMap::new();
        for row in rows {
            let p = row?;
            m_seq.insert(p.n.clone(), p.ass_m);
            l_seq.insert(p.n.clone(), p.ass_l);
            lp_seq.insert(p.n.clone(), p.ass_lp);
            quotient_sequence.insert(p.n.clone(), p.ass_quotient);
            if !p.l_stabilized {
                unstabilized_chains.push(p.n.clone());
            }
            l_numerators.insert(p.n.clone(), (p.l_numerator, p.l_stabilized));
        }

        let l_in_lprime_shifts = shift_check(&l_seq, &lp_seq);
        let quotient_in_m_shifts = shift_check(&quotient_sequence, &m_seq);

        let lprime = analyze_sequence(lp_seq);
        let l = analyze_sequence(l_seq);
        let m = analyze_sequence(m_seq);

        let mut implication_violations = Vec::new();
        if lprime.stable && !l.stable {
            implication_violations.push(ImplicationViolation::LPrimeButNotL);
        }
        if l.stable && !m.stable {
            implication_violations.push(ImplicationViolation::LButNotM);
        }

        // Two-path consistency for the stabilized chains.
        let mut two_path_checked = 0usize;
        let mut two_path_mismatches = Vec::new();
        if let (Some(cancel), Some(artin)) =
            (self.torsion_cancellation_index(), self.artin_rees_index())
        {
            for (n, (numerator, stabilized)) in &l_numerators {
                if *stabilized && cancel.leq(n) && artin.leq(n) {
                    two_path_checked += 1;
                    if *numerator != self.l_closed_form(n)? {
                        two_path_mismatches.push(n.clone());
                    }
                }
            }
        }

        Ok(ChainReport {
            lprime,
            l,
            m,
            quotient_sequence,
            implication_violations,
            l_in_lprime_shifts,
            quotient_in_m_shifts,
            unstabilized_chains,
            two_path_checked,
            two_path_mismatches,
        })
    }
}

/// For each prime at each index of `source`, search the grid cone above the
/// index in `target`.
fn shift_check(source: &AssSequence, target: &AssSequence) -> ShiftCheck {
    let mut check = ShiftCheck::default();
    for (n, set) in source {
        for p in set {
            let found = target
                .iter()
                .any(|(m, t)| n.leq(m) && t.contains(p));
            if found {
                check.verified += 1;
            } else {
                check.inconclusive.push((n.clone(), p.clone()));
            }
        }
    }
    check
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(v: usize, exps: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_exps(v, exps)
    }

    fn ring_xy() -> RingContext {
        RingContext::new(vec!["x".into(), "y".into()]).unwrap()
    }

    fn prime(support: &[usize]) -> MonomialPrime {
        MonomialPrime::new(support.to_vec())
    }

    /// AC1 shape: J = (x^2, xy), I_n = J^n : (x,y)^∞, C = A.
    fn saturation_experiment(grid: u32) -> Experiment {
        let j = ideal(2, &[&[2, 0], &[1, 1]]);
        let family = IdealFamily::new(vec![j]).unwrap();
        let filtration = FiltrationSpec::saturation(
            family.clone(),
            ideal(2, &[&[1, 0], &[0, 1]]),
        )
        .unwrap();
        let spec = ExperimentSpec::new(
            ring_xy(),
            family,
            filtration,
            BaseModule::free(2),
            MultiIndex::new(vec![grid]),
        )
        .unwrap();
        Experiment::new(spec)
    }

    /// AC4 shape: N = (x^2, xy), J = (y), I_n = (J^n + N) : x^∞.
    fn torsion_experiment(grid: u32) -> Experiment {
        let family = IdealFamily::new(vec![ideal(2, &[&[0, 1]])]).unwrap();
        let filtration =
            FiltrationSpec::saturation(family.clone(), ideal(2, &[&[1, 0]])).unwrap();
        let base = BaseModule::new(ideal(2, &[&[2, 0], &[1, 1]])).unwrap();
        let spec = ExperimentSpec::new(
            ring_xy(),
            family,
            filtration,
            base,
            MultiIndex::new(vec![grid]),
        )
        .unwrap();
        Experiment::new(spec)
    }

    #[test]
    fn component_examples() {
        // powers filtration: every component is the zero module
        let j = ideal(2, &[&[2, 0], &[1, 1]]);
        let family = IdealFamily::new(vec![j]).unwrap();
        let spec = ExperimentSpec::new(
            ring_xy(),
            family.clone(),
            FiltrationSpec::Powers(family),
            BaseModule::free(2),
            MultiIndex::new(vec![3]),
        )
        .unwrap();
        let exp = Experiment::new(spec);
        for n in grid_points(&MultiIndex::new(vec![3])) {
            assert!(exp.component(&n).unwrap().is_zero());
        }

        // saturation fixture at n = 2: (x^2)/(x^4, x^3 y, x^2 y^2)
        let exp = saturation_experiment(4);
        let c = exp.component(&MultiIndex::new(vec![2])).unwrap();
        assert_eq!(c.numerator(), &ideal(2, &[&[2, 0]]));
        assert_eq!(c.denominator(), &ideal(2, &[&[4, 0], &[3, 1], &[2, 2]]));
    }

    #[test]
    fn torsion_ideal_examples() {
        let exp = saturation_experiment(2);
        assert!(exp.torsion_ideal().is_zero());

        let exp = torsion_experiment(2);
        assert_eq!(exp.torsion_ideal(), &ideal(2, &[&[1, 0]]));

        // N = (xy), J = (x): T' = (y)
        let family = IdealFamily::new(vec![ideal(2, &[&[1, 0]])]).unwrap();
        let spec = ExperimentSpec::new(
            ring_xy(),
            family.clone(),
            FiltrationSpec::Trivial { vars: 2 },
            BaseModule::new(ideal(2, &[&[1, 1]])).unwrap(),
            MultiIndex::new(vec![2]),
        )
        .unwrap();
        assert_eq!(Experiment::new(spec).torsion_ideal(), &ideal(2, &[&[0, 1]]));
    }

    #[test]
    fn grade_examples() {
        let zero = MonomialIdeal::zero(2);
        assert!(grade_positive(&ideal(2, &[&[2, 0], &[1, 1]]), &zero));
        let xy = ideal(2, &[&[1, 1]]);
        assert!(!grade_positive(&ideal(2, &[&[1, 0]]), &xy));
        assert!(grade_positive(&ideal(2, &[&[1, 0], &[0, 1]]), &xy));
    }

    #[test]
    fn ass_sequence_stabilizes_on_saturation_fixture() {
        let exp = saturation_experiment(4);
        let report = exp.ass_sequence().unwrap();
        assert!(report.stable);
        assert_eq!(report.k, Some(MultiIndex::new(vec![1])));
        assert_eq!(report.stable_set, Some(AssSet::from([prime(&[0, 1])])));
        // parallel and sequential scans agree
        let seq = exp.ass_sequence_seq().unwrap();
        assert_eq!(report.sequence, seq.sequence);
    }

    #[test]
    fn l_modules_vanish_in_the_quasi_finite_case() {
        let exp = saturation_experiment(4);
        for n in grid_points(&MultiIndex::new(vec![4])) {
            let l = exp.l_module(&n).unwrap();
            assert!(l.stabilized);
            assert!(l.module.is_zero());
            assert!(exp.lprime_module(&n).unwrap().is_zero());
        }
    }

    #[test]
    fn l_modules_on_the_torsion_fixture() {
        let exp = torsion_experiment(4);
        for n in 1..=4 {
            let idx = MultiIndex::new(vec![n]);
            let l = exp.l_module(&idx).unwrap();
            assert!(l.stabilized);
            // numerator (x, y^n) over (y^n, x^2, xy)
            assert_eq!(l.module.numerator(), &ideal(2, &[&[1, 0], &[0, n]]));
            assert_eq!(assoc_primes(&l.module), AssSet::from([prime(&[0, 1])]));
            // L' = L here, and L' ⊆ L definitionally
            let lp = exp.lprime_module(&idx).unwrap();
            assert!(lp.numerator().is_subset_of(l.module.numerator()));
            assert_eq!(lp.numerator(), l.module.numerator());
        }
    }

    #[test]
    fn cancellation_examples() {
        // principal regular ideal: k = 0
        let family = IdealFamily::new(vec![ideal(2, &[&[1, 0]])]).unwrap();
        let spec = ExperimentSpec::new(
            ring_xy(),
            family.clone(),
            FiltrationSpec::Powers(family),
            BaseModule::free(2),
            MultiIndex::new(vec![3]),
        )
        .unwrap();
        assert_eq!(
            Experiment::new(spec).cancellation_index(),
            CancellationOutcome::Found { k: MultiIndex::new(vec![0]) }
        );

        // grade zero: inapplicable
        let family = IdealFamily::new(vec![ideal(2, &[&[1, 0]])]).unwrap();
        let spec = ExperimentSpec::new(
            ring_xy(),
            family.clone(),
            FiltrationSpec::Powers(family),
            BaseModule::new(ideal(2, &[&[1, 1]])).unwrap(),
            MultiIndex::new(vec![3]),
        )
        .unwrap();
        assert_eq!(
            Experiment::new(spec).cancellation_index(),
            CancellationOutcome::Inapplicable
        );

        // J = (x^2, xy): found within grid 6
        let exp = saturation_experiment(6);
        match exp.cancellation_index() {
            CancellationOutcome::Found { k } => {
                assert!(k.leq(&MultiIndex::new(vec![6])));
            }
            other => panic!("expected a cancellation index, got {other:?}"),
        }
    }

    #[test]
    fn artin_rees_examples() {
        let exp = saturation_experiment(3);
        assert_eq!(exp.artin_rees_index(), Some(MultiIndex::zero(1)));

        // N = (x^2, xy), J = (y): T' = (x) and (x) ∩ ((y^n) + N) ⊆ N for n ≥ 1
        let exp = torsion_experiment(3);
        assert_eq!(exp.artin_rees_index(), Some(MultiIndex::new(vec![1])));

        // N = (xy), J = (x,y): finite index
        let family = IdealFamily::new(vec![ideal(2, &[&[1, 0], &[0, 1]])]).unwrap();
        let spec = ExperimentSpec::new(
            ring_xy(),
            family.clone(),
            FiltrationSpec::Powers(family),
            BaseModule::new(ideal(2, &[&[1, 1]])).unwrap(),
            MultiIndex::new(vec![4]),
        )
        .unwrap();
        assert!(Experiment::new(spec).artin_rees_index().is_some());
    }

    #[test]
    fn chain_report_on_fixtures() {
        let exp = saturation_experiment(4);
        let chain = exp.check_chain().unwrap();
        assert!(chain.implication_violations.is_empty());
        assert!(chain.unstabilized_chains.is_empty());
        assert!(chain.lprime.stable && chain.l.stable && chain.m.stable);
        assert_eq!(chain.l.stable_set, Some(AssSet::new()));
        assert!(chain.two_path_mismatches.is_empty());

        let exp = torsion_experiment(4);
        let chain = exp.check_chain().unwrap();
        assert!(chain.implication_violations.is_empty());
        assert_eq!(chain.l.stable_set, Some(AssSet::from([prime(&[0, 1])])));
        assert!(chain.two_path_checked >= 1);
        assert!(chain.two_path_mismatches.is_empty());
        assert!(chain.l_in_lprime_shifts.verified >= 1);
    }

    #[test]
    fn r_max_cap_is_flagged() {
        let exp = {
            let mut spec = torsion_experiment(3).spec.clone();
            spec = spec.with_chain_limits(2, 1).unwrap();
            Experiment::new(spec)
        };
        let l = exp.l_module(&MultiIndex::new(vec![2])).unwrap();
        assert!(!l.stabilized);
        let chain = exp.check_chain().unwrap();
        assert!(!chain.unstabilized_chains.is_empty());
    }

    #[test]
    fn spec_validation_errors() {
        let j = ideal(2, &[&[2, 0], &[1, 1]]);
        let family = IdealFamily::new(vec![j]).unwrap();
        // grid dimension mismatch
        assert!(matches!(
            ExperimentSpec::new(
                ring_xy(),
                family.clone(),
                FiltrationSpec::Powers(family.clone()),
                BaseModule::free(2),
                MultiIndex::new(vec![2, 2]),
            ),
            Err(Error::IndexDimension { .. })
        ));
        // zero grid bound
        assert!(matches!(
            ExperimentSpec::new(
                ring_xy(),
                family.clone(),
                FiltrationSpec::Powers(family.clone()),
                BaseModule::free(2),
                MultiIndex::new(vec![0]),
            ),
            Err(Error::GridBoundTooSmall)
        ));
        // base module must be proper
        assert!(BaseModule::new(MonomialIdeal::unit(2)).is_err());
    }
}
