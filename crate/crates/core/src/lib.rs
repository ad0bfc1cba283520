//! Exact symbolic workbench for asymptotic prime divisors of monomial
//! subquotients.
//!
//! Fix a polynomial ring `A = K[x_1,...,x_v]`, monomial ideals
//! `J_1,...,J_d`, a base module `C = A/N`, and a multi-filtration
//! `n ↦ I_n` containing the powers `J^n`. The crate computes the associated
//! primes of every component `I_nC/J^nC` over a finite grid, detects when
//! the sequence stabilizes, and exposes the torsion machinery (`T`, `L_n`,
//! `L'_n`, cancellation and Artin–Rees indices) that explains why.
//!
//! Everything is exact: ideals live in canonical minimal-generator form,
//! integral closures go through rational feasibility in Newton polyhedra,
//! and no floating point appears anywhere.
//!
//! With the default `parallel` feature the subset scans, grid scans, and
//! lattice-box scans run on rayon; `--no-default-features` swaps in
//! sequential fallbacks with identical results.

pub mod ass;
pub mod asymptotics;
pub mod closure;
pub mod error;
pub mod filtration;
pub mod ideal;
mod lp;
pub mod monomial;
mod par;
pub mod prime;
pub mod ring;
pub mod stability;

pub use ideal::MonomialIdeal;

pub use ass::{assoc_primes, assoc_primes_big_oracle, assoc_primes_seq, socle_witness, Subquotient};
pub use asymptotics::{
    grade_positive, BaseModule, CancellationOutcome, ChainReport, Experiment, ExperimentSpec,
    LModule,
};
pub use closure::{closure_of_power, closure_of_power_seq, np_member, np_member_witness};
pub use error::{Error, Result};
pub use filtration::{
    grid_points, validate_multifiltration, EvalCache, FiltrationSpec, IdealFamily, MultiIndex,
};
pub use monomial::Monomial;
pub use prime::{AssSet, MonomialPrime};
pub use ring::RingContext;
pub use stability::StabilizationReport;
