//! Exact rational feasibility for the Newton-polyhedron membership test.
//!
//! Solves: does there exist λ ≥ 0 with Σ λ_g = n and Σ λ_g·g ≤ a
//! componentwise? This is a phase-1 simplex over `BigRational` — slack
//! variables turn the inequalities into equations with an immediate basic
//! feasible point, and a single artificial variable covers the Σ λ = n row.
//! Bland's rule guarantees termination. No floating point anywhere.

use num::{BigInt, BigRational, One, Signed, Zero};

fn rat(x: u32) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

/// Return a nonnegative rational `λ` with `Σ λ_g = n` and `Σ λ_g·g ≤ a`
/// componentwise, if one exists.
pub fn feasible_combination(gens: &[&[u32]], target: &[u32], n: u32) -> Option<Vec<BigRational>> {
    let k = gens.len();
    let v = target.len();
    assert!(k > 0, "need at least one generator");
    for g in gens {
        assert_eq!(g.len(), v, "generator dimension mismatch");
    }

    // Columns: 0..k lambdas, k..k+v slacks, k+v artificial. Rows: v slack
    // rows then the budget row. rhs is nonnegative, so {slacks, artificial}
    // is a feasible starting basis.
    let cols = k + v + 1;
    let mut tableau: Vec<Vec<BigRational>> = Vec::with_capacity(v + 1);
    for i in 0..v {
        let mut row = vec![BigRational::zero(); cols + 1];
        for (j, g) in gens.iter().enumerate() {
            row[j] = rat(g[i]);
        }
        row[k + i] = BigRational::one();
        row[cols] = rat(target[i]);
        tableau.push(row);
    }
    let mut budget = vec![BigRational::zero(); cols + 1];
    for cell in budget.iter_mut().take(k) {
        *cell = BigRational::one();
    }
    budget[k + v] = BigRational::one();
    budget[cols] = rat(n);
    tableau.push(budget);

    let mut basis: Vec<usize> = (0..v).map(|i| k + i).collect();
    basis.push(k + v);

    // Phase-1 objective: minimize the artificial variable. Reduced costs
    // start as cost row minus the budget row (the artificial is basic).
    let mut cost = vec![BigRational::zero(); cols + 1];
    for j in 0..=cols {
        cost[j] = -tableau[v][j].clone();
    }
    cost[k + v] = BigRational::zero();

    loop {
        // Bland: entering column = lowest index with negative reduced cost.
        let entering = (0..cols).find(|&j| cost[j].is_negative());
        let entering = match entering {
            Some(j) => j,
            None => break,
        };

        // Ratio test; ties broken by lowest basic variable index (Bland).
        let mut pivot_row: Option<usize> = None;
        let mut best: Option<BigRational> = None;
        for (r, row) in tableau.iter().enumerate() {
            if row[entering].is_positive() {
                let ratio = &row[cols] / &row[entering];
                let better = match &best {
                    None => true,
                    Some(b) => {
                        ratio < *b
                            || (ratio == *b
                                && basis[r] < basis[pivot_row.expect("row set with best")])
                    }
                };
                if better {
                    best = Some(ratio);
                    pivot_row = Some(r);
                }
            }
        }
        let r = pivot_row.expect("phase-1 objective is bounded below by zero");

        // Pivot.
        let pivot = tableau[r][entering].clone();
        for cell in tableau[r].iter_mut() {
            *cell /= &pivot;
        }
        for rr in 0..tableau.len() {
            if rr != r && !tableau[rr][entering].is_zero() {
                let factor = tableau[rr][entering].clone();
                for j in 0..=cols {
                    let delta = &factor * &tableau[r][j];
                    tableau[rr][j] -= delta;
                }
            }
        }
        if !cost[entering].is_zero() {
            let factor = cost[entering].clone();
            for j in 0..=cols {
                let delta = &factor * &tableau[r][j];
                cost[j] -= delta;
            }
        }
        basis[r] = entering;
    }

    // Feasible iff the artificial variable ended at zero.
    let mut artificial_value = BigRational::zero();
    let mut lambda = vec![BigRational::zero(); k];
    for (r, &b) in basis.iter().enumerate() {
        if b == k + v {
            artificial_value = tableau[r][cols].clone();
        } else if b < k {
            lambda[b] = tableau[r][cols].clone();
        }
    }
    if artificial_value.is_zero() {
        Some(lambda)
    } else {
        None
    }
}
