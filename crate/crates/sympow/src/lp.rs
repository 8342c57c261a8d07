//! Exact rational linear programming over H-polyhedra.
//!
//! Two-phase dense simplex with Bland's anti-cycling rule. Free variables
//! are split as differences of nonnegatives, every constraint `a·x ≥ b`
//! gets a surplus variable, and phase one drives a full artificial basis to
//! zero. All pivots are exact `BigRational` arithmetic; outcomes carry
//! certified witnesses (an optimal point, or a feasible point plus an
//! improving ray).

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::polyhedron::{dot, HPolyhedron};
use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sense {
    Minimize,
    Maximize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LpProblem {
    pub polyhedron: HPolyhedron,
    pub objective: Vec<Rational>,
    pub sense: Sense,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpOutcome {
    /// The optimum is attained: `value = objective · point` exactly.
    Optimal {
        value: Rational,
        point: Vec<Rational>,
    },
    /// A feasible point and a recession ray along which the objective
    /// improves without bound.
    Unbounded {
        point: Vec<Rational>,
        ray: Vec<Rational>,
    },
    Infeasible,
}

/// Solve an LP over an H-polyhedron.
pub fn solve(problem: &LpProblem) -> Result<LpOutcome> {
    let dim = problem.polyhedron.dim();
    if problem.objective.len() != dim {
        return Err(Error::DimensionMismatch(problem.objective.len(), dim));
    }
    Ok(match problem.sense {
        Sense::Minimize => minimize_raw(&problem.polyhedron, &problem.objective),
        Sense::Maximize => maximize_raw(&problem.polyhedron, &problem.objective),
    })
}

/// Phase-one feasibility.
pub fn is_feasible(p: &HPolyhedron) -> bool {
    let zero_objective = vec![Rational::zero(); p.dim()];
    !matches!(minimize_raw(p, &zero_objective), LpOutcome::Infeasible)
}

/// Is inequality `index` implied by the remaining system? Implemented as
/// "the minimum of its left-hand side over the others cannot go below its
/// right-hand side"; an infeasible remainder implies everything.
pub fn is_redundant(p: &HPolyhedron, index: usize) -> Result<bool> {
    let rows = p.inequalities();
    if index >= rows.len() {
        return Err(Error::IndexOutOfRange {
            index,
            len: rows.len(),
        });
    }
    let target = rows[index].clone();
    let rest: Vec<_> = rows
        .iter()
        .enumerate()
        .filter(|&(j, _)| j != index)
        .map(|(_, r)| r.clone())
        .collect();
    let rest = HPolyhedron::from_inequalities(p.dim(), rest)?;
    Ok(match minimize_raw(&rest, &target.coeffs) {
        LpOutcome::Infeasible => true,
        LpOutcome::Unbounded { .. } => false,
        LpOutcome::Optimal { value, .. } => value >= target.rhs,
    })
}

pub(crate) fn minimize_raw(p: &HPolyhedron, objective: &[Rational]) -> LpOutcome {
    Simplex::new(p, objective).run()
}

pub(crate) fn maximize_raw(p: &HPolyhedron, objective: &[Rational]) -> LpOutcome {
    let negated: Vec<Rational> = objective.iter().map(|c| -c.clone()).collect();
    match Simplex::new(p, &negated).run() {
        LpOutcome::Optimal { point, .. } => LpOutcome::Optimal {
            value: dot(objective, &point),
            point,
        },
        other => other,
    }
}

/// Dense two-phase simplex tableau.
///
/// Column layout: `u_0..u_{d-1}`, `w_0..w_{d-1}` (so `x = u - w`), surplus
/// `s_0..s_{m-1}`, artificials `t_0..t_{m-1}`.
struct Simplex {
    dim: usize,
    num_structural: usize,
    ncols: usize,
    rows: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
    basis: Vec<usize>,
    objective: Vec<Rational>,
}

impl Simplex {
    fn new(p: &HPolyhedron, objective: &[Rational]) -> Simplex {
        let dim = p.dim();
        let m = p.inequalities().len();
        let num_structural = 2 * dim + m;
        let ncols = num_structural + m;
        let mut rows = Vec::with_capacity(m);
        let mut rhs = Vec::with_capacity(m);
        let mut basis = Vec::with_capacity(m);
        for (i, ineq) in p.inequalities().iter().enumerate() {
            let negate = ineq.rhs.is_negative();
            let mut row = vec![Rational::zero(); ncols];
            for (j, a) in ineq.coeffs.iter().enumerate() {
                let value = if negate { -a.clone() } else { a.clone() };
                row[j] = value.clone();
                row[dim + j] = -value;
            }
            row[2 * dim + i] = if negate {
                Rational::from_integer(1.into())
            } else {
                Rational::from_integer((-1).into())
            };
            row[num_structural + i] = Rational::from_integer(1.into());
            rows.push(row);
            rhs.push(if negate {
                -ineq.rhs.clone()
            } else {
                ineq.rhs.clone()
            });
            basis.push(num_structural + i);
        }
        Simplex {
            dim,
            num_structural,
            ncols,
            rows,
            rhs,
            basis,
            objective: objective.to_vec(),
        }
    }

    fn pivot(&mut self, r: usize, j: usize, reduced: &mut [Rational]) {
        let scale = self.rows[r][j].clone();
        for x in self.rows[r].iter_mut() {
            *x = &*x / &scale;
        }
        self.rhs[r] = &self.rhs[r] / &scale;
        for i in 0..self.rows.len() {
            if i == r || self.rows[i][j].is_zero() {
                continue;
            }
            let factor = self.rows[i][j].clone();
            for c in 0..self.ncols {
                let delta = &factor * &self.rows[r][c];
                self.rows[i][c] = &self.rows[i][c] - delta;
            }
            let delta = &factor * &self.rhs[r];
            self.rhs[i] = &self.rhs[i] - delta;
        }
        if !reduced[j].is_zero() {
            let factor = reduced[j].clone();
            for (x, a) in reduced.iter_mut().zip(&self.rows[r]) {
                let delta = &factor * a;
                *x = &*x - delta;
            }
        }
        self.basis[r] = j;
    }

    /// Bland's rule: entering column is the lowest admissible index with a
    /// negative reduced cost; the leaving row breaks ratio ties by the
    /// lowest basic variable index. Returns the entering column on
    /// unboundedness.
    fn bland_loop(&mut self, reduced: &mut [Rational], max_col: usize) -> Option<usize> {
        loop {
            let enter = (0..max_col).find(|&j| reduced[j].is_negative())?;
            let mut leave: Option<(Rational, usize, usize)> = None;
            for r in 0..self.rows.len() {
                if self.rows[r][enter].is_positive() {
                    let ratio = &self.rhs[r] / &self.rows[r][enter];
                    let candidate = (ratio, self.basis[r], r);
                    leave = match leave {
                        None => Some(candidate),
                        Some(best) => {
                            if candidate.0 < best.0
                                || (candidate.0 == best.0 && candidate.1 < best.1)
                            {
                                Some(candidate)
                            } else {
                                Some(best)
                            }
                        }
                    };
                }
            }
            match leave {
                Some((_, _, r)) => self.pivot(r, enter, reduced),
                None => return Some(enter),
            }
        }
    }

    /// Reduced costs for a cost vector, zeroed on the current basis.
    fn reduced_costs(&self, costs: &[Rational]) -> Vec<Rational> {
        let mut reduced = costs.to_vec();
        for (r, &b) in self.basis.iter().enumerate() {
            if !costs[b].is_zero() {
                let factor = costs[b].clone();
                for (x, a) in reduced.iter_mut().zip(&self.rows[r]) {
                    let delta = &factor * a;
                    *x = &*x - delta;
                }
            }
        }
        reduced
    }

    fn current_x(&self) -> Vec<Rational> {
        let mut values = vec![Rational::zero(); self.ncols];
        for (r, &b) in self.basis.iter().enumerate() {
            values[b] = self.rhs[r].clone();
        }
        (0..self.dim)
            .map(|j| &values[j] - &values[self.dim + j])
            .collect()
    }

    fn run(mut self) -> LpOutcome {
        // Phase 1: minimize the artificial sum.
        let mut phase1_costs = vec![Rational::zero(); self.ncols];
        for cost in phase1_costs.iter_mut().skip(self.num_structural) {
            *cost = Rational::from_integer(1.into());
        }
        let mut reduced = self.reduced_costs(&phase1_costs);
        if self.bland_loop(&mut reduced, self.ncols).is_some() {
            unreachable!("phase 1 objective is bounded below by zero");
        }
        let artificial_load: Rational = self
            .basis
            .iter()
            .enumerate()
            .filter(|&(_, &b)| b >= self.num_structural)
            .map(|(r, _)| self.rhs[r].clone())
            .fold(Rational::zero(), |acc, v| acc + v);
        if artificial_load.is_positive() {
            return LpOutcome::Infeasible;
        }

        // Drive leftover artificials (at value zero) out of the basis, or
        // drop their rows when they are redundant equations.
        let mut r = 0;
        while r < self.rows.len() {
            if self.basis[r] >= self.num_structural {
                let pivot_col = (0..self.num_structural).find(|&j| !self.rows[r][j].is_zero());
                match pivot_col {
                    Some(j) => {
                        let mut dummy = vec![Rational::zero(); self.ncols];
                        self.pivot(r, j, &mut dummy);
                        r += 1;
                    }
                    None => {
                        self.rows.remove(r);
                        self.rhs.remove(r);
                        self.basis.remove(r);
                    }
                }
            } else {
                r += 1;
            }
        }

        // Phase 2 on the real objective; artificial columns are banned.
        let mut phase2_costs = vec![Rational::zero(); self.ncols];
        for j in 0..self.dim {
            phase2_costs[j] = self.objective[j].clone();
            phase2_costs[self.dim + j] = -self.objective[j].clone();
        }
        let mut reduced = self.reduced_costs(&phase2_costs);
        match self.bland_loop(&mut reduced, self.num_structural) {
            None => {
                let point = self.current_x();
                let value = dot(&self.objective, &point);
                LpOutcome::Optimal { value, point }
            }
            Some(enter) => {
                let mut direction = vec![Rational::zero(); self.ncols];
                direction[enter] = Rational::from_integer(1.into());
                for (r, &b) in self.basis.iter().enumerate() {
                    direction[b] = -self.rows[r][enter].clone();
                }
                let ray: Vec<Rational> = (0..self.dim)
                    .map(|j| &direction[j] - &direction[self.dim + j])
                    .collect();
                let point = self.current_x();
                debug_assert!(dot(&self.objective, &ray).is_negative());
                LpOutcome::Unbounded { point, ray }
            }
        }
    }
}
