//! Asymptotic invariants comparing symbolic and ordinary powers: the
//! Waldschmidt constant (exact via the symbolic polyhedron, or approximated
//! from an initial-degree sequence) and a lower bound on the resurgence.

use num_traits::Zero;

use crate::decompose;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::lp::{self, LpOutcome, LpProblem, Sense};
use crate::polyhedron::{symbolic_polyhedron, HPolyhedron, Inequality};
use crate::rational::Rational;
use crate::symbolic::{containment_problem_cached, localize_at_prime, PowerCache, SymbolicOptions};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WaldschmidtMode {
    Exact,
    Approximated,
}

/// Result of a Waldschmidt computation.
///
/// The exact mode carries the optimal point of the linear program over the
/// symbolic polyhedron; the approximated mode records how many powers were
/// sampled, and its value is an upper bound on the true constant that any
/// larger sample can only improve.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WaldschmidtReport {
    pub value: Rational,
    pub mode: WaldschmidtMode,
    pub sample_size: Option<u32>,
    pub witness: Option<Vec<Rational>>,
}

/// The Waldschmidt constant of a monomial ideal, exactly: the minimum
/// coordinate sum over the symbolic polyhedron.
pub fn waldschmidt_exact(
    ideal: &MonomialIdeal,
    opts: &SymbolicOptions,
) -> Result<WaldschmidtReport> {
    let polyhedron = symbolic_polyhedron(ideal, opts)?;
    let objective = vec![Rational::from_integer(1.into()); polyhedron.dim()];
    let problem = LpProblem {
        polyhedron,
        objective,
        sense: Sense::Minimize,
    };
    match lp::solve(&problem)? {
        LpOutcome::Optimal { value, point } => Ok(WaldschmidtReport {
            value,
            mode: WaldschmidtMode::Exact,
            sample_size: None,
            witness: Some(point),
        }),
        // The symbolic polyhedron is a nonempty subset of the orthant, so
        // the all-ones objective is bounded below by zero and attained.
        _ => unreachable!("the coordinate-sum LP over a symbolic polyhedron is always optimal"),
    }
}

/// `[α(I⁽ᵐ⁾)/m for m = 1..k]`, exact rationals.
pub fn alpha_sequence(
    ideal: &MonomialIdeal,
    k: u32,
    opts: &SymbolicOptions,
) -> Result<Vec<Rational>> {
    if k == 0 {
        return Err(Error::NonPositive {
            arg: "sequence length",
            got: 0,
        });
    }
    let mut cache = PowerCache::new(ideal, *opts);
    let mut sequence = Vec::with_capacity(k as usize);
    for m in 1..=k {
        let alpha = cache.symbolic(m)?.initial_degree()?;
        sequence.push(Rational::new(alpha.into(), m.into()));
    }
    Ok(sequence)
}

/// Upper-bound approximation: the minimum of the first `sample_size` entries
/// of the initial-degree sequence.
pub fn waldschmidt_approx(
    ideal: &MonomialIdeal,
    sample_size: u32,
    opts: &SymbolicOptions,
) -> Result<WaldschmidtReport> {
    let sequence = alpha_sequence(ideal, sample_size, opts)?;
    let value = sequence.into_iter().min().expect("sample size is positive");
    Ok(WaldschmidtReport {
        value,
        mode: WaldschmidtMode::Approximated,
        sample_size: Some(sample_size),
        witness: None,
    })
}

/// Lower bound on the resurgence: the maximum of `(a_r - 1)/r` over
/// `r = 1..=r_max`, where `a_r` is the smallest `a` with `I⁽ᵃ⁾ ⊆ Iʳ`. By
/// monotonicity of symbolic powers, `a_r - 1` is the largest `m` with
/// `I⁽ᵐ⁾ ⊄ Iʳ`, so each term is the best bound the pair family at `r`
/// witnesses.
pub fn lower_bound_resurgence(
    ideal: &MonomialIdeal,
    r_max: u32,
    opts: &SymbolicOptions,
) -> Result<Rational> {
    if r_max == 0 {
        return Err(Error::NonPositive {
            arg: "resurgence search bound",
            got: 0,
        });
    }
    let mut cache = PowerCache::new(ideal, *opts);
    let mut best = Rational::zero();
    for r in 1..=r_max {
        let a = containment_problem_cached(&mut cache, r)?;
        let bound = Rational::new((a - 1).into(), r.into());
        if bound > best {
            best = bound;
        }
    }
    Ok(best)
}

/// Waldschmidt constant via the extended-variable LP, without facet
/// enumeration: minimize the coordinate sum of `x` subject to `x` lying in
/// every Newton polyhedron of the contracted ideals, each membership written
/// with its own convex-multiplier block. Cross-checks the Fourier–Motzkin
/// route.
pub fn waldschmidt_extended_lp(ideal: &MonomialIdeal, opts: &SymbolicOptions) -> Result<Rational> {
    ideal.check_proper_nonzero()?;
    let mut primes = if opts.minimal_primes {
        decompose::minimal_primes(ideal)?
    } else {
        decompose::maximal_associated_primes(ideal)?
    };
    primes.sort();
    let parts = primes
        .iter()
        .map(|p| localize_at_prime(ideal, p))
        .collect::<Result<Vec<_>>>()?;

    let n = ideal.ring().num_vars();
    let total = n + parts
        .iter()
        .map(MonomialIdeal::num_generators)
        .sum::<usize>();
    let mut rows: Vec<Inequality> = Vec::new();
    let mut offset = n;
    for part in &parts {
        let k = part.num_generators();
        // x_j - Σ λ_v v_j ≥ 0
        for j in 0..n {
            let mut coeffs = vec![Rational::zero(); total];
            coeffs[j] = Rational::from_integer(1.into());
            for (i, g) in part.generators().iter().enumerate() {
                coeffs[offset + i] = -Rational::from_integer(g.exponent(j).into());
            }
            rows.push(Inequality::new(coeffs, Rational::zero()));
        }
        // λ ≥ 0 and Σλ = 1
        for i in 0..k {
            let mut coeffs = vec![Rational::zero(); total];
            coeffs[offset + i] = Rational::from_integer(1.into());
            rows.push(Inequality::new(coeffs, Rational::zero()));
        }
        let mut sum = vec![Rational::zero(); total];
        for i in 0..k {
            sum[offset + i] = Rational::from_integer(1.into());
        }
        let negated: Vec<Rational> = sum.iter().map(|c| -c.clone()).collect();
        rows.push(Inequality::new(sum, Rational::from_integer(1.into())));
        rows.push(Inequality::new(
            negated,
            Rational::from_integer((-1).into()),
        ));
        offset += k;
    }

    let mut objective = vec![Rational::zero(); total];
    for c in objective.iter_mut().take(n) {
        *c = Rational::from_integer(1.into());
    }
    let problem = LpProblem {
        polyhedron: HPolyhedron::from_inequalities(total, rows)?,
        objective,
        sense: Sense::Minimize,
    };
    match lp::solve(&problem)? {
        LpOutcome::Optimal { value, .. } => Ok(value),
        _ => unreachable!("the extended Waldschmidt LP is feasible and bounded below by zero"),
    }
}
