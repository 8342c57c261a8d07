//! Symbolic powers of monomial ideals under both definitions, the equality
//! problem, the containment problem, and the symbolic defect.
//!
//! The `n`-th symbolic power intersects, over a family of primes `P`, the
//! contraction of `IⁿR_P` back to the ring. The standard family is the
//! associated primes of `I`; the alternative takes only the minimal primes.
//! For a monomial prime `P`, localizing inverts exactly the variables
//! outside `P`, so the contraction is the saturation of `Iⁿ` by the product
//! of those variables.

use std::collections::HashMap;
use std::fmt;

use crate::decompose::{self, VariablePrime};
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;

/// Which prime family defines the symbolic power, and which algorithm
/// computes it.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SymbolicOptions {
    /// Use the minimal primes of `I` instead of all associated primes.
    pub minimal_primes: bool,
    pub strategy: Strategy,
}

impl SymbolicOptions {
    pub fn minimal() -> Self {
        SymbolicOptions {
            minimal_primes: true,
            ..Default::default()
        }
    }

    pub fn with_strategy(strategy: Strategy) -> Self {
        SymbolicOptions {
            strategy,
            ..Default::default()
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Strategy {
    /// Squarefree if the input is squarefree, saturation when its
    /// precondition holds, general otherwise.
    #[default]
    Auto,
    /// Intersect powers of the associated primes. Requires a squarefree
    /// input.
    Squarefree,
    /// Contract `Iⁿ` at the inclusion-maximal primes of the family.
    General,
    /// Saturate `Iⁿ` with respect to the maximal ideal. Requires every
    /// associated prime of `I` to have height `n_vars - 1`.
    Saturation,
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Strategy::Auto => "auto",
            Strategy::Squarefree => "squarefree",
            Strategy::General => "general",
            Strategy::Saturation => "saturation",
        };
        f.write_str(name)
    }
}

/// Contraction of `I·R_P` back to the ring, for a monomial prime `P`:
/// the saturation of `I` by the product of the variables outside `P`.
pub fn localize_at_prime(ideal: &MonomialIdeal, prime: &VariablePrime) -> Result<MonomialIdeal> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let complement = prime.mask().complement(ideal.ring().num_vars());
    Ok(ideal.saturate_variables(&complement))
}

fn saturation_precondition_holds(ideal: &MonomialIdeal) -> Result<bool> {
    let n = ideal.ring().num_vars();
    if n < 2 {
        return Ok(false);
    }
    let primes = decompose::associated_primes(ideal)?;
    Ok(primes.iter().all(|p| p.height() == n - 1))
}

/// The `n`-th symbolic power.
pub fn symbolic_power(
    ideal: &MonomialIdeal,
    n: u32,
    opts: &SymbolicOptions,
) -> Result<MonomialIdeal> {
    ideal.check_proper_nonzero()?;
    if n == 0 {
        return Err(Error::NonPositive {
            arg: "symbolic power exponent",
            got: 0,
        });
    }
    match opts.strategy {
        Strategy::Auto => {
            if ideal.is_squarefree() {
                squarefree_symbolic_power(ideal, n)
            } else if saturation_precondition_holds(ideal)? {
                saturation_symbolic_power(ideal, n)
            } else {
                general_symbolic_power(ideal, n, opts.minimal_primes)
            }
        }
        Strategy::Squarefree => {
            if !ideal.is_squarefree() {
                return Err(Error::StrategyPrecondition {
                    strategy: "squarefree",
                    requirement: "a squarefree (radical) monomial ideal",
                });
            }
            squarefree_symbolic_power(ideal, n)
        }
        Strategy::Saturation => {
            if !saturation_precondition_holds(ideal)? {
                return Err(Error::StrategyPrecondition {
                    strategy: "saturation",
                    requirement: "every associated prime to have height one less than the number of variables",
                });
            }
            saturation_symbolic_power(ideal, n)
        }
        Strategy::General => general_symbolic_power(ideal, n, opts.minimal_primes),
    }
}

/// General algorithm: contract `Iⁿ` at each prime of the family and
/// intersect. Contractions are nested under prime inclusion, so only the
/// inclusion-maximal primes contribute.
fn general_symbolic_power(
    ideal: &MonomialIdeal,
    n: u32,
    use_minimal: bool,
) -> Result<MonomialIdeal> {
    let mut primes = if use_minimal {
        decompose::minimal_primes(ideal)?
    } else {
        decompose::maximal_associated_primes(ideal)?
    };
    primes.sort();
    let power = ideal.pow(n)?;
    let contractions = primes
        .iter()
        .map(|p| localize_at_prime(&power, p))
        .collect::<Result<Vec<_>>>()?;
    MonomialIdeal::intersect_many(ideal.ring(), &contractions)
}

/// Squarefree fast path: the symbolic power is the intersection of the
/// `n`-th powers of the associated primes.
fn squarefree_symbolic_power(ideal: &MonomialIdeal, n: u32) -> Result<MonomialIdeal> {
    let mut primes = decompose::associated_primes(ideal)?;
    primes.sort();
    let powers = primes
        .iter()
        .map(|p| p.as_ideal(ideal.ring()).pow(n))
        .collect::<Result<Vec<_>>>()?;
    MonomialIdeal::intersect_many(ideal.ring(), &powers)
}

/// Saturation fast path: when every associated prime has height
/// `n_vars - 1`, the only possible embedded prime of `Iⁿ` is the maximal
/// ideal, and saturating `Iⁿ` by it removes exactly that component.
fn saturation_symbolic_power(ideal: &MonomialIdeal, n: u32) -> Result<MonomialIdeal> {
    ideal.pow(n)?.saturate_maximal()
}

/// Does `Iⁿ` equal the `n`-th symbolic power (standard definition)?
///
/// Screening cascade on big heights before any symbolic power is computed:
/// with `h = height(I)`, `h0 = bigHeight(I)`, `hn = bigHeight(Iⁿ)`,
/// `hn > h0` forces an associated prime of `Iⁿ` that fits inside no
/// associated prime of `I`, so the answer is no; `hn == h0 == h` leaves no
/// room for embedded primes, so the answer is yes. Otherwise decide exactly:
/// equality holds precisely when every associated prime of `Iⁿ` is contained
/// in an associated prime of `I`, because exactly the components surviving
/// the contraction are those inside the family.
pub fn is_symbolic_equal_ordinary(ideal: &MonomialIdeal, n: u32) -> Result<bool> {
    ideal.check_proper_nonzero()?;
    if n == 0 {
        return Err(Error::NonPositive {
            arg: "power",
            got: 0,
        });
    }
    let h = decompose::height(ideal)?;
    let h0 = decompose::big_height(ideal)?;
    let power = ideal.pow(n)?;
    let hn = decompose::big_height(&power)?;
    if hn > h0 {
        return Ok(false);
    }
    if hn == h0 && h0 == h {
        return Ok(true);
    }
    let ass_i = decompose::associated_primes(ideal)?;
    let ass_power = decompose::associated_primes(&power)?;
    Ok(ass_power
        .iter()
        .all(|p| ass_i.iter().any(|q| p.is_subset_of(q))))
}

/// Memo for the ordinary and symbolic powers of one ideal under one option
/// set. Containment searches and the resurgence bound revisit the same
/// powers many times.
pub(crate) struct PowerCache<'a> {
    ideal: &'a MonomialIdeal,
    opts: SymbolicOptions,
    ordinary: HashMap<u32, MonomialIdeal>,
    symbolic: HashMap<u32, MonomialIdeal>,
}

impl<'a> PowerCache<'a> {
    pub fn new(ideal: &'a MonomialIdeal, opts: SymbolicOptions) -> Self {
        PowerCache {
            ideal,
            opts,
            ordinary: HashMap::new(),
            symbolic: HashMap::new(),
        }
    }

    pub fn ordinary(&mut self, n: u32) -> Result<MonomialIdeal> {
        if let Some(hit) = self.ordinary.get(&n) {
            return Ok(hit.clone());
        }
        let value = self.ideal.pow(n)?;
        self.ordinary.insert(n, value.clone());
        Ok(value)
    }

    pub fn symbolic(&mut self, n: u32) -> Result<MonomialIdeal> {
        if let Some(hit) = self.symbolic.get(&n) {
            return Ok(hit.clone());
        }
        let value = symbolic_power(self.ideal, n, &self.opts)?;
        self.symbolic.insert(n, value.clone());
        Ok(value)
    }
}

/// Smallest `a` with `I⁽ᵃ⁾ ⊆ Iᵇ`.
///
/// The search starts at `a = b` (degrees force `a ≥ b`) and is monotone in
/// `a`. For squarefree ideals the containment `I⁽ʰᵇ⁾ ⊆ Iᵇ` with `h` the big
/// height guarantees termination by `a = h·b`; other ideals carry no such
/// guarantee, so the search is capped there and failure is reported.
pub fn containment_problem(ideal: &MonomialIdeal, b: u32, opts: &SymbolicOptions) -> Result<u32> {
    let mut cache = PowerCache::new(ideal, *opts);
    containment_problem_cached(&mut cache, b)
}

pub(crate) fn containment_problem_cached(cache: &mut PowerCache<'_>, b: u32) -> Result<u32> {
    let ideal = cache.ideal;
    ideal.check_proper_nonzero()?;
    if b == 0 {
        return Err(Error::NonPositive {
            arg: "containment exponent b",
            got: 0,
        });
    }
    let h = decompose::big_height(ideal)? as u32;
    let cap = h.checked_mul(b).ok_or(Error::ExponentOverflow)?;
    let power_b = cache.ordinary(b)?;
    for a in b..=cap {
        if cache.symbolic(a)?.is_subideal_of(&power_b)? {
            return Ok(a);
        }
    }
    Err(Error::ContainmentCapExceeded { cap })
}

/// Largest `b` with `I⁽ᵃ⁾ ⊆ Iᵇ`.
///
/// Always defined: `I⁽ᵃ⁾ ⊆ I⁽¹⁾ = I` gives `b = 1`, and degrees force
/// `b ≤ a`, so the downward search from `a` terminates.
pub fn containment_problem_given_a(
    ideal: &MonomialIdeal,
    a: u32,
    opts: &SymbolicOptions,
) -> Result<u32> {
    ideal.check_proper_nonzero()?;
    if a == 0 {
        return Err(Error::NonPositive {
            arg: "containment exponent a",
            got: 0,
        });
    }
    let symbolic = symbolic_power(ideal, a, opts)?;
    for b in (1..=a).rev() {
        if symbolic.is_subideal_of(&ideal.pow(b)?)? {
            return Ok(b);
        }
    }
    // b = 1 always succeeds: the symbolic power sits inside the ideal.
    unreachable!("I^(a) is contained in I^(1) = I");
}

/// Number of minimal generators of `I⁽ⁿ⁾` outside `Iⁿ`.
///
/// For monomial ideals these generators are a minimal generating set of the
/// graded module `I⁽ⁿ⁾/Iⁿ` (graded Nakayama), so the count is the symbolic
/// defect.
pub fn symbolic_defect(ideal: &MonomialIdeal, n: u32, opts: &SymbolicOptions) -> Result<usize> {
    let symbolic = symbolic_power(ideal, n, opts)?;
    let ordinary = ideal.pow(n)?;
    let mut count = 0;
    for g in symbolic.generators() {
        if !ordinary.contains(g)? {
            count += 1;
        }
    }
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{Ring, VarSet};

    fn ring_xy() -> Ring {
        Ring::new(vec!["x", "y"]).unwrap()
    }

    fn ring_xyz() -> Ring {
        Ring::new(vec!["x", "y", "z"]).unwrap()
    }

    fn ideal(ring: &Ring, exps: &[Vec<u64>]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(ring, exps).unwrap()
    }

    fn triangle(r: &Ring) -> MonomialIdeal {
        ideal(r, &[vec![1, 1, 0], vec![1, 0, 1], vec![0, 1, 1]])
    }

    #[test]
    fn localization_examples() {
        let r = ring_xy();
        // localize((x^2, xy), (x)) = (x): y is inverted, xy becomes x.
        let i = ideal(&r, &[vec![2, 0], vec![1, 1]]);
        let p = VariablePrime::new(VarSet::from_indices(&[0])).unwrap();
        assert_eq!(localize_at_prime(&i, &p).unwrap(), ideal(&r, &[vec![1, 0]]));
        // support inside P: nothing to invert
        let j = ideal(&r, &[vec![2, 0]]);
        assert_eq!(localize_at_prime(&j, &p).unwrap(), j);
        // localize((xy), (x)) = (x)
        let k = ideal(&r, &[vec![1, 1]]);
        assert_eq!(localize_at_prime(&k, &p).unwrap(), ideal(&r, &[vec![1, 0]]));
    }

    #[test]
    fn triangle_second_symbolic_power() {
        let r = ring_xyz();
        let i = triangle(&r);
        let expected = ideal(
            &r,
            &[vec![1, 1, 1], vec![2, 2, 0], vec![2, 0, 2], vec![0, 2, 2]],
        );
        let opts = SymbolicOptions::default();
        assert_eq!(symbolic_power(&i, 2, &opts).unwrap(), expected);
        // All three explicit strategies agree here.
        for strategy in [
            Strategy::Squarefree,
            Strategy::General,
            Strategy::Saturation,
        ] {
            let opts = SymbolicOptions::with_strategy(strategy);
            assert_eq!(
                symbolic_power(&i, 2, &opts).unwrap(),
                expected,
                "{strategy}"
            );
        }
    }

    #[test]
    fn variable_prime_powers_are_ordinary() {
        let r = ring_xy();
        let p = ideal(&r, &[vec![1, 0], vec![0, 1]]);
        let opts = SymbolicOptions::default();
        for n in 1..=4 {
            assert_eq!(symbolic_power(&p, n, &opts).unwrap(), p.pow(n).unwrap());
        }
    }

    #[test]
    fn embedded_component_and_minimal_primes_flag() {
        let r = ring_xy();
        let i = ideal(&r, &[vec![2, 0], vec![1, 1]]);
        // Standard definition keeps the embedded contraction: I^(2) = I^2.
        let standard = symbolic_power(&i, 2, &SymbolicOptions::default()).unwrap();
        assert_eq!(standard, i.pow(2).unwrap());
        assert_eq!(standard, ideal(&r, &[vec![4, 0], vec![3, 1], vec![2, 2]]));
        // Minimal primes only: the (x)-contraction zeroes out y.
        let minimal = symbolic_power(&i, 2, &SymbolicOptions::minimal()).unwrap();
        assert_eq!(minimal, ideal(&r, &[vec![2, 0]]));
        // The minimal-primes result contains the standard one.
        assert!(standard.is_subideal_of(&minimal).unwrap());
    }

    #[test]
    fn strategy_preconditions_are_enforced() {
        let r = ring_xy();
        let i = ideal(&r, &[vec![2, 0], vec![1, 1]]);
        let squarefree = SymbolicOptions::with_strategy(Strategy::Squarefree);
        assert!(matches!(
            symbolic_power(&i, 2, &squarefree),
            Err(Error::StrategyPrecondition {
                strategy: "squarefree",
                ..
            })
        ));
        // (x^2, xy) has the embedded maximal prime of height 2 = n_vars, so
        // the saturation precondition fails too.
        let saturation = SymbolicOptions::with_strategy(Strategy::Saturation);
        assert!(matches!(
            symbolic_power(&i, 2, &saturation),
            Err(Error::StrategyPrecondition {
                strategy: "saturation",
                ..
            })
        ));
    }

    #[test]
    fn rejects_bad_inputs() {
        let r = ring_xy();
        let i = ideal(&r, &[vec![1, 1]]);
        let opts = SymbolicOptions::default();
        assert!(symbolic_power(&i, 0, &opts).is_err());
        assert_eq!(
            symbolic_power(&MonomialIdeal::zero(r.clone()), 1, &opts).unwrap_err(),
            Error::ZeroIdeal
        );
        assert_eq!(
            symbolic_power(&MonomialIdeal::unit(r), 1, &opts).unwrap_err(),
            Error::UnitIdeal
        );
    }

    #[test]
    fn equality_screen_examples() {
        let r = ring_xyz();
        let tri = triangle(&r);
        assert!(!is_symbolic_equal_ordinary(&tri, 2).unwrap());

        let r2 = ring_xy();
        let p = ideal(&r2, &[vec![1, 0], vec![0, 1]]);
        assert!(is_symbolic_equal_ordinary(&p, 5).unwrap());

        let i = ideal(&r2, &[vec![2, 0], vec![1, 1]]);
        assert!(is_symbolic_equal_ordinary(&i, 2).unwrap());
    }

    #[test]
    fn containment_examples() {
        let r = ring_xyz();
        let tri = triangle(&r);
        let opts = SymbolicOptions::default();
        assert_eq!(containment_problem(&tri, 2, &opts).unwrap(), 3);
        assert_eq!(containment_problem(&tri, 1, &opts).unwrap(), 1);
        assert_eq!(containment_problem_given_a(&tri, 3, &opts).unwrap(), 2);
        assert_eq!(containment_problem_given_a(&tri, 1, &opts).unwrap(), 1);

        let r2 = ring_xy();
        let p = ideal(&r2, &[vec![1, 0], vec![0, 1]]);
        for b in 1..=3 {
            assert_eq!(containment_problem(&p, b, &opts).unwrap(), b);
            assert_eq!(containment_problem_given_a(&p, b, &opts).unwrap(), b);
        }
    }

    mod properties {
        use super::*;
        use crate::decompose;
        use crate::test_support::{arb_proper_ideal, arb_squarefree_ideal};
        use proptest::prelude::{
            prop_assert, prop_assert_eq, prop_assume, proptest, ProptestConfig,
        };

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(64))]

            #[test]
            fn ordinary_powers_sit_inside_symbolic_powers(
                i in arb_proper_ideal(4, 4, 3),
                n in 1u32..=3,
            ) {
                let opts = SymbolicOptions::default();
                let symbolic = symbolic_power(&i, n, &opts).unwrap();
                prop_assert!(i.pow(n).unwrap().is_subideal_of(&symbolic).unwrap());
            }

            #[test]
            fn first_symbolic_power_is_the_ideal(i in arb_proper_ideal(4, 4, 3)) {
                let opts = SymbolicOptions::default();
                prop_assert_eq!(symbolic_power(&i, 1, &opts).unwrap(), i);
            }

            #[test]
            fn symbolic_powers_multiply_into_the_sum(
                i in arb_proper_ideal(4, 3, 2),
                a in 1u32..=2,
                b in 1u32..=2,
            ) {
                let opts = SymbolicOptions::default();
                let product = symbolic_power(&i, a, &opts)
                    .unwrap()
                    .multiply(&symbolic_power(&i, b, &opts).unwrap())
                    .unwrap();
                let sum = symbolic_power(&i, a + b, &opts).unwrap();
                prop_assert!(product.is_subideal_of(&sum).unwrap());
            }

            #[test]
            fn squarefree_strategy_agrees_with_general(
                i in arb_squarefree_ideal(4, 5),
                n in 1u32..=3,
            ) {
                let fast = symbolic_power(&i, n, &SymbolicOptions::with_strategy(Strategy::Squarefree)).unwrap();
                let general = symbolic_power(&i, n, &SymbolicOptions::with_strategy(Strategy::General)).unwrap();
                prop_assert_eq!(fast, general);
            }

            #[test]
            fn saturation_strategy_agrees_with_general_when_applicable(
                i in arb_proper_ideal(4, 4, 3),
                n in 1u32..=3,
            ) {
                let nvars = i.ring().num_vars();
                let applicable = decompose::associated_primes(&i)
                    .unwrap()
                    .iter()
                    .all(|p| p.height() + 1 == nvars);
                prop_assume!(nvars >= 2 && applicable);
                let sat = symbolic_power(&i, n, &SymbolicOptions::with_strategy(Strategy::Saturation)).unwrap();
                let general = symbolic_power(&i, n, &SymbolicOptions::with_strategy(Strategy::General)).unwrap();
                prop_assert_eq!(sat, general);
            }

            #[test]
            fn minimal_primes_variant_contains_the_standard_one(
                i in arb_proper_ideal(4, 4, 3),
                n in 1u32..=3,
            ) {
                let standard = symbolic_power(&i, n, &SymbolicOptions::default()).unwrap();
                let minimal = symbolic_power(&i, n, &SymbolicOptions::minimal()).unwrap();
                prop_assert!(standard.is_subideal_of(&minimal).unwrap());
            }

            #[test]
            fn equality_screen_agrees_with_direct_comparison(
                i in arb_proper_ideal(4, 4, 3),
                n in 1u32..=3,
            ) {
                let screened = is_symbolic_equal_ordinary(&i, n).unwrap();
                let direct = symbolic_power(&i, n, &SymbolicOptions::default()).unwrap()
                    == i.pow(n).unwrap();
                prop_assert_eq!(screened, direct);
            }

            #[test]
            fn defect_vanishes_exactly_at_equality(
                i in arb_proper_ideal(4, 4, 2),
                n in 1u32..=3,
            ) {
                let opts = SymbolicOptions::default();
                let defect = symbolic_defect(&i, n, &opts).unwrap();
                prop_assert_eq!(defect == 0, is_symbolic_equal_ordinary(&i, n).unwrap());
            }

            #[test]
            fn els_containment_for_squarefree_ideals(
                i in arb_squarefree_ideal(4, 5),
                m in 1u32..=3,
            ) {
                let h = decompose::big_height(&i).unwrap() as u32;
                let opts = SymbolicOptions::default();
                let symbolic = symbolic_power(&i, h * m, &opts).unwrap();
                prop_assert!(symbolic.is_subideal_of(&i.pow(m).unwrap()).unwrap());
            }

            #[test]
            fn containment_answers_are_tight(
                i in arb_squarefree_ideal(4, 4),
                b in 1u32..=2,
            ) {
                let opts = SymbolicOptions::default();
                let a = containment_problem(&i, b, &opts).unwrap();
                let power_b = i.pow(b).unwrap();
                prop_assert!(symbolic_power(&i, a, &opts).unwrap().is_subideal_of(&power_b).unwrap());
                if a > b {
                    let previous = symbolic_power(&i, a - 1, &opts).unwrap();
                    prop_assert!(!previous.is_subideal_of(&power_b).unwrap());
                }
            }
        }
    }

    #[test]
    fn defect_examples() {
        let r = ring_xyz();
        let tri = triangle(&r);
        let opts = SymbolicOptions::default();
        // Of the four generators of I^(2), only xyz escapes I^2.
        assert_eq!(symbolic_defect(&tri, 2, &opts).unwrap(), 1);

        let r2 = ring_xy();
        let p = ideal(&r2, &[vec![1, 0], vec![0, 1]]);
        assert_eq!(symbolic_defect(&p, 3, &opts).unwrap(), 0);
        let i = ideal(&r2, &[vec![2, 0], vec![1, 1]]);
        assert_eq!(symbolic_defect(&i, 2, &opts).unwrap(), 0);
    }
}
