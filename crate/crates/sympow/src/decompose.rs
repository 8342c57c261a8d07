//! Combinatorial irreducible and primary decomposition of monomial ideals,
//! associated and minimal primes, heights, and the minimal part.
//!
//! Everything here is exact: a monomial ideal decomposes into irreducible
//! ideals generated by pure variable powers, and the radicals of the primary
//! components are exactly the associated primes, each generated by a subset
//! of the variables. No Ext modules or resolutions are involved; the
//! combinatorics decides everything.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::ring::{Monomial, Ring, VarSet};

/// A monomial prime ideal: the ideal generated by a nonempty subset of the
/// variables. Its height is the number of variables.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VariablePrime {
    vars: Vec<usize>,
    mask: VarSet,
}

impl VariablePrime {
    pub fn new(vars: VarSet) -> Result<Self> {
        if vars.is_empty() {
            return Err(Error::BadVariableNames);
        }
        Ok(VariablePrime {
            vars: vars.indices(),
            mask: vars,
        })
    }

    pub fn mask(&self) -> VarSet {
        self.mask
    }

    pub fn variable_indices(&self) -> &[usize] {
        &self.vars
    }

    pub fn height(&self) -> usize {
        self.vars.len()
    }

    pub fn is_subset_of(&self, other: &VariablePrime) -> bool {
        self.mask.is_subset(&other.mask)
    }

    pub fn as_ideal(&self, ring: &Ring) -> MonomialIdeal {
        let gens = self
            .vars
            .iter()
            .map(|&i| Monomial::variable_power(ring.clone(), i, 1))
            .collect();
        MonomialIdeal::new(ring.clone(), gens).expect("prime generators share the ring")
    }

    pub fn display<'a>(&'a self, ring: &'a Ring) -> impl fmt::Display + 'a {
        struct D<'a>(&'a VariablePrime, &'a Ring);
        impl fmt::Display for D<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "(")?;
                for (i, &v) in self.0.vars.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{}", self.1.variable_name(v))?;
                }
                write!(f, ")")
            }
        }
        D(self, ring)
    }
}

/// An irreducible monomial ideal `(x_{i1}^{a1}, …, x_{ik}^{ak})`, stored as
/// the partial map variable index → exponent.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IrreducibleComponent {
    exps: Vec<(usize, u64)>,
}

impl IrreducibleComponent {
    fn new(mut exps: Vec<(usize, u64)>) -> Self {
        debug_assert!(!exps.is_empty());
        debug_assert!(exps.iter().all(|&(_, e)| e >= 1));
        exps.sort_unstable();
        IrreducibleComponent { exps }
    }

    pub fn exponents(&self) -> &[(usize, u64)] {
        &self.exps
    }

    /// The variables appearing in the component; its radical prime.
    pub fn support(&self) -> VarSet {
        VarSet::from_indices(&self.exps.iter().map(|&(i, _)| i).collect::<Vec<_>>())
    }

    pub fn as_ideal(&self, ring: &Ring) -> MonomialIdeal {
        let gens = self
            .exps
            .iter()
            .map(|&(i, e)| Monomial::variable_power(ring.clone(), i, e))
            .collect();
        MonomialIdeal::new(ring.clone(), gens).expect("component generators share the ring")
    }

    /// Pairwise redundancy filter: `self ⊇ other` as ideals exactly when
    /// every pure power of `other` lies in `self`, i.e. `self` maps each of
    /// `other`'s variables to a smaller-or-equal exponent.
    fn contains_component(&self, other: &IrreducibleComponent) -> bool {
        other.exps.iter().all(|&(var, e_other)| {
            self.exps
                .iter()
                .any(|&(v, e_self)| v == var && e_self <= e_other)
        })
    }
}

/// One primary component together with its radical prime.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimaryComponent {
    pub ideal: MonomialIdeal,
    pub radical: VariablePrime,
}

/// An irredundant primary decomposition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub components: Vec<PrimaryComponent>,
}

impl Decomposition {
    /// Intersection of all components; equals the decomposed ideal.
    pub fn intersection(&self, ring: &Ring) -> Result<MonomialIdeal> {
        let ideals: Vec<_> = self.components.iter().map(|c| c.ideal.clone()).collect();
        MonomialIdeal::intersect_many(ring, &ideals)
    }
}

/// Key for the memo cache: the canonical generator matrix.
fn memo_key(ideal: &MonomialIdeal) -> Vec<Vec<u64>> {
    ideal
        .generators()
        .iter()
        .map(|g| g.exponents().to_vec())
        .collect()
}

struct Splitter {
    ring: Ring,
    memo: HashMap<Vec<Vec<u64>>, Vec<IrreducibleComponent>>,
}

impl Splitter {
    /// Recursive splitting. The input is proper and nonzero; every ideal in
    /// the recursion tree contains the original, so that stays true.
    fn split(&mut self, ideal: &MonomialIdeal) -> Result<Vec<IrreducibleComponent>> {
        let key = memo_key(ideal);
        if let Some(hit) = self.memo.get(&key) {
            return Ok(hit.clone());
        }

        let result = match ideal
            .generators()
            .iter()
            .find(|g| g.as_pure_power().is_none())
        {
            None => {
                // Every minimal generator is a pure power: irreducible.
                // Minimality leaves at most one power per variable.
                let exps = ideal
                    .generators()
                    .iter()
                    .map(|g| g.as_pure_power().expect("checked above"))
                    .collect();
                vec![IrreducibleComponent::new(exps)]
            }
            Some(mixed) => {
                // Split off the full power of the lowest-index variable: for
                // m = x_i^a * m' with gcd(x_i^a, m') = 1,
                //   I = (I + (x_i^a)) ∩ (I + (m')).
                let (var, exp) = mixed
                    .support()
                    .iter()
                    .next()
                    .map(|i| (i, mixed.exponent(i)))
                    .expect("mixed generator has support");
                let pure = Monomial::variable_power(self.ring.clone(), var, exp);
                let rest = mixed.saturating_div(&pure);
                debug_assert!(!rest.is_one());

                let mut left_gens = ideal.generators().to_vec();
                left_gens.push(pure);
                let left = MonomialIdeal::new(self.ring.clone(), left_gens)?;

                let mut right_gens = ideal.generators().to_vec();
                right_gens.push(rest);
                let right = MonomialIdeal::new(self.ring.clone(), right_gens)?;

                let mut components = self.split(&left)?;
                components.extend(self.split(&right)?);
                components.sort();
                components.dedup();
                // Cheap pairwise filter; the full intersection-based scan
                // runs once at the top level.
                prune_dominated(&mut components);
                components
            }
        };

        self.memo.insert(key, result.clone());
        Ok(result)
    }
}

/// Drop components that contain another component (they contain the whole
/// intersection, so they are redundant).
fn prune_dominated(components: &mut Vec<IrreducibleComponent>) {
    let snapshot = components.clone();
    components.retain(|c| {
        !snapshot
            .iter()
            .any(|d| d != c && c.contains_component(d) && !d.contains_component(c))
    });
}

/// Irredundancy scan in canonical order: drop a component when the
/// intersection of the remaining ones already lies inside it.
fn prune_redundant_components(
    ring: &Ring,
    components: Vec<IrreducibleComponent>,
) -> Result<Vec<IrreducibleComponent>> {
    let mut kept = components;
    let mut i = 0;
    while i < kept.len() {
        let others: Vec<_> = kept
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, c)| c.as_ideal(ring))
            .collect();
        if others.is_empty() {
            break;
        }
        let rest = MonomialIdeal::intersect_many(ring, &others)?;
        if rest.is_subideal_of(&kept[i].as_ideal(ring))? {
            kept.remove(i);
        } else {
            i += 1;
        }
    }
    Ok(kept)
}

/// Irredundant irreducible decomposition of a proper nonzero monomial ideal.
pub fn irreducible_decomposition(ideal: &MonomialIdeal) -> Result<Vec<IrreducibleComponent>> {
    ideal.check_proper_nonzero()?;
    let mut splitter = Splitter {
        ring: ideal.ring().clone(),
        memo: HashMap::new(),
    };
    let mut components = splitter.split(ideal)?;
    components.sort();
    components.dedup();
    components = prune_redundant_components(ideal.ring(), components)?;
    Ok(components)
}

/// Primary decomposition: irreducible components grouped by radical and
/// intersected groupwise. The result is irredundant with pairwise distinct
/// radicals.
pub fn primary_decomposition(ideal: &MonomialIdeal) -> Result<Decomposition> {
    let irreducibles = irreducible_decomposition(ideal)?;
    let ring = ideal.ring();

    // Group by support; keys sorted for deterministic component order.
    let mut groups: Vec<(VarSet, Vec<IrreducibleComponent>)> = Vec::new();
    for c in irreducibles {
        let support = c.support();
        match groups.iter_mut().find(|(s, _)| *s == support) {
            Some((_, group)) => group.push(c),
            None => groups.push((support, vec![c])),
        }
    }
    groups.sort_by_key(|(support, _)| support.indices());

    let mut components = Vec::with_capacity(groups.len());
    for (support, group) in groups {
        let ideals: Vec<_> = group.iter().map(|c| c.as_ideal(ring)).collect();
        let ideal = MonomialIdeal::intersect_many(ring, &ideals)?;
        components.push(PrimaryComponent {
            ideal,
            radical: VariablePrime::new(support)?,
        });
    }
    Ok(Decomposition { components })
}

/// The associated primes: radicals of the primary components.
pub fn associated_primes(ideal: &MonomialIdeal) -> Result<Vec<VariablePrime>> {
    let decomposition = primary_decomposition(ideal)?;
    Ok(decomposition
        .components
        .into_iter()
        .map(|c| c.radical)
        .collect())
}

/// Inclusion-minimal associated primes.
pub fn minimal_primes(ideal: &MonomialIdeal) -> Result<Vec<VariablePrime>> {
    let primes = associated_primes(ideal)?;
    Ok(filter_inclusion(&primes, |p, q| q.is_subset_of(p)))
}

/// Inclusion-maximal associated primes. These are the only primes a
/// localization-contraction intersection needs: the contraction at a larger
/// prime is contained in the contraction at a smaller one.
pub fn maximal_associated_primes(ideal: &MonomialIdeal) -> Result<Vec<VariablePrime>> {
    let primes = associated_primes(ideal)?;
    Ok(filter_inclusion(&primes, |p, q| p.is_subset_of(q)))
}

/// Keep primes with no *other* prime related to them by `drop_if(p, other)`.
fn filter_inclusion(
    primes: &[VariablePrime],
    drop_if: impl Fn(&VariablePrime, &VariablePrime) -> bool,
) -> Vec<VariablePrime> {
    primes
        .iter()
        .filter(|p| !primes.iter().any(|q| q != *p && drop_if(p, q)))
        .cloned()
        .collect()
}

/// Height: the least height of a minimal prime.
pub fn height(ideal: &MonomialIdeal) -> Result<usize> {
    Ok(minimal_primes(ideal)?
        .iter()
        .map(|p| p.height())
        .min()
        .expect("proper nonzero ideals have at least one prime"))
}

/// Big height: the largest height of an associated prime.
pub fn big_height(ideal: &MonomialIdeal) -> Result<usize> {
    Ok(associated_primes(ideal)?
        .iter()
        .map(|p| p.height())
        .max()
        .expect("proper nonzero ideals have at least one prime"))
}

/// Intersection of the primary components whose radical is a minimal prime.
pub fn minimal_part(ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
    let decomposition = primary_decomposition(ideal)?;
    let minimal = minimal_primes(ideal)?;
    let picked: Vec<_> = decomposition
        .components
        .into_iter()
        .filter(|c| minimal.contains(&c.radical))
        .map(|c| c.ideal)
        .collect();
    MonomialIdeal::intersect_many(ideal.ring(), &picked)
}
