//! Ambient polynomial rings, variable sets, and exponent-vector monomials.
//!
//! A ring here is nothing more than an ordered list of variable names: every
//! computation in this crate is coefficient-free, so the coefficient field is
//! never materialized. Monomials are exponent vectors over a shared ring.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Upper bound on the number of ring variables, so variable subsets fit in a
/// `u128` bitmask.
pub const MAX_VARS: usize = 128;

#[derive(Debug, PartialEq, Eq, Hash)]
struct RingInner {
    vars: Vec<String>,
}

/// An ambient polynomial ring, identified by its ordered variable list.
///
/// Cloning is cheap (shared pointer). Two rings are equal when their variable
/// lists are equal, regardless of how they were constructed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ring(Arc<RingInner>);

impl Ring {
    /// Build a ring from an ordered list of variable names.
    ///
    /// Names must be nonempty and pairwise distinct; at most [`MAX_VARS`]
    /// variables are supported.
    pub fn new<S: Into<String>>(vars: Vec<S>) -> Result<Self> {
        let vars: Vec<String> = vars.into_iter().map(Into::into).collect();
        if vars.is_empty() || vars.iter().any(|v| v.is_empty()) {
            return Err(Error::BadVariableNames);
        }
        if vars.len() > MAX_VARS {
            return Err(Error::TooManyVariables(vars.len()));
        }
        for (i, v) in vars.iter().enumerate() {
            if vars[..i].contains(v) {
                return Err(Error::BadVariableNames);
            }
        }
        Ok(Ring(Arc::new(RingInner { vars })))
    }

    pub fn num_vars(&self) -> usize {
        self.0.vars.len()
    }

    pub fn variables(&self) -> &[String] {
        &self.0.vars
    }

    pub fn variable_name(&self, index: usize) -> &str {
        &self.0.vars[index]
    }

    pub fn variable_index(&self, name: &str) -> Option<usize> {
        self.0.vars.iter().position(|v| v == name)
    }

    /// The set of all variables.
    pub fn full_set(&self) -> VarSet {
        VarSet::full(self.num_vars())
    }

    pub(crate) fn same(&self, other: &Ring) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.vars == other.0.vars
    }

    pub(crate) fn check_same(&self, other: &Ring) -> Result<()> {
        if self.same(other) {
            Ok(())
        } else {
            Err(Error::RingMismatch(
                self.variables().join(","),
                other.variables().join(","),
            ))
        }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.variables().join(","))
    }
}

/// A subset of the ring variables, with bitmask semantics.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VarSet {
    bits: u128,
}

impl VarSet {
    pub const EMPTY: VarSet = VarSet { bits: 0 };

    pub fn from_indices(indices: &[usize]) -> Self {
        let mut bits = 0u128;
        for &i in indices {
            debug_assert!(i < MAX_VARS);
            bits |= 1 << i;
        }
        VarSet { bits }
    }

    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VARS);
        if n == MAX_VARS {
            VarSet { bits: u128::MAX }
        } else {
            VarSet {
                bits: (1u128 << n) - 1,
            }
        }
    }

    pub fn insert(&mut self, index: usize) {
        debug_assert!(index < MAX_VARS);
        self.bits |= 1 << index;
    }

    pub fn contains(&self, index: usize) -> bool {
        index < MAX_VARS && self.bits & (1 << index) != 0
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_subset(&self, other: &VarSet) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn union(&self, other: &VarSet) -> VarSet {
        VarSet {
            bits: self.bits | other.bits,
        }
    }

    pub fn intersection(&self, other: &VarSet) -> VarSet {
        VarSet {
            bits: self.bits & other.bits,
        }
    }

    /// Complement within the first `n` variables.
    pub fn complement(&self, n: usize) -> VarSet {
        VarSet {
            bits: VarSet::full(n).bits & !self.bits,
        }
    }

    pub fn indices(&self) -> Vec<usize> {
        (0..MAX_VARS).filter(|&i| self.contains(i)).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..MAX_VARS).filter(move |&i| self.contains(i))
    }
}

/// A monomial: one nonnegative exponent per ring variable.
///
/// The all-zeros vector is the monomial `1`. Exponents are machine words;
/// arithmetic that would overflow is reported as an error rather than
/// wrapped.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    ring: Ring,
    exps: Vec<u64>,
}

impl Monomial {
    pub fn new(ring: Ring, exps: Vec<u64>) -> Self {
        assert_eq!(
            exps.len(),
            ring.num_vars(),
            "exponent vector length must match the ring"
        );
        Monomial { ring, exps }
    }

    pub fn one(ring: Ring) -> Self {
        let n = ring.num_vars();
        Monomial {
            ring,
            exps: vec![0; n],
        }
    }

    /// The monomial `x_i^e`.
    pub fn variable_power(ring: Ring, index: usize, e: u64) -> Self {
        let mut exps = vec![0; ring.num_vars()];
        exps[index] = e;
        Monomial { ring, exps }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn exponents(&self) -> &[u64] {
        &self.exps
    }

    pub fn exponent(&self, index: usize) -> u64 {
        self.exps[index]
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> u64 {
        self.exps.iter().sum()
    }

    /// Variables with positive exponent.
    pub fn support(&self) -> VarSet {
        let mut s = VarSet::EMPTY;
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                s.insert(i);
            }
        }
        s
    }

    /// Componentwise `<=`.
    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert!(self.ring.same(&other.ring));
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.ring.same(&other.ring));
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a.max(b))
            .collect();
        Monomial {
            ring: self.ring.clone(),
            exps,
        }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.ring.same(&other.ring));
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a.min(b))
            .collect();
        Monomial {
            ring: self.ring.clone(),
            exps,
        }
    }

    /// Product, with overflow detection.
    pub fn checked_mul(&self, other: &Monomial) -> Result<Monomial> {
        debug_assert!(self.ring.same(&other.ring));
        let mut exps = Vec::with_capacity(self.exps.len());
        for (&a, &b) in self.exps.iter().zip(&other.exps) {
            exps.push(a.checked_add(b).ok_or(Error::ExponentOverflow)?);
        }
        Ok(Monomial {
            ring: self.ring.clone(),
            exps,
        })
    }

    /// Exponentwise `max(a - b, 0)`: the generator image under the colon
    /// `(g) : m`.
    pub fn saturating_div(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.ring.same(&other.ring));
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a.saturating_sub(b))
            .collect();
        Monomial {
            ring: self.ring.clone(),
            exps,
        }
    }

    /// Copy with the exponents of `vars` set to zero.
    pub fn zero_on(&self, vars: &VarSet) -> Monomial {
        let exps = self
            .exps
            .iter()
            .enumerate()
            .map(|(i, &e)| if vars.contains(i) { 0 } else { e })
            .collect();
        Monomial {
            ring: self.ring.clone(),
            exps,
        }
    }

    /// Exponents clamped to at most 1.
    pub fn radical(&self) -> Monomial {
        let exps = self.exps.iter().map(|&e| e.min(1)).collect();
        Monomial {
            ring: self.ring.clone(),
            exps,
        }
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    /// `Some((var, e))` when the monomial is `x_var^e` with `e > 0`.
    pub fn as_pure_power(&self) -> Option<(usize, u64)> {
        let mut found = None;
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some((i, e));
            }
        }
        found
    }

    /// Canonical generator order: total degree ascending, then descending
    /// lexicographic on exponent vectors.
    fn canonical_cmp(&self, other: &Monomial) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| other.exps.cmp(&self.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.ring
            .variables()
            .cmp(other.ring.variables())
            .then_with(|| self.canonical_cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "{}", self.ring.variable_name(i))?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}
