//! Monomial ideals in canonical form, and the ideal algebra everything else
//! builds on: membership, containment, intersection, products and powers,
//! colon ideals, saturation, radicals, and initial degree.
//!
//! An ideal is stored as its unique minimal generating set, sorted by total
//! degree and then by descending lexicographic exponent order. Equality of
//! ideals is literal equality of canonical forms. The empty generator set is
//! the zero ideal; the single generator `1` is the unit ideal.

use std::fmt;

use crate::error::{Error, Result};
use crate::ring::{Monomial, Ring, VarSet};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    ring: Ring,
    gens: Vec<Monomial>,
}

/// Remove duplicates and divisible generators, and sort canonically.
///
/// The result is the unique minimal generating set of the ideal generated by
/// `gens`: among monomials, `g` is redundant exactly when another generator
/// divides it.
fn minimalize_vec(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort();
    gens.dedup();
    // Scanning in degree order means any divisor of a candidate has already
    // been kept: a strict divisor has strictly smaller degree, and equal
    // degree plus divisibility forces equality.
    let mut minimal: Vec<Monomial> = Vec::new();
    for g in gens {
        if !minimal.iter().any(|m| m.divides(&g)) {
            minimal.push(g);
        }
    }
    minimal
}

impl MonomialIdeal {
    /// The zero ideal (no generators).
    pub fn zero(ring: Ring) -> Self {
        MonomialIdeal { ring, gens: vec![] }
    }

    /// The unit ideal, generated by `1`.
    pub fn unit(ring: Ring) -> Self {
        let one = Monomial::one(ring.clone());
        MonomialIdeal {
            ring,
            gens: vec![one],
        }
    }

    /// Canonicalize a generating set: all monomials must share one ring.
    pub fn new(ring: Ring, gens: Vec<Monomial>) -> Result<Self> {
        for g in &gens {
            ring.check_same(g.ring())?;
        }
        Ok(MonomialIdeal {
            ring,
            gens: minimalize_vec(gens),
        })
    }

    /// Convenience constructor from raw exponent vectors.
    pub fn from_exponents(ring: &Ring, exps: &[Vec<u64>]) -> Result<Self> {
        let gens = exps
            .iter()
            .map(|e| {
                if e.len() != ring.num_vars() {
                    return Err(Error::DimensionMismatch(e.len(), ring.num_vars()));
                }
                Ok(Monomial::new(ring.clone(), e.clone()))
            })
            .collect::<Result<Vec<_>>>()?;
        MonomialIdeal::new(ring.clone(), gens)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// The canonical minimal generating set.
    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn num_generators(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    /// Proper and nonzero: the inputs most operations require.
    pub fn is_proper_nonzero(&self) -> bool {
        !self.is_zero() && !self.is_unit()
    }

    pub(crate) fn check_proper_nonzero(&self) -> Result<()> {
        if self.is_zero() {
            Err(Error::ZeroIdeal)
        } else if self.is_unit() {
            Err(Error::UnitIdeal)
        } else {
            Ok(())
        }
    }

    /// Membership: some generator divides `m`.
    pub fn contains(&self, m: &Monomial) -> Result<bool> {
        self.ring.check_same(m.ring())?;
        Ok(self.gens.iter().any(|g| g.divides(m)))
    }

    /// Ideal containment `self ⊆ other`: every generator of `self` is a
    /// member of `other`.
    pub fn is_subideal_of(&self, other: &MonomialIdeal) -> Result<bool> {
        self.ring.check_same(&other.ring)?;
        for g in &self.gens {
            if !other.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Intersection, generated by pairwise lcms.
    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.ring.check_same(&other.ring)?;
        if self.is_zero() || other.is_zero() {
            return Ok(MonomialIdeal::zero(self.ring.clone()));
        }
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for g in &self.gens {
            for h in &other.gens {
                gens.push(g.lcm(h));
            }
        }
        Ok(MonomialIdeal {
            ring: self.ring.clone(),
            gens: minimalize_vec(gens),
        })
    }

    /// n-ary intersection. The intersection over an empty list is the unit
    /// ideal (the whole ring).
    pub fn intersect_many(ring: &Ring, ideals: &[MonomialIdeal]) -> Result<MonomialIdeal> {
        let mut acc = MonomialIdeal::unit(ring.clone());
        for i in ideals {
            acc = acc.intersect(i)?;
        }
        Ok(acc)
    }

    /// Product, generated by pairwise products.
    pub fn multiply(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.ring.check_same(&other.ring)?;
        if self.is_zero() || other.is_zero() {
            return Ok(MonomialIdeal::zero(self.ring.clone()));
        }
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for g in &self.gens {
            for h in &other.gens {
                gens.push(g.checked_mul(h)?);
            }
        }
        Ok(MonomialIdeal {
            ring: self.ring.clone(),
            gens: minimalize_vec(gens),
        })
    }

    /// `n`-th power by repeated multiplication, minimalizing after each step.
    /// `power(I, 0)` is the unit ideal for every `I`.
    pub fn pow(&self, n: u32) -> Result<MonomialIdeal> {
        let mut acc = MonomialIdeal::unit(self.ring.clone());
        for _ in 0..n {
            acc = acc.multiply(self)?;
        }
        Ok(acc)
    }

    /// Colon by a monomial: each generator `g` maps to `g` with exponents
    /// `max(g_i - m_i, 0)`.
    pub fn colon_monomial(&self, m: &Monomial) -> Result<MonomialIdeal> {
        self.ring.check_same(m.ring())?;
        let gens = self.gens.iter().map(|g| g.saturating_div(m)).collect();
        Ok(MonomialIdeal {
            ring: self.ring.clone(),
            gens: minimalize_vec(gens),
        })
    }

    /// Colon by a monomial ideal: `I : J = ⋂_{g ∈ J} (I : g)`.
    pub fn colon_ideal(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.ring.check_same(&other.ring)?;
        if other.is_zero() {
            // I : (0) is the whole ring.
            return Ok(MonomialIdeal::unit(self.ring.clone()));
        }
        let mut acc = MonomialIdeal::unit(self.ring.clone());
        for g in &other.gens {
            acc = acc.intersect(&self.colon_monomial(g)?)?;
        }
        Ok(acc)
    }

    /// Saturation with respect to the product of a set of variables:
    /// `I : (∏_{i ∈ vars} x_i)^∞`.
    ///
    /// For monomial ideals this is computed in one pass by zeroing the
    /// `vars`-exponents of every generator: `m·(∏ x_i)^k` lands in `I` for
    /// some `k` exactly when a generator divides `m` away from `vars`.
    /// An empty set leaves the ideal unchanged.
    pub fn saturate_variables(&self, vars: &VarSet) -> MonomialIdeal {
        if vars.is_empty() || self.is_zero() {
            return self.clone();
        }
        let gens = self.gens.iter().map(|g| g.zero_on(vars)).collect();
        MonomialIdeal {
            ring: self.ring.clone(),
            gens: minimalize_vec(gens),
        }
    }

    /// Saturation with respect to the maximal ideal `(x_1, …, x_n)`:
    /// the fixed point of `K ↦ K : (x_1, …, x_n)`.
    ///
    /// This removes exactly the maximal-ideal-primary component of a primary
    /// decomposition. It differs from [`saturate_variables`] on the full
    /// variable set, which saturates by the single monomial `x_1⋯x_n` and
    /// inverts every variable at once.
    ///
    /// [`saturate_variables`]: MonomialIdeal::saturate_variables
    pub fn saturate_maximal(&self) -> Result<MonomialIdeal> {
        let n = self.ring.num_vars();
        let maximal = MonomialIdeal::new(
            self.ring.clone(),
            (0..n)
                .map(|i| Monomial::variable_power(self.ring.clone(), i, 1))
                .collect(),
        )?;
        let mut current = self.clone();
        loop {
            let next = current.colon_ideal(&maximal)?;
            if next == current {
                return Ok(current);
            }
            current = next;
        }
    }

    /// The radical: every exponent clamped to 1.
    pub fn radical(&self) -> MonomialIdeal {
        let gens = self.gens.iter().map(|g| g.radical()).collect();
        MonomialIdeal {
            ring: self.ring.clone(),
            gens: minimalize_vec(gens),
        }
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(|g| g.is_squarefree())
    }

    /// Union of the supports of the generators.
    pub fn support(&self) -> VarSet {
        let mut s = VarSet::EMPTY;
        for g in &self.gens {
            s = s.union(&g.support());
        }
        s
    }

    /// Initial degree: the least total degree of a nonzero element, realized
    /// by a minimal generator. Undefined for the zero ideal.
    pub fn initial_degree(&self) -> Result<u64> {
        if self.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        // Canonical order sorts by degree, so the first generator realizes it.
        Ok(self.gens[0].total_degree())
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}
