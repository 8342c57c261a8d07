//! Exact rational polyhedra: inequality (H) and vertex/ray (V)
//! representations, Fourier–Motzkin projection, Newton polyhedra of monomial
//! ideals, and the symbolic polyhedron.
//!
//! An `HPolyhedron` is a list of inequalities `a·x ≥ b` over a fixed ambient
//! dimension, kept in a canonical form: every inequality is scaled to a
//! primitive integer vector, duplicates and constant rows are removed, rows
//! are sorted, and (after [`HPolyhedron::canonicalize`]) every remaining row
//! is certified irredundant by linear programming. The empty polyhedron is
//! canonically `0·x ≥ 1`.
//!
//! Vertex and ray enumeration works by exhaustive basis enumeration: each
//! vertex is cut out by `dim` independent tight inequalities, each extreme
//! ray of the recession cone by `dim - 1`. Inputs here are desk scale, and
//! the method is easy to audit against the LP cross-checks.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeSet;

use crate::decompose;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::linalg;
use crate::lp;
use crate::rational::Rational;
use crate::symbolic::{localize_at_prime, SymbolicOptions};

/// A single constraint `coeffs · x ≥ rhs`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Inequality {
    pub coeffs: Vec<Rational>,
    pub rhs: Rational,
}

impl Inequality {
    pub fn new(coeffs: Vec<Rational>, rhs: Rational) -> Self {
        Inequality { coeffs, rhs }
    }

    pub fn evaluate(&self, point: &[Rational]) -> Rational {
        dot(&self.coeffs, point)
    }

    pub fn satisfied_by(&self, point: &[Rational]) -> bool {
        self.evaluate(point) >= self.rhs
    }

    fn is_constant(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Scale by the positive rational that makes all entries coprime
    /// integers.
    fn scaled_primitive(&self) -> Inequality {
        let mut entries = self.coeffs.clone();
        entries.push(self.rhs.clone());
        let ints = primitive_integer_vector(&entries);
        let mut coeffs: Vec<Rational> = ints.into_iter().map(Rational::from_integer).collect();
        let rhs = coeffs.pop().expect("rhs entry");
        Inequality { coeffs, rhs }
    }
}

pub(crate) fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    debug_assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

/// Scale a rational vector to a primitive integer vector (gcd 1), keeping
/// the sign. The zero vector stays zero.
pub(crate) fn primitive_integer_vector(v: &[Rational]) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for x in v {
        lcm = lcm.lcm(x.denom());
    }
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    let mut gcd = BigInt::zero();
    for x in &ints {
        gcd = gcd.gcd(x);
    }
    if gcd.is_zero() || gcd.is_one() {
        return ints;
    }
    ints.into_iter().map(|x| x / &gcd).collect()
}

/// Flip the sign so the first nonzero entry is positive.
fn lex_positive(mut v: Vec<BigInt>) -> Vec<BigInt> {
    if let Some(first) = v.iter().find(|x| !x.is_zero()) {
        if first.is_negative() {
            for x in &mut v {
                *x = -x.clone();
            }
        }
    }
    v
}

/// H-representation of a convex polyhedron.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HPolyhedron {
    dim: usize,
    inequalities: Vec<Inequality>,
}

impl HPolyhedron {
    /// Build from raw inequalities with the cheap canonicalization: scaling,
    /// constant-row handling, deduplication, sorting. Certified redundancy
    /// removal is [`HPolyhedron::canonicalize`].
    pub fn from_inequalities(dim: usize, inequalities: Vec<Inequality>) -> Result<Self> {
        for ineq in &inequalities {
            if ineq.coeffs.len() != dim {
                return Err(Error::DimensionMismatch(ineq.coeffs.len(), dim));
            }
        }
        let rows = light_canonical_rows(inequalities);
        match rows {
            None => Ok(HPolyhedron::empty(dim)),
            Some(rows) => Ok(HPolyhedron {
                dim,
                inequalities: rows,
            }),
        }
    }

    /// The empty polyhedron, canonically `0·x ≥ 1`.
    pub fn empty(dim: usize) -> Self {
        HPolyhedron {
            dim,
            inequalities: vec![Inequality::new(
                vec![Rational::zero(); dim],
                Rational::one(),
            )],
        }
    }

    /// The nonnegative orthant `x_i ≥ 0`.
    pub fn orthant(dim: usize) -> Self {
        let mut inequalities = Vec::with_capacity(dim);
        for i in 0..dim {
            let mut coeffs = vec![Rational::zero(); dim];
            coeffs[i] = Rational::one();
            inequalities.push(Inequality::new(coeffs, Rational::zero()));
        }
        HPolyhedron { dim, inequalities }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn inequalities(&self) -> &[Inequality] {
        &self.inequalities
    }

    pub fn is_marked_empty(&self) -> bool {
        self.inequalities
            .iter()
            .any(|i| i.is_constant() && i.rhs.is_positive())
    }

    pub fn contains_point(&self, point: &[Rational]) -> bool {
        self.inequalities.iter().all(|i| i.satisfied_by(point))
    }

    /// Full canonical form. Infeasible systems collapse to the canonical
    /// empty form. Otherwise: implicit equalities (inequalities tight on the
    /// whole feasible set, detected by LP) are presented as paired
    /// inequalities of the reduced-row-echelon basis of the equality
    /// system; the remaining rows are reduced modulo that equality space,
    /// scaled primitive, and LP-pruned to irredundancy. The result is a
    /// unique presentation of the feasible set.
    pub fn canonicalize(&self) -> HPolyhedron {
        if !lp::is_feasible(self) {
            return HPolyhedron::empty(self.dim);
        }

        // Split rows into implicit equalities and genuine inequalities.
        let mut implicit_augmented: Vec<Vec<Rational>> = Vec::new();
        let mut strict: Vec<Inequality> = Vec::new();
        for row in &self.inequalities {
            let tight_everywhere = matches!(
                lp::maximize_raw(self, &row.coeffs),
                lp::LpOutcome::Optimal { value, .. } if value == row.rhs
            );
            if tight_everywhere {
                let mut augmented = row.coeffs.clone();
                augmented.push(row.rhs.clone());
                implicit_augmented.push(augmented);
            } else {
                strict.push(row.clone());
            }
        }

        let (echelon, pivots) = linalg::reduced_row_echelon(&implicit_augmented);
        // Feasibility rules out a pivot in the augmented column.
        debug_assert!(!pivots.contains(&self.dim));

        let mut rows: Vec<Inequality> = Vec::new();
        for eq in &echelon {
            let (coeffs, rhs) = split_augmented(eq);
            let forward = Inequality::new(coeffs.clone(), rhs.clone()).scaled_primitive();
            let backward =
                Inequality::new(coeffs.into_iter().map(|c| -c).collect(), -rhs).scaled_primitive();
            rows.push(forward);
            rows.push(backward);
        }
        let num_equality_rows = rows.len();

        // Reduce the strict rows modulo the equality space: on the feasible
        // set the constraint is unchanged, and the presentation becomes
        // independent of which multiples of equalities the input carried.
        let mut reduced: Vec<Inequality> = Vec::new();
        for row in strict {
            let mut coeffs = row.coeffs;
            let mut rhs = row.rhs;
            for (eq, &pivot) in echelon.iter().zip(&pivots) {
                let factor = coeffs[pivot].clone();
                if factor.is_zero() {
                    continue;
                }
                for (c, e) in coeffs.iter_mut().zip(eq.iter()) {
                    let delta = &factor * e;
                    *c = &*c - delta;
                }
                let delta = &factor * &eq[self.dim];
                rhs -= delta;
            }
            reduced.push(Inequality::new(coeffs, rhs));
        }
        // A reduced row that became constant is implied by the equalities.
        let reduced = light_canonical_rows(reduced)
            .expect("feasible systems cannot reduce to an infeasible constant");
        rows.extend(reduced);

        // Iterative one-at-a-time removal, only among the non-equality rows,
        // keeps the feasible set intact and ends irredundant.
        let mut i = num_equality_rows;
        while i < rows.len() {
            let mut rest = rows.clone();
            let row = rest.remove(i);
            let rest_poly = HPolyhedron {
                dim: self.dim,
                inequalities: rest.clone(),
            };
            if implied_by(&rest_poly, &row) {
                rows = rest;
            } else {
                i += 1;
            }
        }
        rows.sort();
        HPolyhedron {
            dim: self.dim,
            inequalities: rows,
        }
    }

    /// Intersection: concatenated constraint systems in canonical form.
    pub fn intersect(polyhedra: &[HPolyhedron]) -> Result<HPolyhedron> {
        let Some(first) = polyhedra.first() else {
            return Err(Error::EmptyVertexSet);
        };
        let dim = first.dim;
        let mut rows = Vec::new();
        for p in polyhedra {
            if p.dim != dim {
                return Err(Error::DimensionMismatch(p.dim, dim));
            }
            rows.extend(p.inequalities.iter().cloned());
        }
        Ok(HPolyhedron::from_inequalities(dim, rows)?.canonicalize())
    }
}

/// Split an augmented row `(a | b)` encoding `a·x = b`.
fn split_augmented(augmented: &[Rational]) -> (Vec<Rational>, Rational) {
    let (rhs, coeffs) = augmented.split_last().expect("augmented row");
    (coeffs.to_vec(), rhs.clone())
}

/// Is `row` implied by `p`? Infeasible `p` implies anything; otherwise the
/// minimum of `row.coeffs · x` over `p` must not drop below `row.rhs`.
fn implied_by(p: &HPolyhedron, row: &Inequality) -> bool {
    match lp::minimize_raw(p, &row.coeffs) {
        lp::LpOutcome::Infeasible => true,
        lp::LpOutcome::Unbounded { .. } => false,
        lp::LpOutcome::Optimal { value, .. } => value >= row.rhs,
    }
}

/// Cheap canonicalization shared by the constructor and the eliminator:
/// scale rows primitive, drop trivially-true constant rows, report `None`
/// when a constant row is infeasible, dedupe equal coefficient vectors
/// keeping the largest right-hand side, sort.
fn light_canonical_rows(rows: Vec<Inequality>) -> Option<Vec<Inequality>> {
    let mut scaled = Vec::with_capacity(rows.len());
    for row in rows {
        let row = row.scaled_primitive();
        if row.is_constant() {
            if row.rhs.is_positive() {
                return None;
            }
            continue;
        }
        scaled.push(row);
    }
    scaled.sort();
    // Sorted ascending by (coeffs, rhs): the last row of an equal-coeff
    // group carries the binding (largest) rhs.
    let mut out: Vec<Inequality> = Vec::with_capacity(scaled.len());
    for row in scaled {
        if let Some(last) = out.last() {
            if last.coeffs == row.coeffs {
                let last = out.last_mut().expect("nonempty");
                last.rhs = row.rhs;
                continue;
            }
        }
        out.push(row);
    }
    Some(out)
}

// ---------------------------------------------------------------------------
// Fourier–Motzkin elimination
// ---------------------------------------------------------------------------

#[derive(Clone, Debug)]
struct TrackedRow {
    coeffs: Vec<Rational>,
    rhs: Rational,
    /// Original row indices this row combines; Kohler's bound prunes rows
    /// that combine more than `eliminated + 1` originals.
    history: BTreeSet<usize>,
}

impl TrackedRow {
    fn scaled(mut self) -> Self {
        let ineq = Inequality::new(self.coeffs, self.rhs).scaled_primitive();
        self.coeffs = ineq.coeffs;
        self.rhs = ineq.rhs;
        self
    }

    fn is_constant(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }
}

/// Result of eliminating variables: rows over the original index space with
/// zeroed coefficients in eliminated positions, or `None` when the system is
/// recognized infeasible along the way.
struct Eliminator {
    rows: Vec<TrackedRow>,
    eliminated: usize,
    lp_prune_threshold: usize,
}

impl Eliminator {
    fn new(rows: Vec<TrackedRow>) -> Self {
        Eliminator {
            rows,
            eliminated: 0,
            lp_prune_threshold: 60,
        }
    }

    /// Eliminate one variable. Returns false when the system turned out
    /// infeasible (a constant row with positive rhs appeared).
    fn eliminate(&mut self, var: usize) -> bool {
        let mut zero = Vec::new();
        let mut positive = Vec::new();
        let mut negative = Vec::new();
        for row in self.rows.drain(..) {
            match row.coeffs[var].cmp(&Rational::zero()) {
                std::cmp::Ordering::Equal => zero.push(row),
                std::cmp::Ordering::Greater => positive.push(row),
                std::cmp::Ordering::Less => negative.push(row),
            }
        }
        self.eliminated += 1;
        let mut combined = zero;
        for p in &positive {
            for n in &negative {
                let history: BTreeSet<usize> = p.history.union(&n.history).copied().collect();
                if history.len() > self.eliminated + 1 {
                    continue;
                }
                // alpha·p + beta·n with alpha = -n[var] > 0, beta = p[var] > 0
                let alpha = -n.coeffs[var].clone();
                let beta = p.coeffs[var].clone();
                let coeffs: Vec<Rational> = p
                    .coeffs
                    .iter()
                    .zip(&n.coeffs)
                    .map(|(pc, nc)| &alpha * pc + &beta * nc)
                    .collect();
                debug_assert!(coeffs[var].is_zero());
                let rhs = &alpha * &p.rhs + &beta * &n.rhs;
                combined.push(TrackedRow {
                    coeffs,
                    rhs,
                    history,
                });
            }
        }
        if !self.compress(combined) {
            return false;
        }
        if self.rows.len() > self.lp_prune_threshold {
            self.lp_prune();
        }
        true
    }

    /// Scale, drop constants, dedupe keeping the tightest rhs and the
    /// smallest history.
    fn compress(&mut self, rows: Vec<TrackedRow>) -> bool {
        let mut scaled: Vec<TrackedRow> = Vec::with_capacity(rows.len());
        for row in rows {
            let row = row.scaled();
            if row.is_constant() {
                if row.rhs.is_positive() {
                    return false;
                }
                continue;
            }
            scaled.push(row);
        }
        scaled.sort_by(|a, b| {
            a.coeffs
                .cmp(&b.coeffs)
                .then_with(|| a.rhs.cmp(&b.rhs))
                .then_with(|| a.history.len().cmp(&b.history.len()))
        });
        let mut out: Vec<TrackedRow> = Vec::with_capacity(scaled.len());
        for row in scaled {
            if let Some(last) = out.last_mut() {
                if last.coeffs == row.coeffs {
                    // Same direction: the larger rhs is binding. On a tie,
                    // keep the smaller history for Kohler's bound.
                    if row.rhs > last.rhs
                        || (row.rhs == last.rhs && row.history.len() < last.history.len())
                    {
                        *last = row;
                    }
                    continue;
                }
            }
            out.push(row);
        }
        self.rows = out;
        true
    }

    /// Safety valve for elimination blowups: certified redundancy removal
    /// on the intermediate system.
    fn lp_prune(&mut self) {
        let dim = self.rows.first().map_or(0, |r| r.coeffs.len());
        let mut i = 0;
        while i < self.rows.len() {
            if self.rows.len() == 1 {
                break;
            }
            let mut rest: Vec<Inequality> = Vec::with_capacity(self.rows.len() - 1);
            for (j, row) in self.rows.iter().enumerate() {
                if j != i {
                    rest.push(Inequality::new(row.coeffs.clone(), row.rhs.clone()));
                }
            }
            let rest_poly = HPolyhedron {
                dim,
                inequalities: rest,
            };
            let row = Inequality::new(self.rows[i].coeffs.clone(), self.rows[i].rhs.clone());
            if implied_by(&rest_poly, &row) {
                self.rows.remove(i);
            } else {
                i += 1;
            }
        }
    }
}

/// Project a system of inequalities over `total_dim` variables onto the
/// first `keep_dim` coordinates by eliminating the rest, in ascending index
/// order.
fn project_onto_prefix(
    rows: Vec<(Vec<Rational>, Rational)>,
    total_dim: usize,
    keep_dim: usize,
) -> Result<HPolyhedron> {
    let tracked = rows
        .into_iter()
        .enumerate()
        .map(|(i, (coeffs, rhs))| TrackedRow {
            coeffs,
            rhs,
            history: BTreeSet::from([i]),
        })
        .collect();
    let mut eliminator = Eliminator::new(tracked);
    for var in keep_dim..total_dim {
        if !eliminator.eliminate(var) {
            return Ok(HPolyhedron::empty(keep_dim));
        }
    }
    let inequalities = eliminator
        .rows
        .into_iter()
        .map(|row| {
            debug_assert!(row.coeffs[keep_dim..].iter().all(Zero::is_zero));
            Inequality::new(row.coeffs[..keep_dim].to_vec(), row.rhs)
        })
        .collect();
    Ok(HPolyhedron::from_inequalities(keep_dim, inequalities)?.canonicalize())
}

// ---------------------------------------------------------------------------
// Newton polyhedron and symbolic polyhedron
// ---------------------------------------------------------------------------

/// The Newton polyhedron of a nonzero monomial ideal: the convex hull of
/// the generator exponent vectors plus the nonnegative orthant.
///
/// Built by eliminating the hull multipliers from
/// `x = Σ λ_v·v + s`, `λ ≥ 0`, `Σλ = 1`, `s ≥ 0`.
pub fn newton_polyhedron(ideal: &MonomialIdeal) -> Result<HPolyhedron> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let n = ideal.ring().num_vars();
    let k = ideal.num_generators();
    let total = n + k;
    let mut rows: Vec<(Vec<Rational>, Rational)> = Vec::with_capacity(n + k + 2);

    // x_j - Σ_v λ_v v_j ≥ 0 (the slack s_j folded into the inequality)
    for j in 0..n {
        let mut coeffs = vec![Rational::zero(); total];
        coeffs[j] = Rational::one();
        for (i, g) in ideal.generators().iter().enumerate() {
            coeffs[n + i] = -Rational::from_integer(g.exponent(j).into());
        }
        rows.push((coeffs, Rational::zero()));
    }
    // λ_v ≥ 0
    for i in 0..k {
        let mut coeffs = vec![Rational::zero(); total];
        coeffs[n + i] = Rational::one();
        rows.push((coeffs, Rational::zero()));
    }
    // Σλ = 1 as two inequalities
    let mut sum = vec![Rational::zero(); total];
    for i in 0..k {
        sum[n + i] = Rational::one();
    }
    rows.push((sum.clone(), Rational::one()));
    let neg_sum: Vec<Rational> = sum.into_iter().map(|c| -c).collect();
    rows.push((neg_sum, -Rational::one()));

    project_onto_prefix(rows, total, n)
}

/// V-representation: vertices, extreme rays of the recession cone, and a
/// basis of the lineality space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VPolyhedron {
    pub dim: usize,
    pub vertices: Vec<Vec<Rational>>,
    pub rays: Vec<Vec<BigInt>>,
    pub lineality: Vec<Vec<BigInt>>,
    /// Set when the generating H-form was infeasible.
    pub empty: bool,
}

impl VPolyhedron {
    fn empty(dim: usize) -> Self {
        VPolyhedron {
            dim,
            vertices: vec![],
            rays: vec![],
            lineality: vec![],
            empty: true,
        }
    }
}

/// Enumerate size-`k` subsets of `0..n` in lexicographic order.
fn for_each_subset(n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    fn rec(start: usize, n: usize, k: usize, acc: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if acc.len() == k {
            f(acc);
            return;
        }
        let needed = k - acc.len();
        for i in start..=(n - needed) {
            acc.push(i);
            rec(i + 1, n, k, acc, f);
            acc.pop();
        }
    }
    if k > n {
        return;
    }
    let mut acc = Vec::with_capacity(k);
    rec(0, n, k, &mut acc, &mut f);
}

/// Vertex and ray enumeration by exhaustive basis enumeration.
pub fn h_to_v(p: &HPolyhedron) -> VPolyhedron {
    let dim = p.dim;
    if p.is_marked_empty() || !lp::is_feasible(p) {
        return VPolyhedron::empty(dim);
    }
    let rows = p.inequalities();
    let m = rows.len();
    let matrix: Vec<Vec<Rational>> = rows.iter().map(|r| r.coeffs.clone()).collect();

    // Lineality: directions on which every constraint is flat.
    let lineality_rational = linalg::kernel_basis(&matrix, dim);
    let lineality: Vec<Vec<BigInt>> = lineality_rational
        .iter()
        .map(|v| lex_positive(primitive_integer_vector(v)))
        .collect();

    // Vertices: dim independent tight constraints, feasibility at the
    // solution. Pointless when the lineality space is nonzero.
    let mut vertices: BTreeSet<Vec<Rational>> = BTreeSet::new();
    if lineality.is_empty() {
        for_each_subset(m, dim, |subset| {
            let sub_matrix: Vec<Vec<Rational>> =
                subset.iter().map(|&i| matrix[i].clone()).collect();
            let sub_rhs: Vec<Rational> = subset.iter().map(|&i| rows[i].rhs.clone()).collect();
            if let Some(x) = linalg::solve_unique(&sub_matrix, &sub_rhs) {
                if p.contains_point(&x) {
                    vertices.insert(x);
                }
            }
        });
    }

    // Extreme rays of the recession cone {A·x ≥ 0}: dim-1 independent tight
    // constraints and a feasible sign. A direction feasible both ways lies
    // in the lineality space and is not a ray.
    let mut rays: BTreeSet<Vec<BigInt>> = BTreeSet::new();
    if dim >= 1 {
        for_each_subset(m, dim - 1, |subset| {
            let sub_matrix: Vec<Vec<Rational>> =
                subset.iter().map(|&i| matrix[i].clone()).collect();
            let kernel = linalg::kernel_basis(&sub_matrix, dim);
            if kernel.len() != 1 {
                return;
            }
            let candidate = primitive_integer_vector(&kernel[0]);
            let as_rational: Vec<Rational> = candidate
                .iter()
                .map(|x| Rational::from_integer(x.clone()))
                .collect();
            let forward = matrix.iter().all(|a| !dot(a, &as_rational).is_negative());
            let backward = matrix.iter().all(|a| !dot(a, &as_rational).is_positive());
            match (forward, backward) {
                (true, false) => {
                    rays.insert(candidate);
                }
                (false, true) => {
                    rays.insert(candidate.into_iter().map(|x| -x).collect());
                }
                // Both: lineality direction. Neither: infeasible direction.
                _ => {}
            }
        });
    }

    VPolyhedron {
        dim,
        vertices: vertices.into_iter().collect(),
        rays: rays.into_iter().collect(),
        lineality,
        empty: false,
    }
}

/// H-representation from a V-representation, by eliminating the convex and
/// conic multipliers from `x = Σλ_i v_i + Σμ_j r_j + Σν_k l_k`.
pub fn v_to_h(v: &VPolyhedron) -> Result<HPolyhedron> {
    if v.empty {
        return Ok(HPolyhedron::empty(v.dim));
    }
    if v.vertices.is_empty() {
        return Err(Error::EmptyVertexSet);
    }
    let dim = v.dim;
    let nv = v.vertices.len();
    let nr = v.rays.len();
    let nl = v.lineality.len();
    let total = dim + nv + nr + nl;
    let mut rows: Vec<(Vec<Rational>, Rational)> = Vec::new();

    // x_j - Σλ_i v_i[j] - Σμ_j r_j[j] - Σν_k l_k[j] = 0, as two inequalities
    for j in 0..dim {
        let mut coeffs = vec![Rational::zero(); total];
        coeffs[j] = Rational::one();
        for (i, vert) in v.vertices.iter().enumerate() {
            coeffs[dim + i] = -vert[j].clone();
        }
        for (i, ray) in v.rays.iter().enumerate() {
            coeffs[dim + nv + i] = -Rational::from_integer(ray[j].clone());
        }
        for (i, line) in v.lineality.iter().enumerate() {
            coeffs[dim + nv + nr + i] = -Rational::from_integer(line[j].clone());
        }
        let neg: Vec<Rational> = coeffs.iter().map(|c| -c.clone()).collect();
        rows.push((coeffs, Rational::zero()));
        rows.push((neg, Rational::zero()));
    }
    // λ ≥ 0, Σλ = 1, μ ≥ 0; ν free
    for i in 0..nv {
        let mut coeffs = vec![Rational::zero(); total];
        coeffs[dim + i] = Rational::one();
        rows.push((coeffs, Rational::zero()));
    }
    let mut sum = vec![Rational::zero(); total];
    for i in 0..nv {
        sum[dim + i] = Rational::one();
    }
    let neg_sum: Vec<Rational> = sum.iter().map(|c| -c.clone()).collect();
    rows.push((sum, Rational::one()));
    rows.push((neg_sum, -Rational::one()));
    for i in 0..nr {
        let mut coeffs = vec![Rational::zero(); total];
        coeffs[dim + nv + i] = Rational::one();
        rows.push((coeffs, Rational::zero()));
    }

    project_onto_prefix(rows, total, dim)
}

/// The symbolic polyhedron: intersection over the inclusion-maximal
/// associated primes `P` (or the minimal primes, with `minimal_primes`) of
/// the Newton polyhedra of the contractions `I·R_P ∩ R`.
pub fn symbolic_polyhedron(ideal: &MonomialIdeal, opts: &SymbolicOptions) -> Result<HPolyhedron> {
    ideal.check_proper_nonzero()?;
    let mut primes = if opts.minimal_primes {
        decompose::minimal_primes(ideal)?
    } else {
        decompose::maximal_associated_primes(ideal)?
    };
    primes.sort();
    let parts = primes
        .iter()
        .map(|p| newton_polyhedron(&localize_at_prime(ideal, p)?))
        .collect::<Result<Vec<_>>>()?;
    HPolyhedron::intersect(&parts)
}

/// Summary block for a polyhedron: ambient dimension, polyhedron dimension,
/// lineality dimension, and facet/ray/vertex counts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct PolyhedronStats {
    pub ambient: usize,
    pub dim: usize,
    pub lineality: usize,
    pub facets: usize,
    pub rays: usize,
    pub vertices: usize,
}

/// Stats for a canonical-form H-polyhedron.
///
/// The polyhedron dimension is the ambient dimension minus the rank of the
/// implicit-equality subsystem (inequalities that are tight on the whole
/// feasible set, detected by LP).
pub fn polyhedron_stats(p: &HPolyhedron) -> PolyhedronStats {
    let v = h_to_v(p);
    if v.empty {
        return PolyhedronStats {
            ambient: p.dim,
            dim: 0,
            lineality: 0,
            facets: 0,
            rays: 0,
            vertices: 0,
        };
    }
    let mut implicit: Vec<Vec<Rational>> = Vec::new();
    for row in p.inequalities() {
        match lp::maximize_raw(p, &row.coeffs) {
            lp::LpOutcome::Optimal { value, .. } if value == row.rhs => {
                implicit.push(row.coeffs.clone());
            }
            _ => {}
        }
    }
    let dim = p.dim - linalg::rank(&implicit);
    PolyhedronStats {
        ambient: p.dim,
        dim,
        lineality: v.lineality.len(),
        facets: p.inequalities().len(),
        rays: v.rays.len(),
        vertices: v.vertices.len(),
    }
}
