//! Shared fixtures for the integration suites: a deterministic random-ideal
//! corpus and brute-force oracles that recompute expected values by direct
//! monomial enumeration and membership, independent of the library's
//! algebraic routines.

#![allow(dead_code)]

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use sympow::{Monomial, MonomialIdeal, Rational, Ring};

pub const NAMES: [&str; 4] = ["x", "y", "z", "w"];

pub fn ring_with(nvars: usize) -> Ring {
    Ring::new(NAMES[..nvars].to_vec()).unwrap()
}

/// Deterministic corpus of proper nonzero ideals: at most `max_vars`
/// variables, `max_gens` generators, exponents at most `max_exp`.
pub fn corpus(
    seed: u64,
    count: usize,
    max_vars: usize,
    max_gens: usize,
    max_exp: u64,
) -> Vec<MonomialIdeal> {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let nvars = rng.gen_range(2..=max_vars);
        let ring = ring_with(nvars);
        let ngens = rng.gen_range(1..=max_gens);
        let gens: Vec<Monomial> = (0..ngens)
            .map(|_| {
                let exps: Vec<u64> = (0..nvars).map(|_| rng.gen_range(0..=max_exp)).collect();
                Monomial::new(ring.clone(), exps)
            })
            .collect();
        let ideal = MonomialIdeal::new(ring, gens).unwrap();
        if ideal.is_proper_nonzero() {
            out.push(ideal);
        }
    }
    out
}

pub fn squarefree_corpus(
    seed: u64,
    count: usize,
    max_vars: usize,
    max_gens: usize,
) -> Vec<MonomialIdeal> {
    corpus(seed, count, max_vars, max_gens, 1)
}

// ---------------------------------------------------------------------------
// Brute-force oracles over raw exponent vectors
// ---------------------------------------------------------------------------

/// Componentwise `a <= b`.
pub fn divides(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn subtract(a: &[u64], b: &[u64]) -> Vec<u64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Membership of a monomial in `I^n` by direct search: the exponent vector
/// must dominate a sum of `n` generators.
pub fn in_ordinary_power(gens: &[Vec<u64>], n: u32, m: &[u64]) -> bool {
    if n == 0 {
        return true;
    }
    gens.iter()
        .filter(|g| divides(g, m))
        .any(|g| in_ordinary_power(gens, n - 1, &subtract(m, g)))
}

/// Membership in the contraction of `I^n` at the monomial prime on the
/// variables `prime`: multiply by a high power of the product of the other
/// variables and test ordinary membership. The exponent `k` is monotone, so
/// one sufficiently large value decides.
pub fn in_contraction(gens: &[Vec<u64>], n: u32, m: &[u64], prime: &[usize]) -> bool {
    let nvars = m.len();
    let k = gens
        .iter()
        .flat_map(|g| g.iter())
        .max()
        .copied()
        .unwrap_or(0)
        * u64::from(n)
        + 1;
    let boosted: Vec<u64> = (0..nvars)
        .map(|j| if prime.contains(&j) { m[j] } else { m[j] + k })
        .collect();
    in_ordinary_power(gens, n, &boosted)
}

/// Membership in the symbolic power defined by the given prime family.
pub fn in_symbolic_power(gens: &[Vec<u64>], n: u32, m: &[u64], primes: &[Vec<usize>]) -> bool {
    primes.iter().all(|p| in_contraction(gens, n, m, p))
}

/// Minimal generators of the symbolic power, by enumerating the exponent box
/// `[0, n·maxexp]^nvars` (which contains every minimal generator: component
/// generators only shrink under contraction, and intersections take lcms)
/// and extracting the divisibility-minimal members.
pub fn oracle_symbolic_power_generators(
    gens: &[Vec<u64>],
    n: u32,
    primes: &[Vec<usize>],
    nvars: usize,
) -> Vec<Vec<u64>> {
    let bound = gens
        .iter()
        .flat_map(|g| g.iter())
        .max()
        .copied()
        .unwrap_or(0)
        * u64::from(n);
    let mut members = Vec::new();
    let mut exps = vec![0u64; nvars];
    'enumerate: loop {
        if in_symbolic_power(gens, n, &exps, primes) {
            members.push(exps.clone());
        }
        let mut i = 0;
        loop {
            if i == nvars {
                break 'enumerate;
            }
            exps[i] += 1;
            if exps[i] <= bound {
                break;
            }
            exps[i] = 0;
            i += 1;
        }
    }
    let mut minimal: Vec<Vec<u64>> = Vec::new();
    // degree-ascending scan keeps exactly the minimal members
    members.sort_by_key(|m| m.iter().sum::<u64>());
    for m in members {
        if !minimal.iter().any(|g| divides(g, &m)) {
            minimal.push(m);
        }
    }
    sort_canonical(&mut minimal);
    minimal
}

/// Canonical generator order: degree ascending, then descending
/// lexicographic.
pub fn sort_canonical(gens: &mut [Vec<u64>]) {
    gens.sort_by(|a, b| {
        let da: u64 = a.iter().sum();
        let db: u64 = b.iter().sum();
        da.cmp(&db).then_with(|| b.cmp(a))
    });
}

/// Oracle containment `I^(a) ⊆ I^b`: every oracle generator of the symbolic
/// power is an ordinary-power member.
pub fn oracle_symbolic_in_ordinary(
    gens: &[Vec<u64>],
    a: u32,
    b: u32,
    primes: &[Vec<usize>],
    nvars: usize,
) -> bool {
    oracle_symbolic_power_generators(gens, a, primes, nvars)
        .iter()
        .all(|m| in_ordinary_power(gens, b, m))
}

/// Oracle for the smallest `a` with `I^(a) ⊆ I^b`.
pub fn oracle_containment_given_b(
    gens: &[Vec<u64>],
    b: u32,
    primes: &[Vec<usize>],
    nvars: usize,
    a_cap: u32,
) -> u32 {
    (b..=a_cap)
        .find(|&a| oracle_symbolic_in_ordinary(gens, a, b, primes, nvars))
        .expect("containment holds by the cap")
}

/// Oracle for the largest `b` with `I^(a) ⊆ I^b`.
pub fn oracle_containment_given_a(
    gens: &[Vec<u64>],
    a: u32,
    primes: &[Vec<usize>],
    nvars: usize,
) -> u32 {
    (1..=a)
        .rev()
        .find(|&b| oracle_symbolic_in_ordinary(gens, a, b, primes, nvars))
        .expect("b = 1 always holds")
}

/// Oracle symbolic defect: generators of the symbolic power outside the
/// ordinary power.
pub fn oracle_symbolic_defect(
    gens: &[Vec<u64>],
    n: u32,
    primes: &[Vec<usize>],
    nvars: usize,
) -> usize {
    oracle_symbolic_power_generators(gens, n, primes, nvars)
        .iter()
        .filter(|m| !in_ordinary_power(gens, n, m))
        .count()
}

/// Oracle initial-degree sequence `α(I^(m))/m`.
pub fn oracle_alpha_sequence(
    gens: &[Vec<u64>],
    k: u32,
    primes: &[Vec<usize>],
    nvars: usize,
) -> Vec<Rational> {
    (1..=k)
        .map(|m| {
            let alpha = oracle_symbolic_power_generators(gens, m, primes, nvars)
                .iter()
                .map(|g| g.iter().sum::<u64>())
                .min()
                .expect("symbolic powers of nonzero ideals are nonzero");
            Rational::new(alpha.into(), u64::from(m).into())
        })
        .collect()
}

/// Helper: the library ideal for a raw generator list.
pub fn ideal_of(ring: &Ring, gens: &[Vec<u64>]) -> MonomialIdeal {
    MonomialIdeal::from_exponents(ring, gens).unwrap()
}

pub fn exponents_of(ideal: &MonomialIdeal) -> Vec<Vec<u64>> {
    ideal
        .generators()
        .iter()
        .map(|g| g.exponents().to_vec())
        .collect()
}
