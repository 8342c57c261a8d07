//! Proptest strategies shared by the module property tests.

use proptest::prelude::*;

use crate::ideal::MonomialIdeal;
use crate::ring::{Monomial, Ring};

const NAMES: [&str; 4] = ["x", "y", "z", "w"];

pub fn ring_with(nvars: usize) -> Ring {
    Ring::new(NAMES[..nvars].to_vec()).unwrap()
}

/// A proper nonzero monomial ideal in exactly `nvars` variables, with up to
/// `max_gens` generators and exponents at most `max_exp`.
pub fn arb_proper_ideal_in(
    nvars: usize,
    max_gens: usize,
    max_exp: u64,
) -> impl Strategy<Value = MonomialIdeal> {
    prop::collection::vec(prop::collection::vec(0..=max_exp, nvars), 1..=max_gens).prop_filter_map(
        "proper nonzero after minimalization",
        move |gens| {
            let ring = ring_with(nvars);
            let monomials = gens
                .into_iter()
                .map(|exps| Monomial::new(ring.clone(), exps))
                .collect();
            let ideal = MonomialIdeal::new(ring, monomials).ok()?;
            ideal.is_proper_nonzero().then_some(ideal)
        },
    )
}

/// A proper nonzero monomial ideal in up to `max_vars` variables, with up to
/// `max_gens` generators and exponents at most `max_exp`.
pub fn arb_proper_ideal(
    max_vars: usize,
    max_gens: usize,
    max_exp: u64,
) -> impl Strategy<Value = MonomialIdeal> {
    (1..=max_vars).prop_flat_map(move |nvars| arb_proper_ideal_in(nvars, max_gens, max_exp))
}

/// Two ideals sharing one ambient ring.
pub fn arb_ideal_pair(
    max_vars: usize,
    max_gens: usize,
    max_exp: u64,
) -> impl Strategy<Value = (MonomialIdeal, MonomialIdeal)> {
    (1..=max_vars).prop_flat_map(move |nvars| {
        (
            arb_proper_ideal_in(nvars, max_gens, max_exp),
            arb_proper_ideal_in(nvars, max_gens, max_exp),
        )
    })
}

/// Three ideals sharing one ambient ring.
pub fn arb_ideal_triple(
    max_vars: usize,
    max_gens: usize,
    max_exp: u64,
) -> impl Strategy<Value = (MonomialIdeal, MonomialIdeal, MonomialIdeal)> {
    (1..=max_vars).prop_flat_map(move |nvars| {
        (
            arb_proper_ideal_in(nvars, max_gens, max_exp),
            arb_proper_ideal_in(nvars, max_gens, max_exp),
            arb_proper_ideal_in(nvars, max_gens, max_exp),
        )
    })
}

/// A proper nonzero squarefree ideal.
pub fn arb_squarefree_ideal(
    max_vars: usize,
    max_gens: usize,
) -> impl Strategy<Value = MonomialIdeal> {
    arb_proper_ideal(max_vars, max_gens, 1)
}

/// A monomial in the ring of `ideal`, exponents at most `max_exp`.
pub fn arb_monomial_in(ideal: &MonomialIdeal, max_exp: u64) -> impl Strategy<Value = Monomial> {
    let ring = ideal.ring().clone();
    prop::collection::vec(0..=max_exp, ring.num_vars())
        .prop_map(move |exps| Monomial::new(ring.clone(), exps))
}

/// Every monomial of the ring with exponents at most `max_exp`.
pub fn exponent_box(ring: &Ring, max_exp: u64) -> Vec<Monomial> {
    let n = ring.num_vars();
    let mut out = Vec::new();
    let mut exps = vec![0u64; n];
    loop {
        out.push(Monomial::new(ring.clone(), exps.clone()));
        let mut i = 0;
        loop {
            if i == n {
                return out;
            }
            exps[i] += 1;
            if exps[i] <= max_exp {
                break;
            }
            exps[i] = 0;
            i += 1;
        }
    }
}
