//! Doctest hooks for the book chapters: every Rust snippet under `book/src`
//! runs with `cargo test --doc`, so the guide cannot drift from the library.

#[doc = include_str!("../../../book/src/introduction.md")]
mod introduction {}

#[doc = include_str!("../../../book/src/monomial-ideals.md")]
mod monomial_ideals {}

#[doc = include_str!("../../../book/src/primary-decomposition.md")]
mod primary_decomposition {}

#[doc = include_str!("../../../book/src/symbolic-powers.md")]
mod symbolic_powers {}

#[doc = include_str!("../../../book/src/polyhedra.md")]
mod polyhedra {}

#[doc = include_str!("../../../book/src/linear-programming.md")]
mod linear_programming {}

#[doc = include_str!("../../../book/src/asymptotic-invariants.md")]
mod asymptotic_invariants {}

#[doc = include_str!("../../../book/src/cli.md")]
mod cli {}
