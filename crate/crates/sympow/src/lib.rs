//! Exact computation of symbolic powers of monomial ideals, together with
//! the polyhedral invariants that compare them to ordinary powers.
//!
//! The crate works entirely in exact arithmetic: monomials are exponent
//! vectors, ideals are canonical minimal generating sets, polyhedra carry
//! rational inequality and vertex descriptions, and the linear programs that
//! certify facets and optima run a rational simplex. There is no floating
//! point anywhere.
//!
//! The main entry points:
//!
//! - [`MonomialIdeal`] and its algebra (intersection, powers, colon,
//!   saturation) in [`ideal`];
//! - primary decomposition, associated primes, and heights in [`decompose`];
//! - symbolic powers, the equality and containment problems, and the
//!   symbolic defect in [`symbolic`];
//! - Newton and symbolic polyhedra with exact H/V conversion in
//!   [`polyhedron`];
//! - exact-rational linear programming in [`lp`];
//! - Waldschmidt constants, initial-degree sequences, and resurgence bounds
//!   in [`asymptotics`];
//! - the ideal-expression parser and the CLI output formats in [`parse`] and
//!   [`output`].
//!
//! ```
//! use sympow::{MonomialIdeal, Ring, SymbolicOptions};
//!
//! let ring = Ring::new(vec!["x", "y", "z"])?;
//! let ideal = MonomialIdeal::from_exponents(
//!     &ring,
//!     &[vec![1, 1, 0], vec![1, 0, 1], vec![0, 1, 1]],
//! )?;
//! let second = sympow::symbolic_power(&ideal, 2, &SymbolicOptions::default())?;
//! assert_eq!(second.to_string(), "(x*y*z, x^2*y^2, x^2*z^2, y^2*z^2)");
//! # Ok::<(), sympow::Error>(())
//! ```

pub mod asymptotics;
pub mod cli;
pub mod decompose;
pub mod error;
pub mod ideal;
mod linalg;
pub mod lp;
pub mod output;
pub mod parse;
pub mod polyhedron;
pub mod rational;
pub mod ring;
pub mod symbolic;

#[cfg(test)]
pub(crate) mod test_support;

#[cfg(doctest)]
mod book;

pub use asymptotics::{
    alpha_sequence, lower_bound_resurgence, waldschmidt_approx, waldschmidt_exact, WaldschmidtMode,
    WaldschmidtReport,
};
pub use decompose::{
    associated_primes, big_height, height, irreducible_decomposition, maximal_associated_primes,
    minimal_part, minimal_primes, primary_decomposition, Decomposition, IrreducibleComponent,
    PrimaryComponent, VariablePrime,
};
pub use error::{Error, Result};
pub use ideal::MonomialIdeal;
pub use lp::{solve, LpOutcome, LpProblem, Sense};
pub use polyhedron::{
    newton_polyhedron, symbolic_polyhedron, HPolyhedron, Inequality, PolyhedronStats, VPolyhedron,
};
pub use rational::Rational;
pub use ring::{Monomial, Ring, VarSet};
pub use symbolic::{
    containment_problem, containment_problem_given_a, is_symbolic_equal_ordinary,
    localize_at_prime, symbolic_defect, symbolic_power, Strategy, SymbolicOptions,
};
