//! Exact symbolic computation in free exponential groups.
//!
//! A free exponential group extends a free group `F(X)` by allowing
//! exponents from a commutative ring `A` containing the integers: powers
//! like `a^(3t^2+1)` behave like module scalars, compatibly with
//! multiplication and conjugation. This crate implements the group over the
//! built-in rings `Z[t]` and `Z` with everything exact:
//!
//! * reduced normal forms for elements of every tower level, with a
//!   deterministic stored representation (one form per group element);
//! * the word problem ([`Element`] equality, plus an independent left-to-right
//!   shift matcher as a cross-check);
//! * commutation, centralizers and maximal root extraction;
//! * the conjugacy problem with explicit conjugating witnesses;
//! * evaluation homomorphisms onto the free group (substituting integers for
//!   `t`), usable as a one-sided separation oracle;
//! * a self-verification toolkit: seeded random elements, axiom audits and
//!   equality-preserving obfuscation for test-vector generation.
//!
//! # Quick start
//!
//! ```
//! use expgroup::{Session, Ring};
//!
//! let mut session = Session::new(&["a", "b"], Ring::IntPoly, 0).unwrap();
//! let g = session.eval("a^(t)*b*b^-1*a^(t)").unwrap();
//! assert_eq!(session.show(&g), "a^(2*t)");
//!
//! // conjugacy with a verifying witness
//! let x = session.eval("a^(t)*b").unwrap();
//! let y = session.eval("b*a^(t)").unwrap();
//! let c = expgroup::conjugate_test(&x, &y).unwrap();
//! assert!(expgroup::equals(
//!     &expgroup::multiply(&expgroup::multiply(&expgroup::invert(&c), &x), &c),
//!     &y,
//! ));
//! ```
//!
//! The `examples/` directory walks through each capability; the `expgroup`
//! binary exposes them as a line-oriented command interface.

mod elem;
mod error;
mod normal;
mod oracle;
mod ops;
mod poly;
mod ring;
mod session;
mod word;

pub use elem::{Composite, Element, PowerFactor, RawExpr, Root};
pub use error::Error;
pub use normal::{conjugate, invert, multiply, normalize, pow_int};
pub use oracle::{
    axiom_audit, default_probe_points, obfuscate, random_element, random_element_with,
    run_vector_line, separation_probe, AxiomAudit, AxiomOutcome, GenParams, Verdict, VectorCase,
    OBFUSCATION_CATALOG_VERSION,
};
pub use ops::{
    centralizer, commutes, commutes_via_roots, conjugate_test, cyclic_reduce, equals,
    evaluate_hom, extract_root, power, power_membership, reduced_forms_match,
    CentralizerHandle, RootDecomposition,
};
pub use poly::Poly;
pub use ring::Ring;
pub use session::{CommandOutcome, Session};
pub use word::{Alphabet, GenId, Syllable, Word};
