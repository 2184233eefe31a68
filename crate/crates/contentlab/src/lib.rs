//! A laboratory for the content theory of finite commutative ring
//! extensions.
//!
//! `contentlab` constructs finite commutative rings from explicit operation
//! tables, builds free algebras over them, computes content ideals, and
//! decides — by exhaustive enumeration — whether an extension is McCoy, a
//! weak content algebra (in both of its characterizations), a semicontent
//! algebra, a content algebra (Dedekind–Mertens), or residually McCoy for a
//! family of ideals.  A harness generates instance corpora and
//! machine-checks the equivalences and implications these notions satisfy
//! over finite bases, reporting a structured witness for every failure.
//!
//! Finite rings keep everything decidable: each ring carries its full
//! addition and multiplication tables, the ideal lattice is enumerable, and
//! every finite commutative ring is Noetherian and zero-dimensional, so the
//! strongest forms of the equivalence theorems apply to every instance.
//!
//! # Quick start
//!
//! ```
//! use contentlab::{FiniteRing, FreeAlgebra};
//! use contentlab::properties::is_mccoy;
//!
//! // R = F2[x]/(x^4), S = R[y]/(y^2 - x^3)
//! let z2 = FiniteRing::zmod(2)?;
//! let (r, x) = FiniteRing::truncated(&z2, 4)?;
//! let s = FreeAlgebra::quadratic(&r, &x.pow(3))?;
//!
//! let y = s.gen().unwrap();
//! assert_eq!((&y * &y).content().to_string(), "(x^3)");
//! assert!(!is_mccoy(&s)?.holds);
//! # Ok::<(), contentlab::Error>(())
//! ```
//!
//! # Examples
//!
//! Each major capability has a runnable example:
//!
//! | example | shows |
//! |---|---|
//! | `rings_and_arithmetic` | building Z/n, products, truncations, quotients; classification |
//! | `ideal_lattice` | enumerating ideals; radical, annihilator, colon, primality |
//! | `content_ideals` | content of algebra elements, direct vs. defining intersection |
//! | `property_checkers` | the individual decision procedures and their witnesses |
//! | `cusp_algebra` | the flagship `R[y]/(y^2 - x^3)` instance over a truncated base |
//! | `residue_algebras` | base change S/IS and the residually McCoy property |
//! | `localization` | saturated multiplicative sets and the localization lemmas |
//! | `monoid_algebras` | group/monoid algebras from operation-table files |
//! | `theorem_suite` | corpus-wide verification of the equivalence theorems |
//! | `search_counterexamples` | predicate search, with open-question predicates flagged |
//! | `descriptors` | the text grammar for rings, algebras, and elements |
//!
//! ```bash
//! cargo run -p contentlab --example cusp_algebra
//! ```
//!
//! The same functionality is scriptable through the thin `contentlab`
//! binary (`analyze`, `content`, `check`, `verify-theorems`,
//! `verify-example1`, `search`); see the crate README.

mod bits;
mod error;

pub mod algebra;
pub mod cli;
pub mod finring;
pub mod harness;
pub mod ideals;
pub mod properties;

pub use algebra::{AlgebraElement, AlgebraMap, FreeAlgebra, MonoidTable};
pub use error::{Error, Result};
pub use finring::{are_isomorphic, Caps, ElementClasses, FiniteRing, RingElement, RingMap};
pub use ideals::{enumerate_ideals, spectrum, Ideal, IdealFilter, IdealOp, SaturatedMultSet};
pub use properties::{DmOutcome, Verdict, Witness};
