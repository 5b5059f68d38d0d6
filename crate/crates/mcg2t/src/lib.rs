//! Exact word calculus for the mapping class group of the twice punctured
//! torus, aimed at the words that present (1,1)-knots in lens spaces.
//!
//! The crate provides:
//!
//! - [`word`]: the generator alphabet, parsing, free reduction, inversion,
//!   composition, and expansion of the derived letters into basic twists;
//! - [`omega`]: the homomorphism onto SL(2,Z) and the lens space a word's
//!   knot lives in;
//! - [`pi1`]: the action on the rank-3 free fundamental group, equality of
//!   mapping-class words up to inner automorphisms, and free coordinates
//!   for kernel words;
//! - [`standard`]: continued fractions, the trivial-knot words for each
//!   lens space, and the kernel/standard decomposition;
//! - [`knots`]: standard words for torus knots and two-bridge knots,
//!   including the even Conway expansion;
//! - [`group`], [`laurent`], [`matrix`]: knot group presentations, cyclic
//!   presentations of branched covers, Fox calculus, Alexander polynomials,
//!   Smith normal form, and the resultant cross-check for cover homology.
//!
//! All arithmetic is exact; there is no floating point anywhere.

pub mod error;
pub mod free;
pub mod group;
pub mod knots;
pub mod laurent;
pub mod matrix;
pub mod omega;
pub mod pi1;
pub mod standard;
pub mod word;

pub use error::{Error, Result};
pub use free::{Basis, FreeWord};
pub use group::{
    alexander_poly, branched_cover_homology, cyclic_presentation, cyclic_word, fox_derivative,
    fox_formula_order, shift_equivalent, torus_group_presentation, CyclicPresentation,
    HomologyResult, Presentation,
};
pub use knots::{
    even_continued_fraction, torus_knot_word, two_bridge_word, two_bridge_word_from_fraction,
    ConwayParams, TorusKnotSpec, TwoBridgeSpec,
};
pub use laurent::{resultant, torus_alexander, LaurentPolynomial};
pub use matrix::{bareiss_determinant, smith_normal_form, IntegerMatrix, SmithNormalForm};
pub use omega::{is_kernel, lens_of, omega, LensSpace, SL2Matrix};
pub use pi1::{auto_of, gen_auto, is_inner, mcg_equal, pushed_loop, FreeAutomorphism};
pub use standard::{adjust_rs, continued_fraction, psi_standard, standard_decompose, CFExpansion};
pub use word::{compose, expand, format_word, invert, parse_word, Gen, Word};
