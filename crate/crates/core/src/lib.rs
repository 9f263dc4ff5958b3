//! Multigraded Hilbert polynomials, Stanley filtrations and uniform
//! regularity bounds for monomial ideals in the Cox ring of a smooth
//! projective toric variety.
//!
//! ```
//! use toricreg::{projective_space, MonomialIdeal, quotient_hilbert_polynomial};
//!
//! let p2 = projective_space(2).unwrap();
//! let i = MonomialIdeal::parse("x1^4, x1^3*x2", 3).unwrap();
//! assert_eq!(quotient_hilbert_polynomial(&p2, &i).unwrap().to_string(), "3*t + 1");
//! ```

pub mod enumerate;
pub mod error;
pub mod face;
pub mod formats;
pub mod gotzmann;
pub mod hilbert;
pub mod hilbscheme;
pub mod lattice;
pub mod monomial;
pub mod poly;
pub mod regularity;
pub mod stanley;
pub mod toric;

pub use enumerate::{
    enumerate_saturated_ideals, enumerate_saturated_ideals_with, gotzmann_number, gotzmann_number_realized, gotzmann_upper_bound,
    graded_total_order, EnumerateOptions, Enumeration, FaceOrder, FoundIdeal,
};
pub use error::{Error, Result};
pub use face::Face;
pub use gotzmann::{enumerate_binomial_representations, gotzmann_representation, lex_ideal, BinomialRep, GotzmannRep};
pub use hilbert::{face_hilbert_polynomial, polynomial_of_pairs, quotient_hilbert_polynomial, ring_hilbert_polynomial};
pub use hilbscheme::{degree_set, degree_set_with, ideals_generated_in_degrees, DegreeSet, DegreeSetOptions};
pub use monomial::{
    b_saturate, hilbert_function, irreducible_decomposition, is_b_saturated, IrreducibleComponent, Monomial, MonomialIdeal,
};
pub use poly::{GradedOrder, MultiPoly};
pub use regularity::{
    bound_from_gotzmann_number, reg_bound_from_filtration, reg_bound_from_polynomial, upset_intersect, KUpset, PolynomialBound,
    RegularityAssumption,
};
pub use stanley::{
    decomposition_to_ideal, has_nice_property, nice_strategy, stanley_decompose, verify_stanley, DefaultChoice, NiceChoice, ScriptedChoice,
    StanleyPair, StanleyTree, VariableChoice, VerifyMode,
};
pub use toric::{
    build_variety, hirzebruch, product_of_projective_spaces, projective_space, BuildOptions, DegreeVector, Fan, NefCone, ToricVariety,
    UnimodularMap,
};
