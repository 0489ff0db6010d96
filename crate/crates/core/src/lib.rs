//! An exact computer-algebra kernel for the degrees of Segre classes of
//! subschemes of projective space.
//!
//! The pipeline: sparse multivariate polynomials over a prime field
//! ([`poly`], [`field`]), a deterministic Buchberger engine with ideal
//! quotients and saturations ([`gb`]), dimension and degree through
//! Hilbert series of initial ideals ([`hilbert`]), and the probabilistic
//! residual-intersection driver that produces the Segre degrees, the
//! Chern-Fulton degrees and, for smooth inputs, the topological Euler
//! characteristic ([`segre`]).

pub mod arith;
pub mod caps;
pub mod error;
pub mod field;
pub mod gb;
pub mod hilbert;
pub mod poly;
pub mod segre;

pub use caps::Caps;
pub use error::{Error, Result};
pub use field::{FieldContext, FieldElement, SplitMix64, DEFAULT_PRIME};
pub use gb::{
    buchberger, ideal_equals, ideal_quotient, in_ideal, intersect, is_unit_ideal, normal_form,
    quotient_by_ideal, s_polynomial, saturate_by_element, saturate_by_ideal, GroebnerBasis, Ideal,
};
pub use hilbert::{
    dim_degree, dim_degree_of_basis, hilbert_numerator, initial_ideal, HilbertData, MonomialIdeal,
};
pub use poly::{
    monomial_compare, monomials_of_degree, Monomial, MonomialOrder, Polynomial, PolynomialRing,
    Term,
};
pub use segre::{
    chern_fulton, sample_graded_element, segre_degrees, verify_bezout_identity, ChernFultonResult,
    SaturationStrategy, SegreConfig, SegreResult, SegreRun,
};
