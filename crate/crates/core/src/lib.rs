//! Exact commutative algebra for hypersurface singularities and blowup
//! algebras over the rationals.

pub mod blowup;
pub mod cli;
pub mod error;
pub mod groebner;
pub mod ideal;
pub mod limits;
pub mod monomial;
pub mod order;
pub mod point;
pub mod poly;
pub mod rational;
pub mod ring;
pub mod singularity;
pub mod text;

pub use blowup::{
    gradient_linear_type, is_linear_type, jacobian_linear_type, rees_ideal, symmetric_ideal,
    syzygy_entries_codim_check, LinearTypeOptions, LinearTypeVerdict, Method, PresentationIdeal,
};
pub use cli::{run, AnalysisRequest, Command, Report, Source};
pub use error::{Error, Result};
pub use groebner::{
    eliminate, groebner_basis, ideal_equal, krull_dimension, normal_form, quotient_k_dimension, standard_basis,
    syzygies, Basis, BasisKind, QuotientDim, SyzygyMatrix,
};
pub use ideal::{
    entries_ideal, ideal_quotient, minimal_generators_local, primary_component_at_point, saturation, Ideal,
};
pub use monomial::Monomial;
pub use order::{ModuleOrder, MonomialOrder, OrderKind, PositionRule};
pub use point::Point;
pub use poly::Polynomial;
pub use rational::Rational;
pub use ring::{Ring, RingContext};
pub use singularity::{
    classify_ade, genus, gradient_ideal, is_locally_eulerian, jacobian_ideal, milnor_number, multiplicity,
    quasi_homogeneous_weights, singular_points, socle_module_cyclic, tjurina_number, AdeFamily, AdeType,
    HypersurfaceInput, Setting, SingularPointReport,
};
pub use text::{parse_document, parse_polynomial, Document};
