//! Exact computation of the dimensions of exposed faces of the cones of
//! nonnegative forms and sums of squares.
//!
//! For a finite set of projective points `Γ`, the face of forms vanishing on `Γ`
//! is measured through the degree components of the vanishing ideal `I(Γ)`,
//! its symbolic square `I^(2)(Γ)` (forms singular on `Γ`) and its ordinary
//! square `I²(Γ)`. Everything is computed over the rationals; floating point
//! appears only in the numeric nonnegativity evidence of [`certificates`].

pub mod certificates;
pub mod constructions;
pub mod error;
pub mod gap;
pub mod ideal;
pub mod independence;
pub mod linalg;
pub mod poly;
pub mod rational;
pub mod sampling;

pub use certificates::{
    build_certificate, check_double_vanishing, epsilon_search, numeric_min_on_sphere, roundness_at,
    Certificate, EpsilonSearch, NotSosProof, NumericMin, SearchOptions,
};
pub use constructions::{
    interpolant_at, seven_point_scheme, six_point_scheme, snd_bar_points, snd_basis, snd_points,
    Q3Variant, SevenPointScheme, SixPointScheme, DEFAULT_TRIPLES, EXAMPLE_SIX_POINTS,
    SEVEN_POINTS_PERTURBED, SEVEN_POINTS_UNPERTURBED,
};
pub use error::{Error, Result};
pub use gap::{
    ah_count, gap_profile, max_gap, min_k_positive, naive_gap, ternary_prediction, GapProfile,
    TernaryPrediction, TernaryRelation,
};
pub use ideal::{
    alpha, face_report, ordinary_square_component, symbolic_square_component, vanishing_component,
    FaceReport, PointConfiguration,
};
pub use independence::{
    condition2_holds, hilbert_function, is_d_independent, is_general_linear_position,
    IndependenceReport, Verdict,
};
pub use linalg::{contains, kernel_of_rows, nullspace, rank, rref, span, Matrix, Subspace};
pub use poly::{binomial, linear_form, monomial_basis, Form, Monomial, ProjectivePoint};
pub use rational::Rational;
pub use sampling::{random_configuration, random_configuration_bounded, Requirement};
