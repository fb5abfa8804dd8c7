//! Involute trajectory ruled surfaces over timelike curves in Minkowski 3-space.
//!
//! The pipeline runs from a unit-speed timelike curve ([`curve`], [`synthesis`])
//! through its Frenet and Darboux data ([`frenet`]) to the spacelike involute
//! and its frame ([`involute`]), and finally to ruled surfaces carried by that
//! frame: distribution parameter, developability, striction ([`ruled`],
//! [`striction`]) and developable angle profiles ([`profile`]).

// `!(x >= lo)` comparisons are deliberate: they also reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod curve;
pub mod error;
pub mod fd;
pub mod frenet;
pub mod involute;
pub mod lorentz;
pub mod profile;
pub mod ruled;
pub mod striction;
pub mod synthesis;
pub mod tolerances;

pub use curve::{reference_helix, DerivativeMode, ParamCurve, ScalarFn, VectorFn};
pub use error::{GeometryError, Result};
pub use frenet::{
    darboux_data, frenet_apparatus, is_general_helix, DarbouxCase, DarbouxData, FrenetApparatus, Trihedron,
};
pub use involute::{InvoluteCurve, InvoluteFrame};
pub use lorentz::{lorentz_angle, CausalClass, LorentzVector, LorentzianAngle, Orientation};
pub use profile::{theta_profile, ProfileKind, ThetaProfile};
pub use ruled::{
    classify_developability, make_direction, normal_binormal_ratio, Degeneracy, DevelopabilityReason,
    DevelopabilityReport, DrallResult, RulingDirection, TrajectoryRuledSurface,
};
pub use striction::{base_is_striction, striction_point, StrictionPoint};
pub use synthesis::{constant_curvature_curve, curve_from_curvature};
