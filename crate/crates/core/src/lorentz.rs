//! Vector algebra of Minkowski 3-space with signature (-, +, +).
//!
//! The first coordinate `x0` is the timelike one.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use crate::error::{GeometryError, Result};
use crate::tolerances::NULL_REL;

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct LorentzVector {
    pub x0: f64,
    pub x1: f64,
    pub x2: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    Positive,
    Negative,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CausalClass {
    Timelike(Orientation),
    Spacelike,
    Lightlike,
}

impl CausalClass {
    pub fn is_timelike(self) -> bool {
        matches!(self, CausalClass::Timelike(_))
    }
}

/// Which of the four Lorentzian angle constructions applied.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AngleKind {
    /// Two spacelike vectors spanning a spacelike plane; circular angle.
    SpacelikeCircular,
    /// Two spacelike vectors spanning a timelike plane; hyperbolic angle.
    SpacelikeHyperbolic,
    /// One spacelike and one timelike vector; hyperbolic angle via sinh.
    Mixed,
    /// Two timelike vectors with the same time orientation; hyperbolic angle via cosh.
    Timelike,
}

/// Causal character of the plane spanned by two vectors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PlaneClass {
    Spacelike,
    Timelike,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LorentzianAngle {
    /// Radians for [`AngleKind::SpacelikeCircular`], rapidity otherwise.
    pub value: f64,
    pub kind: AngleKind,
    pub plane: PlaneClass,
}

impl LorentzVector {
    pub const fn new(x0: f64, x1: f64, x2: f64) -> Self {
        Self { x0, x1, x2 }
    }

    pub const fn zero() -> Self {
        Self::new(0.0, 0.0, 0.0)
    }

    pub fn to_array(self) -> [f64; 3] {
        [self.x0, self.x1, self.x2]
    }

    pub fn is_finite(self) -> bool {
        self.x0.is_finite() && self.x1.is_finite() && self.x2.is_finite()
    }

    /// `<u, v> = -u0 v0 + u1 v1 + u2 v2`.
    pub fn inner(self, other: Self) -> f64 {
        -self.x0 * other.x0 + self.x1 * other.x1 + self.x2 * other.x2
    }

    /// `sqrt(|<u, u>|)`.
    pub fn norm(self) -> f64 {
        self.inner(self).abs().sqrt()
    }

    pub fn euclidean_norm_sq(self) -> f64 {
        self.x0 * self.x0 + self.x1 * self.x1 + self.x2 * self.x2
    }

    pub fn euclidean_norm(self) -> f64 {
        self.euclidean_norm_sq().sqrt()
    }

    /// Light-cone half-width used when classifying this vector.
    pub fn null_tolerance(self) -> f64 {
        NULL_REL * self.euclidean_norm_sq().max(1.0)
    }

    pub fn classify(self) -> CausalClass {
        let q = self.inner(self);
        let tol = self.null_tolerance();
        if q < -tol {
            if self.x0 > 0.0 {
                CausalClass::Timelike(Orientation::Positive)
            } else {
                CausalClass::Timelike(Orientation::Negative)
            }
        } else if q > tol {
            CausalClass::Spacelike
        } else {
            CausalClass::Lightlike
        }
    }

    /// Lorentzian vector product: the metric dual of the Euclidean cross product,
    /// `(u2 v1 - u1 v2, u2 v0 - u0 v2, u0 v1 - u1 v0)`.
    ///
    /// The result is Lorentz-orthogonal to both factors. For a positively
    /// oriented Frenet frame `{t, n, b}` of a timelike curve this gives
    /// `t ^ n = b`, `n ^ b = -t`, `b ^ t = n`.
    pub fn cross(self, other: Self) -> Self {
        let (u, v) = (self, other);
        Self::new(u.x2 * v.x1 - u.x1 * v.x2, u.x2 * v.x0 - u.x0 * v.x2, u.x0 * v.x1 - u.x1 * v.x0)
    }

    /// Euclidean cross product of the coordinate triples.
    pub fn euclidean_cross(self, other: Self) -> Self {
        let (u, v) = (self, other);
        Self::new(u.x1 * v.x2 - u.x2 * v.x1, u.x2 * v.x0 - u.x0 * v.x2, u.x0 * v.x1 - u.x1 * v.x0)
    }

    /// Rescale to unit Lorentzian norm. Null vectors are rejected.
    pub fn normalized(self) -> Result<Self> {
        if self.classify() == CausalClass::Lightlike {
            return Err(GeometryError::NullInput);
        }
        Ok(self * (1.0 / self.norm()))
    }

    pub fn max_abs_diff(self, other: Self) -> f64 {
        let d = self - other;
        d.x0.abs().max(d.x1.abs()).max(d.x2.abs())
    }
}

impl fmt::Display for LorentzVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match f.precision() {
            Some(p) => write!(f, "({:.p$}, {:.p$}, {:.p$})", self.x0, self.x1, self.x2),
            None => write!(f, "({}, {}, {})", self.x0, self.x1, self.x2),
        }
    }
}

impl Add for LorentzVector {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.x0 + o.x0, self.x1 + o.x1, self.x2 + o.x2)
    }
}

impl AddAssign for LorentzVector {
    fn add_assign(&mut self, o: Self) {
        *self = *self + o;
    }
}

impl Sub for LorentzVector {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.x0 - o.x0, self.x1 - o.x1, self.x2 - o.x2)
    }
}

impl Neg for LorentzVector {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.x0, -self.x1, -self.x2)
    }
}

impl Mul<f64> for LorentzVector {
    type Output = Self;
    fn mul(self, k: f64) -> Self {
        Self::new(self.x0 * k, self.x1 * k, self.x2 * k)
    }
}

impl Mul<LorentzVector> for f64 {
    type Output = LorentzVector;
    fn mul(self, v: LorentzVector) -> LorentzVector {
        v * self
    }
}

pub fn inner(u: LorentzVector, v: LorentzVector) -> f64 {
    u.inner(v)
}

pub fn norm(u: LorentzVector) -> f64 {
    u.norm()
}

pub fn classify(u: LorentzVector) -> CausalClass {
    u.classify()
}

pub fn cross(u: LorentzVector, v: LorentzVector) -> LorentzVector {
    u.cross(v)
}

/// Plain coordinate determinant with rows `u`, `v`, `w`. No metric involved.
pub fn triple(u: LorentzVector, v: LorentzVector, w: LorentzVector) -> f64 {
    u.x0 * (v.x1 * w.x2 - v.x2 * w.x1) - u.x1 * (v.x0 * w.x2 - v.x2 * w.x0) + u.x2 * (v.x0 * w.x1 - v.x1 * w.x0)
}

/// Lorentzian angle between two non-null vectors.
///
/// Dispatch follows the causal characters of the arguments:
/// spacelike/spacelike uses the Gram determinant to tell a spacelike plane
/// (circular angle, `arccos`) from a timelike plane (`arcosh`);
/// spacelike/timelike in either order uses `arsinh`;
/// two timelike vectors of equal orientation use `arcosh`.
/// Hyperbolic cases take `|<u, v>|`, so the result is symmetric and non-negative.
pub fn lorentz_angle(u: LorentzVector, v: LorentzVector) -> Result<LorentzianAngle> {
    if !u.is_finite() || !v.is_finite() {
        return Err(GeometryError::NonFinite);
    }
    let (cu, cv) = (u.classify(), v.classify());
    if cu == CausalClass::Lightlike || cv == CausalClass::Lightlike {
        return Err(GeometryError::NullInput);
    }
    let g = u.inner(v);
    let scale = u.norm() * v.norm();
    let ratio = g.abs() / scale;
    match (cu, cv) {
        (CausalClass::Spacelike, CausalClass::Spacelike) => {
            let gram = u.inner(u) * v.inner(v) - g * g;
            let tol = NULL_REL * (u.euclidean_norm_sq() * v.euclidean_norm_sq()).max(1.0);
            if gram > tol {
                Ok(LorentzianAngle {
                    value: (g / scale).clamp(-1.0, 1.0).acos(),
                    kind: AngleKind::SpacelikeCircular,
                    plane: PlaneClass::Spacelike,
                })
            } else if gram < -tol {
                Ok(LorentzianAngle {
                    value: ratio.max(1.0).acosh(),
                    kind: AngleKind::SpacelikeHyperbolic,
                    plane: PlaneClass::Timelike,
                })
            } else {
                Err(GeometryError::DegeneratePlane)
            }
        }
        (CausalClass::Timelike(a), CausalClass::Timelike(b)) => {
            if a != b {
                return Err(GeometryError::OrientationMismatch);
            }
            Ok(LorentzianAngle {
                value: ratio.max(1.0).acosh(),
                kind: AngleKind::Timelike,
                plane: PlaneClass::Timelike,
            })
        }
        _ => Ok(LorentzianAngle { value: ratio.asinh(), kind: AngleKind::Mixed, plane: PlaneClass::Timelike }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const S3: f64 = 1.732_050_807_568_877_2;

    fn v(a: f64, b: f64, c: f64) -> LorentzVector {
        LorentzVector::new(a, b, c)
    }

    #[test]
    fn inner_examples() {
        assert_eq!(inner(v(1.0, 0.0, 0.0), v(1.0, 0.0, 0.0)), -1.0);
        assert_eq!(inner(v(0.0, 1.0, 0.0), v(0.0, 0.0, 1.0)), 0.0);
        let t0 = v(2.0 / S3, 0.0, 1.0 / S3);
        assert!((inner(t0, t0) + 1.0).abs() < 1e-15);
    }

    #[test]
    fn norm_examples() {
        assert_eq!(norm(v(0.0, 0.0, 0.0)), 0.0);
        assert_eq!(norm(v(1.0, 1.0, 0.0)), 0.0);
        assert_eq!(norm(v(0.0, 3.0, 4.0)), 5.0);
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify(v(1.0, 0.0, 0.0)), CausalClass::Timelike(Orientation::Positive));
        assert_eq!(classify(v(-2.0, 0.5, 0.0)), CausalClass::Timelike(Orientation::Negative));
        assert_eq!(classify(v(0.0, 1.0, 0.0)), CausalClass::Spacelike);
        assert_eq!(classify(v(1.0, 1.0, 0.0)), CausalClass::Lightlike);
        // inside the tolerance band around the cone
        assert_eq!(classify(v(1.0, 1.0 + 1e-12, 0.0)), CausalClass::Lightlike);
    }

    #[test]
    fn cross_examples() {
        assert_eq!(cross(v(0.0, 1.0, 0.0), v(0.0, 0.0, 1.0)), v(-1.0, 0.0, 0.0));
        assert_eq!(cross(v(1.0, 0.0, 0.0), v(1.0, 0.0, 0.0)), v(0.0, 0.0, 0.0));
        let t0 = v(2.0 / S3, 0.0, 1.0 / S3);
        let n0 = v(0.0, 1.0, 0.0);
        let b0 = v(1.0 / S3, 0.0, 2.0 / S3);
        assert!(cross(t0, n0).max_abs_diff(b0) < 1e-15);
        assert!(cross(n0, b0).max_abs_diff(-t0) < 1e-15);
        assert!(cross(b0, t0).max_abs_diff(n0) < 1e-15);
    }

    #[test]
    fn triple_examples() {
        assert_eq!(triple(v(1.0, 0.0, 0.0), v(0.0, 1.0, 0.0), v(0.0, 0.0, 1.0)), 1.0);
        assert_eq!(triple(v(1.0, 0.0, 0.0), v(1.0, 0.0, 0.0), v(0.0, 0.0, 1.0)), 0.0);
        assert_eq!(triple(v(2.0, 0.0, 0.0), v(0.0, 3.0, 0.0), v(0.0, 0.0, 4.0)), 24.0);
    }

    #[test]
    fn angle_examples() {
        let a = lorentz_angle(v(0.0, 1.0, 0.0), v(0.0, 0.0, 1.0)).unwrap();
        assert_eq!(a.kind, AngleKind::SpacelikeCircular);
        assert!((a.value - std::f64::consts::FRAC_PI_2).abs() < 1e-15);

        let a = lorentz_angle(v(1f64.sinh(), 1f64.cosh(), 0.0), v(1.0, 0.0, 0.0)).unwrap();
        assert_eq!(a.kind, AngleKind::Mixed);
        assert!((a.value - 1.0).abs() < 1e-12);

        let a = lorentz_angle(v(1.0, 0.0, 0.0), v(1f64.cosh(), 1f64.sinh(), 0.0)).unwrap();
        assert_eq!(a.kind, AngleKind::Timelike);
        assert!((a.value - 1.0).abs() < 1e-7);
    }

    #[test]
    fn angle_spacelike_vectors_in_timelike_plane() {
        // both spacelike, spanning the x0-x1 plane
        let u = v(0.0, 1.0, 0.0);
        let w = v(0.5f64.sinh(), 0.5f64.cosh(), 0.0);
        let a = lorentz_angle(u, w).unwrap();
        assert_eq!(a.kind, AngleKind::SpacelikeHyperbolic);
        assert_eq!(a.plane, PlaneClass::Timelike);
        assert!((a.value - 0.5).abs() < 1e-7);
    }

    #[test]
    fn angle_errors() {
        assert_eq!(lorentz_angle(v(1.0, 1.0, 0.0), v(0.0, 1.0, 0.0)), Err(GeometryError::NullInput));
        assert_eq!(lorentz_angle(v(1.0, 0.0, 0.0), v(-2.0, 0.5, 0.0)), Err(GeometryError::OrientationMismatch));
        // spacelike pair spanning a plane tangent to the light cone
        assert_eq!(lorentz_angle(v(0.0, 0.0, 1.0), v(1.0, 1.0, 1.0)), Err(GeometryError::DegeneratePlane));
        assert_eq!(lorentz_angle(v(f64::NAN, 0.0, 0.0), v(1.0, 0.0, 0.0)), Err(GeometryError::NonFinite));
    }

    fn comp() -> impl Strategy<Value = f64> {
        -10.0f64..10.0
    }

    fn vec3() -> impl Strategy<Value = LorentzVector> {
        (comp(), comp(), comp()).prop_map(|(a, b, c)| v(a, b, c))
    }

    proptest! {
        #[test]
        fn inner_bilinear_symmetric(u in vec3(), w in vec3(), x in vec3(), a in comp(), b in comp()) {
            let lhs = inner(u * a + w * b, x);
            let rhs = a * inner(u, x) + b * inner(w, x);
            let scale = 1.0 + (a.abs() + b.abs()) * 1e3;
            prop_assert!((lhs - rhs).abs() <= 1e-12 * scale * 100.0);
            prop_assert_eq!(inner(u, x), inner(x, u));
        }

        #[test]
        fn cross_orthogonal_and_antisymmetric(u in vec3(), w in vec3()) {
            let c = cross(u, w);
            let scale = 1.0 + u.euclidean_norm_sq() * w.euclidean_norm();
            prop_assert!(inner(c, u).abs() <= 1e-12 * scale * 10.0);
            prop_assert!(inner(c, w).abs() <= 1e-12 * scale * 10.0);
            prop_assert_eq!(c, -cross(w, u));
        }

        #[test]
        fn classify_under_negation(u in vec3()) {
            let (a, b) = (classify(u), classify(-u));
            match (a, b) {
                (CausalClass::Timelike(p), CausalClass::Timelike(q)) => prop_assert_ne!(p, q),
                _ => prop_assert_eq!(a, b),
            }
        }

        #[test]
        fn triple_alternating(u in vec3(), w in vec3(), x in vec3()) {
            let d = triple(u, w, x);
            let tol = 1e-12 * (1.0 + u.euclidean_norm() * w.euclidean_norm() * x.euclidean_norm());
            prop_assert!((triple(w, x, u) - d).abs() <= tol);
            prop_assert!((triple(x, u, w) - d).abs() <= tol);
            prop_assert!((triple(w, u, x) + d).abs() <= tol);
            prop_assert!((triple(u, x, w) + d).abs() <= tol);
            prop_assert!(triple(u, u, x).abs() <= tol);
        }

        #[test]
        fn angle_symmetric(u in vec3(), w in vec3()) {
            let a = lorentz_angle(u, w);
            let b = lorentz_angle(w, u);
            match (a, b) {
                (Ok(a), Ok(b)) => {
                    prop_assert_eq!(a.kind, b.kind);
                    prop_assert!((a.value - b.value).abs() <= 1e-9 * (1.0 + a.value));
                }
                (Err(a), Err(b)) => prop_assert_eq!(a, b),
                _ => prop_assert!(false, "asymmetric success"),
            }
        }
    }
}
