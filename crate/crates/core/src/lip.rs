//! Scalar arithmetic of the Logarithmic Image Processing (LIP) model.
//!
//! Grey levels live on the extended interval `[-inf, M]`. The scale is
//! inverted with respect to the usual display convention: `0` is the white
//! extremity (no obstacle between source and sensor) and `M` is black
//! (nothing transmitted). Values below zero are light intensifiers.
//!
//! LIP addition `a + b - ab/M` models the superposition of two absorbing
//! obstacles. On `]-inf, M[` it forms a real vector space with neutral
//! element `0`, and the map `a -> -ln(1 - a/M)` (the "acute" transform) is
//! an order isomorphism onto the extended reals that turns LIP addition
//! into ordinary addition.
//!
//! The binary difference is implemented as `(a - b) / (1 - b/M)`. The
//! product form `(a - b)(1 - b/M)` that sometimes appears in print violates
//! `(a - b) + b = a` and is not used.

use crate::error::{Error, Result};

/// A grey level on the extended scale `[-inf, M]`.
pub type GreyValue = f64;

/// A grey level mapped through the acute transform, on `[-inf, +inf]`.
pub type AcuteValue = f64;

/// The upper bound `M` of the grey scale. All LIP operations are
/// parameterised by it.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct GreyScale(f64);

impl Default for GreyScale {
    /// `M = 256`, the usual choice for 8-bit images.
    fn default() -> Self {
        GreyScale(256.0)
    }
}

impl GreyScale {
    pub fn new(m: f64) -> Result<Self> {
        if m.is_finite() && m > 0.0 {
            Ok(GreyScale(m))
        } else {
            Err(Error::InvalidScale(m))
        }
    }

    #[inline]
    pub fn m(self) -> f64 {
        self.0
    }

    fn check(self, a: GreyValue) -> Result<()> {
        if a.is_nan() {
            Err(Error::NotANumber)
        } else if a > self.0 {
            Err(Error::AboveScale(a, self.0))
        } else {
            Ok(())
        }
    }

    /// LIP addition `a + b - ab/M`.
    ///
    /// `M` is absorbing and `-inf` is absorbing against any value below `M`.
    /// The pairing of `-inf` with `M` has no meaningful value and is an
    /// error.
    pub fn plus(self, a: GreyValue, b: GreyValue) -> Result<GreyValue> {
        self.check(a)?;
        self.check(b)?;
        let m = self.0;
        let a_low = a == f64::NEG_INFINITY;
        let b_low = b == f64::NEG_INFINITY;
        if (a_low && b == m) || (b_low && a == m) {
            return Err(Error::UndefinedSum);
        }
        Ok(self.plus_ext(a, b))
    }

    /// LIP addition without range checks. `b` must be finite and below `M`.
    #[inline]
    pub(crate) fn plus_ext(self, a: GreyValue, b: GreyValue) -> GreyValue {
        let m = self.0;
        if a == m || b == m {
            m
        } else if a == f64::NEG_INFINITY || b == f64::NEG_INFINITY {
            f64::NEG_INFINITY
        } else {
            a + b - a * b / m
        }
    }

    /// The LIP opposite `-a / (1 - a/M)`.
    ///
    /// `-inf` and `M` are exchanged in the limit, so `negate(-inf) = M`;
    /// `M` itself has no opposite.
    pub fn negate(self, a: GreyValue) -> Result<GreyValue> {
        self.check(a)?;
        if a == self.0 {
            return Err(Error::NoOpposite);
        }
        Ok(self.negate_ext(a))
    }

    #[inline]
    pub(crate) fn negate_ext(self, a: GreyValue) -> GreyValue {
        if a == f64::NEG_INFINITY {
            self.0
        } else {
            -a / (1.0 - a / self.0)
        }
    }

    /// The LIP difference `(a - b) / (1 - b/M)`, inverse of [`plus`](Self::plus)
    /// in its first argument.
    pub fn minus(self, a: GreyValue, b: GreyValue) -> Result<GreyValue> {
        self.check(a)?;
        self.check(b)?;
        if b == self.0 {
            return Err(Error::UndefinedDifference(b));
        }
        if b == f64::NEG_INFINITY {
            // (a - b) / (1 - b/M) tends to M for every a above -inf.
            return if a == f64::NEG_INFINITY {
                Err(Error::UndefinedDifference(b))
            } else {
                Ok(self.0)
            };
        }
        Ok(self.minus_ext(a, b))
    }

    /// LIP difference without range checks. `b` must be finite and below `M`.
    #[inline]
    pub(crate) fn minus_ext(self, a: GreyValue, b: GreyValue) -> GreyValue {
        let m = self.0;
        if a == m {
            m
        } else if a == f64::NEG_INFINITY {
            f64::NEG_INFINITY
        } else {
            (a - b) / (1.0 - b / m)
        }
    }

    /// LIP scalar multiplication `M - M (1 - a/M)^lambda`.
    pub fn times(self, lambda: f64, a: GreyValue) -> Result<GreyValue> {
        self.check(a)?;
        if lambda.is_nan() {
            return Err(Error::NotANumber);
        }
        let m = self.0;
        if a == f64::NEG_INFINITY {
            return if lambda > 0.0 {
                Ok(f64::NEG_INFINITY)
            } else if lambda < 0.0 {
                Ok(m)
            } else {
                Err(Error::NonReal { lambda, value: a })
            };
        }
        let base = (m - a) / m;
        let r = m - m * base.powf(lambda);
        if r.is_nan() {
            return Err(Error::NonReal { lambda, value: a });
        }
        Ok(r)
    }

    /// Transmittance `1 - a/M`: `1` for a clear pixel, `0` for an opaque one.
    pub fn transmittance(self, a: GreyValue) -> f64 {
        1.0 - a / self.0
    }

    /// The acute transform `-ln(1 - a/M)`, mapping `[-inf, M]` onto
    /// `[-inf, +inf]` and LIP addition onto addition. Requires `a <= M`.
    #[inline]
    pub fn to_acute(self, a: GreyValue) -> AcuteValue {
        let m = self.0;
        if a == m {
            f64::INFINITY
        } else if a == f64::NEG_INFINITY {
            f64::NEG_INFINITY
        } else if a > 0.5 * m {
            // M - a is exact here
            -((m - a) / m).ln()
        } else {
            -(-a / m).ln_1p()
        }
    }

    /// Inverse of [`to_acute`](Self::to_acute): `M (1 - exp(-a))`.
    #[inline]
    pub fn from_acute(self, a: AcuteValue) -> GreyValue {
        if a == f64::INFINITY {
            self.0
        } else if a == f64::NEG_INFINITY {
            f64::NEG_INFINITY
        } else {
            -self.0 * (-a).exp_m1()
        }
    }
}
