//! Logarithmic morphology: erosion and dilation built on LIP addition.
//!
//! ```text
//! log_dilate(f, b)(x) = sup { f(x - h) (+) b(h) : h in D_b }
//! log_erode(f, b)(x)  = inf { f(x + h) (-) b(h) : h in D_b }
//! ```
//!
//! where `(+)` and `(-)` are the LIP sum and difference. The operators act
//! on the lattice `[-inf, M]^D` and form an adjunction, so their
//! compositions are an opening and a closing. Because LIP addition never
//! leaves `[-inf, M]`, a logarithmic dilation stays below `M` wherever the
//! input does, unlike its classical counterpart.
//!
//! Two implementations are provided:
//!
//! * [`Implementation::Direct`] evaluates the definitions with LIP
//!   arithmetic at every tap.
//! * [`Implementation::Isomorphism`] maps image and structuring function
//!   through the acute transform `a -> -ln(1 - a/M)`, runs the classical
//!   kernel there and maps back with `M (1 - exp(-a))`. The transform is an
//!   increasing bijection that turns `(+)` into `+`, so both routes give the
//!   same operator. Some texts scale the transform by `M`; the factor
//!   cancels on the way back and is not used here.
//!
//! With a flat structuring function of value `c` both sup and inf commute
//! with the LIP sum, so the isomorphism route reduces to a flat extremum
//! followed by one LIP operation and needs no transcendental functions.
//!
//! Samples outside the domain are skipped: dilation pads with `-inf`,
//! erosion with `M` (the top of this lattice, not `+inf`).

use crate::classical::kernel::{Extremum, Tap};
use crate::classical::{self, kernel};
use crate::error::{Error, Result};
use crate::exec::{self, Exec};
use crate::image::Image;
use crate::lip::GreyScale;
use crate::sf::{reflect_sf, SfKind, StructuringFunction};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Implementation {
    /// LIP arithmetic at every tap.
    Direct,
    /// Classical kernel in the acute domain.
    #[default]
    Isomorphism,
}

fn check_args(f: &Image, b: &StructuringFunction) -> Result<()> {
    if b.kind() != SfKind::Logarithmic {
        return Err(Error::WrongKind {
            expected: SfKind::Logarithmic.name(),
        });
    }
    if f.scale() != b.scale() {
        return Err(Error::ScaleMismatch(f.scale().m(), b.scale().m()));
    }
    f.check_bounded()
}

fn acute_taps(s: GreyScale, taps: &[Tap]) -> Vec<Tap> {
    taps.iter()
        .map(|t| Tap {
            w: s.to_acute(t.w),
            ..*t
        })
        .collect()
}

fn dilate_px(f: &Image, b: &StructuringFunction, imp: Implementation, exec: Exec) -> Vec<f64> {
    let s = f.scale();
    let taps = classical::dilation_taps(b.offsets(), b.values());
    match imp {
        Implementation::Direct => kernel::reduce_taps(
            f,
            &taps,
            Extremum::Max,
            f64::NEG_INFINITY,
            |v, w| s.plus_ext(v, w),
            exec,
        ),
        Implementation::Isomorphism => {
            if let (Some(c), Some(runs)) = (classical::flat_weight(&taps), kernel::row_runs(&taps))
            {
                let m = kernel::flat_extremum(f, &runs, Extremum::Max, exec);
                return exec::map(&m, exec, |v| s.plus_ext(v, c));
            }
            let acute = Image::from_parts(f, exec::map(f.pixels(), exec, |v| s.to_acute(v)));
            let d = classical::dilate_raw(&acute, &acute_taps(s, &taps), exec);
            exec::map(&d, exec, |v| s.from_acute(v))
        }
    }
}

fn erode_px(f: &Image, b: &StructuringFunction, imp: Implementation, exec: Exec) -> Vec<f64> {
    let s = f.scale();
    let m = s.m();
    let taps = classical::erosion_taps(b.offsets(), b.values());
    match imp {
        Implementation::Direct => {
            kernel::reduce_taps(f, &taps, Extremum::Min, m, |v, w| s.minus_ext(v, w), exec)
        }
        Implementation::Isomorphism => {
            if let (Some(c), Some(runs)) = (classical::flat_weight(&taps), kernel::row_runs(&taps))
            {
                let lo = kernel::flat_extremum(f, &runs, Extremum::Min, exec);
                return exec::map(&lo, exec, |v| {
                    if v == f64::INFINITY {
                        m
                    } else {
                        s.minus_ext(v, c)
                    }
                });
            }
            let acute = Image::from_parts(f, exec::map(f.pixels(), exec, |v| s.to_acute(v)));
            let e = classical::erode_raw(&acute, &acute_taps(s, &taps), exec);
            exec::map(&e, exec, |v| s.from_acute(v))
        }
    }
}

pub fn log_dilate(f: &Image, b: &StructuringFunction, imp: Implementation) -> Result<Image> {
    log_dilate_with(f, b, imp, Exec::default())
}

pub fn log_dilate_with(
    f: &Image,
    b: &StructuringFunction,
    imp: Implementation,
    exec: Exec,
) -> Result<Image> {
    check_args(f, b)?;
    Ok(Image::from_parts(f, dilate_px(f, b, imp, exec)))
}

pub fn log_erode(f: &Image, b: &StructuringFunction, imp: Implementation) -> Result<Image> {
    log_erode_with(f, b, imp, Exec::default())
}

pub fn log_erode_with(
    f: &Image,
    b: &StructuringFunction,
    imp: Implementation,
    exec: Exec,
) -> Result<Image> {
    check_args(f, b)?;
    Ok(Image::from_parts(f, erode_px(f, b, imp, exec)))
}

/// Logarithmic opening `log_dilate(log_erode(f))`.
pub fn log_open(f: &Image, b: &StructuringFunction, imp: Implementation) -> Result<Image> {
    log_dilate(&log_erode(f, b, imp)?, b, imp)
}

/// Logarithmic closing `log_erode(log_dilate(f))`.
pub fn log_close(f: &Image, b: &StructuringFunction, imp: Implementation) -> Result<Image> {
    log_erode(&log_dilate(f, b, imp)?, b, imp)
}

/// Logarithmic gradient: the LIP difference of dilation and erosion.
///
/// Where both are equal (including a constant-`M` neighbourhood) the
/// gradient is `0`. An erosion equal to `M` under a smaller dilation leaves
/// the difference undefined and is an error.
pub fn log_gradient(f: &Image, b: &StructuringFunction, imp: Implementation) -> Result<Image> {
    let s = f.scale();
    let d = log_dilate(f, b, imp)?;
    let e = log_erode(f, b, imp)?;
    let px = exec::try_zip_map(d.pixels(), e.pixels(), Exec::default(), |hi, lo| {
        if hi == lo {
            Ok(0.0)
        } else {
            s.minus(hi, lo)
        }
    })?;
    Ok(Image::from_parts(f, px))
}

/// The negative function: pixel-wise LIP opposite. Undefined at `M`.
pub fn negative_image(f: &Image) -> Result<Image> {
    let s = f.scale();
    f.try_map(|v| s.negate(v))
}

/// The LIP opposite extended to the whole lattice, exchanging `-inf` and `M`.
fn lattice_negative(f: &Image) -> Image {
    let s = f.scale();
    let m = s.m();
    f.map(|v| {
        if v == m {
            f64::NEG_INFINITY
        } else {
            s.negate_ext(v)
        }
    })
}

/// Largest deviations observed in the two duality identities.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DualityReport {
    /// `max |(log_dilate_b(f*))* - log_erode_reflected(b)(f)|`
    pub erosion_error: f64,
    /// `max |(log_erode_b(f*))* - log_dilate_reflected(b)(f)|`
    pub dilation_error: f64,
}

impl DualityReport {
    pub fn max_error(&self) -> f64 {
        self.erosion_error.max(self.dilation_error)
    }

    pub fn holds(&self, tolerance: f64) -> bool {
        self.max_error() <= tolerance
    }
}

/// Measures how far logarithmic erosion and dilation are from being
/// exchanged by the negative function together with reflection of `b`.
/// `f` must stay strictly below `M`.
pub fn check_duality(
    f: &Image,
    b: &StructuringFunction,
    imp: Implementation,
) -> Result<DualityReport> {
    check_args(f, b)?;
    let m = f.scale().m();
    if let Some(&v) = f.pixels().iter().find(|&&v| v == m) {
        return Err(Error::AboveScale(v, m));
    }
    let star = negative_image(f)?;
    let reflected = reflect_sf(b);

    let lhs_e = lattice_negative(&log_dilate(&star, b, imp)?);
    let rhs_e = log_erode(f, &reflected, imp)?;
    let lhs_d = lattice_negative(&log_erode(&star, b, imp)?);
    let rhs_d = log_dilate(f, &reflected, imp)?;
    Ok(DualityReport {
        erosion_error: lhs_e.max_abs_diff(&rhs_e)?,
        dilation_error: lhs_d.max_abs_diff(&rhs_d)?,
    })
}
