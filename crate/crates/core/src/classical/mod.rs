//! Grey-level morphology with additive structuring functions.
//!
//! ```text
//! dilate(f, b)(x) = sup { f(x - h) + b(h) : h in D_b }
//! erode(f, b)(x)  = inf { f(x + h) - b(h) : h in D_b }
//! ```
//!
//! These operators live on the extended reals: samples outside the image
//! are skipped, i.e. padded with `-inf` for dilation and `+inf` for
//! erosion, so a pixel whose footprint misses the domain entirely gets
//! that value.

pub(crate) mod kernel;
pub mod reference;

use crate::error::{Error, Result};
use crate::exec::{self, Exec};
use crate::image::Image;
use crate::sf::{SfKind, StructuringFunction};

use kernel::{Extremum, Tap};

fn check_args(f: &Image, b: &StructuringFunction) -> Result<()> {
    if b.kind() != SfKind::Additive {
        return Err(Error::WrongKind {
            expected: SfKind::Additive.name(),
        });
    }
    if f.scale() != b.scale() {
        return Err(Error::ScaleMismatch(f.scale().m(), b.scale().m()));
    }
    Ok(())
}

/// `(offset, value)` taps for dilation: output `x` reads `x - h`.
pub(crate) fn dilation_taps(offsets: &[(isize, isize)], values: &[f64]) -> Vec<Tap> {
    offsets
        .iter()
        .zip(values)
        .map(|(&(dx, dy), &w)| Tap {
            sx: -dx,
            sy: -dy,
            w,
        })
        .collect()
}

/// Taps for erosion: output `x` reads `x + h`.
pub(crate) fn erosion_taps(offsets: &[(isize, isize)], values: &[f64]) -> Vec<Tap> {
    offsets
        .iter()
        .zip(values)
        .map(|(&(dx, dy), &w)| Tap { sx: dx, sy: dy, w })
        .collect()
}

/// Classical dilation by arbitrary real taps. Flat footprints made of one
/// run per row go through the van Herk/Gil-Werman path.
pub(crate) fn dilate_raw(f: &Image, taps: &[Tap], exec: Exec) -> Vec<f64> {
    if let Some(c) = flat_weight(taps) {
        if let Some(runs) = kernel::row_runs(taps) {
            let m = kernel::flat_extremum(f, &runs, Extremum::Max, exec);
            return if c == 0.0 {
                m
            } else {
                exec::map(&m, exec, |v| v + c)
            };
        }
    }
    kernel::reduce_taps(
        f,
        taps,
        Extremum::Max,
        f64::NEG_INFINITY,
        |v, w| v + w,
        exec,
    )
}

pub(crate) fn erode_raw(f: &Image, taps: &[Tap], exec: Exec) -> Vec<f64> {
    if let Some(c) = flat_weight(taps) {
        if let Some(runs) = kernel::row_runs(taps) {
            let m = kernel::flat_extremum(f, &runs, Extremum::Min, exec);
            return if c == 0.0 {
                m
            } else {
                exec::map(&m, exec, |v| v - c)
            };
        }
    }
    kernel::reduce_taps(f, taps, Extremum::Min, f64::INFINITY, |v, w| v - w, exec)
}

pub(crate) fn flat_weight(taps: &[Tap]) -> Option<f64> {
    let c = taps.first()?.w;
    taps.iter().all(|t| t.w == c).then_some(c)
}

pub fn dilate(f: &Image, b: &StructuringFunction) -> Result<Image> {
    dilate_with(f, b, Exec::default())
}

pub fn dilate_with(f: &Image, b: &StructuringFunction, exec: Exec) -> Result<Image> {
    check_args(f, b)?;
    let taps = dilation_taps(b.offsets(), b.values());
    Ok(Image::from_parts(f, dilate_raw(f, &taps, exec)))
}

pub fn erode(f: &Image, b: &StructuringFunction) -> Result<Image> {
    erode_with(f, b, Exec::default())
}

pub fn erode_with(f: &Image, b: &StructuringFunction, exec: Exec) -> Result<Image> {
    check_args(f, b)?;
    let taps = erosion_taps(b.offsets(), b.values());
    Ok(Image::from_parts(f, erode_raw(f, &taps, exec)))
}

/// `dilate(erode(f))`: increasing, anti-extensive, idempotent.
pub fn open(f: &Image, b: &StructuringFunction) -> Result<Image> {
    dilate(&erode(f, b)?, b)
}

/// `erode(dilate(f))`: increasing, extensive, idempotent.
pub fn close(f: &Image, b: &StructuringFunction) -> Result<Image> {
    erode(&dilate(f, b)?, b)
}

/// Morphological gradient `dilate(f) - erode(f)`. Pixels where both
/// results are the same infinity get `0`.
pub fn gradient(f: &Image, b: &StructuringFunction) -> Result<Image> {
    let d = dilate(f, b)?;
    let e = erode(f, b)?;
    let px = exec::zip_map(d.pixels(), e.pixels(), Exec::default(), |a, b| {
        if a == b {
            0.0
        } else {
            a - b
        }
    });
    Ok(Image::from_parts(f, px))
}
