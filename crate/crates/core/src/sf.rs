//! Structuring functions: finite sets of offsets carrying grey values.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::lip::{GreyScale, GreyValue};

/// How the values of a structuring function combine with the image.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SfKind {
    /// Combined with `+`/`-`; values in `[0, M]`.
    Additive,
    /// Combined with LIP addition/difference; values in `]-inf, M[`.
    Logarithmic,
}

impl SfKind {
    pub fn name(self) -> &'static str {
        match self {
            SfKind::Additive => "additive",
            SfKind::Logarithmic => "logarithmic",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct StructuringFunction {
    offsets: Vec<(isize, isize)>,
    values: Vec<GreyValue>,
    kind: SfKind,
    scale: GreyScale,
}

impl StructuringFunction {
    /// Builds a structuring function from `((dx, dy), value)` entries.
    pub fn new(
        entries: Vec<((isize, isize), GreyValue)>,
        kind: SfKind,
        scale: GreyScale,
    ) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::EmptyStructuringFunction);
        }
        let m = scale.m();
        let mut seen = HashSet::with_capacity(entries.len());
        let mut offsets = Vec::with_capacity(entries.len());
        let mut values = Vec::with_capacity(entries.len());
        for ((dx, dy), value) in entries {
            if !seen.insert((dx, dy)) {
                return Err(Error::DuplicateOffset(dx, dy));
            }
            let ok = match kind {
                SfKind::Additive => (0.0..=m).contains(&value),
                SfKind::Logarithmic => value.is_finite() && value < m,
            };
            if !ok {
                return Err(Error::StructuringValue {
                    dx,
                    dy,
                    value,
                    kind: kind.name(),
                });
            }
            offsets.push((dx, dy));
            values.push(value);
        }
        Ok(StructuringFunction {
            offsets,
            values,
            kind,
            scale,
        })
    }

    pub fn offsets(&self) -> &[(isize, isize)] {
        &self.offsets
    }

    pub fn values(&self) -> &[GreyValue] {
        &self.values
    }

    pub fn kind(&self) -> SfKind {
        self.kind
    }

    pub fn scale(&self) -> GreyScale {
        self.scale
    }

    pub fn len(&self) -> usize {
        self.offsets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.offsets.is_empty()
    }

    pub fn value_at(&self, dx: isize, dy: isize) -> Option<GreyValue> {
        self.offsets
            .iter()
            .position(|&o| o == (dx, dy))
            .map(|i| self.values[i])
    }

    /// `(dx, dy, value)` triples.
    pub fn taps(&self) -> impl Iterator<Item = (isize, isize, GreyValue)> + '_ {
        self.offsets
            .iter()
            .zip(&self.values)
            .map(|(&(dx, dy), &v)| (dx, dy, v))
    }

    /// The common value when all values are equal.
    pub fn flat_value(&self) -> Option<GreyValue> {
        let first = self.values[0];
        self.values.iter().all(|&v| v == first).then_some(first)
    }

    /// The same function with another kind, if its values allow it.
    pub fn with_kind(&self, kind: SfKind) -> Result<Self> {
        StructuringFunction::new(
            self.offsets
                .iter()
                .copied()
                .zip(self.values.iter().copied())
                .collect(),
            kind,
            self.scale,
        )
    }
}

/// The reflection `b(-h)`: offsets negated, values kept.
pub fn reflect_sf(sf: &StructuringFunction) -> StructuringFunction {
    StructuringFunction {
        offsets: sf.offsets.iter().map(|&(dx, dy)| (-dx, -dy)).collect(),
        values: sf.values.clone(),
        kind: sf.kind,
        scale: sf.scale,
    }
}

fn disc_offsets(radius: f64) -> Vec<(isize, isize, f64)> {
    let r = radius.floor() as isize;
    let r2 = radius * radius;
    let mut out = Vec::new();
    for dy in -r..=r {
        for dx in -r..=r {
            let d2 = (dx * dx + dy * dy) as f64;
            if d2 <= r2 {
                out.push((dx, dy, d2));
            }
        }
    }
    out
}

fn check_radius(radius: f64) -> Result<()> {
    if radius.is_finite() && radius > 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidShape(format!(
            "radius must be positive, got {radius}"
        )))
    }
}

/// Upper half of a sphere sampled on the integer disc of `radius`:
/// `amplitude * sqrt(1 - |h|^2 / radius^2)`.
pub fn hemisphere_sf(
    radius: f64,
    amplitude: f64,
    kind: SfKind,
    scale: GreyScale,
) -> Result<StructuringFunction> {
    check_radius(radius)?;
    if !(amplitude.is_finite() && amplitude > 0.0) {
        return Err(Error::InvalidShape(format!(
            "amplitude must be positive, got {amplitude}"
        )));
    }
    let r2 = radius * radius;
    let entries = disc_offsets(radius)
        .into_iter()
        .map(|(dx, dy, d2)| ((dx, dy), amplitude * (1.0 - d2 / r2).max(0.0).sqrt()))
        .collect();
    StructuringFunction::new(entries, kind, scale)
}

/// Zero-valued structuring function on the integer disc of `radius`.
pub fn flat_sf(radius: f64, kind: SfKind, scale: GreyScale) -> Result<StructuringFunction> {
    check_radius(radius)?;
    let entries = disc_offsets(radius)
        .into_iter()
        .map(|(dx, dy, _)| ((dx, dy), 0.0))
        .collect();
    StructuringFunction::new(entries, kind, scale)
}

/// A parsed structuring-function description, independent of its kind.
///
/// Text form: `hemisphere:r=<float>[,a=<float>]` (amplitude defaults to
/// the radius) or `flat:r=<float>`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SfShape {
    Hemisphere { radius: f64, amplitude: f64 },
    Flat { radius: f64 },
}

impl SfShape {
    pub fn build(&self, kind: SfKind, scale: GreyScale) -> Result<StructuringFunction> {
        match *self {
            SfShape::Hemisphere { radius, amplitude } => {
                hemisphere_sf(radius, amplitude, kind, scale)
            }
            SfShape::Flat { radius } => flat_sf(radius, kind, scale),
        }
    }
}

impl fmt::Display for SfShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SfShape::Hemisphere { radius, amplitude } => {
                write!(f, "hemisphere:r={radius},a={amplitude}")
            }
            SfShape::Flat { radius } => write!(f, "flat:r={radius}"),
        }
    }
}

impl FromStr for SfShape {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |msg: &str| Error::InvalidShape(format!("{msg} in '{s}'"));
        let (name, params) = s.split_once(':').ok_or_else(|| bad("missing ':'"))?;
        let mut radius = None;
        let mut amplitude = None;
        for item in params.split(',') {
            let (key, value) = item
                .split_once('=')
                .ok_or_else(|| bad("expected key=value"))?;
            let value: f64 = value.trim().parse().map_err(|_| bad("invalid number"))?;
            match key.trim() {
                "r" => radius = Some(value),
                "a" => amplitude = Some(value),
                _ => return Err(bad("unknown parameter")),
            }
        }
        let radius = radius.ok_or_else(|| bad("missing r"))?;
        match name.trim() {
            "hemisphere" => Ok(SfShape::Hemisphere {
                radius,
                amplitude: amplitude.unwrap_or(radius),
            }),
            "flat" if amplitude.is_none() => Ok(SfShape::Flat { radius }),
            "flat" => Err(bad("flat takes no amplitude")),
            _ => Err(bad("unknown shape")),
        }
    }
}
