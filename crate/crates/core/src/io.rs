//! Image and signal files.
//!
//! * PGM `P5` with `maxval` 255, read and written bit-exactly.
//! * PNG, 8-bit. Colour PNGs are converted to luma on load; 16-bit and
//!   float PNGs are rejected.
//! * CSV signals: header `x,value`, one row per sample, LF line endings,
//!   values with 9 significant digits.
//!
//! 8-bit pixel `k` loads as grey value `k` on the default scale `M = 256`.
//! Saving requires every pixel to be an integer in `0..=255`; rescale or
//! quantize first otherwise.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use image::{ColorType, GrayImage, ImageFormat};

use crate::error::{Error, Result};
use crate::image::Image;
use crate::lip::GreyScale;

enum Kind {
    Pgm,
    Png,
}

fn kind_of(path: &Path) -> Result<Kind> {
    match path
        .extension()
        .and_then(|e| e.to_str())
        .map(str::to_ascii_lowercase)
        .as_deref()
    {
        Some("pgm") => Ok(Kind::Pgm),
        Some("png") => Ok(Kind::Png),
        _ => Err(Error::UnsupportedExtension(path.to_path_buf())),
    }
}

pub fn load_image(path: impl AsRef<Path>) -> Result<Image> {
    let bytes = fs::read(path.as_ref())?;
    if bytes.starts_with(b"P5") {
        decode_pgm(&bytes)
    } else if bytes.starts_with(b"\x89PNG") {
        decode_png(&bytes)
    } else {
        Err(Error::Format("neither a P5 PGM nor a PNG file".into()))
    }
}

pub fn save_image(img: &Image, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    let kind = kind_of(path)?;
    let bytes = to_bytes(img)?;
    match kind {
        Kind::Pgm => fs::write(path, encode_pgm(img.width(), img.height(), &bytes))?,
        Kind::Png => {
            let buf = GrayImage::from_raw(img.width() as u32, img.height() as u32, bytes)
                .ok_or_else(|| Error::Format("buffer size mismatch".into()))?;
            buf.save_with_format(path, ImageFormat::Png)?;
        }
    }
    Ok(())
}

fn to_bytes(img: &Image) -> Result<Vec<u8>> {
    img.pixels()
        .iter()
        .map(|&v| {
            if (0.0..=255.0).contains(&v) && v.fract() == 0.0 {
                Ok(v as u8)
            } else {
                Err(Error::NotDisplayable(v))
            }
        })
        .collect()
}

fn from_bytes(width: usize, height: usize, bytes: &[u8]) -> Result<Image> {
    Image::new(
        width,
        height,
        bytes.iter().map(|&b| f64::from(b)).collect(),
        GreyScale::default(),
    )
}

pub fn encode_pgm(width: usize, height: usize, bytes: &[u8]) -> Vec<u8> {
    let mut out = format!("P5\n{width} {height}\n255\n").into_bytes();
    out.extend_from_slice(bytes);
    out
}

pub fn decode_pgm(bytes: &[u8]) -> Result<Image> {
    let mut pos = 2;
    let mut fields = [0usize; 3];
    for field in fields.iter_mut() {
        // whitespace and '#' comments up to the next token
        loop {
            match bytes.get(pos) {
                Some(b) if b.is_ascii_whitespace() => pos += 1,
                Some(b'#') => {
                    while bytes.get(pos).is_some_and(|&b| b != b'\n') {
                        pos += 1;
                    }
                }
                Some(_) => break,
                None => return Err(Error::Format("truncated PGM header".into())),
            }
        }
        let start = pos;
        while bytes.get(pos).is_some_and(u8::is_ascii_digit) {
            pos += 1;
        }
        *field = std::str::from_utf8(&bytes[start..pos])
            .ok()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| Error::Format("invalid PGM header field".into()))?;
    }
    if !bytes.get(pos).is_some_and(u8::is_ascii_whitespace) {
        return Err(Error::Format("missing whitespace after PGM header".into()));
    }
    pos += 1;
    let [width, height, maxval] = fields;
    if maxval != 255 {
        return Err(Error::Format(format!(
            "PGM maxval must be 255, got {maxval}"
        )));
    }
    let n = width * height;
    let data = bytes
        .get(pos..pos + n)
        .ok_or_else(|| Error::Format(format!("PGM raster holds fewer than {n} bytes")))?;
    from_bytes(width, height, data)
}

fn decode_png(bytes: &[u8]) -> Result<Image> {
    let img = image::load_from_memory_with_format(bytes, ImageFormat::Png)?;
    match img.color() {
        ColorType::L8 | ColorType::La8 | ColorType::Rgb8 | ColorType::Rgba8 => {}
        other => return Err(Error::UnsupportedBitDepth(format!("{other:?}"))),
    }
    let luma = img.to_luma8();
    from_bytes(luma.width() as usize, luma.height() as usize, luma.as_raw())
}

/// `%.9g`-style formatting: 9 significant digits, trailing zeros removed,
/// scientific notation for very large or small magnitudes.
pub fn format_sig9(v: f64) -> String {
    format_sig(v, 9)
}

pub fn format_sig(v: f64, digits: usize) -> String {
    let digits = digits.max(1);
    if v.is_nan() {
        return "nan".into();
    }
    if v.is_infinite() {
        return if v > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if v == 0.0 {
        return "0".into();
    }
    let sci = format!("{:.*e}", digits - 1, v);
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if exp < -4 || exp >= digits as i32 {
        let mantissa = strip_zeros(mantissa);
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{mantissa}e{sign}{:02}", exp.abs())
    } else {
        let decimals = (digits as i32 - 1 - exp) as usize;
        strip_zeros(&format!("{v:.decimals$}")).to_string()
    }
}

fn strip_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// The CSV text for a signal: samples taken row-major.
pub fn signal_csv(img: &Image) -> String {
    let mut out = String::from("x,value\n");
    for (x, &v) in img.pixels().iter().enumerate() {
        let _ = writeln!(out, "{x},{}", format_sig9(v));
    }
    out
}

pub fn write_signal_csv(img: &Image, path: impl AsRef<Path>) -> Result<()> {
    fs::write(path, signal_csv(img))?;
    Ok(())
}
