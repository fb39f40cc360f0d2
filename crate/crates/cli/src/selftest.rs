//! Seeded invariant suite behind `logmorph selftest`.

use std::io::Write;

use anyhow::Result;
use logmorph::classical;
use logmorph::image::Image;
use logmorph::logarithmic::{self, check_duality, Implementation};
use logmorph::sf::{SfKind, StructuringFunction};
use logmorph::testing::{random_image, random_sf, ValueMix};
use logmorph::GreyScale;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// `M - 0.5` at the default scale.
fn below_m(s: GreyScale) -> f64 {
    s.m() * (1.0 - 1.0 / 512.0)
}

struct Property {
    name: &'static str,
    cases: usize,
    /// Largest observed error, or number of violations for exact checks.
    error: f64,
    tolerance: f64,
}

pub fn run(seed: u64, scale: GreyScale, out: &mut impl Write) -> Result<bool> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let props = [
        group_laws(&mut rng, scale),
        adjunction(&mut rng, scale, None),
        adjunction(&mut rng, scale, Some(Implementation::Direct)),
        adjunction(&mut rng, scale, Some(Implementation::Isomorphism)),
        duality(&mut rng, scale),
        equivalence(&mut rng, scale),
        idempotence(&mut rng, scale),
        range(&mut rng, scale),
    ];
    // tolerances are grey-level amounts at M = 256
    let unit = (scale.m() / 256.0).max(1.0);
    let mut ok = true;
    for p in &props {
        let tolerance = p.tolerance * unit;
        let pass = p.error <= tolerance;
        ok &= pass;
        writeln!(
            out,
            "{:<28} {:>5} cases  max error {:<12.3e} tol {:<8.0e} {}",
            p.name,
            p.cases,
            p.error,
            tolerance,
            if pass { "PASS" } else { "FAIL" }
        )?;
    }
    Ok(ok)
}

fn group_laws(rng: &mut ChaCha8Rng, s: GreyScale) -> Property {
    // [-1024, 255.5] at M = 256, scaled with M
    let m = s.m();
    let (lo, hi) = (-4.0 * m, below_m(s));
    let mut error: f64 = 0.0;
    let cases = 5000;
    for _ in 0..cases {
        let a = rng.random_range(lo..=hi);
        let b = rng.random_range(lo..=hi);
        let c = rng.random_range(lo..=hi);
        let p = |x, y| s.plus(x, y).unwrap_or(f64::NAN);
        let errs = [
            p(p(a, b), c) - p(a, p(b, c)),
            p(a, b) - p(b, a),
            p(a, 0.0) - a,
            p(a, s.negate(a).unwrap_or(f64::NAN)),
            p(s.minus(a, b).unwrap_or(f64::NAN), b) - a,
            s.to_acute(p(a, b)) - s.to_acute(a) - s.to_acute(b),
        ];
        for e in errs {
            error = error.max(if e.is_nan() { f64::INFINITY } else { e.abs() });
        }
    }
    Property {
        name: "LIP group laws",
        cases,
        error,
        tolerance: 1e-9,
    }
}

/// Exact check of `dilate(f) <= g  <=>  f <= erode(g)`. Half of the `f`
/// are taken just below `erode(g)` so both outcomes are exercised.
fn adjunction(rng: &mut ChaCha8Rng, s: GreyScale, imp: Option<Implementation>) -> Property {
    let mix = ValueMix::finite(-0.8 * s.m(), below_m(s)).with_extremes(0.05, 0.05);
    let (kind, vals) = match imp {
        None => (SfKind::Additive, ValueMix::finite(0.0, s.m())),
        Some(_) => (
            SfKind::Logarithmic,
            ValueMix::finite(-0.4 * s.m(), s.m() * 0.75),
        ),
    };
    let dilate = |f: &Image, b: &StructuringFunction| match imp {
        None => classical::dilate(f, b),
        Some(i) => logarithmic::log_dilate(f, b, i),
    };
    let erode = |f: &Image, b: &StructuringFunction| match imp {
        None => classical::erode(f, b),
        Some(i) => logarithmic::log_erode(f, b, i),
    };
    let cases = 300;
    let mut violations = 0;
    let mut done = 0;
    while done < cases {
        let b = random_sf(rng, kind, s, 9, 2, &vals);
        let g = random_image(rng, 12, 12, s, &mix);
        let Ok(e) = erode(&g, &b) else {
            violations += 1;
            done += 1;
            continue;
        };
        let f = if rng.random_bool(0.5) {
            let px = e
                .pixels()
                .iter()
                .map(|&v| {
                    if v.is_finite() {
                        v - rng.random_range(1e-6..10.0)
                    } else {
                        v.min(s.m())
                    }
                })
                .collect();
            Image::new(12, 12, px, s).expect("valid image")
        } else {
            random_image(rng, 12, 12, s, &mix)
        };
        let Ok(d) = dilate(&f, &b) else {
            violations += 1;
            done += 1;
            continue;
        };
        let near_tie = |a: &[f64], b: &[f64]| {
            a.iter()
                .zip(b)
                .any(|(x, y)| x.is_finite() && y.is_finite() && (x - y).abs() <= 1e-12)
        };
        if near_tie(d.pixels(), g.pixels()) || near_tie(f.pixels(), e.pixels()) {
            continue;
        }
        done += 1;
        let lhs = d.pixels().iter().zip(g.pixels()).all(|(x, y)| x <= y);
        let rhs = f.pixels().iter().zip(e.pixels()).all(|(x, y)| x <= y);
        violations += usize::from(lhs != rhs);
    }
    Property {
        name: match imp {
            None => "adjunction classical",
            Some(Implementation::Direct) => "adjunction log direct",
            Some(Implementation::Isomorphism) => "adjunction log iso",
        },
        cases,
        error: violations as f64,
        tolerance: 0.0,
    }
}

fn log_sf(rng: &mut ChaCha8Rng, s: GreyScale) -> StructuringFunction {
    random_sf(
        rng,
        SfKind::Logarithmic,
        s,
        9,
        2,
        &ValueMix::finite(-0.4 * s.m(), s.m() * 0.75),
    )
}

fn duality(rng: &mut ChaCha8Rng, s: GreyScale) -> Property {
    let cases = 100;
    let mut error: f64 = 0.0;
    for i in 0..cases {
        let f = random_image(rng, 12, 12, s, &ValueMix::finite(-1.2 * s.m(), below_m(s)));
        let b = log_sf(rng, s);
        let imp = [Implementation::Direct, Implementation::Isomorphism][i % 2];
        error = error.max(check_duality(&f, &b, imp).map_or(f64::INFINITY, |r| r.max_error()));
    }
    Property {
        name: "duality",
        cases,
        error,
        tolerance: 1e-6,
    }
}

fn equivalence(rng: &mut ChaCha8Rng, s: GreyScale) -> Property {
    let cases = 100;
    let mix = ValueMix::finite(0.0, below_m(s)).with_extremes(0.05, 0.05);
    let mut error: f64 = 0.0;
    for _ in 0..cases {
        let f = random_image(rng, 12, 12, s, &mix);
        let b = log_sf(rng, s);
        let pairs = [
            (
                logarithmic::log_dilate(&f, &b, Implementation::Direct),
                logarithmic::log_dilate(&f, &b, Implementation::Isomorphism),
            ),
            (
                logarithmic::log_erode(&f, &b, Implementation::Direct),
                logarithmic::log_erode(&f, &b, Implementation::Isomorphism),
            ),
        ];
        for pair in pairs {
            error = error.max(match pair {
                (Ok(x), Ok(y)) => x.max_abs_diff(&y).unwrap_or(f64::INFINITY),
                _ => f64::INFINITY,
            });
        }
    }
    Property {
        name: "direct vs isomorphism",
        cases,
        error,
        tolerance: 1e-6,
    }
}

type Filter<'a> = dyn Fn(&Image) -> logmorph::Result<Image> + 'a;

fn idempotence(rng: &mut ChaCha8Rng, s: GreyScale) -> Property {
    let cases = 50;
    let mut error: f64 = 0.0;
    let imp = Implementation::default();
    for _ in 0..cases {
        let f = random_image(rng, 16, 16, s, &ValueMix::finite(0.0, below_m(s)));
        let lb = log_sf(rng, s);
        let ab = random_sf(
            rng,
            SfKind::Additive,
            s,
            9,
            2,
            &ValueMix::finite(0.0, s.m() / 4.0),
        );
        let filters: [&Filter; 4] = [
            &|x| logarithmic::log_open(x, &lb, imp),
            &|x| logarithmic::log_close(x, &lb, imp),
            &|x| classical::open(x, &ab),
            &|x| classical::close(x, &ab),
        ];
        for psi in filters {
            let once = psi(&f);
            let twice = once.as_ref().ok().map(psi);
            error = error.max(match (once, twice) {
                (Ok(a), Some(Ok(b))) => a.max_abs_diff(&b).unwrap_or(f64::INFINITY),
                _ => f64::INFINITY,
            });
        }
    }
    Property {
        name: "opening/closing idempotence",
        cases,
        error,
        tolerance: 1e-9,
    }
}

/// Logarithmic dilations and closings of images below `M` stay below `M`.
fn range(rng: &mut ChaCha8Rng, s: GreyScale) -> Property {
    let cases = 100;
    let mut error: f64 = 0.0;
    for _ in 0..cases {
        let f = random_image(rng, 16, 16, s, &ValueMix::finite(0.0, below_m(s)));
        let b = log_sf(rng, s);
        for imp in [Implementation::Direct, Implementation::Isomorphism] {
            for out in [
                logarithmic::log_dilate(&f, &b, imp),
                logarithmic::log_close(&f, &b, imp),
            ] {
                error = error.max(out.map_or(f64::INFINITY, |o| (o.max() - s.m()).max(0.0)));
            }
        }
    }
    Property {
        name: "log range below M",
        cases,
        error,
        tolerance: 0.0,
    }
}
